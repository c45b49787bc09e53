#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "codim1/monomial.hpp"
#include "codim1/scalar.hpp"

namespace codim1 {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

// A polynomial ring K[x_1,...,x_n] together with the monomial order used for
// normal forms in it.  Rings are immutable and shared; two rings are
// interchangeable when they agree on variable names, coefficient field and
// order (see same_structure).
class PolyRing : public std::enable_shared_from_this<PolyRing> {
public:
    static RingPtr make(std::vector<std::string> vars, CoeffField field,
                        MonomialOrder order = MonomialOrder::grevlex());

    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t arity() const { return vars_.size(); }
    const CoeffField& field() const { return field_; }
    const MonomialOrder& order() const { return order_; }

    // Index of a variable name, if present.
    std::optional<std::size_t> var_index(const std::string& name) const;

    bool same_structure(const PolyRing& o) const;
    void require_same_structure(const PolyRing& o) const;

    // Same variables and field, different monomial order.
    RingPtr with_order(MonomialOrder order) const;
    // Appends fresh variables at the end (names must not collide).
    RingPtr extended(const std::vector<std::string>& extra_vars) const;
    // Keeps exactly the named variables, in the given sequence.
    RingPtr restricted(std::vector<std::string> keep, MonomialOrder order) const;
    // Reorders variables by `perm`, where perm[i] is the old index that moves
    // to position i.
    RingPtr permuted(const std::vector<std::size_t>& perm, MonomialOrder order) const;

    // A variable name not already used in the ring, for internal adjunctions.
    std::string fresh_var_name(const std::string& stem) const;

    std::string str() const;

private:
    PolyRing(std::vector<std::string> vars, CoeffField field, MonomialOrder order)
        : vars_(std::move(vars)), field_(field), order_(order) {}

    std::vector<std::string> vars_;
    CoeffField field_;
    MonomialOrder order_;
};

} // namespace codim1
