#include "codim1/ring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "codim1/errors.hpp"

namespace codim1 {

RingPtr PolyRing::make(std::vector<std::string> vars, CoeffField field, MonomialOrder order) {
    std::set<std::string> seen;
    for (const auto& v : vars) {
        if (v.empty()) throw input_error("ring variable names must be non-empty");
        if (!seen.insert(v).second)
            throw input_error("duplicate ring variable name: " + v);
    }
    if (order.kind == MonomialOrder::Kind::block && order.split > vars.size())
        throw input_error("block order split exceeds variable count");
    return RingPtr(new PolyRing(std::move(vars), field, order));
}

std::optional<std::size_t> PolyRing::var_index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vars_.begin());
}

bool PolyRing::same_structure(const PolyRing& o) const {
    return vars_ == o.vars_ && field_ == o.field_ && order_.kind == o.order_.kind &&
           (order_.kind != MonomialOrder::Kind::block || order_.split == o.order_.split);
}

void PolyRing::require_same_structure(const PolyRing& o) const {
    if (!same_structure(o))
        throw ring_mismatch_error("expected ring " + str() + ", got " + o.str());
}

RingPtr PolyRing::with_order(MonomialOrder order) const {
    return make(vars_, field_, order);
}

RingPtr PolyRing::extended(const std::vector<std::string>& extra_vars) const {
    std::vector<std::string> all = vars_;
    all.insert(all.end(), extra_vars.begin(), extra_vars.end());
    return make(std::move(all), field_, order_);
}

RingPtr PolyRing::restricted(std::vector<std::string> keep, MonomialOrder order) const {
    for (const auto& v : keep) {
        if (!var_index(v))
            throw input_error("restricted: variable " + v + " is not in " + str());
    }
    return make(std::move(keep), field_, order);
}

RingPtr PolyRing::permuted(const std::vector<std::size_t>& perm, MonomialOrder order) const {
    if (perm.size() != vars_.size())
        throw input_error("permuted: permutation size does not match ring arity");
    std::vector<bool> used(vars_.size(), false);
    std::vector<std::string> out(vars_.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (perm[i] >= vars_.size() || used[perm[i]])
            throw input_error("permuted: not a permutation");
        used[perm[i]] = true;
        out[i] = vars_[perm[i]];
    }
    return make(std::move(out), field_, order);
}

std::string PolyRing::fresh_var_name(const std::string& stem) const {
    for (std::size_t k = 0;; ++k) {
        std::string cand = "~" + stem + std::to_string(k);
        if (!var_index(cand)) return cand;
    }
}

std::string PolyRing::str() const {
    std::ostringstream os;
    os << field_.str() << "[";
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (i) os << ",";
        os << vars_[i];
    }
    os << "] (" << order_.str() << ")";
    return os.str();
}

} // namespace codim1
