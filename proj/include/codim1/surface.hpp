#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "codim1/errors.hpp"

namespace codim1 {

class PicardLattice;
using LatticePtr = std::shared_ptr<const PicardLattice>;

// Divisor-class lattice of a smooth projective surface with its integer
// intersection form.  Immutable; classes hold a shared handle.
class PicardLattice : public std::enable_shared_from_this<PicardLattice> {
public:
    // `form` must be square and symmetric, one label per basis class.
    static LatticePtr make(std::vector<std::vector<std::int64_t>> form,
                           std::vector<std::string> labels);

    std::size_t rank() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::int64_t form(std::size_t i, std::size_t j) const { return form_[i][j]; }
    std::optional<std::size_t> label_index(const std::string& name) const;

private:
    PicardLattice(std::vector<std::vector<std::int64_t>> form, std::vector<std::string> labels)
        : form_(std::move(form)), labels_(std::move(labels)) {}

    std::vector<std::vector<std::int64_t>> form_;
    std::vector<std::string> labels_;
};

// The blow-up of the plane in n points: rank n+1, basis H, E1..En with the
// diagonal form (1, −1, …, −1).
LatticePtr blowup_lattice(std::size_t n);

// An integer divisor class in a fixed lattice.
struct DivClass {
    LatticePtr lattice;
    std::vector<std::int64_t> coeffs;

    static DivClass make(LatticePtr lattice, std::vector<std::int64_t> coeffs);
    // basis class by label
    static DivClass basis(const LatticePtr& lattice, const std::string& label);

    DivClass operator+(const DivClass& o) const;
    DivClass operator-(const DivClass& o) const;
    DivClass operator*(std::int64_t n) const;
    bool operator==(const DivClass& o) const;
    bool is_zero() const;
    std::string str() const; // e.g. "3H - E1 - E2"
};

// c1ᵀ·M·c2, exact; throws input_error on a lattice mismatch.
std::int64_t intersection(const DivClass& c1, const DivClass& c2);

// The proper-transform class dH − Σ mᵢEᵢ on a blow-up lattice.
DivClass proper_transform(const LatticePtr& lattice, std::int64_t d,
                          const std::vector<std::int64_t>& mults);

// A projective curve Y = Y₁ ∪ … ∪ Yₙ with a candidate divisor H = Σ cᵢYᵢ
// supported exactly on Y (all cᵢ ≥ 1) and a finite list of test curves.
// Effectivity of every class and irreducibility of the components are user
// assertions; unverifiable hypotheses can be attached as free-text
// assumptions and are echoed in the report.
struct CurveConfig {
    LatticePtr lattice;
    std::vector<std::pair<std::string, DivClass>> components;  // the Yᵢ
    std::vector<std::int64_t> h_coeffs;                        // cᵢ ≥ 1
    std::vector<std::pair<std::string, DivClass>> test_curves; // the Cⱼ
    std::vector<std::string> assumptions;

    static CurveConfig make(LatticePtr lattice,
                            std::vector<std::pair<std::string, DivClass>> components,
                            std::vector<std::int64_t> h_coeffs,
                            std::vector<std::pair<std::string, DivClass>> test_curves,
                            std::vector<std::string> assumptions = {});

    DivClass total() const;   // Y = Σ Yᵢ
    DivClass h_class() const; // H = Σ cᵢYᵢ
};

// Everything the curve criterion measures on a configuration.  The module
// can certify non-affineness and superheight one; it never certifies
// affineness.
struct SurfaceReport {
    std::vector<std::int64_t> h_dot_components; // H·Yᵢ
    std::vector<std::int64_t> h_dot_tests;      // H·Cⱼ
    bool component_pairings_ok = false;         // all H·Yᵢ ≥ 0
    bool test_pairings_ok = false;              // all H·Cⱼ > 0 (false if no tests)
    std::int64_t y_self = 0;                    // Y²
    bool y_irreducible = false;                 // single component
    bool y_connected = false;                   // dual graph with edges Yᵢ·Yⱼ > 0
    bool superheight_one = false;               // criterion passed, ≥ 1 test curve
    bool not_affine = false;                    // Y² = 0 irreducible, or Y disconnected
    std::string verdict;
    std::vector<std::string> notes;
};

SurfaceReport check_criterion(const CurveConfig& cfg);

} // namespace codim1
