#include "codim1/surface.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace codim1 {

LatticePtr PicardLattice::make(std::vector<std::vector<std::int64_t>> form,
                               std::vector<std::string> labels) {
    std::size_t r = labels.size();
    if (r == 0) throw input_error("lattice: rank must be positive");
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != r) throw input_error("lattice: duplicate basis labels");
    if (form.size() != r)
        throw input_error("lattice: form has " + std::to_string(form.size()) +
                          " rows for rank " + std::to_string(r));
    for (std::size_t i = 0; i < r; ++i)
        if (form[i].size() != r)
            throw input_error("lattice: form row " + std::to_string(i + 1) +
                              " has " + std::to_string(form[i].size()) + " entries");
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
            if (form[i][j] != form[j][i])
                throw input_error("lattice: form is not symmetric at (" +
                                  std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    return LatticePtr(new PicardLattice(std::move(form), std::move(labels)));
}

std::optional<std::size_t> PicardLattice::label_index(const std::string& name) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == name) return i;
    return std::nullopt;
}

LatticePtr blowup_lattice(std::size_t n) {
    std::vector<std::vector<std::int64_t>> form(n + 1, std::vector<std::int64_t>(n + 1, 0));
    std::vector<std::string> labels;
    form[0][0] = 1;
    labels.push_back("H");
    for (std::size_t i = 1; i <= n; ++i) {
        form[i][i] = -1;
        labels.push_back("E" + std::to_string(i));
    }
    return PicardLattice::make(std::move(form), std::move(labels));
}

DivClass DivClass::make(LatticePtr lattice, std::vector<std::int64_t> coeffs) {
    if (!lattice) throw input_error("class: missing lattice");
    if (coeffs.size() != lattice->rank())
        throw input_error("class: " + std::to_string(coeffs.size()) +
                          " coefficients for rank " + std::to_string(lattice->rank()));
    return DivClass{std::move(lattice), std::move(coeffs)};
}

DivClass DivClass::basis(const LatticePtr& lattice, const std::string& label) {
    auto i = lattice->label_index(label);
    if (!i) throw input_error("class: no basis label '" + label + "'");
    std::vector<std::int64_t> c(lattice->rank(), 0);
    c[*i] = 1;
    return DivClass{lattice, std::move(c)};
}

namespace {
void require_same_lattice(const DivClass& a, const DivClass& b) {
    if (a.lattice != b.lattice)
        throw input_error("lattice mismatch between divisor classes");
}
} // namespace

DivClass DivClass::operator+(const DivClass& o) const {
    require_same_lattice(*this, o);
    auto c = coeffs;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coeffs[i];
    return DivClass{lattice, std::move(c)};
}

DivClass DivClass::operator-(const DivClass& o) const {
    require_same_lattice(*this, o);
    auto c = coeffs;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.coeffs[i];
    return DivClass{lattice, std::move(c)};
}

DivClass DivClass::operator*(std::int64_t n) const {
    auto c = coeffs;
    for (auto& x : c) x *= n;
    return DivClass{lattice, std::move(c)};
}

bool DivClass::operator==(const DivClass& o) const {
    return lattice == o.lattice && coeffs == o.coeffs;
}

bool DivClass::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](std::int64_t c) { return c == 0; });
}

std::string DivClass::str() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        std::int64_t c = coeffs[i];
        if (c == 0) continue;
        if (out.empty()) {
            if (c == -1)
                out += "-";
            else if (c != 1)
                out += std::to_string(c) + "*";
        } else {
            out += c > 0 ? " + " : " - ";
            std::int64_t a = c > 0 ? c : -c;
            if (a != 1) out += std::to_string(a) + "*";
        }
        out += lattice->labels()[i];
    }
    return out.empty() ? "0" : out;
}

std::int64_t intersection(const DivClass& c1, const DivClass& c2) {
    require_same_lattice(c1, c2);
    std::int64_t acc = 0;
    std::size_t r = c1.lattice->rank();
    for (std::size_t i = 0; i < r; ++i) {
        if (c1.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < r; ++j)
            acc += c1.coeffs[i] * c1.lattice->form(i, j) * c2.coeffs[j];
    }
    return acc;
}

DivClass proper_transform(const LatticePtr& lattice, std::int64_t d,
                          const std::vector<std::int64_t>& mults) {
    if (mults.size() + 1 > lattice->rank())
        throw input_error("proper transform: " + std::to_string(mults.size()) +
                          " multiplicities on a lattice of rank " +
                          std::to_string(lattice->rank()));
    std::vector<std::int64_t> c(lattice->rank(), 0);
    c[0] = d;
    for (std::size_t i = 0; i < mults.size(); ++i) c[i + 1] = -mults[i];
    return DivClass::make(lattice, std::move(c));
}

CurveConfig CurveConfig::make(LatticePtr lattice,
                              std::vector<std::pair<std::string, DivClass>> components,
                              std::vector<std::int64_t> h_coeffs,
                              std::vector<std::pair<std::string, DivClass>> test_curves,
                              std::vector<std::string> assumptions) {
    if (components.empty()) throw input_error("config: at least one curve component is required");
    if (h_coeffs.size() != components.size())
        throw input_error("config: " + std::to_string(h_coeffs.size()) +
                          " divisor coefficients for " + std::to_string(components.size()) +
                          " components");
    for (std::size_t i = 0; i < h_coeffs.size(); ++i)
        if (h_coeffs[i] < 1)
            throw input_error("config: divisor coefficient for component " +
                              std::to_string(i + 1) +
                              " must be >= 1 so that supp H equals the whole curve");
    for (const auto& [name, cls] : components)
        if (cls.lattice != lattice)
            throw input_error("config: component " + name + " lives in a different lattice");
    for (const auto& [name, cls] : test_curves)
        if (cls.lattice != lattice)
            throw input_error("config: test curve " + name + " lives in a different lattice");
    return CurveConfig{std::move(lattice), std::move(components), std::move(h_coeffs),
                       std::move(test_curves), std::move(assumptions)};
}

DivClass CurveConfig::total() const {
    DivClass y = components[0].second;
    for (std::size_t i = 1; i < components.size(); ++i) y = y + components[i].second;
    return y;
}

DivClass CurveConfig::h_class() const {
    DivClass h = components[0].second * h_coeffs[0];
    for (std::size_t i = 1; i < components.size(); ++i)
        h = h + components[i].second * h_coeffs[i];
    return h;
}

SurfaceReport check_criterion(const CurveConfig& cfg) {
    SurfaceReport rep;
    std::size_t n = cfg.components.size();
    DivClass h = cfg.h_class();
    DivClass y = cfg.total();

    rep.component_pairings_ok = true;
    for (const auto& [name, cls] : cfg.components) {
        std::int64_t v = intersection(h, cls);
        rep.h_dot_components.push_back(v);
        if (v < 0) {
            rep.component_pairings_ok = false;
            rep.notes.push_back("pairing H." + name + " = " + std::to_string(v) +
                                " is negative");
        }
    }

    rep.test_pairings_ok = !cfg.test_curves.empty();
    for (const auto& [name, cls] : cfg.test_curves) {
        std::int64_t v = intersection(h, cls);
        rep.h_dot_tests.push_back(v);
        if (v <= 0) {
            rep.test_pairings_ok = false;
            rep.notes.push_back("pairing H." + name + " = " + std::to_string(v) +
                                " is not positive");
        }
    }

    rep.y_self = intersection(y, y);
    rep.y_irreducible = n == 1;

    // connectivity of the dual graph: components meet when Yᵢ·Yⱼ > 0
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (intersection(cfg.components[i].second, cfg.components[j].second) > 0)
                parent[find(i)] = find(j);
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < n; ++i) roots.insert(find(i));
    rep.y_connected = roots.size() == 1;
    if (!rep.y_connected)
        rep.notes.push_back("the curve has " + std::to_string(roots.size()) +
                            " connected components");

    rep.superheight_one = rep.component_pairings_ok && rep.test_pairings_ok;
    if (cfg.test_curves.empty())
        rep.notes.push_back(
            "no test curves supplied: the superheight criterion is not evaluated");

    // no ample effective divisor can live on an irreducible curve of zero
    // self-intersection, nor on a disconnected one
    if (rep.y_irreducible && rep.y_self == 0) {
        rep.not_affine = true;
        rep.notes.push_back("the curve is irreducible with self-intersection 0");
    }
    if (!rep.y_connected) rep.not_affine = true;

    if (rep.not_affine && rep.superheight_one)
        rep.verdict = "non-affine, superheight one (relative to test curves)";
    else if (rep.not_affine)
        rep.verdict = "not affine";
    else if (rep.superheight_one)
        rep.verdict = "superheight one (relative to test curves)";
    else
        rep.verdict = "no conclusion from this module";

    for (const auto& a : cfg.assumptions)
        rep.notes.push_back("unverified assumption: " + a);
    return rep;
}

} // namespace codim1
