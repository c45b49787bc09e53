#include "codim1/gcd.hpp"

#include <optional>

#include "codim1/errors.hpp"

namespace codim1 {

std::int64_t deg_wrt(const Polynomial& f, std::size_t var) {
    std::int64_t d = -1;
    for (const auto& t : f.terms()) d = std::max<std::int64_t>(d, t.mono[var]);
    return d;
}

Polynomial coeff_wrt(const Polynomial& f, std::size_t var, std::uint32_t k) {
    std::vector<Term> out;
    for (const auto& t : f.terms()) {
        if (t.mono[var] != k) continue;
        std::vector<std::uint32_t> e = t.mono.exponents();
        e[var] = 0;
        out.push_back(Term{Monomial(std::move(e)), t.coeff});
    }
    return Polynomial::from_terms(f.ring(), std::move(out));
}

namespace {

Polynomial exact_div(const Polynomial& f, const Polynomial& d) {
    Polynomial q;
    if (!f.try_divide(d, q)) throw error("internal: expected exact polynomial division");
    return q;
}

// Highest-index variable occurring in f or g, if any.
std::optional<std::size_t> pick_main_var(const Polynomial& f, const Polynomial& g) {
    const std::size_t n = f.ring()->arity();
    for (std::size_t i = n; i-- > 0;) {
        if (deg_wrt(f, i) > 0 || deg_wrt(g, i) > 0) return i;
    }
    return std::nullopt;
}

Polynomial gcd_impl(const Polynomial& f, const Polynomial& g);

// gcd of the coefficients of f with respect to x_var.
Polynomial content_wrt(const Polynomial& f, std::size_t var) {
    Polynomial c = Polynomial::zero(f.ring());
    std::int64_t d = deg_wrt(f, var);
    for (std::int64_t k = 0; k <= d; ++k) {
        Polynomial ck = coeff_wrt(f, var, static_cast<std::uint32_t>(k));
        if (ck.is_zero()) continue;
        c = gcd_impl(c, ck);
        if (c.is_constant() && !c.is_zero()) break;
    }
    return c;
}

// Pseudo-remainder lc(B)^(delta+1) * A mod B with respect to x_var.
Polynomial pseudo_rem(const Polynomial& A, const Polynomial& B, std::size_t var) {
    const std::int64_t db = deg_wrt(B, var);
    Polynomial lb = coeff_wrt(B, var, static_cast<std::uint32_t>(db));
    std::int64_t steps_allowed = deg_wrt(A, var) - db + 1;
    Polynomial R = A;
    std::int64_t steps = 0;
    while (!R.is_zero() && deg_wrt(R, var) >= db) {
        std::int64_t dr = deg_wrt(R, var);
        Polynomial lr = coeff_wrt(R, var, static_cast<std::uint32_t>(dr));
        Polynomial shift = Polynomial::variable(R.ring(), var,
                                                static_cast<std::uint32_t>(dr - db));
        R = R * lb - B * (lr * shift);
        ++steps;
    }
    // scale up to the exact classical pseudo-remainder
    for (; steps < steps_allowed; ++steps) R = R * lb;
    return R;
}

Polynomial gcd_impl(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    auto mv = pick_main_var(f, g);
    if (!mv) return Polynomial::one(f.ring()); // both nonzero constants
    const std::size_t x = *mv;

    if (deg_wrt(f, x) == 0) return gcd_impl(f, content_wrt(g, x));
    if (deg_wrt(g, x) == 0) return gcd_impl(content_wrt(f, x), g);

    Polynomial cf = content_wrt(f, x);
    Polynomial cg = content_wrt(g, x);
    Polynomial c = gcd_impl(cf, cg);
    Polynomial A = exact_div(f, cf);
    Polynomial B = exact_div(g, cg);
    if (deg_wrt(A, x) < deg_wrt(B, x)) std::swap(A, B);

    // subresultant remainder sequence on the primitive parts
    Polynomial sub_g = Polynomial::one(f.ring());
    Polynomial sub_h = Polynomial::one(f.ring());
    while (true) {
        std::int64_t delta = deg_wrt(A, x) - deg_wrt(B, x);
        Polynomial R = pseudo_rem(A, B, x);
        if (R.is_zero()) break;
        if (deg_wrt(R, x) == 0) {
            // a constant (in x) remainder means the primitive gcd is trivial
            return c;
        }
        Polynomial divisor = sub_g;
        for (std::int64_t k = 0; k < delta; ++k) divisor = divisor * sub_h;
        A = B;
        B = exact_div(R, divisor);
        sub_g = coeff_wrt(A, x, static_cast<std::uint32_t>(deg_wrt(A, x)));
        if (delta >= 1) {
            // h = g^delta / h^(delta-1), an exact division in the coefficient ring
            Polynomial num = sub_g;
            for (std::int64_t k = 1; k < delta; ++k) num = num * sub_g;
            Polynomial den = Polynomial::one(f.ring());
            for (std::int64_t k = 1; k < delta; ++k) den = den * sub_h;
            sub_h = exact_div(num, den);
        }
        // delta == 0 keeps h unchanged
    }
    Polynomial pp = exact_div(B, content_wrt(B, x));
    return c * pp;
}

} // namespace

Polynomial poly_gcd(const Polynomial& f, const Polynomial& g) {
    f.ring()->require_same_structure(*g.ring());
    Polynomial r = gcd_impl(f, g);
    return r.monic();
}

Polynomial poly_gcd(const std::vector<Polynomial>& fs) {
    if (fs.empty()) throw input_error("gcd of an empty family");
    Polynomial acc = Polynomial::zero(fs.front().ring());
    for (const auto& f : fs) {
        acc = gcd_impl(acc, f);
        if (acc.is_constant() && !acc.is_zero()) break;
    }
    return acc.monic();
}

} // namespace codim1
