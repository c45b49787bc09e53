#pragma once

#include <vector>

#include "codim1/poly.hpp"

namespace codim1 {

// Greatest common divisor in K[x_1,...,x_n], computed by a subresultant
// polynomial remainder sequence with recursive content extraction.  The
// result is normalized to leading coefficient 1; gcd(0, 0) = 0.
Polynomial poly_gcd(const Polynomial& f, const Polynomial& g);

// Folded gcd of a non-empty family (all zero yields 0).
Polynomial poly_gcd(const std::vector<Polynomial>& fs);

// The polynomial coefficient of x_var^k in f, viewed in the same ring.
Polynomial coeff_wrt(const Polynomial& f, std::size_t var, std::uint32_t k);
// Degree of f in the single variable x_var (-1 for the zero polynomial).
std::int64_t deg_wrt(const Polynomial& f, std::size_t var);

} // namespace codim1
