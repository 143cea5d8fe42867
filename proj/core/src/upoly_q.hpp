#pragma once

#include "birat/multipoly.hpp"

#include <gmpxx.h>

#include <vector>

namespace birat::detail {

// Dense univariate polynomial over Q, index = degree, no trailing zeros.
using UPolyQ = std::vector<mpq_class>;

void trim(UPolyQ& p);
int degree(const UPolyQ& p);
UPolyQ mul(const UPolyQ& a, const UPolyQ& b);
UPolyQ sub(const UPolyQ& a, const UPolyQ& b);
void divmod(const UPolyQ& a, const UPolyQ& b, UPolyQ& q, UPolyQ& r);
UPolyQ gcd(UPolyQ a, UPolyQ b);
UPolyQ derivative(const UPolyQ& p);
UPolyQ monic(UPolyQ p);
mpq_class eval(const UPolyQ& p, const mpq_class& x);

// Number of distinct real roots in (a, +inf); a must not be a root.
int roots_above(const UPolyQ& p, const mpq_class& a);
// Largest real root of a squarefree polynomial, by bisection to width 2^-bits.
mpq_class largest_real_root(const UPolyQ& p, unsigned bits);

// Real polynomial in z to dense form; throws DomainError on non-real coefficients.
UPolyQ from_multipoly(const MultiPoly& p);
MultiPoly to_multipoly(const UPolyQ& p);

} // namespace birat::detail
