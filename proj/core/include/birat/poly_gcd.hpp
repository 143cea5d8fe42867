#pragma once

#include "birat/multipoly.hpp"

#include <span>
#include <vector>

namespace birat {

// Greatest common divisor normalized to leading coefficient 1 (graded lex).
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);
MultiPoly poly_gcd(std::span<const MultiPoly> polys);

struct GcdWithCofactors {
    MultiPoly gcd;
    std::vector<MultiPoly> cofactors; // polys[i] == gcd * cofactors[i]
};

GcdWithCofactors gcd_with_cofactors(std::span<const MultiPoly> polys);

// Sound but incomplete: true only if the inputs certainly share no
// non-constant factor. Inputs in at most two variables, or homogeneous in three.
bool certify_coprime(std::span<const MultiPoly> polys);

} // namespace birat
