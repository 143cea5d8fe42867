#pragma once

#include "birat/gaussian_rational.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <array>
#include <optional>
#include <vector>

namespace birat {

namespace mp = boost::multiprecision;
using NReal = mp::number<mp::cpp_bin_float<128, mp::digit_base_2>, mp::et_off>;
using NComplex = mp::cpp_complex<128, mp::digit_base_2>;

NComplex to_complex(const GaussianRational& v);

struct NumTerm {
    NComplex c;
    int ex = 0, ey = 0;
};
using NumPoly = std::vector<NumTerm>;

// (num/den)^power evaluated at (a x + b, c y + d).
class NumericFunction {
public:
    NumPoly num, den;
    int power = 1;
    NComplex a{1}, b{0}, c{1}, d{0};
    NComplex scale{1}; // multiplier for Scale transforms

    // nullopt when |den| < min_den at the point
    std::optional<NComplex> eval(const NComplex& x, const NComplex& y, const NReal& min_den) const;
    std::optional<std::array<NComplex, 2>> gradient(const NComplex& x, const NComplex& y, const NReal& min_den) const;
};

} // namespace birat
