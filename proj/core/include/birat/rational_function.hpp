#pragma once

#include "birat/multipoly.hpp"

#include <span>
#include <string>

namespace birat {

// Reduced fraction with a denominator of leading coefficient 1.
class RationalFunction {
public:
    RationalFunction();
    explicit RationalFunction(MultiPoly numerator);
    RationalFunction(VarList vars, const GaussianRational& c);

    // Caller guarantees the pair is already reduced and normalized.
    static RationalFunction from_reduced(MultiPoly num, MultiPoly den);

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    const VarList& vars() const { return num_.vars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const GaussianRational& c);
    friend RationalFunction operator*(const GaussianRational& c, const RationalFunction& a) { return a * c; }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    RationalFunction pow(int e) const;
    RationalFunction derivative(std::size_t var) const;
    // Substitute rational images (sharing one variable list) for every variable.
    RationalFunction compose(std::span<const RationalFunction> images) const;
    // Throws DomainError at a pole.
    GaussianRational eval(std::span<const GaussianRational> point) const;

    std::string str() const;

private:
    MultiPoly num_;
    MultiPoly den_;
};

RationalFunction reduce_fraction(const MultiPoly& num, const MultiPoly& den);
RationalFunction parse_rational_function(std::string_view text, const VarList& vars);
std::ostream& operator<<(std::ostream& os, const RationalFunction& r);

} // namespace birat
