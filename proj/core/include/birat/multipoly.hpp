#pragma once

#include "birat/gaussian_rational.hpp"

#include <array>
#include <iosfwd>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace birat {

using VarNames = std::vector<std::string>;
using VarList = std::shared_ptr<const VarNames>;

// Interned variable lists. Up to three variables per polynomial.
const VarList& vars_xy();
const VarList& vars_proj();
const VarList& vars_z();
VarList make_vars(VarNames names);
bool same_vars(const VarList& a, const VarList& b);

using Exponents = std::array<unsigned, 3>;

// Packed monomial: total degree in the top 16 bits, then e0, e1, e2.
// Numeric order of keys is graded lex with x0 > x1 > x2.
using MonoKey = std::uint64_t;

MonoKey pack(const Exponents& e);
Exponents unpack(MonoKey k);
inline unsigned key_degree(MonoKey k) { return static_cast<unsigned>(k >> 48); }

struct Term {
    MonoKey key;
    GaussianRational coef;
};

class MultiPoly {
public:
    MultiPoly();
    explicit MultiPoly(VarList vars);
    MultiPoly(VarList vars, const GaussianRational& c);

    static MultiPoly variable(VarList vars, std::size_t index);
    static MultiPoly monomial(VarList vars, const Exponents& e, const GaussianRational& c = 1);
    // Terms may be unsorted and contain duplicates or zeros.
    static MultiPoly from_terms(VarList vars, std::vector<Term> terms);
    static MultiPoly from_sorted_unique(VarList vars, std::vector<Term> terms);

    const VarList& vars() const { return vars_; }
    std::size_t nvars() const { return vars_->size(); }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].key == 0); }
    bool is_one() const { return is_constant() && !is_zero() && terms_[0].coef.is_one(); }
    bool is_real() const;
    bool is_homogeneous() const;
    bool is_monomial() const { return terms_.size() == 1; }

    // Total degree; -1 for the zero polynomial.
    int total_degree() const;
    int degree_in(std::size_t var) const;
    Exponents min_exponents() const;
    GaussianRational constant_term() const;
    GaussianRational coefficient(const Exponents& e) const;
    const GaussianRational& leading_coef() const;
    MonoKey leading_key() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const GaussianRational& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const GaussianRational& c) { return a *= c; }
    friend MultiPoly operator*(const GaussianRational& c, MultiPoly a) { return a *= c; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly pow(unsigned e) const;
    MultiPoly monic() const;
    MultiPoly mul_monomial(const Exponents& e) const;
    MultiPoly div_monomial(const Exponents& e) const;
    MultiPoly derivative(std::size_t var) const;
    MultiPoly conj() const;

    // Exact quotient if d divides *this, otherwise nullopt.
    std::optional<MultiPoly> divide_exact(const MultiPoly& d) const;

    GaussianRational eval(std::span<const GaussianRational> point) const;

    // Substitute polynomial images for every variable. All images share one variable list.
    MultiPoly substitute(std::span<const MultiPoly> images) const;

    // x_i -> 1 for i = 0, remaining variables renamed into target.
    MultiPoly dehomogenize(VarList target) const;
    // Inverse of dehomogenize: result in `target` (which has one more variable, placed first).
    MultiPoly homogenize(VarList target, unsigned degree) const;
    MultiPoly rename(VarList target) const;

    std::string str() const;

private:
    VarList vars_;
    std::vector<Term> terms_;
};

MultiPoly parse_poly(std::string_view text, const VarList& vars);
std::string format_poly(const MultiPoly& p);
std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

// Multiply two polynomials via Gaussian-integer accumulation; exposed for benchmarking.
MultiPoly multiply(const MultiPoly& a, const MultiPoly& b);

} // namespace birat
