#include "birat/rational_function.hpp"

#include "birat/error.hpp"
#include "birat/poly_gcd.hpp"

#include <array>
#include <ostream>

namespace birat {

RationalFunction::RationalFunction() : num_(vars_xy()), den_(vars_xy(), 1) {}

RationalFunction::RationalFunction(MultiPoly numerator)
    : num_(std::move(numerator)), den_(num_.vars(), 1) {}

RationalFunction::RationalFunction(VarList vars, const GaussianRational& c) : num_(vars, c), den_(vars, 1) {}

RationalFunction RationalFunction::from_reduced(MultiPoly num, MultiPoly den) {
    RationalFunction r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
}

RationalFunction reduce_fraction(const MultiPoly& num, const MultiPoly& den) {
    if (den.is_zero()) throw DomainError("rational function with zero denominator");
    if (!same_vars(num.vars(), den.vars())) throw DomainError("numerator and denominator over different variables");
    if (num.is_zero()) return RationalFunction(MultiPoly(num.vars()));
    if (den.is_constant()) return RationalFunction(num * den.leading_coef().inverse());
    std::array<MultiPoly, 2> pair{num, den};
    GcdWithCofactors g = gcd_with_cofactors(pair);
    MultiPoly n = std::move(g.cofactors[0]);
    MultiPoly d = std::move(g.cofactors[1]);
    GaussianRational inv = d.leading_coef().inverse();
    return RationalFunction::from_reduced(n * inv, d * inv);
}

RationalFunction RationalFunction::operator-() const { return from_reduced(-num_, den_); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return reduce_fraction(a.num_ + b.num_, a.den_);
    if (a.is_polynomial() && b.is_polynomial()) return RationalFunction(a.num_ + b.num_);
    std::array<MultiPoly, 2> dens{a.den_, b.den_};
    GcdWithCofactors g = gcd_with_cofactors(dens);
    // a/b + c/d with b = g*b', d = g*d': (a*d' + c*b') / (g*b'*d')
    MultiPoly n = a.num_ * g.cofactors[1] + b.num_ * g.cofactors[0];
    MultiPoly d = a.den_ * g.cofactors[1];
    return reduce_fraction(n, d);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return RationalFunction(MultiPoly(a.vars()));
    if (a.is_polynomial() && b.is_polynomial()) return RationalFunction(a.num_ * b.num_);
    return reduce_fraction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DomainError("division by the zero rational function");
    return reduce_fraction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction operator*(const RationalFunction& a, const GaussianRational& c) {
    if (c.is_zero()) return RationalFunction(MultiPoly(a.vars()));
    return RationalFunction::from_reduced(a.num_ * c, a.den_);
}

RationalFunction RationalFunction::pow(int e) const {
    if (e < 0) return RationalFunction(MultiPoly(vars(), 1)) / pow(-e);
    MultiPoly n = num_.pow(unsigned(e));
    MultiPoly d = den_.pow(unsigned(e));
    // Powers of coprime polynomials stay coprime; only the scaling needs fixing.
    GaussianRational inv = d.leading_coef().inverse();
    return from_reduced(n * inv, d * inv);
}

RationalFunction RationalFunction::derivative(std::size_t var) const {
    MultiPoly n = num_.derivative(var) * den_ - num_ * den_.derivative(var);
    return reduce_fraction(n, den_ * den_);
}

RationalFunction RationalFunction::compose(std::span<const RationalFunction> images) const {
    std::size_t nv = num_.nvars();
    if (images.size() != nv) throw DomainError("composition needs one image per variable");
    const VarList& target = images[0].vars();

    // Homogenise numerator and denominator in each variable to a common degree:
    // P(a/b, ...) * b^D = sum c * a^i * b^(D-i) * ...
    std::array<unsigned, 3> top{0, 0, 0};
    for (std::size_t v = 0; v < nv; ++v)
        top[v] = unsigned(std::max(num_.degree_in(v), den_.degree_in(v)));

    std::array<std::vector<MultiPoly>, 3> npow, dpow;
    for (std::size_t v = 0; v < nv; ++v) {
        npow[v].emplace_back(target, 1);
        dpow[v].emplace_back(target, 1);
        for (unsigned k = 1; k <= top[v]; ++k) {
            npow[v].push_back(npow[v].back() * images[v].num());
            dpow[v].push_back(dpow[v].back() * images[v].den());
        }
    }
    auto expand = [&](const MultiPoly& p) {
        std::vector<Term> acc;
        for (const auto& t : p.terms()) {
            Exponents e = unpack(t.key);
            MultiPoly prod(target, t.coef);
            for (std::size_t v = 0; v < nv; ++v) {
                if (e[v]) prod = prod * npow[v][e[v]];
                if (top[v] - e[v]) prod = prod * dpow[v][top[v] - e[v]];
            }
            for (const auto& pt : prod.terms()) acc.push_back(pt);
        }
        return MultiPoly::from_terms(target, std::move(acc));
    };
    return reduce_fraction(expand(num_), expand(den_));
}

GaussianRational RationalFunction::eval(std::span<const GaussianRational> point) const {
    GaussianRational d = den_.eval(point);
    if (d.is_zero()) throw DomainError("rational function evaluated at a pole");
    return num_.eval(point) / d;
}

std::string RationalFunction::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RationalFunction parse_rational_function(std::string_view text, const VarList& vars) {
    // Accepts "P" or "(P)/(Q)".
    std::size_t split = std::string_view::npos;
    int depth = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == '/' && depth == 0 && i > 0 && text[i - 1] == ')') {
            split = i;
            break;
        }
    }
    if (split == std::string_view::npos) return RationalFunction(parse_poly(text, vars));
    auto strip = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
        return s;
    };
    return reduce_fraction(parse_poly(strip(text.substr(0, split)), vars), parse_poly(strip(text.substr(split + 1)), vars));
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& r) { return os << r.str(); }

} // namespace birat
