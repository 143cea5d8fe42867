#include "upoly_q.hpp"

#include "birat/error.hpp"

#include <algorithm>

namespace birat::detail {

void trim(UPolyQ& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int degree(const UPolyQ& p) { return int(p.size()) - 1; }

UPolyQ mul(const UPolyQ& a, const UPolyQ& b) {
    if (a.empty() || b.empty()) return {};
    UPolyQ r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

UPolyQ sub(const UPolyQ& a, const UPolyQ& b) {
    UPolyQ r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

void divmod(const UPolyQ& a, const UPolyQ& b, UPolyQ& q, UPolyQ& r) {
    if (b.empty()) throw DomainError("polynomial division by zero");
    r = a;
    trim(r);
    q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, 0);
    while (r.size() >= b.size()) {
        std::size_t shift = r.size() - b.size();
        mpq_class c = r.back() / b.back();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= c * b[i];
        trim(r);
    }
    trim(q);
}

UPolyQ monic(UPolyQ p) {
    trim(p);
    if (p.empty()) return p;
    mpq_class lc = p.back();
    for (auto& c : p) c /= lc;
    return p;
}

UPolyQ gcd(UPolyQ a, UPolyQ b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        UPolyQ q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = monic(std::move(r));
    }
    return monic(std::move(a));
}

UPolyQ derivative(const UPolyQ& p) {
    UPolyQ d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * int(i));
    trim(d);
    return d;
}

mpq_class eval(const UPolyQ& p, const mpq_class& x) {
    mpq_class acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

namespace {

std::vector<UPolyQ> sturm_chain(const UPolyQ& p) {
    std::vector<UPolyQ> chain{p, derivative(p)};
    while (!chain.back().empty()) {
        UPolyQ q, r;
        divmod(chain[chain.size() - 2], chain.back(), q, r);
        for (auto& c : r) c = -c;
        if (r.empty()) break;
        chain.push_back(std::move(r));
    }
    if (chain.back().empty()) chain.pop_back();
    return chain;
}

int sign_changes(const std::vector<int>& signs) {
    int changes = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

int changes_at(const std::vector<UPolyQ>& chain, const mpq_class& x) {
    std::vector<int> s;
    for (const auto& q : chain) s.push_back(sgn(eval(q, x)));
    return sign_changes(s);
}

int changes_at_infinity(const std::vector<UPolyQ>& chain) {
    std::vector<int> s;
    for (const auto& q : chain) s.push_back(q.empty() ? 0 : sgn(q.back()));
    return sign_changes(s);
}

} // namespace

int roots_above(const UPolyQ& p, const mpq_class& a) {
    if (degree(p) < 1) return 0;
    auto chain = sturm_chain(p);
    return changes_at(chain, a) - changes_at_infinity(chain);
}

mpq_class largest_real_root(const UPolyQ& p, unsigned bits) {
    auto chain = sturm_chain(p);
    // Cauchy bound
    mpq_class bound = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) bound = std::max(bound, mpq_class(abs(p[i] / p.back())));
    mpq_class lo = -(bound + 1), hi = bound + 1;
    int above_hi = changes_at_infinity(chain);
    if (changes_at(chain, lo) == above_hi) throw DomainError("polynomial has no real root");
    mpq_class width(1);
    width /= mpz_class(1) << bits;
    while (hi - lo > width) {
        mpq_class mid = (lo + hi) / 2;
        if (sgn(eval(p, mid)) == 0) return mid;
        if (changes_at(chain, mid) - above_hi > 0) lo = mid;
        else hi = mid;
    }
    return (lo + hi) / 2;
}

UPolyQ from_multipoly(const MultiPoly& p) {
    if (p.nvars() != 1) throw DomainError("expected a univariate polynomial");
    UPolyQ r(std::size_t(std::max(p.total_degree(), 0)) + 1);
    for (const auto& t : p.terms()) {
        if (!t.coef.is_real()) throw DomainError("expected real coefficients");
        r[unpack(t.key)[0]] = t.coef.re();
    }
    trim(r);
    return r;
}

MultiPoly to_multipoly(const UPolyQ& p) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (sgn(p[i]) != 0) terms.push_back({pack({unsigned(i), 0, 0}), GaussianRational(p[i])});
    return MultiPoly::from_terms(vars_z(), std::move(terms));
}

} // namespace birat::detail
