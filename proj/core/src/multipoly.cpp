#include "birat/multipoly.hpp"

#include "birat/error.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <functional>
#include <map>
#include <ostream>
#include <mutex>
#include <unordered_map>

namespace birat {

const VarList& vars_xy() {
    static const VarList v = std::make_shared<const VarNames>(VarNames{"x", "y"});
    return v;
}

const VarList& vars_proj() {
    static const VarList v = std::make_shared<const VarNames>(VarNames{"x0", "x1", "x2"});
    return v;
}

const VarList& vars_z() {
    static const VarList v = std::make_shared<const VarNames>(VarNames{"z"});
    return v;
}

VarList make_vars(VarNames names) {
    if (names.size() > 3) throw DomainError("at most three variables are supported");
    for (const VarList* known : {&vars_xy(), &vars_proj(), &vars_z()})
        if (**known == names) return *known;
    return std::make_shared<const VarNames>(std::move(names));
}

bool same_vars(const VarList& a, const VarList& b) { return a == b || *a == *b; }

MonoKey pack(const Exponents& e) {
    std::uint64_t t = std::uint64_t(e[0]) + e[1] + e[2];
    if (t > 0xFFFF) throw DomainError("monomial degree exceeds 65535");
    return (t << 48) | (std::uint64_t(e[0]) << 32) | (std::uint64_t(e[1]) << 16) | std::uint64_t(e[2]);
}

Exponents unpack(MonoKey k) {
    return {unsigned((k >> 32) & 0xFFFF), unsigned((k >> 16) & 0xFFFF), unsigned(k & 0xFFFF)};
}

namespace {

bool key_divides(MonoKey d, MonoKey k) {
    Exponents a = unpack(d), b = unpack(k);
    return a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2];
}

void check_vars(const MultiPoly& a, const MultiPoly& b) {
    if (!same_vars(a.vars(), b.vars())) throw DomainError("polynomials over different variable lists");
}

} // namespace

MultiPoly::MultiPoly() : vars_(vars_xy()) {}

MultiPoly::MultiPoly(VarList vars) : vars_(std::move(vars)) {}

MultiPoly::MultiPoly(VarList vars, const GaussianRational& c) : vars_(std::move(vars)) {
    if (!c.is_zero()) terms_.push_back({0, c});
}

MultiPoly MultiPoly::variable(VarList vars, std::size_t index) {
    if (index >= vars->size()) throw DomainError("variable index out of range");
    Exponents e{0, 0, 0};
    e[index] = 1;
    return monomial(std::move(vars), e, 1);
}

MultiPoly MultiPoly::monomial(VarList vars, const Exponents& e, const GaussianRational& c) {
    MultiPoly p(std::move(vars));
    for (std::size_t i = p.nvars(); i < 3; ++i)
        if (e[i] != 0) throw DomainError("exponent on a missing variable");
    if (!c.is_zero()) p.terms_.push_back({pack(e), c});
    return p;
}

MultiPoly MultiPoly::from_terms(VarList vars, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.key > b.key; });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().key == t.key)
            out.back().coef += t.coef;
        else {
            if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
    return from_sorted_unique(std::move(vars), std::move(out));
}

MultiPoly MultiPoly::from_sorted_unique(VarList vars, std::vector<Term> terms) {
    MultiPoly p(std::move(vars));
    p.terms_ = std::move(terms);
    return p;
}

bool MultiPoly::is_real() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coef.is_real(); });
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    unsigned d = key_degree(terms_.front().key);
    return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return key_degree(t.key) == d; });
}

int MultiPoly::total_degree() const { return terms_.empty() ? -1 : int(key_degree(terms_.front().key)); }

int MultiPoly::degree_in(std::size_t var) const {
    if (terms_.empty()) return -1;
    int d = 0;
    for (const auto& t : terms_) d = std::max<int>(d, unpack(t.key)[var]);
    return d;
}

Exponents MultiPoly::min_exponents() const {
    if (terms_.empty()) return {0, 0, 0};
    Exponents m = unpack(terms_.front().key);
    for (const auto& t : terms_) {
        Exponents e = unpack(t.key);
        for (int i = 0; i < 3; ++i) m[i] = std::min(m[i], e[i]);
    }
    return m;
}

GaussianRational MultiPoly::constant_term() const {
    if (!terms_.empty() && terms_.back().key == 0) return terms_.back().coef;
    return 0;
}

GaussianRational MultiPoly::coefficient(const Exponents& e) const {
    MonoKey k = pack(e);
    auto it = std::lower_bound(terms_.begin(), terms_.end(), k, [](const Term& t, MonoKey key) { return t.key > key; });
    if (it != terms_.end() && it->key == k) return it->coef;
    return 0;
}

const GaussianRational& MultiPoly::leading_coef() const {
    if (terms_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return terms_.front().coef;
}

MonoKey MultiPoly::leading_key() const {
    if (terms_.empty()) throw DomainError("leading monomial of the zero polynomial");
    return terms_.front().key;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(*this);
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
}

namespace {

std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].key > b[j].key)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].key > a[i].key) {
            out.push_back({b[j].key, subtract ? -b[j].coef : b[j].coef});
            ++j;
        } else {
            GaussianRational c = subtract ? a[i].coef - b[j].coef : a[i].coef + b[j].coef;
            if (!c.is_zero()) out.push_back({a[i].key, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_vars(*this, o);
    terms_ = merge_terms(terms_, o.terms_, false);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_vars(*this, o);
    terms_ = merge_terms(terms_, o.terms_, true);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
    *this = multiply(*this, o);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const GaussianRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coef *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) { return multiply(a, b); }

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (!same_vars(a.vars_, b.vars_)) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].key != b.terms_[i].key || a.terms_[i].coef != b.terms_[i].coef) return false;
    return true;
}

namespace {

struct IntForm {
    mpz_class den;
    std::vector<mpz_class> re, im;
    bool real = true;
};

IntForm to_int_form(const MultiPoly& p) {
    IntForm f;
    f.den = 1;
    for (const auto& t : p.terms()) {
        mpz_lcm(f.den.get_mpz_t(), f.den.get_mpz_t(), t.coef.re().get_den_mpz_t());
        if (!t.coef.is_real()) {
            f.real = false;
            mpz_lcm(f.den.get_mpz_t(), f.den.get_mpz_t(), t.coef.im().get_den_mpz_t());
        }
    }
    f.re.resize(p.size());
    if (!f.real) f.im.resize(p.size());
    mpz_class s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const auto& c = p.terms()[i].coef;
        mpz_divexact(s.get_mpz_t(), f.den.get_mpz_t(), c.re().get_den_mpz_t());
        f.re[i] = c.re().get_num() * s;
        if (!f.real) {
            mpz_divexact(s.get_mpz_t(), f.den.get_mpz_t(), c.im().get_den_mpz_t());
            f.im[i] = c.im().get_num() * s;
        }
    }
    return f;
}

MultiPoly multiply_naive(const MultiPoly& a, const MultiPoly& b) {
    std::vector<Term> out;
    out.reserve(a.size() * b.size());
    for (const auto& s : a.terms())
        for (const auto& t : b.terms()) out.push_back({s.key + t.key, s.coef * t.coef});
    return MultiPoly::from_terms(a.vars(), std::move(out));
}

// Index layout for the product accumulator.
struct Layout {
    bool dense = false;
    bool drop0 = false;
    unsigned hdeg = 0;
    std::array<std::uint64_t, 3> stride{0, 0, 0};
    std::array<unsigned, 3> extent{1, 1, 1};
    std::uint64_t size = 0;

    std::uint64_t offset(MonoKey k) const {
        Exponents e = unpack(k);
        return e[0] * stride[0] + e[1] * stride[1] + e[2] * stride[2];
    }

    MonoKey key_at(std::uint64_t idx) const {
        Exponents e{0, 0, 0};
        for (int v = 0; v < 3; ++v) {
            if (stride[v] == 0) continue;
            e[v] = unsigned(idx / stride[v]);
            idx %= stride[v];
        }
        if (drop0) e[0] = hdeg - e[1] - e[2];
        return pack(e);
    }
};

Layout make_layout(const MultiPoly& a, const MultiPoly& b) {
    Layout L;
    std::size_t n = a.nvars();
    L.drop0 = n == 3 && a.is_homogeneous() && b.is_homogeneous();
    if (L.drop0) L.hdeg = unsigned(a.total_degree() + b.total_degree());
    std::uint64_t size = 1;
    // Highest variable gets the unit stride so iteration order is cheap to decode.
    for (int v = int(n) - 1; v >= 0; --v) {
        if (L.drop0 && v == 0) continue;
        L.extent[v] = unsigned(a.degree_in(v) + b.degree_in(v) + 1);
        L.stride[v] = size;
        size *= L.extent[v];
        if (size > (std::uint64_t(1) << 23)) return L;
    }
    L.size = size;
    L.dense = true;
    return L;
}

MultiPoly multiply_int(const MultiPoly& a, const MultiPoly& b) {
    IntForm fa = to_int_form(a), fb = to_int_form(b);
    bool real = fa.real && fb.real;
    Layout L = make_layout(a, b);

    std::vector<std::uint64_t> ob(b.size());
    std::unordered_map<MonoKey, std::size_t> slot;
    std::vector<MonoKey> slot_keys;
    if (L.dense) {
        for (std::size_t j = 0; j < b.size(); ++j) ob[j] = L.offset(b.terms()[j].key);
    }

    std::vector<mpz_class> acc_re, acc_im;
    auto slot_of = [&](MonoKey k) -> std::size_t {
        auto [it, inserted] = slot.try_emplace(k, slot_keys.size());
        if (inserted) {
            slot_keys.push_back(k);
            acc_re.emplace_back();
            if (!real) acc_im.emplace_back();
        }
        return it->second;
    };
    if (L.dense) {
        acc_re.resize(L.size);
        if (!real) acc_im.resize(L.size);
    }

    for (std::size_t i = 0; i < a.size(); ++i) {
        MonoKey ka = a.terms()[i].key;
        std::uint64_t oa = L.dense ? L.offset(ka) : 0;
        mpz_srcptr ar = fa.re[i].get_mpz_t();
        bool ai_zero = fa.real || sgn(fa.im[i]) == 0;
        bool ar_zero = sgn(fa.re[i]) == 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::size_t s = L.dense ? std::size_t(oa + ob[j]) : slot_of(ka + b.terms()[j].key);
            mpz_srcptr br = fb.re[j].get_mpz_t();
            if (real) {
                mpz_addmul(acc_re[s].get_mpz_t(), ar, br);
                continue;
            }
            bool bi_zero = fb.real || sgn(fb.im[j]) == 0;
            bool br_zero = sgn(fb.re[j]) == 0;
            if (!ar_zero && !br_zero) mpz_addmul(acc_re[s].get_mpz_t(), ar, br);
            if (!ai_zero && !bi_zero) mpz_submul(acc_re[s].get_mpz_t(), fa.im[i].get_mpz_t(), fb.im[j].get_mpz_t());
            if (!ar_zero && !bi_zero) mpz_addmul(acc_im[s].get_mpz_t(), ar, fb.im[j].get_mpz_t());
            if (!ai_zero && !br_zero) mpz_addmul(acc_im[s].get_mpz_t(), fa.im[i].get_mpz_t(), br);
        }
    }

    mpz_class den = fa.den * fb.den;
    std::vector<Term> out;
    std::size_t count = acc_re.size();
    for (std::size_t s = 0; s < count; ++s) {
        bool zr = sgn(acc_re[s]) == 0;
        bool zi = real || sgn(acc_im[s]) == 0;
        if (zr && zi) continue;
        MonoKey k = L.dense ? L.key_at(s) : slot_keys[s];
        mpq_class re(acc_re[s], den), im;
        if (!zi) im = mpq_class(acc_im[s], den);
        out.push_back({k, GaussianRational(std::move(re), std::move(im))});
    }
    std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) { return x.key > y.key; });
    return MultiPoly::from_sorted_unique(a.vars(), std::move(out));
}

} // namespace

MultiPoly multiply(const MultiPoly& a, const MultiPoly& b) {
    check_vars(a, b);
    if (a.is_zero() || b.is_zero()) return MultiPoly(a.vars());
    if (std::uint64_t(a.total_degree()) + std::uint64_t(b.total_degree()) > 0xFFFF)
        throw DomainError("product degree exceeds 65535");
    for (std::size_t v = 0; v < a.nvars(); ++v)
        if (a.degree_in(v) + b.degree_in(v) > 0xFFFF) throw DomainError("product degree exceeds 65535");
    if (a.size() * b.size() <= 24) return multiply_naive(a, b);
    return multiply_int(a, b);
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly result(vars_, 1), base(*this);
    while (e > 0) {
        if (e & 1) result = multiply(result, base);
        e >>= 1;
        if (e) base = multiply(base, base);
    }
    return result;
}

MultiPoly MultiPoly::monic() const {
    if (terms_.empty()) return *this;
    if (terms_.front().coef.is_one()) return *this;
    GaussianRational inv = terms_.front().coef.inverse();
    return *this * inv;
}

MultiPoly MultiPoly::mul_monomial(const Exponents& e) const {
    MultiPoly r(*this);
    for (auto& t : r.terms_) {
        Exponents te = unpack(t.key);
        t.key = pack({te[0] + e[0], te[1] + e[1], te[2] + e[2]});
    }
    return r;
}

MultiPoly MultiPoly::div_monomial(const Exponents& e) const {
    MonoKey k = pack(e);
    MultiPoly r(*this);
    for (auto& t : r.terms_) {
        if (!key_divides(k, t.key)) throw DomainError("monomial does not divide polynomial");
        t.key -= k;
    }
    return r;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
    if (var >= nvars()) throw DomainError("variable index out of range");
    std::vector<Term> out;
    for (const auto& t : terms_) {
        Exponents e = unpack(t.key);
        if (e[var] == 0) continue;
        GaussianRational c = t.coef * GaussianRational(long(e[var]));
        e[var] -= 1;
        out.push_back({pack(e), std::move(c)});
    }
    // Differentiation preserves relative grlex order only within equal degrees; re-sort.
    return from_terms(vars_, std::move(out));
}

MultiPoly MultiPoly::conj() const {
    MultiPoly r(*this);
    for (auto& t : r.terms_) t.coef = t.coef.conj();
    return r;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& d) const {
    check_vars(*this, d);
    if (d.is_zero()) throw DomainError("division by the zero polynomial");
    if (is_zero()) return MultiPoly(vars_);
    if (d.is_constant()) return *this * d.leading_coef().inverse();
    if (total_degree() < d.total_degree()) return std::nullopt;
    for (std::size_t v = 0; v < nvars(); ++v)
        if (degree_in(v) < d.degree_in(v)) return std::nullopt;

    const MonoKey kd = d.leading_key();
    const GaussianRational inv = d.leading_coef().inverse();
    std::map<MonoKey, GaussianRational, std::greater<MonoKey>> rem;
    for (const auto& t : terms_) rem.emplace(t.key, t.coef);
    std::vector<Term> q;
    while (!rem.empty()) {
        auto top = rem.begin();
        if (!key_divides(kd, top->first)) return std::nullopt;
        MonoKey mk = top->first - kd;
        GaussianRational qc = top->second * inv;
        rem.erase(top);
        for (std::size_t j = 1; j < d.size(); ++j) {
            const auto& t = d.terms_[j];
            auto [it, inserted] = rem.try_emplace(t.key + mk, 0);
            it->second -= qc * t.coef;
            if (it->second.is_zero()) rem.erase(it);
        }
        q.push_back({mk, std::move(qc)});
    }
    return from_sorted_unique(vars_, std::move(q));
}

GaussianRational MultiPoly::eval(std::span<const GaussianRational> point) const {
    if (point.size() != nvars()) throw DomainError("evaluation point has wrong dimension");
    std::array<std::vector<GaussianRational>, 3> pw;
    for (std::size_t v = 0; v < nvars(); ++v) {
        pw[v].push_back(1);
        int dv = degree_in(v);
        for (int k = 1; k <= dv; ++k) pw[v].push_back(pw[v].back() * point[v]);
    }
    GaussianRational sum;
    for (const auto& t : terms_) {
        Exponents e = unpack(t.key);
        GaussianRational term = t.coef;
        for (std::size_t v = 0; v < nvars(); ++v)
            if (e[v]) term *= pw[v][e[v]];
        sum += term;
    }
    return sum;
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> images) const {
    if (images.size() != nvars()) throw DomainError("substitution needs one image per variable");
    const VarList& target = images[0].vars();
    for (const auto& img : images)
        if (!same_vars(img.vars(), target)) throw DomainError("substitution images over different variables");

    std::array<std::vector<MultiPoly>, 3> pw;
    for (std::size_t v = 0; v < nvars(); ++v) {
        pw[v].emplace_back(target, 1);
        int dv = degree_in(v);
        for (int k = 1; k <= dv; ++k) pw[v].push_back(multiply(pw[v].back(), images[v]));
    }
    std::vector<Term> acc;
    for (const auto& t : terms_) {
        Exponents e = unpack(t.key);
        MultiPoly prod(target, t.coef);
        for (std::size_t v = 0; v < nvars(); ++v)
            if (e[v]) prod = multiply(prod, pw[v][e[v]]);
        for (auto& pt : prod.terms_) acc.push_back(std::move(pt));
    }
    return from_terms(target, std::move(acc));
}

MultiPoly MultiPoly::dehomogenize(VarList target) const {
    if (target->size() + 1 != nvars()) throw DomainError("dehomogenize target must drop one variable");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Exponents e = unpack(t.key);
        out.push_back({pack({e[1], e[2], 0}), t.coef});
    }
    return from_terms(std::move(target), std::move(out));
}

MultiPoly MultiPoly::homogenize(VarList target, unsigned degree) const {
    if (target->size() != nvars() + 1) throw DomainError("homogenize target must add one variable");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Exponents e = unpack(t.key);
        unsigned d = key_degree(t.key);
        if (d > degree) throw DomainError("homogenization degree below polynomial degree");
        out.push_back({pack({degree - d, e[0], e[1]}), t.coef});
    }
    return from_terms(std::move(target), std::move(out));
}

MultiPoly MultiPoly::rename(VarList target) const {
    if (target->size() != nvars()) throw DomainError("rename requires the same number of variables");
    MultiPoly r(*this);
    r.vars_ = std::move(target);
    return r;
}

std::string MultiPoly::str() const { return format_poly(*this); }

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << format_poly(p); }

// ---------------------------------------------------------------- text

namespace {

std::string monomial_text(const VarNames& names, MonoKey k) {
    Exponents e = unpack(k);
    std::string s;
    for (std::size_t v = 0; v < names.size(); ++v) {
        if (e[v] == 0) continue;
        if (!s.empty()) s += '*';
        s += names[v];
        if (e[v] > 1) s += '^' + std::to_string(e[v]);
    }
    return s;
}

} // namespace

std::string format_poly(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        std::string mono = monomial_text(*p.vars(), t.key);
        const GaussianRational& c = t.coef;
        bool negative = false;
        std::string coef;
        if (c.is_real() || sgn(c.re()) == 0) {
            bool imag = !c.is_real();
            const mpq_class& part = imag ? c.im() : c.re();
            negative = sgn(part) < 0;
            mpq_class mag = abs(part);
            if (imag)
                coef = (mag == 1 && !mono.empty()) ? "i" : mag.get_str() + "i";
            else if (mag != 1 || mono.empty())
                coef = mag.get_str();
        } else {
            coef = "(" + format_scalar(c) + ")";
        }
        if (negative)
            out += '-';
        else if (!first)
            out += '+';
        out += coef;
        if (!coef.empty() && !mono.empty()) out += '*';
        out += mono;
        first = false;
    }
    return out;
}

namespace {

struct PolyParser {
    std::string_view text;
    const VarList& vars;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        std::size_t end = pos;
        while (end < text.size() && !std::strchr("+-*() ", text[end])) ++end;
        if (end == pos && pos < text.size()) ++end;
        std::string tok(text.substr(pos, end - pos));
        if (tok.empty()) tok = "<end of input>";
        throw ParseError("malformed polynomial: " + msg + " at '" + tok + "'", tok, pos);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }

    unsigned integer() {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) fail("expected an integer");
        unsigned long v = std::stoul(std::string(text.substr(start, pos - start)));
        if (v > 0xFFFF) fail("exponent too large");
        return unsigned(v);
    }

    MultiPoly factor() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        char c = text[pos];
        if (c == '(') {
            std::size_t close = text.find(')', pos);
            if (close == std::string_view::npos) fail("unbalanced parenthesis");
            GaussianRational v = parse_scalar(text.substr(pos + 1, close - pos - 1));
            pos = close + 1;
            return MultiPoly(vars, v);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos < text.size() && text[pos] == '/') {
                ++pos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            }
            bool imag = pos < text.size() && text[pos] == 'i' &&
                        (pos + 1 == text.size() || !std::isalnum(static_cast<unsigned char>(text[pos + 1])));
            std::string_view lit = text.substr(start, pos - start);
            GaussianRational v;
            try {
                v = parse_scalar(lit);
            } catch (const ParseError& e) {
                pos = start + e.position();
                fail("bad number");
            }
            if (imag) {
                ++pos;
                v *= GaussianRational::i();
            }
            return MultiPoly(vars, v);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos]))) ++pos;
            std::string name(text.substr(start, pos - start));
            auto it = std::find(vars->begin(), vars->end(), name);
            if (it == vars->end()) {
                if (name == "i") return MultiPoly(vars, GaussianRational::i());
                pos = start;
                fail("unknown variable");
            }
            Exponents e{0, 0, 0};
            unsigned ex = 1;
            if (peek('^')) {
                ++pos;
                skip_ws();
                ex = integer();
            }
            e[std::size_t(it - vars->begin())] = ex;
            return MultiPoly::monomial(vars, e, 1);
        }
        fail("unexpected character");
    }

    MultiPoly term() {
        MultiPoly t = factor();
        while (peek('*')) {
            ++pos;
            t = multiply(t, factor());
        }
        return t;
    }

    MultiPoly poly() {
        MultiPoly sum(vars);
        bool first = true;
        for (;;) {
            skip_ws();
            if (pos >= text.size()) {
                if (first) fail("empty polynomial");
                break;
            }
            int sign = 1;
            if (text[pos] == '+' || text[pos] == '-') {
                sign = text[pos] == '-' ? -1 : 1;
                ++pos;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            MultiPoly t = term();
            if (sign < 0)
                sum -= t;
            else
                sum += t;
            first = false;
        }
        return sum;
    }
};

} // namespace

MultiPoly parse_poly(std::string_view text, const VarList& vars) {
    PolyParser p{text, vars};
    return p.poly();
}

} // namespace birat
