#include "birat/poly_gcd.hpp"

#include "birat/error.hpp"
#include "modular.hpp"

#include <algorithm>
#include <random>

namespace birat {

namespace {

using namespace detail;

const VarList& plane_vars() {
    static const VarList v = make_vars({"x1", "x2"});
    return v;
}

// ---------------------------------------------------------------- integer forms

struct IntPoly {
    mpz_class den = 1;
    std::vector<std::pair<MonoKey, std::pair<mpz_class, mpz_class>>> terms; // key, (re, im)
    bool real = true;
};

IntPoly integer_form(const MultiPoly& p) {
    IntPoly f;
    for (const auto& t : p.terms()) {
        mpz_lcm(f.den.get_mpz_t(), f.den.get_mpz_t(), t.coef.re().get_den_mpz_t());
        if (!t.coef.is_real()) {
            f.real = false;
            mpz_lcm(f.den.get_mpz_t(), f.den.get_mpz_t(), t.coef.im().get_den_mpz_t());
        }
    }
    mpz_class s;
    for (const auto& t : p.terms()) {
        mpz_divexact(s.get_mpz_t(), f.den.get_mpz_t(), t.coef.re().get_den_mpz_t());
        mpz_class re = t.coef.re().get_num() * s;
        mpz_divexact(s.get_mpz_t(), f.den.get_mpz_t(), t.coef.im().get_den_mpz_t());
        mpz_class im = t.coef.im().get_num() * s;
        f.terms.push_back({t.key, {std::move(re), std::move(im)}});
    }
    return f;
}

// ---------------------------------------------------------------- coprimality certificate

// Univariate specialisation in variable w with the other variable set to c, reduced mod p.
UPolyP specialise(const IntPoly& f, int w, u64 c, const GaussPrime& gp) {
    int other = 1 - w;
    UPolyP out;
    for (const auto& [key, coef] : f.terms) {
        Exponents e = unpack(key);
        u64 v = gauss_mod(coef.first, f.real ? nullptr : &coef.second, gp.sqrt_m1, gp.p);
        if (other < 2 && e[other]) v = mulmod(v, powmod(c, e[other], gp.p), gp.p);
        if (out.size() <= e[w]) out.resize(e[w] + 1, 0);
        out[e[w]] = addmod(out[e[w]], v, gp.p);
    }
    trim(out);
    return out;
}

bool certify_bivariate(const std::vector<MultiPoly>& polys) {
    std::size_t nv = polys.front().nvars();
    std::vector<IntPoly> forms;
    for (const auto& p : polys) forms.push_back(integer_form(p));
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    const GaussPrime& gp = gauss_prime(0);
    for (std::size_t w = 0; w < nv; ++w) {
        bool done = false;
        for (const auto& p : polys)
            if (p.degree_in(w) == 0) done = true;
        for (int attempt = 0; attempt < 3 && !done; ++attempt) {
            u64 c = rng() % gp.p;
            std::vector<UPolyP> spec;
            bool keeps = false;
            for (std::size_t k = 0; k < polys.size(); ++k) {
                spec.push_back(specialise(forms[k], int(w), c, gp));
                if (deg(spec.back()) == polys[k].degree_in(w)) keeps = true;
            }
            if (!keeps) continue;
            UPolyP g = spec[0];
            for (std::size_t k = 1; k < spec.size() && deg(g) > 0; ++k) g = gcd(g, spec[k], gp.p);
            if (deg(g) == 0) done = true;
            break;
        }
        if (!done) return false;
    }
    return true;
}

// ---------------------------------------------------------------- dense integer bivariate

struct BiZ {
    int du = 0, dv = 0;
    std::vector<mpz_class> c;

    BiZ() = default;
    BiZ(int u, int v) : du(u), dv(v), c(std::size_t(u + 1) * (v + 1)) {}
    mpz_class& at(int i, int j) { return c[std::size_t(i) * (dv + 1) + j]; }
    const mpz_class& at(int i, int j) const { return c[std::size_t(i) * (dv + 1) + j]; }

    // Lex-leading position (highest u power, then highest v power).
    std::pair<int, int> lead() const {
        for (int i = du; i >= 0; --i)
            for (int j = dv; j >= 0; --j)
                if (sgn(at(i, j)) != 0) return {i, j};
        return {-1, -1};
    }
};

BiZ to_biz(const MultiPoly& p, mpq_class& scale) {
    IntPoly f = integer_form(p);
    int du = p.degree_in(0), dv = p.nvars() > 1 ? p.degree_in(1) : 0;
    BiZ b(du, dv);
    mpz_class content;
    for (auto& [key, coef] : f.terms) {
        Exponents e = unpack(key);
        b.at(int(e[0]), int(e[1])) = coef.first;
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), coef.first.get_mpz_t());
    }
    for (auto& x : b.c)
        if (sgn(x) != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
    scale = mpq_class(content, f.den);
    scale.canonicalize();
    return b;
}

MultiPoly from_biz(const BiZ& b, const VarList& vars, const mpq_class& scale) {
    std::vector<Term> terms;
    for (int i = 0; i <= b.du; ++i)
        for (int j = 0; j <= b.dv; ++j)
            if (sgn(b.at(i, j)) != 0)
                terms.push_back({pack({unsigned(i), unsigned(j), 0}), GaussianRational(mpq_class(b.at(i, j)) * scale)});
    return MultiPoly::from_terms(vars, std::move(terms));
}

// Exact division a = c * q over Z; false if c does not divide a.
bool divide_biz(const BiZ& a, const BiZ& c, BiZ& q) {
    auto [lu, lv] = c.lead();
    auto [au, av] = a.lead();
    if (au < 0) {
        q = BiZ(0, 0);
        return true;
    }
    if (au < lu) return false;
    int cdv = 0;
    struct Entry {
        int i, j;
        const mpz_class* v;
    };
    std::vector<Entry> nz;
    for (int i = 0; i <= c.du; ++i)
        for (int j = 0; j <= c.dv; ++j)
            if (sgn(c.at(i, j)) != 0) {
                nz.push_back({i, j, &c.at(i, j)});
                cdv = std::max(cdv, j);
            }
    int adv = 0;
    for (int i = 0; i <= a.du; ++i)
        for (int j = 0; j <= a.dv; ++j)
            if (sgn(a.at(i, j)) != 0) adv = std::max(adv, j);
    if (adv < cdv) return false;
    int qdv = adv - cdv;
    BiZ r = a;
    q = BiZ(au - lu, qdv);
    const mpz_class& lc = c.at(lu, lv);
    mpz_class t;
    for (int i = au; i >= 0; --i) {
        for (int j = r.dv; j >= 0; --j) {
            if (sgn(r.at(i, j)) == 0) continue;
            if (i < lu || j < lv) return false;
            int qi = i - lu, qj = j - lv;
            if (qj > qdv) return false;
            if (!mpz_divisible_p(r.at(i, j).get_mpz_t(), lc.get_mpz_t())) return false;
            mpz_divexact(t.get_mpz_t(), r.at(i, j).get_mpz_t(), lc.get_mpz_t());
            for (const auto& e : nz) {
                int ri = qi + e.i, rj = qj + e.j;
                if (rj > r.dv) return false;
                mpz_submul(r.at(ri, rj).get_mpz_t(), t.get_mpz_t(), e.v->get_mpz_t());
            }
            q.at(qi, qj) = t;
        }
    }
    return true;
}

// ---------------------------------------------------------------- Brown's modular algorithm

using BiP = std::vector<UPolyP>; // rows indexed by u-degree, each a polynomial in v

void trim_rows(BiP& a) {
    while (!a.empty() && a.back().empty()) a.pop_back();
}

BiP reduce_mod(const BiZ& a, u64 p) {
    BiP r(a.du + 1);
    for (int i = 0; i <= a.du; ++i) {
        r[i].resize(a.dv + 1);
        for (int j = 0; j <= a.dv; ++j) r[i][j] = mpz_mod(a.at(i, j), p);
        trim(r[i]);
    }
    trim_rows(r);
    return r;
}

UPolyP row_content(const BiP& a, u64 p) {
    UPolyP g;
    for (const auto& row : a) {
        if (row.empty()) continue;
        g = g.empty() ? monic(row, p) : gcd(g, row, p);
        if (deg(g) == 0) break;
    }
    return g;
}

int max_row_degree(const BiP& a) {
    int d = 0;
    for (const auto& row : a) d = std::max(d, deg(row));
    return d;
}

// gcd over F_p[u,v] of nonzero a, b, up to a scalar.
BiP pgcd(const BiP& a, const BiP& b, u64 p, std::mt19937_64& rng) {
    UPolyP ca = row_content(a, p), cb = row_content(b, p);
    UPolyP cont = gcd(ca, cb, p);
    BiP a1, b1;
    for (const auto& row : a) a1.push_back(row.empty() ? row : div_exact(row, ca, p));
    for (const auto& row : b) b1.push_back(row.empty() ? row : div_exact(row, cb, p));
    const UPolyP& la = a1.back();
    const UPolyP& lb = b1.back();
    UPolyP g = gcd(la, lb, p);
    int bound = std::min(max_row_degree(a1), max_row_degree(b1)) + deg(g);

    BiP h;
    UPolyP hmod{1};
    int curdeg = -1, points = 0;
    std::vector<u64> used;
    for (long tries = 0; tries < 64L * (bound + 2) + 1000; ++tries) {
        u64 e = rng() % p;
        if (e == 0 || eval(la, e, p) == 0 || eval(lb, e, p) == 0) continue;
        if (std::find(used.begin(), used.end(), e) != used.end()) continue;
        UPolyP ua(a1.size()), ub(b1.size());
        for (std::size_t i = 0; i < a1.size(); ++i) ua[i] = eval(a1[i], e, p);
        for (std::size_t i = 0; i < b1.size(); ++i) ub[i] = eval(b1[i], e, p);
        UPolyP c = gcd(ua, ub, p);
        if (deg(c) == 0) return BiP{cont};
        u64 ge = eval(g, e, p);
        for (auto& x : c) x = mulmod(x, ge, p);
        if (curdeg < 0 || deg(c) < curdeg) {
            h.assign(c.size(), {});
            for (std::size_t i = 0; i < c.size(); ++i)
                if (c[i]) h[i] = {c[i]};
            hmod = {submod(0, e, p), 1};
            curdeg = deg(c);
            points = 1;
            used.assign(1, e);
        } else if (deg(c) > curdeg) {
            continue;
        } else {
            u64 m = invmod(eval(hmod, e, p), p);
            for (std::size_t i = 0; i < c.size(); ++i) {
                u64 diff = submod(c[i], eval(h[i], e, p), p);
                if (diff == 0) continue;
                u64 f = mulmod(diff, m, p);
                if (h[i].size() < hmod.size()) h[i].resize(hmod.size(), 0);
                for (std::size_t k = 0; k < hmod.size(); ++k) h[i][k] = addmod(h[i][k], mulmod(f, hmod[k], p), p);
                trim(h[i]);
            }
            hmod = mul(hmod, UPolyP{submod(0, e, p), 1}, p);
            ++points;
            used.push_back(e);
        }
        if (points == bound + 1) {
            UPolyP ch = row_content(h, p);
            for (auto& row : h) {
                if (row.empty()) continue;
                row = mul(div_exact(row, ch, p), cont, p);
            }
            return h;
        }
    }
    throw DomainError("modular gcd failed to find enough evaluation points");
}

struct BrownResult {
    BiZ g, qa, qb;
};

mpz_class lead_coef(const BiZ& a) {
    auto [i, j] = a.lead();
    return a.at(i, j);
}

BrownResult brown_gcd(const BiZ& a, const BiZ& b) {
    mpz_class lca = lead_coef(a), lcb = lead_coef(b), gamma;
    mpz_gcd(gamma.get_mpz_t(), lca.get_mpz_t(), lcb.get_mpz_t());
    int du = std::min(a.du, b.du), dv = std::min(a.dv, b.dv);
    std::mt19937_64 rng(0x2545f4914f6cdd1dull);

    BiZ h;
    mpz_class modulus;
    std::pair<int, int> cur{-1, -1};
    for (std::size_t idx = 0; idx < 4096; ++idx) {
        u64 p = gauss_prime(idx).p;
        if (mpz_mod(lca, p) == 0 || mpz_mod(lcb, p) == 0) continue;
        BiP cp = pgcd(reduce_mod(a, p), reduce_mod(b, p), p, rng);
        int ci = int(cp.size()) - 1, cj = deg(cp.back());
        if (ci == 0 && cj == 0) {
            BrownResult r;
            r.g = BiZ(0, 0);
            r.g.at(0, 0) = 1;
            r.qa = a;
            r.qb = b;
            return r;
        }
        if (ci > du || max_row_degree(cp) > dv) continue;
        std::pair<int, int> ld{ci, cj};
        if (cur.first >= 0 && ld > cur) continue;
        u64 s = mulmod(mpz_mod(gamma, p), invmod(cp.back().back(), p), p);
        for (auto& row : cp)
            for (auto& x : row) x = mulmod(x, s, p);

        if (cur.first < 0 || ld < cur) {
            cur = ld;
            h = BiZ(du, dv);
            mpz_class pz(static_cast<unsigned long>(p));
            for (int i = 0; i < int(cp.size()); ++i)
                for (int j = 0; j < int(cp[i].size()); ++j)
                    h.at(i, j) = symmetric(mpz_class(static_cast<unsigned long>(cp[i][j])), pz);
            modulus = pz;
            continue;
        }

        BiZ hn(du, dv);
        mpz_class newmod = modulus * static_cast<unsigned long>(p);
        u64 minv = invmod(mpz_mod(modulus, p), p);
        bool stable = true;
        for (int i = 0; i <= du; ++i) {
            for (int j = 0; j <= dv; ++j) {
                u64 cv = (i < int(cp.size()) && j < int(cp[i].size())) ? cp[i][j] : 0;
                const mpz_class& hv = h.at(i, j);
                u64 t = mulmod(submod(cv, mpz_mod(hv, p), p), minv, p);
                if (t == 0) {
                    hn.at(i, j) = hv;
                } else {
                    hn.at(i, j) = symmetric(hv + modulus * static_cast<unsigned long>(t), newmod);
                    if (hn.at(i, j) != hv) stable = false;
                }
            }
        }
        h = std::move(hn);
        modulus = newmod;
        if (!stable) continue;

        BiZ cand = h;
        mpz_class content;
        for (const auto& x : cand.c) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
        if (lead_coef(cand) < 0) content = -content;
        for (auto& x : cand.c)
            if (sgn(x) != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
        BrownResult r;
        if (divide_biz(a, cand, r.qa) && divide_biz(b, cand, r.qb)) {
            r.g = std::move(cand);
            return r;
        }
    }
    throw DomainError("modular gcd did not converge");
}

// ---------------------------------------------------------------- subresultant fallback over Q(i)

using UPolyG = std::vector<GaussianRational>;
using BiG = std::vector<UPolyG>;

void trimg(UPolyG& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

UPolyG mulg(const UPolyG& a, const UPolyG& b) {
    if (a.empty() || b.empty()) return {};
    UPolyG r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trimg(r);
    return r;
}

UPolyG subg(const UPolyG& a, const UPolyG& b) {
    UPolyG r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trimg(r);
    return r;
}

void divmodg(const UPolyG& a, const UPolyG& b, UPolyG& q, UPolyG& r) {
    r = a;
    trimg(r);
    q.clear();
    if (r.size() < b.size()) return;
    q.assign(r.size() - b.size() + 1, 0);
    GaussianRational inv = b.back().inverse();
    for (int i = int(r.size()) - 1; i >= int(b.size()) - 1; --i) {
        if (r[i].is_zero()) continue;
        GaussianRational c = r[i] * inv;
        int shift = i - int(b.size()) + 1;
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
    }
    trimg(r);
    trimg(q);
}

UPolyG monicg(UPolyG a) {
    trimg(a);
    if (a.empty() || a.back().is_one()) return a;
    GaussianRational inv = a.back().inverse();
    for (auto& c : a) c *= inv;
    return a;
}

UPolyG gcdg(UPolyG a, UPolyG b) {
    trimg(a);
    trimg(b);
    UPolyG q, r;
    while (!b.empty()) {
        divmodg(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return monicg(std::move(a));
}

UPolyG divg(const UPolyG& a, const UPolyG& b) {
    UPolyG q, r;
    divmodg(a, b, q, r);
    if (!r.empty()) throw DomainError("inexact coefficient division in subresultant sequence");
    return q;
}

UPolyG powg(const UPolyG& a, int e) {
    UPolyG r{GaussianRational(1)};
    for (int k = 0; k < e; ++k) r = mulg(r, a);
    return r;
}

void trim_rows_g(BiG& a) {
    for (auto& row : a) trimg(row);
    while (!a.empty() && a.back().empty()) a.pop_back();
}

UPolyG content_g(const BiG& a) {
    UPolyG g;
    for (const auto& row : a) {
        if (row.empty()) continue;
        g = g.empty() ? monicg(row) : gcdg(g, row);
        if (g.size() == 1) break;
    }
    return g;
}

BiG to_big(const MultiPoly& p) {
    int du = p.degree_in(0);
    BiG r(du + 1);
    for (const auto& t : p.terms()) {
        Exponents e = unpack(t.key);
        auto& row = r[e[0]];
        if (row.size() <= e[1]) row.resize(e[1] + 1);
        row[e[1]] = t.coef;
    }
    trim_rows_g(r);
    return r;
}

MultiPoly from_big(const BiG& a, const VarList& vars) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j)
            if (!a[i][j].is_zero()) terms.push_back({pack({unsigned(i), unsigned(j), 0}), a[i][j]});
    return MultiPoly::from_terms(vars, std::move(terms));
}

BiG prem(const BiG& a, const BiG& b) {
    BiG r = a;
    const UPolyG& lc = b.back();
    int db = int(b.size()) - 1;
    int e = int(a.size()) - int(b.size()) + 1;
    while (!r.empty() && int(r.size()) - 1 >= db) {
        int dr = int(r.size()) - 1;
        UPolyG t = r.back();
        for (auto& row : r) row = mulg(row, lc);
        for (int j = 0; j <= db; ++j) r[dr - db + j] = subg(r[dr - db + j], mulg(t, b[j]));
        trim_rows_g(r);
        --e;
    }
    if (e > 0) {
        UPolyG f = powg(lc, e);
        for (auto& row : r) row = mulg(row, f);
    }
    return r;
}

BiG subresultant_gcd(BiG a, BiG b) {
    UPolyG ca = content_g(a), cb = content_g(b);
    UPolyG cont = gcdg(ca, cb);
    for (auto& row : a)
        if (!row.empty()) row = divg(row, ca);
    for (auto& row : b)
        if (!row.empty()) row = divg(row, cb);
    if (a.size() < b.size()) std::swap(a, b);
    UPolyG g{GaussianRational(1)}, h{GaussianRational(1)};
    while (true) {
        if (b.size() == 1) {
            b = BiG{UPolyG{GaussianRational(1)}};
            break;
        }
        int d = int(a.size()) - int(b.size());
        BiG r = prem(a, b);
        if (r.empty()) break;
        UPolyG div = mulg(g, powg(h, d));
        a = std::move(b);
        b = std::move(r);
        for (auto& row : b)
            if (!row.empty()) row = divg(row, div);
        g = a.back();
        if (d > 0) h = divg(powg(g, d), powg(h, d - 1));
    }
    UPolyG cb2 = content_g(b);
    for (auto& row : b)
        if (!row.empty()) row = mulg(divg(row, cb2), cont);
    return b;
}

// ---------------------------------------------------------------- drivers

GcdWithCofactors gcd_plane(const std::vector<MultiPoly>& polys) {
    const VarList& vars = polys.front().vars();
    GcdWithCofactors out;
    if (certify_bivariate(polys)) {
        out.gcd = MultiPoly(vars, 1);
        out.cofactors = polys;
        return out;
    }
    bool real = std::all_of(polys.begin(), polys.end(), [](const MultiPoly& p) { return p.is_real(); });
    if (real) {
        std::vector<mpq_class> scales(polys.size());
        std::vector<BiZ> forms;
        for (std::size_t k = 0; k < polys.size(); ++k) forms.push_back(to_biz(polys[k], scales[k]));
        BiZ g = forms[0];
        std::vector<BiZ> cof(polys.size());
        BiZ one(0, 0);
        one.at(0, 0) = 1;
        cof[0] = one;
        for (std::size_t k = 1; k < polys.size(); ++k) {
            BrownResult r = brown_gcd(g, forms[k]);
            // g = r.g * r.qa: earlier cofactors absorb r.qa.
            if (!(r.qa.du == 0 && r.qa.dv == 0 && r.qa.at(0, 0) == 1)) {
                for (std::size_t j = 0; j < k; ++j) {
                    MultiPoly prod = multiply(from_biz(cof[j], vars, 1), from_biz(r.qa, vars, 1));
                    mpq_class unit;
                    cof[j] = to_biz(prod, unit);
                    if (unit != 1) {
                        for (auto& x : cof[j].c) x *= unit.get_num();
                    }
                }
            }
            cof[k] = r.qb;
            g = r.g;
        }
        out.gcd = from_biz(g, vars, 1);
        for (std::size_t k = 0; k < polys.size(); ++k) out.cofactors.push_back(from_biz(cof[k], vars, scales[k]));
        return out;
    }
    BiG g = to_big(polys[0]);
    for (std::size_t k = 1; k < polys.size(); ++k) {
        g = subresultant_gcd(g, to_big(polys[k]));
        if (g.size() == 1 && g[0].size() == 1) break;
    }
    out.gcd = from_big(g, vars);
    for (const auto& p : polys) {
        auto q = p.divide_exact(out.gcd);
        if (!q) throw DomainError("gcd candidate does not divide its input");
        out.cofactors.push_back(std::move(*q));
    }
    return out;
}

} // namespace

GcdWithCofactors gcd_with_cofactors(std::span<const MultiPoly> polys) {
    if (polys.empty()) throw DomainError("gcd of an empty list");
    const VarList& vars = polys.front().vars();
    for (const auto& p : polys)
        if (!same_vars(p.vars(), vars)) throw DomainError("gcd over different variable lists");

    GcdWithCofactors out;
    std::vector<std::size_t> live;
    for (std::size_t k = 0; k < polys.size(); ++k)
        if (!polys[k].is_zero()) live.push_back(k);
    if (live.empty()) throw DomainError("gcd of zero polynomials");

    auto finish = [&](MultiPoly g, std::vector<MultiPoly> live_cof) {
        GaussianRational lc = g.leading_coef();
        out.gcd = g.monic();
        out.cofactors.assign(polys.size(), MultiPoly(vars));
        for (std::size_t k = 0; k < live.size(); ++k) out.cofactors[live[k]] = live_cof[k] * lc;
        return out;
    };

    std::vector<MultiPoly> work;
    for (auto k : live) work.push_back(polys[k]);
    for (const auto& p : work)
        if (p.is_constant()) return finish(MultiPoly(vars, 1), work);

    Exponents mono = work[0].min_exponents();
    for (const auto& p : work) {
        Exponents e = p.min_exponents();
        for (int v = 0; v < 3; ++v) mono[v] = std::min(mono[v], e[v]);
    }
    bool has_mono = mono[0] || mono[1] || mono[2];
    if (has_mono)
        for (auto& p : work) p = p.div_monomial(mono);

    MultiPoly g(vars, 1);
    std::vector<MultiPoly> cof = work;
    bool trivial = std::any_of(work.begin(), work.end(), [](const MultiPoly& p) { return p.is_constant(); });
    if (!trivial) {
        if (work.front().nvars() == 3) {
            for (const auto& p : work)
                if (!p.is_homogeneous()) throw DomainError("gcd in three variables requires homogeneous inputs");
            std::vector<MultiPoly> planar;
            for (const auto& p : work) planar.push_back(p.dehomogenize(plane_vars()));
            GcdWithCofactors r = gcd_plane(planar);
            unsigned dg = unsigned(r.gcd.total_degree());
            g = r.gcd.homogenize(vars, dg);
            for (std::size_t k = 0; k < work.size(); ++k)
                cof[k] = r.cofactors[k].homogenize(vars, unsigned(work[k].total_degree()) - dg);
        } else {
            GcdWithCofactors r = gcd_plane(work);
            g = std::move(r.gcd);
            cof = std::move(r.cofactors);
        }
    }
    if (has_mono) g = g.mul_monomial(mono);
    return finish(std::move(g), std::move(cof));
}

MultiPoly poly_gcd(std::span<const MultiPoly> polys) { return gcd_with_cofactors(polys).gcd; }

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
    std::array<MultiPoly, 2> v{a, b};
    return poly_gcd(std::span<const MultiPoly>(v));
}

bool certify_coprime(std::span<const MultiPoly> polys) {
    std::vector<MultiPoly> work;
    for (const auto& p : polys)
        if (!p.is_zero()) work.push_back(p);
    if (work.empty()) return false;
    for (const auto& p : work)
        if (p.is_constant()) return true;
    if (work.front().nvars() == 3) {
        Exponents mono = work[0].min_exponents();
        for (const auto& p : work) {
            Exponents e = p.min_exponents();
            for (int v = 0; v < 3; ++v) mono[v] = std::min(mono[v], e[v]);
        }
        if (mono[0] || mono[1] || mono[2]) return false;
        for (auto& p : work) {
            if (!p.is_homogeneous()) return false;
            p = p.dehomogenize(plane_vars());
        }
    }
    return certify_bivariate(work);
}

} // namespace birat
