#include "modular.hpp"

#include <deque>
#include <mutex>

namespace birat::detail {

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

GaussPrime make_gauss_prime(u64 p) {
    for (u64 c = 2;; ++c) {
        // c is a non-residue iff c^((p-1)/2) = -1.
        if (powmod(c, (p - 1) / 2, p) == p - 1) return {p, powmod(c, (p - 1) / 4, p)};
    }
}

} // namespace

const GaussPrime& gauss_prime(std::size_t index) {
    static std::mutex mu;
    static std::deque<GaussPrime> primes; // stable references
    std::lock_guard<std::mutex> lock(mu);
    while (primes.size() <= index) {
        u64 start = primes.empty() ? (u64(1) << 62) - 3 : primes.back().p - 4;
        // Keep p = 1 (mod 4).
        while (start % 4 != 1) --start;
        u64 n = start;
        while (!is_prime(n)) n -= 4;
        primes.push_back(make_gauss_prime(n));
    }
    return primes[index];
}

u64 mpz_mod(const mpz_class& z, u64 p) {
    static_assert(sizeof(unsigned long) == 8, "64-bit unsigned long required");
    return mpz_fdiv_ui(z.get_mpz_t(), p);
}

void trim(UPolyP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 eval(const UPolyP& a, u64 x, u64 p) {
    u64 r = 0;
    for (std::size_t i = a.size(); i-- > 0;) r = addmod(mulmod(r, x, p), a[i], p);
    return r;
}

UPolyP mul(const UPolyP& a, const UPolyP& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    UPolyP r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = addmod(r[i + j], mulmod(a[i], b[j], p), p);
    }
    trim(r);
    return r;
}

UPolyP monic(UPolyP a, u64 p) {
    trim(a);
    if (a.empty() || a.back() == 1) return a;
    u64 inv = invmod(a.back(), p);
    for (auto& c : a) c = mulmod(c, inv, p);
    return a;
}

void divmod(const UPolyP& a, const UPolyP& b, u64 p, UPolyP& q, UPolyP& r) {
    r = a;
    trim(r);
    q.clear();
    if (deg(r) < deg(b)) return;
    q.assign(r.size() - b.size() + 1, 0);
    u64 inv = invmod(b.back(), p);
    for (int i = deg(r); i >= deg(b); --i) {
        u64 c = mulmod(r[i], inv, p);
        if (c == 0) continue;
        int shift = i - deg(b);
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] = submod(r[shift + j], mulmod(c, b[j], p), p);
    }
    trim(r);
    trim(q);
}

UPolyP div_exact(const UPolyP& a, const UPolyP& b, u64 p) {
    UPolyP q, r;
    divmod(a, b, p, q, r);
    return q;
}

UPolyP gcd(UPolyP a, UPolyP b, u64 p) {
    trim(a);
    trim(b);
    UPolyP q, r;
    while (!b.empty()) {
        divmod(a, b, p, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(std::move(a), p);
}

mpz_class symmetric(const mpz_class& a, const mpz_class& m) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    mpz_class half = m >> 1;
    if (r > half) r -= m;
    return r;
}

} // namespace birat::detail
