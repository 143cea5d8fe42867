#include "birat/gaussian_rational.hpp"

#include "birat/error.hpp"

#include <cctype>
#include <ostream>

namespace birat {

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

bool GaussianRational::is_integer() const {
    return sgn(im_) == 0 && re_.get_den() == 1;
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw DomainError("division by zero in Q(i)");
    mpq_class n = norm();
    return {re_ / n, -im_ / n};
}

GaussianRational GaussianRational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    GaussianRational result(1), base(*this);
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw DomainError("division by zero in Q(i)");
    if (sgn(o.im_) == 0) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

std::string GaussianRational::str() const { return format_scalar(*this); }

std::string format_scalar(const GaussianRational& v) {
    if (sgn(v.im()) == 0) return v.re().get_str();
    if (sgn(v.re()) == 0) return v.im().get_str() + "i";
    mpq_class a = abs(v.im());
    return v.re().get_str() + (sgn(v.im()) > 0 ? "+" : "-") + a.get_str() + "i";
}

namespace {

struct ScalarScanner {
    std::string_view text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
        std::size_t end = at;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
        std::string tok(text.substr(at, end - at));
        if (tok.empty()) tok = "<end of input>";
        throw ParseError("malformed scalar \"" + std::string(text) + "\": " + msg + " at '" + tok + "'", tok, at);
    }

    bool digit() const { return pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])); }

    std::string digits() {
        std::size_t start = pos;
        while (digit()) ++pos;
        return std::string(text.substr(start, pos - start));
    }

    // Unsigned RAT; returns false if no digits at the current position.
    bool rat(mpq_class& out) {
        std::size_t start = pos;
        if (!digit()) return false;
        mpz_class num(digits());
        mpz_class den(1);
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            if (!digit()) fail("expected denominator", pos);
            den = mpz_class(digits());
            if (den == 0) fail("zero denominator", start);
        }
        out = mpq_class(num, den);
        out.canonicalize();
        return true;
    }
};

} // namespace

GaussianRational parse_scalar(std::string_view input) {
    std::size_t b = 0, e = input.size();
    while (b < e && std::isspace(static_cast<unsigned char>(input[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(input[e - 1]))) --e;
    ScalarScanner s{input.substr(b, e - b)};
    if (s.text.empty()) s.fail("empty scalar", 0);

    int sign = 1;
    if (s.text[0] == '+' || s.text[0] == '-') {
        sign = s.text[0] == '-' ? -1 : 1;
        s.pos = 1;
    }
    mpq_class first(1);
    bool had_digits = s.rat(first);
    if (!had_digits && !(s.pos < s.text.size() && s.text[s.pos] == 'i')) s.fail("expected a number", s.pos);
    first *= sign;

    if (s.pos == s.text.size()) return {first, 0};
    if (s.text[s.pos] == 'i') {
        ++s.pos;
        if (s.pos != s.text.size()) s.fail("unexpected trailing text", s.pos);
        return {0, first};
    }
    if (!had_digits) s.fail("expected a number", s.pos);
    if (s.text[s.pos] != '+' && s.text[s.pos] != '-') s.fail("unexpected character", s.pos);
    int isign = s.text[s.pos] == '-' ? -1 : 1;
    ++s.pos;
    mpq_class second(1);
    s.rat(second);
    if (s.pos >= s.text.size() || s.text[s.pos] != 'i') s.fail("expected imaginary unit 'i'", s.pos);
    ++s.pos;
    if (s.pos != s.text.size()) s.fail("unexpected trailing text", s.pos);
    return {first, second * isign};
}

namespace {

bool rational_sqrt(const mpq_class& q, mpq_class& out) {
    if (sgn(q) < 0) return false;
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return false;
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
    out = mpq_class(n, d);
    out.canonicalize();
    return true;
}

} // namespace

bool gaussian_sqrt(const GaussianRational& v, GaussianRational& out) {
    const mpq_class& a = v.re();
    const mpq_class& b = v.im();
    if (sgn(b) == 0) {
        mpq_class r;
        if (sgn(a) >= 0) {
            if (!rational_sqrt(a, r)) return false;
            out = GaussianRational(r, 0);
        } else {
            if (!rational_sqrt(-a, r)) return false;
            out = GaussianRational(0, r);
        }
        return true;
    }
    mpq_class modulus;
    if (!rational_sqrt(a * a + b * b, modulus)) return false;
    mpq_class x, y;
    if (!rational_sqrt((modulus + a) / 2, x)) return false;
    if (!rational_sqrt((modulus - a) / 2, y)) return false;
    if (sgn(b) < 0) y = -y;
    out = GaussianRational(x, y);
    return true;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& v) { return os << format_scalar(v); }

} // namespace birat
