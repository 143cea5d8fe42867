#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace birat {

// Exact element a+bi of Q(i). Both parts are kept canonical by GMP.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long v) : re_(v) {}
    GaussianRational(int v) : re_(v) {}
    GaussianRational(mpq_class re, mpq_class im = 0);

    static GaussianRational i() { return GaussianRational(0, 1); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_integer() const;

    GaussianRational conj() const { return {re_, -im_}; }
    mpq_class norm() const { return re_ * re_ + im_ * im_; }
    GaussianRational inverse() const;
    GaussianRational pow(long e) const;

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    GaussianRational operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    // Text form of the scalar grammar: RAT | RAT "i" | RAT (+|-) RAT "i".
    std::string str() const;
    double to_double_re() const { return re_.get_d(); }
    double to_double_im() const { return im_.get_d(); }

private:
    mpq_class re_;
    mpq_class im_;
};

GaussianRational parse_scalar(std::string_view text);
std::string format_scalar(const GaussianRational& v);

// Exact square root in Q(i) if one exists, principal branch
// (positive real part, or zero real part and non-negative imaginary part).
bool gaussian_sqrt(const GaussianRational& v, GaussianRational& out);

std::ostream& operator<<(std::ostream& os, const GaussianRational& v);

} // namespace birat
