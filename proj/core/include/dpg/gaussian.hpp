#pragma once

#include <gmpxx.h>

#include <string>

namespace dpg {

using Integer = mpz_class;
using Rational = mpq_class;

/// Gaussian integer a + b i with arbitrary-precision parts.
struct GaussInt {
    Integer re;
    Integer im;

    GaussInt() = default;
    GaussInt(long r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)
    GaussInt(Integer r, Integer i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

    GaussInt& operator+=(const GaussInt& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussInt& operator-=(const GaussInt& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussInt& operator*=(const Integer& k) {
        re *= k;
        im *= k;
        return *this;
    }

    friend GaussInt operator+(GaussInt a, const GaussInt& b) { return a += b; }
    friend GaussInt operator-(GaussInt a, const GaussInt& b) { return a -= b; }
    friend GaussInt operator-(const GaussInt& a) { return {Integer(-a.re), Integer(-a.im)}; }
    friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
        return {Integer(a.re * b.re - a.im * b.im), Integer(a.re * b.im + a.im * b.re)};
    }
    friend bool operator==(const GaussInt& a, const GaussInt& b) { return a.re == b.re && a.im == b.im; }

    GaussInt conj() const { return {re, Integer(-im)}; }
    Integer norm() const { return re * re + im * im; }
};

/// Gaussian rational a + b i, each part a canonical mpq.
class GaussRat {
public:
    GaussRat() = default;
    GaussRat(long r) : re_(r), im_(0) {}  // NOLINT(google-explicit-constructor)
    GaussRat(Rational r) : re_(std::move(r)), im_(0) {}  // NOLINT(google-explicit-constructor)
    GaussRat(Rational r, Rational i) : re_(std::move(r)), im_(std::move(i)) {}

    static GaussRat i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussRat conj() const { return {re_, Rational(-im_)}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }
    GaussRat inverse() const;

    GaussRat& operator+=(const GaussRat& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussRat& operator-=(const GaussRat& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussRat& operator*=(const GaussRat& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        im_ = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        return *this;
    }
    GaussRat& operator/=(const GaussRat& o) { return *this *= o.inverse(); }

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
    friend GaussRat operator-(const GaussRat& a) { return {Rational(-a.re_), Rational(-a.im_)}; }
    friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

    /// "a/b", "c/d*i" or "a/b+c/d*i".
    std::string str() const;

private:
    Rational re_{0};
    Rational im_{0};
};

/// Greatest common divisor of all parts, always non-negative.
Integer content_gcd(const Integer& acc, const GaussInt& z);

}  // namespace dpg
