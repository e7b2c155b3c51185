#pragma once

#include <string>

#include "dpg/qi_poly.hpp"

namespace dpg {

/// Element of Q(i)(v), the rational functions in v over the Gaussian
/// rationals, where v stands for q^{1/4}.
///
/// Stored as num/den with gcd(num, den) = 1 and den monic, so equality is
/// plain coefficient equality.
class Scalar {
public:
    Scalar() = default;
    Scalar(long c) : num_(c) {}  // NOLINT(google-explicit-constructor)
    Scalar(const GaussRat& c) : num_(c) {}  // NOLINT(google-explicit-constructor)
    explicit Scalar(const Rational& c) : num_(GaussRat(c)) {}
    explicit Scalar(QiPoly num) : num_(std::move(num)) {}
    Scalar(QiPoly num, QiPoly den);

    static Scalar i() { return Scalar(GaussRat::i()); }
    static Scalar v() { return v_pow(1); }
    static Scalar q() { return v_pow(4); }
    /// v^k for any integer k.
    static Scalar v_pow(long k);
    /// q^k for integer k.
    static Scalar q_pow(long k) { return v_pow(4 * k); }
    /// q^e for e a multiple of 1/4.
    static Scalar q_pow(const Rational& e);

    const QiPoly& num() const { return num_; }
    const QiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    Scalar conj() const;
    Scalar inverse() const;
    Scalar pow(long k) const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
    friend Scalar operator-(const Scalar& a) {
        Scalar r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// "p" for polynomials, "[p]/[d]" otherwise, with p and d in QiPoly::str form.
    std::string str() const;

private:
    static Scalar raw(QiPoly num, QiPoly den) {
        Scalar s;
        s.num_ = std::move(num);
        s.den_ = std::move(den);
        return s;
    }

    QiPoly num_;
    QiPoly den_{1};
};

inline bool is_zero(const Scalar& s) { return s.is_zero(); }
inline Scalar conj(const Scalar& s) { return s.conj(); }
inline std::string to_string(const Scalar& s) { return s.str(); }

}  // namespace dpg
