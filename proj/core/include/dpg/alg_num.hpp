#pragma once

#include <array>
#include <string>

#include "dpg/scalar.hpp"

namespace dpg {

/// Element of Q(i)[s]/(s^k - c), where s is the real positive fourth root
/// of a concrete integer q0 and s^k - c is its minimal polynomial:
/// k = 1 when q0 is a fourth power, k = 2 when q0 is a square, else k = 4.
///
/// A value with k = 0 is a plain Gaussian rational that has not met any
/// field yet; it combines with elements of any field.
class AlgNum {
public:
    AlgNum() = default;
    AlgNum(long c) : a_{GaussRat(c)} {}  // NOLINT(google-explicit-constructor)
    AlgNum(const GaussRat& c) : a_{c} {}  // NOLINT(google-explicit-constructor)
    explicit AlgNum(const Rational& c) : a_{GaussRat(c)} {}

    /// The generator s = q0^{1/4}.
    static AlgNum generator(long q0);

    int degree() const { return k_; }
    long modulus_constant() const { return c_; }
    long q0() const;
    const GaussRat& coeff(int j) const { return a_[j]; }

    bool is_zero() const;
    /// True when the value lies in Q(i).
    bool is_gauss_rational() const;
    /// True when the value is rational (no s, no i).
    bool is_rational() const;
    Rational to_rational() const;

    AlgNum conj() const;
    AlgNum inverse() const;

    AlgNum& operator+=(const AlgNum& o);
    AlgNum& operator-=(const AlgNum& o);
    AlgNum& operator*=(const AlgNum& o) { return *this = *this * o; }
    AlgNum& operator/=(const AlgNum& o) { return *this = *this * o.inverse(); }

    friend AlgNum operator+(AlgNum a, const AlgNum& b) { return a += b; }
    friend AlgNum operator-(AlgNum a, const AlgNum& b) { return a -= b; }
    friend AlgNum operator*(const AlgNum& a, const AlgNum& b);
    friend AlgNum operator/(const AlgNum& a, const AlgNum& b) { return a * b.inverse(); }
    friend AlgNum operator-(const AlgNum& a);
    friend bool operator==(const AlgNum& a, const AlgNum& b) { return a.a_ == b.a_; }
    friend bool operator!=(const AlgNum& a, const AlgNum& b) { return !(a == b); }

    /// "(c0)+(c1)*s+..." with s the fourth root of q0; plain Gaussian
    /// rationals print as GaussRat::str().
    std::string str() const;

private:
    void adopt(const AlgNum& o);
    AlgNum negate_odd() const;

    std::array<GaussRat, 4> a_{};
    int k_ = 0;
    long c_ = 0;
};

/// Image of s under v -> q0^{1/4}. Throws std::domain_error "pole at q0"
/// when the denominator vanishes.
AlgNum eval_at(const Scalar& s, long q0);

/// Sign of a real value (-1, 0 or 1), decided exactly by bisecting a
/// rational interval around the fourth root. Throws std::domain_error when
/// the value is not real.
int real_sign(const AlgNum& a);

inline bool is_zero(const AlgNum& a) { return a.is_zero(); }
inline AlgNum conj(const AlgNum& a) { return a.conj(); }
inline std::string to_string(const AlgNum& a) { return a.str(); }

}  // namespace dpg
