#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dpg/gaussian.hpp"

namespace dpg {

/// Univariate polynomial in v over Q(i).
///
/// Stored as Gaussian-integer numerators sharing one positive integer
/// denominator. The representation is canonical: no trailing zero
/// coefficients, and the gcd of the denominator with every numerator part is 1.
/// The zero polynomial has no coefficients and denominator 1.
class QiPoly {
public:
    QiPoly() = default;
    QiPoly(long c) : QiPoly(GaussRat(c)) {}  // NOLINT(google-explicit-constructor)
    QiPoly(const GaussRat& c);               // NOLINT(google-explicit-constructor)
    QiPoly(std::vector<GaussInt> numerators, Integer denominator);

    /// c * v^k
    static QiPoly monomial(const GaussRat& c, std::size_t k);
    static QiPoly from_coefficients(const std::vector<GaussRat>& coeffs);

    bool is_zero() const { return num_.empty(); }
    bool is_constant() const { return num_.size() <= 1; }
    bool is_one() const;
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(num_.size()) - 1; }
    std::size_t size() const { return num_.size(); }

    GaussRat coeff(std::size_t k) const;
    GaussRat leading() const { return coeff(num_.size() - 1); }
    const std::vector<GaussInt>& numerators() const { return num_; }
    const Integer& denominator() const { return den_; }

    /// Lowest exponent carrying a nonzero coefficient (0 for the zero polynomial).
    std::size_t low_degree() const;
    /// gcd of all exponents with nonzero coefficients (0 for constants).
    std::size_t exponent_gcd() const;
    /// True if no coefficient has an imaginary part.
    bool is_real() const;

    QiPoly monic() const;
    QiPoly conj() const;
    /// p(v) -> p(v^k)
    QiPoly inflate(std::size_t k) const;
    /// p(v^k) -> p(v); requires every exponent to be a multiple of k.
    QiPoly deflate(std::size_t k) const;
    /// p * v^k
    QiPoly shift_up(std::size_t k) const;
    /// p / v^k; requires low_degree() >= k.
    QiPoly shift_down(std::size_t k) const;

    QiPoly& operator+=(const QiPoly& o);
    QiPoly& operator-=(const QiPoly& o);
    QiPoly& operator*=(const QiPoly& o);
    QiPoly& operator*=(const GaussRat& c);

    friend QiPoly operator+(QiPoly a, const QiPoly& b) { return a += b; }
    friend QiPoly operator-(QiPoly a, const QiPoly& b) { return a -= b; }
    friend QiPoly operator*(const QiPoly& a, const QiPoly& b);
    friend QiPoly operator*(QiPoly a, const GaussRat& c) { return a *= c; }
    friend QiPoly operator-(const QiPoly& a);
    friend bool operator==(const QiPoly& a, const QiPoly& b) { return a.den_ == b.den_ && a.num_ == b.num_; }

    /// Horner evaluation in any ring that accepts GaussRat coefficients.
    template <class R>
    R evaluate(const R& x, R (*lift)(const GaussRat&)) const {
        R acc = lift(GaussRat(0));
        for (std::size_t k = num_.size(); k-- > 0;) {
            acc = acc * x + lift(coeff(k));
        }
        return acc;
    }

    /// Terms in ascending order: "(c0)+(c1)*v+(c2)*v^2".
    std::string str(const char* var = "v") const;

private:
    void normalize();

    std::vector<GaussInt> num_;
    Integer den_{1};
};

/// Quotient and remainder of Euclidean division over Q(i); divisor nonzero.
std::pair<QiPoly, QiPoly> divmod(const QiPoly& a, const QiPoly& b);

/// a / b where b is known to divide a; throws std::logic_error otherwise.
QiPoly exact_div(const QiPoly& a, const QiPoly& b);

/// Monic greatest common divisor over Q(i) (zero only when both inputs are zero).
QiPoly gcd(const QiPoly& a, const QiPoly& b);

/// Reference gcd: plain Euclidean algorithm over Q(i) without the modular
/// fast path. Slow on large inputs; kept as an independent oracle.
QiPoly gcd_euclid(const QiPoly& a, const QiPoly& b);

}  // namespace dpg
