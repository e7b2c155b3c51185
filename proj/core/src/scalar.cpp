#include "dpg/scalar.hpp"

#include <stdexcept>

namespace dpg {

Scalar::Scalar(QiPoly num, QiPoly den) {
    if (den.is_zero()) throw std::domain_error("division by zero in Q(i)(v)");
    if (num.is_zero()) return;
    QiPoly g = gcd(num, den);
    if (!g.is_one()) {
        num = exact_div(num, g);
        den = exact_div(den, g);
    }
    GaussRat lc = den.leading();
    if (!(lc == GaussRat(1))) {
        GaussRat inv = lc.inverse();
        num *= inv;
        den *= inv;
    }
    num_ = std::move(num);
    den_ = std::move(den);
}

Scalar Scalar::v_pow(long k) {
    if (k >= 0) return Scalar(QiPoly::monomial(GaussRat(1), static_cast<std::size_t>(k)));
    return raw(QiPoly(1), QiPoly::monomial(GaussRat(1), static_cast<std::size_t>(-k)));
}

Scalar Scalar::q_pow(const Rational& e) {
    Rational four_e = e * 4;
    if (four_e.get_den() != 1 || !four_e.get_num().fits_slong_p()) {
        throw std::invalid_argument("q exponent must be a multiple of 1/4");
    }
    return v_pow(four_e.get_num().get_si());
}

Scalar Scalar::conj() const {
    if (num_.is_real() && den_.is_real()) return *this;
    return raw(num_.conj(), den_.conj());
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(i)(v)");
    GaussRat inv = num_.leading().inverse();
    return raw(den_ * inv, num_ * inv);
}

Scalar Scalar::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    Scalar result(1);
    Scalar base = *this;
    while (k) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return result;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_.is_one() && b.den_.is_one()) return Scalar(a.num_ + b.num_);
    if (a.den_ == b.den_) {
        QiPoly n = a.num_ + b.num_;
        if (n.is_zero()) return {};
        QiPoly g = gcd(n, a.den_);
        if (g.is_one()) return Scalar::raw(std::move(n), a.den_);
        return Scalar::raw(exact_div(n, g), exact_div(a.den_, g));
    }
    QiPoly g = gcd(a.den_, b.den_);
    if (g.is_one()) {
        return Scalar::raw(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    QiPoly ad = exact_div(a.den_, g);
    QiPoly bd = exact_div(b.den_, g);
    QiPoly n = a.num_ * bd + b.num_ * ad;
    if (n.is_zero()) return {};
    QiPoly d = ad * b.den_;
    QiPoly g2 = gcd(n, g);
    if (!g2.is_one()) {
        n = exact_div(n, g2);
        d = exact_div(d, g2);
    }
    return Scalar::raw(std::move(n), std::move(d));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_.is_one() && b.den_.is_one()) return Scalar(a.num_ * b.num_);
    QiPoly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
    if (!bd.is_one()) {
        QiPoly g = gcd(an, bd);
        if (!g.is_one()) {
            an = exact_div(an, g);
            bd = exact_div(bd, g);
        }
    }
    if (!ad.is_one()) {
        QiPoly g = gcd(bn, ad);
        if (!g.is_one()) {
            bn = exact_div(bn, g);
            ad = exact_div(ad, g);
        }
    }
    return Scalar::raw(an * bn, ad * bd);
}

std::string Scalar::str() const {
    if (den_.is_one()) return num_.str();
    return "[" + num_.str() + "]/[" + den_.str() + "]";
}

}  // namespace dpg
