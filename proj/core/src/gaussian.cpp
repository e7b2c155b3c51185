#include "dpg/gaussian.hpp"

#include <stdexcept>

namespace dpg {

GaussRat GaussRat::inverse() const {
    Rational n = norm();
    if (sgn(n) == 0) throw std::domain_error("division by zero in Q(i)");
    return {Rational(re_ / n), Rational(-im_ / n)};
}

std::string GaussRat::str() const {
    if (sgn(im_) == 0) return re_.get_str();
    std::string imag = im_ == 1 ? std::string("i") : im_ == -1 ? std::string("-i") : im_.get_str() + "*i";
    if (sgn(re_) == 0) return imag;
    return re_.get_str() + (sgn(im_) > 0 ? "+" : "") + imag;
}

Integer content_gcd(const Integer& acc, const GaussInt& z) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), acc.get_mpz_t(), z.re.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.im.get_mpz_t());
    return g;
}

}  // namespace dpg
