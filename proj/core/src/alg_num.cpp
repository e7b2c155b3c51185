#include "dpg/alg_num.hpp"

#include <stdexcept>
#include <vector>

namespace dpg {

AlgNum AlgNum::generator(long q0) {
    if (q0 < 1) throw std::invalid_argument("q0 must be a positive integer");
    Integer n(q0), r;
    AlgNum g;
    if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), 4) != 0) {
        g.k_ = 1;
        g.c_ = r.get_si();
        g.a_[0] = GaussRat(g.c_);
    } else if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), 2) != 0) {
        g.k_ = 2;
        g.c_ = r.get_si();
        g.a_[1] = GaussRat(1);
    } else {
        g.k_ = 4;
        g.c_ = q0;
        g.a_[1] = GaussRat(1);
    }
    return g;
}

long AlgNum::q0() const {
    switch (k_) {
        case 1: return c_ * c_ * c_ * c_;
        case 2: return c_ * c_;
        case 4: return c_;
        default: return 0;
    }
}

bool AlgNum::is_zero() const {
    for (const auto& x : a_) {
        if (!x.is_zero()) return false;
    }
    return true;
}

bool AlgNum::is_gauss_rational() const { return a_[1].is_zero() && a_[2].is_zero() && a_[3].is_zero(); }

bool AlgNum::is_rational() const { return is_gauss_rational() && a_[0].is_real(); }

Rational AlgNum::to_rational() const {
    if (!is_rational()) throw std::logic_error("AlgNum value is not rational");
    return a_[0].re();
}

AlgNum AlgNum::conj() const {
    AlgNum r = *this;
    for (auto& x : r.a_) x = x.conj();
    return r;
}

void AlgNum::adopt(const AlgNum& o) {
    if (o.k_ == 0) return;
    if (k_ == 0) {
        k_ = o.k_;
        c_ = o.c_;
    } else if (k_ != o.k_ || c_ != o.c_) {
        throw std::logic_error("AlgNum values from different fields");
    }
}

AlgNum& AlgNum::operator+=(const AlgNum& o) {
    adopt(o);
    for (int j = 0; j < 4; ++j) {
        if (!o.a_[j].is_zero()) a_[j] += o.a_[j];
    }
    return *this;
}

AlgNum& AlgNum::operator-=(const AlgNum& o) {
    adopt(o);
    for (int j = 0; j < 4; ++j) {
        if (!o.a_[j].is_zero()) a_[j] -= o.a_[j];
    }
    return *this;
}

AlgNum operator-(const AlgNum& a) {
    AlgNum r = a;
    for (auto& x : r.a_) x = -x;
    return r;
}

AlgNum operator*(const AlgNum& a, const AlgNum& b) {
    AlgNum r;
    r.k_ = a.k_;
    r.c_ = a.c_;
    r.adopt(b);
    int k = r.k_ == 0 ? 1 : r.k_;
    std::array<GaussRat, 7> prod{};
    for (int j = 0; j < k; ++j) {
        if (a.a_[j].is_zero()) continue;
        for (int l = 0; l < k; ++l) {
            if (!b.a_[l].is_zero()) prod[j + l] += a.a_[j] * b.a_[l];
        }
    }
    GaussRat c(r.c_);
    for (int j = 2 * k - 2; j >= k; --j) {
        if (!prod[j].is_zero()) prod[j - k] += c * prod[j];
    }
    for (int j = 0; j < k; ++j) r.a_[j] = prod[j];
    return r;
}

AlgNum AlgNum::negate_odd() const {
    AlgNum r = *this;
    r.a_[1] = -r.a_[1];
    r.a_[3] = -r.a_[3];
    return r;
}

AlgNum AlgNum::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in number field");
    if (k_ <= 1) {
        AlgNum r = *this;
        r.a_[0] = a_[0].inverse();
        return r;
    }
    GaussRat c(c_);
    AlgNum partner = negate_odd();
    AlgNum y = *this * partner;  // even in s
    if (k_ == 2) {
        GaussRat n = y.a_[0];
        return partner * AlgNum(n.inverse());
    }
    // y = b0 + b2 s^2 with (s^2)^2 = c
    AlgNum z = y;
    z.a_[2] = -z.a_[2];
    GaussRat n = y.a_[0] * y.a_[0] - y.a_[2] * y.a_[2] * c;
    return partner * z * AlgNum(n.inverse());
}

std::string AlgNum::str() const {
    if (is_gauss_rational()) return a_[0].str();
    std::string out;
    for (int j = 0; j < 4; ++j) {
        if (a_[j].is_zero()) continue;
        if (!out.empty()) out += "+";
        out += "(" + a_[j].str() + ")";
        if (j >= 1) out += "*s";
        if (j >= 2) out += "^" + std::to_string(j);
    }
    return out;
}

namespace {

AlgNum eval_poly(const QiPoly& p, const AlgNum& gen) {
    int k = gen.degree();
    Integer c(gen.modulus_constant());
    std::array<Rational, 4> re{}, im{};
    Integer cpow = 1;
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (j > 0 && j % k == 0) cpow *= c;
        const GaussInt& z = p.numerators()[j];
        if (z.is_zero()) continue;
        re[j % k] += Rational(z.re * cpow);
        im[j % k] += Rational(z.im * cpow);
    }
    AlgNum out = gen * AlgNum(0);  // zero tagged with the field
    AlgNum s_pow(1);
    Rational inv_den(1, 1);
    inv_den /= Rational(p.denominator());
    for (int j = 0; j < k; ++j) {
        GaussRat coeff(Rational(re[j] * inv_den), Rational(im[j] * inv_den));
        if (!coeff.is_zero()) out += s_pow * AlgNum(coeff);
        s_pow *= gen;
    }
    return out;
}

}  // namespace

AlgNum eval_at(const Scalar& s, long q0) {
    AlgNum gen = AlgNum::generator(q0);
    AlgNum n = eval_poly(s.num(), gen);
    if (s.is_polynomial()) return n;
    AlgNum d = eval_poly(s.den(), gen);
    if (d.is_zero()) throw std::domain_error("pole at q0");
    return n * d.inverse();
}

int real_sign(const AlgNum& a) {
    for (int j = 0; j < 4; ++j) {
        if (!a.coeff(j).is_real()) throw std::domain_error("value is not real");
    }
    if (a.is_zero()) return 0;
    const int k = a.degree();
    if (k <= 1) return sgn(a.coeff(0).re());
    // s = c^{1/k} lies in [lo, hi]
    const Rational c(a.modulus_constant());
    Rational lo(0), hi = c + 1;
    auto power = [](const Rational& x, int n) {
        Rational r(1);
        for (int i = 0; i < n; ++i) r *= x;
        return r;
    };
    for (int iter = 0; iter < 4096; ++iter) {
        Rational low(0), high(0);
        for (int j = 0; j < k; ++j) {
            const Rational& cj = a.coeff(j).re();
            Rational p = power(lo, j), r = power(hi, j);
            if (sgn(cj) >= 0) {
                low += cj * p;
                high += cj * r;
            } else {
                low += cj * r;
                high += cj * p;
            }
        }
        if (sgn(low) > 0) return 1;
        if (sgn(high) < 0) return -1;
        Rational mid = (lo + hi) / 2;
        if (power(mid, k) <= c) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    throw std::domain_error("sign not decided");
}

}  // namespace dpg
