#include "dpg/qi_poly.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "modular.hpp"

namespace dpg {

namespace {

Integer lcm_int(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

GaussInt scaled(const GaussRat& c, const Integer& den) {
    Integer re = c.re().get_num() * (den / c.re().get_den());
    Integer im = c.im().get_num() * (den / c.im().get_den());
    return {std::move(re), std::move(im)};
}

Integer common_den(const GaussRat& c) { return lcm_int(c.re().get_den(), c.im().get_den()); }

}  // namespace

QiPoly::QiPoly(const GaussRat& c) {
    if (c.is_zero()) return;
    den_ = common_den(c);
    num_.push_back(scaled(c, den_));
}

QiPoly::QiPoly(std::vector<GaussInt> numerators, Integer denominator)
    : num_(std::move(numerators)), den_(std::move(denominator)) {
    if (sgn(den_) == 0) throw std::domain_error("zero denominator");
    normalize();
}

QiPoly QiPoly::monomial(const GaussRat& c, std::size_t k) {
    QiPoly p(c);
    return p.shift_up(k);
}

QiPoly QiPoly::from_coefficients(const std::vector<GaussRat>& coeffs) {
    Integer den = 1;
    for (const auto& c : coeffs) den = lcm_int(den, common_den(c));
    std::vector<GaussInt> num;
    num.reserve(coeffs.size());
    for (const auto& c : coeffs) num.push_back(scaled(c, den));
    return {std::move(num), std::move(den)};
}

void QiPoly::normalize() {
    while (!num_.empty() && num_.back().is_zero()) num_.pop_back();
    if (num_.empty()) {
        den_ = 1;
        return;
    }
    if (sgn(den_) < 0) {
        den_ = -den_;
        for (auto& c : num_) c = -c;
    }
    if (den_ == 1) return;
    Integer g = den_;
    for (const auto& c : num_) {
        g = content_gcd(g, c);
        if (g == 1) return;
    }
    den_ /= g;
    for (auto& c : num_) {
        mpz_divexact(c.re.get_mpz_t(), c.re.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(c.im.get_mpz_t(), c.im.get_mpz_t(), g.get_mpz_t());
    }
}

bool QiPoly::is_one() const { return num_.size() == 1 && den_ == 1 && num_[0].re == 1 && sgn(num_[0].im) == 0; }

GaussRat QiPoly::coeff(std::size_t k) const {
    if (k >= num_.size()) return GaussRat(0);
    Rational re(num_[k].re, den_);
    Rational im(num_[k].im, den_);
    re.canonicalize();
    im.canonicalize();
    return {std::move(re), std::move(im)};
}

std::size_t QiPoly::low_degree() const {
    for (std::size_t k = 0; k < num_.size(); ++k) {
        if (!num_[k].is_zero()) return k;
    }
    return 0;
}

std::size_t QiPoly::exponent_gcd() const {
    std::size_t g = 0;
    for (std::size_t k = 1; k < num_.size(); ++k) {
        if (!num_[k].is_zero()) g = std::gcd(g, k);
    }
    return g;
}

bool QiPoly::is_real() const {
    return std::all_of(num_.begin(), num_.end(), [](const GaussInt& c) { return sgn(c.im) == 0; });
}

QiPoly QiPoly::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
}

QiPoly QiPoly::conj() const {
    QiPoly r = *this;
    for (auto& c : r.num_) c.im = -c.im;
    return r;
}

QiPoly QiPoly::inflate(std::size_t k) const {
    if (k <= 1 || is_constant()) return *this;
    QiPoly r;
    r.den_ = den_;
    r.num_.assign((num_.size() - 1) * k + 1, GaussInt{});
    for (std::size_t j = 0; j < num_.size(); ++j) r.num_[j * k] = num_[j];
    return r;
}

QiPoly QiPoly::deflate(std::size_t k) const {
    if (k <= 1 || is_constant()) return *this;
    QiPoly r;
    r.den_ = den_;
    r.num_.reserve(num_.size() / k + 1);
    for (std::size_t j = 0; j < num_.size(); ++j) {
        if (j % k == 0) {
            r.num_.push_back(num_[j]);
        } else if (!num_[j].is_zero()) {
            throw std::logic_error("deflate: exponent not divisible");
        }
    }
    return r;
}

QiPoly QiPoly::shift_up(std::size_t k) const {
    if (k == 0 || is_zero()) return *this;
    QiPoly r;
    r.den_ = den_;
    r.num_.assign(k, GaussInt{});
    r.num_.insert(r.num_.end(), num_.begin(), num_.end());
    return r;
}

QiPoly QiPoly::shift_down(std::size_t k) const {
    if (k == 0 || is_zero()) return *this;
    if (low_degree() < k) throw std::logic_error("shift_down: not divisible by v^k");
    QiPoly r;
    r.den_ = den_;
    r.num_.assign(num_.begin() + static_cast<std::ptrdiff_t>(k), num_.end());
    return r;
}

QiPoly& QiPoly::operator+=(const QiPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (num_.size() < o.num_.size()) num_.resize(o.num_.size());
    if (den_ == o.den_) {
        for (std::size_t k = 0; k < o.num_.size(); ++k) num_[k] += o.num_[k];
    } else {
        Integer l = lcm_int(den_, o.den_);
        Integer sa = l / den_;
        Integer sb = l / o.den_;
        if (sa != 1) {
            for (auto& c : num_) c *= sa;
        }
        for (std::size_t k = 0; k < o.num_.size(); ++k) {
            num_[k].re += o.num_[k].re * sb;
            num_[k].im += o.num_[k].im * sb;
        }
        den_ = std::move(l);
    }
    normalize();
    return *this;
}

QiPoly& QiPoly::operator-=(const QiPoly& o) { return *this += -o; }

QiPoly operator-(const QiPoly& a) {
    QiPoly r = a;
    for (auto& c : r.num_) c = -c;
    return r;
}

QiPoly operator*(const QiPoly& a, const QiPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    QiPoly r;
    r.num_.assign(a.num_.size() + b.num_.size() - 1, GaussInt{});
    Integer t;
    for (std::size_t j = 0; j < a.num_.size(); ++j) {
        const GaussInt& x = a.num_[j];
        if (x.is_zero()) continue;
        for (std::size_t k = 0; k < b.num_.size(); ++k) {
            const GaussInt& y = b.num_[k];
            GaussInt& z = r.num_[j + k];
            mpz_addmul(z.re.get_mpz_t(), x.re.get_mpz_t(), y.re.get_mpz_t());
            mpz_submul(z.re.get_mpz_t(), x.im.get_mpz_t(), y.im.get_mpz_t());
            mpz_addmul(z.im.get_mpz_t(), x.re.get_mpz_t(), y.im.get_mpz_t());
            mpz_addmul(z.im.get_mpz_t(), x.im.get_mpz_t(), y.re.get_mpz_t());
        }
    }
    r.den_ = a.den_ * b.den_;
    r.normalize();
    return r;
}

QiPoly& QiPoly::operator*=(const QiPoly& o) { return *this = *this * o; }

QiPoly& QiPoly::operator*=(const GaussRat& c) {
    if (c.is_zero()) return *this = QiPoly();
    Integer cd = common_den(c);
    GaussInt cn = scaled(c, cd);
    for (auto& x : num_) x = x * cn;
    den_ *= cd;
    normalize();
    return *this;
}

std::string QiPoly::str(const char* var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < num_.size(); ++k) {
        if (num_[k].is_zero()) continue;
        if (!out.empty()) out += "+";
        out += "(" + coeff(k).str() + ")";
        if (k >= 1) out += std::string("*") + var;
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

std::pair<QiPoly, QiPoly> divmod(const QiPoly& a, const QiPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {QiPoly(), a};
    std::vector<GaussRat> rem(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) rem[k] = a.coeff(k);
    std::vector<GaussRat> bc(b.size());
    for (std::size_t k = 0; k < b.size(); ++k) bc[k] = b.coeff(k);
    GaussRat inv_lead = bc.back().inverse();
    std::size_t m = bc.size();
    std::vector<GaussRat> quot(a.size() - m + 1);
    for (std::size_t j = quot.size(); j-- > 0;) {
        GaussRat f = rem[j + m - 1] * inv_lead;
        if (f.is_zero()) continue;
        for (std::size_t k = 0; k < m; ++k) {
            if (!bc[k].is_zero()) rem[j + k] -= f * bc[k];
        }
        quot[j] = std::move(f);
    }
    rem.resize(m - 1);
    return {QiPoly::from_coefficients(quot), QiPoly::from_coefficients(rem)};
}

QiPoly exact_div(const QiPoly& a, const QiPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("exact_div: divisor does not divide");
    return q;
}

QiPoly gcd_euclid(const QiPoly& a, const QiPoly& b) {
    QiPoly x = a;
    QiPoly y = b;
    while (!y.is_zero()) {
        QiPoly r = divmod(x, y).second.monic();
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

namespace {

using detail::PolyMod;
using detail::u64;

std::optional<PolyMod> image(const QiPoly& f, u64 p, u64 r) {
    PolyMod out(f.size());
    for (std::size_t k = 0; k < f.size(); ++k) {
        const GaussInt& c = f.numerators()[k];
        u64 re = mpz_fdiv_ui(c.re.get_mpz_t(), p);
        u64 im = mpz_fdiv_ui(c.im.get_mpz_t(), p);
        out[k] = detail::addmod(re, detail::mulmod(im, r, p), p);
    }
    if (out.back() == 0) return std::nullopt;
    return out;
}

// Wang's rational reconstruction of u modulo m.
std::optional<Rational> reconstruct(const Integer& u, const Integer& m) {
    Integer bound;
    mpz_fdiv_q_2exp(bound.get_mpz_t(), m.get_mpz_t(), 1);
    mpz_sqrt(bound.get_mpz_t(), bound.get_mpz_t());
    Integer r0 = m, r1 = u, t0 = 0, t1 = 1, q, tmp;
    while (r1 > bound) {
        mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
        tmp = r0 - q * r1;
        r0 = std::move(r1);
        r1 = std::move(tmp);
        tmp = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(tmp);
    }
    if (sgn(t1) == 0 || abs(t1) > bound) return std::nullopt;
    Rational res(r1, t1);
    res.canonicalize();
    if (res.get_den() != abs(t1)) return std::nullopt;
    return res;
}

bool divides(const QiPoly& h, const QiPoly& f) { return divmod(f, h).second.is_zero(); }

// Both inputs nonconstant with nonzero constant term.
QiPoly gcd_modular(const QiPoly& f, const QiPoly& g) {
    long best = std::min(f.degree(), g.degree()) + 1;
    std::vector<Integer> re_acc, im_acc;
    Integer modulus = 1;
    std::optional<QiPoly> last;
    constexpr std::size_t kMaxPrimes = 2000;
    for (std::size_t idx = 0; idx < kMaxPrimes; ++idx) {
        const auto& gp = detail::gauss_prime(idx);
        u64 p = gp.p;
        u64 r = gp.sqrt_minus_one;
        u64 nr = p - r;
        auto fp = image(f, p, r), fm = image(f, p, nr), gpp = image(g, p, r), gm = image(g, p, nr);
        if (!fp || !fm || !gpp || !gm) continue;
        PolyMod hp = detail::gcd_mod(*fp, *gpp, p);
        PolyMod hm = detail::gcd_mod(*fm, *gm, p);
        if (hp.size() != hm.size()) continue;
        long d = static_cast<long>(hp.size()) - 1;
        if (d == 0) return QiPoly(1);
        if (d > best) continue;
        if (d < best) {
            best = d;
            modulus = 1;
            re_acc.assign(d + 1, Integer(0));
            im_acc.assign(d + 1, Integer(0));
            last.reset();
        }
        u64 inv2 = detail::invmod(2, p);
        u64 inv2r = detail::invmod(detail::mulmod(2, r, p), p);
        u64 minv = mpz_fdiv_ui(modulus.get_mpz_t(), p);
        minv = detail::invmod(minv, p);
        Integer pz;
        mpz_set_ui(pz.get_mpz_t(), p);
        auto crt = [&](Integer& acc, u64 residue) {
            u64 cur = mpz_fdiv_ui(acc.get_mpz_t(), p);
            u64 t = detail::mulmod(detail::submod(residue, cur, p), minv, p);
            Integer tz;
            mpz_set_ui(tz.get_mpz_t(), t);
            acc += modulus * tz;
        };
        for (long k = 0; k <= d; ++k) {
            u64 a = detail::mulmod(detail::addmod(hp[k], hm[k], p), inv2, p);
            u64 b = detail::mulmod(detail::submod(hp[k], hm[k], p), inv2r, p);
            crt(re_acc[k], a);
            crt(im_acc[k], b);
        }
        modulus *= pz;

        std::vector<GaussRat> coeffs;
        coeffs.reserve(d + 1);
        bool ok = true;
        for (long k = 0; k <= d && ok; ++k) {
            auto a = reconstruct(re_acc[k], modulus);
            auto b = a ? reconstruct(im_acc[k], modulus) : std::nullopt;
            if (!a || !b) {
                ok = false;
                break;
            }
            coeffs.emplace_back(std::move(*a), std::move(*b));
        }
        if (!ok) continue;
        QiPoly cand = QiPoly::from_coefficients(coeffs);
        if (last && *last == cand && divides(cand, f) && divides(cand, g)) return cand;
        last = std::move(cand);
    }
    return gcd_euclid(f, g);
}

}  // namespace

QiPoly gcd(const QiPoly& a, const QiPoly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    std::size_t la = a.low_degree();
    std::size_t lb = b.low_degree();
    std::size_t shift = std::min(la, lb);
    QiPoly x = a.shift_down(la);
    QiPoly y = b.shift_down(lb);
    if (x.is_constant() || y.is_constant()) return QiPoly::monomial(GaussRat(1), shift);
    std::size_t e = std::gcd(x.exponent_gcd(), y.exponent_gcd());
    if (e > 1) {
        x = x.deflate(e);
        y = y.deflate(e);
    }
    QiPoly h = gcd_modular(x, y);
    if (e > 1) h = h.inflate(e);
    return h.shift_up(shift);
}

}  // namespace dpg
