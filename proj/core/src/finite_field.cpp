#include "dpg/finite_field.hpp"

#include <stdexcept>

#include "dpg/family.hpp"

namespace dpg {

namespace {

using Poly = std::vector<int>;  // ascending coefficients mod p

Poly digits(long code, int p, int len) {
    Poly out(len);
    for (int j = 0; j < len; ++j) {
        out[j] = static_cast<int>(code % p);
        code /= p;
    }
    return out;
}

bool divides_monic(const Poly& f, const Poly& g, int p) {
    // does monic g divide f?
    Poly r = f;
    int dg = static_cast<int>(g.size()) - 1;
    for (int j = static_cast<int>(r.size()) - 1; j >= dg; --j) {
        int c = r[j];
        if (c == 0) continue;
        for (int l = 0; l <= dg; ++l) r[j - dg + l] = ((r[j - dg + l] - c * g[l]) % p + p) % p;
    }
    for (int j = 0; j < dg; ++j) {
        if (r[j] != 0) return false;
    }
    return true;
}

bool irreducible(const Poly& f, int p) {
    int k = static_cast<int>(f.size()) - 1;
    for (int d = 1; 2 * d <= k; ++d) {
        long count = 1;
        for (int j = 0; j < d; ++j) count *= p;
        for (long code = 0; code < count; ++code) {
            Poly g = digits(code, p, d);
            g.push_back(1);
            if (divides_monic(f, g, p)) return false;
        }
    }
    return true;
}

}  // namespace

FiniteField::FiniteField(long q) {
    if (q > 256) throw std::invalid_argument("finite fields are limited to at most 256 elements");
    auto [p, k] = prime_power(q);
    q_ = static_cast<int>(q);
    p_ = static_cast<int>(p);
    k_ = k;

    if (k_ == 1) {
        modulus_ = {0, 1};
    } else {
        for (long code = 0;; ++code) {
            Poly f = digits(code, p_, k_);
            f.push_back(1);
            if (f[0] != 0 && irreducible(f, p_)) {
                modulus_ = f;
                break;
            }
        }
    }

    auto to_poly = [&](int a) { return digits(a, p_, k_); };
    auto from_poly = [&](const Poly& c) {
        int a = 0;
        for (int j = k_ - 1; j >= 0; --j) a = a * p_ + c[j];
        return a;
    };

    add_.resize(q_ * q_);
    mul_.resize(q_ * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    for (int a = 0; a < q_; ++a) {
        Poly pa = to_poly(a);
        Poly na(k_);
        for (int j = 0; j < k_; ++j) na[j] = (p_ - pa[j]) % p_;
        neg_[a] = static_cast<Elem>(from_poly(na));
        for (int b = 0; b < q_; ++b) {
            Poly pb = to_poly(b);
            Poly s(k_);
            for (int j = 0; j < k_; ++j) s[j] = (pa[j] + pb[j]) % p_;
            add_[a * q_ + b] = static_cast<Elem>(from_poly(s));
            Poly prod(2 * k_ - 1, 0);
            for (int i = 0; i < k_; ++i) {
                for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p_;
            }
            for (int j = 2 * k_ - 2; j >= k_; --j) {
                int c = prod[j];
                if (c == 0) continue;
                for (int l = 0; l <= k_; ++l) {
                    prod[j - k_ + l] = ((prod[j - k_ + l] - c * modulus_[l]) % p_ + p_) % p_;
                }
            }
            prod.resize(k_);
            mul_[a * q_ + b] = static_cast<Elem>(from_poly(prod));
        }
    }
    for (int a = 1; a < q_; ++a) {
        for (int b = 1; b < q_; ++b) {
            if (mul_[a * q_ + b] == 1) inv_[a] = static_cast<Elem>(b);
        }
    }

    if (k_ % 2 == 0) {
        r_ = 1;
        for (int j = 0; j < k_ / 2; ++j) r_ *= p_;
        conj_.resize(q_);
        for (int a = 0; a < q_; ++a) conj_[a] = pow(static_cast<Elem>(a), r_);
    }
}

FiniteField::Elem FiniteField::pow(Elem a, long e) const {
    Elem r = 1;
    Elem b = a;
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

std::string FiniteField::describe() const {
    std::string s = "GF(" + std::to_string(q_) + ")";
    if (k_ == 1) return s;
    s += " = F_" + std::to_string(p_) + "[t]/(";
    bool first = true;
    for (int j = k_; j >= 0; --j) {
        int c = modulus_[j];
        if (c == 0) continue;
        if (!first) s += "+";
        first = false;
        if (j == 0 || c != 1) s += std::to_string(c);
        if (j >= 1) s += "t";
        if (j >= 2) s += "^" + std::to_string(j);
    }
    return s + ")";
}

}  // namespace dpg
