#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "dpg/matrix.hpp"
#include "dpg/scalar.hpp"

namespace dpg {

/// Laurent polynomial in eta with coefficients in F. Zero coefficients are
/// never stored, so equality is map equality.
template <class F>
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const F& c) { set(0, c); }  // NOLINT(google-explicit-constructor)

    static LaurentPoly monomial(const F& c, long k) {
        LaurentPoly p;
        p.set(k, c);
        return p;
    }
    static LaurentPoly eta(long k = 1) { return monomial(F(1), k); }

    const std::map<long, F>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long low() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    long high() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    F coeff(long k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? F(0) : it->second;
    }
    void set(long k, const F& c) {
        if (is_zero_value(c)) {
            terms_.erase(k);
        } else {
            terms_[k] = c;
        }
    }

    /// True when every exponent lies in [lo, hi].
    bool within(long lo, long hi) const { return is_zero() || (low() >= lo && high() <= hi); }

    /// f(eta^{-1}).
    LaurentPoly reflect() const {
        LaurentPoly r;
        for (const auto& [k, c] : terms_) r.terms_[-k] = c;
        return r;
    }
    bool is_symmetric() const { return *this == reflect(); }

    /// eta^k f.
    LaurentPoly shift(long k) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [k, c] : o.terms_) set(k, coeff(k) + c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [k, c] : o.terms_) set(k, coeff(k) - c);
        return *this;
    }
    LaurentPoly& operator*=(const F& c) {
        if (is_zero_value(c)) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, x] : terms_) x = x * c;
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator-(const LaurentPoly& a) { return LaurentPoly() - a; }
    friend LaurentPoly operator*(LaurentPoly a, const F& c) { return a *= c; }
    friend LaurentPoly operator*(const F& c, LaurentPoly a) { return a *= c; }
    friend LaurentPoly operator/(LaurentPoly a, const F& c) { return a *= F(1) / c; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [i, x] : a.terms_) {
            for (const auto& [j, y] : b.terms_) r.set(i + j, r.coeff(i + j) + x * y);
        }
        return r;
    }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /// Value at x; x must be nonzero when negative exponents occur.
    F operator()(const F& x) const {
        if (terms_.empty()) return F(0);
        F xinv = low() < 0 ? F(1) / x : F(1);
        F sum(0);
        for (const auto& [k, c] : terms_) {
            F p(1);
            const F& base = k >= 0 ? x : xinv;
            for (long n = 0; n < (k >= 0 ? k : -k); ++n) p = p * base;
            sum = sum + c * p;
        }
        return sum;
    }

    /// f(X) v, with negative powers taken from the supplied inverse of X.
    Vector<F> apply(const Matrix<F>& x, const Matrix<F>& x_inv, const Vector<F>& v) const {
        Vector<F> out(v.size(), F(0));
        if (terms_.empty()) return out;
        Vector<F> pos = v;
        long at = 0;
        for (auto it = terms_.lower_bound(0); it != terms_.end(); ++it) {
            while (at < it->first) {
                pos = x * pos;
                ++at;
            }
            out = out + scale(it->second, pos);
        }
        Vector<F> neg = v;
        at = 0;
        for (auto it = std::make_reverse_iterator(terms_.lower_bound(0)); it != terms_.rend(); ++it) {
            while (at > it->first) {
                neg = x_inv * neg;
                --at;
            }
            out = out + scale(it->second, neg);
        }
        return out;
    }

    /// f(X) as a matrix.
    Matrix<F> at_matrix(const Matrix<F>& x, const Matrix<F>& x_inv) const {
        std::size_t n = x.rows();
        std::vector<Vector<F>> cols;
        cols.reserve(n);
        for (std::size_t j = 0; j < n; ++j) cols.push_back(apply(x, x_inv, unit_vector<F>(n, j)));
        return Matrix<F>::from_columns(cols, n);
    }

    template <class G, class Fn>
    LaurentPoly<G> map(Fn fn) const {
        LaurentPoly<G> r;
        for (const auto& [k, c] : terms_) r.set(k, fn(c));
        return r;
    }

    /// "c*eta^k + ..." in ascending exponents; "0" for the zero polynomial.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [k, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += "(" + to_string(c) + ")";
            if (k != 0) s += "*eta^" + std::to_string(k);
        }
        return s;
    }

private:
    static bool is_zero_value(const F& c) {
        using dpg::is_zero;
        return is_zero(c);
    }

    std::map<long, F> terms_;
};

}  // namespace dpg
