#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dpg {

/// Table-driven finite field F_{p^k} with at most 256 elements.
///
/// Elements are the integers 0..q-1; the integer sum_j c_j p^j stands for
/// the residue class of sum_j c_j t^j modulo the defining polynomial, which
/// is the monic irreducible of degree k whose coefficient vector, read as
/// such an integer, is smallest (t^2+t+1 for F_4, t^2+1 for F_9,
/// t^3+t+1 for F_8).
class FiniteField {
public:
    using Elem = std::uint8_t;

    explicit FiniteField(long q);

    int size() const { return q_; }
    int characteristic() const { return p_; }
    int degree() const { return k_; }
    /// Defining polynomial, ascending coefficients including the leading 1.
    const std::vector<int>& modulus() const { return modulus_; }
    std::string describe() const;

    Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
    Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
    Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
    Elem neg(Elem a) const { return neg_[a]; }
    /// Multiplicative inverse of a nonzero element.
    Elem inv(Elem a) const { return inv_[a]; }
    Elem pow(Elem a, long e) const;
    Elem frobenius(Elem a) const { return pow(a, p_); }

    bool has_involution() const { return r_ > 0; }
    /// a -> a^r where q = r^2; only for square orders.
    Elem conj(Elem a) const { return conj_[a]; }
    int sqrt_order() const { return r_; }

private:
    int q_ = 0;
    int p_ = 0;
    int k_ = 0;
    int r_ = 0;
    std::vector<int> modulus_;
    std::vector<Elem> add_, mul_, neg_, inv_, conj_;
};

}  // namespace dpg
