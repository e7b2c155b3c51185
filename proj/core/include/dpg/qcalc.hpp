#pragma once

#include <optional>
#include <stdexcept>

#include "dpg/scalar.hpp"

namespace dpg {

/// [n] = (q^n - 1)/(q - 1) = 1 + q + ... + q^{n-1}.
Scalar gauss_int(long n);

/// (r;q)_n = (1 - r)(1 - rq)...(1 - rq^{n-1}).
Scalar q_pochhammer(const Scalar& r, long n);

/// If s = q^{-i} for some integer i >= 0, returns i.
std::optional<long> as_inverse_q_power(const Scalar& s);

/// Terminating 3phi2(a1, a2, a3; 0, b2 | q, z) with a1 = q^{-i}.
///
/// R is the coefficient ring of a2 and a3 (Scalar, or a Laurent polynomial
/// ring over Scalar); it must support R + R, R - R, R * R and R * Scalar.
template <class R>
R phi_32_sum(const Scalar& a1, const R& a2, const R& a3, const Scalar& b2, const Scalar& z, const R& one) {
    auto top = as_inverse_q_power(a1);
    if (!top) throw std::domain_error("series does not terminate");
    const Scalar q = Scalar::q();
    R sum = one;
    R numer = one;
    Scalar coeff(1);
    Scalar qk(1);
    for (long n = 1; n <= *top; ++n) {
        // factor for index n-1 of each Pochhammer symbol
        Scalar lower = (Scalar(1) - b2 * qk) * (Scalar(1) - q * qk);
        if (lower.is_zero()) throw std::domain_error("pole in summand");
        coeff = coeff * (Scalar(1) - a1 * qk) * z / lower;
        numer = numer * (one - a2 * qk) * (one - a3 * qk);
        sum = sum + numer * coeff;
        qk *= q;
    }
    return sum;
}

inline Scalar phi_32(const Scalar& a1, const Scalar& a2, const Scalar& a3, const Scalar& b2, const Scalar& z) {
    return phi_32_sum<Scalar>(a1, a2, a3, b2, z, Scalar(1));
}

}  // namespace dpg
