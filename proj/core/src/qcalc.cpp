#include "dpg/qcalc.hpp"

namespace dpg {

Scalar gauss_int(long n) {
    if (n < 0) throw std::invalid_argument("gauss_int needs n >= 0");
    std::vector<GaussInt> num(n == 0 ? 0 : 4 * (n - 1) + 1);
    for (long k = 0; k < n; ++k) num[4 * k] = GaussInt(1);
    return Scalar(QiPoly(std::move(num), Integer(1)));
}

Scalar q_pochhammer(const Scalar& r, long n) {
    Scalar out(1);
    Scalar term = r;
    const Scalar q = Scalar::q();
    for (long k = 0; k < n; ++k) {
        out *= Scalar(1) - term;
        if (out.is_zero()) return out;
        term *= q;
    }
    return out;
}

std::optional<long> as_inverse_q_power(const Scalar& s) {
    if (!s.num().is_one()) return std::nullopt;
    const QiPoly& d = s.den();
    if (d.low_degree() != static_cast<std::size_t>(d.degree())) return std::nullopt;
    long deg = d.degree();
    if (deg % 4 != 0) return std::nullopt;
    return deg / 4;
}

}  // namespace dpg
