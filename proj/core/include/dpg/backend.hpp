#pragma once

#include "dpg/alg_num.hpp"
#include "dpg/matrix.hpp"
#include "dpg/scalar.hpp"

namespace dpg {

/// Formal q: values stay in Q(i)(v).
struct FormalBackend {
    using Field = Scalar;
    long q0 = 0;
    Scalar lift(const Scalar& s) const { return s; }
};

/// Concrete prime power q0: values are evaluated into Q(i)(q0^{1/4}).
struct ConcreteBackend {
    using Field = AlgNum;
    long q0 = 2;
    AlgNum lift(const Scalar& s) const { return eval_at(s, q0); }
};

template <class B>
Vector<typename B::Field> lift(const B& b, const Vector<Scalar>& v) {
    Vector<typename B::Field> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(b.lift(x));
    return out;
}

template <class B>
Matrix<typename B::Field> lift(const B& b, const Matrix<Scalar>& m) {
    Matrix<typename B::Field> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!m(i, j).is_zero()) out(i, j) = b.lift(m(i, j));
        }
    }
    return out;
}

/// Value of s at q = q0 when it is rational; throws std::domain_error otherwise.
Rational eval_rational(const Scalar& s, long q0);

}  // namespace dpg
