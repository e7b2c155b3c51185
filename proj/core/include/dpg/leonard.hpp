#pragma once

#include <array>
#include <string>
#include <vector>

#include "dpg/backend.hpp"
#include "dpg/laurent.hpp"
#include "dpg/matrix.hpp"
#include "dpg/report.hpp"
#include "dpg/scalar.hpp"
#include "dpg/w_module.hpp"

namespace dpg {

/// Parameter sequence (alpha, alpha*, beta, beta*, gamma; q, d) of a Leonard
/// system of dual q-Krawtchouk type, together with the chosen square root
/// tau of gamma / beta.
struct DualQKSeq {
    std::string name;
    Scalar alpha, alpha_star, beta, beta_star, gamma;
    Scalar tau;
    int d = 0;
};

/// The sequences of the four Leonard systems attached to W, in the order
/// Phi, Phi-perp, Phi~, Phi~-perp.
std::array<DualQKSeq, 4> four_sequences(const Rational& e, int D);

template <class F>
struct ParamArray {
    std::vector<F> theta, theta_star;  // i = 0..d
    std::vector<F> phi, phi_split;     // i = 1..d, stored at index i; index 0 is unused
};

/// Throws std::domain_error "degenerate parameter array" when beta beta* gamma = 0,
/// two eigenvalues coincide, or some phi_i, phi_split_i vanishes.
ParamArray<Scalar> param_array(const DualQKSeq& s);

template <class B>
ParamArray<typename B::Field> lift(const B& be, const ParamArray<Scalar>& p) {
    return {lift(be, p.theta), lift(be, p.theta_star), lift(be, p.phi), lift(be, p.phi_split)};
}

template <class F>
struct IntersectionNumbers {
    std::vector<F> a, b, c;  // i = 0..d
};

/// b_i and c_i from the split sequences and the dual eigenvalues.
template <class F>
IntersectionNumbers<F> intersection_numbers_general(const ParamArray<F>& p) {
    const int d = static_cast<int>(p.theta.size()) - 1;
    const auto& ts = p.theta_star;
    IntersectionNumbers<F> r;
    r.a.assign(d + 1, F(0));
    r.b.assign(d + 1, F(0));
    r.c.assign(d + 1, F(0));
    for (int i = 0; i < d; ++i) {
        F num = p.phi[i + 1];
        F den(1);
        for (int k = 0; k < i; ++k) num *= ts[i] - ts[k];
        for (int k = 0; k <= i; ++k) den *= ts[i + 1] - ts[k];
        r.b[i] = num / den;
    }
    for (int i = 1; i <= d; ++i) {
        F num = p.phi_split[i];
        F den(1);
        for (int k = i + 1; k <= d; ++k) num *= ts[i] - ts[k];
        for (int k = i; k <= d; ++k) den *= ts[i - 1] - ts[k];
        r.c[i] = num / den;
    }
    for (int i = 0; i <= d; ++i) r.a[i] = p.theta[0] - r.b[i] - r.c[i];
    return r;
}

/// b_i = beta (1 - q^{i-d}), c_i = gamma (1 - q^i), a_i = theta_0 - b_i - c_i.
IntersectionNumbers<Scalar> intersection_numbers_closed(const DualQKSeq& s);

/// Both routes; throws CheckFailure when they disagree.
IntersectionNumbers<Scalar> intersection_numbers(const DualQKSeq& s, Report* log = nullptr);

/// Inverts the formulas for b_i and c_i: phi_{i+1} from b_i and phi_split_i from c_i.
template <class F>
void split_from_intersection(const IntersectionNumbers<F>& n, const std::vector<F>& ts, std::vector<F>& phi,
                             std::vector<F>& phi_split) {
    const int d = static_cast<int>(ts.size()) - 1;
    phi.assign(d + 1, F(0));
    phi_split.assign(d + 1, F(0));
    for (int i = 0; i < d; ++i) {
        F num = n.b[i];
        F den(1);
        for (int k = 0; k <= i; ++k) num *= ts[i + 1] - ts[k];
        for (int k = 0; k < i; ++k) den *= ts[i] - ts[k];
        phi[i + 1] = num / den;
    }
    for (int i = 1; i <= d; ++i) {
        F num = n.c[i];
        F den(1);
        for (int k = i; k <= d; ++k) num *= ts[i - 1] - ts[k];
        for (int k = i + 1; k <= d; ++k) den *= ts[i] - ts[k];
        phi_split[i] = num / den;
    }
}

/// v_0, ..., v_d as polynomials in xi (nonnegative exponents only), from
/// xi v_i = b_{i-1} v_{i-1} + a_i v_i + c_{i+1} v_{i+1}.
template <class F>
std::vector<LaurentPoly<F>> v_polys(const IntersectionNumbers<F>& n) {
    const int d = static_cast<int>(n.a.size()) - 1;
    std::vector<LaurentPoly<F>> v;
    v.emplace_back(F(1));
    const LaurentPoly<F> xi = LaurentPoly<F>::eta();
    for (int i = 0; i < d; ++i) {
        LaurentPoly<F> next = (xi - LaurentPoly<F>(n.a[i])) * v[i];
        if (i > 0) next -= v[i - 1] * n.b[i - 1];
        v.push_back(next / n.c[i + 1]);
    }
    return v;
}

/// v_i(theta_0) = b_0 ... b_{i-1} / (c_1 ... c_i).
template <class F>
std::vector<F> v_at_theta0(const IntersectionNumbers<F>& n) {
    std::vector<F> out{F(1)};
    for (std::size_t i = 1; i < n.a.size(); ++i) out.push_back(out.back() * n.b[i - 1] / n.c[i]);
    return out;
}

/// f_i(theta_j) as a terminating 3phi2.
Scalar f_value(const DualQKSeq& s, int i, int j);

/// f_i(theta_j) from sum_n prod_{k<n} (theta*_i - theta*_k)(theta_j - theta_k) / (phi_1 ... phi_n).
template <class F>
F f_value_sum(const ParamArray<F>& p, int i, int j) {
    F sum(1);
    F term(1);
    for (int n = 1; n <= i; ++n) {
        term = term * (p.theta_star[i] - p.theta_star[n - 1]) * (p.theta[j] - p.theta[n - 1]) / p.phi[n];
        sum += term;
    }
    return sum;
}

/// Monic symmetric Laurent polynomial h_i(eta; tau, d).
LaurentPoly<Scalar> h_poly(int i, const Scalar& tau, int d);

/// m_i from the dual q-Krawtchouk closed form.
std::vector<Scalar> m_values_closed(const DualQKSeq& s);

/// m_i from the parameter array:
/// phi_1..phi_i phi_split_1..phi_split_{d-i} / (prod_{k>=1}(theta*_0 - theta*_k) prod_{k != i}(theta_i - theta_k)).
template <class F>
std::vector<F> m_values_general(const ParamArray<F>& p) {
    const int d = static_cast<int>(p.theta.size()) - 1;
    F base(1);
    for (int k = 1; k <= d; ++k) base *= p.theta_star[0] - p.theta_star[k];
    std::vector<F> out;
    for (int i = 0; i <= d; ++i) {
        F num(1);
        for (int k = 1; k <= i; ++k) num *= p.phi[k];
        for (int k = 1; k <= d - i; ++k) num *= p.phi_split[k];
        F den = base;
        for (int k = 0; k <= d; ++k) {
            if (k != i) den *= p.theta[i] - p.theta[k];
        }
        out.push_back(num / den);
    }
    return out;
}

/// A Leonard system realized on a subspace of W, written in its standard
/// basis {E*_i u}.
template <class F>
struct LeonardSystemData {
    std::string name;
    int d = 0;
    std::vector<Vector<F>> basis;  // E*_i u in the coordinates of W
    Matrix<F> A, A_star;           // (d+1) x (d+1), standard basis
    std::vector<Matrix<F>> E, E_star;
    IntersectionNumbers<F> measured;
    std::vector<F> v0;  // v_i(theta_0)
    std::vector<F> m;   // trace(E_i E*_0)
};

/// Realizes Phi on span{A_i x}, Phi-perp on span{u_i^perp}, Phi~ on
/// span{C_i} and Phi~-perp on span{u~_i^perp}, verifies the axioms and
/// compares every measured parameter with the sequences above.
template <class B>
std::array<LeonardSystemData<typename B::Field>, 4> realize_four_systems(const WModule<typename B::Field>& w,
                                                                         const B& be, Report* log = nullptr);

/// h_i(X) E*_0 u = tau^i (q;q)_i E*_i u for each system, with X acting on W.
template <class B>
void verify_h_on_standard_basis(const std::array<LeonardSystemData<typename B::Field>, 4>& systems,
                                const std::array<DualQKSeq, 4>& seqs, const Matrix<typename B::Field>& x,
                                const Matrix<typename B::Field>& x_inv, const B& be, Report* log = nullptr);

/// Closed-form checks that need no module: both routes to the intersection
/// numbers, the three routes to f_i(theta_j), h_i against f_i, and the
/// closed and general m_i.
void verify_sequence(const DualQKSeq& s, Report* log);

}  // namespace dpg
