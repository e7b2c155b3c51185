#pragma once

#include <vector>

#include "dpg/backend.hpp"
#include "dpg/matrix.hpp"
#include "dpg/report.hpp"
#include "dpg/scalar.hpp"
#include "dpg/w_module.hpp"

namespace dpg {

/// The 2D-dimensional representation of the nil-DAHA with
/// kappa = q^{-e/2}, kappa' = i q^{-D/2}, in the basis (C_0^-, C_0^+, ...).
template <class F>
struct NilDahaRep {
    Rational e;
    int D = 0;
    F kappa, kappa_prime, tau;
    Matrix<F> t, t_prime, u, u_prime, x;
    Matrix<F> t_inv, x_inv;
    Matrix<F> A_op, A_star_op, A_tilde_star_op;  // X + X^{-1}, i q^{-D/2}(t u' + u t'), i q^{-D/2}(t u' + q u t')
};

/// Assembles the block matrices in formal q and verifies every defining
/// relation, x u' = u + 1 and u' = q u x.
NilDahaRep<Scalar> build_rep(const Rational& e, int D, Report* log = nullptr);

template <class B>
NilDahaRep<typename B::Field> lift(const B& be, const NilDahaRep<Scalar>& r) {
    NilDahaRep<typename B::Field> o;
    o.e = r.e;
    o.D = r.D;
    o.kappa = be.lift(r.kappa);
    o.kappa_prime = be.lift(r.kappa_prime);
    o.tau = be.lift(r.tau);
    o.t = lift(be, r.t);
    o.t_prime = lift(be, r.t_prime);
    o.u = lift(be, r.u);
    o.u_prime = lift(be, r.u_prime);
    o.x = lift(be, r.x);
    o.t_inv = lift(be, r.t_inv);
    o.x_inv = lift(be, r.x_inv);
    o.A_op = lift(be, r.A_op);
    o.A_star_op = lift(be, r.A_star_op);
    o.A_tilde_star_op = lift(be, r.A_tilde_star_op);
    return o;
}

/// One term of X^{±1} applied to C_i^± (or eta^{±1} applied to l_i^±):
/// index i may be -1 or D, which callers drop or map to boundary terms.
struct XTerm {
    int i;
    bool plus;
    Scalar coeff;
};

/// Terms of X^{power} C_i^{plus ? + : -}, power = ±1, with tau = i q^{-(D+e)/2}.
std::vector<XTerm> x_action_terms(int D, const Scalar& tau, int i, bool plus, int power);

/// Matrices of X, X^{-1} and X + X^{-1} on W from the coefficient tables.
Matrix<Scalar> x_table(int D, const Scalar& tau, int power);
Matrix<Scalar> a_table(int D, const Scalar& tau);

/// The columns of x, x^{-1}, X + X^{-1}, A*, A~* against the coefficient
/// tables, and the two displayed actions on x.
template <class B>
void verify_x_action(const NilDahaRep<typename B::Field>& rep, const WModule<typename B::Field>& w, const B& be,
                     Report* log = nullptr);

/// A = alpha + beta tau (X + X^{-1}), A* = alpha* + beta* A*_op,
/// A~* = alpha* + beta~* A~*_op, the two projections, the spectrum of
/// alpha + beta tau (X + X^{-1}), and irreducibility under t, u, x.
template <class B>
void verify_bridge(const NilDahaRep<typename B::Field>& rep, const WModule<typename B::Field>& w, const B& be,
                   Report* log = nullptr);

}  // namespace dpg
