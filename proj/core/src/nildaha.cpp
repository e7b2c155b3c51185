#include "dpg/nildaha.hpp"

#include "dpg/closed_forms.hpp"
#include "dpg/leonard.hpp"

namespace dpg {

namespace {

const char* kRel = "defining relations of the nil-DAHA";
const char* kRep = "representation of the nil-DAHA on W";
const char* kTables = "actions of X, X^{-1}, A, A* and A~* on the cells";
const char* kThm1 = "T-action through the nil-DAHA";
const char* kThm2 = "projections through the nil-DAHA";

Matrix<Scalar> from_terms(int D, const Scalar& tau, int power) {
    const std::size_t n = 2 * static_cast<std::size_t>(D);
    Matrix<Scalar> m(n, n);
    for (int i = 0; i < D; ++i) {
        for (bool plus : {false, true}) {
            for (const auto& t : x_action_terms(D, tau, i, plus, power)) {
                if (t.i < 0 || t.i >= D) continue;
                m(2 * t.i + (t.plus ? 1 : 0), 2 * i + (plus ? 1 : 0)) = t.coeff;
            }
        }
    }
    return m;
}

}  // namespace

std::vector<XTerm> x_action_terms(int D, const Scalar& tau, int i, bool plus, int power) {
    const Scalar one(1);
    auto qp = [](long k) { return Scalar::q_pow(k); };
    const Scalar ti = tau.inverse();
    const Scalar mix = tau * qp(D) + ti;  // tau q^D + tau^{-1}
    std::vector<XTerm> t;
    if (!plus && power == 1) {
        t.push_back({i - 1, true, mix * (qp(i - D) - one)});
        t.push_back({i, false, mix * qp(i - D)});
        t.push_back({i, true, tau * (qp(D) - qp(i + 1) + one)});
        t.push_back({i + 1, false, tau * (one - qp(i + 1))});
    } else if (!plus) {
        t.push_back({i - 1, false, ti * (one - qp(i - D))});
        t.push_back({i - 1, true, mix * (one - qp(i - D))});
        t.push_back({i, true, -tau * (qp(D) - qp(i) + one)});
    } else if (power == 1) {
        t.push_back({i - 1, true, ti * (one - qp(i - D))});
        t.push_back({i, false, -ti * qp(i - D)});
    } else {
        t.push_back({i, false, ti * qp(i - D + 1)});
        t.push_back({i, true, mix * qp(i - D + 1)});
        t.push_back({i + 1, true, tau * (one - qp(i + 1))});
    }
    return t;
}

Matrix<Scalar> x_table(int D, const Scalar& tau, int power) { return from_terms(D, tau, power); }

Matrix<Scalar> a_table(int D, const Scalar& tau) {
    const std::size_t n = 2 * static_cast<std::size_t>(D);
    const Scalar one(1);
    auto qp = [](long k) { return Scalar::q_pow(k); };
    const Scalar ti = tau.inverse();
    const Scalar mix = tau * qp(D) + ti;
    Matrix<Scalar> m(n, n);
    for (int i = 0; i < D; ++i) {
        const std::size_t minus = 2 * i;
        const std::size_t plus = 2 * i + 1;
        if (i >= 1) {
            m(minus - 2, minus) = ti * (one - qp(i - D));
            m(plus - 2, plus) = ti * (one - qp(i - D));
        }
        m(minus, minus) = mix * qp(i - D);
        m(plus, minus) = tau * qp(i) * (one - qp(1));
        m(minus, plus) = ti * qp(i - D) * (qp(1) - one);
        m(plus, plus) = mix * qp(i - D + 1);
        if (i + 1 < D) {
            m(minus + 2, minus) = tau * (one - qp(i + 1));
            m(plus + 2, plus) = tau * (one - qp(i + 1));
        }
    }
    return m;
}

NilDahaRep<Scalar> build_rep(const Rational& e, int D, Report* log) {
    const std::size_t n = 2 * static_cast<std::size_t>(D);
    const Scalar one(1);
    const Scalar I = Scalar::i();
    const Scalar q = Scalar::q();
    auto qp = [](const Rational& k) { return Scalar::q_pow(k); };
    const Rational half(1, 2);
    const Rational Dr(D);

    NilDahaRep<Scalar> r;
    r.e = e;
    r.D = D;
    r.kappa = qp(-e * half);
    r.kappa_prime = I * qp(-Dr * half);
    r.tau = I * qp(-(Dr + e) * half);

    r.t = Matrix<Scalar>(n, n);
    r.u_prime = Matrix<Scalar>(n, n);
    for (int i = 0; i < D; ++i) {
        const std::size_t a = 2 * i;
        const std::size_t b = a + 1;
        r.t(a, a) = qp(-e * half) - qp(e * half);
        r.t(a, b) = qp(e * half);
        r.t(b, a) = qp(-e * half);
        r.u_prime(b, a) = -I * qp((Dr - e) * half - i);
    }
    r.t_prime = Matrix<Scalar>(n, n);
    r.u = Matrix<Scalar>(n, n);
    r.t_prime(0, 0) = I * qp(-Dr * half);
    r.t_prime(n - 1, n - 1) = I * qp(-Dr * half);
    r.u(n - 1, n - 1) = Scalar(-1);
    for (int i = 1; i < D; ++i) {
        const std::size_t a = 2 * i - 1;
        const std::size_t b = 2 * i;
        r.t_prime(a, a) = I * qp(-Dr * half) * (qp(Dr) - qp(i) + one);
        r.t_prime(a, b) = I * qp(Dr * half) * (qp(Rational(i) - Dr) - one);
        r.t_prime(b, a) = I * qp(-Dr * half) * (one - qp(i));
        r.t_prime(b, b) = I * qp(Rational(i) - Dr * half);
        r.u(a, a) = Scalar(-1);
        r.u(a, b) = one - qp(Dr - i);
    }
    r.x = r.t_prime * r.t;

    const Matrix<Scalar> id = Matrix<Scalar>::identity(n);
    auto zero = [&](const Matrix<Scalar>& m) { return m.is_zero(); };
    verify(log, "(t - kappa)(t + kappa^{-1}) = 0", kRel,
           zero(r.t.minus_scalar(r.kappa) * r.t.minus_scalar(-r.kappa.inverse())));
    verify(log, "(t' - kappa')(t' + kappa'^{-1}) = 0", kRel,
           zero(r.t_prime.minus_scalar(r.kappa_prime) * r.t_prime.minus_scalar(-r.kappa_prime.inverse())));
    verify(log, "u (u + 1) = 0", kRel, zero(r.u * r.u.minus_scalar(Scalar(-1))));
    verify(log, "u'^2 = 0", kRel, zero(r.u_prime * r.u_prime));

    // t^2 = (kappa - kappa^{-1}) t + 1, and likewise for t'
    r.t_inv = r.t.minus_scalar(r.kappa - r.kappa.inverse());
    Matrix<Scalar> tp_inv = r.t_prime.minus_scalar(r.kappa_prime - r.kappa_prime.inverse());
    r.x_inv = r.t_inv * tp_inv;
    verify(log, "t, t' and x are invertible", kRep,
           r.t * r.t_inv == id && r.t_prime * tp_inv == id && r.x * r.x_inv == id);
    verify(log, "t' = x t^{-1}", kRel, r.t_prime == r.x * r.t_inv);
    Matrix<Scalar> u_plus = r.u + id;
    verify(log, "u' = x^{-1} (u + 1)", kRel, r.u_prime == r.x_inv * u_plus);
    verify(log, "x u' = u + 1", kRep, r.x * r.u_prime == u_plus);
    Matrix<Scalar> quq = r.u * r.x;
    quq *= q;
    verify(log, "u' = q u x", kRep, r.u_prime == quq);

    r.A_op = r.x + r.x_inv;
    const Scalar c = I * Scalar::q_pow(-Dr * half);
    Matrix<Scalar> tu = r.t * r.u_prime;
    Matrix<Scalar> ut = r.u * r.t_prime;
    r.A_star_op = tu + ut;
    r.A_star_op *= c;
    ut *= q;
    r.A_tilde_star_op = tu + ut;
    r.A_tilde_star_op *= c;
    return r;
}

template <class B>
void verify_x_action(const NilDahaRep<typename B::Field>& rep, const WModule<typename B::Field>& w, const B& be,
                     Report* log) {
    using F = typename B::Field;
    const int D = rep.D;
    const std::size_t n = 2 * static_cast<std::size_t>(D);
    WClosedForms cf = closed_forms(rep.e, D);
    const Scalar& tau = cf.tau;

    Matrix<F> want = lift(be, x_table(D, tau, 1));
    verify(log, "x matches the table for X on C_i^±", kTables, rep.x == want, mismatch_locus(want, rep.x));
    want = lift(be, x_table(D, tau, -1));
    verify(log, "x^{-1} matches the table for X^{-1} on C_i^±", kTables, rep.x_inv == want,
           mismatch_locus(want, rep.x_inv));
    want = lift(be, a_table(D, tau));
    verify(log, "x + x^{-1} matches the table for A on C_i^±", kTables, rep.A_op == want,
           mismatch_locus(want, rep.A_op));

    Matrix<F> d1(n, n), d2(n, n);
    for (int i = 0; i < D; ++i) {
        d1(2 * i, 2 * i) = be.lift(Scalar::q_pow(-i));
        d1(2 * i + 1, 2 * i + 1) = be.lift(Scalar::q_pow(-i - 1));
        d2(2 * i, 2 * i) = be.lift(Scalar::q_pow(-i));
        d2(2 * i + 1, 2 * i + 1) = be.lift(Scalar::q_pow(-i));
    }
    verify(log, "A*_op is diag(q^{-i} on C_i^-, q^{-i-1} on C_i^+)", kTables, rep.A_star_op == d1,
           mismatch_locus(d1, rep.A_star_op));
    verify(log, "A~*_op is diag(q^{-i} on C_i^±)", kTables, rep.A_tilde_star_op == d2,
           mismatch_locus(d2, rep.A_tilde_star_op));

    const Scalar q = Scalar::q();
    const Scalar qD = Scalar::q_pow(D);
    Vector<F> xx(n, F(0));
    xx[0] = be.lift(tau + tau.inverse() / qD);
    xx[1] = be.lift(tau * (qD - q + Scalar(1)));
    xx[2] = be.lift(tau * (Scalar(1) - q));
    verify(log, "X x = (tau + tau^{-1} q^{-D}) x + tau (q^D - q + 1) C_0^+ + tau (1 - q) C_1^-", kTables,
           rep.x * w.x_hat == xx, mismatch_locus(xx, rep.x * w.x_hat));
    Vector<F> xi(n, F(0));
    xi[1] = be.lift(-tau * qD);
    verify(log, "X^{-1} x = -tau q^D C_0^+", kTables, rep.x_inv * w.x_hat == xi, mismatch_locus(xi, rep.x_inv * w.x_hat));
}

template <class B>
void verify_bridge(const NilDahaRep<typename B::Field>& rep, const WModule<typename B::Field>& w, const B& be,
                   Report* log) {
    using F = typename B::Field;
    const int D = rep.D;
    const std::size_t n = 2 * static_cast<std::size_t>(D);
    auto seqs = four_sequences(rep.e, D);
    const F alpha = be.lift(seqs[0].alpha);
    const F beta = be.lift(seqs[0].beta);
    const F alpha_star = be.lift(seqs[0].alpha_star);
    const F beta_star = be.lift(seqs[0].beta_star);
    const F beta_tilde_star = be.lift(seqs[2].beta_star);
    const Matrix<F> id = Matrix<F>::identity(n);

    auto affine = [&](const F& a, const F& b, Matrix<F> m) {
        m *= b;
        m += id * a;
        return m;
    };
    Matrix<F> got = affine(alpha, beta * rep.tau, rep.A_op);
    verify(log, "A = alpha + beta tau (X + X^{-1})", kThm1, got == w.A, mismatch_locus(w.A, got));
    got = affine(alpha_star, beta_star, rep.A_star_op);
    verify(log, "A* = alpha* + beta* A*_op", kThm1, got == w.A_star, mismatch_locus(w.A_star, got));
    got = affine(alpha_star, beta_tilde_star, rep.A_tilde_star_op);
    verify(log, "A~* = alpha~* + beta~* A~*_op", kThm1, got == w.A_tilde_star, mismatch_locus(w.A_tilde_star, got));

    const F kp_inv = F(1) / rep.kappa_prime;
    got = affine(kp_inv / (rep.kappa_prime + kp_inv), F(1) / (rep.kappa_prime + kp_inv), rep.t_prime);
    verify(log, "pi = (T' + kappa'^{-1}) / (kappa' + kappa'^{-1})", kThm2, got == w.pi, mismatch_locus(w.pi, got));
    const F k_inv = F(1) / rep.kappa;
    got = affine(k_inv / (rep.kappa + k_inv), F(1) / (rep.kappa + k_inv), rep.t);
    verify(log, "pi~ = (T + kappa^{-1}) / (kappa + kappa^{-1})", kThm2, got == w.pi_tilde,
           mismatch_locus(w.pi_tilde, got));

    // the E_i of W are polynomials in A, so these checks pin the spectrum of the nil-DAHA side
    Matrix<F> a_side = affine(alpha, beta * rep.tau, rep.A_op);
    std::string where;
    ParamArray<F> p = lift(be, param_array(seqs[0]));
    for (int i = 0; i <= D && where.empty(); ++i) {
        F mult((i == 0 || i == D) ? 1 : 2);
        if (!(a_side * w.E[i] == w.E[i] * p.theta[i]) || w.E[i].trace() != mult) where = "i=" + std::to_string(i);
    }
    verify(log, "alpha + beta tau (x + x^{-1}) has eigenvalues theta_i with multiplicities 1, 2, ..., 2, 1", kThm1,
           where.empty(), where);
    verify(log, "W is irreducible under t, u and x", kThm1,
           cyclic_closure_dimension(std::vector<Matrix<F>>{rep.t, rep.u, rep.x}, w.x_hat) == n);
}

template void verify_x_action(const NilDahaRep<Scalar>&, const WModule<Scalar>&, const FormalBackend&, Report*);
template void verify_x_action(const NilDahaRep<AlgNum>&, const WModule<AlgNum>&, const ConcreteBackend&, Report*);
template void verify_bridge(const NilDahaRep<Scalar>&, const WModule<Scalar>&, const FormalBackend&, Report*);
template void verify_bridge(const NilDahaRep<AlgNum>&, const WModule<AlgNum>&, const ConcreteBackend&, Report*);

}  // namespace dpg
