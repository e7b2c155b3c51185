#include "dpg/closed_forms.hpp"

#include "dpg/qcalc.hpp"

namespace dpg {

namespace {

Scalar qp(long k) { return Scalar::q_pow(k); }
Scalar qp(const Rational& r) { return Scalar::q_pow(r); }

}  // namespace

Scalar cell_count(const Rational& e, int D, int i, bool plus) {
    Scalar prod(1);
    for (int n = 1; n <= i; ++n) prod *= (qp(D) - qp(n)) / (qp(n) - Scalar(1));
    return qp(e * (plus ? i + 1 : i)) * prod;
}

Scalar vertex_count_formal(const Rational& e, int D) {
    Scalar n(1);
    for (int i = 0; i < D; ++i) n *= Scalar(1) + qp(e + i);
    return n;
}

WClosedForms closed_forms(const Rational& e, int D) {
    WClosedForms cf;
    cf.e = e;
    cf.D = D;
    cf.profile = profile_formal(e, D);
    cf.vertex_count = vertex_count_formal(e, D);
    const Scalar one(1);
    const Scalar q = Scalar::q();
    const Scalar qe = qp(e);
    cf.clique_size = one + qe;

    const int n = 2 * D;
    cf.counts.resize(n);
    for (int i = 0; i < D; ++i) {
        cf.counts[2 * i] = cell_count(e, D, i, false);
        cf.counts[2 * i + 1] = cell_count(e, D, i, true);
    }

    cf.alpha = (qe - one) / (one - q);
    cf.beta = qp(e + D) / (q - one);
    cf.gamma = one / (one - q);
    cf.alpha_star = q * (one + qp(e + D - 2)) / (one - q);
    cf.beta_star = q * (one + qp(e + D - 2)) * (one + qp(e + D - 1)) / ((q - one) * (one + qp(e - 1)));
    cf.tau = Scalar::i() * qp(-(e + D) / 2);

    cf.A = Matrix<Scalar>(n, n);
    for (int i = 0; i < D; ++i) {
        // A C_i^-
        int col = 2 * i;
        if (i >= 1) cf.A(2 * i - 2, col) = (qp(e + D) - qp(e + i)) / (q - one);
        cf.A(2 * i, col) = (qe - one) * gauss_int(i);
        cf.A(2 * i + 1, col) = qp(i);
        if (i + 1 < D) cf.A(2 * i + 2, col) = gauss_int(i + 1);
        // A C_i^+
        col = 2 * i + 1;
        if (i >= 1) cf.A(2 * i - 1, col) = (qp(e + D) - qp(e + i)) / (q - one);
        cf.A(2 * i, col) = qp(e + i);
        cf.A(2 * i + 1, col) = (qe - one) * gauss_int(i + 1);
        if (i + 1 < D) cf.A(2 * i + 3, col) = gauss_int(i + 1);
    }

    const auto& ts = cf.profile.theta_star;
    const auto& tts = cf.profile.theta_star_clique;
    Vector<Scalar> ds(n), dts(n);
    for (int i = 0; i < D; ++i) {
        ds[2 * i] = ts[i];
        ds[2 * i + 1] = ts[i + 1];
        dts[2 * i] = tts[i];
        dts[2 * i + 1] = tts[i];
    }
    cf.A_star = Matrix<Scalar>::diagonal(ds);
    cf.A_tilde_star = Matrix<Scalar>::diagonal(dts);

    cf.pi = Matrix<Scalar>(n, n);
    cf.pi(0, 0) = one;
    cf.pi(n - 1, n - 1) = one;
    for (int i = 1; i < D; ++i) {
        Scalar lo = (qp(i) - one) / (qp(D) - one);
        Scalar hi = (qp(D) - qp(i)) / (qp(D) - one);
        for (int r : {2 * i - 1, 2 * i}) {
            cf.pi(r, 2 * i - 1) = lo;
            cf.pi(r, 2 * i) = hi;
        }
    }
    cf.pi_tilde = Matrix<Scalar>(n, n);
    for (int i = 0; i < D; ++i) {
        for (int r : {2 * i, 2 * i + 1}) {
            cf.pi_tilde(r, 2 * i) = one / (one + qe);
            cf.pi_tilde(r, 2 * i + 1) = qe / (one + qe);
        }
    }

    cf.w.assign(n, Scalar(0));
    cf.w_tilde.assign(n, Scalar(0));
    for (int i = 0; i < D; ++i) {
        cf.w[2 * i] = qp(-i) - one;
        cf.w[2 * i + 1] = qp(D - i - 1) - one;
        cf.w_tilde[2 * i] = -qp(e - i);
        cf.w_tilde[2 * i + 1] = qp(-i);
    }
    for (int i = 0; i + 2 <= D; ++i) {
        Vector<Scalar> u(n, Scalar(0));
        u[2 * i + 1] = qp(D - i - 1) - one;
        u[2 * i + 2] = qp(-i - 1) - one;
        cf.u_perp.push_back(std::move(u));
    }
    for (int i = 0; i < D; ++i) {
        Vector<Scalar> u(n, Scalar(0));
        u[2 * i] = -qp(e - i);
        u[2 * i + 1] = qp(-i);
        cf.u_tilde_perp.push_back(std::move(u));
    }

    cf.c = cf.vertex_count * (cf.alpha_star + cf.beta_star) /
           (cf.alpha_star * cf.beta_star * qp(e - 1) * (one - q));
    cf.c_tilde = cf.vertex_count * q * (one + qe) / (cf.beta_star * (one - q));
    return cf;
}

}  // namespace dpg
