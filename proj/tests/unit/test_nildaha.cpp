#include <gtest/gtest.h>

#include "dpg/backend.hpp"
#include "dpg/nildaha.hpp"

using namespace dpg;

namespace {

using M = Matrix<Scalar>;

M id(int D) { return M::identity(2 * static_cast<std::size_t>(D)); }

}  // namespace

TEST(NilDaha, RelationsRecomputed) {
    for (auto e : {Rational(0), Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)}) {
        for (int D : {3, 4}) {
            Report r;
            auto rep = build_rep(e, D, &r);
            EXPECT_TRUE(r.passed()) << r.summary();
            const auto I = id(D);
            const Scalar q = Scalar::q();
            const Scalar k = Scalar::q_pow(-e / 2);
            const Scalar kp = Scalar::i() * Scalar::q_pow(Rational(-D, 2));
            EXPECT_EQ(rep.kappa, k);
            EXPECT_EQ(rep.kappa_prime, kp);
            EXPECT_TRUE(((rep.t - I * k) * (rep.t + I * (Scalar(1) / k))).is_zero());
            EXPECT_TRUE(((rep.t_prime - I * kp) * (rep.t_prime + I * (Scalar(1) / kp))).is_zero());
            EXPECT_TRUE((rep.u * (rep.u + I)).is_zero());
            EXPECT_TRUE((rep.u_prime * rep.u_prime).is_zero());
            EXPECT_EQ(rep.t * rep.t_inv, I);
            EXPECT_EQ(rep.x * rep.x_inv, I);
            EXPECT_EQ(rep.t_prime, rep.x * rep.t_inv);
            EXPECT_EQ(rep.x * rep.u_prime, rep.u + I);
            EXPECT_EQ(rep.u_prime, q * rep.u * rep.x);
        }
    }
}

TEST(NilDaha, TBlockEntries) {
    auto rep = build_rep(Rational(1), 3);
    const Scalar h = Scalar::q_pow(Rational(1, 2));
    for (std::size_t i = 0; i < 3; ++i) {
        const std::size_t a = 2 * i, b = 2 * i + 1;
        EXPECT_EQ(rep.t(a, a), Scalar(1) / h - h);
        EXPECT_EQ(rep.t(a, b), h);
        EXPECT_EQ(rep.t(b, a), Scalar(1) / h);
        EXPECT_EQ(rep.t(b, b), Scalar(0));
    }
    EXPECT_EQ(rep.t_prime(0, 0), Scalar::i() * Scalar::q_pow(Rational(-3, 2)));
}

TEST(NilDaha, PiTildeBlock) {
    const Rational e(3, 2);
    auto rep = build_rep(e, 3);
    const Scalar qe = Scalar::q_pow(e);
    const auto pt = (rep.t + M::identity(6) * (Scalar(1) / rep.kappa)) * (Scalar(1) / (rep.kappa + Scalar(1) / rep.kappa));
    // column convention: pt C_i^- = (C_i^- + C_i^+)/(1+q^e), pt C_i^+ = q^e (C_i^- + C_i^+)/(1+q^e)
    for (std::size_t i = 0; i < 3; ++i) {
        const std::size_t a = 2 * i, b = 2 * i + 1;
        EXPECT_EQ(pt(a, a), Scalar(1) / (Scalar(1) + qe));
        EXPECT_EQ(pt(b, a), Scalar(1) / (Scalar(1) + qe));
        EXPECT_EQ(pt(a, b), qe / (Scalar(1) + qe));
        EXPECT_EQ(pt(b, b), qe / (Scalar(1) + qe));
    }
}

TEST(NilDaha, XInverseOnTheBaseVector) {
    const int D = 4;
    auto rep = build_rep(Rational(1, 2), D);
    const Scalar tau = Scalar::i() * Scalar::q_pow(-(Rational(D) + Rational(1, 2)) / 2);
    EXPECT_EQ(rep.tau, tau);
    // x_hat = C_0^-, so its image is column 0
    for (std::size_t r = 0; r < 2 * D; ++r) {
        Scalar want = r == 1 ? -tau * Scalar::q_pow(Rational(D)) : Scalar(0);
        EXPECT_EQ(rep.x_inv(r, 0), want) << r;
    }
    for (int i = 0; i < D; ++i) EXPECT_EQ(rep.x_inv(2 * i, 2 * i), Scalar(0));
}

TEST(NilDaha, XHasTheSimpleEigenvaluesConcretely) {
    for (long q0 : {2L, 3L}) {
        const int D = 3;
        const Rational e(1);
        ConcreteBackend be{q0};
        auto rep = lift(be, build_rep(e, D));
        const Scalar tau = Scalar::i() * Scalar::q_pow(-(Rational(D) + e) / 2);
        const std::size_t n = 2 * D;
        for (int i = -D; i < D; ++i) {
            Scalar lam = i >= 0 ? tau * Scalar::q_pow(Rational(i)) : Scalar(1) / (tau * Scalar::q_pow(Rational(-i)));
            EXPECT_EQ(rank(rep.x.minus_scalar(be.lift(lam))), n - 1) << "q=" << q0 << " i=" << i;
        }
    }
}

TEST(NilDaha, AStarDiagonal) {
    auto rep = build_rep(Rational(2), 3);
    for (std::size_t i = 0; i < 3; ++i) {
        const Scalar qi = Scalar::q_pow(-Rational(static_cast<long>(i)));
        EXPECT_EQ(rep.A_star_op(2 * i, 2 * i), qi);
        EXPECT_EQ(rep.A_star_op(2 * i + 1, 2 * i + 1), qi / Scalar::q());
        EXPECT_EQ(rep.A_tilde_star_op(2 * i + 1, 2 * i + 1), qi);
    }
}

TEST(NilDaha, XTablesAgainstTheRepresentation) {
    for (int D : {3, 5}) {
        auto rep = build_rep(Rational(1, 2), D);
        EXPECT_EQ(x_table(D, rep.tau, 1), rep.x);
        EXPECT_EQ(x_table(D, rep.tau, -1), rep.x_inv);
        EXPECT_EQ(a_table(D, rep.tau), rep.A_op);
        EXPECT_EQ(rep.A_op, rep.x + rep.x_inv);
    }
}
