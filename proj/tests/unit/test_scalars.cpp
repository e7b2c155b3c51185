#include <gtest/gtest.h>

#include <random>

#include "dpg/alg_num.hpp"
#include "dpg/backend.hpp"
#include "dpg/qcalc.hpp"
#include "dpg/scalar.hpp"
#include "oracles.hpp"

using namespace dpg;

namespace {

Scalar random_scalar(std::mt19937& rng) {
    std::uniform_int_distribution<int> coef(-3, 3), deg(0, 3);
    auto poly = [&] {
        Scalar p(0);
        int d = deg(rng);
        for (int k = 0; k <= d; ++k) p += Scalar(GaussRat(Rational(coef(rng)), Rational(coef(rng)))) * Scalar::v_pow(k);
        return p;
    };
    Scalar den = poly();
    while (den.is_zero()) den = poly();
    return poly() / den;
}

}  // namespace

TEST(Scalar, GaussIntegerValues) {
    EXPECT_TRUE(gauss_int(0).is_zero());
    EXPECT_EQ(gauss_int(1), Scalar(1));
    for (long q0 : {2L, 3L, 5L}) {
        for (long n = 0; n < 7; ++n) EXPECT_EQ(eval_rational(gauss_int(n), q0), Rational(oracle::q_int(q0, n)));
    }
}

TEST(Scalar, QPochhammerMatchesDirectProduct) {
    for (long q0 : {2L, 3L}) {
        for (long n = 0; n < 6; ++n) {
            Rational want(1);
            Rational r(1, 3);
            for (long k = 0; k < n; ++k) want *= Rational(1) - r * Rational(oracle::ipow(q0, k));
            EXPECT_EQ(eval_rational(q_pochhammer(Scalar(Rational(1, 3)), n), q0), want);
        }
    }
}

TEST(Scalar, FieldAxiomsOnRandomTriples) {
    std::mt19937 rng(20240611);
    for (int t = 0; t < 60; ++t) {
        Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), Scalar(1));
        EXPECT_EQ(a.conj().conj(), a);
        EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
    }
}

TEST(Scalar, GeneratorsAndConjugation) {
    EXPECT_EQ(Scalar::i() * Scalar::i(), Scalar(-1));
    EXPECT_EQ(Scalar::v().pow(4), Scalar::q());
    EXPECT_EQ(Scalar::q_pow(Rational(1, 2)).pow(2), Scalar::q());
    EXPECT_EQ(Scalar::i().conj(), -Scalar::i());
    EXPECT_EQ(Scalar::v().conj(), Scalar::v());
}

TEST(Scalar, CanonicalFormIsUnique) {
    Scalar q = Scalar::q();
    Scalar a = (q * q - Scalar(1)) / (q - Scalar(1));
    EXPECT_EQ(a, q + Scalar(1));
    EXPECT_TRUE(a.is_polynomial());
    EXPECT_EQ(a.str(), (Scalar(1) + q).str());
}

TEST(Scalar, TerminatingPhi32MatchesTermwiseSum) {
    // 3phi2(q^{-2}, 1/2, 1/5; 0, 1/7 | q, q) at q = 3, summed term by term
    const long q0 = 3;
    Scalar q = Scalar::q();
    Scalar got = phi_32(q.pow(-2), Scalar(Rational(1, 2)), Scalar(Rational(1, 5)), Scalar(Rational(1, 7)), q);
    auto poch = [&](Rational r, long n) {
        Rational p(1);
        for (long k = 0; k < n; ++k) p *= Rational(1) - r * Rational(oracle::ipow(q0, k));
        return p;
    };
    Rational want(0);
    for (long n = 0; n <= 2; ++n) {
        Rational num = poch(Rational(1, 9), n) * poch(Rational(1, 2), n) * poch(Rational(1, 5), n) *
                       Rational(oracle::ipow(q0, n));
        Rational den = poch(Rational(1, 7), n) * poch(Rational(q0), n);
        want += num / den;
    }
    EXPECT_EQ(eval_rational(got, q0), want);
    EXPECT_THROW(phi_32(Scalar::q(), Scalar(1), Scalar(1), Scalar(2), q), std::domain_error);
}

TEST(AlgNum, FourthRootArithmetic) {
    for (long q0 : {2L, 3L, 4L, 9L, 16L}) {
        AlgNum s = eval_at(Scalar::v(), q0);
        EXPECT_EQ(s * s * s * s, AlgNum(q0));
        EXPECT_EQ(s * s.inverse(), AlgNum(1));
        EXPECT_EQ(eval_at(Scalar::q(), q0), AlgNum(q0));
    }
    EXPECT_EQ(eval_at(Scalar::q_pow(Rational(1, 2)), 4), AlgNum(2));
}

TEST(AlgNum, EvaluationIsARingMap) {
    std::mt19937 rng(7);
    for (int t = 0; t < 30; ++t) {
        Scalar a = random_scalar(rng), b = random_scalar(rng);
        for (long q0 : {2L, 9L}) {
            try {
                EXPECT_EQ(eval_at(a * b, q0), eval_at(a, q0) * eval_at(b, q0));
                EXPECT_EQ(eval_at(a + b, q0), eval_at(a, q0) + eval_at(b, q0));
                EXPECT_EQ(eval_at(a.conj(), q0), eval_at(a, q0).conj());
            } catch (const std::domain_error&) {
                // a pole at q0
            }
        }
    }
}

TEST(AlgNum, RealSignAgreesWithFloatingPoint) {
    for (long q0 : {2L, 3L, 5L, 4L}) {
        AlgNum s = eval_at(Scalar::v(), q0);
        const double sd = std::pow(static_cast<double>(q0), 0.25);
        for (long a = -4; a <= 4; ++a) {
            for (long b = -3; b <= 3; ++b) {
                AlgNum x = AlgNum(a) + AlgNum(b) * s * s * s - AlgNum(Rational(7, 5)) * s;
                double xd = a + b * sd * sd * sd - 1.4 * sd;
                if (std::abs(xd) < 1e-9) continue;
                EXPECT_EQ(real_sign(x), xd > 0 ? 1 : -1) << q0 << " " << a << " " << b;
            }
        }
    }
    EXPECT_EQ(real_sign(AlgNum(0)), 0);
    EXPECT_THROW(real_sign(AlgNum(GaussRat::i())), std::domain_error);
}
