#include <gtest/gtest.h>

#include "dpg/backend.hpp"
#include "dpg/closed_forms.hpp"
#include "dpg/nonsym.hpp"

using namespace dpg;

namespace {

std::size_t idx(int i, bool plus) { return 2 * static_cast<std::size_t>(i) + (plus ? 1 : 0); }

}  // namespace

TEST(Nonsym, SmallestSymplecticNorms) {
    auto fam = build_family(Rational(1), 3);
    ConcreteBackend be{2};
    auto l1m = lift_poly<AlgNum>(be, fam.ell(1, false));
    auto l0p = lift_poly<AlgNum>(be, fam.ell(0, true));
    auto l0m = lift_poly<AlgNum>(be, fam.ell(0, false));
    EXPECT_EQ(inner_product_L(l1m, l1m, fam, be), AlgNum(Rational(12)));
    EXPECT_EQ(inner_product_L(l0p, l0p, fam, be), AlgNum(Rational(2)));
    EXPECT_EQ(inner_product_L(l0m, l0m, fam, be), AlgNum(Rational(1)));
    EXPECT_EQ(inner_product_L(l0m, l0p, fam, be), AlgNum(Rational(0)));
}

TEST(Nonsym, ConstantNormIsQToTheE) {
    for (auto e : {Rational(0), Rational(1, 2), Rational(3, 2)}) {
        auto fam = build_family(e, 3);
        FormalBackend be;
        auto l = fam.ell(0, true);
        EXPECT_EQ(inner_product_L(l, l, fam, be), Scalar::q_pow(e));
    }
}

TEST(Nonsym, FormMatchesTheGramOfW) {
    const Rational e(1, 2);
    const int D = 3;
    auto fam = build_family(e, D);
    auto rep = build_rep(e, D);
    auto w = build_w_module_formal(e, D);
    FormalBackend be;
    std::vector<LP> mono;
    for (int k = -D; k < D; ++k) mono.push_back(LP::eta(k));
    mono.push_back(LP::eta(2) + LP::monomial(Scalar::i(), -1));
    for (const auto& f : mono) {
        auto fx = f.at_matrix(rep.x, rep.x_inv) * w.x_hat;
        for (const auto& g : mono) {
            auto gx = g.at_matrix(rep.x, rep.x_inv) * w.x_hat;
            EXPECT_EQ(inner_product_L(f, g, fam, be), w.inner(fx, gx)) << f.str() << " | " << g.str();
        }
    }
}

TEST(Nonsym, GramIsDiagonalWithCellSizes) {
    for (auto e : {Rational(0), Rational(2)}) {
        const int D = 3;
        auto fam = build_family(e, D);
        auto g = ell_gram(fam, FormalBackend{});
        for (int i = 0; i < D; ++i) {
            for (bool plus : {false, true}) {
                for (std::size_t c = 0; c < g.cols(); ++c) {
                    Scalar want = c == idx(i, plus) ? cell_count(e, D, i, plus) : Scalar(0);
                    EXPECT_EQ(g(idx(i, plus), c), want);
                }
            }
        }
    }
}

TEST(Nonsym, DegreeWindows) {
    for (int D : {3, 4, 5}) {
        auto fam = build_family(Rational(1), D);
        for (int i = 0; i < D; ++i) {
            EXPECT_TRUE(fam.ell(i, true).within(-i - 1, i - 1)) << i;
            EXPECT_TRUE(fam.ell(i, false).within(-i, i)) << i;
            EXPECT_FALSE(fam.ell(i, false).is_zero());
            EXPECT_EQ(fam.ell(i, true), fam.ell_tilde_plus[i]);
            EXPECT_EQ(fam.ell(i, false), fam.ell_tilde_minus[i]);
        }
        EXPECT_TRUE(fam.ell(-1, true).is_zero());
    }
}

TEST(Nonsym, RecurrencesMatchXOnW) {
    const Rational e(3, 2);
    const int D = 4;
    Report r;
    auto fam = build_family(e, D, &r);
    verify_recurrences(fam, &r);
    EXPECT_TRUE(r.passed()) << r.summary();
    auto rep = build_rep(e, D);
    auto w = build_w_module_formal(e, D);
    // eta l_i(x) x_hat = x C_i, which is a column of x
    for (int i = 0; i < D; ++i) {
        for (bool plus : {false, true}) {
            for (int p : {1, -1}) {
                LP f = LP::eta(p) * fam.ell(i, plus);
                Vector<Scalar> got = f.at_matrix(rep.x, rep.x_inv) * w.x_hat;
                const auto& m = p == 1 ? rep.x : rep.x_inv;
                for (std::size_t k = 0; k < w.dim(); ++k) EXPECT_EQ(got[k], m(k, idx(i, plus)));
            }
        }
    }
}

TEST(Nonsym, BoundaryPolynomialsVanishAtEveryLambda) {
    auto fam = build_family(Rational(1, 2), 3);
    for (int i = -3; i < 3; ++i) {
        EXPECT_TRUE(fam.ell(3, true)(fam.lambda_at(i)).is_zero());
        EXPECT_TRUE(fam.ell(3, false)(fam.lambda_at(i)).is_zero());
    }
}

TEST(Nonsym, InnerProductOnlyOnL) {
    auto fam = build_family(Rational(1), 3);
    FormalBackend be;
    EXPECT_THROW(inner_product_L(LP::eta(3), LP::eta(0), fam, be), std::domain_error);
    EXPECT_THROW(inner_product_L(LP::eta(0), LP::eta(-4), fam, be), std::domain_error);
    EXPECT_NO_THROW(inner_product_L(LP::eta(2), LP::eta(-3), fam, be));
}
