#include <gtest/gtest.h>

#include "dpg/backend.hpp"
#include "dpg/drg.hpp"
#include "dpg/leonard.hpp"
#include "oracles.hpp"

using namespace dpg;

TEST(Leonard, SequencesPassTheirClosedFormChecks) {
    for (auto e : {Rational(0), Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)}) {
        for (int D : {3, 4}) {
            Report r;
            for (const auto& s : four_sequences(e, D)) verify_sequence(s, &r);
            EXPECT_TRUE(r.passed()) << r.summary();
        }
    }
}

TEST(Leonard, PhiIntersectionNumbersAreTheGraphs) {
    struct Case {
        Family f;
        long q;
        int D;
    };
    for (auto c : {Case{Family::C, 2, 3}, Case{Family::D, 2, 4}, Case{Family::TwoD, 2, 3}}) {
        auto g = dual_polar_graph(build_space(c.f, c.q, c.D));
        auto n = oracle::count_intersection(g, 0);
        auto seq = four_sequences(g.space.params.e(), c.D)[0];
        auto closed = intersection_numbers_closed(seq);
        auto general = intersection_numbers_general(param_array(seq));
        for (int i = 0; i <= c.D; ++i) {
            EXPECT_EQ(eval_rational(closed.b[i], c.q), n.b[i]);
            EXPECT_EQ(eval_rational(closed.c[i], c.q), n.c[i]);
            EXPECT_EQ(eval_rational(closed.a[i], c.q), n.a[i]);
            EXPECT_EQ(general.b[i], closed.b[i]);
            EXPECT_EQ(general.c[i], closed.c[i]);
        }
    }
}

TEST(Leonard, PhiWeightsAreMultiplicitiesOverVertexCount) {
    auto g = dual_polar_graph(build_space(Family::C, 2, 3));
    auto n = oracle::count_intersection(g, 0);
    auto prof = profile_from_graph(g);
    auto m = m_values_closed(four_sequences(Rational(1), 3)[0]);
    Rational size(static_cast<long>(g.size()));
    for (int i = 0; i <= 3; ++i) {
        // theta*_0 of theta_i is its multiplicity
        auto ts = oracle::dual_eigenvalues(n, prof.theta[i]);
        EXPECT_EQ(eval_rational(m[i], 2), ts[0] / size) << i;
    }
}

TEST(Leonard, WeightsSumToOne) {
    for (const auto& s : four_sequences(Rational(1, 2), 4)) {
        Scalar total(0);
        for (const auto& x : m_values_closed(s)) total += x;
        EXPECT_EQ(total, Scalar(1)) << s.name;
        EXPECT_EQ(m_values_general(param_array(s)), m_values_closed(s)) << s.name;
    }
}

TEST(Leonard, HPolynomialsAreMonicAndSymmetric) {
    const Scalar tau = Scalar::i() * Scalar::q_pow(Rational(-2));
    for (int i = 0; i <= 3; ++i) {
        auto h = h_poly(i, tau, 3);
        EXPECT_TRUE(h.is_symmetric());
        EXPECT_EQ(h.high(), i);
        EXPECT_EQ(h.coeff(i), Scalar(1));
    }
}

TEST(Leonard, DualQKrawtchoukValuesAgainstDirectSum) {
    // the 3phi2 against the sum over the parameter array
    auto s = four_sequences(Rational(1), 3)[0];
    auto p = param_array(s);
    for (int i = 0; i <= 3; ++i) {
        for (int j = 0; j <= 3; ++j) EXPECT_EQ(f_value(s, i, j), f_value_sum(p, i, j)) << i << "," << j;
        EXPECT_EQ(f_value(s, i, 0), Scalar(1));
    }
}

TEST(Leonard, FourSystemsRealizedFormallyAndConcretely) {
    {
        Report r;
        auto w = build_w_module_formal(Rational(1, 2), 3, &r);
        auto sys = realize_four_systems(w, FormalBackend{}, &r);
        EXPECT_TRUE(r.passed()) << r.summary();
        EXPECT_EQ(sys[0].d, 3);
        EXPECT_EQ(sys[1].d, 1);
        EXPECT_EQ(sys[2].d, 2);
        EXPECT_EQ(sys[3].d, 2);
    }
    {
        auto g = dual_polar_graph(build_space(Family::D, 2, 3));
        auto dist = all_distances(g);
        auto base = default_base_pair(g);
        auto prof = profile_from_graph(g, dist, base);
        Report r;
        auto w = build_w_module_concrete(g, clique_partition(g, dist, base, prof), prof, &r);
        auto sys = realize_four_systems(w, ConcreteBackend{2}, &r);
        EXPECT_TRUE(r.passed()) << r.summary();
        auto n = oracle::count_intersection(g, 0);
        for (int i = 0; i <= 3; ++i) EXPECT_EQ(sys[0].measured.b[i], AlgNum(n.b[i]));
    }
}

TEST(Leonard, DegenerateSequenceIsRejected) {
    DualQKSeq s = four_sequences(Rational(1), 3)[0];
    s.beta = Scalar(0);
    EXPECT_THROW(param_array(s), std::domain_error);
}
