#include <gtest/gtest.h>

#include "dpg/backend.hpp"
#include "dpg/drg.hpp"
#include "dpg/w_module.hpp"
#include "oracles.hpp"

using namespace dpg;

namespace {

struct Built {
    DPGraph g;
    BasePair base;
    WModule<AlgNum> w;
};

Built concrete(Family f, long q, int D, std::optional<std::uint64_t> seed = {}) {
    Built b{dual_polar_graph(build_space(f, q, D)), {}, {}};
    auto dist = all_distances(b.g);
    auto prof = profile_from_graph(b.g, dist, default_base_pair(b.g));
    b.base = seed ? random_base_pair(b.g, *seed) : default_base_pair(b.g);
    auto part = clique_partition(b.g, dist, b.base, prof);
    b.w = build_w_module_concrete(b.g, part, prof);
    return b;
}

/// Cell of z from distances to x and to the clique.
std::vector<int> cells_by_bfs(const DPGraph& g, const BasePair& base) {
    auto dx = oracle::bfs(g, {base.x});
    auto dc = oracle::bfs(g, base.clique);
    std::vector<int> cell(g.size());
    for (std::size_t z = 0; z < g.size(); ++z) cell[z] = 2 * dc[z] + (dx[z] == dc[z] + 1 ? 1 : 0);
    return cell;
}

}  // namespace

TEST(WModule, FormalBuildPassesEveryCheck) {
    for (auto e : {Rational(0), Rational(1, 2), Rational(2)}) {
        Report r;
        auto w = build_w_module_formal(e, 3, &r);
        EXPECT_TRUE(r.passed()) << r.summary();
        EXPECT_GT(r.checks().size(), 20u);
        EXPECT_EQ(w.dim(), 6u);
    }
}

TEST(WModule, ConcreteMatricesAgainstNeighbourCounts) {
    for (auto [f, q, D] : {std::tuple{Family::C, 2L, 3}, std::tuple{Family::D, 2L, 4}}) {
        auto b = concrete(f, q, D);
        auto cell = cells_by_bfs(b.g, b.base);
        const std::size_t n = 2 * static_cast<std::size_t>(D);
        std::vector<long> size(n, 0);
        for (int c : cell) ++size[c];
        for (std::size_t k = 0; k < n; ++k) EXPECT_EQ(b.w.gram[k], AlgNum(size[k]));
        // A C_k = sum_j (neighbours in C_k of a vertex of C_j) C_j
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::size_t y = 0;
                while (cell[y] != static_cast<int>(j)) ++y;
                long into_k = 0;
                for (auto t : b.g.adj[y]) into_k += cell[t] == static_cast<int>(k);
                EXPECT_EQ(b.w.A(j, k), AlgNum(into_k)) << j << "," << k;
            }
        }
    }
}

TEST(WModule, ConcreteEqualsFormalAtQ0) {
    auto b = concrete(Family::B, 2, 3);
    auto formal = build_w_module_formal(Rational(1), 3);
    ConcreteBackend be{2};
    EXPECT_EQ(lift(be, formal.gram), b.w.gram);
    EXPECT_EQ(lift(be, formal.A), b.w.A);
    EXPECT_EQ(lift(be, formal.A_star), b.w.A_star);
    EXPECT_EQ(lift(be, formal.A_tilde_star), b.w.A_tilde_star);
    EXPECT_EQ(lift(be, formal.pi), b.w.pi);
    for (std::size_t i = 0; i < formal.E.size(); ++i) EXPECT_EQ(lift(be, formal.E[i]), b.w.E[i]);
}

TEST(WModule, IdempotentsAndTraces) {
    auto w = build_w_module_formal(Rational(3, 2), 3);
    Matrix<Scalar> sum(6, 6);
    for (std::size_t i = 0; i < w.E.size(); ++i) {
        EXPECT_EQ(w.E[i] * w.E[i], w.E[i]);
        for (std::size_t j = 0; j < i; ++j) EXPECT_TRUE((w.E[i] * w.E[j]).is_zero());
        sum += w.E[i];
    }
    EXPECT_EQ(sum, Matrix<Scalar>::identity(6));
    EXPECT_EQ(w.pi * w.pi, w.pi);
    EXPECT_EQ(w.pi_tilde * w.pi_tilde, w.pi_tilde);
    Scalar total(0);
    for (const auto& c : w.gram) total += c;
    Scalar want(1);
    for (int i = 0; i < 3; ++i) want *= Scalar(1) + Scalar::q_pow(Rational(3, 2) + i);
    EXPECT_EQ(total, want);
}

TEST(WModule, IndependentOfTheBasePair) {
    auto a = concrete(Family::C, 2, 3);
    auto b = concrete(Family::C, 2, 3, 12345);
    EXPECT_NE(a.base.x, b.base.x);
    EXPECT_EQ(compare_modules(a.w, b.w), "");
}
