#include <gtest/gtest.h>

#include <set>

#include "dpg/finite_field.hpp"
#include "dpg/polar_space.hpp"
#include "oracles.hpp"

using namespace dpg;

TEST(FiniteField, FieldAxiomsExhaustive) {
    for (long q : {2L, 3L, 4L, 5L, 8L, 9L, 16L}) {
        FiniteField f(q);
        ASSERT_EQ(f.size(), q);
        for (int a = 0; a < q; ++a) {
            auto ea = static_cast<FiniteField::Elem>(a);
            EXPECT_EQ(f.add(ea, f.neg(ea)), 0);
            if (a != 0) EXPECT_EQ(f.mul(ea, f.inv(ea)), 1);
            for (int b = 0; b < q; ++b) {
                auto eb = static_cast<FiniteField::Elem>(b);
                EXPECT_EQ(f.mul(ea, eb), f.mul(eb, ea));
                for (int c = 0; c < q; c += 3) {
                    auto ec = static_cast<FiniteField::Elem>(c);
                    EXPECT_EQ(f.mul(ea, f.add(eb, ec)), f.add(f.mul(ea, eb), f.mul(ea, ec)));
                }
            }
        }
        // a^{q-1} = 1 on the nonzero elements
        for (int a = 1; a < q; ++a) EXPECT_EQ(f.pow(static_cast<FiniteField::Elem>(a), q - 1), 1);
    }
}

TEST(FiniteField, InvolutionOnSquareOrders) {
    for (long q : {4L, 9L, 16L}) {
        FiniteField f(q);
        ASSERT_TRUE(f.has_involution());
        int fixed = 0;
        for (int a = 0; a < q; ++a) {
            auto ea = static_cast<FiniteField::Elem>(a);
            EXPECT_EQ(f.conj(f.conj(ea)), ea);
            fixed += f.conj(ea) == ea;
        }
        EXPECT_EQ(fixed, f.sqrt_order());
    }
    EXPECT_FALSE(FiniteField(8).has_involution());
}

TEST(PolarSpace, VertexCountsMatchProductFormula) {
    struct Case {
        Family f;
        long q;
        int D;
        long twice_e;
        long listed;
    };
    for (auto c : {Case{Family::C, 2, 3, 2, 135}, Case{Family::C, 3, 3, 2, 1120}, Case{Family::B, 2, 3, 2, 135},
                   Case{Family::D, 2, 3, 0, 30}, Case{Family::D, 2, 4, 0, 270}, Case{Family::TwoAOdd, 4, 3, 1, 891},
                   Case{Family::TwoD, 2, 3, 4, 765}, Case{Family::D, 3, 3, 0, 80}}) {
        auto g = dual_polar_graph(build_space(c.f, c.q, c.D));
        EXPECT_EQ(Integer(static_cast<unsigned long>(g.size())), oracle::vertex_count(c.q, c.twice_e, c.D))
            << family_tag(c.f);
        if (c.listed) EXPECT_EQ(static_cast<long>(g.size()), c.listed);
        EXPECT_EQ(predicted_vertex_count(g.space.params, c.q), oracle::vertex_count(c.q, c.twice_e, c.D));
    }
}

TEST(PolarSpace, VerticesAreTotallyIsotropicAndDistinct) {
    auto space = build_space(Family::TwoAOdd, 4, 3);
    auto g = dual_polar_graph(space);
    const auto& f = *space.field;
    std::set<std::vector<FiniteField::Elem>> seen;
    for (const auto& v : g.vertices) {
        ASSERT_EQ(v.k, 3);
        EXPECT_TRUE(seen.insert(v.rows).second);
        for (int a = 0; a < v.k; ++a) {
            FVec x(v.row(a), v.row(a) + v.n);
            EXPECT_TRUE(space.isotropic(x));
            for (int b = 0; b < v.k; ++b) {
                FVec y(v.row(b), v.row(b) + v.n);
                EXPECT_EQ(space.pair(x, y), 0);
            }
        }
    }
    // adjacency is meeting in a (D-1)-space
    for (std::size_t u = 0; u < 40; ++u) {
        for (std::size_t w = u + 1; w < g.size(); ++w) {
            EXPECT_EQ(g.adjacent(u, w), intersection_dimension(f, g.vertices[u], g.vertices[w]) == 2);
        }
    }
}

TEST(PolarSpace, HermitianNeedsSquareOrder) {
    try {
        build_space(Family::TwoAOdd, 3, 3);
        FAIL() << "expected an exception";
    } catch (const std::invalid_argument& ex) {
        EXPECT_STREQ(ex.what(), "Hermitian family requires square q");
    }
}

TEST(PolarSpace, EnumerationCap) {
    EXPECT_THROW(dual_polar_graph(build_space(Family::C, 3, 3), {100}), std::runtime_error);
}

TEST(PolarSpace, EdgeListHeaderAndEdges) {
    auto g = dual_polar_graph(build_space(Family::D, 2, 3));
    std::string s = edge_list(g);
    EXPECT_EQ(s.substr(0, s.find('\n')), "# D 2 3 30");
    std::size_t lines = 0;
    for (char ch : s) lines += ch == '\n';
    std::size_t edges = 0;
    for (const auto& a : g.adj) edges += a.size();
    EXPECT_EQ(lines - 1, edges / 2);
    EXPECT_EQ(s, edge_list(dual_polar_graph(build_space(Family::D, 2, 3))));
}

TEST(PolarSpace, EveryEdgeLiesInOneMaximalClique) {
    for (auto f : {Family::C, Family::D, Family::B}) {
        auto g = dual_polar_graph(build_space(f, 2, 3));
        const long a1 = f == Family::D ? 0 : 1;
        for (std::size_t u = 0; u < g.size(); ++u) {
            for (auto v : g.adj[u]) {
                std::vector<std::uint32_t> common;
                for (auto w : g.adj[u]) {
                    if (g.adjacent(w, v)) common.push_back(w);
                }
                EXPECT_EQ(static_cast<long>(common.size()), a1);
                for (std::size_t i = 0; i < common.size(); ++i) {
                    for (std::size_t j = i + 1; j < common.size(); ++j) EXPECT_TRUE(g.adjacent(common[i], common[j]));
                }
            }
        }
    }
}
