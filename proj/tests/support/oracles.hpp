#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's own closed forms or graph analytics.

#include <cmath>
#include <cstdint>
#include <deque>
#include <vector>

#include "dpg/polar_space.hpp"

namespace oracle {

using dpg::Integer;
using dpg::Rational;

inline std::vector<int> bfs(const dpg::DPGraph& g, const std::vector<std::size_t>& sources) {
    std::vector<int> dist(g.size(), -1);
    std::deque<std::size_t> queue;
    for (auto s : sources) {
        dist[s] = 0;
        queue.push_back(s);
    }
    while (!queue.empty()) {
        auto u = queue.front();
        queue.pop_front();
        for (auto w : g.adj[u]) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

struct Intersection {
    std::vector<Rational> a, b, c, k;  // k_i = |Gamma_i(x)|
};

/// Intersection numbers counted around vertex x.
inline Intersection count_intersection(const dpg::DPGraph& g, std::size_t x) {
    auto dist = bfs(g, {x});
    int D = 0;
    for (int d : dist) D = std::max(D, d);
    Intersection r;
    r.a.assign(D + 1, Rational(-1));
    r.b = r.a;
    r.c = r.a;
    r.k.assign(D + 1, Rational(0));
    for (std::size_t y = 0; y < g.size(); ++y) {
        int i = dist[y];
        r.k[i] += 1;
        if (r.a[i] >= 0) continue;
        long a = 0, b = 0, c = 0;
        for (auto z : g.adj[y]) {
            if (dist[z] == i - 1) ++c;
            if (dist[z] == i) ++a;
            if (dist[z] == i + 1) ++b;
        }
        r.a[i] = a;
        r.b[i] = b;
        r.c[i] = c;
    }
    return r;
}

/// Dual eigenvalues theta*_i = m u_i of the eigenvalue theta, from the
/// cosine recurrence c_i u_{i-1} + a_i u_i + b_i u_{i+1} = theta u_i and
/// the multiplicity m = |X| / sum_i k_i u_i^2.
inline std::vector<Rational> dual_eigenvalues(const Intersection& n, const Rational& theta) {
    const std::size_t D = n.a.size() - 1;
    std::vector<Rational> u(D + 1);
    u[0] = 1;
    u[1] = theta / n.b[0];
    for (std::size_t i = 1; i < D; ++i) u[i + 1] = (theta * u[i] - n.c[i] * u[i - 1] - n.a[i] * u[i]) / n.b[i];
    Rational size(0), sum(0);
    for (std::size_t i = 0; i <= D; ++i) {
        size += n.k[i];
        sum += n.k[i] * u[i] * u[i];
    }
    Rational m = size / sum;
    std::vector<Rational> out;
    for (auto& x : u) out.push_back(Rational(m * x));
    return out;
}

inline Integer ipow(long base, long exp) {
    Integer r = 1;
    for (long k = 0; k < exp; ++k) r *= base;
    return r;
}

/// 1 + q + ... + q^{n-1}.
inline Integer q_int(long q, long n) {
    Integer s = 0;
    for (long k = 0; k < n; ++k) s += ipow(q, k);
    return s;
}

/// q^{x/2} for a square q when x is odd.
inline Integer half_pow(long q, long twice_exp) {
    if (twice_exp % 2 == 0) return ipow(q, twice_exp / 2);
    long r = std::lround(std::sqrt(static_cast<double>(q)));
    return ipow(r, twice_exp);
}

/// Number of maximal isotropic subspaces: prod_{i=0}^{D-1} (q^{i+e} + 1),
/// with e given as twice its value.
inline Integer vertex_count(long q, long twice_e, int D) {
    Integer n = 1;
    for (int i = 0; i < D; ++i) n *= half_pow(q, 2 * i + twice_e) + 1;
    return n;
}

}  // namespace oracle
