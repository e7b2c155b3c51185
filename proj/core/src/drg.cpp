#include "dpg/drg.hpp"

#include <algorithm>
#include <cmath>

#include "dpg/backend.hpp"
#include "dpg/closed_forms.hpp"
#include "dpg/qcalc.hpp"

namespace dpg {

namespace {

Scalar qp(long k) { return Scalar::q_pow(k); }
Scalar qp(const Rational& r) { return Scalar::q_pow(r); }

const char* kDrg = "distance-regularity of the dual polar graph";
const char* kClique = "Delsarte clique and its intersection numbers";
const char* kPartition = "equitable partition relative to a vertex and a clique";

std::int64_t as_int64(const Rational& r) {
    if (r.get_den() != 1 || !r.get_num().fits_slong_p()) throw std::domain_error("eigenvalue is not a machine integer");
    return r.get_num().get_si();
}

void matvec_shift(const DPGraph& g, const std::vector<std::int64_t>& v, std::int64_t th, std::vector<std::int64_t>& out) {
    const std::size_t n = g.size();
    out.assign(n, 0);
    for (std::size_t y = 0; y < n; ++y) {
        std::int64_t s = -th * v[y];
        for (auto z : g.adj[y]) s += v[z];
        out[y] = s;
    }
}

}  // namespace

DRGProfile<Scalar> profile_formal(const Rational& e, int D) {
    DRGProfile<Scalar> p;
    p.D = D;
    const Scalar one(1);
    const Scalar q = Scalar::q();
    const Scalar qe = qp(e);
    const Scalar as = q * (one + qp(e + D - 2)) / (one - q);
    const Scalar bs = q * (one + qp(e + D - 2)) * (one + qp(e + D - 1)) / ((q - one) * (one + qp(e - 1)));
    const Scalar bts = q * (one + qp(e + D - 2)) * (one + qp(e + D - 1)) / ((q - one) * (one + qe));
    for (int i = 0; i <= D; ++i) {
        p.a.push_back((qe - one) * gauss_int(i));
        p.b.push_back(qp(i) * qe * gauss_int(D - i));
        p.c.push_back(gauss_int(i));
        p.theta.push_back(qe * gauss_int(D - i) - gauss_int(i));
        p.theta_star.push_back(as + bs * qp(-i));
    }
    for (int i = 0; i < D; ++i) {
        p.a_clique.push_back(qe * gauss_int(i + 1) - gauss_int(i));
        p.b_clique.push_back(qp(i + 1) * qe * gauss_int(D - i - 1));
        p.c_clique.push_back(gauss_int(i));
        p.theta_star_clique.push_back(as + bts * qp(-i));
    }
    return p;
}

DualColumn dual_column(const DPGraph& g, const std::vector<Rational>& theta, std::size_t x) {
    const std::size_t n = g.size();
    const int D = static_cast<int>(theta.size()) - 1;
    std::vector<std::int64_t> th;
    for (const auto& t : theta) th.push_back(as_int64(t));

    double bound = 1;
    double k = static_cast<double>(g.adj.empty() ? 0 : g.adj[0].size());
    for (auto t : th) bound *= k + std::fabs(static_cast<double>(t));
    if (bound > 4e18) throw std::domain_error("instance too large for integer projector columns");

    std::vector<std::int64_t> v(n, 0), tmp;
    v[x] = 1;
    Integer den = 1;
    for (int j = 0; j <= D; ++j) {
        if (j == 1) continue;
        matvec_shift(g, v, th[j], tmp);
        v.swap(tmp);
        den *= Integer(static_cast<long>(th[1] - th[j]));
    }
    matvec_shift(g, v, th[1], tmp);
    for (auto z : tmp) {
        if (z != 0) throw CheckFailure("spectrum mismatch", "prod (A - theta_j) is nonzero on vertex " + std::to_string(x));
    }
    DualColumn col;
    col.num = std::move(v);
    col.den = den;
    col.scale = Integer(static_cast<unsigned long>(n));
    return col;
}

DRGProfile<Rational> profile_from_graph(const DPGraph& g, const std::vector<std::uint8_t>& dist, const BasePair& base,
                                        Report* log) {
    const std::size_t n = g.size();
    const int D = g.D();
    const long q0 = g.space.q0;
    DRGProfile<Rational> p;
    p.D = D;

    // intersection numbers, on every pair
    std::vector<long> a(D + 1, -1), b(D + 1, -1), c(D + 1, -1);
    for (std::size_t x = 0; x < n; ++x) {
        const std::uint8_t* dx = &dist[x * n];
        for (std::size_t y = 0; y < n; ++y) {
            int i = dx[y];
            long cc = 0, aa = 0, bb = 0;
            for (auto z : g.adj[y]) {
                int dz = dx[z];
                if (dz == i - 1) ++cc;
                else if (dz == i) ++aa;
                else if (dz == i + 1) ++bb;
            }
            if (a[i] < 0) {
                a[i] = aa;
                b[i] = bb;
                c[i] = cc;
            } else if (a[i] != aa || b[i] != bb || c[i] != cc) {
                verify(log, "intersection number inconsistent at distance " + std::to_string(i), kDrg, false,
                       "pair (" + std::to_string(x) + "," + std::to_string(y) + ")");
            }
        }
    }
    for (int i = 0; i <= D; ++i) {
        if (a[i] < 0) throw CheckFailure("intersection numbers", "no pair at distance " + std::to_string(i));
        p.a.emplace_back(a[i]);
        p.b.emplace_back(b[i]);
        p.c.emplace_back(c[i]);
    }
    verify(log, "intersection numbers constant on all pairs", kDrg, true);

    DRGProfile<Scalar> formal = profile_formal(g.space.params.e(), D);
    for (const auto& t : formal.theta) p.theta.push_back(eval_rational(t, q0));

    // dual eigenvalues from every column of E_1
    std::vector<Rational> ts(D + 1);
    std::vector<bool> seen(D + 1, false);
    Rational trace = 0;
    for (std::size_t x = 0; x < n; ++x) {
        DualColumn col = dual_column(g, p.theta, x);
        const std::uint8_t* dx = &dist[x * n];
        for (std::size_t y = 0; y < n; ++y) {
            int i = dx[y];
            Rational val = col.at(y);
            if (!seen[i]) {
                ts[i] = val;
                seen[i] = true;
            } else if (ts[i] != val) {
                verify(log, "E_1 entries depend only on distance", kDrg, false,
                       "column " + std::to_string(x) + ", row " + std::to_string(y));
            }
        }
        trace += col.at(x) / Integer(static_cast<unsigned long>(n));
    }
    verify(log, "spectrum: prod (A - theta_j) = 0", kDrg, true);
    verify(log, "E_1 entries depend only on distance", kDrg, true);
    p.theta_star = ts;
    verify(log, "theta*_0 = trace(E_1)", kDrg, trace == ts[0],
           "trace " + trace.get_str() + " vs " + ts[0].get_str());

    // clique data
    const auto& C = base.clique;
    std::vector<int> dc(n, 255);
    for (std::size_t z = 0; z < n; ++z) {
        for (auto y : C) dc[z] = std::min<int>(dc[z], dist[y * n + z]);
    }
    std::vector<long> at(D, -1), bt(D, -1), ct(D, -1);
    std::vector<Rational> tts(D);
    std::vector<bool> tseen(D, false);
    Rational csize(static_cast<long>(C.size()));
    for (std::size_t z = 0; z < n; ++z) {
        int i = dc[z];
        if (i >= D) throw CheckFailure("clique distance", "vertex at distance >= D from the clique");
        long cc = 0, aa = 0, bb = 0;
        for (auto y : g.adj[z]) {
            int dy = dc[y];
            if (dy == i - 1) ++cc;
            else if (dy == i) ++aa;
            else if (dy == i + 1) ++bb;
        }
        if (at[i] < 0) {
            at[i] = aa;
            bt[i] = bb;
            ct[i] = cc;
        } else if (at[i] != aa || bt[i] != bb || ct[i] != cc) {
            verify(log, "clique intersection numbers constant", kClique, false, "vertex " + std::to_string(z));
        }
        Rational s = 0;
        for (auto y : C) s += ts[dist[y * n + z]];
        s /= csize;
        if (!tseen[i]) {
            tts[i] = s;
            tseen[i] = true;
        } else if (tts[i] != s) {
            verify(log, "clique dual eigenvalues constant", kClique, false, "vertex " + std::to_string(z));
        }
    }
    for (int i = 0; i < D; ++i) {
        p.a_clique.emplace_back(at[i]);
        p.b_clique.emplace_back(bt[i]);
        p.c_clique.emplace_back(ct[i]);
    }
    p.theta_star_clique = tts;
    verify(log, "clique intersection numbers constant", kClique, true);
    verify(log, "clique dual eigenvalues constant", kClique, true);
    return p;
}

DRGProfile<Rational> profile_from_graph(const DPGraph& g, Report* log) {
    return profile_from_graph(g, all_distances(g), default_base_pair(g), log);
}

std::string compare_profiles(const DRGProfile<Scalar>& formal, const DRGProfile<Rational>& measured, long q0) {
    auto cmp = [&](const char* name, const std::vector<Scalar>& f, const std::vector<Rational>& m) -> std::string {
        if (f.size() != m.size()) return std::string(name) + ": length mismatch";
        for (std::size_t i = 0; i < f.size(); ++i) {
            Rational v = eval_rational(f[i], q0);
            if (v != m[i]) {
                return std::string(name) + "[" + std::to_string(i) + "]: expected " + v.get_str() + ", got " +
                       m[i].get_str();
            }
        }
        return {};
    };
    for (auto s : {cmp("a", formal.a, measured.a), cmp("b", formal.b, measured.b), cmp("c", formal.c, measured.c),
                   cmp("theta", formal.theta, measured.theta), cmp("theta*", formal.theta_star, measured.theta_star),
                   cmp("a~", formal.a_clique, measured.a_clique), cmp("b~", formal.b_clique, measured.b_clique),
                   cmp("c~", formal.c_clique, measured.c_clique),
                   cmp("theta~*", formal.theta_star_clique, measured.theta_star_clique)}) {
        if (!s.empty()) return s;
    }
    return {};
}

CliquePartition clique_partition(const DPGraph& g, const std::vector<std::uint8_t>& dist, const BasePair& base,
                                 const DRGProfile<Rational>& profile, Report* log) {
    const std::size_t n = g.size();
    const int D = g.D();
    const long q0 = g.space.q0;
    const Rational e = g.space.params.e();
    CliquePartition p;
    p.D = D;
    p.x = base.x;
    p.clique = base.clique;
    std::sort(p.clique.begin(), p.clique.end());
    const auto& C = p.clique;

    verify(log, "base vertex lies in the clique", kPartition, std::binary_search(C.begin(), C.end(), p.x));
    for (std::size_t s = 0; s < C.size(); ++s) {
        for (std::size_t t = s + 1; t < C.size(); ++t) {
            if (!g.adjacent(C[s], C[t])) {
                verify(log, "clique is complete", kPartition, false,
                       std::to_string(C[s]) + " !~ " + std::to_string(C[t]));
            }
        }
    }
    for (std::size_t z = 0; z < n; ++z) {
        if (std::binary_search(C.begin(), C.end(), z)) continue;
        bool all = true;
        for (auto y : C) all = all && g.adjacent(y, z);
        if (all) verify(log, "clique is maximal", kPartition, false, "vertex " + std::to_string(z) + " extends it");
    }
    Rational csize = eval_rational(Scalar(1) + Scalar::q_pow(e), q0);
    verify(log, "clique size 1 + q^e", kClique, Rational(static_cast<long>(C.size())) == csize,
           "size " + std::to_string(C.size()));

    p.dist_x.resize(n);
    p.dist_clique.assign(n, 255);
    p.cell.resize(n);
    p.counts.assign(2 * D, 0);
    for (std::size_t z = 0; z < n; ++z) {
        p.dist_x[z] = dist[p.x * n + z];
        for (auto y : C) p.dist_clique[z] = std::min(p.dist_clique[z], dist[y * n + z]);
        int i = p.dist_clique[z];
        int dx = p.dist_x[z];
        if (i >= D || (dx != i && dx != i + 1)) {
            verify(log, "cells C_i^- and C_i^+ partition X", kPartition, false, "vertex " + std::to_string(z));
        }
        p.cell[z] = 2 * i + (dx == i ? 0 : 1);
        ++p.counts[p.cell[z]];
    }
    verify(log, "cells C_i^- and C_i^+ partition X", kPartition, true);
    verify(log, "C_0^- = {x}", kPartition, p.counts[0] == 1 && p.cell[p.x] == 0);

    for (int k = 0; k < 2 * D; ++k) {
        Rational want = eval_rational(cell_count(e, D, k / 2, k % 2 == 1), q0);
        if (Rational(static_cast<long>(p.counts[k])) != want) {
            verify(log, "cell sizes", kPartition, false,
                   "cell " + std::to_string(k) + ": expected " + want.get_str() + ", got " +
                       std::to_string(p.counts[k]));
        }
    }
    verify(log, "cell sizes", kPartition, true);

    p.neighbors = cell_adjacency(profile);
    std::vector<long> row(2 * D);
    for (std::size_t z = 0; z < n; ++z) {
        std::fill(row.begin(), row.end(), 0);
        for (auto y : g.adj[z]) ++row[p.cell[y]];
        int a = p.cell[z];
        for (int b = 0; b < 2 * D; ++b) {
            if (p.neighbors(a, b) != Rational(row[b])) {
                verify(log, "equitable partition with the tabulated neighbor counts", kPartition, false,
                       "vertex " + std::to_string(z) + " in cell " + std::to_string(a) + " has " +
                           std::to_string(row[b]) + " neighbors in cell " + std::to_string(b) + ", expected " +
                           p.neighbors(a, b).get_str());
            }
        }
    }
    verify(log, "equitable partition with the tabulated neighbor counts", kPartition, true);
    return p;
}

namespace {

template <class F>
nlohmann::json seq_json(const std::vector<F>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

template <class F>
nlohmann::json profile_json_impl(const DRGProfile<F>& p) {
    nlohmann::json j;
    j["D"] = p.D;
    j["a"] = seq_json(p.a);
    j["b"] = seq_json(p.b);
    j["c"] = seq_json(p.c);
    j["theta"] = seq_json(p.theta);
    j["theta_star"] = seq_json(p.theta_star);
    j["clique_a"] = seq_json(p.a_clique);
    j["clique_b"] = seq_json(p.b_clique);
    j["clique_c"] = seq_json(p.c_clique);
    j["clique_theta_star"] = seq_json(p.theta_star_clique);
    return j;
}

}  // namespace

nlohmann::json profile_json(const DRGProfile<Scalar>& p) { return profile_json_impl(p); }
nlohmann::json profile_json(const DRGProfile<Rational>& p) { return profile_json_impl(p); }

nlohmann::json partition_json(const CliquePartition& p) {
    nlohmann::json j;
    j["D"] = p.D;
    j["x"] = p.x;
    j["clique"] = p.clique;
    j["counts"] = p.counts;
    return j;
}

}  // namespace dpg
