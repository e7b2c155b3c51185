#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dpg/backend.hpp"
#include "dpg/closed_forms.hpp"
#include "dpg/drg.hpp"
#include "dpg/leonard.hpp"
#include "dpg/nildaha.hpp"
#include "dpg/nonsym.hpp"
#include "dpg/pipeline.hpp"
#include "oracles.hpp"

using namespace dpg;
using Clock = std::chrono::steady_clock;

namespace {

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct ConcreteCase {
    Family f;
    long q;
    int D;
    long twice_e;
    long listed;
};

const ConcreteCase kConcrete[] = {
    {Family::C, 2, 3, 2, 135},      {Family::C, 3, 3, 2, 1120}, {Family::B, 2, 3, 2, 135},
    {Family::D, 2, 3, 0, 30},       {Family::D, 2, 4, 0, 270},  {Family::TwoAOdd, 4, 3, 1, 891},
    {Family::TwoD, 2, 3, 4, 765},
};

const Family kFormalFamilies[] = {Family::D, Family::TwoAOdd, Family::C, Family::TwoAEven, Family::TwoD};

/// Collects failures of one criterion.
struct Verdict {
    std::vector<std::string> problems;
    std::ostringstream detail;

    void expect(bool ok, const std::string& what) {
        if (!ok) problems.push_back(what);
    }
    bool pass() const { return problems.empty(); }
};

const std::set<std::string> kGraphAnchors = {"maximal isotropic subspaces of the polar space",
                                             "distance-regularity of the dual polar graph",
                                             "Delsarte clique and its intersection numbers"};
const std::set<std::string> kPartitionAnchors = {"equitable partition relative to a vertex and a clique",
                                                 "every edge lies in a unique maximal clique"};
const std::set<std::string> kLeonardAnchors = {
    "Leonard systems of dual q-Krawtchouk type",  "Leonard system on M x",
    "Leonard system axioms",                       "parameter array from the intersection numbers",
    "Leonard system on the orthogonal complement of M x", "Leonard system on M C",
    "Leonard system on the orthogonal complement of M C", "orthogonal decompositions of W"};
const std::set<std::string> kNilDahaAnchors = {"defining relations of the nil-DAHA",
                                               "representation of the nil-DAHA on W",
                                               "actions of X, X^{-1}, A, A* and A~* on the cells"};
const std::set<std::string> kBridgeAnchors = {"T-action through the nil-DAHA", "projections through the nil-DAHA",
                                              "orthogonal projection onto M x", "orthogonal projection onto M C"};
const std::set<std::string> kPolyAnchors = {"non-symmetric dual q-Krawtchouk polynomials",
                                            "minimal polynomial of X on W",
                                            "the polynomials generate the cell vectors from x", "four-term recurrences"};
const std::set<std::string> kOrthoAnchors = {"eigenvectors of X and their norms", "orthogonality relations"};

/// Every anchor in the set must occur in the report, and all its checks pass.
void expect_anchors(Verdict& v, const Report& r, const std::set<std::string>& anchors) {
    std::map<std::string, int> seen;
    for (const auto& c : r.checks()) {
        if (!anchors.count(c.anchor)) continue;
        ++seen[c.anchor];
        v.expect(c.pass, r.instance() + ": " + c.name + (c.locus.empty() ? "" : " (" + c.locus + ")"));
    }
    for (const auto& a : anchors) v.expect(seen[a] > 0, r.instance() + ": no checks for " + a);
}

double anchor_seconds(const Report& r, const std::set<std::string>& anchors) {
    double s = 0;
    for (const auto& c : r.checks())
        if (anchors.count(c.anchor)) s += c.seconds;
    return s;
}

std::string run_cli(const std::string& args, int* code) {
    std::string cmd = std::string(DPG_CLI) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    std::string out;
    if (!p) {
        *code = -1;
        return out;
    }
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int status = pclose(p);
    *code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

Rational q_pow_half(long q, long twice_exp) { return Rational(oracle::half_pow(q, twice_exp)); }

/// b_i, c_i and theta_j of a dual polar graph from the textbook formulas.
struct TextbookNumbers {
    std::vector<Rational> a, b, c, theta;
};

TextbookNumbers textbook(long q, long twice_e, int D) {
    TextbookNumbers t;
    auto bracket = [&](long n) { return Rational(oracle::q_int(q, n)); };
    const Rational k = q_pow_half(q, twice_e) * bracket(D);
    for (int i = 0; i <= D; ++i) {
        Rational b = q_pow_half(q, 2 * i + twice_e) * bracket(D - i);
        Rational c = bracket(i);
        t.b.push_back(b);
        t.c.push_back(c);
        t.a.push_back(k - b - c);
        t.theta.push_back(q_pow_half(q, twice_e) * bracket(D - i) - bracket(i));
    }
    return t;
}

struct ConcreteRun {
    ConcreteCase cc;
    DPGraph g;
    double enum_seconds = 0;
    Report report;
    WModule<AlgNum> w;
};

std::string label(const ConcreteCase& c) { return Instance{{c.f, c.D}, c.q}.label(); }

void print(int id, const std::string& title, const Verdict& v) {
    std::cout << (v.pass() ? "PASS" : "FAIL") << "  [" << id << "] " << title;
    std::string d = v.detail.str();
    if (!d.empty()) std::cout << ": " << d;
    std::cout << "\n";
    const std::size_t shown = std::min<std::size_t>(v.problems.size(), 8);
    for (std::size_t k = 0; k < shown; ++k) std::cout << "        " << v.problems[k] << "\n";
    if (v.problems.size() > shown) std::cout << "        ... " << v.problems.size() - shown << " more\n";
}

}  // namespace

int main() {
    const auto t_start = Clock::now();

    std::vector<ConcreteRun> concrete;
    for (const auto& cc : kConcrete) {
        ConcreteRun run{cc, {}, 0, Report{}, {}};
        Instance inst{{cc.f, cc.D}, cc.q};
        auto t0 = Clock::now();
        run.g = build_graph(inst, 10000);
        run.enum_seconds = since(t0);
        run.report = run_pipeline(inst, {}, &run.w);
        concrete.push_back(std::move(run));
    }

    struct FormalRun {
        Rational e;
        int D;
        Report report;
        double seconds;
    };
    std::vector<FormalRun> formal;
    for (auto f : kFormalFamilies) {
        for (int D : {3, 4, 5}) {
            auto t0 = Clock::now();
            auto r = run_pipeline(Instance{{f, D}, 0});
            formal.push_back({family_e(f), D, std::move(r), since(t0)});
        }
    }

    int failed = 0;
    auto finish = [&](int id, const std::string& title, const Verdict& v) {
        print(id, title, v);
        failed += !v.pass();
    };

    // 1
    {
        Verdict v;
        double worst = 0;
        for (const auto& run : concrete) {
            const auto& c = run.cc;
            Integer want = oracle::vertex_count(c.q, c.twice_e, c.D);
            v.expect(Integer(static_cast<unsigned long>(run.g.size())) == want,
                     label(c) + ": " + std::to_string(run.g.size()) + " vertices, product formula " + want.get_str());
            v.expect(static_cast<long>(run.g.size()) == c.listed, label(c) + ": expected " + std::to_string(c.listed));
            v.expect(run.enum_seconds < 60, label(c) + ": enumeration took " + std::to_string(run.enum_seconds) + " s");
            worst = std::max(worst, run.enum_seconds);
        }
        v.detail << concrete.size() << " instances, slowest enumeration " << worst << " s";
        finish(1, "enumeration counts", v);
    }

    // 2
    {
        Verdict v;
        std::size_t vertices = 0;
        for (const auto& run : concrete) {
            const auto& c = run.cc;
            expect_anchors(v, run.report, kGraphAnchors);
            auto tb = textbook(c.q, c.twice_e, c.D);
            for (std::size_t x = 0; x < run.g.size(); ++x) {
                auto n = oracle::count_intersection(run.g, x);
                for (int i = 0; i <= c.D; ++i) {
                    v.expect(n.a[i] == tb.a[i] && n.b[i] == tb.b[i] && n.c[i] == tb.c[i],
                             label(c) + ": intersection numbers at vertex " + std::to_string(x) + ", i=" +
                                 std::to_string(i));
                }
                if (!v.pass()) break;
            }
            vertices += run.g.size();
            auto prof = profile_from_graph(run.g);
            auto n0 = oracle::count_intersection(run.g, 0);
            auto ts = oracle::dual_eigenvalues(n0, tb.theta[1]);
            for (int j = 0; j <= c.D; ++j) {
                v.expect(prof.theta[j] == tb.theta[j], label(c) + ": theta_" + std::to_string(j));
                v.expect(prof.theta_star[j] == ts[j], label(c) + ": theta*_" + std::to_string(j));
                // theta_j closes the cosine recurrence
                auto u = oracle::dual_eigenvalues(n0, tb.theta[j]);
                Rational lhs = n0.c[c.D] * u[c.D - 1] + n0.a[c.D] * u[c.D];
                v.expect(lhs == tb.theta[j] * u[c.D], label(c) + ": theta_" + std::to_string(j) + " not an eigenvalue");
            }
            v.expect(compare_profiles(profile_formal(run.g.space.params.e(), c.D), prof, c.q).empty(),
                     label(c) + ": closed forms");
        }
        v.detail << "BFS from all " << vertices << " vertices, theta* from E_1 against the cosine sequence";
        finish(2, "distance-regularity", v);
    }

    // 3
    {
        Verdict v;
        for (const auto& run : concrete) {
            const auto& c = run.cc;
            expect_anchors(v, run.report, kPartitionAnchors);
            auto base = default_base_pair(run.g);
            auto dx = oracle::bfs(run.g, {base.x});
            auto dc = oracle::bfs(run.g, base.clique);
            const int n = 2 * c.D;
            std::vector<int> cell(run.g.size());
            std::vector<long> counts(n, 0);
            for (std::size_t z = 0; z < run.g.size(); ++z) {
                v.expect(dx[z] == dc[z] || dx[z] == dc[z] + 1, label(c) + ": vertex outside the cells");
                cell[z] = 2 * dc[z] + (dx[z] == dc[z] + 1 ? 1 : 0);
                ++counts[cell[z]];
            }
            // both coefficient tables: neighbour counts of every vertex into every cell
            std::vector<std::vector<long>> table(n, std::vector<long>(n, -1));
            for (std::size_t z = 0; z < run.g.size(); ++z) {
                std::vector<long> into(n, 0);
                for (auto y : run.g.adj[z]) ++into[cell[y]];
                for (int k = 0; k < n; ++k) {
                    auto& slot = table[cell[z]][k];
                    if (slot < 0) slot = into[k];
                    v.expect(slot == into[k], label(c) + ": partition not equitable at vertex " + std::to_string(z));
                }
            }
            const Rational e = run.g.space.params.e();
            for (int k = 0; k < n; ++k) {
                v.expect(eval_rational(cell_count(e, c.D, k / 2, k % 2 == 1), c.q) == Rational(counts[k]),
                         label(c) + ": |cell " + std::to_string(k) + "|");
                v.expect(run.w.gram[k] == AlgNum(Rational(counts[k])), label(c) + ": Gram entry " + std::to_string(k));
                for (int j = 0; j < n; ++j)
                    v.expect(run.w.A(j, k) == AlgNum(Rational(table[j][k])), label(c) + ": A table entry");
            }
            v.expect(Integer(static_cast<unsigned long>(base.clique.size())) == 1 + oracle::half_pow(c.q, c.twice_e),
                     label(c) + ": clique size");
        }
        v.detail << "neighbour tables over every vertex of " << concrete.size() << " instances";
        finish(3, "partition structure", v);
    }

    // 4
    {
        Verdict v;
        for (const auto& f : formal) expect_anchors(v, f.report, kLeonardAnchors);
        for (const auto& run : concrete) {
            expect_anchors(v, run.report, kLeonardAnchors);
            const auto& c = run.cc;
            auto seq = four_sequences(run.g.space.params.e(), c.D)[0];
            auto closed = intersection_numbers_closed(seq);
            auto general = intersection_numbers_general(param_array(seq));
            auto n = oracle::count_intersection(run.g, 0);
            for (int i = 0; i <= c.D; ++i) {
                v.expect(closed.b[i] == general.b[i] && closed.c[i] == general.c[i], label(c) + ": two routes differ");
                v.expect(eval_rational(closed.b[i], c.q) == n.b[i] && eval_rational(closed.c[i], c.q) == n.c[i],
                         label(c) + ": b_i, c_i against BFS");
            }
        }
        v.detail << formal.size() << " formal and " << concrete.size() << " concrete instances, four systems each";
        finish(4, "four Leonard systems", v);
    }

    // 5
    {
        Verdict v;
        double worst = 0, worst_total = 0;
        for (const auto& f : formal) {
            expect_anchors(v, f.report, kNilDahaAnchors);
            // the relations once more, from the matrices
            auto t0 = Clock::now();
            auto rep = build_rep(f.e, f.D);
            const auto I = Matrix<Scalar>::identity(2 * static_cast<std::size_t>(f.D));
            const Scalar k = rep.kappa, kp = rep.kappa_prime;
            bool ok = ((rep.t - I * k) * (rep.t + I * (Scalar(1) / k))).is_zero() &&
                      ((rep.t_prime - I * kp) * (rep.t_prime + I * (Scalar(1) / kp))).is_zero() &&
                      (rep.u * (rep.u + I)).is_zero() && (rep.u_prime * rep.u_prime).is_zero() &&
                      rep.t_prime == rep.x * rep.t_inv && rep.x * rep.u_prime == rep.u + I &&
                      rep.u_prime == Scalar::q() * rep.u * rep.x && rep.x * rep.x_inv == I &&
                      k == Scalar::q_pow(-f.e / 2) && kp == Scalar::i() * Scalar::q_pow(Rational(-f.D, 2));
            const double secs = since(t0) + anchor_seconds(f.report, kNilDahaAnchors) +
                                anchor_seconds(f.report, {"T-action through the nil-DAHA",
                                                          "projections through the nil-DAHA"});
            std::ostringstream who;
            who << "e=" << f.e.get_str() << " D=" << f.D;
            v.expect(ok, who.str() + ": relation fails");
            v.expect(secs < 30, who.str() + ": nil-DAHA stages took " + std::to_string(secs) + " s");
            v.expect(f.seconds < 30, who.str() + ": instance took " + std::to_string(f.seconds) + " s");
            worst = std::max(worst, secs);
            worst_total = std::max(worst_total, f.seconds);
        }
        v.detail << formal.size() << " formal instances, slowest nil-DAHA verification " << worst
                 << " s, slowest whole instance " << worst_total << " s";
        finish(5, "nil-DAHA relations", v);
    }

    // 6
    {
        Verdict v;
        for (const auto& f : formal) expect_anchors(v, f.report, kBridgeAnchors);
        for (const auto& run : concrete) {
            expect_anchors(v, run.report, kBridgeAnchors);
            const auto& c = run.cc;
            const auto& w = run.w;
            ConcreteBackend be{c.q};
            auto rep = lift(be, build_rep(w.e, c.D));
            const auto I = Matrix<AlgNum>::identity(w.dim());
            const AlgNum one(Rational(1));
            auto pi = (rep.t_prime + I * (one / rep.kappa_prime)) * (one / (rep.kappa_prime + one / rep.kappa_prime));
            auto pit = (rep.t + I * (one / rep.kappa)) * (one / (rep.kappa + one / rep.kappa));
            std::vector<Vector<AlgNum>> mx, mc;
            for (int i = 0; i <= c.D; ++i) {
                mx.push_back(w.E[i] * w.x_hat);
                if (i < c.D) mc.push_back(w.E[i] * w.C_hat);
            }
            v.expect(pi == w.pi && pi == gram_project(mx, w.gram), label(c) + ": pi triple agreement");
            v.expect(pit == w.pi_tilde && pit == gram_project(mc, w.gram), label(c) + ": pi~ triple agreement");
        }
        v.detail << "pi, pi~ agree three ways on " << concrete.size() << " concrete modules";
        finish(6, "bridge identities", v);
    }

    // 7
    {
        Verdict v;
        for (const auto& f : formal) expect_anchors(v, f.report, kPolyAnchors);
        for (const auto& run : concrete) {
            expect_anchors(v, run.report, kPolyAnchors);
            const auto& c = run.cc;
            const auto& w = run.w;
            ConcreteBackend be{c.q};
            auto fam = build_family(w.e, c.D);
            auto rep = lift(be, build_rep(w.e, c.D));
            for (int i = 0; i < c.D; ++i) {
                for (bool plus : {false, true}) {
                    auto l = lift_poly<AlgNum>(be, fam.ell(i, plus));
                    auto got = l.at_matrix(rep.x, rep.x_inv) * w.x_hat;
                    v.expect(got == unit_vector<AlgNum>(w.dim(), 2 * i + (plus ? 1 : 0)), label(c) + ": l_i(x) x");
                    v.expect(fam.ell(i, plus) == (plus ? fam.ell_tilde_plus[i] : fam.ell_tilde_minus[i]),
                             label(c) + ": two expressions");
                }
            }
            std::set<std::string> distinct;
            for (int i = -c.D; i < c.D; ++i) {
                AlgNum lam = be.lift(fam.lambda_at(i));
                distinct.insert(lam.str());
                v.expect(rank(rep.x.minus_scalar(lam)) == w.dim() - 1, label(c) + ": lambda not a simple eigenvalue");
            }
            v.expect(distinct.size() == w.dim(), label(c) + ": lambdas not distinct");
        }
        v.detail << "realization and 2D simple eigenvalues checked by matrix rank on " << concrete.size()
                 << " concrete modules";
        finish(7, "non-symmetric polynomials", v);
    }

    // 8
    {
        Verdict v;
        for (const auto& f : formal) expect_anchors(v, f.report, kOrthoAnchors);
        for (const auto& run : concrete) {
            expect_anchors(v, run.report, kOrthoAnchors);
            const auto& c = run.cc;
            ConcreteBackend be{c.q};
            const Rational e = run.g.space.params.e();
            auto fam = build_family(e, c.D);
            auto gram = ell_gram(fam, be);
            auto dc = oracle::bfs(run.g, default_base_pair(run.g).clique);
            auto dx = oracle::bfs(run.g, {default_base_pair(run.g).x});
            std::vector<long> counts(2 * c.D, 0);
            for (std::size_t z = 0; z < run.g.size(); ++z) ++counts[2 * dc[z] + (dx[z] == dc[z] + 1 ? 1 : 0)];
            for (std::size_t a = 0; a < gram.rows(); ++a)
                for (std::size_t b = 0; b < gram.cols(); ++b)
                    v.expect(gram(a, b) == AlgNum(Rational(a == b ? counts[a] : 0)), label(c) + ": Gram entry");
            // m_i = mult(theta_i) / |X| with the multiplicity from the cosine sequence
            auto n = oracle::count_intersection(run.g, 0);
            auto tb = textbook(c.q, c.twice_e, c.D);
            auto m = m_values_closed(four_sequences(e, c.D)[0]);
            const Rational size(static_cast<long>(run.g.size()));
            Rational total(0);
            for (int i = 0; i <= c.D; ++i) {
                Rational mi = eval_rational(m[i], c.q);
                v.expect(mi == oracle::dual_eigenvalues(n, tb.theta[i])[0] / size, label(c) + ": m_i");
                total += mi;
            }
            v.expect(total == 1, label(c) + ": sum m_i");
            v.expect(eval_rational(m[0], c.q) == 1 / size, label(c) + ": m_0");
        }
        v.detail << "Gram of l_i^± equals BFS cell sizes on " << concrete.size() << " instances, " << formal.size()
                 << " formal instances";
        finish(8, "orthogonality", v);
    }

    // 9
    {
        Verdict v;
        for (const auto& cc : {kConcrete[0], kConcrete[3]}) {
            Instance inst{{cc.f, cc.D}, cc.q};
            auto g = build_graph(inst, 10000);
            WModule<AlgNum> w0, w1, w2;
            auto r0 = run_pipeline(inst, {}, &w0);
            PipelineOptions o1, o2;
            o1.base_seed = 7;
            o2.base_seed = 2024;
            auto r1 = run_pipeline(inst, o1, &w1);
            auto r2 = run_pipeline(inst, o2, &w2);
            auto b0 = default_base_pair(g), b1 = random_base_pair(g, 7), b2 = random_base_pair(g, 2024);
            v.expect(b0.x != b1.x || b0.clique != b1.clique, label(cc) + ": seed 7 gives the standard pair");
            v.expect(b1.x != b2.x || b1.clique != b2.clique, label(cc) + ": seeds give the same pair");
            v.expect(compare_modules(w0, w1).empty() && compare_modules(w0, w2).empty(),
                     label(cc) + ": structure constants differ");
            const auto j0 = r0.to_json(false).dump();
            v.expect(j0 == r1.to_json(false).dump() && j0 == r2.to_json(false).dump(), label(cc) + ": reports differ");
            v.expect(r0.passed(), label(cc) + ": report fails");
        }
        v.detail << "C(2,3) and D(2,3), standard pair and two random pairs";
        finish(9, "choice independence", v);
    }

    // 10
    {
        Verdict v;
        const std::vector<std::string> commands = {
            "emit --what ell-polys --format csv --family C --q 2 --D 3",
            "emit --what ell-polys --format json --family 2A-odd --D 4",
            "emit --what param-arrays --format csv --family D --D 3",
            "emit --what param-arrays --format json --family 2D --q 2 --D 3",
            "emit --what orthogonality --format json --family B --q 2 --D 3",
            "emit --what graph --format edge-list --family D --q 2 --D 4",
            "emit --what report --format json --family C --q 2 --D 3",
            "emit --what report --format json --family 2A-even --D 3",
        };
        for (const auto& cmd : commands) {
            int c1 = 0, c2 = 0;
            auto a = run_cli(cmd, &c1);
            auto b = run_cli(cmd, &c2);
            v.expect(c1 == 0 && c2 == 0, cmd + ": exit code " + std::to_string(c1));
            v.expect(!a.empty() && a == b, cmd + ": outputs differ");
        }
        v.detail << commands.size() << " emit commands, each run twice";
        finish(10, "determinism", v);
    }

    std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << " in "
              << since(t_start) << " s\n";
    return failed == 0 ? 0 : 1;
}
