#include "dpg/pipeline.hpp"

#include <algorithm>

#include "dpg/drg.hpp"
#include "dpg/leonard.hpp"
#include "dpg/nildaha.hpp"
#include "dpg/nonsym.hpp"

namespace dpg {

namespace {

const char* kEnum = "maximal isotropic subspaces of the polar space";
const char* kNearPolygon = "every edge lies in a unique maximal clique";
const char* kDrg = "distance-regularity of the dual polar graph";
const char* kLeonard = "Leonard systems of dual q-Krawtchouk type";
const char* kNil = "defining relations of the nil-DAHA";
const char* kBridge = "T-action through the nil-DAHA";
const char* kPoly = "non-symmetric dual q-Krawtchouk polynomials";
const char* kRec = "four-term recurrences";
const char* kSpec = "eigenvectors of X and their norms";
const char* kOrth = "orthogonality relations";

/// Common neighbours of every edge are pairwise adjacent and number a_1 = q^e - 1,
/// so the edge together with them is the unique maximal clique through it.
void check_near_polygon(const DPGraph& g, const Rational& a1, Report* log) {
    std::vector<char> mark(g.size(), 0);
    for (std::size_t u = 0; u < g.size(); ++u) {
        for (auto v : g.adj[u]) {
            if (v < u) continue;
            for (auto w : g.adj[u]) mark[w] = 1;
            std::vector<std::uint32_t> common;
            for (auto w : g.adj[v]) {
                if (mark[w]) common.push_back(w);
            }
            for (auto w : g.adj[u]) mark[w] = 0;
            bool ok = Rational(static_cast<long>(common.size())) == a1;
            for (std::size_t i = 0; ok && i < common.size(); ++i) {
                for (std::size_t j = i + 1; ok && j < common.size(); ++j) ok = g.adjacent(common[i], common[j]);
            }
            if (!ok) {
                verify(log, "common neighbours of an edge form a clique of size a_1", kNearPolygon, false,
                       "edge " + std::to_string(u) + " " + std::to_string(v));
            }
        }
    }
    verify(log, "common neighbours of an edge form a clique of size a_1", kNearPolygon, true);
}

template <class B>
void algebraic_stages(const Instance& inst, const WModule<typename B::Field>& w, const B& be, Report& r) {
    using F = typename B::Field;
    const Rational e = inst.params.e();
    const int D = inst.params.D;
    auto seqs = four_sequences(e, D);

    r.run("Leonard systems", kLeonard, [&] {
        for (const auto& s : seqs) verify_sequence(s, &r);
    });
    std::optional<NilDahaRep<F>> rep;
    r.run("nil-DAHA representation", kNil, [&] {
        auto formal = build_rep(e, D, &r);
        if constexpr (std::is_same_v<F, Scalar>) {
            rep = formal;
        } else {
            rep = lift(be, formal);
        }
        verify_x_action(*rep, w, be, &r);
    });
    r.run("Leonard systems on W", kLeonard, [&] {
        auto systems = realize_four_systems(w, be, &r);
        if (rep) verify_h_on_standard_basis(systems, seqs, rep->x, rep->x_inv, be, &r);
    });
    if (!rep) return;
    r.run("bridge", kBridge, [&] { verify_bridge(*rep, w, be, &r); });

    std::optional<NonsymFamily> fam;
    r.run("non-symmetric polynomials", kPoly, [&] {
        fam = build_family(e, D, &r);
        verify_module_realization(*fam, *rep, w, be, &r);
    });
    if (!fam) return;
    r.run("recurrences", kRec, [&] { verify_recurrences(*fam, &r); });
    r.run("spectral data", kSpec, [&] { spectral_data(*fam, *rep, w, be, &r); });
    r.run("orthogonality", kOrth, [&] { verify_orthogonality(*fam, *rep, w, be, &r); });
}

}  // namespace

void validate_instance(const Instance& inst) {
    if (inst.params.D < 3) throw InstanceError("D must be at least 3");
    if (inst.formal()) return;
    std::pair<long, int> pk;
    try {
        pk = prime_power(inst.q0);
    } catch (const std::invalid_argument& ex) {
        throw InstanceError(ex.what());
    }
    if (is_hermitian(inst.params.family) && pk.second % 2 != 0) {
        throw InstanceError("Hermitian family requires square q");
    }
}

DPGraph build_graph(const Instance& inst, std::size_t max_vertices) {
    validate_instance(inst);
    if (inst.formal()) throw InstanceError("the graph needs a concrete q");
    try {
        return dual_polar_graph(build_space(inst.params.family, inst.q0, inst.params.D), {max_vertices});
    } catch (const std::exception& ex) {
        throw InstanceError(ex.what());
    }
}

Report run_pipeline(const Instance& inst, const PipelineOptions& opts, WModule<AlgNum>* w_out) {
    validate_instance(inst);
    Report r(inst.label());
    const Rational e = inst.params.e();
    const int D = inst.params.D;

    if (inst.formal()) {
        std::optional<WModule<Scalar>> w;
        r.run("module W", "the module W spanned by the cells", [&] { w = build_w_module_formal(e, D, &r); });
        if (w) algebraic_stages(inst, *w, FormalBackend{}, r);
        return r;
    }

    DPGraph g = build_graph(inst, opts.max_vertices);
    r.run("enumeration", kEnum, [&] {
        Integer want = predicted_vertex_count(inst.params, inst.q0);
        verify(&r, "number of maximal isotropic subspaces equals the product formula", kEnum,
               Integer(static_cast<unsigned long>(g.size())) == want,
               std::to_string(g.size()) + " != " + want.get_str());
    });
    std::vector<std::uint8_t> dist;
    std::optional<DRGProfile<Rational>> profile;
    r.run("profile", kDrg, [&] {
        dist = all_distances(g);
        BasePair std_pair = default_base_pair(g);
        profile = profile_from_graph(g, dist, std_pair, &r);
        std::string diff = compare_profiles(profile_formal(e, D), *profile, inst.q0);
        verify(&r, "intersection numbers and (dual) eigenvalues equal their closed forms", kDrg, diff.empty(), diff);
        check_near_polygon(g, profile->a[1], &r);
    });
    if (!profile) return r;

    std::optional<WModule<AlgNum>> w;
    r.run("module W", "the module W spanned by the cells", [&] {
        BasePair base = opts.base_seed ? random_base_pair(g, *opts.base_seed) : default_base_pair(g);
        auto part = clique_partition(g, dist, base, *profile, &r);
        w = build_w_module_concrete(g, part, *profile, &r);
    });
    if (!w) return r;
    if (w_out) *w_out = *w;
    algebraic_stages(inst, *w, ConcreteBackend{inst.q0}, r);
    return r;
}

}  // namespace dpg
