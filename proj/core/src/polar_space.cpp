#include "dpg/polar_space.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace dpg {

using Elem = FiniteField::Elem;

Elem FormedSpace::pair(const FVec& x, const FVec& y) const {
    const FiniteField& f = *field;
    Elem s = 0;
    for (const auto& t : terms) {
        if (kind == Kind::Quadratic) {
            Elem v = f.add(f.mul(x[t.i], y[t.j]), f.mul(x[t.j], y[t.i]));
            s = f.add(s, f.mul(t.c, v));
        } else {
            Elem yj = kind == Kind::Hermitian ? f.conj(y[t.j]) : y[t.j];
            s = f.add(s, f.mul(t.c, f.mul(x[t.i], yj)));
        }
    }
    return s;
}

bool FormedSpace::isotropic(const FVec& x) const {
    switch (kind) {
        case Kind::Alternating: return true;
        case Kind::Hermitian: return pair(x, x) == 0;
        case Kind::Quadratic: {
            const FiniteField& f = *field;
            Elem s = 0;
            for (const auto& t : terms) s = f.add(s, f.mul(t.c, f.mul(x[t.i], x[t.j])));
            return s == 0;
        }
    }
    return false;
}

std::string FormedSpace::describe() const {
    std::ostringstream os;
    os << family_tag(params.family) << " over " << field->describe() << ", n=" << n << ", ";
    os << (kind == Kind::Alternating ? "alternating" : kind == Kind::Quadratic ? "quadratic" : "Hermitian");
    os << " form";
    return os.str();
}

FormedSpace build_space(Family family, long q0, int D) {
    if (D < 1) throw std::invalid_argument("D must be positive");
    FormedSpace s;
    s.params = {family, D};
    s.q0 = q0;
    s.n = s.params.ambient_dimension();
    auto field = std::make_shared<const FiniteField>(q0);
    if (is_hermitian(family) && !field->has_involution()) {
        throw std::invalid_argument("Hermitian family requires square q");
    }
    s.field = field;
    const Elem one = 1;
    const Elem minus_one = field->neg(1);
    switch (family) {
        case Family::C:
            s.kind = FormedSpace::Kind::Alternating;
            for (int i = 0; i < D; ++i) {
                s.terms.push_back({i, D + i, one});
                s.terms.push_back({D + i, i, minus_one});
            }
            break;
        case Family::B:
        case Family::D:
        case Family::TwoD:
            s.kind = FormedSpace::Kind::Quadratic;
            for (int i = 0; i < D; ++i) s.terms.push_back({i, D + i, one});
            if (family == Family::B) s.terms.push_back({2 * D, 2 * D, one});
            if (family == Family::TwoD) {
                // anisotropic t^2 + t u + a u^2 with t^2 + t + a irreducible
                Elem a = 0;
                for (int c = 0; c < field->size(); ++c) {
                    bool has_root = false;
                    for (int t = 0; t < field->size() && !has_root; ++t) {
                        Elem te = static_cast<Elem>(t);
                        has_root = field->add(field->add(field->mul(te, te), te), static_cast<Elem>(c)) == 0;
                    }
                    if (!has_root) {
                        a = static_cast<Elem>(c);
                        break;
                    }
                }
                s.terms.push_back({2 * D, 2 * D, one});
                s.terms.push_back({2 * D, 2 * D + 1, one});
                s.terms.push_back({2 * D + 1, 2 * D + 1, a});
            }
            break;
        case Family::TwoAEven:
        case Family::TwoAOdd:
            s.kind = FormedSpace::Kind::Hermitian;
            for (int i = 0; i < D; ++i) {
                s.terms.push_back({i, D + i, one});
                s.terms.push_back({D + i, i, one});
            }
            if (family == Family::TwoAEven) s.terms.push_back({2 * D, 2 * D, one});
            break;
    }
    return s;
}

namespace {

// In-place reduced row echelon form of a k x n row-major matrix.
// Returns the pivot columns; zero rows are moved to the end.
std::vector<int> rref_in_place(const FiniteField& f, int n, FVec& m, int k) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < n && r < k; ++c) {
        int p = r;
        while (p < k && m[p * n + c] == 0) ++p;
        if (p == k) continue;
        if (p != r) {
            for (int j = 0; j < n; ++j) std::swap(m[p * n + j], m[r * n + j]);
        }
        Elem inv = f.inv(m[r * n + c]);
        for (int j = c; j < n; ++j) m[r * n + j] = f.mul(m[r * n + j], inv);
        for (int i = 0; i < k; ++i) {
            if (i == r) continue;
            Elem factor = m[i * n + c];
            if (factor == 0) continue;
            for (int j = c; j < n; ++j) m[i * n + j] = f.sub(m[i * n + j], f.mul(factor, m[r * n + j]));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<int> pivot_columns(const IsoSubspace& s) {
    std::vector<int> piv;
    for (int r = 0; r < s.k; ++r) {
        const Elem* row = s.row(r);
        int c = 0;
        while (c < s.n && row[c] == 0) ++c;
        piv.push_back(c);
    }
    return piv;
}

// v minus its components along the echelon rows (zero on pivot columns).
FVec reduce(const FiniteField& f, const IsoSubspace& s, const std::vector<int>& piv, FVec v) {
    for (int r = 0; r < s.k; ++r) {
        Elem c = v[piv[r]];
        if (c == 0) continue;
        const Elem* row = s.row(r);
        for (int j = 0; j < s.n; ++j) v[j] = f.sub(v[j], f.mul(c, row[j]));
    }
    return v;
}

std::string key_of(const IsoSubspace& s) { return std::string(s.rows.begin(), s.rows.end()); }

}  // namespace

IsoSubspace echelonize(const FiniteField& f, int n, const std::vector<FVec>& vectors) {
    int k = static_cast<int>(vectors.size());
    FVec m;
    m.reserve(static_cast<std::size_t>(k) * n);
    for (const auto& v : vectors) m.insert(m.end(), v.begin(), v.end());
    auto piv = rref_in_place(f, n, m, k);
    IsoSubspace s;
    s.n = n;
    s.k = static_cast<int>(piv.size());
    m.resize(static_cast<std::size_t>(s.k) * n);
    s.rows = std::move(m);
    return s;
}

int intersection_dimension(const FiniteField& f, const IsoSubspace& a, const IsoSubspace& b) {
    auto piv = pivot_columns(a);
    FVec m;
    m.reserve(b.rows.size());
    for (int r = 0; r < b.k; ++r) {
        FVec v(b.row(r), b.row(r) + b.n);
        v = reduce(f, a, piv, std::move(v));
        m.insert(m.end(), v.begin(), v.end());
    }
    int extra = static_cast<int>(rref_in_place(f, b.n, m, b.k).size());
    return b.k - extra;
}

bool contains(const FiniteField& f, const IsoSubspace& s, const FVec& v) {
    auto r = reduce(f, s, pivot_columns(s), v);
    return std::all_of(r.begin(), r.end(), [](Elem x) { return x == 0; });
}

namespace {

// Every isotropic extension S + <v> of S, as echelon matrices.
template <class Sink>
void for_each_extension(const FormedSpace& space, const IsoSubspace& s, Sink&& sink) {
    const FiniteField& f = *space.field;
    const int n = space.n;
    const int q = f.size();
    auto piv = pivot_columns(s);
    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c) {
        if (std::find(piv.begin(), piv.end(), c) == piv.end()) free_cols.push_back(c);
    }
    std::vector<FVec> basis;
    for (int r = 0; r < s.k; ++r) basis.emplace_back(s.row(r), s.row(r) + n);

    const int m = static_cast<int>(free_cols.size());
    std::vector<int> digits(m, 0);
    FVec v(n, 0);
    // Vectors with first nonzero free coordinate equal to 1: choose the
    // leading position, then all values after it.
    for (int lead = 0; lead < m; ++lead) {
        std::fill(v.begin(), v.end(), 0);
        v[free_cols[lead]] = 1;
        int tail = m - lead - 1;
        long total = 1;
        for (int t = 0; t < tail; ++t) total *= q;
        for (long code = 0; code < total; ++code) {
            long c = code;
            for (int t = 0; t < tail; ++t) {
                v[free_cols[lead + 1 + t]] = static_cast<Elem>(c % q);
                c /= q;
            }
            if (!space.isotropic(v)) continue;
            bool perp = true;
            for (const auto& b : basis) {
                if (space.pair(v, b) != 0) {
                    perp = false;
                    break;
                }
            }
            if (!perp) continue;
            sink(v, basis);
        }
    }
}

}  // namespace

std::vector<IsoSubspace> enumerate_maximal_isotropics(const FormedSpace& space, const EnumerationOptions& opts) {
    const int D = space.params.D;
    Integer predicted = predicted_vertex_count(space.params, space.q0);
    if (predicted > Integer(static_cast<unsigned long>(opts.max_vertices))) {
        throw std::runtime_error("instance too large (" + predicted.get_str() + " vertices)");
    }
    const FiniteField& f = *space.field;
    std::vector<IsoSubspace> level{IsoSubspace{0, space.n, {}}};
    // Intermediate levels can be larger than X; bound them generously.
    const std::size_t level_cap = std::max<std::size_t>(opts.max_vertices, 1) * 256;
    for (int k = 0; k < D; ++k) {
        std::unordered_set<std::string> seen;
        std::vector<IsoSubspace> next;
        for (const auto& s : level) {
            for_each_extension(space, s, [&](const FVec& v, const std::vector<FVec>& basis) {
                std::vector<FVec> rows = basis;
                rows.push_back(v);
                IsoSubspace t = echelonize(f, space.n, rows);
                if (seen.insert(key_of(t)).second) next.push_back(std::move(t));
            });
            if (next.size() > level_cap) throw std::runtime_error("instance too large");
        }
        level = std::move(next);
    }
    for (const auto& s : level) {
        bool extends = false;
        for_each_extension(space, s, [&](const FVec&, const std::vector<FVec>&) { extends = true; });
        if (extends) throw std::logic_error("Witt index exceeds D");
    }
    if (level.size() > opts.max_vertices) throw std::runtime_error("instance too large");
    std::sort(level.begin(), level.end());
    return level;
}

bool DPGraph::adjacent(std::size_t x, std::size_t y) const {
    const auto& nb = adj[x];
    return std::binary_search(nb.begin(), nb.end(), static_cast<std::uint32_t>(y));
}

DPGraph dual_polar_graph(const FormedSpace& space, const EnumerationOptions& opts) {
    DPGraph g;
    g.space = space;
    g.vertices = enumerate_maximal_isotropics(space, opts);
    const std::size_t n = g.vertices.size();
    const int D = space.params.D;
    const FiniteField& f = *space.field;
    g.adj.assign(n, {});
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = x + 1; y < n; ++y) {
            if (intersection_dimension(f, g.vertices[x], g.vertices[y]) == D - 1) {
                g.adj[x].push_back(static_cast<std::uint32_t>(y));
                g.adj[y].push_back(static_cast<std::uint32_t>(x));
            }
        }
    }
    for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
    return g;
}

std::string edge_list(const DPGraph& g) {
    std::ostringstream os;
    os << "# " << family_tag(g.space.params.family) << " " << g.space.q0 << " " << g.D() << " " << g.size() << "\n";
    for (std::size_t u = 0; u < g.size(); ++u) {
        for (auto v : g.adj[u]) {
            if (u < v) os << u << " " << v << "\n";
        }
    }
    return os.str();
}

std::vector<std::uint8_t> all_distances(const DPGraph& g) {
    const std::size_t n = g.size();
    std::vector<std::uint8_t> dist(n * n, 0xff);
    std::vector<std::uint32_t> queue(n);
    for (std::size_t s = 0; s < n; ++s) {
        std::uint8_t* row = dist.data() + s * n;
        row[s] = 0;
        std::size_t head = 0, tail = 0;
        queue[tail++] = static_cast<std::uint32_t>(s);
        while (head < tail) {
            auto u = queue[head++];
            for (auto w : g.adj[u]) {
                if (row[w] == 0xff) {
                    row[w] = static_cast<std::uint8_t>(row[u] + 1);
                    queue[tail++] = w;
                }
            }
        }
        if (tail != n) throw std::logic_error("dual polar graph is not connected");
    }
    return dist;
}

BasePair default_base_pair(const DPGraph& g) {
    const int D = g.D();
    const int n = g.space.n;
    const FiniteField& f = *g.space.field;
    std::vector<FVec> rows;
    for (int i = 0; i < D; ++i) {
        FVec e(n, 0);
        e[i] = 1;
        rows.push_back(e);
    }
    IsoSubspace x = echelonize(f, n, rows);
    auto it = std::lower_bound(g.vertices.begin(), g.vertices.end(), x);
    if (it == g.vertices.end() || !(*it == x)) throw std::logic_error("standard maximal isotropic subspace missing");
    BasePair bp;
    bp.x = static_cast<std::size_t>(it - g.vertices.begin());
    rows.pop_back();
    for (std::size_t y = 0; y < g.size(); ++y) {
        bool all = std::all_of(rows.begin(), rows.end(), [&](const FVec& v) { return contains(f, g.vertices[y], v); });
        if (all) bp.clique.push_back(y);
    }
    return bp;
}

BasePair random_base_pair(const DPGraph& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    BasePair bp;
    bp.x = std::uniform_int_distribution<std::size_t>(0, g.size() - 1)(rng);
    const auto& nx = g.adj[bp.x];
    std::size_t y = nx[std::uniform_int_distribution<std::size_t>(0, nx.size() - 1)(rng)];
    bp.clique = {bp.x, y};
    for (auto z : nx) {
        if (z != y && g.adjacent(y, z)) bp.clique.push_back(z);
    }
    std::sort(bp.clique.begin(), bp.clique.end());
    return bp;
}

}  // namespace dpg
