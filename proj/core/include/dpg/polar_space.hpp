#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "dpg/family.hpp"
#include "dpg/finite_field.hpp"

namespace dpg {

using FVec = std::vector<FiniteField::Elem>;

/// One term c * x_i * y_j (or c * x_i * x_j for quadratic forms).
struct FormTerm {
    int i;
    int j;
    FiniteField::Elem c;
};

/// Vector space F_q^n with one of the six standard forms.
///
/// Sesquilinear forms are f(x, y) = sum c x_i sigma(y_j) with sigma the
/// identity (alternating) or a -> a^r (Hermitian). Quadratic forms are
/// Q(x) = sum_{i <= j} c x_i x_j with polar form B(x,y) = Q(x+y)-Q(x)-Q(y).
class FormedSpace {
public:
    enum class Kind { Alternating, Quadratic, Hermitian };

    FamilyParams params;
    long q0 = 0;
    int n = 0;
    Kind kind = Kind::Alternating;
    std::shared_ptr<const FiniteField> field;
    std::vector<FormTerm> terms;

    /// f(x, y) for sesquilinear forms, B(x, y) for quadratic ones.
    FiniteField::Elem pair(const FVec& x, const FVec& y) const;
    /// True if x is a singular / isotropic vector.
    bool isotropic(const FVec& x) const;
    std::string describe() const;
};

/// Standard formed space of the given family over F_{q0}.
/// Throws "Hermitian family requires square q" and "unsupported family".
FormedSpace build_space(Family family, long q0, int D);

/// Subspace of F_q^n stored as its reduced row echelon basis (k rows of n).
struct IsoSubspace {
    int k = 0;
    int n = 0;
    FVec rows;  // row-major, k * n entries

    const FiniteField::Elem* row(int r) const { return rows.data() + static_cast<std::size_t>(r) * n; }
    friend bool operator==(const IsoSubspace& a, const IsoSubspace& b) { return a.rows == b.rows && a.k == b.k; }
    friend bool operator<(const IsoSubspace& a, const IsoSubspace& b) { return a.rows < b.rows; }
};

/// Reduced row echelon form of a list of vectors; zero rows dropped.
IsoSubspace echelonize(const FiniteField& f, int n, const std::vector<FVec>& vectors);
/// dim(a ∩ b) for subspaces of the same ambient space.
int intersection_dimension(const FiniteField& f, const IsoSubspace& a, const IsoSubspace& b);
/// True if the vector lies in the subspace.
bool contains(const FiniteField& f, const IsoSubspace& s, const FVec& v);

struct EnumerationOptions {
    std::size_t max_vertices = 10000;
};

/// All maximal totally isotropic subspaces, sorted lexicographically on
/// their echelon matrices. Throws "instance too large" past the cap and
/// std::logic_error if the Witt index is not D.
std::vector<IsoSubspace> enumerate_maximal_isotropics(const FormedSpace& space,
                                                      const EnumerationOptions& opts = {});

/// The dual polar graph on an enumerated vertex set.
struct DPGraph {
    FormedSpace space;
    std::vector<IsoSubspace> vertices;
    std::vector<std::vector<std::uint32_t>> adj;

    std::size_t size() const { return vertices.size(); }
    int D() const { return space.params.D; }
    bool adjacent(std::size_t x, std::size_t y) const;
};

DPGraph dual_polar_graph(const FormedSpace& space, const EnumerationOptions& opts = {});

/// Edge list with header "# family q D |X|", one "u v" line per edge (u < v).
std::string edge_list(const DPGraph& g);

/// Distances between all pairs, row-major |X| x |X|, by BFS from each vertex.
std::vector<std::uint8_t> all_distances(const DPGraph& g);

/// Base vertex and maximal clique used to build the module W.
struct BasePair {
    std::size_t x = 0;
    std::vector<std::size_t> clique;  // sorted, contains x
};

/// x = span(e_0..e_{D-1}); C = vertices containing span(e_0..e_{D-2}).
BasePair default_base_pair(const DPGraph& g);
/// Random vertex x and random maximal clique through x (via a random edge).
BasePair random_base_pair(const DPGraph& g, std::uint64_t seed);

}  // namespace dpg
