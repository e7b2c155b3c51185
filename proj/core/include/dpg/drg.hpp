#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dpg/matrix.hpp"
#include "dpg/polar_space.hpp"
#include "dpg/report.hpp"
#include "dpg/scalar.hpp"

namespace dpg {

/// Intersection numbers and (dual) eigenvalues of the graph and of its
/// Delsarte cliques.
template <class F>
struct DRGProfile {
    int D = 0;
    std::vector<F> a, b, c;            // i = 0..D
    std::vector<F> theta, theta_star;  // i = 0..D
    std::vector<F> a_clique, b_clique, c_clique, theta_star_clique;  // i = 0..D-1
};

/// Closed forms in formal q for a family with parameter e.
DRGProfile<Scalar> profile_formal(const Rational& e, int D);

/// |X| E_1 applied to a vertex indicator, as num / den with integer num.
struct DualColumn {
    std::vector<std::int64_t> num;
    Integer den = 1;
    Integer scale = 1;

    Rational at(std::size_t y) const {
        Rational r(Integer(static_cast<long>(num[y])) * scale, den);
        r.canonicalize();
        return r;
    }
};

/// Column x of |X| E_1, built as prod_{j != 1}(A - theta_j) e_x over the
/// integers. Throws "spectrum mismatch" when prod_j (A - theta_j) e_x != 0.
DualColumn dual_column(const DPGraph& g, const std::vector<Rational>& theta, std::size_t x);

/// Profile measured on the graph. Intersection numbers are checked on every
/// pair of vertices, theta_star on every column of E_1, and the clique data
/// on every vertex against the clique of the base pair. Throws
/// CheckFailure "intersection number inconsistent at distance i",
/// "spectrum mismatch", ...
DRGProfile<Rational> profile_from_graph(const DPGraph& g, const std::vector<std::uint8_t>& dist, const BasePair& base,
                                        Report* log = nullptr);
DRGProfile<Rational> profile_from_graph(const DPGraph& g, Report* log = nullptr);

/// Empty when the formal profile evaluated at q0 equals the measured one,
/// else a description of the first difference.
std::string compare_profiles(const DRGProfile<Scalar>& formal, const DRGProfile<Rational>& measured, long q0);

/// Partition of X into C_i^- = Gamma_i(x) ∩ C_i and C_i^+ = Gamma_{i+1}(x) ∩ C_i.
/// Cell 2i holds C_i^-, cell 2i+1 holds C_i^+.
struct CliquePartition {
    int D = 0;
    std::size_t x = 0;
    std::vector<std::size_t> clique;
    std::vector<int> cell;              // per vertex
    std::vector<std::size_t> counts;    // per cell
    std::vector<std::uint8_t> dist_x;   // ∂(x, z)
    std::vector<std::uint8_t> dist_clique;  // ∂(C, z)
    /// neighbors(a, b) = number of neighbors in cell b of any vertex of cell a.
    Matrix<Rational> neighbors;
};

/// Builds and verifies the partition: C is a maximal clique through x of
/// size 1 + q^e, the partition is equitable with the coefficient tables in
/// terms of (a_i, b_i, c_i), and the cell sizes match their closed forms.
CliquePartition clique_partition(const DPGraph& g, const std::vector<std::uint8_t>& dist, const BasePair& base,
                                 const DRGProfile<Rational>& profile, Report* log = nullptr);

nlohmann::json profile_json(const DRGProfile<Scalar>& p);
nlohmann::json profile_json(const DRGProfile<Rational>& p);
nlohmann::json partition_json(const CliquePartition& p);

}  // namespace dpg
