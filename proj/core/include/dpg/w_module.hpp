#pragma once

#include <string>
#include <vector>

#include "dpg/alg_num.hpp"
#include "dpg/backend.hpp"
#include "dpg/closed_forms.hpp"
#include "dpg/drg.hpp"
#include "dpg/matrix.hpp"
#include "dpg/report.hpp"

namespace dpg {

/// The 2D-dimensional module W spanned by the characteristic vectors of
/// the cells C_i^±, in the ordered basis (C_0^-, C_0^+, ..., C_{D-1}^+).
template <class F>
struct WModule {
    Rational e;
    int D = 0;
    long q0 = 0;  // 0 for formal q

    Vector<F> gram;  // |C_i^±|
    Matrix<F> A, A_star, A_tilde_star;
    std::vector<Matrix<F>> E;             // i = 0..D
    std::vector<Matrix<F>> E_star;        // i = 0..D
    std::vector<Matrix<F>> E_tilde_star;  // i = 0..D-1
    Matrix<F> pi, pi_tilde;

    Vector<F> x_hat, C_hat, X_hat;
    Vector<F> w, w_tilde;
    std::vector<Vector<F>> u_perp;        // i = 0..D-2
    std::vector<Vector<F>> u_tilde_perp;  // i = 0..D-1
    F c, c_tilde;

    std::size_t dim() const { return 2 * static_cast<std::size_t>(D); }
    F inner(const Vector<F>& a, const Vector<F>& b) const { return gram_dot(a, b, gram); }
};

/// "C0-", "C0+", "C1-", ...
std::string cell_label(std::size_t k);

/// W from the closed forms in formal q; all invariants are verified.
WModule<Scalar> build_w_module_formal(const Rational& e, int D, Report* log = nullptr);

/// W from the enumerated graph: A from neighbor counts, A* from a column of
/// E_1, A~* from the average of the E_1 columns over the clique. Every
/// matrix is compared with its closed form evaluated at q0.
WModule<AlgNum> build_w_module_concrete(const DPGraph& g, const CliquePartition& part,
                                        const DRGProfile<Rational>& profile, Report* log = nullptr);

/// Empty when every structure constant of the two modules agrees.
template <class F>
std::string compare_modules(const WModule<F>& a, const WModule<F>& b) {
    auto cmp = [](const std::string& name, const auto& x, const auto& y) -> std::string {
        std::string s = mismatch_locus(x, y);
        return s.empty() ? s : name + " " + s;
    };
    std::vector<std::string> diffs{cmp("gram", a.gram, b.gram), cmp("A", a.A, b.A), cmp("A*", a.A_star, b.A_star),
                                   cmp("A~*", a.A_tilde_star, b.A_tilde_star), cmp("pi", a.pi, b.pi),
                                   cmp("pi~", a.pi_tilde, b.pi_tilde), cmp("w", a.w, b.w),
                                   cmp("w~", a.w_tilde, b.w_tilde)};
    for (std::size_t i = 0; i < a.E.size() && i < b.E.size(); ++i) diffs.push_back(cmp("E" + std::to_string(i), a.E[i], b.E[i]));
    for (const auto& d : diffs) {
        if (!d.empty()) return d;
    }
    return {};
}

}  // namespace dpg
