#pragma once

#include <vector>

#include "dpg/drg.hpp"
#include "dpg/matrix.hpp"
#include "dpg/scalar.hpp"

namespace dpg {

/// Everything about the module W that has a closed form in q, in the
/// ordered basis (C_0^-, C_0^+, ..., C_{D-1}^-, C_{D-1}^+).
struct WClosedForms {
    Rational e;
    int D = 0;
    DRGProfile<Scalar> profile;
    Scalar vertex_count;
    Scalar clique_size;
    Vector<Scalar> counts;

    // parameter sequence of the Leonard system on M x
    Scalar alpha, beta, gamma, alpha_star, beta_star;
    Scalar tau;

    Matrix<Scalar> A;               // coefficient table of A on the cells
    Matrix<Scalar> A_star;          // diag(theta*_i on C_i^-, theta*_{i+1} on C_i^+)
    Matrix<Scalar> A_tilde_star;    // diag(theta~*_i on C_i^±)
    Matrix<Scalar> pi, pi_tilde;
    Vector<Scalar> w, w_tilde;
    std::vector<Vector<Scalar>> u_perp;        // i = 0..D-2
    std::vector<Vector<Scalar>> u_tilde_perp;  // i = 0..D-1
    Scalar c, c_tilde;
};

WClosedForms closed_forms(const Rational& e, int D);

/// |C_i^-| (plus = false) or |C_i^+| (plus = true).
Scalar cell_count(const Rational& e, int D, int i, bool plus);

/// prod_{i=0}^{D-1} (1 + q^{i+e}).
Scalar vertex_count_formal(const Rational& e, int D);

/// Entry (a, b) is the number of neighbors in cell b of a vertex of cell a,
/// written in terms of (a_i, b_i, c_i). This is also the matrix of A on W.
template <class F>
Matrix<F> cell_adjacency(const DRGProfile<F>& p) {
    int D = p.D;
    Matrix<F> m(2 * D, 2 * D);
    for (int i = 0; i < D; ++i) {
        // row 2i: a vertex of C_i^- sees these numbers of neighbors per cell
        int r = 2 * i;
        if (i >= 1) m(r, 2 * i - 2) = p.c[i];
        m(r, 2 * i) = p.a[i];
        m(r, 2 * i + 1) = p.b[i] - p.b[i + 1];
        if (i + 1 < D) m(r, 2 * i + 2) = p.b[i + 1];
        // row 2i+1: a vertex of C_i^+
        r = 2 * i + 1;
        if (i >= 1) m(r, 2 * i - 1) = p.c[i];
        m(r, 2 * i) = p.c[i + 1] - p.c[i];
        m(r, 2 * i + 1) = p.a[i + 1];
        if (i + 1 < D) m(r, 2 * i + 3) = p.b[i + 1];
    }
    return m;
}

}  // namespace dpg
