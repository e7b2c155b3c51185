#pragma once

#include <vector>

#include "dpg/backend.hpp"
#include "dpg/laurent.hpp"
#include "dpg/leonard.hpp"
#include "dpg/nildaha.hpp"
#include "dpg/report.hpp"
#include "dpg/w_module.hpp"

namespace dpg {

using LP = LaurentPoly<Scalar>;

/// The non-symmetric dual q-Krawtchouk polynomials and everything used to
/// build them and their orthogonality weights, in formal q.
struct NonsymFamily {
    Rational e;
    int D = 0;
    Scalar tau;

    std::vector<LP> ell_plus, ell_minus;               // i = 0..D; index D is the boundary polynomial
    std::vector<LP> ell_tilde_plus, ell_tilde_minus;   // i = 0..D-1
    LP p_perp, p_tilde, p_tilde_perp;
    std::vector<LP> h, h_perp, h_tilde, h_tilde_perp;  // h: 0..D, h_perp: 0..D-2, the others 0..D-1
    LP h_perp_top;                                     // h^perp_{D-1} from its product formula

    /// lambda_i for i = -D..D-1, stored at index i + D.
    std::vector<Scalar> lambda;
    /// ||y_i||^2 for i = -D..D-1 at index i + D; <y_i, y_{-i}> for i = 1..D-1 at index i.
    std::vector<Scalar> y_norm, y_cross;

    const Scalar& lambda_at(int i) const { return lambda[i + D]; }
    /// l_i^- (plus = false) or l_i^+ for i = -1..D; zero at i = -1.
    LP ell(int i, bool plus) const;
};

/// Builds the family and checks l = l~, the degree windows, that the l_i^±
/// form a basis of L = span{eta^{-D}, ..., eta^{D-1}}, and that the
/// product formula for h^perp_{D-1} continues the monic recurrence of
/// the system on the orthogonal complement of M x.
NonsymFamily build_family(const Rational& e, int D, Report* log = nullptr);

template <class F, class B>
LaurentPoly<F> lift_poly(const B& be, const LP& p) {
    return p.template map<F>([&](const Scalar& c) { return be.lift(c); });
}

/// l_i^±(x) x = C_i^±, the same for l~, l_D^±(x) = 0, the minimal
/// polynomial of x, and the congruences modulo L.
template <class B>
void verify_module_realization(const NonsymFamily& fam, const NilDahaRep<typename B::Field>& rep,
                               const WModule<typename B::Field>& w, const B& be, Report* log = nullptr);

/// eta^{±1} l_i^± as combinations of the l_j^±, boundary terms included.
void verify_recurrences(const NonsymFamily& fam, Report* log = nullptr);

template <class F>
struct SpectralData {
    std::vector<Vector<F>> y;  // y_i at index i + D
    std::vector<F> norm;       // measured ||y_i||^2 at index i + D
    std::vector<F> cross;      // measured <y_i, y_{-i}> at index i, i = 1..D-1
};

/// Builds y_i from E_i x and E_i u_0^perp and checks the eigenvector
/// equations, sum y_i = x, y_i + y_{-i} = E_i x, and every norm against
/// its closed form.
template <class B>
SpectralData<typename B::Field> spectral_data(const NonsymFamily& fam, const NilDahaRep<typename B::Field>& rep,
                                              const WModule<typename B::Field>& w, const B& be,
                                              Report* log = nullptr);

/// The Hermitian form on Laurent polynomials given by the spectral weights.
/// Defined for any f, g; it is an inner product on L.
template <class F, class B>
F hermitian_form(const LaurentPoly<F>& f, const LaurentPoly<F>& g, const NonsymFamily& fam, const B& be) {
    const int D = fam.D;
    std::vector<F> fv, gv;
    for (int i = -D; i < D; ++i) {
        F lam = be.lift(fam.lambda_at(i));
        fv.push_back(f(lam));
        gv.push_back(conj(g(lam)));
    }
    F sum(0);
    for (int k = 0; k < 2 * D; ++k) sum += fv[k] * gv[k] * be.lift(fam.y_norm[k]);
    for (int i = 1; i < D; ++i) {
        F w = be.lift(fam.y_cross[i]);
        sum += (fv[i + D] * gv[-i + D] + fv[-i + D] * gv[i + D]) * w;
    }
    return sum;
}

/// <f, g>_L; throws std::domain_error "polynomial outside L" unless both lie in L.
template <class F, class B>
F inner_product_L(const LaurentPoly<F>& f, const LaurentPoly<F>& g, const NonsymFamily& fam, const B& be) {
    if (!f.within(-fam.D, fam.D - 1) || !g.within(-fam.D, fam.D - 1)) throw std::domain_error("polynomial outside L");
    return hermitian_form(f, g, fam, be);
}

/// Gram of {l_i^±} under <,>_L against diag(|C_i^±|), the form against
/// the Gram of W on f(x) x, orthogonality of the symmetric h_i, and (for
/// concrete q) positivity on the monomial basis of L.
template <class B>
void verify_orthogonality(const NonsymFamily& fam, const NilDahaRep<typename B::Field>& rep,
                          const WModule<typename B::Field>& w, const B& be, Report* log = nullptr);

/// Gram of {l_0^-, l_0^+, ..., l_{D-1}^+} under <,>_L.
template <class B>
Matrix<typename B::Field> ell_gram(const NonsymFamily& fam, const B& be);

}  // namespace dpg
