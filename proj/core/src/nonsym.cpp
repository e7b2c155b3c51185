#include "dpg/nonsym.hpp"

#include <type_traits>

#include "dpg/closed_forms.hpp"
#include "dpg/qcalc.hpp"

namespace dpg {

namespace {

const char* kDef = "non-symmetric dual q-Krawtchouk polynomials";
const char* kReal = "the polynomials generate the cell vectors from x";
const char* kMin = "minimal polynomial of X on W";
const char* kRec = "four-term recurrences";
const char* kSpec = "eigenvectors of X and their norms";
const char* kOrth = "orthogonality relations";

std::string at(int i) { return "i=" + std::to_string(i); }
std::string at(int i, bool plus) { return "i=" + std::to_string(i) + (plus ? " +" : " -"); }

Scalar qr(const Rational& k) { return Scalar::q_pow(k); }
Scalar sign_pow(long k) { return (k % 2 == 0) ? Scalar(1) : Scalar(-1); }

/// P_0 = 1, P_{i+1} = (X - a_i) P_i - b_{i-1} c_i P_{i-1} with X = alpha + beta tau (eta + eta^{-1}),
/// divided by (beta tau)^i; count terms.
std::vector<LP> monic_by_recurrence(const DualQKSeq& s, int count) {
    auto n = intersection_numbers_closed(s);
    const Scalar bt = s.beta * s.tau;
    const LP x = LP(s.alpha) + (LP::eta(1) + LP::eta(-1)) * bt;
    std::vector<LP> p{LP(Scalar(1))};
    for (int i = 0; i + 1 < count; ++i) {
        LP next = (x - LP(n.a[i])) * p[i];
        if (i > 0) next -= p[i - 1] * (n.b[i - 1] * n.c[i]);
        p.push_back(next);
    }
    for (int i = 0; i < count; ++i) p[i] = p[i] / bt.pow(i);
    return p;
}

}  // namespace

LP NonsymFamily::ell(int i, bool plus) const {
    if (i < 0) return LP();
    return plus ? ell_plus.at(i) : ell_minus.at(i);
}

NonsymFamily build_family(const Rational& e, int D, Report* log) {
    NonsymFamily f;
    f.e = e;
    f.D = D;
    const Scalar one(1);
    const Scalar q = Scalar::q();
    const Scalar qD = Scalar::q_pow(D);
    const Scalar qe = qr(e);
    const Rational De = Rational(D) + e;
    f.tau = Scalar::i() * qr(-De / 2);
    const Scalar& tau = f.tau;
    const Scalar ti = tau.inverse();

    for (int i = 0; i <= D; ++i) f.h.push_back(h_poly(i, tau, D));
    for (int i = 0; i <= D - 2; ++i) f.h_perp.push_back(h_poly(i, tau * q, D - 2));
    for (int i = 0; i < D; ++i) {
        f.h_tilde.push_back(h_poly(i, tau, D - 1));
        f.h_tilde_perp.push_back(h_poly(i, tau * q, D - 1));
    }
    const LP eta = LP::eta(1);
    const LP eta_inv = LP::eta(-1);
    f.p_perp = eta_inv * (eta - LP(tau)) * (eta - LP(ti / qD));
    f.p_tilde = eta_inv * (eta - LP(ti / qD));
    f.p_tilde_perp = eta_inv * (eta - LP(tau));
    f.h_perp_top = LP::eta(1 - D);
    for (int n = 1; n < D; ++n) {
        f.h_perp_top = f.h_perp_top * (eta - LP(tau * q.pow(n))) * (eta - LP(ti * q.pow(-n)));
    }
    auto hp = [&](int i) -> LP {
        if (i < 0) return LP();
        return i <= D - 2 ? f.h_perp[i] : f.h_perp_top;
    };

    for (int i = 0; i < D; ++i) {
        const Scalar qqi = q_pochhammer(q, i);
        const Scalar qi = q.pow(i);
        f.ell_plus.push_back((f.h[i + 1] - f.p_perp * hp(i)) / (tau.pow(i + 1) * (one - qD) * qqi));
        LP inner = f.h[i] - f.p_perp * hp(i - 1) * ((one - qi) / (qD - qi));
        f.ell_minus.push_back(inner * ((qD - qi) / (tau.pow(i) * (qD - one) * qqi)));
        const Scalar den = tau.pow(i) * (one + qe) * qqi;
        f.ell_tilde_plus.push_back((f.p_tilde * f.h_tilde[i] - f.p_tilde_perp * f.h_tilde_perp[i]) * (qe / den));
        f.ell_tilde_minus.push_back((f.p_tilde * f.h_tilde[i] + f.p_tilde_perp * f.h_tilde_perp[i] * qe) / den);
    }
    const LP top = f.p_perp * f.h_perp_top;
    f.ell_plus.push_back(-(eta_inv * top) / (tau.pow(D + 1) * q_pochhammer(q, D)));
    f.ell_minus.push_back(top / (tau.pow(D) * q_pochhammer(q, D)));

    for (int i = -D; i < D; ++i) f.lambda.push_back(i >= 0 ? tau * q.pow(i) : ti * q.pow(i));

    // spectral weights
    f.y_norm.assign(2 * D, Scalar(0));
    f.y_cross.assign(D, Scalar(0));
    f.y_norm[D] = one / q_pochhammer(-qe, D);
    f.y_norm[0] = one / q_pochhammer(-qe.inverse(), D);
    for (int i = 1; i < D; ++i) {
        const Rational ri(i);
        const Scalar wden = one + qr(De - 2 * ri);
        f.y_norm[i + D] = sign_pow(i) * qr(ri * (De - ri)) * q_pochhammer(q.pow(1 - D), i) *
                          (one + qD + qr(De - ri) - qr(Rational(D) - ri)) /
                          (q_pochhammer(q, i) * q_pochhammer(-qr(e - ri), D) * wden);
        f.y_norm[-i + D] = sign_pow(i - 1) * qr(ri * (De - ri - 2) + De) * q_pochhammer(q.pow(1 - D), i - 1) *
                           (one + qD + qr(ri - e) - q.pow(i)) /
                           (q_pochhammer(q, i - 1) * q_pochhammer(-qr(e - ri + 1), D) * wden);
        f.y_cross[i] = sign_pow(i) * qr(ri * (De - ri - 1) + D) * q_pochhammer(q.pow(1 - D), i) /
                       (q_pochhammer(q, i - 1) * q_pochhammer(-qr(e - ri + 1), D - 1) * wden);
    }

    std::string where;
    for (int i = 0; i < D && where.empty(); ++i) {
        if (f.ell_plus[i] != f.ell_tilde_plus[i]) where = at(i, true);
        if (f.ell_minus[i] != f.ell_tilde_minus[i]) where = at(i, false);
    }
    verify(log, "the two expressions agree: l_i^± = l~_i^±", kDef, where.empty(), where);
    where.clear();
    for (int i = 0; i < D && where.empty(); ++i) {
        if (!f.ell_plus[i].within(-i - 1, i - 1)) where = at(i, true);
        if (!f.ell_minus[i].within(-i, i)) where = at(i, false);
    }
    verify(log, "l_i^+ has degrees in [-i-1, i-1] and l_i^- in [-i, i]", kDef, where.empty(), where);

    const std::size_t n = 2 * static_cast<std::size_t>(D);
    Matrix<Scalar> coeffs(n, n);
    for (int i = 0; i < D; ++i) {
        for (int k = -D; k < D; ++k) {
            coeffs(k + D, 2 * i) = f.ell_minus[i].coeff(k);
            coeffs(k + D, 2 * i + 1) = f.ell_plus[i].coeff(k);
        }
    }
    verify(log, "the l_i^± form a basis of L", kDef, rank(coeffs) == n);

    auto seqs = four_sequences(e, D);
    auto rec = monic_by_recurrence(seqs[0], D + 1);
    where.clear();
    for (int i = 0; i <= D && where.empty(); ++i) {
        if (rec[i] != f.h[i]) where = at(i);
    }
    verify(log, "h_i from the 3phi2 satisfy the monic three-term recurrence", kDef, where.empty(), where);
    rec = monic_by_recurrence(seqs[1], D);
    where.clear();
    for (int i = 0; i <= D - 2 && where.empty(); ++i) {
        if (rec[i] != f.h_perp[i]) where = at(i);
    }
    verify(log, "h^perp_i from the 3phi2 satisfy the monic three-term recurrence", kDef, where.empty(), where);
    verify(log, "the product formula for h^perp_{D-1} is the next term of that recurrence", kDef,
           rec[D - 1] == f.h_perp_top);

    LP diff = eta_inv * top - LP::monomial(qD.inverse(), -D - 1);
    verify(log, "eta^{-1} p^perp h^perp_{D-1} = q^{-D} eta^{-D-1} mod L", kMin, diff.within(-D, D - 1));
    diff = top - LP::eta(D);
    verify(log, "p^perp h^perp_{D-1} = eta^D mod L", kMin, diff.within(-D, D - 1));

    bool distinct = true;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) distinct = distinct && f.lambda[a] != f.lambda[b];
    }
    verify(log, "lambda_{-D}, ..., lambda_{D-1} are pairwise distinct", kMin, distinct);
    LP minimal = top.shift(D);
    where.clear();
    if (minimal.low() != 0 || minimal.high() != static_cast<long>(n)) where = "degree";
    for (std::size_t k = 0; k < n && where.empty(); ++k) {
        if (!minimal(f.lambda[k]).is_zero()) where = at(static_cast<int>(k) - D);
    }
    verify(log, "eta^D p^perp h^perp_{D-1} has degree 2D and vanishes at every lambda_i", kMin, where.empty(), where);
    return f;
}

void verify_recurrences(const NonsymFamily& fam, Report* log) {
    const int D = fam.D;
    for (int power : {1, -1}) {
        for (bool plus : {false, true}) {
            std::string where;
            for (int i = 0; i < D && where.empty(); ++i) {
                LP lhs = fam.ell(i, plus).shift(power);
                LP rhs;
                for (const auto& t : x_action_terms(D, fam.tau, i, plus, power)) rhs += fam.ell(t.i, t.plus) * t.coeff;
                if (lhs != rhs) where = at(i);
            }
            std::string name = std::string(power == 1 ? "eta" : "eta^{-1}") + " l_i^" + (plus ? "+" : "-") +
                               " follows the coefficient table";
            verify(log, name, kRec, where.empty(), where);
        }
    }
}

template <class B>
void verify_module_realization(const NonsymFamily& fam, const NilDahaRep<typename B::Field>& rep,
                               const WModule<typename B::Field>& w, const B& be, Report* log) {
    using F = typename B::Field;
    const int D = fam.D;
    const std::size_t n = 2 * static_cast<std::size_t>(D);
    auto L = [&](const LP& p) { return lift_poly<F>(be, p); };
    auto at_x = [&](const LP& p, const Vector<F>& v) { return L(p).apply(rep.x, rep.x_inv, v); };

    std::string where;
    for (int i = 0; i < D && where.empty(); ++i) {
        for (bool plus : {false, true}) {
            Vector<F> want = unit_vector<F>(n, 2 * i + (plus ? 1 : 0));
            const LP& tilde = plus ? fam.ell_tilde_plus[i] : fam.ell_tilde_minus[i];
            if (at_x(fam.ell(i, plus), w.x_hat) != want || at_x(tilde, w.x_hat) != want) {
                where = at(i, plus);
                break;
            }
        }
    }
    verify(log, "C_i^± = l_i^±(X) x = l~_i^±(X) x", kReal, where.empty(), where);

    const Scalar q = Scalar::q();
    verify(log, "u_0^perp = tau^{-1} q^{-1} p^perp(X) x", kReal,
           scale(be.lift((fam.tau * q).inverse()), at_x(fam.p_perp, w.x_hat)) == w.u_perp[0]);
    verify(log, "C = p~(X) x", kReal, at_x(fam.p_tilde, w.x_hat) == w.C_hat);
    verify(log, "u~_0^perp = -q^e p~^perp(X) x", kReal,
           scale(be.lift(-Scalar::q_pow(fam.e)), at_x(fam.p_tilde_perp, w.x_hat)) == w.u_tilde_perp[0]);

    verify(log, "l_D^+(X) = l_D^-(X) = 0 on W", kMin,
           L(fam.ell_plus[D]).at_matrix(rep.x, rep.x_inv).is_zero() &&
               L(fam.ell_minus[D]).at_matrix(rep.x, rep.x_inv).is_zero());
    verify(log, "p^perp(X) h^perp_{D-1}(X) = 0 on W", kMin,
           L(fam.p_perp * fam.h_perp_top).at_matrix(rep.x, rep.x_inv).is_zero());
    verify(log, "x is a cyclic vector for X, so the minimal polynomial has degree 2D", kMin,
           span_dimension(krylov(rep.x, w.x_hat, n)) == n);
}

template <class B>
SpectralData<typename B::Field> spectral_data(const NonsymFamily& fam, const NilDahaRep<typename B::Field>& rep,
                                              const WModule<typename B::Field>& w, const B& be, Report* log) {
    using F = typename B::Field;
    const int D = fam.D;
    const std::size_t n = 2 * static_cast<std::size_t>(D);
    const Scalar one(1);
    const Scalar q = Scalar::q();
    const Scalar qD = Scalar::q_pow(D);
    const Scalar qe = Scalar::q_pow(fam.e);
    const Rational De = Rational(D) + fam.e;

    std::vector<Vector<F>> ex, eu;
    for (int i = 0; i <= D; ++i) {
        ex.push_back(w.E[i] * w.x_hat);
        eu.push_back(w.E[i] * w.u_perp[0]);
    }
    SpectralData<F> s;
    s.y.assign(n, Vector<F>());
    s.y[D] = ex[0];
    s.y[0] = ex[D];
    for (int i = 1; i < D; ++i) {
        const Scalar den = (qD - one) * (one + qr(De - 2 * i));
        const Scalar c = q.pow(D - i + 1) / den;
        const F a_plus = be.lift((q.pow(D - i) - one) * (one + qr(De - i)) / den);
        const F a_minus = be.lift(q.pow(D - 2 * i) * (q.pow(i) - one) * (qe + q.pow(i)) / den);
        s.y[i + D] = scale(a_plus, ex[i]) + scale(be.lift(c), eu[i]);
        s.y[-i + D] = scale(a_minus, ex[i]) - scale(be.lift(c), eu[i]);
    }

    std::string where;
    for (int k = 0; k < static_cast<int>(n) && where.empty(); ++k) {
        if (rep.x * s.y[k] != scale(be.lift(fam.lambda[k]), s.y[k]) || is_zero_vector(s.y[k])) where = at(k - D);
    }
    verify(log, "X y_i = lambda_i y_i with y_i nonzero", kSpec, where.empty(), where);
    Vector<F> total(n, F(0));
    for (const auto& y : s.y) total = total + y;
    verify(log, "sum y_i = x", kSpec, total == w.x_hat);
    where.clear();
    for (int i = 1; i < D && where.empty(); ++i) {
        if (s.y[i + D] + s.y[-i + D] != ex[i]) where = at(i);
    }
    verify(log, "y_i + y_{-i} = E_i x", kSpec, where.empty(), where);

    s.norm.clear();
    for (const auto& y : s.y) s.norm.push_back(w.inner(y, y));
    s.cross.assign(D, F(0));
    for (int i = 1; i < D; ++i) s.cross[i] = w.inner(s.y[i + D], s.y[-i + D]);
    where.clear();
    for (std::size_t k = 0; k < n && where.empty(); ++k) {
        if (s.norm[k] != be.lift(fam.y_norm[k])) where = at(static_cast<int>(k) - D);
    }
    verify(log, "||y_i||^2 match their closed forms", kSpec, where.empty(), where);
    where.clear();
    for (int i = 1; i < D && where.empty(); ++i) {
        if (s.cross[i] != be.lift(fam.y_cross[i])) where = at(i);
    }
    verify(log, "<y_i, y_{-i}> match their closed forms", kSpec, where.empty(), where);
    bool orth = true;
    for (int a = -D; a < D && orth; ++a) {
        for (int b = -D; b < D; ++b) {
            if (a == b || a == -b) continue;
            if (!is_zero(w.inner(s.y[a + D], s.y[b + D]))) {
                orth = false;
                break;
            }
        }
    }
    verify(log, "<y_i, y_j> = 0 unless j = ±i", kSpec, orth);

    auto seqs = four_sequences(fam.e, D);
    auto m = m_values_closed(seqs[0]);
    auto m_perp = m_values_closed(seqs[1]);
    const Scalar u_norm = qr(fam.e - 1) * (q.pow(D - 1) - one) * (qD - one);
    verify(log, "||u_0^perp||^2 = q^{e-1} (q^{D-1} - 1)(q^D - 1)", kSpec,
           w.inner(w.u_perp[0], w.u_perp[0]) == be.lift(u_norm));
    where.clear();
    for (int i = 0; i <= D && where.empty(); ++i) {
        const Rational ri(i);
        Scalar closed = sign_pow(i) * qr(ri * (De - ri + 1)) * q_pochhammer(qD.inverse(), i) *
                        (one + qr(De - 2 * ri)) / (q_pochhammer(q, i) * q_pochhammer(-qr(fam.e - ri), D + 1));
        if (closed != m[i] || w.inner(ex[i], ex[i]) != be.lift(closed)) where = at(i);
    }
    verify(log, "||E_i x||^2 equals its closed form and m_i", kSpec, where.empty(), where);
    F size(0);
    for (const auto& c : w.gram) size += c;
    verify(log, "m_0 = ||E_0 x||^2 = 1/|X|", kSpec, w.inner(ex[0], ex[0]) * size == F(1));
    where.clear();
    for (int i = 1; i < D && where.empty(); ++i) {
        const Rational ri(i);
        Scalar closed = sign_pow(i - 1) * qr(ri * (De - ri + 1) + D - 2) * q_pochhammer(qD.inverse(), i + 1) *
                        (one + qr(De - 2 * ri)) /
                        (q_pochhammer(q, i - 1) * q_pochhammer(-qr(fam.e - ri + 1), D - 1));
        if (closed != m_perp[i - 1] * u_norm || w.inner(eu[i], eu[i]) != be.lift(closed)) where = at(i);
    }
    verify(log, "||E_i u_0^perp||^2 equals its closed form and m^perp_{i-1} ||u_0^perp||^2", kSpec, where.empty(),
           where);
    return s;
}

template <class B>
Matrix<typename B::Field> ell_gram(const NonsymFamily& fam, const B& be) {
    using F = typename B::Field;
    const int D = fam.D;
    const std::size_t n = 2 * static_cast<std::size_t>(D);
    std::vector<LaurentPoly<F>> ell;
    for (int i = 0; i < D; ++i) {
        ell.push_back(lift_poly<F>(be, fam.ell_minus[i]));
        ell.push_back(lift_poly<F>(be, fam.ell_plus[i]));
    }
    // values at each lambda once, then the weighted sums
    std::vector<std::vector<F>> val(n);
    for (std::size_t a = 0; a < n; ++a) {
        for (int k = 0; k < 2 * D; ++k) val[a].push_back(ell[a](be.lift(fam.lambda[k])));
    }
    std::vector<F> wn, wc(D, F(0));
    for (const auto& y : fam.y_norm) wn.push_back(be.lift(y));
    for (int i = 1; i < D; ++i) wc[i] = be.lift(fam.y_cross[i]);
    Matrix<F> g(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            F sum(0);
            for (int k = 0; k < 2 * D; ++k) sum += val[a][k] * conj(val[b][k]) * wn[k];
            for (int i = 1; i < D; ++i) {
                sum += (val[a][i + D] * conj(val[b][-i + D]) + val[a][-i + D] * conj(val[b][i + D])) * wc[i];
            }
            g(a, b) = sum;
        }
    }
    return g;
}

template <class B>
void verify_orthogonality(const NonsymFamily& fam, const NilDahaRep<typename B::Field>& rep,
                          const WModule<typename B::Field>& w, const B& be, Report* log) {
    using F = typename B::Field;
    const int D = fam.D;
    const std::size_t n = 2 * static_cast<std::size_t>(D);

    Matrix<F> g = ell_gram(fam, be);
    Matrix<F> want = Matrix<F>::diagonal(w.gram);
    verify(log, "<l_i^mu, l_j^nu>_L = delta_ij delta_mu,nu |C_i^mu|", kOrth, g == want, mismatch_locus(want, g));
    F total(0);
    for (const auto& c : w.gram) total += c;
    verify(log, "the Gram of the l_i^± has trace |X|", kOrth,
           g.trace() == total && total == be.lift(vertex_count_formal(fam.e, D)));

    const LaurentPoly<F> one(F(1));
    verify(log, "<1, 1>_L = ||x||^2 = 1", kOrth, inner_product_L(one, one, fam, be) == F(1));

    // monomials of L: the form against the Gram of W on X^k x
    std::vector<Vector<F>> vec(n);
    Vector<F> v = w.x_hat;
    for (int k = 0; k < D; ++k) {
        vec[k + D] = v;
        v = rep.x * v;
    }
    v = w.x_hat;
    for (int k = -1; k >= -D; --k) {
        v = rep.x_inv * v;
        vec[k + D] = v;
    }
    Matrix<F> mono(n, n);
    bool same = true;
    std::string where;
    for (int a = -D; a < D; ++a) {
        for (int b = -D; b < D; ++b) {
            F lhs = inner_product_L(LaurentPoly<F>::eta(a), LaurentPoly<F>::eta(b), fam, be);
            mono(a + D, b + D) = lhs;
            if (same && lhs != w.inner(vec[a + D], vec[b + D])) {
                same = false;
                where = "eta^" + std::to_string(a) + ", eta^" + std::to_string(b);
            }
        }
    }
    verify(log, "<f, g>_L = <f(X) x, g(X) x> on the monomials of L", kOrth, same, where);

    where.clear();
    for (int i = 0; i <= D && where.empty(); ++i) {
        auto hi = lift_poly<F>(be, fam.h[i]);
        for (int j = 0; j < i; ++j) {
            if (!is_zero(hermitian_form(hi, lift_poly<F>(be, fam.h[j]), fam, be))) {
                where = "i=" + std::to_string(i) + " j=" + std::to_string(j);
                break;
            }
        }
    }
    verify(log, "the symmetric h_i are pairwise orthogonal", kOrth, where.empty(), where);

    if constexpr (std::is_same_v<F, AlgNum>) {
        // pivots of Gaussian elimination on a Hermitian matrix are real; all positive iff definite
        Matrix<F> m = mono;
        bool positive = true;
        for (std::size_t k = 0; k < n && positive; ++k) {
            const F pivot = m(k, k);
            try {
                if (real_sign(pivot) <= 0) positive = false;
            } catch (const std::domain_error&) {
                positive = false;
            }
            if (!positive) {
                where = "pivot " + std::to_string(k);
                break;
            }
            for (std::size_t r = k + 1; r < n; ++r) {
                if (is_zero(m(r, k))) continue;
                F factor = m(r, k) / pivot;
                for (std::size_t c = k; c < n; ++c) m(r, c) -= factor * m(k, c);
            }
        }
        verify(log, "<,>_L is positive definite on the monomials of L", kOrth, positive, where);
    }
}

template void verify_module_realization(const NonsymFamily&, const NilDahaRep<Scalar>&, const WModule<Scalar>&,
                                        const FormalBackend&, Report*);
template void verify_module_realization(const NonsymFamily&, const NilDahaRep<AlgNum>&, const WModule<AlgNum>&,
                                        const ConcreteBackend&, Report*);
template SpectralData<Scalar> spectral_data(const NonsymFamily&, const NilDahaRep<Scalar>&, const WModule<Scalar>&,
                                            const FormalBackend&, Report*);
template SpectralData<AlgNum> spectral_data(const NonsymFamily&, const NilDahaRep<AlgNum>&, const WModule<AlgNum>&,
                                            const ConcreteBackend&, Report*);
template Matrix<Scalar> ell_gram(const NonsymFamily&, const FormalBackend&);
template Matrix<AlgNum> ell_gram(const NonsymFamily&, const ConcreteBackend&);
template void verify_orthogonality(const NonsymFamily&, const NilDahaRep<Scalar>&, const WModule<Scalar>&,
                                   const FormalBackend&, Report*);
template void verify_orthogonality(const NonsymFamily&, const NilDahaRep<AlgNum>&, const WModule<AlgNum>&,
                                   const ConcreteBackend&, Report*);

}  // namespace dpg
