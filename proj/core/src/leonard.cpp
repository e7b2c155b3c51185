#include "dpg/leonard.hpp"

#include <stdexcept>

#include "dpg/closed_forms.hpp"
#include "dpg/qcalc.hpp"

namespace dpg {

namespace {

const char* kSeq = "Leonard systems of dual q-Krawtchouk type";
const char* kAxioms = "Leonard system axioms";
const char* kSplit = "parameter array from the intersection numbers";
const char* kSum = "orthogonal decompositions of W";

const char* system_anchor(int k) {
    static const char* names[] = {
        "Leonard system on M x",
        "Leonard system on the orthogonal complement of M x",
        "Leonard system on M C",
        "Leonard system on the orthogonal complement of M C",
    };
    return names[k];
}

std::string at(int i) { return "i=" + std::to_string(i); }
std::string at(int i, int j) { return "i=" + std::to_string(i) + " j=" + std::to_string(j); }

template <class F>
std::string first_mismatch(const std::vector<F>& want, const std::vector<F>& got, std::size_t from = 0) {
    if (want.size() != got.size()) return "length " + std::to_string(got.size());
    for (std::size_t i = from; i < want.size(); ++i) {
        if (want[i] != got[i]) return "i=" + std::to_string(i) + ": expected " + to_string(want[i]) + ", got " + to_string(got[i]);
    }
    return {};
}

}  // namespace

std::array<DualQKSeq, 4> four_sequences(const Rational& e, int D) {
    WClosedForms cf = closed_forms(e, D);
    const Scalar q = Scalar::q();
    const Scalar qinv = Scalar::q_pow(-1);
    const Scalar qe = Scalar::q_pow(e);
    const Scalar bt = (Scalar(1) + Scalar::q_pow(e - 1)) / (Scalar(1) + qe) * cf.beta_star;
    std::array<DualQKSeq, 4> s;
    s[0] = {"Phi", cf.alpha, cf.alpha_star, cf.beta, cf.beta_star, cf.gamma, cf.tau, D};
    s[1] = {"Phi-perp", cf.alpha, cf.alpha_star, cf.beta * qinv, cf.beta_star * qinv, cf.gamma * q, cf.tau * q, D - 2};
    s[2] = {"Phi~", cf.alpha, cf.alpha_star, cf.beta, bt, cf.gamma, cf.tau, D - 1};
    s[3] = {"Phi~-perp", cf.alpha, cf.alpha_star, cf.beta * qinv, bt, cf.gamma * q, cf.tau * q, D - 1};
    return s;
}

ParamArray<Scalar> param_array(const DualQKSeq& s) {
    if (s.beta.is_zero() || s.beta_star.is_zero() || s.gamma.is_zero()) {
        throw std::domain_error("degenerate parameter array");
    }
    const int d = s.d;
    ParamArray<Scalar> p;
    for (int i = 0; i <= d; ++i) {
        p.theta.push_back(s.alpha + s.beta * Scalar::q_pow(-i) + s.gamma * Scalar::q_pow(i));
        p.theta_star.push_back(s.alpha_star + s.beta_star * Scalar::q_pow(-i));
    }
    p.phi.assign(d + 1, Scalar(0));
    p.phi_split.assign(d + 1, Scalar(0));
    for (int i = 1; i <= d; ++i) {
        Scalar common = s.beta_star * (Scalar(1) - Scalar::q_pow(i)) * (Scalar(1) - Scalar::q_pow(i - d - 1));
        p.phi[i] = s.beta * Scalar::q_pow(1 - 2 * i) * common;
        p.phi_split[i] = s.gamma * Scalar::q_pow(d + 1 - 2 * i) * common;
        if (p.phi[i].is_zero() || p.phi_split[i].is_zero()) throw std::domain_error("degenerate parameter array");
    }
    for (int i = 0; i <= d; ++i) {
        for (int j = i + 1; j <= d; ++j) {
            if (p.theta[i] == p.theta[j] || p.theta_star[i] == p.theta_star[j]) {
                throw std::domain_error("degenerate parameter array");
            }
        }
    }
    return p;
}

IntersectionNumbers<Scalar> intersection_numbers_closed(const DualQKSeq& s) {
    const int d = s.d;
    const Scalar theta0 = s.alpha + s.beta + s.gamma;
    IntersectionNumbers<Scalar> r;
    for (int i = 0; i <= d; ++i) {
        r.b.push_back(s.beta * (Scalar(1) - Scalar::q_pow(i - d)));
        r.c.push_back(s.gamma * (Scalar(1) - Scalar::q_pow(i)));
        r.a.push_back(theta0 - r.b.back() - r.c.back());
    }
    return r;
}

IntersectionNumbers<Scalar> intersection_numbers(const DualQKSeq& s, Report* log) {
    auto closed = intersection_numbers_closed(s);
    auto general = intersection_numbers_general(param_array(s));
    std::string where = first_mismatch(closed.b, general.b);
    verify(log, s.name + ": b_i from the split sequence equals beta (1 - q^{i-d})", kSeq, where.empty(), where);
    where = first_mismatch(closed.c, general.c);
    verify(log, s.name + ": c_i from the split sequence equals gamma (1 - q^i)", kSeq, where.empty(), where);
    return closed;
}

Scalar f_value(const DualQKSeq& s, int i, int j) {
    const Scalar q = Scalar::q();
    return phi_32(Scalar::q_pow(-i), Scalar::q_pow(-j), s.gamma / s.beta * Scalar::q_pow(j), Scalar::q_pow(-s.d), q);
}

LaurentPoly<Scalar> h_poly(int i, const Scalar& tau, int d) {
    using LP = LaurentPoly<Scalar>;
    LP sum = phi_32_sum<LP>(Scalar::q_pow(-i), LP::monomial(tau, -1), LP::monomial(tau, 1), Scalar::q_pow(-d),
                            Scalar::q(), LP(Scalar(1)));
    return sum * (q_pochhammer(Scalar::q_pow(-d), i) / tau.pow(i));
}

std::vector<Scalar> m_values_closed(const DualQKSeq& s) {
    const int d = s.d;
    const Scalar q = Scalar::q();
    const Scalar r = s.beta / s.gamma;
    std::vector<Scalar> out;
    for (int i = 0; i <= d; ++i) {
        Scalar num = r.pow(i) * q_pochhammer(Scalar::q_pow(-d), i) * (Scalar(1) - r * Scalar::q_pow(-2 * i));
        Scalar den = Scalar::q_pow(static_cast<long>(i) * (i - 1)) * q_pochhammer(q, i) *
                     q_pochhammer(r * Scalar::q_pow(-d - i), d + 1);
        out.push_back(num / den);
    }
    return out;
}

void verify_sequence(const DualQKSeq& s, Report* log) {
    const int d = s.d;
    ParamArray<Scalar> p;
    try {
        p = param_array(s);
        verify(log, s.name + ": parameter array is non-degenerate", kSeq, true);
    } catch (const std::domain_error& ex) {
        verify(log, s.name + ": parameter array is non-degenerate", kSeq, false, ex.what());
    }
    verify(log, s.name + ": tau^2 = gamma / beta", kSeq, s.tau * s.tau == s.gamma / s.beta);

    auto n = intersection_numbers(s, log);
    verify(log, s.name + ": c_0 = 0 and b_d = 0", kSeq, n.c[0].is_zero() && n.b[d].is_zero());

    auto v = v_polys(n);
    std::vector<Scalar> v0;
    for (const auto& vi : v) v0.push_back(vi(p.theta[0]));
    std::string where = first_mismatch(v_at_theta0(n), v0);
    verify(log, s.name + ": v_i(theta_0) = b_0..b_{i-1} / (c_1..c_i)", kSeq, where.empty(), where);

    where.clear();
    for (int i = 0; i <= d && where.empty(); ++i) {
        for (int j = 0; j <= d; ++j) {
            Scalar f = f_value(s, i, j);
            if (f != f_value_sum(p, i, j) || f != v[i](p.theta[j]) / v0[i]) {
                where = at(i, j);
                break;
            }
        }
    }
    verify(log, s.name + ": f_i(theta_j) agrees across the 3phi2, the split-sequence sum and the recurrence", kSeq,
           where.empty(), where);

    const Scalar q = Scalar::q();
    where.clear();
    for (int i = 0; i <= d && where.empty(); ++i) {
        auto h = h_poly(i, s.tau, d);
        if (!h.is_symmetric() || !h.within(-i, i) || h.coeff(i) != Scalar(1)) {
            where = at(i) + " shape";
            break;
        }
        Scalar scale = s.tau.pow(i) / q_pochhammer(Scalar::q_pow(-d), i);
        for (int j = 0; j <= d; ++j) {
            if (scale * h(s.tau * q.pow(j)) != f_value(s, i, j)) {
                where = at(i, j);
                break;
            }
        }
    }
    verify(log, s.name + ": h_i is monic symmetric and f_i(theta_j) = tau^i h_i(tau q^j) / (q^{-d};q)_i", kSeq,
           where.empty(), where);

    auto mc = m_values_closed(s);
    auto mg = m_values_general(p);
    where = first_mismatch(mc, mg);
    verify(log, s.name + ": m_i closed form equals the parameter-array formula", kSeq, where.empty(), where);
    Scalar total(0);
    for (const auto& m : mc) total += m;
    verify(log, s.name + ": sum m_i = 1", kSeq, total == Scalar(1));
}

template <class B>
std::array<LeonardSystemData<typename B::Field>, 4> realize_four_systems(const WModule<typename B::Field>& w,
                                                                         const B& be, Report* log) {
    using F = typename B::Field;
    const int D = w.D;
    auto seqs = four_sequences(w.e, D);
    std::array<LeonardSystemData<F>, 4> out;

    for (int k = 0; k < 4; ++k) {
        const DualQKSeq& s = seqs[k];
        const std::string anchor = system_anchor(k);
        const std::string tag = s.name + ": ";
        const int d = s.d;
        LeonardSystemData<F>& sys = out[k];
        sys.name = s.name;
        sys.d = d;
        switch (k) {
            case 0:
                for (int i = 0; i <= D; ++i) sys.basis.push_back(w.E_star[i] * w.X_hat);
                break;
            case 1:
                sys.basis = w.u_perp;
                break;
            case 2:
                for (int i = 0; i < D; ++i) sys.basis.push_back(w.E_tilde_star[i] * w.X_hat);
                break;
            default:
                sys.basis = w.u_tilde_perp;
        }
        const Matrix<F>& dual_op = (k < 2) ? w.A_star : w.A_tilde_star;
        ParamArray<F> p = lift(be, param_array(s));
        const std::size_t n = static_cast<std::size_t>(d) + 1;

        try {
            sys.A = restrict_to(w.A, sys.basis);
            sys.A_star = restrict_to(dual_op, sys.basis);
            verify(log, tag + "the standard basis spans a subspace invariant under both operators", anchor, true);
        } catch (const std::domain_error& ex) {
            verify(log, tag + "the standard basis spans a subspace invariant under both operators", anchor, false,
                   ex.what());
        }
        verify(log, tag + "the standard basis consists of eigenvectors for theta*_i", anchor,
               sys.A_star == Matrix<F>::diagonal(p.theta_star), mismatch_locus(Matrix<F>::diagonal(p.theta_star), sys.A_star));

        try {
            sys.E = primitive_idempotents(sys.A, p.theta);
            sys.E_star = primitive_idempotents(sys.A_star, p.theta_star);
        } catch (const std::domain_error& ex) {
            verify(log, tag + "both operators are multiplicity-free with eigenvalues theta_i, theta*_i", kAxioms,
                   false, ex.what());
        }
        bool ok = true;
        std::string where;
        for (std::size_t i = 0; i < n && ok; ++i) {
            if (!(sys.A * sys.E[i] == sys.E[i] * p.theta[i]) || sys.E[i].trace() != F(1) ||
                sys.E_star[i].trace() != F(1)) {
                ok = false;
                where = at(static_cast<int>(i));
            }
        }
        verify(log, tag + "both operators are multiplicity-free with eigenvalues theta_i, theta*_i", kAxioms, ok,
               where);

        // with rank-one E_j = v_j r_j, E_i op E_j = 0 iff entry (i, j) of V^{-1} op V is 0
        auto tridiagonal = [&](const std::vector<Matrix<F>>& idem, const Matrix<F>& op) {
            std::vector<Vector<F>> cols;
            for (const auto& e : idem) {
                std::size_t c = 0;
                while (c < n && is_zero_vector(e.column(c))) ++c;
                if (c == n) return std::string("zero idempotent");
                cols.push_back(e.column(c));
            }
            auto v = Matrix<F>::from_columns(cols, n);
            Matrix<F> m;
            try {
                m = inverse(v) * op * v;
            } catch (const std::domain_error&) {
                return std::string("eigenvectors dependent");
            }
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    std::size_t gap = i > j ? i - j : j - i;
                    if (gap == 0) continue;
                    if (is_zero(m(i, j)) != (gap > 1)) return at(static_cast<int>(i), static_cast<int>(j));
                }
            }
            return std::string();
        };
        where = tridiagonal(sys.E_star, sys.A);
        verify(log, tag + "E*_i A E*_j vanishes exactly when |i - j| > 1", kAxioms, where.empty(), where);
        where = tridiagonal(sys.E, sys.A_star);
        verify(log, tag + "E_i A* E_j vanishes exactly when |i - j| > 1", kAxioms, where.empty(), where);

        Vector<F> ones(n, F(1));
        verify(log, tag + "u lies in E_0 W", anchor, sys.E[0] * ones == ones);

        auto& m = sys.measured;
        m.a.assign(n, F(0));
        m.b.assign(n, F(0));
        m.c.assign(n, F(0));
        for (std::size_t i = 0; i < n; ++i) {
            m.a[i] = sys.A(i, i);
            if (i + 1 < n) m.b[i] = sys.A(i, i + 1);
            if (i > 0) m.c[i] = sys.A(i, i - 1);
        }
        auto closed = intersection_numbers_closed(s);
        IntersectionNumbers<F> want{lift(be, closed.a), lift(be, closed.b), lift(be, closed.c)};
        Matrix<F> tri(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            tri(i, i) = want.a[i];
            if (i + 1 < n) tri(i, i + 1) = want.b[i];
            if (i > 0) tri(i, i - 1) = want.c[i];
        }
        verify(log, tag + "A acts on the standard basis by the three-term recurrence with b_i, a_i, c_i", anchor,
               sys.A == tri, mismatch_locus(tri, sys.A));

        std::vector<F> phi, phi_split;
        split_from_intersection(m, p.theta_star, phi, phi_split);
        where = first_mismatch(p.phi, phi, 1);
        verify(log, tag + "phi_i recovered from b_{i-1} matches the parameter sequence", kSplit, where.empty(), where);
        where = first_mismatch(p.phi_split, phi_split, 1);
        verify(log, tag + "phi_split_i recovered from c_i matches the parameter sequence", kSplit, where.empty(),
               where);

        auto v = v_polys(m);
        sys.v0 = v_at_theta0(m);
        std::vector<F> direct;
        for (const auto& vi : v) direct.push_back(vi(p.theta[0]));
        where = first_mismatch(sys.v0, direct);
        verify(log, tag + "v_i(theta_0) = b_0..b_{i-1} / (c_1..c_i)", anchor, where.empty(), where);
        where.clear();
        for (std::size_t i = 0; i < n && where.empty(); ++i) {
            Vector<F> vi(n, F(0));
            Vector<F> pw = unit_vector<F>(n, 0);
            for (long deg = 0; deg <= v[i].high(); ++deg) {
                vi = vi + scale(v[i].coeff(deg), pw);
                pw = sys.A * pw;
            }
            if (vi != unit_vector<F>(n, i)) where = at(static_cast<int>(i));
        }
        verify(log, tag + "v_i(A) E*_0 u = E*_i u", anchor, where.empty(), where);

        where.clear();
        for (int i = 0; i <= d && where.empty(); ++i) {
            for (int j = 0; j <= d; ++j) {
                if (v[i](p.theta[j]) / sys.v0[i] != be.lift(f_value(s, i, j))) {
                    where = at(i, j);
                    break;
                }
            }
        }
        verify(log, tag + "f_i(theta_j) from the realized recurrence equals the 3phi2 value", anchor, where.empty(),
               where);

        auto mc = lift(be, m_values_closed(s));
        sys.m.clear();
        where.clear();
        F total(0);
        for (std::size_t i = 0; i < n; ++i) {
            Matrix<F> prod = sys.E[i] * sys.E_star[0];
            sys.m.push_back(prod.trace());
            total += sys.m.back();
            Matrix<F> sandwich = sys.E_star[0] * prod;
            if (sys.m.back() != mc[i] || !(sandwich == sys.E_star[0] * mc[i])) {
                if (where.empty()) where = at(static_cast<int>(i));
            }
        }
        verify(log, tag + "m_i = trace(E_i E*_0) and E*_0 E_i E*_0 = m_i E*_0 match the closed form", anchor,
               where.empty(), where);
        verify(log, tag + "sum m_i = 1", anchor, total == F(1));
    }

    auto orthogonal = [&](const std::vector<Vector<F>>& a, const std::vector<Vector<F>>& b) {
        for (const auto& x : a) {
            for (const auto& y : b) {
                if (!is_zero(w.inner(x, y))) return false;
            }
        }
        return true;
    };
    auto joined = [](std::vector<Vector<F>> a, const std::vector<Vector<F>>& b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    };
    const std::size_t n = w.dim();
    verify(log, "W = M x + (M x)^perp with dimensions D + 1 and D - 1", kSum,
           orthogonal(out[0].basis, out[1].basis) && span_dimension(joined(out[0].basis, out[1].basis)) == n &&
               out[0].basis.size() + out[1].basis.size() == n);
    verify(log, "W = M C + (M C)^perp with dimensions D and D", kSum,
           orthogonal(out[2].basis, out[3].basis) && span_dimension(joined(out[2].basis, out[3].basis)) == n &&
               out[2].basis.size() + out[3].basis.size() == n);
    return out;
}

template <class B>
void verify_h_on_standard_basis(const std::array<LeonardSystemData<typename B::Field>, 4>& systems,
                                const std::array<DualQKSeq, 4>& seqs, const Matrix<typename B::Field>& x,
                                const Matrix<typename B::Field>& x_inv, const B& be, Report* log) {
    using F = typename B::Field;
    const Scalar q = Scalar::q();
    for (int k = 0; k < 4; ++k) {
        const auto& sys = systems[k];
        const auto& s = seqs[k];
        std::string where;
        for (int i = 0; i <= s.d && where.empty(); ++i) {
            auto h = h_poly(i, s.tau, s.d).template map<F>([&](const Scalar& c) { return be.lift(c); });
            F c = be.lift(s.tau.pow(i) * q_pochhammer(q, i));
            if (h.apply(x, x_inv, sys.basis[0]) != scale(c, sys.basis[i])) where = at(i);
        }
        verify(log, s.name + ": h_i(X) E*_0 u = tau^i (q;q)_i E*_i u", system_anchor(k), where.empty(), where);
    }
}

template std::array<LeonardSystemData<Scalar>, 4> realize_four_systems(const WModule<Scalar>&, const FormalBackend&,
                                                                      Report*);
template std::array<LeonardSystemData<AlgNum>, 4> realize_four_systems(const WModule<AlgNum>&,
                                                                      const ConcreteBackend&, Report*);
template void verify_h_on_standard_basis(const std::array<LeonardSystemData<Scalar>, 4>&,
                                         const std::array<DualQKSeq, 4>&, const Matrix<Scalar>&,
                                         const Matrix<Scalar>&, const FormalBackend&, Report*);
template void verify_h_on_standard_basis(const std::array<LeonardSystemData<AlgNum>, 4>&,
                                         const std::array<DualQKSeq, 4>&, const Matrix<AlgNum>&,
                                         const Matrix<AlgNum>&, const ConcreteBackend&, Report*);

}  // namespace dpg
