#include "dpg/w_module.hpp"

namespace dpg {

namespace {

const char* kCells = "the module W spanned by the cells";
const char* kAction = "actions of A, A* and A~* on the cells";
const char* kIdem = "primitive idempotents on W";
const char* kPi = "orthogonal projection onto M x";
const char* kPiT = "orthogonal projection onto M C";
const char* kVec = "distinguished vectors w and w~";
const char* kIrr = "W is an irreducible T-module";

template <class F>
std::vector<Matrix<F>> idempotents_checked(Report* log, const std::string& name, const Matrix<F>& a,
                                           const std::vector<F>& theta) {
    try {
        auto e = primitive_idempotents(a, theta);
        verify(log, name, kIdem, true);
        return e;
    } catch (const std::domain_error& ex) {
        verify(log, name, kIdem, false, ex.what());
    }
    return {};
}

template <class F>
Matrix<F> indicator(std::size_t n, std::initializer_list<int> cells) {
    Matrix<F> m(n, n);
    for (int k : cells) {
        if (k >= 0 && k < static_cast<int>(n)) m(k, k) = F(1);
    }
    return m;
}

template <class F>
void check_projection(Report* log, const char* anchor, const std::string& tag, const Matrix<F>& p,
                      const Vector<F>& gram, const std::vector<Vector<F>>& fixed) {
    const std::size_t n = gram.size();
    verify(log, tag + " is idempotent", anchor, p * p == p);
    bool selfadj = true;
    for (std::size_t i = 0; i < n && selfadj; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (gram[i] * p(i, j) != conj(p(j, i)) * gram[j]) {
                selfadj = false;
                break;
            }
        }
    }
    verify(log, tag + " is self-adjoint for the Gram form", anchor, selfadj);
    Matrix<F> comp = Matrix<F>::identity(n) - p;
    bool orth = true;
    for (std::size_t a = 0; a < n && orth; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (!is_zero(gram_dot(p.column(a), comp.column(b), gram))) {
                orth = false;
                break;
            }
        }
    }
    verify(log, tag + " range is orthogonal to its kernel", anchor, orth);
    bool fixes = true;
    for (const auto& v : fixed) fixes = fixes && (p * v == v);
    verify(log, tag + " fixes its target subspace", anchor, fixes);
}

template <class B>
void complete(WModule<typename B::Field>& m, const WClosedForms& cf, const B& be, Report* log) {
    using F = typename B::Field;
    const int D = m.D;
    const std::size_t n = m.dim();
    const auto& pf = cf.profile;
    auto L = [&](const Scalar& s) { return be.lift(s); };

    Vector<F> counts = lift(be, cf.counts);
    verify(log, "Gram entries are the cell sizes", kCells, m.gram == counts, mismatch_locus(counts, m.gram));
    Matrix<F> want = lift(be, cf.A);
    verify(log, "A matches the coefficient table", kAction, m.A == want, mismatch_locus(want, m.A));
    want = lift(be, cf.A_star);
    verify(log, "A* is diagonal with theta*_i, theta*_{i+1}", kAction, m.A_star == want, mismatch_locus(want, m.A_star));
    want = lift(be, cf.A_tilde_star);
    verify(log, "A~* is diagonal with theta~*_i", kAction, m.A_tilde_star == want,
           mismatch_locus(want, m.A_tilde_star));

    // idempotents of A
    std::vector<F> theta, ts, tts;
    for (const auto& t : pf.theta) theta.push_back(L(t));
    for (const auto& t : pf.theta_star) ts.push_back(L(t));
    for (const auto& t : pf.theta_star_clique) tts.push_back(L(t));
    m.E = idempotents_checked(log, "E_i are the primitive idempotents of A", m.A, theta);
    {
        Matrix<F> sum(n, n), recon(n, n);
        bool orth = true;
        bool ranks = true;
        std::string where;
        for (int i = 0; i <= D; ++i) {
            sum += m.E[i];
            recon += m.E[i] * theta[i];
            // each E_j is a polynomial in A, so E_j E_i = E_j(theta_i) E_i once A E_i = theta_i E_i
            if (!(m.A * m.E[i] == m.E[i] * theta[i])) orth = false;
            F want_rank((i == 0 || i == D) ? 1 : 2);
            if (!(m.E[i].trace() == want_rank)) {
                ranks = false;
                where = "E_" + std::to_string(i);
            }
        }
        verify(log, "sum E_i = I", kIdem, sum == Matrix<F>::identity(n));
        verify(log, "E_i E_j = delta_ij E_i", kIdem, orth);
        verify(log, "A = sum theta_i E_i", kIdem, recon == m.A);
        verify(log, "rank E_0 = rank E_D = 1, other ranks 2", kIdem, ranks, where);
    }

    // dual idempotents
    m.E_star.clear();
    m.E_tilde_star.clear();
    for (int i = 0; i <= D; ++i) m.E_star.push_back(indicator<F>(n, {2 * i, 2 * i - 1}));
    for (int i = 0; i < D; ++i) m.E_tilde_star.push_back(indicator<F>(n, {2 * i, 2 * i + 1}));
    auto es = idempotents_checked(log, "E*_i are the primitive idempotents of A*", m.A_star, ts);
    verify(log, "E*_i project onto C_i^- and C_{i-1}^+", kIdem, es == m.E_star);
    auto ets = idempotents_checked(log, "E~*_i are the primitive idempotents of A~*", m.A_tilde_star, tts);
    verify(log, "E~*_i project onto C_i^- and C_i^+", kIdem, ets == m.E_tilde_star);

    m.x_hat = unit_vector<F>(n, 0);
    m.C_hat = m.x_hat;
    m.C_hat[1] = F(1);
    m.X_hat.assign(n, F(1));

    auto kx = krylov(m.A, m.x_hat, D + 2);
    auto kc = krylov(m.A, m.C_hat, D + 1);
    verify(log, "dim M x = D + 1", kCells, span_dimension(kx) == static_cast<std::size_t>(D + 1));
    verify(log, "dim M C = D", kCells, span_dimension(kc) == static_cast<std::size_t>(D));
    verify(log, "E_D C = 0", kIdem, is_zero_vector(m.E[D] * m.C_hat));
    kx.pop_back();
    kc.pop_back();

    std::vector<Vector<F>> aix, ci;
    for (int i = 0; i <= D; ++i) aix.push_back(m.E_star[i] * m.X_hat);
    for (int i = 0; i < D; ++i) ci.push_back(m.E_tilde_star[i] * m.X_hat);

    m.pi = gram_project(kx, m.gram);
    want = lift(be, cf.pi);
    verify(log, "pi by Gram projection equals its closed form", kPi, m.pi == want, mismatch_locus(want, m.pi));
    check_projection(log, kPi, "pi", m.pi, m.gram, aix);
    m.pi_tilde = gram_project(kc, m.gram);
    want = lift(be, cf.pi_tilde);
    verify(log, "pi~ by Gram projection equals its closed form", kPiT, m.pi_tilde == want,
           mismatch_locus(want, m.pi_tilde));
    check_projection(log, kPiT, "pi~", m.pi_tilde, m.gram, ci);

    // w and w~
    const F qe = L(Scalar::q_pow(m.e));
    const F nx = L(cf.vertex_count);
    Vector<F> e1x = m.E[1] * m.x_hat;
    Vector<F> e1c = m.E[1] * m.C_hat;
    verify(log, "<E_1 x, E_1 x> = theta*_0 / |X|", kVec, m.inner(e1x, e1x) == ts[0] / nx);
    verify(log, "<E_1 x, E_1 C> = (theta*_0 + q^e theta*_1) / |X|", kVec,
           m.inner(e1x, e1c) == (ts[0] + qe * ts[1]) / nx);

    m.c = L(cf.c);
    m.c_tilde = L(cf.c_tilde);
    F ratio = (ts[0] + qe * ts[1]) / ts[0];
    m.w = scale(m.c, e1c - scale(ratio, e1x));
    Vector<F> wv = lift(be, cf.w);
    verify(log, "w = c (E_1 C - ratio E_1 x) has the closed form", kVec, m.w == wv, mismatch_locus(wv, m.w));
    verify(log, "w lies in E_1 W", kVec, m.E[1] * m.w == m.w);
    m.w_tilde = scale(m.c_tilde, e1x - scale(F(1) / (F(1) + qe), e1c));
    wv = lift(be, cf.w_tilde);
    verify(log, "w~ = c~ (E_1 x - E_1 C / (1 + q^e)) has the closed form", kVec, m.w_tilde == wv,
           mismatch_locus(wv, m.w_tilde));
    verify(log, "w~ lies in E_1 W", kVec, m.E[1] * m.w_tilde == m.w_tilde);

    m.u_perp.clear();
    m.u_tilde_perp.clear();
    for (int i = 0; i + 2 <= D; ++i) {
        m.u_perp.push_back(m.E_star[i + 1] * m.w);
        Vector<F> u = lift(be, cf.u_perp[i]);
        verify(log, "u_i^perp = E*_{i+1} w", kVec, m.u_perp.back() == u, "i=" + std::to_string(i));
    }
    for (int i = 0; i < D; ++i) {
        m.u_tilde_perp.push_back(m.E_tilde_star[i] * m.w_tilde);
        Vector<F> u = lift(be, cf.u_tilde_perp[i]);
        verify(log, "u~_i^perp = E~*_i w~", kVec, m.u_tilde_perp.back() == u, "i=" + std::to_string(i));
    }
    verify(log, "E*_0 w = E*_D w = 0", kVec,
           is_zero_vector(m.E_star[0] * m.w) && is_zero_vector(m.E_star[D] * m.w));

    std::vector<Matrix<F>> gens{m.A, m.A_star, m.A_tilde_star};
    verify(log, "x generates W under A, A*, A~*", kIrr, cyclic_closure_dimension(gens, m.x_hat) == n);
}

}  // namespace

std::string cell_label(std::size_t k) { return "C" + std::to_string(k / 2) + (k % 2 ? "+" : "-"); }

WModule<Scalar> build_w_module_formal(const Rational& e, int D, Report* log) {
    WClosedForms cf = closed_forms(e, D);
    WModule<Scalar> m;
    m.e = e;
    m.D = D;
    m.gram = cf.counts;
    m.A = cell_adjacency(cf.profile);
    const std::size_t n = m.dim();
    const auto& ts = cf.profile.theta_star;
    const Scalar qe = Scalar::q_pow(e);
    m.A_star = Matrix<Scalar>(n, n);
    m.A_tilde_star = Matrix<Scalar>(n, n);
    for (int i = 0; i < D; ++i) {
        m.A_star(2 * i, 2 * i) = ts[i];
        m.A_star(2 * i + 1, 2 * i + 1) = ts[i + 1];
        // average of A*(y) over the clique: one y at distance i, q^e at distance i + 1
        Scalar avg = (ts[i] + qe * ts[i + 1]) / (Scalar(1) + qe);
        m.A_tilde_star(2 * i, 2 * i) = avg;
        m.A_tilde_star(2 * i + 1, 2 * i + 1) = avg;
    }
    complete(m, cf, FormalBackend{}, log);
    return m;
}

WModule<AlgNum> build_w_module_concrete(const DPGraph& g, const CliquePartition& part,
                                        const DRGProfile<Rational>& profile, Report* log) {
    const int D = g.D();
    const long q0 = g.space.q0;
    const std::size_t n = 2 * static_cast<std::size_t>(D);
    const std::size_t nv = g.size();
    WClosedForms cf = closed_forms(g.space.params.e(), D);
    WModule<AlgNum> m;
    m.e = g.space.params.e();
    m.D = D;
    m.q0 = q0;
    for (auto k : part.counts) m.gram.emplace_back(Rational(static_cast<long>(k)));
    m.A = Matrix<AlgNum>(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (sgn(part.neighbors(a, b)) != 0) m.A(a, b) = AlgNum(part.neighbors(a, b));
        }
    }

    // A* = |X| diag(E_1 x), A~* = average over the clique of |X| diag(E_1 y)
    DualColumn dx = dual_column(g, profile.theta, part.x);
    std::vector<Rational> tilde(nv, 0);
    for (auto y : part.clique) {
        DualColumn dy = dual_column(g, profile.theta, y);
        for (std::size_t z = 0; z < nv; ++z) tilde[z] += dy.at(z);
    }
    const Rational csize(static_cast<long>(part.clique.size()));
    std::vector<Rational> star(n), star_tilde(n);
    std::vector<bool> seen(n, false);
    for (std::size_t z = 0; z < nv; ++z) {
        int k = part.cell[z];
        Rational s = dx.at(z);
        Rational t = tilde[z] / csize;
        if (!seen[k]) {
            star[k] = s;
            star_tilde[k] = t;
            seen[k] = true;
        } else if (star[k] != s || star_tilde[k] != t) {
            verify(log, "|X| E_1 x and the clique average are constant on cells", kAction, false,
                   "vertex " + std::to_string(z));
        }
    }
    verify(log, "|X| E_1 x and the clique average are constant on cells", kAction, true);
    m.A_star = Matrix<AlgNum>(n, n);
    m.A_tilde_star = Matrix<AlgNum>(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        m.A_star(k, k) = AlgNum(star[k]);
        m.A_tilde_star(k, k) = AlgNum(star_tilde[k]);
    }
    complete(m, cf, ConcreteBackend{q0}, log);
    return m;
}

}  // namespace dpg
