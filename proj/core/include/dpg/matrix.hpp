#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dpg {

inline bool is_zero(const mpq_class& x) { return sgn(x) == 0; }
inline mpq_class conj(const mpq_class& x) { return x; }
inline std::string to_string(const mpq_class& x) { return x.get_str(); }

template <class F>
using Vector = std::vector<F>;

/// Dense matrix over an exact field F.
///
/// Column convention: the matrix of an operator L in an ordered basis (c_j)
/// has L c_j = sum_i M(i, j) c_i, so M(., j) is the image of c_j.
template <class F>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }
    static Matrix diagonal(const Vector<F>& d) {
        Matrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }
    /// Matrix whose columns are the given vectors.
    static Matrix from_columns(const std::vector<Vector<F>>& cols, std::size_t rows) {
        Matrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector<F> column(std::size_t j) const {
        Vector<F> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    bool is_zero() const {
        for (const auto& x : data_) {
            if (!dpg::is_zero(x)) return false;
        }
        return true;
    }
    bool is_diagonal() const {
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                if (i != j && !dpg::is_zero((*this)(i, j))) return false;
            }
        }
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        }
        return t;
    }
    Matrix adjoint() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = conj((*this)(i, j));
        }
        return t;
    }

    F trace() const {
        F t(0);
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
        return t;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same(o);
        for (std::size_t k = 0; k < data_.size(); ++k) {
            if (!dpg::is_zero(o.data_[k])) data_[k] += o.data_[k];
        }
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same(o);
        for (std::size_t k = 0; k < data_.size(); ++k) {
            if (!dpg::is_zero(o.data_[k])) data_[k] -= o.data_[k];
        }
        return *this;
    }
    Matrix& operator*=(const F& c) {
        for (auto& x : data_) {
            if (!dpg::is_zero(x)) x *= c;
        }
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator-(Matrix a) {
        for (auto& x : a.data_) {
            if (!dpg::is_zero(x)) x = -x;
        }
        return a;
    }
    friend Matrix operator*(Matrix a, const F& c) { return a *= c; }
    friend Matrix operator*(const F& c, Matrix a) { return a *= c; }

    /// Product that skips zero entries of the left factor.
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const F& x = a(i, k);
                if (dpg::is_zero(x)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const F& y = b(k, j);
                    if (!dpg::is_zero(y)) c(i, j) += x * y;
                }
            }
        }
        return c;
    }
    friend Vector<F> operator*(const Matrix& a, const Vector<F>& v) {
        if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
        Vector<F> out(a.rows_, F(0));
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (dpg::is_zero(v[k])) continue;
            for (std::size_t i = 0; i < a.rows_; ++i) {
                const F& x = a(i, k);
                if (!dpg::is_zero(x)) out[i] += x * v[k];
            }
        }
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    /// A - c I
    Matrix minus_scalar(const F& c) const {
        Matrix m = *this;
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) m(i, i) -= c;
        return m;
    }

    std::string str() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < rows_; ++i) {
            os << "[";
            for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << to_string((*this)(i, j));
            os << "]\n";
        }
        return os.str();
    }

private:
    void check_same(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<F> data_;
};

// ---- vectors ---------------------------------------------------------------

template <class F>
Vector<F> operator+(Vector<F> a, const Vector<F>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector sum: length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!is_zero(b[i])) a[i] += b[i];
    }
    return a;
}

template <class F>
Vector<F> operator-(Vector<F> a, const Vector<F>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector difference: length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!is_zero(b[i])) a[i] -= b[i];
    }
    return a;
}

template <class F>
Vector<F> scale(const F& c, Vector<F> a) {
    for (auto& x : a) {
        if (!is_zero(x)) x *= c;
    }
    return a;
}

template <class F>
bool is_zero_vector(const Vector<F>& a) {
    for (const auto& x : a) {
        if (!is_zero(x)) return false;
    }
    return true;
}

template <class F>
Vector<F> unit_vector(std::size_t n, std::size_t k) {
    Vector<F> e(n, F(0));
    e.at(k) = F(1);
    return e;
}

/// <a, b> = sum_i g_i a_i conj(b_i) for a diagonal Gram matrix g.
template <class F>
F gram_dot(const Vector<F>& a, const Vector<F>& b, const Vector<F>& gram) {
    F s(0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (is_zero(a[i]) || is_zero(b[i])) continue;
        s += gram[i] * a[i] * conj(b[i]);
    }
    return s;
}

// ---- elimination -----------------------------------------------------------

template <class F>
struct Echelon {
    Matrix<F> form;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form with first-nonzero pivoting.
template <class F>
Echelon<F> rref(Matrix<F> m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        if (p != r) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        }
        F inv = F(1) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) {
            if (!is_zero(m(r, j))) m(r, j) *= inv;
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            F f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) {
                if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
    return rref(m).pivots.size();
}

/// Inverse of a square matrix; throws std::domain_error "singular matrix".
template <class F>
Matrix<F> inverse(const Matrix<F>& m) {
    if (!m.square()) throw std::invalid_argument("inverse of a non-square matrix");
    std::size_t n = m.rows();
    Matrix<F> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = F(1);
    }
    auto e = rref(std::move(aug));
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw std::domain_error("singular matrix");
    Matrix<F> inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.form(i, n + j);
    }
    return inv;
}

/// Solves B X = Y for X, where B has full column rank; throws
/// std::domain_error when some column of Y is outside the column space.
template <class F>
Matrix<F> solve_columns(const Matrix<F>& b, const Matrix<F>& y) {
    if (b.rows() != y.rows()) throw std::invalid_argument("solve: shape mismatch");
    std::size_t n = b.cols();
    Matrix<F> aug(b.rows(), n + y.cols());
    for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = b(i, j);
        for (std::size_t j = 0; j < y.cols(); ++j) aug(i, n + j) = y(i, j);
    }
    auto e = rref(std::move(aug));
    std::size_t basis_rank = 0;
    while (basis_rank < e.pivots.size() && e.pivots[basis_rank] < n) ++basis_rank;
    if (basis_rank < n) throw std::domain_error("dependent basis");
    if (e.pivots.size() > n) throw std::domain_error("vector outside the span");
    Matrix<F> x(n, y.cols());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < y.cols(); ++j) x(i, j) = e.form(i, n + j);
    }
    return x;
}

/// Matrix of L restricted to the span of the given basis (columns of the
/// result are coordinates of L b_j in the basis).
template <class F>
Matrix<F> restrict_to(const Matrix<F>& l, const std::vector<Vector<F>>& basis) {
    Matrix<F> b = Matrix<F>::from_columns(basis, l.rows());
    return solve_columns(b, l * b);
}

// ---- spectral --------------------------------------------------------------

/// Primitive idempotents E_i = prod_{j != i} (A - th_j)/(th_i - th_j).
///
/// Throws "eigenvalues not distinct" or "not multiplicity-free on this space".
template <class F>
std::vector<Matrix<F>> primitive_idempotents(const Matrix<F>& a, const std::vector<F>& eigenvalues) {
    if (!a.square()) throw std::invalid_argument("primitive_idempotents: matrix not square");
    std::size_t d = eigenvalues.size();
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            if (eigenvalues[i] == eigenvalues[j]) throw std::domain_error("eigenvalues not distinct");
        }
    }
    std::vector<Matrix<F>> shifted;
    shifted.reserve(d);
    for (const auto& th : eigenvalues) shifted.push_back(a.minus_scalar(th));

    std::size_t n = a.rows();
    std::vector<Matrix<F>> out;
    out.reserve(d);
    for (std::size_t i = 0; i < d; ++i) {
        Matrix<F> e = Matrix<F>::identity(n);
        F denom(1);
        for (std::size_t j = 0; j < d; ++j) {
            if (j == i) continue;
            e = shifted[j] * e;
            denom *= eigenvalues[i] - eigenvalues[j];
        }
        if (i == 0 && !(shifted[0] * e).is_zero()) throw std::domain_error("not multiplicity-free on this space");
        out.push_back(e * (F(1) / denom));
    }
    return out;
}

/// Orthogonal projection onto span(basis) for the Hermitian form with
/// diagonal Gram g: P = B (B* G B)^{-1} B* G.
template <class F>
Matrix<F> gram_project(const std::vector<Vector<F>>& basis, const Vector<F>& gram) {
    if (basis.empty()) throw std::invalid_argument("gram_project: empty basis");
    std::size_t n = gram.size();
    for (const auto& g : gram) {
        if (is_zero(g)) throw std::domain_error("gram_project: zero Gram entry");
    }
    Matrix<F> b = Matrix<F>::from_columns(basis, n);
    Matrix<F> bstar_g = b.adjoint();
    for (std::size_t i = 0; i < bstar_g.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!is_zero(bstar_g(i, j))) bstar_g(i, j) *= gram[j];
        }
    }
    Matrix<F> small = bstar_g * b;
    Matrix<F> inv;
    try {
        inv = inverse(small);
    } catch (const std::domain_error&) {
        throw std::domain_error("gram_project: dependent basis");
    }
    return b * (inv * bstar_g);
}

// ---- subspaces -------------------------------------------------------------

/// v, Av, ..., A^{count-1} v.
template <class F>
std::vector<Vector<F>> krylov(const Matrix<F>& a, Vector<F> v, std::size_t count) {
    std::vector<Vector<F>> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        out.push_back(v);
        if (k + 1 < count) v = a * v;
    }
    return out;
}

template <class F>
std::size_t span_dimension(const std::vector<Vector<F>>& vectors) {
    if (vectors.empty()) return 0;
    return rank(Matrix<F>::from_columns(vectors, vectors.front().size()));
}

/// Dimension of the smallest subspace containing v and invariant under
/// every operator in ops.
template <class F>
std::size_t cyclic_closure_dimension(const std::vector<Matrix<F>>& ops, const Vector<F>& v) {
    std::vector<Vector<F>> basis;
    if (is_zero_vector(v)) return 0;
    basis.push_back(v);
    for (std::size_t next = 0; next < basis.size(); ++next) {
        for (const auto& op : ops) {
            Vector<F> img = op * basis[next];
            basis.push_back(img);
            if (span_dimension(basis) < basis.size()) basis.pop_back();
        }
    }
    return basis.size();
}

/// Empty when a == b, else the first differing cell as "(i,j): expected .., got ..".
template <class F>
std::string mismatch_locus(const Matrix<F>& expected, const Matrix<F>& got) {
    if (expected.rows() != got.rows() || expected.cols() != got.cols()) return "shape mismatch";
    for (std::size_t i = 0; i < got.rows(); ++i) {
        for (std::size_t j = 0; j < got.cols(); ++j) {
            if (expected(i, j) != got(i, j)) {
                return "(" + std::to_string(i) + "," + std::to_string(j) + "): expected " +
                       to_string(expected(i, j)) + ", got " + to_string(got(i, j));
            }
        }
    }
    return {};
}

template <class F>
std::string mismatch_locus(const Vector<F>& expected, const Vector<F>& got) {
    if (expected.size() != got.size()) return "length mismatch";
    for (std::size_t i = 0; i < got.size(); ++i) {
        if (expected[i] != got[i]) {
            return "[" + std::to_string(i) + "]: expected " + to_string(expected[i]) + ", got " + to_string(got[i]);
        }
    }
    return {};
}

}  // namespace dpg
