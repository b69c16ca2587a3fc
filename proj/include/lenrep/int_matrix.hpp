/* Exact integer linear algebra: Smith normal form, integer kernels, lattice tests.
 * Entries are arbitrary-precision (GMP); intermediate blow-up is routine in SNF. */

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace lenrep {

class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, 0) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
        std::size_t r = rows.size();
        std::size_t c = r == 0 ? 0 : rows[0].size();
        IntMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw std::invalid_argument("IntMatrix::from_rows: ragged rows");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static IntMatrix from_columns(const std::vector<std::vector<mpz_class>>& cols, std::size_t rows) {
        IntMatrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw std::invalid_argument("IntMatrix::from_columns: bad vector length");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const mpz_class& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    mpz_class& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    bool is_zero() const {
        for (const auto& v : e_)
            if (v != 0) return false;
        return true;
    }

    std::vector<mpz_class> column(std::size_t j) const {
        std::vector<mpz_class> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

private:
    std::size_t rows_, cols_;
    std::vector<mpz_class> e_;
};

inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("IntMatrix mul: shape mismatch");
    IntMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += a(i, k) * b(k, j);
        }
    return r;
}

inline std::vector<mpz_class> operator*(const IntMatrix& a, const std::vector<mpz_class>& v) {
    if (a.cols() != v.size()) throw std::invalid_argument("IntMatrix·vector: shape mismatch");
    std::vector<mpz_class> r(a.rows(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r[i] += a(i, j) * v[j];
    return r;
}

/// Exact determinant by fraction-free (Bareiss) elimination.
inline mpz_class determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t s = k + 1;
            while (s < n && a(s, k) == 0) ++s;
            if (s == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(s, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                a(i, j) = num / prev;  // exact by Bareiss
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

struct SmithResult {
    IntMatrix u, d, v;  // u * m * v == d, u and v unimodular, d diagonal with d_i | d_{i+1}
};

inline SmithResult smith_normal_form(const IntMatrix& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    SmithResult s{IntMatrix::identity(nr), m, IntMatrix::identity(nc)};
    IntMatrix& d = s.d;
    IntMatrix& u = s.u;
    IntMatrix& v = s.v;

    auto swap_rows = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < nc; ++j) std::swap(d(a, j), d(b, j));
        for (std::size_t j = 0; j < nr; ++j) std::swap(u(a, j), u(b, j));
    };
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < nr; ++i) std::swap(d(i, a), d(i, b));
        for (std::size_t i = 0; i < nc; ++i) std::swap(v(i, a), v(i, b));
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const mpz_class& f) {
        for (std::size_t j = 0; j < nc; ++j) d(dst, j) += f * d(src, j);
        for (std::size_t j = 0; j < nr; ++j) u(dst, j) += f * u(src, j);
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const mpz_class& f) {
        for (std::size_t i = 0; i < nr; ++i) d(i, dst) += f * d(i, src);
        for (std::size_t i = 0; i < nc; ++i) v(i, dst) += f * v(i, src);
    };
    auto negate_row = [&](std::size_t r) {
        for (std::size_t j = 0; j < nc; ++j) d(r, j) = -d(r, j);
        for (std::size_t j = 0; j < nr; ++j) u(r, j) = -u(r, j);
    };

    const std::size_t nmin = nr < nc ? nr : nc;
    for (std::size_t t = 0; t < nmin; ++t) {
        for (;;) {
            // locate a minimal nonzero |entry| in the trailing block
            std::size_t pi = t, pj = t;
            mpz_class best = 0;
            for (std::size_t i = t; i < nr; ++i)
                for (std::size_t j = t; j < nc; ++j) {
                    if (d(i, j) == 0) continue;
                    mpz_class a = abs(d(i, j));
                    if (best == 0 || a < best) { best = a; pi = i; pj = j; }
                }
            if (best == 0) break;  // trailing block is zero
            swap_rows(t, pi);
            swap_cols(t, pj);

            bool reduced = true;
            for (std::size_t i = t + 1; i < nr; ++i) {
                if (d(i, t) == 0) continue;
                mpz_class q = d(i, t) / d(t, t);  // truncated; remainder shrinks
                if (q != 0) add_row(i, t, -q);
                if (d(i, t) != 0) reduced = false;
            }
            for (std::size_t j = t + 1; j < nc; ++j) {
                if (d(t, j) == 0) continue;
                mpz_class q = d(t, j) / d(t, t);
                if (q != 0) add_col(j, t, -q);
                if (d(t, j) != 0) reduced = false;
            }
            if (!reduced) continue;

            // pivot is lone; enforce divisibility into the remaining block
            bool divides_all = true;
            for (std::size_t i = t + 1; i < nr && divides_all; ++i)
                for (std::size_t j = t + 1; j < nc && divides_all; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        add_row(t, i, 1);
                        divides_all = false;
                    }
            if (divides_all) break;
        }
        if (d(t, t) < 0) negate_row(t);
    }
    return s;
}

/// Columns form a lattice basis of { x : m x = 0 } (saturated, from SNF).
inline IntMatrix integer_kernel(const IntMatrix& m) {
    auto s = smith_normal_form(m);
    const std::size_t nmin = m.rows() < m.cols() ? m.rows() : m.cols();
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (j >= nmin || s.d(j, j) == 0) free_cols.push_back(j);
    IntMatrix k(m.cols(), free_cols.size());
    for (std::size_t t = 0; t < free_cols.size(); ++t)
        for (std::size_t i = 0; i < m.cols(); ++i) k(i, t) = s.v(i, free_cols[t]);
    return k;
}

/// Integer solution x of a x = b, if one exists (via SNF).
inline std::optional<std::vector<mpz_class>> solve_integer(const IntMatrix& a,
                                                           const std::vector<mpz_class>& b) {
    if (a.rows() != b.size()) throw std::invalid_argument("solve_integer: shape mismatch");
    auto s = smith_normal_form(a);
    std::vector<mpz_class> ub = s.u * b;
    const std::size_t nmin = a.rows() < a.cols() ? a.rows() : a.cols();
    std::vector<mpz_class> y(a.cols(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (i < nmin && s.d(i, i) != 0) {
            if (ub[i] % s.d(i, i) != 0) return std::nullopt;
            y[i] = ub[i] / s.d(i, i);
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    return s.v * y;
}

/// Does v lie in the lattice generated by the columns of gens?
inline bool lattice_contains(const IntMatrix& gens, const std::vector<mpz_class>& v) {
    if (gens.cols() == 0) {
        for (const auto& x : v)
            if (x != 0) return false;
        return true;
    }
    return solve_integer(gens, v).has_value();
}

/// Do two generating sets (columns) span the same sublattice of Z^n?
inline bool lattice_equal(const IntMatrix& gens_a, const IntMatrix& gens_b) {
    if (gens_a.rows() != gens_b.rows())
        throw std::invalid_argument("lattice_equal: ambient rank mismatch");
    for (std::size_t j = 0; j < gens_b.cols(); ++j)
        if (!lattice_contains(gens_a, gens_b.column(j))) return false;
    for (std::size_t j = 0; j < gens_a.cols(); ++j)
        if (!lattice_contains(gens_b, gens_a.column(j))) return false;
    return true;
}

}  // namespace lenrep
