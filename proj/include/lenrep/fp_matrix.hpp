/* Dense exact linear algebra over prime fields F_p. */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lenrep {

using fp_t = std::uint32_t;

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline fp_t fp_normalize(long long v, fp_t p) {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return static_cast<fp_t>(r);
}

inline fp_t fp_add(fp_t a, fp_t b, fp_t p) {
    fp_t s = a + b;
    return s >= p ? s - p : s;
}

inline fp_t fp_sub(fp_t a, fp_t b, fp_t p) { return a >= b ? a - b : a + p - b; }

inline fp_t fp_neg(fp_t a, fp_t p) { return a == 0 ? 0 : p - a; }

inline fp_t fp_mul(fp_t a, fp_t b, fp_t p) {
    return static_cast<fp_t>(static_cast<std::uint64_t>(a) * b % p);
}

inline fp_t fp_pow(fp_t a, std::uint64_t e, fp_t p) {
    fp_t r = 1 % p;
    fp_t base = a;
    while (e > 0) {
        if (e & 1) r = fp_mul(r, base, p);
        base = fp_mul(base, base, p);
        e >>= 1;
    }
    return r;
}

inline fp_t fp_inv(fp_t a, fp_t p) {
    if (a == 0) throw std::domain_error("fp_inv: division by zero mod " + std::to_string(p));
    return fp_pow(a, p - 2, p);  // Fermat; p is prime
}

/// Dense matrix over F_p with entries stored as residues in [0, p).
class FieldMatrix {
public:
    FieldMatrix() : rows_(0), cols_(0), p_(2) {}

    FieldMatrix(std::size_t rows, std::size_t cols, fp_t p)
        : rows_(rows), cols_(cols), p_(p), e_(rows * cols, 0) {
        check_prime(p);
    }

    static FieldMatrix identity(std::size_t n, fp_t p) {
        FieldMatrix m(n, n, p);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1 % p;
        return m;
    }

    /// Build from row-major signed data, reducing entries mod p.
    static FieldMatrix from_rows(const std::vector<std::vector<long long>>& rows, fp_t p) {
        std::size_t r = rows.size();
        std::size_t c = r == 0 ? 0 : rows[0].size();
        FieldMatrix m(r, c, p);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw std::invalid_argument("FieldMatrix::from_rows: ragged rows");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = fp_normalize(rows[i][j], p);
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    fp_t characteristic() const { return p_; }

    fp_t operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    fp_t& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

    void set(std::size_t i, std::size_t j, long long v) { e_[i * cols_ + j] = fp_normalize(v, p_); }

    bool operator==(const FieldMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && e_ == o.e_;
    }
    bool operator!=(const FieldMatrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (fp_t v : e_)
            if (v != 0) return false;
        return true;
    }

    bool is_identity() const {
        if (rows_ != cols_) return false;
        return *this == identity(rows_, p_);
    }

    FieldMatrix transpose() const {
        FieldMatrix t(cols_, rows_, p_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    std::vector<fp_t> column(std::size_t j) const {
        std::vector<fp_t> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    void set_column(std::size_t j, const std::vector<fp_t>& c) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
    }

    FieldMatrix columns(const std::vector<std::size_t>& idx) const {
        FieldMatrix m(rows_, idx.size(), p_);
        for (std::size_t k = 0; k < idx.size(); ++k)
            for (std::size_t i = 0; i < rows_; ++i) m(i, k) = (*this)(i, idx[k]);
        return m;
    }

private:
    static void check_prime(fp_t p) {
        if (!is_prime(p)) throw std::invalid_argument("FieldMatrix: characteristic " + std::to_string(p) + " is not prime");
    }

    std::size_t rows_, cols_;
    fp_t p_;
    std::vector<fp_t> e_;
};

inline void require_same_field(const FieldMatrix& a, const FieldMatrix& b, const char* where) {
    if (a.characteristic() != b.characteristic())
        throw std::invalid_argument(std::string(where) + ": characteristic mismatch");
}

inline FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b) {
    require_same_field(a, b, "matrix add");
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix add: shape mismatch");
    FieldMatrix r(a.rows(), a.cols(), a.characteristic());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = fp_add(a(i, j), b(i, j), a.characteristic());
    return r;
}

inline FieldMatrix operator-(const FieldMatrix& a, const FieldMatrix& b) {
    require_same_field(a, b, "matrix sub");
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix sub: shape mismatch");
    FieldMatrix r(a.rows(), a.cols(), a.characteristic());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = fp_sub(a(i, j), b(i, j), a.characteristic());
    return r;
}

inline FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
    require_same_field(a, b, "matrix mul");
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix mul: shape mismatch");
    const fp_t p = a.characteristic();
    FieldMatrix r(a.rows(), b.cols(), p);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            fp_t aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                r(i, j) = fp_add(r(i, j), fp_mul(aik, b(k, j), p), p);
        }
    return r;
}

inline FieldMatrix scale(const FieldMatrix& a, fp_t c) {
    FieldMatrix r = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = fp_mul(a(i, j), c, a.characteristic());
    return r;
}

inline FieldMatrix negate(const FieldMatrix& a) {
    FieldMatrix r = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = fp_neg(a(i, j), a.characteristic());
    return r;
}

inline FieldMatrix hstack(const FieldMatrix& a, const FieldMatrix& b) {
    require_same_field(a, b, "hstack");
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
    FieldMatrix r(a.rows(), a.cols() + b.cols(), a.characteristic());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
    }
    return r;
}

inline FieldMatrix vstack(const FieldMatrix& a, const FieldMatrix& b) {
    require_same_field(a, b, "vstack");
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
    FieldMatrix r(a.rows() + b.rows(), a.cols(), a.characteristic());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i) r(i, j) = a(i, j);
        for (std::size_t i = 0; i < b.rows(); ++i) r(a.rows() + i, j) = b(i, j);
    }
    return r;
}

inline FieldMatrix block_diag(const std::vector<FieldMatrix>& blocks, fp_t p) {
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) { r += b.rows(); c += b.cols(); }
    FieldMatrix m(r, c, p);
    std::size_t ro = 0, co = 0;
    for (const auto& b : blocks) {
        if (b.characteristic() != p) throw std::invalid_argument("block_diag: characteristic mismatch");
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) m(ro + i, co + j) = b(i, j);
        ro += b.rows();
        co += b.cols();
    }
    return m;
}

struct RrefResult {
    std::size_t rank;
    FieldMatrix reduced;
    std::vector<std::size_t> pivots;  // pivot column indices, increasing
};

/// Reduced row echelon form; row space is preserved.
inline RrefResult rref(const FieldMatrix& m) {
    const fp_t p = m.characteristic();
    FieldMatrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t sel = r;
        while (sel < a.rows() && a(sel, c) == 0) ++sel;
        if (sel == a.rows()) continue;
        if (sel != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(sel, j), a(r, j));
        fp_t inv = fp_inv(a(r, c), p);
        for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) = fp_mul(a(r, j), inv, p);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == 0) continue;
            fp_t f = a(i, c);
            for (std::size_t j = 0; j < a.cols(); ++j)
                a(i, j) = fp_sub(a(i, j), fp_mul(f, a(r, j), p), p);
        }
        pivots.push_back(c);
        ++r;
    }
    return RrefResult{r, std::move(a), std::move(pivots)};
}

inline std::size_t rank(const FieldMatrix& m) { return rref(m).rank; }

/// Columns of the result form a basis of { v : m v = 0 }.
inline FieldMatrix kernel_basis(const FieldMatrix& m) {
    auto rr = rref(m);
    const fp_t p = m.characteristic();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : rr.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    FieldMatrix k(m.cols(), free_cols.size(), p);
    for (std::size_t t = 0; t < free_cols.size(); ++t) {
        std::size_t fc = free_cols[t];
        k(fc, t) = 1 % p;
        for (std::size_t i = 0; i < rr.pivots.size(); ++i)
            k(rr.pivots[i], t) = fp_neg(rr.reduced(i, fc), p);
    }
    return k;
}

/// Any X with a X = b, if the system is consistent.
inline std::optional<FieldMatrix> solve(const FieldMatrix& a, const FieldMatrix& b) {
    require_same_field(a, b, "solve");
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
    auto rr = rref(hstack(a, b));
    // a pivot in the b-part means inconsistency
    for (auto c : rr.pivots)
        if (c >= a.cols()) return std::nullopt;
    FieldMatrix x(a.cols(), b.cols(), a.characteristic());
    for (std::size_t i = 0; i < rr.pivots.size(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x(rr.pivots[i], j) = rr.reduced(i, a.cols() + j);
    return x;
}

inline FieldMatrix inverse(const FieldMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse: not square");
    auto x = solve(a, FieldMatrix::identity(a.rows(), a.characteristic()));
    if (!x || rank(a) != a.rows()) throw std::domain_error("inverse: singular matrix");
    return *x;
}

/// Subset of the matrix's own columns spanning its column space (deterministic).
inline FieldMatrix column_space(const FieldMatrix& m) {
    auto rr = rref(m);
    return m.columns(rr.pivots);
}

inline bool span_contains(const FieldMatrix& span, const FieldMatrix& vecs) {
    if (vecs.cols() == 0) return true;
    if (span.cols() == 0) return vecs.is_zero();
    return solve(span, vecs).has_value();
}

inline bool span_equal(const FieldMatrix& a, const FieldMatrix& b) {
    return span_contains(a, b) && span_contains(b, a);
}

inline FieldMatrix span_sum(const FieldMatrix& a, const FieldMatrix& b) {
    return column_space(hstack(a, b));
}

inline FieldMatrix span_intersection(const FieldMatrix& a, const FieldMatrix& b) {
    // v = a x = b y  <=>  (x, -y) in ker [a | b]
    if (a.cols() == 0 || b.cols() == 0) return FieldMatrix(a.rows(), 0, a.characteristic());
    auto k = kernel_basis(hstack(a, b));
    FieldMatrix xs(a.cols(), k.cols(), a.characteristic());
    for (std::size_t i = 0; i < a.cols(); ++i)
        for (std::size_t j = 0; j < k.cols(); ++j) xs(i, j) = k(i, j);
    return column_space(a * xs);
}

/// Extend independent columns to an invertible square matrix using unit vectors.
inline FieldMatrix extend_to_invertible(const FieldMatrix& indep) {
    const std::size_t n = indep.rows();
    const fp_t p = indep.characteristic();
    if (rank(indep) != indep.cols()) throw std::invalid_argument("extend_to_invertible: columns not independent");
    FieldMatrix cur = indep;
    for (std::size_t j = 0; j < n && cur.cols() < n; ++j) {
        FieldMatrix e(n, 1, p);
        e(j, 0) = 1 % p;
        FieldMatrix cand = hstack(cur, e);
        if (rank(cand) == cand.cols()) cur = cand;
    }
    if (cur.cols() != n) throw std::logic_error("extend_to_invertible: failed to complete basis");
    return cur;
}

}  // namespace lenrep
