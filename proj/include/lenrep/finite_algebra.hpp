/* Finite-dimensional associative F_p-algebras given by structure constants:
 * Jacobson radicals in small characteristic, minimal polynomials, idempotents.
 *
 * The radical uses the characteristic-p chain
 *     T_0 = A,   T_{i+1} = { x in T_i : c_{p^i}(xy) = 0 for all y in T_i },
 * where c_j is the j-th characteristic-polynomial coefficient of a faithful
 * matrix action.  On T_i the map x -> c_{p^i}(xy) is F_p-linear, so each step
 * is a kernel computation; the chain ends at the radical once p^i exceeds the
 * representation dimension.  The plain trace form (i = 0 alone) is not enough
 * when p divides dimensions, which is routine here.
 */

#pragma once

#include <random>
#include <tuple>

#include "fp_matrix.hpp"

namespace lenrep {

struct NonSplitError : std::runtime_error {
    explicit NonSplitError(const std::string& what) : std::runtime_error(what) {}
};

struct FiniteAlgebra {
    fp_t p = 2;
    std::size_t dim = 0;
    std::vector<FieldMatrix> left_mult;  // regular representation, one per basis element
    std::vector<fp_t> unit;

    static FiniteAlgebra from_structure_constants(
        const std::vector<std::vector<std::vector<long long>>>& table,
        const std::vector<long long>& unit_coords, fp_t p) {
        FiniteAlgebra a;
        a.p = p;
        a.dim = table.size();
        for (std::size_t i = 0; i < a.dim; ++i) {
            FieldMatrix l(a.dim, a.dim, p);
            for (std::size_t j = 0; j < a.dim; ++j) {
                if (table[i][j].size() != a.dim)
                    throw std::invalid_argument("FiniteAlgebra: ragged structure constants");
                for (std::size_t k = 0; k < a.dim; ++k) l(k, j) = fp_normalize(table[i][j][k], p);
            }
            a.left_mult.push_back(std::move(l));
        }
        a.unit.resize(a.dim);
        for (std::size_t i = 0; i < a.dim; ++i) a.unit[i] = fp_normalize(unit_coords[i], p);
        return a;
    }

    std::vector<fp_t> zero() const { return std::vector<fp_t>(dim, 0); }

    std::vector<fp_t> multiply(const std::vector<fp_t>& u, const std::vector<fp_t>& v) const {
        std::vector<fp_t> out(dim, 0);
        for (std::size_t i = 0; i < dim; ++i) {
            if (u[i] == 0) continue;
            const FieldMatrix& l = left_mult[i];
            for (std::size_t k = 0; k < dim; ++k)
                for (std::size_t j = 0; j < dim; ++j)
                    if (v[j] != 0) out[k] = fp_add(out[k], fp_mul(u[i], fp_mul(l(k, j), v[j], p), p), p);
        }
        return out;
    }

    FieldMatrix left_mult_of(const std::vector<fp_t>& u) const {
        FieldMatrix l(dim, dim, p);
        for (std::size_t i = 0; i < dim; ++i) {
            if (u[i] == 0) continue;
            for (std::size_t r = 0; r < dim; ++r)
                for (std::size_t c = 0; c < dim; ++c)
                    l(r, c) = fp_add(l(r, c), fp_mul(u[i], left_mult[i](r, c), p), p);
        }
        return l;
    }

    bool is_associative() const {
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) {
                std::vector<fp_t> bi = basis_vec(i), bj = basis_vec(j);
                std::vector<fp_t> ij = multiply(bi, bj);
                for (std::size_t k = 0; k < dim; ++k) {
                    std::vector<fp_t> bk = basis_vec(k);
                    if (multiply(ij, bk) != multiply(bi, multiply(bj, bk))) return false;
                }
            }
        return true;
    }

    bool is_commutative() const {
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = i + 1; j < dim; ++j)
                if (multiply(basis_vec(i), basis_vec(j)) != multiply(basis_vec(j), basis_vec(i)))
                    return false;
        return true;
    }

    bool unit_acts_as_identity() const {
        for (std::size_t i = 0; i < dim; ++i) {
            auto b = basis_vec(i);
            if (multiply(unit, b) != b || multiply(b, unit) != b) return false;
        }
        return true;
    }

    std::vector<fp_t> basis_vec(std::size_t i) const {
        std::vector<fp_t> v(dim, 0);
        v[i] = 1 % p;
        return v;
    }
};

namespace detail {

/// Reduce to upper Hessenberg by similarity, then expand the characteristic
/// polynomial; returns monic coefficients c[0..n] of det(tI - m), ascending.
inline std::vector<fp_t> char_poly(FieldMatrix m) {
    const std::size_t n = m.rows();
    const fp_t p = m.characteristic();
    if (m.cols() != n) throw std::invalid_argument("char_poly: not square");

    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t piv = j + 1;
        while (piv < n && m(piv, j) == 0) ++piv;
        if (piv == n) continue;
        if (piv != j + 1) {
            for (std::size_t c = 0; c < n; ++c) std::swap(m(piv, c), m(j + 1, c));
            for (std::size_t r = 0; r < n; ++r) std::swap(m(r, piv), m(r, j + 1));
        }
        fp_t inv = fp_inv(m(j + 1, j), p);
        for (std::size_t i = j + 2; i < n; ++i) {
            if (m(i, j) == 0) continue;
            fp_t f = fp_mul(m(i, j), inv, p);
            for (std::size_t c = 0; c < n; ++c) m(i, c) = fp_sub(m(i, c), fp_mul(f, m(j + 1, c), p), p);
            for (std::size_t r = 0; r < n; ++r) m(r, j + 1) = fp_add(m(r, j + 1), fp_mul(f, m(r, i), p), p);
        }
    }

    // p_k = (t - h_kk) p_{k-1} - sum_i h_ik (prod of subdiagonals) p_{i-1}
    std::vector<std::vector<fp_t>> polys;
    polys.push_back({1 % p});
    for (std::size_t k = 1; k <= n; ++k) {
        const auto& prev = polys[k - 1];
        std::vector<fp_t> cur(k + 1, 0);
        for (std::size_t d = 0; d < prev.size(); ++d) {
            cur[d + 1] = fp_add(cur[d + 1], prev[d], p);
            cur[d] = fp_sub(cur[d], fp_mul(m(k - 1, k - 1), prev[d], p), p);
        }
        fp_t prod = 1 % p;
        for (std::size_t i = k - 1; i >= 1; --i) {
            prod = fp_mul(prod, m(i, i - 1), p);
            if (prod == 0) break;
            fp_t coef = fp_mul(m(i - 1, k - 1), prod, p);
            if (coef == 0) continue;
            const auto& pi = polys[i - 1];
            for (std::size_t d = 0; d < pi.size(); ++d)
                cur[d] = fp_sub(cur[d], fp_mul(coef, pi[d], p), p);
        }
        polys.push_back(std::move(cur));
    }
    return polys[n];
}

// dense ascending-coefficient polynomials over F_p
inline void poly_trim(std::vector<fp_t>& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline std::vector<fp_t> poly_mul(const std::vector<fp_t>& f, const std::vector<fp_t>& g, fp_t p) {
    if (f.empty() || g.empty()) return {};
    std::vector<fp_t> h(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            h[i + j] = fp_add(h[i + j], fp_mul(f[i], g[j], p), p);
    return h;
}

inline std::pair<std::vector<fp_t>, std::vector<fp_t>> poly_divmod(std::vector<fp_t> f,
                                                                   const std::vector<fp_t>& g, fp_t p) {
    poly_trim(f);
    if (g.empty()) throw std::domain_error("poly_divmod: division by zero");
    std::vector<fp_t> q(f.size() > g.size() ? f.size() - g.size() + 1 : 1, 0);
    fp_t lead_inv = fp_inv(g.back(), p);
    while (f.size() >= g.size() && !f.empty()) {
        fp_t c = fp_mul(f.back(), lead_inv, p);
        std::size_t shift = f.size() - g.size();
        q[shift] = c;
        for (std::size_t i = 0; i < g.size(); ++i)
            f[shift + i] = fp_sub(f[shift + i], fp_mul(c, g[i], p), p);
        poly_trim(f);
    }
    poly_trim(q);
    return {q, f};
}

/// g = gcd(a,b) monic with g = s a + t b.
inline std::tuple<std::vector<fp_t>, std::vector<fp_t>, std::vector<fp_t>> poly_ext_gcd(
    std::vector<fp_t> a, std::vector<fp_t> b, fp_t p) {
    std::vector<fp_t> s0{1 % p}, s1{}, t0{}, t1{1 % p};
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        auto [q, r] = poly_divmod(a, b, p);
        auto next_s = s0, next_t = t0;
        auto qs = poly_mul(q, s1, p);
        auto qt = poly_mul(q, t1, p);
        next_s.resize(std::max(next_s.size(), qs.size()), 0);
        next_t.resize(std::max(next_t.size(), qt.size()), 0);
        for (std::size_t i = 0; i < qs.size(); ++i) next_s[i] = fp_sub(next_s[i], qs[i], p);
        for (std::size_t i = 0; i < qt.size(); ++i) next_t[i] = fp_sub(next_t[i], qt[i], p);
        poly_trim(next_s);
        poly_trim(next_t);
        a = std::move(b);
        b = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(next_s);
        t0 = std::move(t1);
        t1 = std::move(next_t);
    }
    if (!a.empty() && a.back() != 1) {
        fp_t inv = fp_inv(a.back(), p);
        for (auto& c : a) c = fp_mul(c, inv, p);
        for (auto& c : s0) c = fp_mul(c, inv, p);
        for (auto& c : t0) c = fp_mul(c, inv, p);
    }
    return {a, s0, t0};
}

}  // namespace detail

/// Monic minimal polynomial of an element (ascending coefficients).
inline std::vector<fp_t> minimal_polynomial(const FiniteAlgebra& a, const std::vector<fp_t>& x) {
    const fp_t p = a.p;
    std::vector<std::vector<fp_t>> powers{a.unit};
    std::vector<fp_t> cur = a.unit;
    for (;;) {
        FieldMatrix m(a.dim, powers.size(), p);
        for (std::size_t c = 0; c < powers.size(); ++c)
            for (std::size_t r = 0; r < a.dim; ++r) m(r, c) = powers[c][r];
        auto ker = kernel_basis(m);
        if (ker.cols() > 0) {
            std::vector<fp_t> f(powers.size());
            // first dependence: last coordinate nonzero, normalize monic
            fp_t lead = ker(powers.size() - 1, 0);
            fp_t inv = fp_inv(lead, p);
            for (std::size_t i = 0; i < powers.size(); ++i) f[i] = fp_mul(ker(i, 0), inv, p);
            return f;
        }
        cur = a.multiply(cur, x);
        powers.push_back(cur);
        if (powers.size() > a.dim + 1) throw std::logic_error("minimal_polynomial: no dependence found");
    }
}

inline std::vector<fp_t> evaluate_poly(const FiniteAlgebra& a, const std::vector<fp_t>& f,
                                       const std::vector<fp_t>& x) {
    std::vector<fp_t> acc = a.zero();
    for (std::size_t d = f.size(); d-- > 0;) {
        acc = a.multiply(acc, x);
        for (std::size_t i = 0; i < a.dim; ++i)
            if (a.unit[i] != 0) acc[i] = fp_add(acc[i], fp_mul(f[d], a.unit[i], a.p), a.p);
    }
    return acc;
}

namespace detail {

/// Radical chain over a faithful action; columns of the result are the
/// coordinates of a radical basis.
inline FieldMatrix radical_chain(const FiniteAlgebra& a, const std::vector<FieldMatrix>& action) {
    const fp_t p = a.p;
    if (a.dim == 0) return FieldMatrix(0, 0, p);
    const std::size_t n = action[0].rows();
    FieldMatrix cur = FieldMatrix::identity(a.dim, p);
    auto act_of = [&](const std::vector<fp_t>& coords) {
        FieldMatrix m(n, n, p);
        for (std::size_t i = 0; i < a.dim; ++i) {
            if (coords[i] == 0) continue;
            m = m + scale(action[i], coords[i]);
        }
        return m;
    };
    std::uint64_t q = 1;
    for (; q <= n; q *= p) {
        if (cur.cols() == 0) return cur;
        std::vector<FieldMatrix> basis_act;
        for (std::size_t c = 0; c < cur.cols(); ++c) basis_act.push_back(act_of(cur.column(c)));
        FieldMatrix constraints(cur.cols(), cur.cols(), p);
        for (std::size_t ys = 0; ys < cur.cols(); ++ys)
            for (std::size_t xr = 0; xr < cur.cols(); ++xr) {
                auto cp = char_poly(basis_act[xr] * basis_act[ys]);
                constraints(ys, xr) = cp[n - static_cast<std::size_t>(q)];
            }
        cur = cur * kernel_basis(constraints);
    }
    return cur;
}

}  // namespace detail

/// Jacobson radical basis via the regular representation; by default verifies
/// that the quotient is semisimple (its radical recomputes to zero).
inline FieldMatrix radical_basis(const FiniteAlgebra& a, bool verify = true);

struct QuotientAlgebra {
    FiniteAlgebra alg;
    FieldMatrix section;  // dim x s: coordinates of chosen coset representatives
    FieldMatrix to_quot;  // s x dim: coordinate map A -> A/I
};

/// Quotient of a by the (two-sided ideal) subspace spanned by ideal's columns.
inline QuotientAlgebra quotient_algebra(const FiniteAlgebra& a, const FieldMatrix& ideal) {
    const fp_t p = a.p;
    QuotientAlgebra out;
    if (a.dim == 0) {
        out.alg.p = p;
        out.section = FieldMatrix(0, 0, p);
        out.to_quot = FieldMatrix(0, 0, p);
        return out;
    }
    FieldMatrix ibasis = column_space(ideal);
    std::size_t s = a.dim - ibasis.cols();
    FieldMatrix t = ibasis.cols() == 0 ? FieldMatrix::identity(a.dim, p) : extend_to_invertible(ibasis);
    FieldMatrix tinv = inverse(t);
    out.section = FieldMatrix(a.dim, s, p);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < s; ++j) out.section(i, j) = t(i, ibasis.cols() + j);
    out.to_quot = FieldMatrix(s, a.dim, p);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) out.to_quot(i, j) = tinv(ibasis.cols() + i, j);

    out.alg.p = p;
    out.alg.dim = s;
    auto project = [&](const std::vector<fp_t>& v) {
        std::vector<fp_t> r(s, 0);
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < a.dim; ++j)
                r[i] = fp_add(r[i], fp_mul(out.to_quot(i, j), v[j], p), p);
        return r;
    };
    std::vector<std::vector<fp_t>> reps;
    for (std::size_t j = 0; j < s; ++j) reps.push_back(out.section.column(j));
    for (std::size_t i = 0; i < s; ++i) {
        FieldMatrix l(s, s, p);
        for (std::size_t j = 0; j < s; ++j) {
            auto prod = project(a.multiply(reps[i], reps[j]));
            for (std::size_t k = 0; k < s; ++k) l(k, j) = prod[k];
        }
        out.alg.left_mult.push_back(std::move(l));
    }
    out.alg.unit = project(a.unit);
    return out;
}

inline FieldMatrix radical_basis(const FiniteAlgebra& a, bool verify) {
    FieldMatrix rad = detail::radical_chain(a, a.left_mult);
    if (verify && a.dim > 0) {
        auto q = quotient_algebra(a, rad);
        FieldMatrix rad2 = detail::radical_chain(q.alg, q.alg.left_mult);
        if (rad2.cols() != 0) throw std::logic_error("radical_basis: quotient is not semisimple");
    }
    return rad;
}

/// A proper idempotent (not 0, not 1) of a split semisimple algebra, or a
/// NonSplitError when the algebra provably has a field-extension factor.
/// Deterministic for commutative input; randomized (seeded) otherwise.
inline std::optional<std::vector<fp_t>> find_proper_idempotent(const FiniteAlgebra& s, unsigned seed = 1) {
    const fp_t p = s.p;
    if (s.dim <= 1) return std::nullopt;

    auto try_element = [&](const std::vector<fp_t>& x) -> std::optional<std::vector<fp_t>> {
        for (fp_t lam = 0; lam < p; ++lam) {
            std::vector<fp_t> t(x);
            for (std::size_t i = 0; i < s.dim; ++i)
                t[i] = fp_sub(t[i], fp_mul(lam, s.unit[i], p), p);
            auto m = minimal_polynomial(s, t);
            std::size_t k = 0;
            while (k < m.size() && m[k] == 0) ++k;
            if (k == 0 || k + 1 >= m.size()) continue;  // t invertible or nilpotent
            std::vector<fp_t> tk(k + 1, 0);
            tk[k] = 1 % p;
            std::vector<fp_t> g(m.begin() + k, m.end());
            auto [gcd, sa, sb] = detail::poly_ext_gcd(tk, g, p);
            if (gcd.size() != 1) continue;
            auto e = evaluate_poly(s, detail::poly_mul(sa, tk, p), t);
            if (s.multiply(e, e) != e) continue;
            bool zero = true, one = true;
            for (std::size_t i = 0; i < s.dim; ++i) {
                if (e[i] != 0) zero = false;
                if (e[i] != s.unit[i]) one = false;
            }
            if (!zero && !one) return e;
        }
        return std::nullopt;
    };

    for (std::size_t i = 0; i < s.dim; ++i)
        if (auto e = try_element(s.basis_vec(i))) return e;

    if (s.is_commutative()) {
        // split commutative semisimple means x -> x^p is the identity
        FieldMatrix frob(s.dim, s.dim, p);
        for (std::size_t i = 0; i < s.dim; ++i) {
            std::vector<fp_t> v = s.basis_vec(i);
            std::vector<fp_t> pw = v;
            for (fp_t e = 1; e < p; ++e) pw = s.multiply(pw, v);
            for (std::size_t r = 0; r < s.dim; ++r) frob(r, i) = pw[r];
        }
        FieldMatrix fixed = kernel_basis(frob - FieldMatrix::identity(s.dim, p));
        if (fixed.cols() < s.dim)
            throw NonSplitError("semisimple quotient has a field-extension factor over F_p");
        for (std::size_t c = 0; c < fixed.cols(); ++c)
            if (auto e = try_element(fixed.column(c))) return e;
        return std::nullopt;  // dim > 1 split commutative always yields one above
    }

    std::mt19937 rng(seed);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<fp_t> x(s.dim);
        for (auto& v : x) v = static_cast<fp_t>(rng() % p);
        if (auto e = try_element(x)) return e;
    }
    throw NonSplitError("could not split a noncommutative semisimple quotient; End/rad not split over F_p?");
}

/// Lift an idempotent of a/ideal back to a through the nilpotent ideal by
/// the Newton iteration e <- 3e^2 - 2e^3.
inline std::vector<fp_t> lift_idempotent(const FiniteAlgebra& a, std::vector<fp_t> e) {
    for (int iter = 0; iter < 64; ++iter) {
        auto e2 = a.multiply(e, e);
        if (e2 == e) return e;
        auto e3 = a.multiply(e2, e);
        std::vector<fp_t> next(a.dim);
        for (std::size_t i = 0; i < a.dim; ++i) {
            fp_t three = fp_mul(3 % a.p, e2[i], a.p);
            fp_t two = fp_mul(2 % a.p, e3[i], a.p);
            next[i] = fp_sub(three, two, a.p);
        }
        e = std::move(next);
    }
    throw std::logic_error("lift_idempotent: iteration did not converge (ideal not nilpotent?)");
}

}  // namespace lenrep
