/* Krull-Schmidt machinery: endomorphism algebras, module splitting by Fitting
 * decompositions and lifted idempotents, isomorphism testing.
 *
 * Splitting strategy: sweep endomorphisms (basis first, then seeded random
 * combinations) and split along ker/im of their Fitting power; once no split
 * is found, certify indecomposability by End/rad, and fall back to a lifted
 * idempotent of End/rad if the certificate shows a missed split.  The final
 * pieces always carry local endomorphism algebras with 1-dimensional top;
 * anything else raises NonSplitError (non-split ground field).
 */

#pragma once

#include <random>

#include "finite_algebra.hpp"
#include "hom.hpp"

namespace lenrep {

struct EndAlgebra {
    HomSpace hom;       // basis of End(m)
    FiniteAlgebra alg;  // structure constants over that basis

    RepMorphism from_coords(const std::vector<fp_t>& c) const { return hom.from_coordinates(c); }
};

/// Structure constants of End(m) over the hom_basis of (m, m).
inline EndAlgebra end_algebra(const Rep& m) {
    EndAlgebra out{hom_basis(m, m), {}};
    const fp_t p = m.characteristic();
    const std::size_t d = out.hom.dimension();
    out.alg.p = p;
    out.alg.dim = d;
    for (std::size_t i = 0; i < d; ++i) {
        FieldMatrix l(d, d, p);
        for (std::size_t j = 0; j < d; ++j) {
            auto prod = compose(out.hom.basis[i], out.hom.basis[j]);
            auto coords = out.hom.coordinates_of(prod);
            for (std::size_t k = 0; k < d; ++k) l(k, j) = coords[k];
        }
        out.alg.left_mult.push_back(std::move(l));
    }
    if (d > 0) out.alg.unit = out.hom.coordinates_of(identity_morphism(m));
    return out;
}

/// Radical of End(m) computed over the module action (faithful and small).
inline FieldMatrix end_radical(const Rep& m, const EndAlgebra& e) {
    std::vector<FieldMatrix> action;
    for (const auto& f : e.hom.basis) action.push_back(block_diag(f.blocks, m.characteristic()));
    if (e.alg.dim == 0) return FieldMatrix(0, 0, m.characteristic());
    return detail::radical_chain(e.alg, action);
}

namespace detail {

inline RepMorphism morphism_power(const RepMorphism& f, std::size_t n) {
    RepMorphism acc = identity_morphism(f.source);
    RepMorphism base = f;
    while (n > 0) {
        if (n & 1) acc = compose(acc, base);
        base = compose(base, base);
        n >>= 1;
    }
    return acc;
}

/// Split m along the Fitting decomposition of phi, if nontrivial.
inline std::optional<std::pair<Rep, Rep>> fitting_split(const Rep& m, const RepMorphism& phi) {
    auto fn = morphism_power(phi, m.total_dim());
    auto ker = kernel_family(fn);
    std::size_t kdim = family_dim(ker);
    if (kdim == 0 || kdim == m.total_dim()) return std::nullopt;
    auto im = image_family(fn);
    Rep a = sub_quotient(m, ker).sub;
    Rep b = sub_quotient(m, im).sub;
    if (a.total_dim() + b.total_dim() != m.total_dim())
        throw std::logic_error("fitting_split: kernel and image do not complement");
    return std::make_pair(std::move(a), std::move(b));
}

inline std::optional<std::pair<Rep, Rep>> find_split(const Rep& m, unsigned seed) {
    EndAlgebra end = end_algebra(m);
    if (end.alg.dim <= 1) return std::nullopt;
    for (const auto& f : end.hom.basis)
        if (auto s = fitting_split(m, f)) return s;
    std::mt19937 rng(seed);
    const fp_t p = m.characteristic();
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<fp_t> c(end.alg.dim);
        for (auto& v : c) v = static_cast<fp_t>(rng() % p);
        auto phi = end.from_coords(c);
        if (is_zero_morphism(phi)) continue;
        if (auto s = fitting_split(m, phi)) return s;
    }
    // certify, or split through a lifted idempotent of End/rad
    FieldMatrix rad = end_radical(m, end);
    if (end.alg.dim - rad.cols() == 1) return std::nullopt;  // local: indecomposable
    auto quot = quotient_algebra(end.alg, rad);
    auto ebar = find_proper_idempotent(quot.alg, seed ^ 0x9e3779b9u);
    if (!ebar) throw std::logic_error("find_split: End/rad not local yet no idempotent found");
    std::vector<fp_t> lifted0(end.alg.dim, 0);
    const fp_t pp = end.alg.p;
    for (std::size_t i = 0; i < end.alg.dim; ++i)
        for (std::size_t j = 0; j < quot.alg.dim; ++j)
            lifted0[i] = fp_add(lifted0[i], fp_mul(quot.section(i, j), (*ebar)[j], pp), pp);
    auto e = lift_idempotent(end.alg, lifted0);
    auto phi = end.from_coords(e);
    Rep a = sub_quotient(m, image_family(phi)).sub;
    Rep b = sub_quotient(m, kernel_family(phi)).sub;
    if (a.total_dim() + b.total_dim() != m.total_dim() || a.is_zero() || b.is_zero())
        throw std::logic_error("find_split: idempotent did not split");
    return std::make_pair(std::move(a), std::move(b));
}

}  // namespace detail

/// Is End(m)/rad one-dimensional?  (m must be nonzero.)
inline bool has_local_endomorphism_algebra(const Rep& m) {
    if (m.is_zero()) return false;
    EndAlgebra end = end_algebra(m);
    FieldMatrix rad = end_radical(m, end);
    return end.alg.dim - rad.cols() == 1;
}

struct DecompPiece {
    Rep piece;
    std::size_t multiplicity;
};

/// Isomorphism test for modules already known to be indecomposable: some
/// composite g o f must be a unit in the local algebra End(x).
inline bool indec_isomorphic(const Rep& x, const Rep& y) {
    if (x.algebra() != y.algebra()) throw std::invalid_argument("indec_isomorphic: algebra mismatch");
    if (x.dims() != y.dims()) return false;
    if (x.is_zero()) return true;
    HomSpace xy = hom_basis(x, y);
    if (xy.dimension() == 0) return false;
    HomSpace yx = hom_basis(y, x);
    if (yx.dimension() == 0) return false;
    EndAlgebra end = end_algebra(x);
    FieldMatrix rad = end_radical(x, end);
    if (end.alg.dim - rad.cols() != 1)
        throw NonSplitError("indec_isomorphic: input has non-local endomorphism algebra");
    for (const auto& f : xy.basis)
        for (const auto& g : yx.basis) {
            auto coords = end.hom.coordinates_of(compose(g, f));
            FieldMatrix v(coords.size(), 1, x.characteristic());
            for (std::size_t i = 0; i < coords.size(); ++i) v(i, 0) = coords[i];
            if (!span_contains(rad, v)) return true;  // unit, hence split mono between indecomposables
        }
    return false;
}

/// An isomorphism witness between indecomposables, if one exists.
inline std::optional<RepMorphism> indec_isomorphism(const Rep& x, const Rep& y) {
    if (x.dims() != y.dims()) return std::nullopt;
    if (x.is_zero()) return zero_morphism(x, y);
    HomSpace xy = hom_basis(x, y);
    HomSpace yx = hom_basis(y, x);
    EndAlgebra end = end_algebra(x);
    FieldMatrix rad = end_radical(x, end);
    for (const auto& f : xy.basis)
        for (const auto& g : yx.basis) {
            auto coords = end.hom.coordinates_of(compose(g, f));
            FieldMatrix v(coords.size(), 1, x.characteristic());
            for (std::size_t i = 0; i < coords.size(); ++i) v(i, 0) = coords[i];
            if (!span_contains(rad, v)) return f;
        }
    return std::nullopt;
}

/// Krull-Schmidt decomposition into indecomposables with multiplicities,
/// sorted by (total dimension, dimension vector).
inline std::vector<DecompPiece> decompose(const Rep& m, unsigned seed = 0x51ab1e) {
    std::vector<Rep> pieces;
    std::vector<Rep> stack{m};
    unsigned salt = seed;
    while (!stack.empty()) {
        Rep cur = std::move(stack.back());
        stack.pop_back();
        if (cur.is_zero()) continue;
        if (auto split = detail::find_split(cur, salt++)) {
            stack.push_back(std::move(split->first));
            stack.push_back(std::move(split->second));
        } else {
            pieces.push_back(std::move(cur));
        }
    }
    std::sort(pieces.begin(), pieces.end(), [](const Rep& a, const Rep& b) {
        if (a.total_dim() != b.total_dim()) return a.total_dim() < b.total_dim();
        return a.dims() < b.dims();
    });
    std::vector<DecompPiece> out;
    for (auto& piece : pieces) {
        bool matched = false;
        for (auto& grp : out)
            if (indec_isomorphic(grp.piece, piece)) {
                ++grp.multiplicity;
                matched = true;
                break;
            }
        if (!matched) out.push_back(DecompPiece{std::move(piece), 1});
    }
    return out;
}

/// Isomorphism of arbitrary finite-dimensional representations: matching
/// Krull-Schmidt multisets.
inline bool is_isomorphic(const Rep& m, const Rep& n) {
    if (m.algebra() != n.algebra()) throw std::invalid_argument("is_isomorphic: algebra mismatch");
    if (m.dims() != n.dims()) return false;
    auto dm = decompose(m);
    auto dn = decompose(n);
    if (dm.size() != dn.size()) return false;
    std::vector<bool> used(dn.size(), false);
    for (const auto& a : dm) {
        bool found = false;
        for (std::size_t j = 0; j < dn.size(); ++j) {
            if (used[j] || dn[j].multiplicity != a.multiplicity) continue;
            if (indec_isomorphic(a.piece, dn[j].piece)) {
                used[j] = true;
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace lenrep
