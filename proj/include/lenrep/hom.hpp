/* Hom spaces: bases of intertwiners, computed as the kernel of the
 * block-commutation system. */

#pragma once

#include "rep.hpp"

namespace lenrep {

inline std::vector<fp_t> flatten_morphism_blocks(const std::vector<FieldMatrix>& blocks) {
    std::vector<fp_t> out;
    for (const auto& b : blocks)
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) out.push_back(b(i, j));
    return out;
}

struct HomSpace {
    Rep source, target;
    std::vector<RepMorphism> basis;
    FieldMatrix coords;  // columns = flattened basis elements

    std::size_t dimension() const { return basis.size(); }

    /// Coordinates of a morphism source -> target over this basis.
    std::vector<fp_t> coordinates_of(const RepMorphism& f) const {
        auto flat = flatten_morphism_blocks(f.blocks);
        FieldMatrix v(flat.size(), 1, source.characteristic());
        for (std::size_t i = 0; i < flat.size(); ++i) v(i, 0) = flat[i];
        if (coords.cols() == 0) {
            if (!v.is_zero()) throw std::invalid_argument("HomSpace: morphism outside the zero space");
            return {};
        }
        auto x = solve(coords, v);
        if (!x) throw std::invalid_argument("HomSpace: morphism is not in the span");
        std::vector<fp_t> out(basis.size());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = (*x)(i, 0);
        return out;
    }

    RepMorphism from_coordinates(const std::vector<fp_t>& c) const {
        if (c.size() != basis.size()) throw std::invalid_argument("HomSpace: coordinate size mismatch");
        RepMorphism f = zero_morphism(source, target);
        for (std::size_t k = 0; k < c.size(); ++k)
            if (c[k] != 0) f = morphism_add(f, morphism_scale(basis[k], c[k]));
        return f;
    }
};

/// Basis of Hom(m, n): solve N_a F_v = F_w M_a for every arrow a: v -> w.
inline HomSpace hom_basis(const Rep& m, const Rep& n) {
    require_same_algebra(m, n, "hom_basis");
    const Quiver& q = m.algebra()->quiver();
    const fp_t p = m.characteristic();

    std::vector<std::size_t> offset(q.num_vertices() + 1, 0);
    for (std::size_t v = 0; v < q.num_vertices(); ++v)
        offset[v + 1] = offset[v] + n.dim(static_cast<int>(v)) * m.dim(static_cast<int>(v));
    const std::size_t unknowns = offset.back();

    std::size_t eqs = 0;
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrow(static_cast<int>(a));
        eqs += n.dim(ar.target) * m.dim(ar.source);
    }

    FieldMatrix sys(eqs, unknowns, p);
    std::size_t row = 0;
    auto idx = [&](std::size_t v, std::size_t i, std::size_t j) {
        return offset[v] + i * m.dim(static_cast<int>(v)) + j;
    };
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrow(static_cast<int>(a));
        const FieldMatrix& ma = m.arrow_map(static_cast<int>(a));
        const FieldMatrix& na = n.arrow_map(static_cast<int>(a));
        for (std::size_t i = 0; i < n.dim(ar.target); ++i)
            for (std::size_t j = 0; j < m.dim(ar.source); ++j) {
                // (N_a F_src - F_tgt M_a)(i, j) = 0
                for (std::size_t k = 0; k < n.dim(ar.source); ++k)
                    sys(row, idx(ar.source, k, j)) =
                        fp_add(sys(row, idx(ar.source, k, j)), na(i, k), p);
                for (std::size_t k = 0; k < m.dim(ar.target); ++k)
                    sys(row, idx(ar.target, i, k)) =
                        fp_sub(sys(row, idx(ar.target, i, k)), ma(k, j), p);
                ++row;
            }
    }

    auto ker = kernel_basis(sys);
    HomSpace out{m, n, {}, ker};
    for (std::size_t c = 0; c < ker.cols(); ++c) {
        std::vector<FieldMatrix> blocks;
        for (std::size_t v = 0; v < q.num_vertices(); ++v) {
            FieldMatrix b(n.dim(static_cast<int>(v)), m.dim(static_cast<int>(v)), p);
            for (std::size_t i = 0; i < b.rows(); ++i)
                for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) = ker(idx(v, i, j), c);
            blocks.push_back(std::move(b));
        }
        out.basis.push_back(RepMorphism{m, n, std::move(blocks)});
    }
    return out;
}

inline std::size_t hom_dim(const Rep& m, const Rep& n) { return hom_basis(m, n).dimension(); }

}  // namespace lenrep
