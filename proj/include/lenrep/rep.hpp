/* Objects and morphisms of the length category: finite-dimensional
 * representations of a bound algebra, socle/radical series, height and
 * length, subobjects and quotients. */

#pragma once

#include <numeric>

#include "algebra.hpp"

namespace lenrep {

class Rep {
public:
    Rep() = default;

    Rep(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<FieldMatrix> arrow_maps)
        : algebra_(std::move(algebra)), dims_(std::move(dims)), arrow_maps_(std::move(arrow_maps)) {
        const Quiver& q = algebra_->quiver();
        if (dims_.size() != q.num_vertices()) throw std::invalid_argument("Rep: dimension vector size mismatch");
        if (arrow_maps_.size() != q.num_arrows()) throw std::invalid_argument("Rep: arrow map count mismatch");
        for (std::size_t a = 0; a < arrow_maps_.size(); ++a) {
            const Arrow& ar = q.arrow(static_cast<int>(a));
            if (arrow_maps_[a].rows() != dims_[ar.target] || arrow_maps_[a].cols() != dims_[ar.source])
                throw std::invalid_argument("Rep: map for arrow '" + ar.name + "' has wrong shape");
            if (arrow_maps_[a].characteristic() != algebra_->characteristic())
                throw std::invalid_argument("Rep: map for arrow '" + ar.name + "' over wrong field");
        }
    }

    static Rep zero(AlgebraPtr algebra) {
        const Quiver& q = algebra->quiver();
        std::vector<std::size_t> dims(q.num_vertices(), 0);
        std::vector<FieldMatrix> maps;
        for (std::size_t a = 0; a < q.num_arrows(); ++a)
            maps.emplace_back(0, 0, algebra->characteristic());
        return Rep(std::move(algebra), std::move(dims), std::move(maps));
    }

    const AlgebraPtr& algebra() const { return algebra_; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t dim(int v) const { return dims_.at(v); }
    const FieldMatrix& arrow_map(int a) const { return arrow_maps_.at(a); }
    fp_t characteristic() const { return algebra_->characteristic(); }

    std::size_t total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0}); }
    bool is_zero() const { return total_dim() == 0; }

    bool operator==(const Rep& o) const {
        return algebra_ == o.algebra_ && dims_ == o.dims_ && arrow_maps_ == o.arrow_maps_;
    }

private:
    AlgebraPtr algebra_;
    std::vector<std::size_t> dims_;
    std::vector<FieldMatrix> arrow_maps_;
};

inline void require_same_algebra(const Rep& a, const Rep& b, const char* where) {
    if (a.algebra() != b.algebra()) throw std::invalid_argument(std::string(where) + ": algebra mismatch");
}

/// Matrix of the path's action, target-dim x source-dim (reverse traversal order).
inline FieldMatrix path_action(const Rep& r, const Path& p) {
    FieldMatrix m = FieldMatrix::identity(r.dim(p.source), r.characteristic());
    for (int a : p.arrows) m = r.arrow_map(a) * m;
    return m;
}

struct RepMorphism {
    Rep source;
    Rep target;
    std::vector<FieldMatrix> blocks;  // per vertex, target-dim x source-dim

    bool intertwines() const {
        const Quiver& q = source.algebra()->quiver();
        for (std::size_t a = 0; a < q.num_arrows(); ++a) {
            const Arrow& ar = q.arrow(static_cast<int>(a));
            if (target.arrow_map(static_cast<int>(a)) * blocks[ar.source] !=
                blocks[ar.target] * source.arrow_map(static_cast<int>(a)))
                return false;
        }
        return true;
    }
};

inline RepMorphism make_morphism(Rep source, Rep target, std::vector<FieldMatrix> blocks) {
    require_same_algebra(source, target, "make_morphism");
    if (blocks.size() != source.dims().size()) throw std::invalid_argument("make_morphism: block count");
    for (std::size_t v = 0; v < blocks.size(); ++v)
        if (blocks[v].rows() != target.dim(static_cast<int>(v)) ||
            blocks[v].cols() != source.dim(static_cast<int>(v)))
            throw std::invalid_argument("make_morphism: block shape at vertex " + std::to_string(v));
    return RepMorphism{std::move(source), std::move(target), std::move(blocks)};
}

inline RepMorphism identity_morphism(const Rep& r) {
    std::vector<FieldMatrix> blocks;
    for (std::size_t v = 0; v < r.dims().size(); ++v)
        blocks.push_back(FieldMatrix::identity(r.dim(static_cast<int>(v)), r.characteristic()));
    return RepMorphism{r, r, std::move(blocks)};
}

inline RepMorphism zero_morphism(const Rep& source, const Rep& target) {
    std::vector<FieldMatrix> blocks;
    for (std::size_t v = 0; v < source.dims().size(); ++v)
        blocks.emplace_back(target.dim(static_cast<int>(v)), source.dim(static_cast<int>(v)),
                            source.characteristic());
    return RepMorphism{source, target, std::move(blocks)};
}

inline RepMorphism compose(const RepMorphism& g, const RepMorphism& f) {
    std::vector<FieldMatrix> blocks;
    for (std::size_t v = 0; v < f.blocks.size(); ++v) blocks.push_back(g.blocks[v] * f.blocks[v]);
    return RepMorphism{f.source, g.target, std::move(blocks)};
}

inline RepMorphism morphism_add(const RepMorphism& f, const RepMorphism& g) {
    std::vector<FieldMatrix> blocks;
    for (std::size_t v = 0; v < f.blocks.size(); ++v) blocks.push_back(f.blocks[v] + g.blocks[v]);
    return RepMorphism{f.source, f.target, std::move(blocks)};
}

inline RepMorphism morphism_scale(const RepMorphism& f, fp_t c) {
    std::vector<FieldMatrix> blocks;
    for (const auto& b : f.blocks) blocks.push_back(scale(b, c));
    return RepMorphism{f.source, f.target, std::move(blocks)};
}

inline bool is_mono(const RepMorphism& f) {
    for (std::size_t v = 0; v < f.blocks.size(); ++v)
        if (rank(f.blocks[v]) != f.source.dim(static_cast<int>(v))) return false;
    return true;
}

inline bool is_epi(const RepMorphism& f) {
    for (std::size_t v = 0; v < f.blocks.size(); ++v)
        if (rank(f.blocks[v]) != f.target.dim(static_cast<int>(v))) return false;
    return true;
}

inline bool is_zero_morphism(const RepMorphism& f) {
    for (const auto& b : f.blocks)
        if (!b.is_zero()) return false;
    return true;
}

/// Per-vertex family of column spans inside a representation.
using SubspaceFamily = std::vector<FieldMatrix>;

inline SubspaceFamily zero_family(const Rep& r) {
    SubspaceFamily f;
    for (std::size_t v = 0; v < r.dims().size(); ++v)
        f.emplace_back(r.dim(static_cast<int>(v)), 0, r.characteristic());
    return f;
}

inline SubspaceFamily full_family(const Rep& r) {
    SubspaceFamily f;
    for (std::size_t v = 0; v < r.dims().size(); ++v)
        f.push_back(FieldMatrix::identity(r.dim(static_cast<int>(v)), r.characteristic()));
    return f;
}

inline std::size_t family_dim(const SubspaceFamily& f) {
    std::size_t d = 0;
    for (const auto& m : f) d += m.cols();
    return d;
}

inline SubspaceFamily kernel_family(const RepMorphism& f) {
    SubspaceFamily out;
    for (const auto& b : f.blocks) out.push_back(kernel_basis(b));
    return out;
}

inline SubspaceFamily image_family(const RepMorphism& f) {
    SubspaceFamily out;
    for (const auto& b : f.blocks) out.push_back(column_space(b));
    return out;
}

inline bool family_invariant(const Rep& r, const SubspaceFamily& f) {
    const Quiver& q = r.algebra()->quiver();
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrow(static_cast<int>(a));
        if (!span_contains(f[ar.target], r.arrow_map(static_cast<int>(a)) * f[ar.source]))
            return false;
    }
    return true;
}

/// Socle as a subspace family: joint kernel of all arrow actions out of each vertex.
inline SubspaceFamily socle_family(const Rep& r) {
    const Quiver& q = r.algebra()->quiver();
    SubspaceFamily out;
    for (std::size_t v = 0; v < r.dims().size(); ++v) {
        auto outgoing = q.arrows_from(static_cast<int>(v));
        if (outgoing.empty()) {
            out.push_back(FieldMatrix::identity(r.dim(static_cast<int>(v)), r.characteristic()));
            continue;
        }
        FieldMatrix stacked = r.arrow_map(outgoing[0]);
        for (std::size_t k = 1; k < outgoing.size(); ++k)
            stacked = vstack(stacked, r.arrow_map(outgoing[k]));
        out.push_back(kernel_basis(stacked));
    }
    return out;
}

/// Radical as a subspace family: sum of arrow images into each vertex.
inline SubspaceFamily radical_family(const Rep& r) {
    const Quiver& q = r.algebra()->quiver();
    SubspaceFamily out;
    for (std::size_t v = 0; v < r.dims().size(); ++v) {
        auto incoming = q.arrows_into(static_cast<int>(v));
        FieldMatrix acc(r.dim(static_cast<int>(v)), 0, r.characteristic());
        for (int a : incoming) acc = hstack(acc, r.arrow_map(a));
        out.push_back(column_space(acc));
    }
    return out;
}

struct SubQuotient {
    Rep sub;
    Rep quotient;
    RepMorphism inclusion;   // sub -> rep
    RepMorphism projection;  // rep -> quotient
};

inline SubQuotient sub_quotient(const Rep& r, const SubspaceFamily& raw_spans) {
    const Quiver& q = r.algebra()->quiver();
    const fp_t p = r.characteristic();
    if (raw_spans.size() != r.dims().size())
        throw std::invalid_argument("sub_quotient: family size mismatch");
    SubspaceFamily spans;
    for (std::size_t v = 0; v < raw_spans.size(); ++v) {
        if (raw_spans[v].rows() != r.dim(static_cast<int>(v)))
            throw std::invalid_argument("sub_quotient: span rows mismatch at vertex " + std::to_string(v));
        spans.push_back(column_space(raw_spans[v]));
    }
    if (!family_invariant(r, spans))
        throw std::invalid_argument("sub_quotient: subspace family is not invariant");

    std::vector<FieldMatrix> T, Tinv;
    std::vector<std::size_t> sub_dims, quot_dims;
    for (std::size_t v = 0; v < spans.size(); ++v) {
        std::size_t n = r.dim(static_cast<int>(v)), k = spans[v].cols();
        FieldMatrix t = n == 0 ? FieldMatrix(0, 0, p) : extend_to_invertible(spans[v]);
        if (n == 0) t = FieldMatrix::identity(0, p);
        T.push_back(t);
        Tinv.push_back(n == 0 ? FieldMatrix(0, 0, p) : inverse(t));
        sub_dims.push_back(k);
        quot_dims.push_back(n - k);
    }

    std::vector<FieldMatrix> sub_maps, quot_maps, incl_blocks, proj_blocks;
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrow(static_cast<int>(a));
        FieldMatrix m = Tinv[ar.target] * r.arrow_map(static_cast<int>(a)) * T[ar.source];
        std::size_t ks = sub_dims[ar.source], kt = sub_dims[ar.target];
        FieldMatrix sm(kt, ks, p), qm(quot_dims[ar.target], quot_dims[ar.source], p);
        for (std::size_t i = 0; i < kt; ++i)
            for (std::size_t j = 0; j < ks; ++j) sm(i, j) = m(i, j);
        for (std::size_t i = 0; i < quot_dims[ar.target]; ++i)
            for (std::size_t j = 0; j < quot_dims[ar.source]; ++j) qm(i, j) = m(kt + i, ks + j);
        sub_maps.push_back(std::move(sm));
        quot_maps.push_back(std::move(qm));
    }
    for (std::size_t v = 0; v < spans.size(); ++v) {
        incl_blocks.push_back(spans[v]);
        std::size_t n = r.dim(static_cast<int>(v)), k = sub_dims[v];
        FieldMatrix pr(quot_dims[v], n, p);
        for (std::size_t i = 0; i < quot_dims[v]; ++i)
            for (std::size_t j = 0; j < n; ++j) pr(i, j) = Tinv[v](k + i, j);
        proj_blocks.push_back(std::move(pr));
    }

    Rep sub(r.algebra(), sub_dims, std::move(sub_maps));
    Rep quot(r.algebra(), quot_dims, std::move(quot_maps));
    RepMorphism incl = make_morphism(sub, r, std::move(incl_blocks));
    RepMorphism proj = make_morphism(r, quot, std::move(proj_blocks));
    return SubQuotient{std::move(sub), std::move(quot), std::move(incl), std::move(proj)};
}

struct DirectSum {
    Rep sum;
    std::vector<RepMorphism> injections;
    std::vector<RepMorphism> projections;
};

inline DirectSum direct_sum(AlgebraPtr algebra, const std::vector<Rep>& parts) {
    const Quiver& q = algebra->quiver();
    const fp_t p = algebra->characteristic();
    for (const auto& r : parts)
        if (r.algebra() != algebra) throw std::invalid_argument("direct_sum: algebra mismatch");
    std::vector<std::size_t> dims(q.num_vertices(), 0);
    for (const auto& r : parts)
        for (std::size_t v = 0; v < dims.size(); ++v) dims[v] += r.dim(static_cast<int>(v));
    std::vector<FieldMatrix> maps;
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        std::vector<FieldMatrix> blocks;
        for (const auto& r : parts) blocks.push_back(r.arrow_map(static_cast<int>(a)));
        maps.push_back(block_diag(blocks, p));
    }
    Rep sum(algebra, dims, std::move(maps));

    DirectSum out{sum, {}, {}};
    std::vector<std::size_t> offset(q.num_vertices(), 0);
    for (const auto& r : parts) {
        std::vector<FieldMatrix> inj, prj;
        for (std::size_t v = 0; v < dims.size(); ++v) {
            FieldMatrix in(dims[v], r.dim(static_cast<int>(v)), p);
            FieldMatrix pr(r.dim(static_cast<int>(v)), dims[v], p);
            for (std::size_t i = 0; i < r.dim(static_cast<int>(v)); ++i) {
                in(offset[v] + i, i) = 1 % p;
                pr(i, offset[v] + i) = 1 % p;
            }
            inj.push_back(std::move(in));
            prj.push_back(std::move(pr));
        }
        out.injections.push_back(make_morphism(r, sum, std::move(inj)));
        out.projections.push_back(make_morphism(sum, r, std::move(prj)));
        for (std::size_t v = 0; v < dims.size(); ++v) offset[v] += r.dim(static_cast<int>(v));
    }
    return out;
}

struct ValidityReport {
    std::vector<std::size_t> relation_violations;  // indices into algebra relations
    std::optional<Path> nilpotency_violation;      // a level-length path acting nonzero
    bool valid() const { return relation_violations.empty() && !nilpotency_violation; }
};

namespace detail {
inline bool find_nonzero_level_path(const Rep& r, int at, Path& cur, unsigned depth,
                                    const FieldMatrix& acting, unsigned level, Path& out) {
    if (acting.is_zero()) return false;
    if (depth == level) {
        out = cur;
        return true;
    }
    const Quiver& q = r.algebra()->quiver();
    for (int a : q.arrows_from(at)) {
        cur.arrows.push_back(a);
        cur.target = q.arrow(a).target;
        if (find_nonzero_level_path(r, q.arrow(a).target, cur, depth + 1,
                                    r.arrow_map(a) * acting, level, out))
            return true;
        cur.arrows.pop_back();
        cur.target = at;
    }
    return false;
}
}  // namespace detail

inline ValidityReport check_rep(const Rep& r) {
    ValidityReport report;
    const auto& alg = *r.algebra();
    for (std::size_t k = 0; k < alg.relations().size(); ++k) {
        const Relation& rel = alg.relations()[k];
        FieldMatrix acc(r.dim(rel.target()), r.dim(rel.source()), r.characteristic());
        for (const auto& [c, path] : rel.terms) acc = acc + scale(path_action(r, path), c);
        if (!acc.is_zero()) report.relation_violations.push_back(k);
    }
    // nilpotency window: every path of length == level must act by zero
    const Quiver& q = alg.quiver();
    for (std::size_t v = 0; v < q.num_vertices() && !report.nilpotency_violation; ++v) {
        Path cur = Path::trivial(static_cast<int>(v));
        Path bad;
        if (detail::find_nonzero_level_path(r, static_cast<int>(v), cur, 0,
                                            FieldMatrix::identity(r.dim(static_cast<int>(v)), r.characteristic()),
                                            alg.level(), bad))
            report.nilpotency_violation = bad;
    }
    return report;
}

struct SeriesStep {
    SubspaceFamily cumulative;          // soc^k as subspaces of the ambient rep
    std::vector<std::size_t> semisimple;  // multiplicity of each simple in the step quotient
};

struct SeriesChain {
    std::vector<SeriesStep> steps;
    std::size_t height() const { return steps.size(); }
};

inline SeriesChain socle_series(const Rep& r) {
    SeriesChain chain;
    SubspaceFamily u = zero_family(r);
    std::size_t covered = 0;
    const std::size_t total = r.total_dim();
    while (covered < total) {
        auto sq = sub_quotient(r, u);
        SubspaceFamily soc_q = socle_family(sq.quotient);
        SeriesStep step;
        step.semisimple.resize(r.dims().size());
        SubspaceFamily next;
        for (std::size_t v = 0; v < u.size(); ++v) {
            step.semisimple[v] = soc_q[v].cols();
            if (soc_q[v].cols() == 0) {
                next.push_back(u[v]);
                continue;
            }
            auto lift = solve(sq.projection.blocks[v], soc_q[v]);
            if (!lift) throw std::logic_error("socle_series: projection not surjective");
            next.push_back(column_space(hstack(u[v], *lift)));
        }
        std::size_t now = family_dim(next);
        if (now <= covered) throw std::logic_error("socle_series: chain stalled (invalid rep?)");
        covered = now;
        step.cumulative = next;
        u = std::move(next);
        chain.steps.push_back(std::move(step));
    }
    return chain;
}

/// Radical series top-down: X ⊇ rad X ⊇ rad^2 X ⊇ …, with semisimple step quotients.
inline std::vector<std::vector<std::size_t>> radical_layer_multiplicities(const Rep& r) {
    std::vector<std::vector<std::size_t>> layers;
    Rep cur = r;
    while (!cur.is_zero()) {
        SubspaceFamily rad = radical_family(cur);
        auto sq = sub_quotient(cur, rad);
        std::vector<std::size_t> layer;
        for (std::size_t v = 0; v < r.dims().size(); ++v)
            layer.push_back(sq.quotient.dim(static_cast<int>(v)));
        if (family_dim(rad) >= cur.total_dim())
            throw std::logic_error("radical series: stalled (invalid rep?)");
        layers.push_back(std::move(layer));
        cur = sq.sub;
    }
    return layers;
}

struct HeightLength {
    std::size_t ht;
    std::size_t len;
};

inline HeightLength height_and_length(const Rep& r) {
    return HeightLength{socle_series(r).height(), r.total_dim()};
}

/// Multiplicity of each simple as a composition factor; for a basic split
/// algebra over F_p this is the dimension vector.
inline std::vector<std::size_t> composition_vector(const Rep& r) { return r.dims(); }

// ---- canonical modules ----

inline Rep simple_rep(AlgebraPtr algebra, int vertex) {
    algebra->require_vertex(vertex);
    const Quiver& q = algebra->quiver();
    std::vector<std::size_t> dims(q.num_vertices(), 0);
    dims[vertex] = 1;
    std::vector<FieldMatrix> maps;
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrow(static_cast<int>(a));
        maps.emplace_back(dims[ar.target], dims[ar.source], algebra->characteristic());
    }
    return Rep(std::move(algebra), std::move(dims), std::move(maps));
}

struct ProjectiveModule {
    Rep rep;
    int top_vertex;
    // vertex v space is indexed by the algebra-basis positions of paths top_vertex -> v
    std::vector<std::vector<std::size_t>> vertex_basis;
    std::size_t generator_coordinate;  // index of eps_i inside vertex_basis[top_vertex]
};

/// The indecomposable projective A e_i as a representation: paths out of i,
/// with arrows acting by left multiplication.
inline ProjectiveModule projective_module(AlgebraPtr algebra, int i) {
    algebra->require_vertex(i);
    const BoundAlgebra& a = *algebra;
    const Quiver& q = a.quiver();
    const fp_t p = a.characteristic();
    std::vector<std::vector<std::size_t>> vbasis;
    std::vector<std::size_t> dims;
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
        vbasis.push_back(a.corner_positions(i, static_cast<int>(v)));
        dims.push_back(vbasis.back().size());
    }
    std::vector<FieldMatrix> maps;
    for (std::size_t ai = 0; ai < q.num_arrows(); ++ai) {
        const Arrow& ar = q.arrow(static_cast<int>(ai));
        FieldMatrix m(dims[ar.target], dims[ar.source], p);
        auto arrow_pos = a.basis_position(Path::from_arrows(q, {static_cast<int>(ai)}));
        for (std::size_t col = 0; col < vbasis[ar.source].size(); ++col) {
            AlgElem prod = a.product(*arrow_pos, vbasis[ar.source][col]);
            for (std::size_t row = 0; row < vbasis[ar.target].size(); ++row)
                m(row, col) = prod[vbasis[ar.target][row]];
        }
        maps.push_back(std::move(m));
    }
    ProjectiveModule out{Rep(algebra, dims, std::move(maps)), i, std::move(vbasis), 0};
    // eps_i is deglex-smallest among paths i -> i, hence coordinate 0
    return out;
}

/// Quotient of the projective at i by the len-th radical power; over a cyclic
/// quiver this is the uniserial of that length with top at i.
inline Rep top_quotient(AlgebraPtr algebra, int i, unsigned len) {
    Rep p = projective_module(algebra, i).rep;
    SubspaceFamily rad = full_family(p);
    for (unsigned k = 0; k < len; ++k) {
        // rad^{k+1} = arrow images of rad^k, in ambient coordinates
        SubspaceFamily next;
        const Quiver& q = algebra->quiver();
        for (std::size_t v = 0; v < rad.size(); ++v) {
            FieldMatrix acc(p.dim(static_cast<int>(v)), 0, p.characteristic());
            for (int a : q.arrows_into(static_cast<int>(v)))
                acc = hstack(acc, p.arrow_map(a) * rad[q.arrow(a).source]);
            next.push_back(column_space(acc));
        }
        rad = std::move(next);
    }
    return sub_quotient(p, rad).quotient;
}

/// Transport a representation to a deeper truncation of the same presentation.
inline Rep with_algebra(const Rep& r, AlgebraPtr deeper) {
    if (deeper->quiver().num_vertices() != r.algebra()->quiver().num_vertices() ||
        deeper->quiver().num_arrows() != r.algebra()->quiver().num_arrows() ||
        deeper->characteristic() != r.characteristic() ||
        deeper->level() < r.algebra()->level())
        throw std::invalid_argument("with_algebra: incompatible target algebra");
    std::vector<FieldMatrix> maps;
    for (std::size_t a = 0; a < deeper->quiver().num_arrows(); ++a)
        maps.push_back(r.arrow_map(static_cast<int>(a)));
    return Rep(std::move(deeper), r.dims(), std::move(maps));
}

/// Dual representation over the opposite algebra (vector-space duality).
inline Rep dualize(const Rep& r, AlgebraPtr op) {
    const Quiver& q = r.algebra()->quiver();
    std::vector<FieldMatrix> maps(q.num_arrows(), FieldMatrix());
    for (std::size_t a = 0; a < q.num_arrows(); ++a)
        maps[a] = r.arrow_map(static_cast<int>(a)).transpose();
    return Rep(std::move(op), r.dims(), std::move(maps));
}

/// The indecomposable injective at i: dual of the opposite projective.
inline Rep injective_module(AlgebraPtr algebra, AlgebraPtr op, int i) {
    return dualize(projective_module(op, i).rep, algebra);
}

}  // namespace lenrep
