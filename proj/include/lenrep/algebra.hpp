/* Finite-dimensional truncations A_l = k<<Q>>/(I + R^l) of complete path algebras.
 *
 * The basis is computed as a quotient: span of all paths of length < l modulo
 * the subspace spanned by the truncations of a*r*b (r a relation generator,
 * a and b paths).  Row-reducing that subspace with columns in descending
 * degree-lex order yields a rewriting of each pivot path as a combination of
 * strictly smaller non-pivot paths, which then serve as the residue basis.
 * No completeness assumption on the relation set is needed.
 */

#pragma once

#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>

#include "fp_matrix.hpp"
#include "quiver.hpp"

namespace lenrep {

class BoundAlgebra;
using AlgebraPtr = std::shared_ptr<const BoundAlgebra>;

/// Coordinates of an algebra element over the residue-path basis.
using AlgElem = std::vector<fp_t>;

class BoundAlgebra {
public:
    BoundAlgebra(Quiver quiver, std::vector<Relation> relations, unsigned level, fp_t p,
                 std::size_t path_budget = 200000)
        : quiver_(std::move(quiver)), relations_(std::move(relations)), level_(level), p_(p) {
        if (level < 1) throw std::invalid_argument("BoundAlgebra: truncation level must be >= 1");
        if (!is_prime(p)) throw std::invalid_argument("BoundAlgebra: characteristic must be prime");
        if (quiver_.num_vertices() == 0) throw std::invalid_argument("BoundAlgebra: empty quiver");
        enumerate_paths(path_budget);
        build_basis();
        for (std::size_t r = 0; r < relations_.size(); ++r)
            if (!is_zero_elem(reduce_relation(relations_[r])))
                throw std::logic_error("BoundAlgebra: relation " + std::to_string(r) + " did not reduce to zero");
    }

    const Quiver& quiver() const { return quiver_; }
    const std::vector<Relation>& relations() const { return relations_; }
    unsigned level() const { return level_; }
    fp_t characteristic() const { return p_; }

    std::size_t dim() const { return basis_.size(); }
    const Path& basis_path(std::size_t k) const { return all_paths_[basis_[k]]; }

    /// Position of a path's residue in the basis, or nullopt if it rewrites.
    std::optional<std::size_t> basis_position(const Path& p) const {
        auto idx = path_index(p);
        if (!idx) return std::nullopt;
        std::size_t bp = basis_pos_[*idx];
        if (bp == npos) return std::nullopt;
        return bp;
    }

    AlgElem zero_elem() const { return AlgElem(dim(), 0); }

    bool is_zero_elem(const AlgElem& e) const {
        for (fp_t v : e)
            if (v != 0) return false;
        return true;
    }

    AlgElem unit() const {
        AlgElem e = zero_elem();
        for (std::size_t v = 0; v < quiver_.num_vertices(); ++v) {
            auto pos = basis_position(Path::trivial(static_cast<int>(v)));
            e[*pos] = fp_add(e[*pos], 1 % p_, p_);
        }
        return e;
    }

    AlgElem idempotent(int vertex) const {
        AlgElem e = zero_elem();
        e[*basis_position(Path::trivial(vertex))] = 1 % p_;
        return e;
    }

    AlgElem arrow_elem(int arrow) const {
        Path p = Path::from_arrows(quiver_, {arrow});
        return reduce_path(p);
    }

    /// Residue of a path: zero if its length reaches the level, otherwise its
    /// rewriting over the basis.
    AlgElem reduce_path(const Path& p) const {
        AlgElem out = zero_elem();
        if (p.length() >= level_) return out;
        auto idx = path_index(p);
        if (!idx) throw std::invalid_argument("reduce_path: path not over this quiver");
        accumulate_reduction(*idx, 1 % p_, out);
        return out;
    }

    AlgElem reduce_relation(const Relation& r) const {
        AlgElem out = zero_elem();
        for (const auto& [c, path] : r.terms) {
            if (path.length() >= level_) continue;
            auto idx = path_index(path);
            if (!idx) throw std::invalid_argument("reduce_relation: path not over this quiver");
            accumulate_reduction(*idx, c, out);
        }
        return out;
    }

    /// Product of two basis elements, as coordinates.
    AlgElem product(std::size_t i, std::size_t j) const {
        AlgElem out = zero_elem();
        accumulate_product(i, j, 1 % p_, out);
        return out;
    }

    AlgElem multiply(const AlgElem& u, const AlgElem& v) const {
        AlgElem out = zero_elem();
        for (std::size_t i = 0; i < dim(); ++i) {
            if (u[i] == 0) continue;
            for (std::size_t j = 0; j < dim(); ++j) {
                if (v[j] == 0) continue;
                accumulate_product(i, j, fp_mul(u[i], v[j], p_), out);
            }
        }
        return out;
    }

    /// Exhaustive associativity check over basis triples (desk scale only).
    bool verify_associativity() const {
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < dim(); ++j) {
                AlgElem ij = product(i, j);
                for (std::size_t k = 0; k < dim(); ++k) {
                    AlgElem jk = product(j, k);
                    AlgElem left = zero_elem(), right = zero_elem();
                    for (std::size_t t = 0; t < dim(); ++t) {
                        if (ij[t] != 0) accumulate_product(t, k, ij[t], left);
                        if (jk[t] != 0) accumulate_product(i, t, jk[t], right);
                    }
                    if (left != right) return false;
                }
            }
        return true;
    }

    /// Basis positions of residue paths from vertex i to vertex j (e_j A e_i).
    std::vector<std::size_t> corner_positions(int i, int j) const {
        require_vertex(i);
        require_vertex(j);
        std::vector<std::size_t> out;
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            const Path& p = basis_path(k);
            if (p.source == i && p.target == j) out.push_back(k);
        }
        return out;
    }

    /// Basis positions of residue paths of length >= m (the R^m window).
    std::vector<std::size_t> radical_power_positions(unsigned m) const {
        std::vector<std::size_t> out;
        for (std::size_t k = 0; k < basis_.size(); ++k)
            if (basis_path(k).length() >= m) out.push_back(k);
        return out;
    }

    void require_vertex(int v) const {
        if (v < 0 || static_cast<std::size_t>(v) >= quiver_.num_vertices())
            throw std::invalid_argument("unknown vertex index " + std::to_string(v));
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::optional<std::size_t> path_index(const Path& p) const {
        std::vector<int> key = encode(p);
        auto it = path_lookup_.find(key);
        if (it == path_lookup_.end()) return std::nullopt;
        return it->second;
    }

    static std::vector<int> encode(const Path& p) {
        std::vector<int> key;
        key.reserve(p.arrows.size() + 1);
        key.push_back(p.source);
        key.insert(key.end(), p.arrows.begin(), p.arrows.end());
        return key;
    }

    void enumerate_paths(std::size_t budget) {
        for (std::size_t v = 0; v < quiver_.num_vertices(); ++v)
            all_paths_.push_back(Path::trivial(static_cast<int>(v)));
        std::size_t layer_begin = 0, layer_end = all_paths_.size();
        for (unsigned len = 1; len < level_; ++len) {
            for (std::size_t k = layer_begin; k < layer_end; ++k) {
                Path base = all_paths_[k];
                for (int a : quiver_.arrows_from(base.target)) {
                    Path ext = base;
                    ext.arrows.push_back(a);
                    ext.target = quiver_.arrow(a).target;
                    all_paths_.push_back(std::move(ext));
                    if (all_paths_.size() > budget)
                        throw std::runtime_error("BoundAlgebra: path budget exceeded; lower the level");
                }
            }
            layer_begin = layer_end;
            layer_end = all_paths_.size();
        }
        std::sort(all_paths_.begin(), all_paths_.end(), deglex_less);
        for (std::size_t k = 0; k < all_paths_.size(); ++k) path_lookup_[encode(all_paths_[k])] = k;
    }

    void build_basis() {
        const std::size_t n = all_paths_.size();
        // rows of the ideal slice: truncations of a * r * b = (traverse b, r, a)
        std::vector<std::vector<fp_t>> rows;
        for (const auto& rel : relations_) {
            std::size_t minlen = rel.min_length();
            for (const auto& b : all_paths_) {
                if (b.target != rel.source()) continue;
                if (b.length() + minlen >= level_) continue;
                for (const auto& a : all_paths_) {
                    if (a.source != rel.target()) continue;
                    if (b.length() + minlen + a.length() >= level_) continue;
                    std::vector<fp_t> row(n, 0);
                    bool nonzero = false;
                    for (const auto& [c, t] : rel.terms) {
                        if (b.length() + t.length() + a.length() >= level_) continue;
                        Path full = follow(follow(b, t), a);
                        std::size_t idx = *path_index(full);
                        row[idx] = fp_add(row[idx], c, p_);
                        nonzero = true;
                    }
                    if (nonzero) rows.push_back(std::move(row));
                }
            }
        }

        // columns in descending deglex so pivots are the largest paths
        FieldMatrix w(rows.size(), n, p_);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < n; ++j) w(i, j) = rows[i][n - 1 - j];
        auto rr = rref(w);

        std::vector<bool> pivot(n, false);
        for (auto c : rr.pivots) pivot[n - 1 - c] = true;

        basis_pos_.assign(n, npos);
        for (std::size_t k = 0; k < n; ++k)
            if (!pivot[k]) {
                basis_pos_[k] = basis_.size();
                basis_.push_back(k);
            }

        // pivot path -> combination of (smaller) basis paths
        for (std::size_t r = 0; r < rr.pivots.size(); ++r) {
            std::size_t pidx = n - 1 - rr.pivots[r];
            AlgElem red(basis_.size(), 0);
            for (std::size_t c = 0; c < n; ++c) {
                if (c == rr.pivots[r]) continue;
                fp_t v = rr.reduced(r, c);
                if (v == 0) continue;
                std::size_t idx = n - 1 - c;
                red[basis_pos_[idx]] = fp_neg(v, p_);
            }
            rewrite_[pidx] = std::move(red);
        }
    }

    void accumulate_reduction(std::size_t path_idx, fp_t coeff, AlgElem& out) const {
        std::size_t bp = basis_pos_[path_idx];
        if (bp != npos) {
            out[bp] = fp_add(out[bp], coeff, p_);
            return;
        }
        const AlgElem& red = rewrite_.at(path_idx);
        for (std::size_t k = 0; k < red.size(); ++k)
            if (red[k] != 0) out[k] = fp_add(out[k], fp_mul(coeff, red[k], p_), p_);
    }

    // out += coeff * (basis_i * basis_j), i.e. traverse path j, then path i
    void accumulate_product(std::size_t i, std::size_t j, fp_t coeff, AlgElem& out) const {
        const Path& u = basis_path(i);
        const Path& v = basis_path(j);
        if (v.target != u.source) return;
        if (v.length() + u.length() >= level_) return;
        Path prod = follow(v, u);
        accumulate_reduction(*path_index(prod), coeff, out);
    }

    Quiver quiver_;
    std::vector<Relation> relations_;
    unsigned level_;
    fp_t p_;

    std::vector<Path> all_paths_;                 // ascending deglex
    std::map<std::vector<int>, std::size_t> path_lookup_;
    std::vector<std::size_t> basis_;              // indices into all_paths_
    std::vector<std::size_t> basis_pos_;          // path index -> basis position or npos
    std::map<std::size_t, AlgElem> rewrite_;      // pivot path index -> basis coordinates
};

inline AlgebraPtr make_algebra(Quiver q, std::vector<Relation> rels, unsigned level, fp_t p) {
    return std::make_shared<const BoundAlgebra>(std::move(q), std::move(rels), level, p);
}

/// The opposite algebra: reversed arrows, reversed relation paths, same level.
inline AlgebraPtr opposite(const BoundAlgebra& a) {
    Quiver qop = a.quiver().opposite();
    std::vector<Relation> rels;
    for (const auto& r : a.relations()) {
        std::vector<std::pair<long long, Path>> terms;
        for (const auto& [c, p] : r.terms) {
            std::vector<int> rev(p.arrows.rbegin(), p.arrows.rend());
            terms.emplace_back(static_cast<long long>(c), Path::from_arrows(qop, rev));
        }
        rels.push_back(Relation::make(std::move(terms), a.characteristic()));
    }
    return make_algebra(std::move(qop), std::move(rels), a.level(), a.characteristic());
}

/// Image of a residue-basis element of a under the canonical anti-isomorphism
/// a -> a^op (path reversal), as coordinates over the basis of op.
inline AlgElem to_opposite(const BoundAlgebra& a, const BoundAlgebra& op, const AlgElem& e) {
    AlgElem out = op.zero_elem();
    for (std::size_t k = 0; k < a.dim(); ++k) {
        if (e[k] == 0) continue;
        const Path& p = a.basis_path(k);
        std::vector<int> rev(p.arrows.rbegin(), p.arrows.rend());
        Path q = rev.empty() ? Path::trivial(p.source) : Path::from_arrows(op.quiver(), rev);
        AlgElem red = op.reduce_path(q);
        for (std::size_t t = 0; t < op.dim(); ++t)
            out[t] = fp_add(out[t], fp_mul(e[k], red[t], a.characteristic()), a.characteristic());
    }
    return out;
}

struct Corner {
    int from = 0, to = 0;                       // paths from -> to, i.e. e_to A e_from
    std::vector<std::size_t> basis_positions;   // into the algebra basis
    // action matrices over the corner coordinates, one per diagonal-corner basis element
    std::vector<FieldMatrix> right_action;      // m -> m * c,  c in e_from A e_from
    std::vector<FieldMatrix> left_action;       // m -> c * m,  c in e_to A e_to
};

inline Corner corner(const BoundAlgebra& a, int i, int j) {
    a.require_vertex(i);
    a.require_vertex(j);
    Corner c;
    c.from = i;
    c.to = j;
    c.basis_positions = a.corner_positions(i, j);
    auto diag_i = a.corner_positions(i, i);
    auto diag_j = a.corner_positions(j, j);
    const fp_t p = a.characteristic();
    auto action = [&](std::size_t g, bool left) {
        FieldMatrix m(c.basis_positions.size(), c.basis_positions.size(), p);
        for (std::size_t col = 0; col < c.basis_positions.size(); ++col) {
            AlgElem prod = left ? a.product(g, c.basis_positions[col])
                                : a.product(c.basis_positions[col], g);
            for (std::size_t row = 0; row < c.basis_positions.size(); ++row)
                m(row, col) = prod[c.basis_positions[row]];
        }
        return m;
    };
    for (auto g : diag_i) c.right_action.push_back(action(g, false));
    for (auto g : diag_j) c.left_action.push_back(action(g, true));
    return c;
}

/// Honest span of R^m as a coordinate subspace (iterated products), for use
/// where relations may rewrite lengths.  Columns span R^m inside A.
inline FieldMatrix radical_power_span(const BoundAlgebra& a, unsigned m) {
    const fp_t p = a.characteristic();
    const std::size_t d = a.dim();
    // R^1 = span of positive-length residue paths
    auto pos = a.radical_power_positions(1);
    FieldMatrix rad(d, pos.size(), p);
    for (std::size_t k = 0; k < pos.size(); ++k) rad(pos[k], k) = 1 % p;
    if (m == 0) {
        FieldMatrix full(d, d, p);
        for (std::size_t k = 0; k < d; ++k) full(k, k) = 1 % p;
        return full;
    }
    FieldMatrix cur = rad;
    for (unsigned step = 1; step < m; ++step) {
        std::vector<FieldMatrix> cols;
        FieldMatrix next(d, cur.cols() * pos.size(), p);
        std::size_t cc = 0;
        for (std::size_t j = 0; j < cur.cols(); ++j) {
            AlgElem u(d, 0);
            for (std::size_t t = 0; t < d; ++t) u[t] = cur(t, j);
            for (std::size_t k = 0; k < pos.size(); ++k) {
                AlgElem g(d, 0);
                g[pos[k]] = 1 % p;
                AlgElem prod = a.multiply(u, g);
                for (std::size_t t = 0; t < d; ++t) next(t, cc) = prod[t];
                ++cc;
            }
        }
        cur = column_space(next);
        if (cur.cols() == 0) break;
    }
    return cur;
}

}  // namespace lenrep
