/* AR-quiver knitting: enumerate the indecomposables of a (representation-
 * finite) truncation by closing the seed set {projectives, injectives,
 * simples} under meshes.  Arrows into a non-projective vertex come from the
 * middle term of its almost split sequence; arrows into a projective come
 * from the radical summands.  Predecessor closure from the injectives reaches
 * every indecomposable when the algebra is representation-finite. */

#pragma once

#include <set>
#include <sstream>

#include "almost_split.hpp"

namespace lenrep {

struct ARQuiver {
    AlgebraPtr alg;
    std::vector<Rep> vertices;                 // canonical representatives
    std::vector<bool> projective, injective;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> arrows;  // (from, to) -> multiplicity
    std::vector<std::optional<std::size_t>> tau;                        // vertex -> tau(vertex)
    std::map<std::size_t, ShortExactSeq> meshes;                        // keyed by right-end vertex
    bool complete = true;       // every discovered vertex within the bound was expanded
    std::vector<std::size_t> boundary;  // discovered but not expanded (length bound or budget)

    std::size_t length(std::size_t v) const { return vertices[v].total_dim(); }
};

inline ARQuiver knit_ar_quiver(AlgebraPtr alg, std::size_t max_length, std::size_t budget = 10000) {
    AlgebraContext ctx = AlgebraContext::make(alg);
    ARQuiver q;
    q.alg = alg;

    auto find_vertex = [&](const Rep& r) -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < q.vertices.size(); ++i)
            if (q.vertices[i].dims() == r.dims() && indec_isomorphic(q.vertices[i], r))
                return i;
        return std::nullopt;
    };
    auto add_vertex = [&](const Rep& r) -> std::size_t {
        if (auto i = find_vertex(r)) return *i;
        q.vertices.push_back(r);
        q.projective.push_back(is_projective_indec(r, ctx));
        q.injective.push_back(is_injective_indec(r, ctx));
        q.tau.push_back(std::nullopt);
        return q.vertices.size() - 1;
    };

    for (const auto& p : ctx.projectives) add_vertex(p);
    for (const auto& i : ctx.injectives) add_vertex(i);
    for (std::size_t v = 0; v < alg->quiver().num_vertices(); ++v)
        add_vertex(simple_rep(alg, static_cast<int>(v)));

    std::set<std::size_t> expanded;
    bool budget_hit = false;
    for (;;) {
        // next unexpanded vertex within the length bound, smallest first
        std::optional<std::size_t> pick;
        for (std::size_t i = 0; i < q.vertices.size(); ++i) {
            if (expanded.count(i) || q.length(i) > max_length) continue;
            if (!pick || q.length(i) < q.length(*pick) ||
                (q.length(i) == q.length(*pick) && q.vertices[i].dims() < q.vertices[*pick].dims()))
                pick = i;
        }
        if (!pick) break;
        if (q.vertices.size() > budget) {
            budget_hit = true;
            break;
        }
        std::size_t v = *pick;
        expanded.insert(v);

        if (q.projective[v]) {
            SubspaceFamily rad = radical_family(q.vertices[v]);
            Rep radp = sub_quotient(q.vertices[v], rad).sub;
            for (const auto& piece : decompose(radp)) {
                std::size_t w = add_vertex(piece.piece);
                q.arrows[{w, v}] += piece.multiplicity;
            }
        } else {
            ShortExactSeq mesh = ar_sequence_ending_at(q.vertices[v], ctx);
            std::size_t left = add_vertex(mesh.left);
            q.tau[v] = left;
            for (const auto& piece : decompose(mesh.middle)) {
                std::size_t w = add_vertex(piece.piece);
                q.arrows[{w, v}] += piece.multiplicity;
            }
            q.meshes.emplace(v, std::move(mesh));
        }
    }

    for (std::size_t i = 0; i < q.vertices.size(); ++i)
        if (!expanded.count(i)) q.boundary.push_back(i);
    // without a budget break the only unexpanded vertices sit above the length bound
    q.complete = !budget_hit;
    return q;
}

/// Periods of the tau-orbits that stay inside the knitted quiver.
inline std::vector<std::size_t> stable_tau_periods(const ARQuiver& q) {
    std::vector<std::size_t> periods;
    for (std::size_t v = 0; v < q.vertices.size(); ++v) {
        if (!q.tau[v]) continue;
        std::size_t cur = v, steps = 0;
        bool cycles = false;
        for (std::size_t guard = 0; guard <= q.vertices.size(); ++guard) {
            if (!q.tau[cur]) break;
            cur = *q.tau[cur];
            ++steps;
            if (cur == v) {
                cycles = true;
                break;
            }
        }
        if (cycles) periods.push_back(steps);
    }
    return periods;
}

/// DOT rendering: one node per iso-class labeled by dimension vector, solid
/// arrows for irreducible maps, dashed arrows for the translation.
inline std::string ar_quiver_dot(const ARQuiver& q) {
    std::ostringstream os;
    os << "digraph ar_quiver {\n";
    os << "  rankdir=LR;\n";
    for (std::size_t v = 0; v < q.vertices.size(); ++v) {
        os << "  v" << v << " [label=\"(";
        for (std::size_t i = 0; i < q.vertices[v].dims().size(); ++i) {
            if (i) os << ",";
            os << q.vertices[v].dims()[i];
        }
        os << ")\"";
        if (q.projective[v] && q.injective[v])
            os << " shape=doubleoctagon";
        else if (q.projective[v])
            os << " shape=box";
        else if (q.injective[v])
            os << " shape=diamond";
        os << "];\n";
    }
    for (const auto& [edge, mult] : q.arrows) {
        os << "  v" << edge.first << " -> v" << edge.second;
        if (mult > 1) os << " [label=\"" << mult << "\"]";
        os << ";\n";
    }
    for (std::size_t v = 0; v < q.tau.size(); ++v)
        if (q.tau[v]) os << "  v" << v << " -> v" << *q.tau[v] << " [style=dashed, constraint=false];\n";
    os << "}\n";
    return os.str();
}

}  // namespace lenrep
