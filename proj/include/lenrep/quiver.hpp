/* Quivers, paths and relations.
 *
 * Paths store their arrows in traversal order: arrows[0] leaves the source,
 * arrows[k+1] starts where arrows[k] ends.  The algebra product u*v means
 * "first traverse v, then u", so evaluating a path on a representation
 * multiplies the arrow matrices in reverse traversal order.
 */

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fp_matrix.hpp"

namespace lenrep {

struct Arrow {
    std::string name;
    int source;
    int target;
};

class Quiver {
public:
    Quiver() = default;

    Quiver(std::vector<std::string> vertices, std::vector<std::tuple<std::string, std::string, std::string>> arrows) {
        for (const auto& v : vertices) {
            if (vertex_index_.count(v)) throw std::invalid_argument("Quiver: duplicate vertex label " + v);
            vertex_index_[v] = static_cast<int>(vertices_.size());
            vertices_.push_back(v);
        }
        for (const auto& [name, from, to] : arrows) add_arrow(name, from, to);
    }

    void add_arrow(const std::string& name, const std::string& from, const std::string& to) {
        if (arrow_index_.count(name)) throw std::invalid_argument("Quiver: duplicate arrow name " + name);
        auto fi = vertex_index_.find(from);
        auto ti = vertex_index_.find(to);
        if (fi == vertex_index_.end()) throw std::invalid_argument("Quiver: unknown vertex " + from);
        if (ti == vertex_index_.end()) throw std::invalid_argument("Quiver: unknown vertex " + to);
        arrow_index_[name] = static_cast<int>(arrows_.size());
        arrows_.push_back(Arrow{name, fi->second, ti->second});
    }

    std::size_t num_vertices() const { return vertices_.size(); }
    std::size_t num_arrows() const { return arrows_.size(); }
    const std::vector<std::string>& vertex_labels() const { return vertices_; }
    const std::string& vertex_label(int v) const { return vertices_.at(v); }
    const Arrow& arrow(int a) const { return arrows_.at(a); }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    int vertex_index(const std::string& label) const {
        auto it = vertex_index_.find(label);
        if (it == vertex_index_.end()) throw std::invalid_argument("Quiver: unknown vertex " + label);
        return it->second;
    }
    int arrow_index(const std::string& name) const {
        auto it = arrow_index_.find(name);
        if (it == arrow_index_.end()) throw std::invalid_argument("Quiver: unknown arrow " + name);
        return it->second;
    }

    std::vector<int> arrows_from(int v) const {
        std::vector<int> out;
        for (std::size_t a = 0; a < arrows_.size(); ++a)
            if (arrows_[a].source == v) out.push_back(static_cast<int>(a));
        return out;
    }
    std::vector<int> arrows_into(int v) const {
        std::vector<int> out;
        for (std::size_t a = 0; a < arrows_.size(); ++a)
            if (arrows_[a].target == v) out.push_back(static_cast<int>(a));
        return out;
    }

    /// Arrow count i -> j; equals dim e_j(R/R^2)e_i for an admissible presentation.
    std::size_t arrow_multiplicity(int i, int j) const {
        std::size_t n = 0;
        for (const auto& a : arrows_)
            if (a.source == i && a.target == j) ++n;
        return n;
    }

    /// Same vertex set, every arrow reversed (names kept).
    Quiver opposite() const {
        Quiver q;
        q.vertices_ = vertices_;
        q.vertex_index_ = vertex_index_;
        for (const auto& a : arrows_) {
            q.arrow_index_[a.name] = static_cast<int>(q.arrows_.size());
            q.arrows_.push_back(Arrow{a.name, a.target, a.source});
        }
        return q;
    }

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::map<std::string, int> vertex_index_;
    std::map<std::string, int> arrow_index_;
};

struct Path {
    int source = 0;
    int target = 0;
    std::vector<int> arrows;  // traversal order

    std::size_t length() const { return arrows.size(); }

    static Path trivial(int vertex) { return Path{vertex, vertex, {}}; }

    static Path from_arrows(const Quiver& q, const std::vector<int>& arrow_ids) {
        if (arrow_ids.empty()) throw std::invalid_argument("Path::from_arrows: empty; use trivial(v)");
        Path p;
        p.source = q.arrow(arrow_ids.front()).source;
        int at = p.source;
        for (int a : arrow_ids) {
            if (q.arrow(a).source != at)
                throw std::invalid_argument("Path: arrows do not compose at '" + q.arrow(a).name + "'");
            at = q.arrow(a).target;
        }
        p.target = at;
        p.arrows = arrow_ids;
        return p;
    }

    static Path from_names(const Quiver& q, const std::vector<std::string>& names) {
        std::vector<int> ids;
        ids.reserve(names.size());
        for (const auto& n : names) ids.push_back(q.arrow_index(n));
        return from_arrows(q, ids);
    }

    bool operator==(const Path& o) const {
        return source == o.source && target == o.target && arrows == o.arrows;
    }
};

/// Traverse p, then q (requires p.target == q.source).
inline Path follow(const Path& p, const Path& q) {
    if (p.target != q.source) throw std::invalid_argument("follow: paths do not compose");
    Path r;
    r.source = p.source;
    r.target = q.target;
    r.arrows = p.arrows;
    r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
    return r;
}

/// Degree-lexicographic order: by length, then arrow sequence, then base vertex.
inline bool deglex_less(const Path& a, const Path& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    if (a.arrows != b.arrows) return a.arrows < b.arrows;
    return a.source < b.source;
}

/// Formal F_p-combination of parallel paths of length >= 2.
struct Relation {
    std::vector<std::pair<fp_t, Path>> terms;

    static Relation make(std::vector<std::pair<long long, Path>> raw, fp_t p) {
        Relation r;
        for (auto& [c, path] : raw) {
            if (path.length() < 2)
                throw std::invalid_argument("Relation: terms must have length >= 2");
            fp_t cc = fp_normalize(c, p);
            if (cc != 0) r.terms.emplace_back(cc, std::move(path));
        }
        if (r.terms.empty()) throw std::invalid_argument("Relation: all terms vanish mod p");
        for (std::size_t k = 1; k < r.terms.size(); ++k)
            if (r.terms[k].second.source != r.terms[0].second.source ||
                r.terms[k].second.target != r.terms[0].second.target)
                throw std::invalid_argument("Relation: terms are not parallel paths");
        return r;
    }

    int source() const { return terms.front().second.source; }
    int target() const { return terms.front().second.target; }
    std::size_t min_length() const {
        std::size_t m = terms.front().second.length();
        for (const auto& [c, p] : terms) m = std::min(m, p.length());
        return m;
    }
};

}  // namespace lenrep
