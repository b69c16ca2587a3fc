/* Structural probes for admissible presentations at truncation: corner
 * conditions, the two bimodule filtrations, the classification probe for
 * cyclic quivers, and the hereditary-order dimension pattern.
 *
 * "Mild" itself is not decided here; the probe checks the necessary corner
 * and shape conditions and reports dimension stabilization, which is all a
 * finite truncation can see. */

#pragma once

#include "decompose.hpp"
#include "int_matrix.hpp"

namespace lenrep {

struct AlgebraPresentation {
    Quiver quiver;
    std::vector<Relation> relations;
    fp_t characteristic = 2;
    bool declared_infinite = false;
};

inline AlgebraPtr build_at(const AlgebraPresentation& pres, unsigned level) {
    return make_algebra(pres.quiver, pres.relations, level, pres.characteristic);
}

inline AlgebraPresentation cycle_presentation(int n, fp_t p) {
    std::vector<std::string> verts;
    for (int i = 1; i <= n; ++i) verts.push_back(std::to_string(i));
    std::vector<std::tuple<std::string, std::string, std::string>> arrows;
    for (int i = 1; i <= n; ++i)
        arrows.emplace_back("a" + std::to_string(i), std::to_string(i), std::to_string(i % n + 1));
    return AlgebraPresentation{Quiver(verts, arrows), {}, p, true};
}

namespace detail {

/// A diagonal or off-diagonal corner as a coordinate subspace with products.
struct CornerSpace {
    std::vector<std::size_t> positions;  // algebra basis positions
    std::map<std::size_t, std::size_t> index_of;

    static CornerSpace make(const BoundAlgebra& a, int i, int j) {
        CornerSpace c;
        c.positions = a.corner_positions(i, j);
        for (std::size_t k = 0; k < c.positions.size(); ++k) c.index_of[c.positions[k]] = k;
        return c;
    }

    std::vector<fp_t> slice(const AlgElem& e) const {
        std::vector<fp_t> out(positions.size(), 0);
        for (std::size_t k = 0; k < positions.size(); ++k) out[k] = e[positions[k]];
        return out;
    }
};

/// The diagonal corner e_iAe_i as a standalone finite algebra.
inline FiniteAlgebra corner_algebra(const BoundAlgebra& a, int i) {
    CornerSpace c = CornerSpace::make(a, i, i);
    FiniteAlgebra f;
    f.p = a.characteristic();
    f.dim = c.positions.size();
    for (std::size_t x = 0; x < f.dim; ++x) {
        FieldMatrix l(f.dim, f.dim, f.p);
        for (std::size_t y = 0; y < f.dim; ++y) {
            AlgElem prod = a.product(c.positions[x], c.positions[y]);
            auto sl = c.slice(prod);
            for (std::size_t k = 0; k < f.dim; ++k) l(k, y) = sl[k];
        }
        f.left_mult.push_back(std::move(l));
    }
    f.unit.assign(f.dim, 0);
    f.unit[c.index_of.at(*a.basis_position(Path::trivial(i)))] = 1 % f.p;
    return f;
}

}  // namespace detail

struct CornerDiagonalReport {
    int vertex;
    std::size_t dim;
    bool commutative;
    bool local;
    bool one_generated;  // dim rad/rad^2 <= 1: a quotient of a power series ring in one variable
    bool pass() const { return commutative && local && one_generated; }
};

struct CornerOffDiagonalReport {
    int from, to;
    std::size_t dim;
    bool right_cyclic;  // over e_from A e_from
    bool left_cyclic;   // over e_to A e_to
    bool pass() const { return dim == 0 || right_cyclic || left_cyclic; }
};

struct CornerStructureReport {
    std::vector<CornerDiagonalReport> diagonal;
    std::vector<CornerOffDiagonalReport> off_diagonal;
    bool all_pass;
};

inline CornerStructureReport corner_structure_report(const AlgebraPresentation& pres, unsigned level) {
    if (level < 2) throw std::invalid_argument("corner_structure_report: level must be >= 2");
    AlgebraPtr ap = build_at(pres, level);
    const BoundAlgebra& a = *ap;
    const fp_t p = a.characteristic();
    const std::size_t nv = a.quiver().num_vertices();
    CornerStructureReport report;
    report.all_pass = true;

    std::vector<FiniteAlgebra> diag;
    std::vector<FieldMatrix> diag_rad;
    for (std::size_t i = 0; i < nv; ++i) {
        diag.push_back(detail::corner_algebra(a, static_cast<int>(i)));
        diag_rad.push_back(radical_basis(diag.back()));
    }

    for (std::size_t i = 0; i < nv; ++i) {
        const FiniteAlgebra& c = diag[i];
        const FieldMatrix& rad = diag_rad[i];
        CornerDiagonalReport r;
        r.vertex = static_cast<int>(i);
        r.dim = c.dim;
        r.commutative = c.is_commutative();
        r.local = (c.dim - rad.cols() == 1);
        // rad^2 inside the corner
        FieldMatrix rad2(c.dim, rad.cols() * rad.cols(), p);
        std::size_t col = 0;
        for (std::size_t x = 0; x < rad.cols(); ++x)
            for (std::size_t y = 0; y < rad.cols(); ++y) {
                auto prod = c.multiply(rad.column(x), rad.column(y));
                for (std::size_t k = 0; k < c.dim; ++k) rad2(k, col) = prod[k];
                ++col;
            }
        r.one_generated = rad.cols() - rank(rad2) <= 1;
        report.all_pass = report.all_pass && r.pass();
        report.diagonal.push_back(r);
    }

    for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = 0; j < nv; ++j) {
            if (i == j) continue;
            auto corner_ji = detail::CornerSpace::make(a, static_cast<int>(i), static_cast<int>(j));
            CornerOffDiagonalReport r;
            r.from = static_cast<int>(i);
            r.to = static_cast<int>(j);
            r.dim = corner_ji.positions.size();
            // cyclic over a local ring <=> top has dimension <= 1 (Nakayama)
            auto top_codim = [&](bool right) {
                const FieldMatrix& rad = right ? diag_rad[i] : diag_rad[j];
                auto dpos = a.corner_positions(right ? static_cast<int>(i) : static_cast<int>(j),
                                               right ? static_cast<int>(i) : static_cast<int>(j));
                FieldMatrix span(r.dim, corner_ji.positions.size() * rad.cols(), p);
                std::size_t col2 = 0;
                for (std::size_t m = 0; m < corner_ji.positions.size(); ++m)
                    for (std::size_t t = 0; t < rad.cols(); ++t) {
                        // radical element of the diagonal corner, as an algebra element
                        AlgElem relem = a.zero_elem();
                        auto radcol = rad.column(t);
                        for (std::size_t k = 0; k < dpos.size(); ++k) relem[dpos[k]] = radcol[k];
                        AlgElem melem = a.zero_elem();
                        melem[corner_ji.positions[m]] = 1 % p;
                        AlgElem prod = right ? a.multiply(melem, relem) : a.multiply(relem, melem);
                        auto sl = corner_ji.slice(prod);
                        for (std::size_t k = 0; k < r.dim; ++k) span(k, col2) = sl[k];
                        ++col2;
                    }
                return r.dim - rank(span);
            };
            r.right_cyclic = r.dim == 0 || top_codim(true) <= 1;
            r.left_cyclic = r.dim == 0 || top_codim(false) <= 1;
            report.all_pass = report.all_pass && r.pass();
            report.off_diagonal.push_back(r);
        }
    return report;
}

struct FiltrationStep {
    unsigned index;
    std::size_t radical_filtration_dim;  // (e_jAe_i)^{>= index}
    std::size_t adic_dim;                // e_j R^index e_i
    bool adic_term_in_radical_chain;
    std::size_t quotient_dim;  // consecutive radical-filtration quotient
};

struct FiltrationReport {
    int from, to;
    std::vector<FiltrationStep> steps;
    bool same_topology;      // every R-adic term appears in the radical chain and vice versa
    bool quotients_at_most_one;
};

inline FiltrationReport filtration_comparison(const AlgebraPresentation& pres, unsigned level,
                                              int i, int j) {
    if (level < 2) throw std::invalid_argument("filtration_comparison: level must be >= 2");
    AlgebraPtr ap = build_at(pres, level);
    const BoundAlgebra& a = *ap;
    const fp_t p = a.characteristic();
    a.require_vertex(i);
    a.require_vertex(j);
    auto corner_ji = detail::CornerSpace::make(a, i, j);
    const std::size_t cd = corner_ji.positions.size();

    // powers of the diagonal corner radicals, as algebra-coordinate subspaces
    auto corner_rad_powers = [&](int v) {
        std::vector<FieldMatrix> powers;  // powers[s] spans (e_vRe_v)^s in A coordinates
        auto dpos = a.corner_positions(v, v);
        FiniteAlgebra c = detail::corner_algebra(a, v);
        FieldMatrix rad = radical_basis(c);
        FieldMatrix unit_span(a.dim(), 1, p);
        unit_span(*a.basis_position(Path::trivial(v)), 0) = 1 % p;
        powers.push_back(unit_span);  // s = 0: the idempotent alone (acts as unit on the corner)
        FieldMatrix cur(a.dim(), rad.cols(), p);
        for (std::size_t t = 0; t < rad.cols(); ++t)
            for (std::size_t k = 0; k < dpos.size(); ++k) cur(dpos[k], t) = rad(k, t);
        while (cur.cols() > 0) {
            powers.push_back(cur);
            FieldMatrix next(a.dim(), cur.cols() * rad.cols(), p);
            std::size_t col = 0;
            for (std::size_t x = 0; x < cur.cols(); ++x)
                for (std::size_t t = 0; t < rad.cols(); ++t) {
                    AlgElem u(a.dim(), 0), r(a.dim(), 0);
                    for (std::size_t k = 0; k < a.dim(); ++k) u[k] = cur(k, x);
                    auto radcol = rad.column(t);
                    for (std::size_t k = 0; k < dpos.size(); ++k) r[dpos[k]] = radcol[k];
                    AlgElem prod = a.multiply(u, r);
                    for (std::size_t k = 0; k < a.dim(); ++k) next(k, col) = prod[k];
                    ++col;
                }
            cur = column_space(next);
        }
        powers.push_back(FieldMatrix(a.dim(), 0, p));  // eventually zero
        return powers;
    };
    auto rpow_i = corner_rad_powers(i);
    auto rpow_j = corner_rad_powers(j);

    // (e_jAe_i)^{>= m} = sum_{r+s=m} rad_j^s . corner . rad_i^r, in corner coordinates
    auto bimodule_term = [&](unsigned m) {
        FieldMatrix acc(cd, 0, p);
        for (unsigned s = 0; s <= m; ++s) {
            unsigned r = m - s;
            const FieldMatrix& left = rpow_j[std::min<std::size_t>(s, rpow_j.size() - 1)];
            const FieldMatrix& right = rpow_i[std::min<std::size_t>(r, rpow_i.size() - 1)];
            for (std::size_t lx = 0; lx < left.cols(); ++lx)
                for (std::size_t rx = 0; rx < right.cols(); ++rx)
                    for (std::size_t mx = 0; mx < cd; ++mx) {
                        AlgElem le(a.dim(), 0), re(a.dim(), 0), me(a.dim(), 0);
                        for (std::size_t k = 0; k < a.dim(); ++k) {
                            le[k] = left(k, lx);
                            re[k] = right(k, rx);
                        }
                        me[corner_ji.positions[mx]] = 1 % p;
                        AlgElem prod = a.multiply(a.multiply(le, me), re);
                        auto sl = corner_ji.slice(prod);
                        FieldMatrix colm(cd, 1, p);
                        for (std::size_t k = 0; k < cd; ++k) colm(k, 0) = sl[k];
                        acc = hstack(acc, colm);
                    }
        }
        return column_space(acc);
    };

    // e_j R^m e_i: corner block of the honest radical power
    auto adic_term = [&](unsigned m) {
        FieldMatrix span = radical_power_span(a, m);
        FieldMatrix out(cd, span.cols(), p);
        for (std::size_t c = 0; c < span.cols(); ++c)
            for (std::size_t k = 0; k < cd; ++k) out(k, c) = span(corner_ji.positions[k], c);
        return column_space(out);
    };

    FiltrationReport report;
    report.from = i;
    report.to = j;
    report.same_topology = true;
    report.quotients_at_most_one = true;
    std::vector<FieldMatrix> radical_chain;
    for (unsigned m = 0; m <= level; ++m) radical_chain.push_back(bimodule_term(m));
    for (unsigned m = 0; m <= level; ++m) {
        FiltrationStep step;
        step.index = m;
        step.radical_filtration_dim = radical_chain[m].cols();
        FieldMatrix adic = adic_term(m);
        step.adic_dim = adic.cols();
        step.adic_term_in_radical_chain = false;
        for (const auto& term : radical_chain)
            if (term.cols() == adic.cols() && span_equal(term, adic)) {
                step.adic_term_in_radical_chain = true;
                break;
            }
        step.quotient_dim = m < level ? radical_chain[m].cols() - radical_chain[m + 1].cols()
                                      : radical_chain[m].cols();
        report.same_topology = report.same_topology && step.adic_term_in_radical_chain;
        report.quotients_at_most_one = report.quotients_at_most_one && step.quotient_dim <= 1;
        report.steps.push_back(step);
    }
    return report;
}

struct MildVerdict {
    enum Kind { cycle_zn, violates, finite_dimensional, inconclusive } kind;
    int n = 0;               // for cycle_zn
    std::string condition;   // for violates / inconclusive
    std::string witness;
    std::size_t dim_at_level = 0, dim_at_next = 0;

    std::string kind_name() const {
        switch (kind) {
            case cycle_zn: return "cycle_Zn(" + std::to_string(n) + ")";
            case violates: return "violates(" + condition + ")";
            case finite_dimensional: return "finite_dimensional";
            default: return "inconclusive";
        }
    }
};

/// Necessary-condition probe for the classification of admissible, basic,
/// infinite-dimensional, mild algebras at a finite truncation level.
inline MildVerdict mild_classification_probe(const AlgebraPresentation& pres, unsigned level) {
    if (level < 3) throw std::invalid_argument("mild_classification_probe: level must be >= 3");
    MildVerdict v{};
    AlgebraPtr a = build_at(pres, level);
    AlgebraPtr next = build_at(pres, level + 1);
    v.dim_at_level = a->dim();
    v.dim_at_next = next->dim();
    if (a->dim() == next->dim()) {
        v.kind = MildVerdict::finite_dimensional;
        return v;
    }

    auto corners = corner_structure_report(pres, level);
    for (const auto& d : corners.diagonal)
        if (!d.pass()) {
            v.kind = MildVerdict::violates;
            v.condition = !d.commutative      ? "corner not commutative"
                          : !d.one_generated ? "corner not one-generated"
                                             : "corner not local";
            v.witness = "vertex " + pres.quiver.vertex_label(d.vertex);
            return v;
        }
    for (const auto& o : corners.off_diagonal)
        if (!o.pass()) {
            v.kind = MildVerdict::violates;
            v.condition = "corner not cyclic on either side";
            v.witness = pres.quiver.vertex_label(o.from) + " -> " + pres.quiver.vertex_label(o.to);
            return v;
        }

    const Quiver& q = pres.quiver;
    for (std::size_t i = 0; i < q.num_vertices(); ++i)
        for (std::size_t j = 0; j < q.num_vertices(); ++j)
            if (q.arrow_multiplicity(static_cast<int>(i), static_cast<int>(j)) > 1) {
                v.kind = MildVerdict::violates;
                v.condition = "arrow space dimension exceeds 1";
                v.witness = q.vertex_label(static_cast<int>(i)) + " -> " + q.vertex_label(static_cast<int>(j));
                return v;
            }

    // single directed cycle through all vertices
    bool cycle = q.num_arrows() == q.num_vertices();
    for (std::size_t i = 0; cycle && i < q.num_vertices(); ++i)
        cycle = q.arrows_from(static_cast<int>(i)).size() == 1 &&
                q.arrows_into(static_cast<int>(i)).size() == 1;
    if (cycle) {
        std::vector<bool> seen(q.num_vertices(), false);
        int at = 0;
        for (std::size_t step = 0; step < q.num_vertices(); ++step) {
            seen[at] = true;
            at = q.arrow(q.arrows_from(at)[0]).target;
        }
        for (bool s : seen) cycle = cycle && s;
        cycle = cycle && at == 0;
    }
    if (!cycle) {
        v.kind = MildVerdict::violates;
        v.condition = "quiver is not a single cycle";
        return v;
    }

    for (const auto& r : pres.relations)
        if (!a->is_zero_elem(a->reduce_relation(r))) {
            v.kind = MildVerdict::inconclusive;
            v.condition = "relations are effective at this level";
            return v;
        }
    v.kind = MildVerdict::cycle_zn;
    v.n = static_cast<int>(q.num_vertices());
    return v;
}

struct HereditaryOrderView {
    int n;
    unsigned level;
    std::vector<std::string> symbol;  // "o" on and below the diagonal, "m" above
    IntMatrix predicted;              // predicted(j, i) = dim e_{j+1} A e_{i+1}
    IntMatrix actual;
    bool match;
};

/// Match the cycle truncation's corner dimensions against the valuation
/// pattern of the hereditary order: paths i -> j have lengths congruent to
/// j - i mod n, one per full turn below the level.
inline HereditaryOrderView hereditary_order_view(int n, unsigned level, fp_t p = 5) {
    if (n < 1) throw std::invalid_argument("hereditary_order_view: n must be >= 1");
    HereditaryOrderView view;
    view.n = n;
    view.level = level;
    AlgebraPtr a = build_at(cycle_presentation(n, p), level);
    view.predicted = IntMatrix(n, n);
    view.actual = IntMatrix(n, n);
    view.match = true;
    for (int j = 0; j < n; ++j) {
        std::string row;
        for (int i = 0; i < n; ++i) {
            row += (j >= i ? 'o' : 'm');
            if (i + 1 < n) row += ' ';
            unsigned d = static_cast<unsigned>(((j - i) % n + n) % n);
            long predicted = d < level ? static_cast<long>((level - 1 - d) / n) + 1 : 0;
            view.predicted(j, i) = predicted;
            view.actual(j, i) = static_cast<long>(a->corner_positions(i, j).size());
            if (view.predicted(j, i) != view.actual(j, i)) view.match = false;
        }
        view.symbol.push_back(row);
    }
    return view;
}

}  // namespace lenrep
