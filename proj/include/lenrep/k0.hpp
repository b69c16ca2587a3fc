/* The two Grothendieck groups at truncation scale: the free group on a
 * complete list of indecomposables, the epimorphism onto the free group on
 * simples via composition vectors, and the integer-lattice certificate that
 * almost split relation vectors [X] - [Y] + [Z] generate its kernel. */

#pragma once

#include "ext.hpp"
#include "int_matrix.hpp"

namespace lenrep {

struct RelationLattice {
    std::vector<Rep> indec_index;  // basis of the split Grothendieck group
    IntMatrix pi;                  // simples x indecomposables, columns = composition vectors
    IntMatrix kernel;              // saturated integer kernel basis of pi (columns)
    std::vector<std::vector<mpz_class>> ar_relations;

    std::optional<std::size_t> index_of(const Rep& r) const {
        for (std::size_t i = 0; i < indec_index.size(); ++i)
            if (indec_index[i].dims() == r.dims() && indec_isomorphic(indec_index[i], r)) return i;
        return std::nullopt;
    }
};

inline RelationLattice build_k0(const std::vector<Rep>& indecs) {
    RelationLattice lat;
    for (const auto& m : indecs) {
        if (m.is_zero() || !has_local_endomorphism_algebra(m))
            throw std::invalid_argument("build_k0: list contains a decomposable or zero entry");
        if (lat.index_of(m))
            throw std::invalid_argument("build_k0: duplicate isomorphism class in the index");
        lat.indec_index.push_back(m);
    }
    const std::size_t ns = indecs.empty() ? 0 : indecs.front().dims().size();
    lat.pi = IntMatrix(ns, lat.indec_index.size());
    for (std::size_t c = 0; c < lat.indec_index.size(); ++c) {
        auto cv = composition_vector(lat.indec_index[c]);
        for (std::size_t r = 0; r < ns; ++r) lat.pi(r, c) = static_cast<long>(cv[r]);
    }
    lat.kernel = integer_kernel(lat.pi);
    return lat;
}

/// The relation [left] - [middle] + [right] of a verified almost split
/// sequence, as a vector over the indecomposable index.
inline std::vector<mpz_class> ar_relation_vector(const ShortExactSeq& s, const RelationLattice& lat) {
    if (!s.almost_split.has_value() || !*s.almost_split)
        throw std::invalid_argument("ar_relation_vector: sequence is not verified almost split");
    std::vector<mpz_class> v(lat.indec_index.size(), 0);
    auto li = lat.index_of(s.left);
    auto ri = lat.index_of(s.right);
    if (!li || !ri) throw std::invalid_argument("ar_relation_vector: end term not in the index");
    v[*li] += 1;
    v[*ri] += 1;
    for (const auto& piece : decompose(s.middle)) {
        auto mi = lat.index_of(piece.piece);
        if (!mi) throw std::invalid_argument("ar_relation_vector: unindexed middle summand");
        v[*mi] -= static_cast<long>(piece.multiplicity);
    }
    // exactness: the relation lies in the kernel of pi
    auto img = lat.pi * v;
    for (const auto& x : img)
        if (x != 0) throw std::logic_error("ar_relation_vector: relation not in ker(pi)");
    return v;
}

struct GenerationCertificate {
    bool verdict;
    IntMatrix relation_coords;        // kernel-coordinates of the AR relations (columns)
    std::vector<mpz_class> snf_diag;  // elementary divisors of relation_coords
    // for each kernel basis vector: integer coefficients over the AR relations
    std::vector<std::vector<mpz_class>> kernel_combinations;
};

/// Do the stored AR relations generate ker(pi) as a sublattice?
inline GenerationCertificate check_generation(const RelationLattice& lat) {
    GenerationCertificate cert;
    const std::size_t r = lat.kernel.cols();
    cert.relation_coords = IntMatrix(r, lat.ar_relations.size());
    for (std::size_t c = 0; c < lat.ar_relations.size(); ++c) {
        auto coords = solve_integer(lat.kernel, lat.ar_relations[c]);
        if (!coords) throw std::logic_error("check_generation: AR relation outside the kernel lattice");
        for (std::size_t i = 0; i < r; ++i) cert.relation_coords(i, c) = (*coords)[i];
    }
    IntMatrix rel(lat.kernel.rows(), lat.ar_relations.size());
    for (std::size_t c = 0; c < lat.ar_relations.size(); ++c)
        for (std::size_t i = 0; i < lat.kernel.rows(); ++i) rel(i, c) = lat.ar_relations[c][i];
    cert.verdict = lattice_equal(lat.kernel, rel);

    auto snf = smith_normal_form(cert.relation_coords);
    const std::size_t nmin = std::min(cert.relation_coords.rows(), cert.relation_coords.cols());
    for (std::size_t i = 0; i < nmin; ++i) cert.snf_diag.push_back(snf.d(i, i));

    if (cert.verdict) {
        for (std::size_t i = 0; i < r; ++i) {
            std::vector<mpz_class> e(r, 0);
            e[i] = 1;
            auto combo = solve_integer(cert.relation_coords, e);
            if (!combo) throw std::logic_error("check_generation: verdict true but no integer combination");
            cert.kernel_combinations.push_back(*combo);
        }
    }
    return cert;
}

}  // namespace lenrep
