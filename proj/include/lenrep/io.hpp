/* JSON file formats: algebra specs (field, quiver, relations, truncation) and
 * module specs (dims, arrow maps).  Parsing failures throw SpecError with a
 * positioned diagnostic; report objects keep keys sorted for byte-stable
 * output. */

#pragma once

#include <fstream>

#include <json.hpp>

#include "admissible.hpp"
#include "rep.hpp"

namespace lenrep {

using json = nlohmann::json;

struct SpecError : std::runtime_error {
    explicit SpecError(const std::string& what) : std::runtime_error(what) {}
};

struct ParsedAlgebra {
    AlgebraPresentation presentation;
    unsigned level = 1;
    AlgebraPtr algebra;
};

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw SpecError("malformed JSON in " + path + ": " + e.what());
    }
}

inline ParsedAlgebra parse_algebra_spec(const json& doc, std::optional<unsigned> level_override = {}) {
    try {
        if (!doc.is_object()) throw SpecError("algebra spec: top level must be an object");
        if (!doc.contains("field") || !doc["field"].contains("char"))
            throw SpecError("algebra spec: missing field.char");
        long p = doc["field"]["char"].get<long>();
        if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
            throw SpecError("algebra spec: field.char must be a prime");

        if (!doc.contains("quiver")) throw SpecError("algebra spec: missing quiver");
        const json& jq = doc["quiver"];
        std::vector<std::string> vertices;
        for (const auto& v : jq.value("vertices", json::array()))
            vertices.push_back(v.get<std::string>());
        std::vector<std::tuple<std::string, std::string, std::string>> arrows;
        for (const auto& a : jq.value("arrows", json::array())) {
            if (!a.contains("name") || !a.contains("from") || !a.contains("to"))
                throw SpecError("algebra spec: arrow entries need name/from/to");
            arrows.emplace_back(a["name"].get<std::string>(), a["from"].get<std::string>(),
                                a["to"].get<std::string>());
        }
        Quiver quiver(vertices, arrows);

        std::vector<Relation> relations;
        for (const auto& r : doc.value("relations", json::array())) {
            std::vector<std::pair<long long, Path>> terms;
            for (const auto& t : r.value("terms", json::array())) {
                std::vector<std::string> names;
                for (const auto& s : t.value("path", json::array())) names.push_back(s.get<std::string>());
                terms.emplace_back(t.value("coeff", 1LL), Path::from_names(quiver, names));
            }
            relations.push_back(Relation::make(std::move(terms), static_cast<fp_t>(p)));
        }

        if (!doc.contains("truncation")) throw SpecError("algebra spec: missing truncation level");
        long level = doc["truncation"].get<long>();
        if (level < 1) throw SpecError("algebra spec: truncation must be >= 1");

        ParsedAlgebra out;
        out.presentation = AlgebraPresentation{std::move(quiver), std::move(relations),
                                               static_cast<fp_t>(p),
                                               doc.value("declared_infinite", false)};
        out.level = level_override.value_or(static_cast<unsigned>(level));
        out.algebra = build_at(out.presentation, out.level);
        return out;
    } catch (const json::exception& e) {
        throw SpecError(std::string("algebra spec: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw SpecError(std::string("algebra spec: ") + e.what());
    }
}

inline Rep parse_module_spec(const json& doc, const AlgebraPtr& alg) {
    try {
        if (!doc.is_object()) throw SpecError("module spec: top level must be an object");
        const Quiver& q = alg->quiver();
        const fp_t p = alg->characteristic();
        std::vector<std::size_t> dims(q.num_vertices(), 0);
        const json jdims = doc.value("dims", json::object());
        for (const auto& [label, value] : jdims.items())
            dims[q.vertex_index(label)] = value.get<std::size_t>();
        std::vector<FieldMatrix> maps;
        const json& jm = doc.value("maps", json::object());
        for (std::size_t a = 0; a < q.num_arrows(); ++a) {
            const Arrow& ar = q.arrow(static_cast<int>(a));
            FieldMatrix m(dims[ar.target], dims[ar.source], p);
            if (jm.contains(ar.name)) {
                const json& rows = jm[ar.name];
                if (rows.size() != dims[ar.target])
                    throw SpecError("module spec: map '" + ar.name + "' has wrong row count");
                for (std::size_t i = 0; i < m.rows(); ++i) {
                    if (rows[i].size() != dims[ar.source])
                        throw SpecError("module spec: map '" + ar.name + "' has ragged row " +
                                        std::to_string(i));
                    for (std::size_t j = 0; j < m.cols(); ++j)
                        m.set(i, j, rows[i][j].get<long long>());
                }
            }
            maps.push_back(std::move(m));
        }
        return Rep(alg, std::move(dims), std::move(maps));
    } catch (const json::exception& e) {
        throw SpecError(std::string("module spec: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw SpecError(std::string("module spec: ") + e.what());
    }
}

inline json module_to_json(const Rep& r) {
    const Quiver& q = r.algebra()->quiver();
    json dims = json::object();
    for (std::size_t v = 0; v < q.num_vertices(); ++v)
        dims[q.vertex_label(static_cast<int>(v))] = r.dim(static_cast<int>(v));
    json maps = json::object();
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        const FieldMatrix& m = r.arrow_map(static_cast<int>(a));
        json rows = json::array();
        for (std::size_t i = 0; i < m.rows(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
            rows.push_back(std::move(row));
        }
        maps[q.arrow(static_cast<int>(a)).name] = std::move(rows);
    }
    return json{{"dims", std::move(dims)}, {"maps", std::move(maps)}};
}

inline json validity_report_to_json(const ValidityReport& report, const AlgebraPtr& alg) {
    json out;
    out["valid"] = report.valid();
    json rel = json::array();
    for (auto idx : report.relation_violations) rel.push_back(idx);
    out["relation_violations"] = std::move(rel);
    if (report.nilpotency_violation) {
        json names = json::array();
        for (int a : report.nilpotency_violation->arrows)
            names.push_back(alg->quiver().arrow(a).name);
        out["nilpotency_violation"] = std::move(names);
    } else {
        out["nilpotency_violation"] = nullptr;
    }
    return out;
}

}  // namespace lenrep
