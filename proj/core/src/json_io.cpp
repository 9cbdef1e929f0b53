#include "conelab/json_io.hpp"

#include "conelab/errors.hpp"

namespace conelab {

using nlohmann::json;

json rat_vec_to_json(const RatVec& v) {
    json a = json::array();
    for (const auto& e : v) a.push_back(e.str());
    return a;
}

RatVec rat_vec_from_json(const json& j, int dim) {
    if (!j.is_array()) throw ParseError("vector: expected a JSON array");
    if (static_cast<int>(j.size()) != dim) {
        throw ParseError("vector: expected length " + std::to_string(dim) + ", got " +
                         std::to_string(j.size()));
    }
    RatVec v;
    v.reserve(j.size());
    for (const auto& e : j) {
        if (e.is_string()) {
            v.push_back(Rat::parse(e.get<std::string>()));
        } else if (e.is_number_integer()) {
            v.push_back(Rat(static_cast<long>(e.get<std::int64_t>())));
        } else {
            throw ParseError("vector entry: expected a rational string");
        }
    }
    return v;
}

json rat_mat_to_json(const RatMat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) rows.push_back(rat_vec_to_json(m.row(i)));
    return rows;
}

namespace {

std::vector<RatVec> vector_list_from_json(const json& j, int dim, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + ": expected a JSON array");
    std::vector<RatVec> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(rat_vec_from_json(e, dim));
    return out;
}

}  // namespace

ConeDocument cone_document_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("cone document: expected a JSON object");
    if (!j.contains("dim") || !j["dim"].is_number_integer()) {
        throw ParseError("cone document: missing integer \"dim\"");
    }
    ConeDocument doc;
    doc.dim = j["dim"].get<int>();
    if (doc.dim < 1) throw ParseError("cone document: \"dim\" must be >= 1");
    if (j.contains("generators")) {
        doc.generators = vector_list_from_json(j["generators"], doc.dim, "generators");
    }
    if (j.contains("inequalities")) {
        doc.inequalities =
            vector_list_from_json(j["inequalities"], doc.dim, "inequalities");
    }
    if (j.contains("metadata")) doc.metadata = j["metadata"];
    if (!doc.generators && !doc.inequalities) {
        throw ParseError("cone document: need \"generators\" or \"inequalities\"");
    }
    return doc;
}

json cone_document_to_json(const ConeDocument& doc) {
    json j;
    j["dim"] = doc.dim;
    if (doc.generators) {
        json a = json::array();
        for (const auto& v : *doc.generators) a.push_back(rat_vec_to_json(v));
        j["generators"] = std::move(a);
    }
    if (doc.inequalities) {
        json a = json::array();
        for (const auto& v : *doc.inequalities) a.push_back(rat_vec_to_json(v));
        j["inequalities"] = std::move(a);
    }
    if (!doc.metadata.is_null()) j["metadata"] = doc.metadata;
    return j;
}

Cone document_to_cone(const ConeDocument& doc) {
    if (doc.generators && doc.inequalities) {
        return Cone::from_both(doc.dim, *doc.generators, *doc.inequalities);
    }
    if (doc.generators) return Cone::from_generators(doc.dim, *doc.generators);
    if (doc.inequalities) return Cone::from_inequalities(doc.dim, *doc.inequalities);
    throw ParseError("cone document: no representation present");
}

ConeDocument cone_to_document(const Cone& k) {
    ConeDocument doc;
    doc.dim = k.dim();
    if (k.has_generators()) doc.generators = k.generators();
    if (k.has_inequalities()) doc.inequalities = k.inequalities();
    return doc;
}

}  // namespace conelab
