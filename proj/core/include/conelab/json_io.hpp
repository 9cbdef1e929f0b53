#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <vector>

#include "conelab/cone.hpp"
#include "conelab/linalg.hpp"
#include "conelab/rat.hpp"

namespace conelab {

// Cone document: {"dim": n, "generators": [["1","0"],...],
// "inequalities": [...], "metadata": {...}}, rationals as strings "p/q"
// (or "p" for integers). Round-trips bit-exactly through to_json/from_json.
struct ConeDocument {
    int dim = 0;
    std::optional<std::vector<RatVec>> generators;
    std::optional<std::vector<RatVec>> inequalities;
    nlohmann::json metadata;  // passthrough; null when absent
};

nlohmann::json rat_vec_to_json(const RatVec& v);
RatVec rat_vec_from_json(const nlohmann::json& j, int dim);
nlohmann::json rat_mat_to_json(const RatMat& m);

ConeDocument cone_document_from_json(const nlohmann::json& j);  // ParseError
nlohmann::json cone_document_to_json(const ConeDocument& doc);

// A document must carry at least one representation. ParseError otherwise.
Cone document_to_cone(const ConeDocument& doc);

// Serializes whichever representations the cone currently holds, without
// forcing completion; callers wanting both force them first.
ConeDocument cone_to_document(const Cone& k);

}  // namespace conelab
