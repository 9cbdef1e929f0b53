#include <doctest.h>

#include "conelab/catalog.hpp"
#include "conelab/json_io.hpp"

using namespace conelab;
using nlohmann::json;

TEST_CASE("documents parse and serialize bit-exactly") {
    const std::string text =
        R"({"dim":2,"generators":[["1","0"],["1/2","3"]],"metadata":{"name":"wedge"}})";
    const json j = json::parse(text);
    const ConeDocument doc = cone_document_from_json(j);
    CHECK(doc.dim == 2);
    REQUIRE(doc.generators.has_value());
    CHECK(doc.generators->size() == 2);
    CHECK((*doc.generators)[1] == RatVec{Rat(1, 2), Rat(3)});
    CHECK(doc.metadata["name"] == "wedge");

    // round trip through the document is byte-identical
    CHECK(cone_document_to_json(doc).dump() == j.dump());
}

TEST_CASE("integer entries are accepted on input, strings on output") {
    const json j = json::parse(R"({"dim":2,"inequalities":[[1,0],[0,1]]})");
    const ConeDocument doc = cone_document_from_json(j);
    const Cone k = document_to_cone(doc);
    CHECK(same_set(k, orthant(2)));
    const json out = cone_document_to_json(cone_to_document(k));
    CHECK(out["inequalities"][0][0].is_string());
}

TEST_CASE("cone serialization reflects cached representations only") {
    const Cone q = qpn(3, 2);  // inequality form only
    ConeDocument doc = cone_to_document(q);
    CHECK(doc.inequalities.has_value());
    CHECK_FALSE(doc.generators.has_value());

    (void)q.generators();  // force completion
    doc = cone_to_document(q);
    CHECK(doc.generators.has_value());

    // cone -> document -> cone -> document is a fixpoint
    const Cone back = document_to_cone(doc);
    const json a = cone_document_to_json(cone_to_document(back));
    const json b = cone_document_to_json(doc);
    CHECK(a.dump() == b.dump());
}

TEST_CASE("malformed documents are rejected with ParseError") {
    CHECK_THROWS_AS(cone_document_from_json(json::parse("[]")), ParseError);
    CHECK_THROWS_AS(cone_document_from_json(json::parse(R"({"dim":0,"generators":[]})")),
                    ParseError);
    CHECK_THROWS_AS(cone_document_from_json(json::parse(R"({"generators":[["1"]]})")),
                    ParseError);
    CHECK_THROWS_AS(cone_document_from_json(json::parse(R"({"dim":2})")), ParseError);
    CHECK_THROWS_AS(
        cone_document_from_json(json::parse(R"({"dim":2,"generators":[["1"]]})")),
        ParseError);
    CHECK_THROWS_AS(
        cone_document_from_json(json::parse(R"({"dim":1,"generators":[["1/0"]]})")),
        ParseError);
    CHECK_THROWS_AS(
        cone_document_from_json(json::parse(R"({"dim":1,"generators":[[1.5]]})")),
        ParseError);
}

TEST_CASE("matrices serialize as rows of rational strings") {
    RatMat m(2, 2);
    m.at(0, 1) = Rat(1, 3);
    const json j = rat_mat_to_json(m);
    CHECK(j.dump() == R"([["0","1/3"],["0","0"]])");
}
