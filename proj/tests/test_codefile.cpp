#include <doctest.h>

#include <json.hpp>
#include <string>

#include "fdrc/codefile.hpp"
#include "fdrc/constructions.hpp"

using namespace fdrc;

namespace {

FerrersCode sample() {
    return construct_subcode(FerrersDiagram({1, 3, 3, 4}), 3, Field::gf(2, 1));
}

void check_equal(const FerrersCode& a, const FerrersCode& b) {
    CHECK(a.diagram == b.diagram);
    CHECK(a.field->same(*b.field));
    CHECK(a.delta == b.delta);
    CHECK(a.provenance == b.provenance);
    REQUIRE(a.basis.size() == b.basis.size());
    for (std::size_t i = 0; i < a.basis.size(); ++i) CHECK(a.basis[i] == b.basis[i]);
}

}  // namespace

TEST_CASE("text form round trips byte for byte") {
    const auto code = sample();
    const auto text = render_code(code);
    CHECK(text.rfind("ferrers-rank-code\n", 0) == 0);
    CHECK(text.find("gamma: 1 3 3 4\n") != std::string::npos);
    CHECK(text.find("delta: 3\n") != std::string::npos);
    CHECK(text.find("k: 4\n") != std::string::npos);
    const auto back = parse_code(text);
    check_equal(code, back);
    CHECK(render_code(back) == text);
}

TEST_CASE("zero dimensional codes round trip") {
    const FerrersCode zero{FerrersDiagram({2, 2}), Field::gf(3, 1), 3, {}, "zero"};
    const auto back = parse_code(render_code(zero));
    check_equal(zero, back);
    CHECK(back.dimension() == 0);
}

TEST_CASE("extension field codes round trip") {
    const auto code = construct_es(FerrersDiagram({2, 2, 4, 5}), 2, Field::gf(2, 2));
    check_equal(code, parse_code(render_code(code)));
    check_equal(code, code_from_json(code_json(code)));
}

TEST_CASE("truncated files are rejected") {
    const auto text = render_code(sample());
    CHECK_THROWS_AS(parse_code(""), ParseError);
    CHECK_THROWS_AS(parse_code("ferrers-rank-code\n"), ParseError);
    CHECK_THROWS_AS(parse_code(text.substr(0, text.size() / 2)), ParseError);
    CHECK_THROWS_AS(parse_code(text.substr(0, text.size() - 4)), ParseError);
}

TEST_CASE("malformed text headers are rejected") {
    const auto good = render_code(sample());
    CHECK_THROWS_AS(parse_code("not-a-code\n" + good), ParseError);
    {
        auto bad = good;
        bad.replace(bad.find("gamma: 1 3 3 4"), 14, "gamma: 3 1 3 4");
        CHECK_THROWS_AS(parse_code(bad), ParseError);
    }
    {
        auto bad = good;
        bad.replace(bad.find("delta: 3"), 8, "delta: 0");
        CHECK_THROWS_AS(parse_code(bad), ParseError);
    }
    {
        auto bad = good;
        bad.replace(bad.find("delta: 3"), 8, "delta: x");
        CHECK_THROWS_AS(parse_code(bad), ParseError);
    }
    {
        auto bad = good;
        bad.replace(bad.find("field: GF(2^1)/mod=2"), 20, "field: GF(banana)!!!");
        CHECK_THROWS_AS(parse_code(bad), ParseError);
    }
    CHECK_THROWS_AS(parse_code(good + "stray\n"), ParseError);
}

TEST_CASE("matrix blocks must match the header") {
    const auto good = render_code(sample());
    {
        // one matrix claims a different field
        auto bad = good;
        const auto at = bad.find("matrix:\nGF(2^1)/mod=2");
        bad.replace(at + 8, 13, "GF(3^1)/mod=3");
        CHECK_THROWS_AS(parse_code(bad), ParseError);
    }
    {
        // drop one row of the first matrix
        auto bad = good;
        const auto at = bad.find("matrix:\n");
        const auto row_start = bad.find('\n', bad.find('\n', at + 8) + 1) + 1;
        bad.erase(row_start, bad.find('\n', row_start) - row_start + 1);
        CHECK_THROWS_AS(parse_code(bad), ParseError);
    }
}

TEST_CASE("json form round trips") {
    const auto code = sample();
    const auto text = code_json(code);
    const auto j = nlohmann::json::parse(text);
    CHECK(j["format"] == "ferrers-rank-code");
    CHECK(j["q"] == 2);
    CHECK(j["m"] == 4);
    CHECK(j["k"] == 4);
    CHECK(j["gamma"] == nlohmann::json({1, 3, 3, 4}));
    CHECK(j["basis"].size() == 4);
    check_equal(code, code_from_json(text));
}

TEST_CASE("malformed json is rejected") {
    const auto good = nlohmann::json::parse(code_json(sample()));
    CHECK_THROWS_AS(code_from_json("not json at all"), ParseError);
    CHECK_THROWS_AS(code_from_json("{}"), ParseError);
    {
        auto j = good;
        j["q"] = 5;
        CHECK_THROWS_AS(code_from_json(j.dump()), ParseError);
    }
    {
        auto j = good;
        j["k"] = 17;
        CHECK_THROWS_AS(code_from_json(j.dump()), ParseError);
    }
    {
        auto j = good;
        j["basis"][0][0][0] = 9;  // past GF(2)
        CHECK_THROWS_AS(code_from_json(j.dump()), ParseError);
    }
    {
        auto j = good;
        j["basis"][0].erase(0);  // matrix loses a row
        CHECK_THROWS_AS(code_from_json(j.dump()), ParseError);
    }
    {
        auto j = good;
        j["gamma"] = {3, 1};
        CHECK_THROWS_AS(code_from_json(j.dump()), ParseError);
    }
}

TEST_CASE("diagram summaries carry the counting vectors") {
    const auto f = FerrersDiagram({2, 2, 4, 5});
    const auto j = nlohmann::json::parse(diagram_json(f));
    CHECK(j["m"] == 5);
    CHECK(j["n"] == 4);
    CHECK(j["gamma"] == nlohmann::json({2, 2, 4, 5}));
    CHECK(j["rho"] == nlohmann::json({4, 4, 2, 2, 1}));
    CHECK(j["theta"] == nlohmann::json({1, 2, 3, 4, 3}));
    CHECK(j["dots"] == 13);
}
