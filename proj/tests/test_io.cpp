#include <chrono>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "pap/census.hpp"
#include "pap/io.hpp"
#include "pap/operators.hpp"
#include "pap/triangles.hpp"

using namespace pap;

namespace {

std::size_t line_count(const std::string& s) {
    std::size_t lines = 0;
    for (char ch : s) lines += ch == '\n';
    return lines;
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        const auto tick = std::chrono::steady_clock::now().time_since_epoch().count();
        path = std::filesystem::temp_directory_path() / ("pap-test-" + std::to_string(tick));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_SUITE("io") {

TEST_CASE("triangle json round trip is identical") {
    for (const Triangle& t : {signed_recurrence(9), enumerate_triangles(6).s}) {
        const auto j = io::triangle_json(t);
        const Triangle back = io::triangle_from_json(j);
        CHECK(back.kind == t.kind);
        CHECK(back.n_max == t.n_max);
        CHECK(back.provenance == t.provenance);
        CHECK(back.rows == t.rows);
        CHECK(io::triangle_json(back).dump() == j.dump());
    }
}

TEST_CASE("triangle json schema fields") {
    const auto j = io::triangle_json(signed_recurrence(5));
    CHECK(j.at("kind") == "D");
    CHECK(j.at("n_max") == 5);
    CHECK(j.at("provenance") == "recurrence");
    CHECK(j.at("rows").size() == 5);
    CHECK(j.at("rows")[4][2] == -6);
}

TEST_CASE("triangle json validation") {
    auto j = io::triangle_json(signed_recurrence(4));
    j["rows"][1] = {1, 2, 3};
    CHECK_THROWS_AS(io::triangle_from_json(j), std::invalid_argument);
}

TEST_CASE("triangle csv") {
    const std::string csv = io::triangle_csv(enumerate_pap_triangles(10).s);
    CHECK(line_count(csv) == 1 + 55);  // header + one line per (n,k) cell
    CHECK(csv.starts_with("n,k,value\n1,0,1\n"));
    CHECK(csv.find("5,2,6\n") != std::string::npos);
}

TEST_CASE("triangle pretty output mirrors the row layout") {
    const std::string text = io::triangle_pretty(signed_recurrence(6));
    CHECK(text.find("D(n,k)") != std::string::npos);
    CHECK(text.find("n = 5") != std::string::npos);
    CHECK(text.find("-6") != std::string::npos);
}

TEST_CASE("orbit serialization") {
    const OrbitRecord orbit = orbit_tau(parse_permutation("145236"));
    const auto j = io::orbit_json(orbit);
    CHECK(j.at("operator") == "tau");
    CHECK(j.at("period") == 2);
    CHECK(j.at("elements").size() == 2);
    const std::string pretty = io::orbit_pretty(orbit);
    CHECK(pretty.find("period:   2") != std::string::npos);
    CHECK(pretty.find("341256 -> 145236") != std::string::npos);
    CHECK(line_count(io::orbit_csv(orbit)) == 3);
}

TEST_CASE("census serialization") {
    const OrbitCensus census = orbit_census(6, 2);
    const auto j = io::census_json(census, 2, 0);
    CHECK(j.at("alpha_weighted_sum") == 2);
    CHECK(j.at("p_target") == 2);
    CHECK(j.at("entries").size() == 4);  // divisors 1, 2, 3, 6
    const std::string pretty = io::census_pretty(census, 2, 0);
    CHECK(pretty.find("sum d*alpha = 2") != std::string::npos);
}

TEST_CASE("report serialization") {
    CheckReport report{"demo", {}};
    report.expect_eq("first", 3, 3);
    report.expect_divisible("second", 10, 4);
    const auto j = io::report_json(report);
    CHECK(j.at("ok") == false);
    CHECK(j.at("failures") == 1);
    const std::string pretty = io::report_pretty(report);
    CHECK(pretty.find("ok   first") != std::string::npos);
    CHECK(pretty.find("FAIL second") != std::string::npos);
    CHECK(io::report_csv(report).find("second,10,4,0") != std::string::npos);
}

TEST_CASE("triangle cache stores and reloads byte-identically") {
    TempDir dir;
    const Triangle t = signed_recurrence(8);
    CHECK(!io::cache_load(dir.path, TriangleKind::D, 8, "auto").has_value());
    io::cache_store(dir.path, "auto", t);
    const auto loaded = io::cache_load(dir.path, TriangleKind::D, 8, "auto");
    REQUIRE(loaded.has_value());
    CHECK(loaded->rows == t.rows);
    CHECK(io::triangle_json(*loaded).dump() == io::triangle_json(t).dump());

    // distinct keys do not alias
    CHECK(!io::cache_load(dir.path, TriangleKind::D, 8, "enumerate").has_value());
    CHECK(!io::cache_load(dir.path, TriangleKind::D, 7, "auto").has_value());
    CHECK(!io::cache_load(dir.path, TriangleKind::R, 8, "auto").has_value());
}

}  // TEST_SUITE
