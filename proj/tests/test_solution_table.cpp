#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include <frack/errors.hpp>
#include <frack/solution_table.hpp>

using namespace frack;

namespace {
SolutionTable awkward_table() {
    SolutionTable t;
    t.axis_names = {"t"};
    t.rows.push_back(SolutionRow{{0.1}, {1.0 / 3.0}});
    t.rows.push_back(SolutionRow{{-2.5}, {1e-17}});
    t.rows.push_back(SolutionRow{{1e300}, {-7.2e-300}});
    t.rows.push_back(SolutionRow{{0.30000000000000004}, {0.3}});
    t.metadata["note"] = "metadata travels in json only";
    return t;
}
} // namespace

TEST_CASE("format_double serializes 17 significant digits faithfully",
          "[table]") {
    CHECK(format_double(2.0) == "2");
    CHECK(format_double(0.1) == "0.10000000000000001");
    for (double v : {1.0 / 3.0, 0.1, 1e-17, -7.2e-300, 6.02e23}) {
        const double back = std::strtod(format_double(v).c_str(), nullptr);
        CHECK(back == v);
    }
}

TEST_CASE("csv round trip is bit exact", "[table]") {
    const SolutionTable t = awkward_table();
    const std::string text = to_csv(t);
    const SolutionTable back = parse_table_csv(text, t.axis_names.size());
    REQUIRE(back.rows.size() == t.rows.size());
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        CHECK(back.rows[i].coordinates[0] == t.rows[i].coordinates[0]);
        CHECK(back.rows[i].values[0] == t.rows[i].values[0]);
    }
    CHECK(to_csv(back) == text);
}

TEST_CASE("csv uses crlf line endings and a header row", "[table]") {
    const std::string text = to_csv(awkward_table());
    CHECK(text.rfind("t,value\r\n", 0) == 0);
    CHECK(text.find('\r') != std::string::npos);
}

TEST_CASE("csv escaping quotes awkward field names", "[table]") {
    SolutionTable t;
    t.axis_names = {"time, in \"s\""};
    t.rows.push_back(SolutionRow{{1.0}, {2.0}});
    const std::string text = to_csv(t);
    CHECK(text.find("\"time, in \"\"s\"\"\"") != std::string::npos);
    const SolutionTable back = parse_table_csv(text, 1);
    CHECK(back.axis_names[0] == "time, in \"s\"");
}

TEST_CASE("json mirrors every table field", "[table]") {
    const std::string text = to_json(awkward_table());
    CHECK(text.find("\"axis_names\"") != std::string::npos);
    CHECK(text.find("\"value_names\"") != std::string::npos);
    CHECK(text.find("\"rows\"") != std::string::npos);
    CHECK(text.find("\"metadata\"") != std::string::npos);
    CHECK(text.find("metadata travels in json only") != std::string::npos);
    CHECK(text.find("0.3333333333333333") != std::string::npos);
}

TEST_CASE("table validation", "[table]") {
    SolutionTable t;
    CHECK_THROWS_AS(t.validate(), InvalidParameters); // no axes

    t.axis_names = {"x"};
    t.rows.push_back(SolutionRow{{1.0, 2.0}, {3.0}}); // too many coordinates
    CHECK_THROWS_AS(t.validate(), InvalidParameters);

    t.rows.clear();
    t.rows.push_back(
        SolutionRow{{1.0}, {std::numeric_limits<double>::quiet_NaN()}});
    CHECK_THROWS_AS(t.validate(), InvalidParameters);
}

TEST_CASE("csv ingestion failures carry the ingestion error type", "[table]") {
    CHECK_THROWS_AS(parse_table_csv("", 1), IngestionError);
    CHECK_THROWS_AS(parse_table_csv("a,value\r\n1\r\n", 1), IngestionError);
    CHECK_THROWS_AS(parse_table_csv("a,value\r\n1,zz\r\n", 1), IngestionError);
}

TEST_CASE("sampled csv ingestion", "[table]") {
    const SampledFunction f = read_sampled_csv("t,f\n0,1\n0.5,2\n1,3\n");
    REQUIRE(f.t_grid.size() == 3);
    CHECK(f.values[1] == 2.0);

    // header row is optional
    const SampledFunction g = read_sampled_csv("0,1\n1,2\n");
    CHECK(g.t_grid.size() == 2);

    CHECK_THROWS_AS(read_sampled_csv("0,1\n0.5,2\n0.25,3\n"), IngestionError);
    CHECK_THROWS_AS(read_sampled_csv("0,1\n0.5,nan\n"), IngestionError);
    CHECK_THROWS_AS(read_sampled_csv("-1,1\n0.5,2\n"), IngestionError);
}
