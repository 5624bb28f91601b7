#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "matcoh/complex.hpp"
#include "matcoh/json_io.hpp"

using namespace matcoh;

TEST_CASE("input parsing") {
    SUBCASE("uniform") {
        ParsedInput in = parse_input_json(R"({"type":"uniform","k":2,"n":3})");
        CHECK(in.matroid.rank_tbl == from_uniform(2, 3).rank_tbl);
        CHECK(in.rep.has_value());
    }
    SUBCASE("graph") {
        ParsedInput in =
            parse_input_json(R"({"type":"graph","vertices":3,"edges":[[0,1],[0,2],[1,2]]})");
        REQUIRE(in.graph.has_value());
        CHECK(in.matroid.rank_tbl == from_uniform(2, 3).rank_tbl);
    }
    SUBCASE("matrix") {
        ParsedInput in = parse_input_json(R"({"type":"matrix","entries":[[1,0,1],[0,1,1]]})");
        CHECK(in.matroid.rank_tbl == from_uniform(2, 3).rank_tbl);
    }
    SUBCASE("rank table") {
        ParsedInput in = parse_input_json(R"({"type":"rank_table","n":2,"ranks":[0,1,1,1]})");
        CHECK(in.matroid.rank_tbl == from_uniform(1, 2).rank_tbl);
        CHECK_THROWS_AS(parse_input_json(R"({"type":"rank_table","n":2,"ranks":[0,2,1,1]})"),
                        CheckError);
    }
    SUBCASE("named builtins") {
        CHECK(parse_input_json(R"({"type":"pappus"})").matroid.n == 9);
        CHECK(parse_input_json(R"({"type":"non_pappus"})").matroid.n == 9);
    }
    SUBCASE("diagonal input pins its quasi-representation") {
        ParsedInput in = parse_input_json(R"({"type":"u22_diagonal","a":2,"b":3})");
        REQUIRE(in.quasirep.has_value());
        CHECK(in.quasirep->descriptor == "u22_diagonal");
    }
    SUBCASE("arrangement") {
        ParsedInput in = parse_input_json(R"({"type":"arrangement","dim":2,"normals":[[1,0],[0,1]]})");
        REQUIRE(in.arrangement.has_value());
        CHECK(in.arrangement->size() == 2);
    }
    SUBCASE("malformed input throws") {
        CHECK_THROWS_AS(parse_input_json("{\"type\":"), CheckError);
        CHECK_THROWS_AS(parse_input_json(R"({"k":2})"), CheckError);
        CHECK_THROWS_AS(parse_input_json(R"({"type":"nope"})"), CheckError);
    }
}

TEST_CASE("quasirep resolution") {
    ParsedInput in = parse_input_json(R"({"type":"uniform","k":2,"n":3})");
    CHECK(resolve_quasirep(in, "free_default").descriptor == "free_default");
    CHECK(validate(resolve_quasirep(in, "canonical")).ok);

    ParsedInput g = parse_input_json(R"({"type":"graph","vertices":3,"edges":[[0,1],[0,2],[1,2]]})");
    CHECK(resolve_quasirep(g, "graphic").descriptor == "graphic");
    CHECK(resolve_quasirep(g, "canonical").descriptor == "graphic");

    // explicit flats file
    std::string path = "explicit_flats_test.json";
    {
        std::ofstream os(path);
        os << R"({"ambient_gens":2,"flats":{"0":[[],[]],"1":[[1],[0]],"2":[[0],[1]],"3":[[1,0],[0,1]]}})";
    }
    ParsedInput u22 = parse_input_json(R"({"type":"uniform","k":2,"n":2})");
    QuasiRep q = resolve_quasirep(u22, path);
    CHECK(validate(q).ok);
    std::remove(path.c_str());
}

TEST_CASE("table round trip is byte-identical") {
    ParsedInput in = parse_input_json(R"({"type":"u22_diagonal","a":4,"b":6})");
    QuasiRep q = *in.quasirep;
    CohomologyTable t = cohomology_table(build_complex(q), q);
    std::string once = table_to_json(t, "z");
    CohomologyTable back = table_from_json(once);
    CHECK(table_to_json(back, "z") == once);
    CHECK(back.same_cells(t));
    CHECK(back.euler == t.euler);
}

TEST_CASE("report serialization") {
    std::vector<Verdict> vs = {Verdict::ok("euler"), Verdict::bad("ses", "witness at (1,2)")};
    std::string s = report_to_json(vs);
    CHECK(s.find("\"euler\"") != std::string::npos);
    CHECK(s.find("witness at (1,2)") != std::string::npos);
}

TEST_CASE("atomic write and read back") {
    std::string path = "atomic_io_test.json";
    write_file_atomic(path, "{\"x\": 1}\n");
    CHECK(read_file(path) == "{\"x\": 1}\n");
    std::remove(path.c_str());
}
