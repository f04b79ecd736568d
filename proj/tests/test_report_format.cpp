#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "tribsplit/report_format.hpp"

using namespace tribsplit;
using namespace tribsplit::report;

TEST_CASE("csv") {
    CHECK(csv_header() ==
          "p,trib_residue,divisible,representable,rep_x,rep_y,splitting,frobenius,consistent,exceptional");
    auto r11 = verifier::verdict(ModPrime(11));
    CHECK(csv_row(r11) == "11,6,false,true,0,1,RamifiedDouble,Ramified,false,true");
    auto r19 = verifier::verdict(ModPrime(19));
    CHECK(csv_row(r19) == "19,0,true,false,,,OneRootPlusIrreducibleQuadratic,Transposition,false,true");
}

TEST_CASE("json lines") {
    auto r19 = verifier::verdict(ModPrime(19));
    std::string line = json_line(r19);
    CHECK(line ==
          R"({"p":19,"trib_residue":0,"divisible":true,"representable":false,"rep_x":null,"rep_y":null,)"
          R"("splitting":"OneRootPlusIrreducibleQuadratic","frobenius":"Transposition","consistent":false,"exceptional":true})");
    auto j = nlohmann::json::parse(json_line(verifier::verdict(ModPrime(47))));
    CHECK(j["rep_x"] == 6);
    CHECK(j["rep_y"] == 1);
    CHECK(j["consistent"] == true);
}

TEST_CASE("write_records and summary") {
    auto rep = verifier::scan(2, 100);
    std::ostringstream csv;
    write_records(csv, rep.records, OutputFormat::Csv);
    std::string s = csv.str();
    CHECK(std::count(s.begin(), s.end(), '\n') == 26);

    std::ostringstream jl;
    write_records(jl, rep.records, OutputFormat::JsonLines);
    s = jl.str();
    CHECK(std::count(s.begin(), s.end(), '\n') == 25);

    std::ostringstream table;
    write_records(table, rep.records, OutputFormat::Table);
    CHECK(table.str().rfind("p ", 0) == 0);

    CHECK(summary_line(rep) == "violations: [11, 19]");
    CHECK(summary_line(verifier::scan(100, 200)) == "violations: []");

    CHECK(parse_format("csv") == OutputFormat::Csv);
    CHECK(parse_format("jsonl") == OutputFormat::JsonLines);
    CHECK(parse_format("table") == OutputFormat::Table);
    CHECK_FALSE(parse_format("xml").has_value());
}

TEST_CASE("describe") {
    CHECK(describe(2, gfext::splitting_type(ModPrime(2))) ==
          "p: 2\nshape: RamifiedTriple\nroots: 1\nfrobenius: Ramified\n");
}
