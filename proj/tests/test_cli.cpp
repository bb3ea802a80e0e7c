#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <unistd.h>

#include "helpers.hpp"
#include "sea/models.hpp"
#include "sea/report_io.hpp"

using helpers::run_cli;

namespace {

// scratch file that cleans up after itself
struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& contents) {
        static int counter = 0;
        path = std::filesystem::temp_directory_path() /
               ("seatool-test-" + std::to_string(::getpid()) + "-" +
                std::to_string(counter++) + ".ea");
        std::ofstream out(path);
        out << contents;
    }
    ~TempFile() { std::error_code ec; std::filesystem::remove(path, ec); }
};

const char* kBrokenEa1 =
    "elements: 0, a, b, 1\nzero: 0\none: 1\noplus:\n"
    "  0, 0, 0\n  0, a, a\n  a, 0, a\n  0, b, b\n  b, 0, b\n"
    "  0, 1, 1\n  1, 0, 1\n  a, b, 1\n"; // b + a missing

} // namespace

TEST_CASE("check: clean models exit 0 and report zero violations") {
    auto r = run_cli({"check", "--model", "e0", "--n0", "2", "--window", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("violations: 0") != std::string::npos);
    CHECK(r.out.find("window:") != std::string::npos);

    auto rb = run_cli({"check", "--model", "boolean", "--k", "2"});
    CHECK(rb.code == 0);
}

TEST_CASE("check: violations exit 1 with the witness printed") {
    TempFile f(kBrokenEa1);
    auto r = run_cli({"check", "--file", f.path.string()});
    CHECK(r.code == 1);
    CHECK(r.out.find("EA1") != std::string::npos);
    CHECK(r.out.find("witness=(a, b)") != std::string::npos);
}

TEST_CASE("check: a sum-only file audits the effect axioms only") {
    TempFile f("elements: 0, 1\nzero: 0\none: 1\noplus:\n  0, 0, 0\n  0, 1, 1\n  1, 0, 1\n");
    auto r = run_cli({"check", "--file", f.path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("EA1-EA4") != std::string::npos);
    CHECK(r.out.find("SEA") == std::string::npos);
}

TEST_CASE("usage and model errors exit 2 with one-line diagnostics") {
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"check", "--model", "nonsense"}).code == 2);
    CHECK(run_cli({"check", "--file", "/no/such/file.ea"}).code == 2);
    CHECK(run_cli({"uniqueness", "--model", "scale"}).code == 2);       // --n required
    CHECK(run_cli({"uniqueness", "--model", "scale", "--n", "1"}).code == 2);
    CHECK(run_cli({"closure", "--model", "scale"}).code == 2);          // --gen required
    CHECK(run_cli({"check", "--model", "e0", "--n0", "1"}).code == 2);
    CHECK(run_cli({"enum-products", "--model", "scale"}).code == 2);    // infinite carrier
    CHECK(run_cli({"check", "--model", "boolean", "--k", "0"}).code == 2);

    auto bad_elem = run_cli({"closure", "--model", "e0", "--gen", "a:zz,1"});
    CHECK(bad_elem.code == 2);
    CHECK(bad_elem.err.find("a:zz,1") != std::string::npos);

    TempFile f("elements: a\nzero: a\n"); // parse failure
    auto r = run_cli({"check", "--file", f.path.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("line") != std::string::npos);
}

TEST_CASE("help exits 0") {
    auto r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("check") != std::string::npos);
}

TEST_CASE("uniqueness: the family case is listed, exit stays 0") {
    auto r = run_cli({"uniqueness", "--model", "e0", "--n0", "2", "--n", "2",
                      "--window", "4"});
    CHECK(r.code == 0); // cases exist but none are inconsistent
    CHECK(r.out.find("a=a:1,0  b=a:0,1  c=a:2,0  sharp=no  commute=yes  equal=no") !=
          std::string::npos);
}

TEST_CASE("uniqueness: a law-breaking model exits 1 and is marked") {
    TempFile f("elements: 0, x, y, c, 1\nzero: 0\none: 1\n"
               "oplus:\n"
               "  0, 0, 0\n  0, x, x\n  x, 0, x\n  0, y, y\n  y, 0, y\n"
               "  0, c, c\n  c, 0, c\n  0, 1, 1\n  1, 0, 1\n"
               "  x, x, c\n  y, y, c\n"
               "  x, c, 1\n  c, x, 1\n  y, c, 1\n  c, y, 1\n"
               "circ:\n"
               "  0, 0, 0\n  0, x, 0\n  0, y, 0\n  0, c, 0\n  0, 1, 0\n"
               "  x, 0, 0\n  x, x, 0\n  x, y, 0\n  x, c, 0\n  x, 1, x\n"
               "  y, 0, 0\n  y, x, 0\n  y, y, 0\n  y, c, 0\n  y, 1, y\n"
               "  c, 0, 0\n  c, x, 0\n  c, y, 0\n  c, c, c\n  c, 1, c\n"
               "  1, 0, 0\n  1, x, x\n  1, y, y\n  1, c, c\n  1, 1, 1\n");
    auto r = run_cli({"uniqueness", "--file", f.path.string(), "--n", "2"});
    CHECK(r.code == 1);
    CHECK(r.out.find("INCONSISTENT") != std::string::npos);

    auto rm = run_cli({"uniqueness", "--file", f.path.string(), "--n", "2", "--format",
                       "machine"});
    CHECK(rm.code == 1);
    auto doc = nlohmann::ordered_json::parse(rm.out);
    bool marked = false;
    for (const auto& c : doc.at("cases"))
        if (c.at("inconsistent") == true) marked = true;
    CHECK(marked);
}

TEST_CASE("closure and commutant and sharp and describe run") {
    auto r = run_cli({"closure", "--model", "boolean", "--k", "3", "--gen", "{1}"});
    CHECK(r.code == 0);
    CHECK(r.out.find("fixpoint: yes") != std::string::npos);

    auto rc = run_cli({"commutant", "--model", "hs", "--window", "4", "--of", "L:1/2"});
    CHECK(rc.code == 0);
    CHECK(rc.out.find("L:1/4") != std::string::npos);
    CHECK(rc.out.find("R:1/4") == std::string::npos);

    auto rs = run_cli({"sharp", "--model", "e0", "--n0", "2", "--window", "3"});
    CHECK(rs.code == 0);
    CHECK(rs.out.find("a:2,0  sharp=no") != std::string::npos);

    auto rd = run_cli({"describe", "--model", "scale", "--window", "3"});
    CHECK(rd.code == 0);
    CHECK(rd.out.find("symbolic") != std::string::npos);

    TempFile f("name: two\nelements: 0, 1\nzero: 0\none: 1\noplus:\n  0, 0, 0\n  0, 1, 1\n  1, 0, 1\n");
    auto rf = run_cli({"describe", "--file", f.path.string()});
    CHECK(rf.code == 0);
    CHECK(rf.out.find("finite") != std::string::npos);
    CHECK(rf.out.find("product: no") != std::string::npos);

    auto rse = run_cli({"sharp", "--model", "scale", "--element", "1/2"});
    CHECK(rse.code == 0);
    CHECK(rse.out.find("1/2  sharp=no") != std::string::npos);
}

TEST_CASE("enum-products emits tables in the file grammar") {
    TempFile f("elements: 0, 1\nzero: 0\none: 1\noplus:\n  0, 0, 0\n  0, 1, 1\n  1, 0, 1\n");
    auto r = run_cli({"enum-products", "--file", f.path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("products found: 1") != std::string::npos);
    CHECK(r.out.find("circ:") != std::string::npos);
    CHECK(r.out.find("  1, 1, 1") != std::string::npos);

    TempFile broken(kBrokenEa1);
    auto rb = run_cli({"enum-products", "--file", broken.path.string()});
    CHECK(rb.code == 2);
}

TEST_CASE("machine mode: stable schema, parseable, byte-identical reruns") {
    for (const auto& cmd : std::vector<std::vector<std::string>>{
             {"uniqueness", "--model", "scale", "--n", "2", "--window", "4"},
             {"closure", "--model", "boolean", "--k", "2", "--gen", "{1}"},
             {"enum-products", "--model", "boolean", "--k", "2"},
             {"sharp", "--model", "hs", "--window", "3"},
             {"commutant", "--model", "e0", "--n0", "2", "--window", "3", "--of", "a:1,0"},
             {"describe", "--model", "hs", "--window", "3"}}) {
        auto full = cmd;
        full.push_back("--format");
        full.push_back("machine");
        auto a = run_cli(full);
        auto b = run_cli(full);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        auto parsed = nlohmann::ordered_json::parse(a.out); // throws on malformed output
        CHECK(parsed.is_object());
    }

    std::vector<std::string> cmd{"check", "--model", "e0", "--n0", "2",
                                 "--window", "3", "--format", "machine"};
    auto r1 = run_cli(cmd);
    auto r2 = run_cli(cmd);
    CHECK(r1.code == 0);
    CHECK(r1.out == r2.out);

    auto doc = nlohmann::ordered_json::parse(r1.out);
    CHECK(doc.at("command") == "check");
    CHECK(doc.at("model") == "e0(n0=2)");
    CHECK(doc.at("violations").is_array());
    CHECK(doc.at("cases").is_array());
    CHECK(doc.at("closure").is_null());
    CHECK(doc.at("timing").at("checked_tuples").is_number());
    CHECK(doc.at("window").get<std::string>().find("first index <= 3") != std::string::npos);
}

TEST_CASE("machine mode: violation lists round-trip exactly") {
    TempFile f(kBrokenEa1);
    auto r = run_cli({"check", "--file", f.path.string(), "--format", "machine"});
    CHECK(r.code == 1);
    auto doc = nlohmann::ordered_json::parse(r.out);
    auto parsed = sea::violations_from_json(doc.at("violations"));
    REQUIRE(!parsed.empty());

    // recompute the same audit through the library and compare verbatim
    auto model = sea::load_finite(f.path);
    auto report = sea::audit_full(*model, model->carrier());
    REQUIRE(report.violations.size() == parsed.size());
    for (std::size_t i = 0; i < parsed.size(); ++i)
        CHECK(parsed[i] == sea::violation_text(*model, report.violations[i]));
}

TEST_CASE("machine mode: uniqueness cases carry all three flags") {
    auto r = run_cli({"uniqueness", "--model", "hs", "--n", "4", "--window", "4",
                      "--format", "machine"});
    CHECK(r.code == 0);
    auto doc = nlohmann::ordered_json::parse(r.out);
    bool found = false;
    for (const auto& c : doc.at("cases"))
        if (c.at("a") == "L:1/4" && c.at("b") == "R:1/4") {
            found = true;
            CHECK(c.at("c") == "1");
            CHECK(c.at("c_sharp") == true);
            CHECK(c.at("a_commutes_b") == false);
            CHECK(c.at("a_equals_b") == false);
            CHECK(c.at("inconsistent") == false);
        }
    CHECK(found);
}
