#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <fstream>

#include "poshom/cli.hpp"
#include "poshom/fixtures.hpp"
#include "poshom/json_io.hpp"

using namespace poshom;
using nlohmann::json;

namespace {

const std::string kDir = POSHOM_FIXTURE_DIR;

RunConfig config_for(const std::string& command, const std::string& file) {
    RunConfig c;
    c.command = command;
    c.input_path = kDir + "/" + file;
    return c;
}

json output_json(const RunResult& r) { return json::parse(r.output); }

bool same_poset(const GradedPoset& a, const GradedPoset& b) {
    if (a.size() != b.size()) return false;
    for (int i = 0; i < a.size(); ++i)
        if (a.dim(i) != b.dim(i)) return false;
    return a.cover_pairs() == b.cover_pairs();
}

}  // namespace

TEST_CASE("fixture files reproduce the built-in fixtures") {
    auto all = fixtures::standard_fixtures();
    const std::vector<std::pair<std::string, std::string>> pairs = {
        {"boundary_tetrahedron.json", "boundary-tetrahedron"},
        {"rp2_six.json", "rp2-six-vertices"},
        {"dunce_hat.json", "dunce-hat"},
        {"hollow_triangle.json", "hollow-triangle"},
        {"full_triangle.json", "full-triangle"},
        {"s3_p2.json", "A_2(S3)"},
        {"d8_p2.json", "A_2(D8)"},
        {"a4_p2.json", "A_2(A4)"},
        {"s4_p2.json", "A_2(S4)"},
        {"c2cubed_p2.json", "A_2(C2^3)"},
        {"c3squared_p3.json", "A_3(C3^2)"},
    };
    for (const auto& [file, name] : pairs) {
        auto loaded = load_input(kDir + "/" + file, "default", 10000);
        auto it = std::find_if(all.begin(), all.end(),
                               [&](const fixtures::Fixture& f) { return f.name == name; });
        REQUIRE(it != all.end());
        CHECK(same_poset(loaded.poset, it->poset));
        REQUIRE(loaded.embedded_family.has_value());
        CHECK(*loaded.embedded_family == it->family);
    }
}

TEST_CASE("cmd homology: pinned fixture results") {
    auto rp2 = run_command(config_for("homology", "rp2_six.json"));
    CHECK(rp2.exit_code == kExitOk);
    auto body = output_json(rp2);
    CHECK(body["degrees"]["1"]["rank"] == 0);
    CHECK(body["degrees"]["1"]["torsion"] == json::array({"2"}));
    CHECK(body["degrees"]["2"]["rank"] == 0);
    CHECK(body["complex_sizes"]["total"] == 31);

    auto d8 = config_for("homology", "d8_p2.json");
    d8.augmented = true;
    auto d8_result = run_command(d8);
    CHECK(d8_result.exit_code == kExitOk);
    auto d8_body = output_json(d8_result);
    for (const auto& key : {"-1", "0", "1"}) {
        CHECK(d8_body["degrees"][key]["rank"] == 0);
        CHECK(d8_body["degrees"][key]["torsion"].empty());
    }

    auto point = run_command(config_for("homology", "point.json"));
    CHECK(point.exit_code == kExitOk);
    CHECK(output_json(point)["degrees"]["0"]["rank"] == 1);
}

TEST_CASE("cmd homology output is byte-identical across runs") {
    auto config = config_for("homology", "s4_p2.json");
    config.atom_order = "random:12345";
    auto a = run_command(config);
    auto b = run_command(config);
    CHECK(a.exit_code == kExitOk);
    CHECK(a.output == b.output);
}

TEST_CASE("cmd compare: every bundled fixture verdicts equal") {
    for (const auto& file :
         {"boundary_tetrahedron.json", "rp2_six.json", "dunce_hat.json", "hollow_triangle.json",
          "full_triangle.json", "s3_p2.json", "s3_p3.json", "d8_p2.json", "a4_p2.json",
          "s4_p2.json", "c2cubed_p2.json", "c3squared_p3.json", "point.json"}) {
        auto result = run_command(config_for("compare", file));
        CHECK(result.exit_code == kExitOk);
        CHECK(output_json(result)["equal"] == true);
    }
}

TEST_CASE("cmd compare: atom order never changes the homology") {
    auto base = run_command(config_for("compare", "c2cubed_p2.json"));
    auto base_degrees = output_json(base)["reduced_complex"];
    for (const auto& order : {"random:7", "random:8", "random:9"}) {
        auto config = config_for("compare", "c2cubed_p2.json");
        config.atom_order = order;
        auto moved = run_command(config);
        CHECK(moved.exit_code == kExitOk);
        CHECK(output_json(moved)["reduced_complex"] == base_degrees);
    }

    // complex inputs reorder their vertices the same way
    auto rp2_base = run_command(config_for("compare", "rp2_six.json"));
    auto rp2_degrees = output_json(rp2_base)["reduced_complex"];
    for (const auto& order : {"random:5", "5,4,3,2,1,0", "2,0,1,3,5,4"}) {
        auto config = config_for("compare", "rp2_six.json");
        config.atom_order = order;
        auto moved = run_command(config);
        CHECK(moved.exit_code == kExitOk);
        CHECK(output_json(moved)["equal"] == true);
        CHECK(output_json(moved)["reduced_complex"] == rp2_degrees);
    }
}

TEST_CASE("cmd compare: corrupted differential is caught") {
    auto config = config_for("compare", "full_triangle.json");
    config.corrupt_differential = true;
    auto result = run_command(config);
    CHECK(result.exit_code == kExitMismatch);
    CHECK(output_json(result)["equal"] == false);
}

TEST_CASE("cmd euler") {
    auto d8 = run_command(config_for("euler", "d8_p2.json"));
    CHECK(d8.exit_code == kExitOk);
    auto d8_body = output_json(d8);
    CHECK(d8_body["formula"] == 1);
    CHECK(d8_body["oracle"] == 1);
    CHECK(d8_body["agree"] == true);

    auto s3 = run_command(config_for("euler", "s3_p2.json"));
    CHECK(output_json(s3)["formula"] == 3);

    auto wrong = run_command(config_for("euler", "full_triangle.json"));
    CHECK(wrong.exit_code == kExitInput);
}

TEST_CASE("cmd free-objects") {
    auto d8 = run_command(config_for("free-objects", "d8_p2.json"));
    CHECK(d8.exit_code == kExitOk);
    auto body = output_json(d8);
    CHECK(body["ratio"] == "4/5");
    CHECK(body["bound"] == "1/2");
    CHECK(body["bound_holds"] == true);
    CHECK(body["free_count"] == 4);

    auto dunce = run_command(config_for("free-objects", "dunce_hat.json"));
    CHECK(dunce.exit_code == kExitOk);
    auto dunce_body = output_json(dunce);
    CHECK(dunce_body["free_count"] == 0);
    CHECK(dunce_body["applicable"] == false);

    auto triangle = run_command(config_for("free-objects", "full_triangle.json"));
    CHECK(output_json(triangle)["free_count"] == 6);
}

TEST_CASE("cmd validate") {
    auto ok = run_command(config_for("validate", "rp2_six.json"));
    CHECK(ok.exit_code == kExitOk);
    CHECK(output_json(ok)["family_ok"] == true);

    auto tampered = run_command(config_for("validate", "tampered_family.json"));
    CHECK(tampered.exit_code == kExitValidation);
    auto body = output_json(tampered);
    CHECK(body["family_ok"] == false);
    bool condition1 = false;
    for (const auto& v : body["family_violations"])
        if (v["condition"] == 1 && v["p"] == "1.2") condition1 = true;
    CHECK(condition1);

    auto bowtie = run_command(config_for("validate", "bowtie.json"));
    CHECK(bowtie.exit_code == kExitValidation);
    CHECK(output_json(bowtie)["atom_modular"] == false);
}

TEST_CASE("homology on a non-atom-modular poset is a validation failure") {
    auto result = run_command(config_for("homology", "bowtie.json"));
    CHECK(result.exit_code == kExitValidation);
    CHECK(result.error.find("NotAtomModular") != std::string::npos);
}

TEST_CASE("validate flags a non-graded cover input") {
    const std::string path = "/tmp/poshom_bad_grading.json";
    {
        std::ofstream out(path);
        out << R"({"kind":"poset","dims":[0,2],"covers":[[0,1]]})";
    }
    RunConfig config;
    config.command = "validate";
    config.input_path = path;
    auto result = run_command(config);
    CHECK(result.exit_code == kExitValidation);
    CHECK(result.error.find("GradingViolation") != std::string::npos);
}

TEST_CASE("input errors exit with 3") {
    auto missing = run_command(config_for("homology", "no_such_file.json"));
    CHECK(missing.exit_code == kExitInput);
    CHECK(!missing.error.empty());

    RunConfig bad;
    bad.command = "nonsense";
    bad.input_path = kDir + "/point.json";
    CHECK(run_command(bad).exit_code == kExitInput);
}

TEST_CASE("table mode renders text") {
    auto config = config_for("homology", "hollow_triangle.json");
    config.table = true;
    auto result = run_command(config);
    CHECK(result.exit_code == kExitOk);
    CHECK(result.output.find("rank") != std::string::npos);
}

TEST_CASE("serialized family round-trips through JSON") {
    for (const auto& f : fixtures::standard_fixtures()) {
        auto j = family_to_json(f.poset, f.family);
        auto back = family_from_json(f.poset, j);
        CHECK(back == f.family);
    }
}

TEST_CASE("complex files may name facet vertices by label") {
    const std::string path = "/tmp/poshom_labeled_complex.json";
    {
        std::ofstream out(path);
        out << R"({"kind":"complex","vertices":["a","b","c"],"facets":[["a","b"],["b","c"]]})";
    }
    RunConfig config;
    config.command = "homology";
    config.input_path = path;
    auto result = run_command(config);
    CHECK(result.exit_code == kExitOk);
    CHECK(output_json(result)["degrees"]["0"]["rank"] == 1);  // a path is contractible
}

TEST_CASE("ring selector parsing") {
    CHECK(CoefficientRing::parse("z").kind == CoefficientRing::Kind::Integers);
    CHECK(CoefficientRing::parse("q").kind == CoefficientRing::Kind::Rationals);
    CHECK(CoefficientRing::parse("fp:7").modulus == 7);
    CHECK(CoefficientRing::parse("zmod:4").modulus == 4);
    CHECK_THROWS_AS(CoefficientRing::parse("fp:6"), Error);
    CHECK_THROWS_AS(CoefficientRing::parse("zmod:1"), Error);
    CHECK_THROWS_AS(CoefficientRing::parse("weird"), Error);
}
