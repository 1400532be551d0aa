#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "lorcat/cli.hpp"
#include "lorcat/vecmat.hpp"

using namespace lorcat;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    set_tolerance(1e-9);
    return {code, out.str(), err.str()};
}

std::string scene(const char* name) { return std::string(LORCAT_SCENE_DIR) + "/" + name; }

}  // namespace

TEST_CASE("check exit codes") {
    CHECK(run({"--scene", scene("demo.scene.json"), "check"}).code == kExitPass);
    CHECK(run({"--scene", scene("galilean.scene.json"), "check"}).code == kExitPass);
    CHECK(run({"--scene", scene("faulty.scene.json"), "check"}).code == kExitCheckFailure);
    CHECK(run({"--scene", scene("broken.scene.json"), "check"}).code == kExitUsage);
    CHECK(run({"--scene", scene("superluminal.scene.json"), "check"}).code == kExitUsage);
    CHECK(run({"--scene", scene("missing.scene.json"), "check"}).code == kExitUsage);
    CHECK(run({"check"}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({}).code == kExitUsage);
}

TEST_CASE("broken scene names the line") {
    const Run r = run({"--scene", scene("broken.scene.json"), "check"});
    CHECK(r.err.find("line") != std::string::npos);
}

TEST_CASE("json check output is byte identical across runs") {
    const std::vector<std::string> args{"--scene", scene("demo.scene.json"), "--json", "--seed", "3", "check"};
    const Run a = run(args), b = run(args);
    CHECK(a.out == b.out);
    const auto j = nlohmann::json::parse(a.out);
    CHECK(j["pass"] == true);
    CHECK(j["seed"] == 3);
    CHECK(j["checks"].size() >= 5);
}

TEST_CASE("empty checks list passes with an empty report") {
    const Run r = run({"--scene", scene("empty_checks.scene.json"), "--json", "check"});
    CHECK(r.code == kExitPass);
    CHECK(nlohmann::json::parse(r.out)["checks"].empty());
}

TEST_CASE("transform") {
    const Run r = run({"--scene", scene("demo.scene.json"), "--json", "transform", "--frame", "rocket"});
    REQUIRE(r.code == kExitPass);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["image"][0].get<double>() == doctest::Approx(1.25));
    CHECK(j["image"][1].get<double>() == doctest::Approx(-0.75));
    CHECK(run({"--scene", scene("demo.scene.json"), "transform", "--frame", "ghost"}).code == kExitUsage);
    CHECK(run({"--scene", scene("demo.scene.json"), "transform", "--frame", "rocket", "--event", "1,2"}).code ==
          kExitUsage);
}

TEST_CASE("compose reports the Wigner angle") {
    const Run r = run({"--scene", scene("thomas.scene.json"), "--json", "compose", "east", "lab", "north"});
    REQUIRE(r.code == kExitPass);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["wigner_angle"].get<double>() == doctest::Approx(0.1433475689053662).epsilon(1e-12));
    CHECK(j["residual"].get<double>() < 1e-12);
    CHECK(r.out.find("-0.0") == std::string::npos);

    const Run text = run({"--scene", scene("thomas.scene.json"), "compose", "east", "lab", "north"});
    CHECK(text.out.find("0.143347568905") != std::string::npos);
}

TEST_CASE("cscan") {
    const Run r = run({"--json", "cscan", "--velocity", "1,0,0"});
    REQUIRE(r.code == kExitPass);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["rows"].size() == 5);
    CHECK(run({"cscan", "--velocity", "20,0,0"}).code == kExitUsage);
    CHECK(run({"cscan", "--velocity", "1,0,0", "--c-values", "100,10"}).code == kExitUsage);
}

TEST_CASE("tolerance flag") {
    CHECK(run({"--scene", scene("faulty.scene.json"), "--tol", "0.1", "check"}).code == kExitPass);
    CHECK(run({"--scene", scene("demo.scene.json"), "--tol", "-1", "check"}).code == kExitUsage);
}
