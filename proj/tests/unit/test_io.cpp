#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "sphavg/json_io.hpp"
#include "sphavg/manifest.hpp"
#include "sphavg/svg.hpp"

using namespace sphavg;
using io::json;

TEST_CASE("rational and point json round trips") {
    const Rational q(3, 5);
    CHECK(io::rational_from_json(io::to_json(q)) == q);
    const auto p = region::pt(3, {{2, 3}, {1, 1}, {0, 1}}, {1, 3});
    CHECK(io::point_from_json(io::to_json(p)) == p);
    CHECK(io::to_json(q)["num"] == 3);
    CHECK(io::to_json(q)["den"] == 5);
}

TEST_CASE("test-function json round trips") {
    using namespace funcs;
    const std::vector<TestFunction> suite = {
        Constant{2.5},
        Indicator{{-1.0, 0.25}},
        PowerLog{-1.0, 0.5, 2.0 / 3.0, 0.9},
        StepSum{{{{0.0, 1.0}, 2.0}, {{0.5, 3.0}, 1.0}}},
    };
    for (const auto& f : suite) {
        const json j = io::to_json(f);
        CHECK(io::to_json(io::function_from_json(j)) == j);
    }
    CHECK_THROWS_AS(io::function_from_json(json{{"type", "mystery"}}), error);
}

TEST_CASE("experiment configs round trip to equal values") {
    xpr::ScalingConfig sc;
    sc.family = {xpr::FamilyTag::B, 2};
    sc.point = region::pt(2, {{3, 5}, {3, 5}}, {2, 5});
    sc.scales = {0.0625, 0.03125};
    sc.resolution = 4096;
    sc.ratio_tol = 0.07;
    const json sj = io::to_json(sc);
    CHECK(io::to_json(io::scaling_config_from_json(sj)) == sj);

    xpr::BlowupConfig bc;
    bc.probe = xpr::ProbeTag::BE;
    bc.theta = 0.375;
    bc.k_from = 5;
    bc.k_to = 14;
    const json bj = io::to_json(bc);
    CHECK(io::to_json(io::blowup_config_from_json(bj)) == bj);

    xpr::DecayConfig dc;
    dc.n = 2;
    dc.xi_min = 12.0;
    dc.xi_max = 99.0;
    const json dj = io::to_json(dc);
    CHECK(io::to_json(io::decay_config_from_json(dj)) == dj);
}

TEST_CASE("twelve significant digits") {
    CHECK(io::fmt12(1.0 / 3.0) == "0.333333333333");
    CHECK(io::fmt12(1234567.0) == "1234567");
    CHECK(io::round12(1.0 / 3.0) == 0.333333333333);
    CHECK(io::fmt12(std::numeric_limits<double>::infinity()) == "inf");
}

TEST_CASE("svg emission mentions the labeled vertices") {
    const auto slice = region::diagonal_slice(region::build_region(2));
    const auto svg = io::slice_svg(slice);
    for (const char* name : {">O (", ">B (", ">M (", ">A (", ">F ("})
        CHECK(svg.find(name) != std::string::npos);
    CHECK(svg.find("<svg") == 0);

    const auto recs = region::named_endpoints(2);
    const auto panels = io::region_n2_svg(recs);
    CHECK(panels.find(">K'<") != std::string::npos);
    CHECK(panels.find("1/r") != std::string::npos);
}

TEST_CASE("atomic write and manifest") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "sphavg_io_test";
    fs::remove_all(dir);
    fs::create_directories(dir);

    io::write_text_atomic(dir / "a.txt", "payload\n");
    std::ifstream in(dir / "a.txt");
    std::string line;
    std::getline(in, line);
    CHECK(line == "payload");
    CHECK_FALSE(fs::exists(dir / "a.txt.tmp"));

    io::write_manifest(dir, {"norms", json{{"p", 2}}, {"a.txt"}});
    std::ifstream min(dir / "run_manifest.json");
    const json m = json::parse(min);
    CHECK(m.at("tool") == "sphavg");
    CHECK(m.at("command") == "norms");
    CHECK(m.at("outputs") == json::array({"a.txt"}));
    CHECK(m.contains("timestamp"));
    fs::remove_all(dir);
}

TEST_CASE("classification json carries the verdict strings") {
    const auto cls = region::make_classification(region::Verdict::Yes, region::Verdict::Unknown,
                                                 region::Verdict::Unknown,
                                                 region::Verdict::Unknown, "test");
    const json j = io::to_json(cls);
    CHECK(j.at("strong") == "yes");
    CHECK(j.at("restricted") == "yes");  // implied by strong
    CHECK(j.at("restricted_weak") == "yes");
}
