#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qdeph/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using namespace qdeph::cli;

namespace {

fs::path scratch_dir(const std::string& tag) {
    const fs::path dir = fs::temp_directory_path() / ("qdeph_cli_" + tag);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

int run_cmd(const std::string& cmd) {
    const int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

const std::string kBinary = QDEPH_BINARY_PATH;

// quick config: coarse grids so CLI tests stay fast
const std::string kQuickCurve =
    "computation = gamma_curve\n"
    "s = 4\n"
    "coupling_combo = 0.12\n"
    "theta = 0.5\n"
    "n_list = 200\n"
    "t_min = 0.1\n"
    "t_max = 10\n"
    "points_per_decade = 12\n";

} // namespace

TEST_CASE("config parse / serialize round trip") {
    ScenarioConfig cfg = parse_config(kQuickCurve);
    CHECK(cfg.computation == "gamma_curve");
    CHECK(cfg.s == 4.0);
    CHECK(cfg.theta == 0.5);
    CHECK(cfg.n_list == std::vector<std::int64_t>{200});
    CHECK(cfg.out_name == "gamma_curve");
    const ScenarioConfig again = parse_config(cfg.serialize());
    CHECK(again.serialize() == cfg.serialize());
}

TEST_CASE("parse errors carry line diagnostics") {
    CHECK_THROWS_AS(parse_config("computation = gamma_curve\nnot a pair\n"), parse_error);
    try {
        parse_config("computation = gamma_curve\ns = not_a_number\n");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line == 2);
        CHECK(e.field == "s");
    }
    CHECK_THROWS_AS(parse_config("computation = gamma_curve\nbogus_key = 1\n"), parse_error);
    CHECK_THROWS_AS(parse_config("s = 4\n"), parse_error); // missing computation
    CHECK_THROWS_AS(preset_config("fig9"), parse_error);
}

TEST_CASE("validation names the violated invariant") {
    ScenarioConfig cfg = parse_config(kQuickCurve);
    cfg.s = -2.0;
    try {
        cfg.validate();
        FAIL("expected domain_error");
    } catch (const std::domain_error& e) {
        CHECK(std::string(e.what()).find("s must be > -1") != std::string::npos);
    }
    cfg = parse_config(kQuickCurve);
    cfg.n_list = {0};
    CHECK_THROWS_AS(cfg.validate(), std::domain_error);
    cfg = parse_config(kQuickCurve);
    cfg.t_max = -1.0;
    CHECK_THROWS_AS(cfg.validate(), std::domain_error);
}

TEST_CASE("gamma curve run is deterministic and finite") {
    const fs::path dir1 = scratch_dir("curve1");
    const fs::path dir2 = scratch_dir("curve2");
    const ScenarioConfig cfg = parse_config(kQuickCurve);
    run_scenario(cfg, dir1);
    run_scenario(cfg, dir2);
    const std::string a = slurp(dir1 / "gamma_curve.csv");
    CHECK(a == slurp(dir2 / "gamma_curve.csv"));
    CHECK(a.find("w_t,gamma_T0.5,delta") == 0);
    CHECK(a.find("nan") == std::string::npos);
    CHECK(a.find("inf") == std::string::npos);
}

TEST_CASE("threads do not change the bytes") {
    const fs::path dir1 = scratch_dir("thr1");
    const fs::path dir2 = scratch_dir("thr2");
    ScenarioConfig cfg = parse_config(kQuickCurve);
    cfg.threads = 1;
    run_scenario(cfg, dir1);
    cfg.threads = 4;
    run_scenario(cfg, dir2);
    CHECK(slurp(dir1 / "gamma_curve.csv") == slurp(dir2 / "gamma_curve.csv"));
}

TEST_CASE("zero coupling produces an all-zero gamma column") {
    const fs::path dir = scratch_dir("zero");
    ScenarioConfig cfg = parse_config(kQuickCurve);
    cfg.coupling_combo = 0.0;
    run_scenario(cfg, dir);
    std::ifstream in(dir / "gamma_curve.csv");
    std::string line;
    std::getline(in, line); // header
    while (std::getline(in, line)) {
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        CHECK(line.substr(c1 + 1, c2 - c1 - 1) == "0");
    }
}

TEST_CASE("meta sidecar round-trips into an identical run") {
    const fs::path dir1 = scratch_dir("meta1");
    const fs::path dir2 = scratch_dir("meta2");
    run_scenario(parse_config(kQuickCurve), dir1);
    const ScenarioConfig from_meta = load_config(dir1 / "gamma_curve.meta");
    run_scenario(from_meta, dir2);
    CHECK(slurp(dir1 / "gamma_curve.csv") == slurp(dir2 / "gamma_curve.csv"));
}

TEST_CASE("threshold computation emits a one-line report") {
    const fs::path dir = scratch_dir("thresh");
    const auto out = run_scenario(parse_config("computation = threshold\ns = 6\n"), dir);
    CHECK(out.report.find("all_time=true") != std::string::npos);
    const std::string csv = slurp(dir / "threshold.csv");
    CHECK(csv.find("all_time_suppression") != std::string::npos);
    CHECK(csv.find("true") != std::string::npos);
}

TEST_CASE("binary: exit codes") {
    const fs::path dir = scratch_dir("bin");
    // unknown preset -> 2
    CHECK(run_cmd(kBinary + " preset fig9 --out " + dir.string() + " >/dev/null 2>&1") == 2);
    // unparsable config -> 2
    spit(dir / "bad.cfg", "computation = gamma_curve\nwhat is this\n");
    CHECK(run_cmd(kBinary + " run " + (dir / "bad.cfg").string() + " --out " + dir.string() +
                  " >/dev/null 2>&1") == 2);
    // domain violation -> 3
    spit(dir / "dom.cfg", "computation = gamma_curve\ns = -2\n");
    CHECK(run_cmd(kBinary + " run " + (dir / "dom.cfg").string() + " --out " + dir.string() +
                  " >/dev/null 2>&1") == 3);
    // usage error -> 2
    CHECK(run_cmd(kBinary + " frobnicate >/dev/null 2>&1") == 2);
    // healthy run -> 0
    spit(dir / "ok.cfg", kQuickCurve);
    CHECK(run_cmd(kBinary + " run " + (dir / "ok.cfg").string() + " --out " + dir.string() +
                  " >/dev/null 2>&1") == 0);
    CHECK(fs::exists(dir / "gamma_curve.csv"));
    CHECK(fs::exists(dir / "gamma_curve.meta"));
}

TEST_CASE("binary: flag overrides reach the meta sidecar") {
    const fs::path dir = scratch_dir("flags");
    spit(dir / "ok.cfg", kQuickCurve);
    CHECK(run_cmd(kBinary + " run " + (dir / "ok.cfg").string() + " --out " + dir.string() +
                  " --rel-tol 1e-7 --seed 99 --threads 2 >/dev/null 2>&1") == 0);
    const std::string meta = slurp(dir / "gamma_curve.meta");
    CHECK(meta.find("rel_tol = 1e-07") != std::string::npos);
    CHECK(meta.find("seed = 99") != std::string::npos);
    CHECK(meta.find("artifact_version = ") != std::string::npos);
}
