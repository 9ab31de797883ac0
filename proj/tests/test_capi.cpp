#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "svfractal.h"

namespace fs = std::filesystem;

namespace {

const char* kConfig = R"json({
  "interval": [0.0, 1.0],
  "partition": {"family": "dyadic", "N": 24},
  "alpha": 0.3,
  "phi": {"lower": "1-0.002*t*(1-t)", "upper": "1+0.002*t*(1-t)"},
  "base": {"kind": "explicit", "lower": "1", "upper": "1"},
  "grid_size": 1025,
  "tolerance": 1e-10,
  "measure": {"n": 2000, "burn_in": 100, "seed": 1}
})json";

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct TempDir {
  fs::path path;
  explicit TempDir(const char* tag)
      : path(fs::temp_directory_path() / (std::string("svf_capi_") + tag)) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("version string is present") {
  CHECK(svf_version() != nullptr);
  CHECK(std::strlen(svf_version()) > 0);
}

TEST_CASE("create, build, and destroy") {
  TempDir dir("build");
  svf_pipeline* p = nullptr;
  REQUIRE(svf_pipeline_create_from_json(kConfig, &p) == SVF_OK);
  REQUIRE(p != nullptr);
  CHECK(svf_residual(p) < 0.0);  // not yet computed
  CHECK(svf_run(p, "build", dir.path.c_str()) == SVF_OK);
  CHECK(svf_residual(p) >= 0.0);
  CHECK(svf_residual(p) <= 1e-8);
  CHECK(fs::exists(dir.path / "phi_alpha.csv"));
  CHECK(fs::exists(dir.path / "metadata.json"));
  svf_pipeline_destroy(p);
}

TEST_CASE("all commands produce their artifacts") {
  TempDir dir("all");
  svf_pipeline* p = nullptr;
  REQUIRE(svf_pipeline_create_from_json(kConfig, &p) == SVF_OK);
  CHECK(svf_run(p, "verify", dir.path.c_str()) == SVF_OK);
  CHECK(svf_run(p, "chaos", dir.path.c_str()) == SVF_OK);
  CHECK(svf_run(p, "dims", dir.path.c_str()) == SVF_OK);
  CHECK(svf_run(p, "render", dir.path.c_str()) == SVF_OK);
  CHECK(fs::exists(dir.path / "verify.json"));
  CHECK(fs::exists(dir.path / "atoms.csv"));
  CHECK(fs::exists(dir.path / "defect.json"));
  CHECK(fs::exists(dir.path / "dimension.json"));
  CHECK(fs::exists(dir.path / "render.svg"));
  const std::string svg = slurp(dir.path / "render.svg");
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  svf_pipeline_destroy(p);
}

TEST_CASE("same config and seed give byte-identical outputs") {
  TempDir d1("det1"), d2("det2");
  for (const auto* dir : {&d1, &d2}) {
    svf_pipeline* p = nullptr;
    REQUIRE(svf_pipeline_create_from_json(kConfig, &p) == SVF_OK);
    CHECK(svf_run(p, "build", dir->path.c_str()) == SVF_OK);
    CHECK(svf_run(p, "chaos", dir->path.c_str()) == SVF_OK);
    CHECK(svf_run(p, "dims", dir->path.c_str()) == SVF_OK);
    svf_pipeline_destroy(p);
  }
  for (const char* name :
       {"phi_alpha.csv", "metadata.json", "atoms.csv", "defect.json",
        "measure_metadata.json", "dimension.json"}) {
    CHECK(slurp(d1.path / name) == slurp(d2.path / name));
  }
}

TEST_CASE("config errors carry messages and the config code") {
  svf_pipeline* p = reinterpret_cast<svf_pipeline*>(0x1);
  CHECK(svf_pipeline_create_from_json("{not json", &p) == SVF_E_CONFIG);
  CHECK(p == nullptr);
  CHECK(std::strlen(svf_last_error(nullptr)) > 0);

  CHECK(svf_pipeline_create_from_json(R"json({"alpha": 0.5})json", &p) ==
        SVF_E_CONFIG);  // missing phi
  CHECK(svf_pipeline_create_from_json(
            R"json({"alpha": 2.0, "phi": {"lower": "1", "upper": "2"}})json", &p) ==
        SVF_E_CONFIG);

  // Malformed expression: reported as config error with a byte offset.
  CHECK(svf_pipeline_create_from_json(
            R"json({"alpha": 0.5, "phi": {"lower": "t++", "upper": "2"}})json", &p) ==
        SVF_E_CONFIG);
  CHECK(std::string(svf_last_error(nullptr)).find("offset") !=
        std::string::npos);
}

TEST_CASE("bad arguments and unknown commands") {
  TempDir dir("bad");
  svf_pipeline* p = nullptr;
  CHECK(svf_pipeline_create_from_json(kConfig, nullptr) == SVF_E_BADARG);
  CHECK(svf_pipeline_create(nullptr, &p) == SVF_E_BADARG);
  REQUIRE(svf_pipeline_create_from_json(kConfig, &p) == SVF_OK);
  CHECK(svf_run(p, "frobnicate", dir.path.c_str()) == SVF_E_BADARG);
  CHECK(std::strlen(svf_last_error(p)) > 0);
  CHECK(svf_run(nullptr, "build", dir.path.c_str()) == SVF_E_BADARG);
  svf_pipeline_destroy(p);
  svf_pipeline_destroy(nullptr);  // must be safe
}

TEST_CASE("missing config file is a config error") {
  svf_pipeline* p = nullptr;
  CHECK(svf_pipeline_create("/nonexistent/cfg.json", &p) == SVF_E_CONFIG);
  CHECK(p == nullptr);
}

TEST_CASE("verify failure surfaces as its own code") {
  // Band with the endpoint-violating base: endpoint_condition fails.
  const char* broken = R"json({
    "interval": [0.0, 1.0],
    "partition": {"family": "dyadic", "N": 24},
    "alpha": 0.5,
    "phi": {"lower": "t^2+1", "upper": "t^2+2"},
    "base": {"kind": "example"},
    "grid_size": 1025,
    "tolerance": 1e-10
  })json";
  TempDir dir("verify");
  svf_pipeline* p = nullptr;
  REQUIRE(svf_pipeline_create_from_json(broken, &p) == SVF_OK);
  CHECK(svf_run(p, "verify", dir.path.c_str()) == SVF_E_VERIFY);
  const std::string rep = slurp(dir.path / "verify.json");
  CHECK(rep.find("endpoint_condition") != std::string::npos);
  CHECK(rep.find("EndpointHypothesisViolated") != std::string::npos);
  svf_pipeline_destroy(p);
}
