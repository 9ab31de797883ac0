#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "svfractal.h"

namespace {

int to_exit_code(int status) {
  switch (status) {
    case SVF_OK:
      return 0;
    case SVF_E_CONFIG:
    case SVF_E_BADARG:
      return 2;
    default:
      return 3;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"set-valued fractal functions over countable partitions"};
  app.require_subcommand(1);

  std::string config_path, out_dir = ".";
  const char* names[] = {"build", "verify", "chaos", "dims", "render"};
  const char* briefs[] = {
      "compute the fractal function and write phi_alpha.csv + metadata.json",
      "run the invariant suite and write verify.json",
      "sample the invariant measure and write atoms.csv + defect JSON",
      "compute dimension bounds and write dimension.json",
      "write an SVG of the graph band with chaos atoms"};
  for (int i = 0; i < 5; ++i) {
    CLI::App* sub = app.add_subcommand(names[i], briefs[i]);
    sub->add_option("--config", config_path, "JSON config file")->required();
    sub->add_option("--out", out_dir, "output directory");
  }

  CLI11_PARSE(app, argc, argv);
  const std::string command = app.get_subcommands().front()->get_name();

  svf_pipeline* p = nullptr;
  int status = svf_pipeline_create(config_path.c_str(), &p);
  if (status != SVF_OK) {
    std::fprintf(stderr, "error: %s\n", svf_last_error(nullptr));
    return to_exit_code(status);
  }
  status = svf_run(p, command.c_str(), out_dir.c_str());
  if (status != SVF_OK)
    std::fprintf(stderr, "error: %s\n", svf_last_error(p));
  else if (command == "build")
    std::printf("residual %.3e\n", svf_residual(p));
  svf_pipeline_destroy(p);
  return to_exit_code(status);
}
