#ifndef SVFRACTAL_PIPELINE_HPP
#define SVFRACTAL_PIPELINE_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "svfractal/approximation.hpp"
#include "svfractal/dimension.hpp"
#include "svfractal/invariant_measure.hpp"

namespace svf {

struct MeasureConfig {
  std::optional<std::vector<double>> explicit_p;  // default: proportional
  bool allow_degenerate = false;
  int n = 20000;
  int burn_in = 100;
  std::uint64_t seed = 1;
};

struct DimensionConfig {
  int k_max = 64;
  std::vector<double> scales = {1.0 / 16, 1.0 / 32, 1.0 / 64, 1.0 / 128,
                                1.0 / 256};
};

enum class BaseKind { Example, Explicit };

// Declarative description of one system; see README for the schema.
struct Config {
  double t1 = 0.0;
  double t_inf = 1.0;
  PartitionFamily family = PartitionFamily::Dyadic;
  double ratio = 0.5;
  std::vector<double> explicit_nodes;
  int truncation = 24;
  double alpha = 0.5;
  std::string phi_lower = "t^2+1";
  std::string phi_upper = "t^2+2";
  std::string h = "1";
  BaseKind base_kind = BaseKind::Example;
  std::string base_lower, base_upper;
  int grid_size = 4097;
  double tolerance = 1e-10;
  MeasureConfig measure;
  DimensionConfig dimension;

  // Throws ConfigError with a schema-level message.
  static Config from_json_text(const std::string& text);
  static Config from_file(const std::string& path);
};

// Builds the system lazily and runs the CLI commands, writing artifacts
// into an output directory.
class Pipeline {
public:
  explicit Pipeline(Config cfg);

  const Config& config() const { return cfg_; }
  const Partition& partition();
  const FractalSystem& system();
  const FractalFunction& fractal();

  void cmd_build(const std::string& out_dir);
  // Returns true when every (non-skipped) named invariant passes.
  bool cmd_verify(const std::string& out_dir);
  void cmd_chaos(const std::string& out_dir);
  void cmd_dims(const std::string& out_dir);
  void cmd_render(const std::string& out_dir);

private:
  ProbabilityVector probability();

  Config cfg_;
  std::optional<Partition> partition_;
  std::optional<FractalSystem> system_;
  std::optional<FractalFunction> fractal_;
};

}  // namespace svf

#endif
