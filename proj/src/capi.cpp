#include "svfractal.h"

#include <exception>
#include <optional>
#include <string>

#include "svfractal/errors.hpp"
#include "svfractal/pipeline.hpp"

struct svf_pipeline {
  std::optional<svf::Pipeline> impl;
  std::string last_error;
  double residual = -1.0;
};

namespace {

std::string g_create_error;

int classify(const std::exception& e) {
  if (dynamic_cast<const svf::ConfigError*>(&e)) return SVF_E_CONFIG;
  if (dynamic_cast<const svf::Error*>(&e)) return SVF_E_NUMERIC;
  return SVF_E_NUMERIC;
}

int create_common(const char* text, bool is_path, svf_pipeline** out) {
  if (!text || !out) return SVF_E_BADARG;
  *out = nullptr;
  try {
    svf::Config cfg = is_path ? svf::Config::from_file(text)
                              : svf::Config::from_json_text(text);
    *out = new svf_pipeline{svf::Pipeline(std::move(cfg)), "", -1.0};
    return SVF_OK;
  } catch (const std::exception& e) {
    g_create_error = e.what();
    return classify(e);
  }
}

}  // namespace

extern "C" {

const char* svf_version(void) { return "1.0.0"; }

int svf_pipeline_create(const char* config_path, svf_pipeline** out) {
  return create_common(config_path, true, out);
}

int svf_pipeline_create_from_json(const char* json_text, svf_pipeline** out) {
  return create_common(json_text, false, out);
}

void svf_pipeline_destroy(svf_pipeline* p) { delete p; }

int svf_run(svf_pipeline* p, const char* command, const char* out_dir) {
  if (!p || !command || !out_dir) return SVF_E_BADARG;
  const std::string cmd(command);
  try {
    if (cmd == "build") {
      p->impl->cmd_build(out_dir);
    } else if (cmd == "verify") {
      if (!p->impl->cmd_verify(out_dir)) {
        p->last_error = "verification failed; see verify.json";
        p->residual = p->impl->fractal().residual;
        return SVF_E_VERIFY;
      }
    } else if (cmd == "chaos") {
      p->impl->cmd_chaos(out_dir);
    } else if (cmd == "dims") {
      p->impl->cmd_dims(out_dir);
    } else if (cmd == "render") {
      p->impl->cmd_render(out_dir);
    } else {
      p->last_error = "unknown command '" + cmd + "'";
      return SVF_E_BADARG;
    }
    p->residual = p->impl->fractal().residual;
    return SVF_OK;
  } catch (const std::exception& e) {
    p->last_error = e.what();
    return classify(e);
  }
}

double svf_residual(const svf_pipeline* p) { return p ? p->residual : -1.0; }

const char* svf_last_error(const svf_pipeline* p) {
  if (p) return p->last_error.c_str();
  return g_create_error.c_str();
}

}  // extern "C"
