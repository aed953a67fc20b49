#pragma once

#include <functional>

#include "qgf/hopf.hpp"

namespace qgf {

struct SuiteConfig {
  int order = 3;       // truncation degree for axiom suites
  int dual_order = 4;  // structure-tensor / dual-product cutoff
  int s_filter = 99;   // restrict Cayley-Klein checks to one unit if in {-1,0,1}
  bool parallel_kernels = true;
};

enum class CheckStatus { pass, fail, not_applicable };

struct SuiteCheck {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string witness;  // fail: the residual; pass: optional note
};

struct SuiteResult {
  std::string suite;
  std::vector<SuiteCheck> checks;
  long long millis = 0;
  bool ok() const {
    for (auto& c : checks)
      if (c.status == CheckStatus::fail) return false;
    return true;
  }
};

struct SuiteInfo {
  std::string name;
  std::string description;
  std::vector<std::string> tags;
};

/// stable registry of the verification suites
const std::vector<SuiteInfo>& suite_registry();
bool has_suite(const std::string& name);

SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg);
/// runs suites (parallel unless jobs == 1), results ordered by suite name;
/// fail_fast switches to serial execution and stops after the first failure
std::vector<SuiteResult> run_suites(std::vector<std::string> names, const SuiteConfig& cfg,
                                    int jobs, bool fail_fast);

/// deterministic reports; wall times are zeroed unless `timings` is set so
/// that identical runs render byte-identical
std::string render_text(const std::vector<SuiteResult>& results, const SuiteConfig& cfg,
                        bool timings);
std::string render_json(const std::vector<SuiteResult>& results, const SuiteConfig& cfg,
                        bool timings);

}  // namespace qgf
