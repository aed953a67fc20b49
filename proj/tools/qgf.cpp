#include <cstdio>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "qgf/dualform.hpp"
#include "qgf/suites.hpp"

namespace {

int do_verify(const std::vector<std::string>& requested, qgf::SuiteConfig cfg, int jobs,
              bool fail_fast, const std::string& format, bool timings) {
  std::vector<std::string> names;
  if (requested.empty() || (requested.size() == 1 && requested[0] == "all")) {
    for (auto& info : qgf::suite_registry()) names.push_back(info.name);
  } else {
    for (auto& n : requested) {
      if (!qgf::has_suite(n)) {
        std::cerr << "unknown suite: " << n << "\n";
        return 2;
      }
      names.push_back(n);
    }
  }
  auto results = qgf::run_suites(names, cfg, jobs, fail_fast);
  std::string report = format == "json" ? qgf::render_json(results, cfg, timings)
                                        : qgf::render_text(results, cfg, timings);
  std::fputs(report.c_str(), stdout);
  for (auto& r : results)
    if (!r.ok()) return 1;
  return 0;
}

int do_list(const std::string& tag) {
  int shown = 0;
  for (auto& info : qgf::suite_registry()) {
    if (!tag.empty()) {
      bool hit = false;
      for (auto& t : info.tags)
        if (t == tag) hit = true;
      if (!hit) continue;
    }
    std::printf("%-24s %s\n", info.name.c_str(), info.description.c_str());
    ++shown;
  }
  if (shown == 0 && !tag.empty()) std::printf("no suites tagged '%s'\n", tag.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qgf: exact verification of the non-standard quantum ISO(1,1) structures"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run verification suites (default: all)");
  std::vector<std::string> names;
  verify->add_option("suites", names, "suite names, or 'all'");
  qgf::SuiteConfig cfg;
  int jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  bool fail_fast = false, timings = false, serial = false;
  std::string format = "text";
  int s_value = 99;
  verify->add_option("--order", cfg.order, "axiom truncation degree")->default_val(3);
  verify->add_option("--dual-order", cfg.dual_order, "structure tensor cutoff")->default_val(4);
  verify->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--fail-fast", fail_fast, "stop after the first failing suite");
  verify->add_option("--jobs", jobs, "suite-level parallelism");
  verify->add_option("--s", s_value, "restrict Cayley-Klein checks to one unit")
      ->check(CLI::IsMember({-1, 0, 1}));
  verify->add_flag("--timings", timings, "include wall times (breaks byte-identical reports)");
  verify->add_flag("--serial", serial, "disable the OpenMP kernels");

  auto* list = app.add_subcommand("list", "list registered suites");
  std::string tag;
  list->add_option("--tag", tag, "filter by tag");

  auto* dump = app.add_subcommand("dump-tensor", "print the structure tensor");
  int cutoff = 4;
  bool dump_serial = false;
  dump->add_option("--cutoff", cutoff, "grading cutoff")->default_val(4);
  dump->add_flag("--serial", dump_serial, "disable the OpenMP kernel");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (*verify) {
      cfg.s_filter = s_value;
      cfg.parallel_kernels = !serial;
      return do_verify(names, cfg, jobs, fail_fast, format, timings);
    }
    if (*list) return do_list(tag);
    if (*dump) {
      auto F = qgf::compute_structure_tensor(cutoff, !dump_serial);
      std::fputs(F.dump().c_str(), stdout);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
