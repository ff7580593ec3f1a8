// Commands behind the dmod executable.  Every command produces a Report whose
// JSON form is deterministic for identical inputs, flags and version.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dmod/dsl.hpp"

namespace dmod {

inline constexpr const char* kVersion = "0.3.0";

struct Options {
  std::optional<int> max_order;
  std::string format = "text";
  unsigned long seed = 1;
  std::vector<std::string> subst;
  std::vector<Q> row_scale, col_scale;  // selfadjoint
  int r = 0, s = 4;                     // pp
  bool timing = false;                  // add wall time (breaks byte reproducibility)
};

enum class Status { Ok, Inconclusive, Failed, Error };

struct Report {
  nlohmann::ordered_json j;
  Status status = Status::Ok;
  int exit_code() const;
};

const std::vector<std::string>& command_names();

// Run one command on a parsed system.
Report run_command(const std::string& command, const SystemDecl& decl, const Options& opt);
// Run the check suite of one registered fixture.
Report run_demo(const std::string& id, const Options& opt);
// All fixtures, workers from DMOD_WORKERS (default: hardware threads), ordered by id.
Report run_demo_all(const Options& opt);
// Error report with exit code 1.
Report error_report(const std::string& command, const std::string& kind, const std::string& message);

std::string render(const Report& rep, const std::string& format);

// FNV-1a of the canonical printed system
std::string digest(const SystemDecl& decl);

}  // namespace dmod
