#pragma once

// The acceptance suites, shared by the acceptance test binary and `jordan check`.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "jordan/json_io.hpp"

namespace jordan {

struct CheckOptions {
  std::uint64_t seed = 42;
  /// Upper end of the dimension range; 0 keeps each suite's default.
  std::size_t max_n = 0;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  Json data = Json::object();
  double seconds = 0;
};

/// Suite names in criterion order.
const std::vector<std::string>& check_names();
bool is_check_name(const std::string& name);

/// Runs one suite; unexpected exceptions count as failure with the message as detail.
CheckResult run_check(const std::string& name, const CheckOptions& options);

Json check_result_to_json(const CheckResult& r);

}  // namespace jordan
