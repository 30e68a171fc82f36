// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include <json.hpp>

namespace bc1 {

/// Outcome of one verification suite.
struct VerificationReport {
  std::string test;
  nlohmann::json params = nlohmann::json::object();
  double max_abs_dev = 0.0;
  double max_rel_dev = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  double seconds = 0.0;
  nlohmann::json details = nlohmann::json::object();
};

nlohmann::json to_json(const VerificationReport& r);

}  // namespace bc1
