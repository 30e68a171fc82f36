// SPDX-License-Identifier: Apache-2.0
#include "bc1/report.hpp"

namespace bc1 {

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json j = {{"test", r.test},           {"params", r.params},
                      {"max_abs_dev", r.max_abs_dev}, {"max_rel_dev", r.max_rel_dev},
                      {"tolerance", r.tolerance}, {"pass", r.pass},
                      {"seconds", r.seconds}};
  if (!r.details.empty()) j["details"] = r.details;
  return j;
}

}  // namespace bc1
