// SPDX-License-Identifier: Apache-2.0
//
// Exact verification suites over the rational engine. Deviations are the
// largest coefficient of lhs - rhs, so a passing suite reports exactly 0.
#pragma once

#include "bc1/params.hpp"
#include "bc1/report.hpp"

namespace bc1 {

nlohmann::json params_json(const AlgebraParams& p);

/// Even and odd Bernstein-Sato identities for m = 0..m_max.
VerificationReport verify_bernstein(const AlgebraParams& p, int m_max);

/// rodrigues_span == direct_q_span for n <= n_max, k <= k_max, both parities,
/// and the weighted Bernstein-Sato identities for m <= weighted_m_max, k <= k_max.
VerificationReport verify_rodrigues(const AlgebraParams& p, int n_max, int k_max, int weighted_m_max = 4);

}  // namespace bc1
