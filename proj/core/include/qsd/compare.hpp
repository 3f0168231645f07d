// Copyright 2026 The qsd authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QSD_COMPARE_HPP_
#define QSD_COMPARE_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qsd/bounds.hpp"
#include "qsd/tolerances.hpp"

namespace qsd {

// What gets drawn each trial:
//   general:      Ginibre density matrices, simplex priors.
//   commuting:    states diagonal in one shared random basis (exactly
//                 solvable, so every bound is checked against the true qe).
//   equiprobable: Ginibre density matrices, priors fixed at 1/m.
//   structured:   the alpha-parametrized family (dim is m + 1 by
//                 construction; the configured dim is ignored).
enum class EnsembleKind { general, commuting, equiprobable, structured };

inline constexpr std::array<std::string_view, 4> kEnsembleKindNames = {
    "general", "commuting", "equiprobable", "structured"};

EnsembleKind parse_ensemble_kind(std::string_view name);  // ParseError

struct SweepConfig {
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  std::size_t m = 2;
  std::size_t dim = 2;
  EnsembleKind kind = EnsembleKind::general;
  // Per-trial records are kept for the first record_cap trials only; the
  // aggregate statistics always cover every trial.
  std::size_t record_cap = 0;
  Tolerances tol;
};

// One inequality (or equality) tracked across a sweep. slack >= 0 means the
// relation held: for an inequality lhs >= rhs the slack is lhs - rhs, for an
// equality it is -|lhs - rhs|. A violation is slack < -1e-9.
struct CheckStat {
  std::string name;
  std::size_t applied = 0;     // evaluations (per trial or per state pair)
  std::size_t violations = 0;
  double worst_slack = 0.0;    // smallest slack seen; meaningless if never
                               // applied (serialized as null)
};

struct TrialRecord {
  std::size_t index = 0;
  std::array<double, kNumBounds> values{};
  std::size_t winner = 0;  // smallest index within 1e-9 of the best bound
  bool tied = false;
  bool has_exact = false;  // exact_qe meaningful (solvable kinds only)
  double exact_qe = 0.0;
};

struct SweepSummary {
  SweepConfig config;
  std::string config_hash;  // fnv-1a over the canonical config rendering
  // wins[b] counts trials where bound b is the designated winner (largest
  // value, smallest index on 1e-9 ties), so wins sum to trials. tie_credits
  // counts the trials where b tied the winner without being it.
  std::array<std::size_t, kNumBounds> wins{};
  std::array<std::size_t, kNumBounds> tie_credits{};
  std::size_t tied_trials = 0;
  std::vector<CheckStat> checks;  // fixed order, independent of kind
  std::vector<TrialRecord> records;

  bool all_checks_pass() const;
  const CheckStat* check(std::string_view name) const;  // null if unknown
};

// Runs cfg.trials independent trials (trial i is seeded with seed XOR i, so
// results do not depend on execution order) and aggregates win counts plus
// the inequality suite:
//   l4_ge_l2, l2_ge_l3_over_m_minus_1      always
//   conditional_l4_ge_l3                   when max_i a_i >= (sum_i a_i)/2
//                                          with a_i = sum_{j!=i} p_i p_j F^2
//   equiprobable_l4_ge_l3                  equiprobable kind
//   lemma3_lower/upper                     per state pair (trace distance vs
//                                          fidelity sandwich)
//   lemma6_lower/upper                     per weighted pair
//   success_cap_le_1                       always
//   m2_l4_eq_helstrom, m2_l2_eq_helstrom,
//   m2_helstrom_ge_l3, m2_certificate      m = 2 only
//   bound_le_exact_qe                      solvable trials (m = 2 via the
//                                          two-state solver, commuting and
//                                          structured kinds)
//   structured_solver_agreement            structured kind (closed form vs
//                                          commuting solver)
// Throws Error on an invalid config (trials < 1, m < 2, dim < 2).
SweepSummary run_sweep(const SweepConfig& cfg);

// Descending ranking of the seven bounds with equality groups at 1e-9:
// neighbors within 1e-9 share a group, groups list ids ascending, and
// formatted renders e.g. "L4 > L5 = L2 > L6 > L3 > L0 = L1".
struct Ranking {
  std::vector<std::vector<BoundId>> groups;
  std::string formatted;
};

Ranking rank_bounds(const BoundReport& report);

// Stable-field-order JSON rendering (the CLI's --json payload for sweeps).
std::string summary_to_json(const SweepSummary& summary);

}  // namespace qsd

#endif  // QSD_COMPARE_HPP_
