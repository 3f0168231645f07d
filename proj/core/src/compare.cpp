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

#include "qsd/compare.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "qsd/ensemble.hpp"
#include "qsd/errors.hpp"
#include "qsd/exact.hpp"
#include "qsd/random.hpp"
#include "qsd/serialization.hpp"
#include "qsd/spectral.hpp"

namespace qsd {
namespace {

constexpr double kSlackTol = 1e-9;   // violation threshold and tie window
constexpr double kInf = std::numeric_limits<double>::infinity();

// Fixed check order; serialization and tests rely on it.
enum CheckId : std::size_t {
  kL4GeL2 = 0,
  kL2GeL3Scaled,
  kConditionalL4GeL3,
  kEquiprobableL4GeL3,
  kLemma3Lower,
  kLemma3Upper,
  kLemma6Lower,
  kLemma6Upper,
  kSuccessCapLe1,
  kM2L4EqHelstrom,
  kM2L2EqHelstrom,
  kM2HelstromGeL3,
  kM2Certificate,
  kBoundLeExactQe,
  kStructuredAgreement,
  kNumChecks,
};

constexpr std::array<std::string_view, kNumChecks> kCheckNames = {
    "l4_ge_l2",
    "l2_ge_l3_over_m_minus_1",
    "conditional_l4_ge_l3",
    "equiprobable_l4_ge_l3",
    "lemma3_lower",
    "lemma3_upper",
    "lemma6_lower",
    "lemma6_upper",
    "success_cap_le_1",
    "m2_l4_eq_helstrom",
    "m2_l2_eq_helstrom",
    "m2_helstrom_ge_l3",
    "m2_certificate",
    "bound_le_exact_qe",
    "structured_solver_agreement",
};

void apply_check(std::vector<CheckStat>& checks, CheckId id, double slack) {
  CheckStat& s = checks[id];
  ++s.applied;
  if (slack < -kSlackTol) ++s.violations;
  s.worst_slack = std::min(s.worst_slack, slack);
}

std::string canonical_config(const SweepConfig& cfg) {
  std::string s;
  s += "seed=" + std::to_string(cfg.seed);
  s += ";trials=" + std::to_string(cfg.trials);
  s += ";m=" + std::to_string(cfg.m);
  s += ";dim=" + std::to_string(cfg.dim);
  s += ";kind=";
  s += kEnsembleKindNames[static_cast<std::size_t>(cfg.kind)];
  s += ";record_cap=" + std::to_string(cfg.record_cap);
  s += ";tol_eig=" + format_real(cfg.tol.tol_eig);
  s += ";tol_psd=" + format_real(cfg.tol.tol_psd);
  s += ";tol_orth=" + format_real(cfg.tol.tol_orth);
  s += ";tol_recon=" + format_real(cfg.tol.tol_recon);
  s += ";tol_rank=" + format_real(cfg.tol.tol_rank);
  return s;
}

// One trial's inputs: the realized ensemble plus, for the structured kind,
// the parameters it came from.
struct TrialDraw {
  Ensemble ensemble;
  bool structured = false;
  StructuredEnsemble params;
};

TrialDraw draw_trial(const SweepConfig& cfg, std::uint64_t seed) {
  TrialDraw draw;
  switch (cfg.kind) {
    case EnsembleKind::general:
      draw.ensemble = random_ensemble(seed, cfg.m, cfg.dim, cfg.tol);
      break;
    case EnsembleKind::commuting:
      draw.ensemble = random_commuting_ensemble(seed, cfg.m, cfg.dim, cfg.tol);
      break;
    case EnsembleKind::equiprobable: {
      // Same state model as general but priors pinned at 1/m; states are
      // drawn in index order.
      Rng rng(seed);
      std::vector<double> priors(cfg.m, 1.0 / static_cast<double>(cfg.m));
      std::vector<ComplexMatrix> states;
      states.reserve(cfg.m);
      for (std::size_t i = 0; i < cfg.m; ++i) {
        states.push_back(random_density(rng, cfg.dim));
      }
      draw.ensemble =
          validate_ensemble(std::move(priors), std::move(states), cfg.tol);
      break;
    }
    case EnsembleKind::structured: {
      // Draw order: priors first, then alphas. dim is m + 1 regardless of
      // the configured value.
      Rng rng(seed);
      std::vector<double> priors = rng.simplex(cfg.m);
      std::vector<double> alphas(cfg.m, 0.0);
      for (double& a : alphas) a = rng.uniform();
      draw.params =
          validate_structured(std::move(priors), std::move(alphas), cfg.tol);
      draw.ensemble = structured_to_ensemble(draw.params, cfg.tol);
      draw.structured = true;
      break;
    }
  }
  return draw;
}

}  // namespace

EnsembleKind parse_ensemble_kind(std::string_view name) {
  for (std::size_t i = 0; i < kEnsembleKindNames.size(); ++i) {
    if (kEnsembleKindNames[i] == name) return static_cast<EnsembleKind>(i);
  }
  throw ParseError("unknown ensemble kind '" + std::string(name) +
                   "' (want general, commuting, equiprobable or structured)");
}

bool SweepSummary::all_checks_pass() const {
  for (const CheckStat& c : checks) {
    if (c.violations > 0) return false;
  }
  return true;
}

const CheckStat* SweepSummary::check(std::string_view name) const {
  for (const CheckStat& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

SweepSummary run_sweep(const SweepConfig& cfg) {
  if (cfg.trials < 1) throw Error("sweep config: trials must be >= 1");
  if (cfg.m < 2) throw Error("sweep config: m must be >= 2");
  if (cfg.dim < 2) throw Error("sweep config: dim must be >= 2");

  SweepSummary summary;
  summary.config = cfg;
  summary.config_hash = fnv1a64_hex(canonical_config(cfg));
  summary.checks.resize(kNumChecks);
  for (std::size_t i = 0; i < kNumChecks; ++i) {
    summary.checks[i].name = std::string(kCheckNames[i]);
    summary.checks[i].worst_slack = kInf;
  }

  const Tolerances& tol = cfg.tol;

  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    const TrialDraw draw = draw_trial(cfg, trial_seed(cfg.seed, trial));
    const Ensemble& e = draw.ensemble;
    const std::size_t m = e.m();

    const BoundReport report = all_bounds(e, tol);
    const double l2 = report.value(BoundId::l2);
    const double l3 = report.value(BoundId::l3);
    const double l4 = report.value(BoundId::l4);

    // Winner bookkeeping: the largest bound, smallest index on ties.
    double best = -kInf;
    for (double v : report.values) best = std::max(best, v);
    std::size_t winner = kNumBounds;
    bool tied = false;
    for (std::size_t b = 0; b < kNumBounds; ++b) {
      if (report.values[b] >= best - kSlackTol) {
        if (winner == kNumBounds) {
          winner = b;
        } else {
          tied = true;
          ++summary.tie_credits[b];
        }
      }
    }
    ++summary.wins[winner];
    if (tied) ++summary.tied_trials;

    apply_check(summary.checks, kL4GeL2, l4 - l2);
    apply_check(summary.checks, kL2GeL3Scaled,
                l2 - l3 / static_cast<double>(m - 1));
    apply_check(summary.checks, kSuccessCapLe1,
                1.0 - *std::min_element(report.l4_per_k.begin(),
                                        report.l4_per_k.end()));
    if (cfg.kind == EnsembleKind::equiprobable) {
      apply_check(summary.checks, kEquiprobableL4GeL3, l4 - l3);
    }

    // Pairwise fidelities feed the two sandwiches and the conditional
    // criterion below.
    std::vector<double> a(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        const double f = fidelity(e.states[i], e.states[j], tol);
        const double pi = e.priors[i];
        const double pj = e.priors[j];
        a[i] += pi * pj * f * f;
        a[j] += pi * pj * f * f;

        const double t = trace_norm(e.states[i] - e.states[j], tol);
        apply_check(summary.checks, kLemma3Lower, t - 2.0 * (1.0 - f));
        apply_check(summary.checks, kLemma3Upper,
                    2.0 * std::sqrt(std::max(0.0, 1.0 - f * f)) - t);

        ComplexMatrix wi = e.states[i];
        wi *= Complex(pi, 0.0);
        ComplexMatrix wj = e.states[j];
        wj *= Complex(pj, 0.0);
        const double w = trace_norm(wi - wj, tol);
        apply_check(summary.checks, kLemma6Lower,
                    w - (pi + pj - 2.0 * std::sqrt(pi * pj) * f));
        apply_check(summary.checks, kLemma6Upper,
                    (pi + pj - 2.0 * pi * pj * f * f) - w);
      }
    }
    const double a_sum = std::accumulate(a.begin(), a.end(), 0.0);
    const double a_max = *std::max_element(a.begin(), a.end());
    if (a_max >= 0.5 * a_sum) {
      apply_check(summary.checks, kConditionalL4GeL3, l4 - l3);
    }

    bool has_exact = false;
    double exact_qe = 0.0;

    if (m == 2) {
      const double h = *report.helstrom;
      apply_check(summary.checks, kM2L4EqHelstrom, -std::abs(l4 - h));
      apply_check(summary.checks, kM2L2EqHelstrom, -std::abs(l2 - h));
      apply_check(summary.checks, kM2HelstromGeL3, h - l3);
      try {
        const ExactResult two = solve_two_state(e, tol);
        apply_check(summary.checks, kM2Certificate,
                    two.certificate.min_margin);
        has_exact = true;
        exact_qe = two.qe;
      } catch (const CertificateFailed&) {
        apply_check(summary.checks, kM2Certificate, -1.0);
      }
    }

    if (draw.structured) {
      const StructuredSolution sol = solve_structured(draw.params, tol);
      const ExactResult classical = solve_commuting(e, tol);
      apply_check(summary.checks, kStructuredAgreement,
                  -std::abs(sol.qe - classical.qe));
      has_exact = true;
      exact_qe = sol.qe;
    } else if (cfg.kind == EnsembleKind::commuting && m != 2) {
      has_exact = true;
      exact_qe = solve_commuting(e, tol).qe;
    }

    if (has_exact) {
      for (double v : report.values) {
        apply_check(summary.checks, kBoundLeExactQe, exact_qe - v);
      }
      if (report.helstrom) {
        apply_check(summary.checks, kBoundLeExactQe,
                    exact_qe - *report.helstrom);
      }
    }

    if (trial < cfg.record_cap) {
      TrialRecord rec;
      rec.index = trial;
      rec.values = report.values;
      rec.winner = winner;
      rec.tied = tied;
      rec.has_exact = has_exact;
      rec.exact_qe = exact_qe;
      summary.records.push_back(std::move(rec));
    }
  }
  return summary;
}

Ranking rank_bounds(const BoundReport& report) {
  std::array<std::size_t, kNumBounds> order;
  for (std::size_t i = 0; i < kNumBounds; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     if (report.values[a] != report.values[b]) {
                       return report.values[a] > report.values[b];
                     }
                     return a < b;
                   });

  Ranking ranking;
  // Chain rule: a bound joins the current group when it sits within 1e-9 of
  // the previous (larger) one, so near-ties are never split by a third value
  // between them.
  for (std::size_t idx = 0; idx < kNumBounds; ++idx) {
    const std::size_t b = order[idx];
    if (idx == 0 || report.values[order[idx - 1]] - report.values[b] >
                        kSlackTol) {
      ranking.groups.emplace_back();
    }
    ranking.groups.back().push_back(static_cast<BoundId>(b));
  }
  for (auto& group : ranking.groups) {
    std::sort(group.begin(), group.end());
  }

  std::string text;
  for (std::size_t g = 0; g < ranking.groups.size(); ++g) {
    if (g > 0) text += " > ";
    for (std::size_t i = 0; i < ranking.groups[g].size(); ++i) {
      if (i > 0) text += " = ";
      text += kBoundNames[static_cast<std::size_t>(ranking.groups[g][i])];
    }
  }
  ranking.formatted = std::move(text);
  return ranking;
}

std::string summary_to_json(const SweepSummary& summary) {
  JsonWriter w;
  w.begin_object();
  w.key("config").begin_object();
  w.key("seed").value(summary.config.seed);
  w.key("trials").value(summary.config.trials);
  w.key("m").value(summary.config.m);
  w.key("dim").value(summary.config.dim);
  w.key("kind").value(
      kEnsembleKindNames[static_cast<std::size_t>(summary.config.kind)]);
  w.key("record_cap").value(summary.config.record_cap);
  w.key("tolerances").begin_object();
  w.key("tol_eig").value(summary.config.tol.tol_eig);
  w.key("tol_psd").value(summary.config.tol.tol_psd);
  w.key("tol_orth").value(summary.config.tol.tol_orth);
  w.key("tol_recon").value(summary.config.tol.tol_recon);
  w.key("tol_rank").value(summary.config.tol.tol_rank);
  w.end_object();
  w.end_object();
  w.key("config_hash").value(summary.config_hash);

  w.key("wins").begin_array(true);
  for (std::size_t v : summary.wins) w.value(v);
  w.end_array();
  w.key("tie_credits").begin_array(true);
  for (std::size_t v : summary.tie_credits) w.value(v);
  w.end_array();
  w.key("tied_trials").value(summary.tied_trials);
  w.key("all_checks_pass").value(summary.all_checks_pass());

  w.key("checks").begin_array();
  for (const CheckStat& c : summary.checks) {
    w.begin_object();
    w.key("name").value(c.name);
    w.key("applied").value(c.applied);
    w.key("violations").value(c.violations);
    w.key("worst_slack");
    if (c.applied == 0) {
      w.null_value();
    } else {
      w.value(c.worst_slack);
    }
    w.end_object();
  }
  w.end_array();

  w.key("records").begin_array();
  for (const TrialRecord& r : summary.records) {
    w.begin_object();
    w.key("trial").value(r.index);
    w.key("values").begin_array(true);
    for (double v : r.values) w.value(v);
    w.end_array();
    w.key("winner").value(r.winner);
    w.key("tied").value(r.tied);
    if (r.has_exact) {
      w.key("exact_qe").value(r.exact_qe);
    }
    w.end_object();
  }
  w.end_array();

  w.end_object();
  return w.take();
}

}  // namespace qsd
