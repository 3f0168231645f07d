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

#include "reference.hpp"

#include <array>
#include <cmath>
#include <utility>

#include "qsd/bounds.hpp"
#include "qsd/compare.hpp"
#include "qsd/exact.hpp"
#include "qsd/serialization.hpp"

namespace qsd::ref {
namespace {

// Eigensolver-dependent quantities get 1e-7, plain closed-form arithmetic
// 1e-9.
constexpr double kEigTol = 1e-7;
constexpr double kArithTol = 1e-9;

Entry value_entry(std::string name, double actual, double expected,
                  double tolerance) {
  Entry e;
  e.name = std::move(name);
  e.expected = format_real(expected);
  e.actual = format_real(actual);
  e.abs_error = std::abs(actual - expected);
  e.tolerance = tolerance;
  e.pass = std::isfinite(actual) && e.abs_error <= tolerance;
  return e;
}

Entry text_entry(std::string name, std::string actual, std::string expected) {
  Entry e;
  e.name = std::move(name);
  e.pass = actual == expected;
  e.expected = std::move(expected);
  e.actual = std::move(actual);
  return e;
}

Entry threshold_entry(std::string name, double actual, double threshold) {
  Entry e;
  e.name = std::move(name);
  e.expected = "> " + format_real(threshold);
  e.actual = format_real(actual);
  e.tolerance = 0.0;
  e.pass = actual > threshold;
  return e;
}

void add_bounds_case(std::vector<Entry>& out, const std::string& prefix,
                     const Ensemble& e,
                     const std::array<double, kNumBounds>& expected,
                     const std::string& expected_order,
                     const Tolerances& tol) {
  const BoundReport report = all_bounds(e, tol);
  for (std::size_t b = 0; b < kNumBounds; ++b) {
    out.push_back(value_entry(prefix + "." + std::string(kBoundNames[b]),
                              report.values[b], expected[b], kEigTol));
  }
  out.push_back(text_entry(prefix + ".order", rank_bounds(report).formatted,
                           expected_order));
}

ComplexMatrix basis_projector(std::size_t dim, std::size_t k) {
  ComplexMatrix p(dim);
  p(k, k) = Complex(1.0, 0.0);
  return p;
}

}  // namespace

Ensemble case1() {
  return structured_to_ensemble(case5_params());
}

Ensemble case2() {
  ComplexMatrix zero(2);
  zero(0, 0) = Complex(1.0, 0.0);
  ComplexMatrix plus(2);
  plus(0, 0) = plus(0, 1) = plus(1, 0) = plus(1, 1) = Complex(0.5, 0.0);
  ComplexMatrix one(2);
  one(1, 1) = Complex(1.0, 0.0);
  return validate_ensemble({1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0},
                           {zero, plus, one});
}

Ensemble case3() {
  return structured_to_ensemble(
      validate_structured({1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0}, {0.5, 0.5, 0.5}));
}

Ensemble case4() {
  return structured_to_ensemble(
      validate_structured({0.1, 0.1, 0.8}, {0.9, 0.9, 0.9}));
}

StructuredEnsemble case5_params() {
  return validate_structured({1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0},
                             {0.5, 1.0 / 3.0, 0.25});
}

Povm case5_optimal_povm() {
  // Hypothesis 0 carries the largest p_i alpha_i (1/6 vs 1/9 vs 1/12), so it
  // absorbs the shared |0> direction.
  ComplexMatrix e0 = basis_projector(4, 0) + basis_projector(4, 1);
  return validate_povm(Povm::Kind::ambiguous,
                       {e0, basis_projector(4, 2), basis_projector(4, 3)});
}

Povm case5_unambiguous_povm() {
  return validate_povm(Povm::Kind::unambiguous,
                       {basis_projector(4, 0), basis_projector(4, 1),
                        basis_projector(4, 2), basis_projector(4, 3)});
}

StructuredEnsemble case6_params(double eps) {
  // Uniform priors 1/3; alphas chosen so the per-state masses p_i alpha_i
  // come out as (0.1, eps, eps).
  return validate_structured({1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0},
                             {0.3, 3.0 * eps, 3.0 * eps});
}

std::vector<Entry> evaluate_all(const Tolerances& tol) {
  std::vector<Entry> out;
  const double rt2 = std::sqrt(2.0);

  // Case 1. With weighted states (1/6,1/6,0,0), (1/9,0,2/9,0), (1/12,0,0,1/4)
  // on the diagonal, everything reduces to scalar arithmetic: L2 = 5/36,
  // L3 = 1/24, L4 = 7/36 (pivot 0 or 1 gives 29/36), L5 = (13 - sqrt 61)/36,
  // L6 = 1 - (10/13)^(1/4).
  add_bounds_case(out, "case1", case1(),
                  {0.0, 0.0, 5.0 / 36.0, 1.0 / 24.0, 7.0 / 36.0,
                   (13.0 - std::sqrt(61.0)) / 36.0,
                   1.0 - std::pow(10.0 / 13.0, 0.25)},
                  "L4 > L5 > L2 > L6 > L3 > L0 = L1", tol);
  {
    const ExactResult sol = solve_commuting(case1(), tol);
    out.push_back(value_entry("case1.qe", sol.qe, 7.0 / 36.0, kEigTol));
    out.push_back(text_entry("case1.certificate",
                             sol.certificate.pass ? "pass" : "fail", "pass"));
    // The optimal assignment puts |0> and |1> with hypothesis 0, so
    // R = sum_i p_i rho_i E_i = diag(1/6, 1/6, 2/9, 1/4).
    ComplexMatrix expected_r(4);
    expected_r(0, 0) = Complex(1.0 / 6.0, 0.0);
    expected_r(1, 1) = Complex(1.0 / 6.0, 0.0);
    expected_r(2, 2) = Complex(2.0 / 9.0, 0.0);
    expected_r(3, 3) = Complex(1.0 / 4.0, 0.0);
    out.push_back(value_entry(
        "case1.R_defect", (sol.certificate.r_matrix - expected_r).max_abs(),
        0.0, kEigTol));
  }

  // Case 2. sum_i p_i^2 rho_i^2 = (1/9)(I + |+><+|) has eigenvalues 2/9 and
  // 1/9, so L5 = 1 - (sqrt 2 + 1)/3 = (2 - sqrt 2)/3, the same value as L4
  // on this triple (both reduce to the same trace-norm expression here).
  add_bounds_case(out, "case2", case2(),
                  {1.0 / 3.0, 1.0 / 3.0, (2.0 - rt2) / 6.0, 1.0 / 9.0,
                   (2.0 - rt2) / 3.0, (2.0 - rt2) / 3.0,
                   1.0 - std::pow((5.0 + 2.0 * rt2) / 12.0, 0.25)},
                  "L0 = L1 > L4 = L5 > L3 > L6 > L2", tol);

  add_bounds_case(out, "case3", case3(),
                  {0.0, 1.0 / 3.0, 0.25, 1.0 / 12.0, 1.0 / 3.0,
                   (3.0 - std::sqrt(3.0)) / 6.0,
                   1.0 - std::pow(2.0 / 3.0, 0.25)},
                  "L1 = L4 > L2 > L5 > L6 > L3 > L0", tol);

  add_bounds_case(out, "case4", case4(),
                  {0.0, -47.0 / 25.0, 0.135, 0.1377, 0.18,
                   (90.0 - 9.0 * std::sqrt(66.0)) / 100.0,
                   1.0 - std::pow(0.694, 0.25)},
                  "L4 > L5 > L3 > L2 > L6 > L0 > L1", tol);

  // Case 5: qu = (1/3)(1/2 + 1/3 + 1/4) = 13/36, qe = qu - 1/6 = 7/36, and
  // 13/36 < 14/36 = 2 qe.
  {
    const StructuredSolution sol = solve_structured(case5_params(), tol);
    out.push_back(value_entry("case5.qu", sol.qu, 13.0 / 36.0, kArithTol));
    out.push_back(value_entry("case5.qe", sol.qe, 7.0 / 36.0, kArithTol));
    out.push_back(value_entry("case5.ratio", sol.ratio, 13.0 / 7.0,
                              kArithTol));
    out.push_back(text_entry("case5.twice_qe_holds",
                             sol.twice_qe_holds ? "true" : "false", "false"));
    const Certificate cert = certify_optimal(case1(), case5_optimal_povm(),
                                             tol);
    out.push_back(text_entry("case5.certificate", cert.pass ? "pass" : "fail",
                             "pass"));
    out.push_back(value_entry(
        "case5.unambiguous_failure",
        unambiguous_feasibility(case1(), case5_unambiguous_povm(), tol),
        13.0 / 36.0, kArithTol));
  }

  // Case 6: ratio = (0.1 + 2 eps) / (2 eps), so 501 at eps = 1e-4 and 50001
  // at eps = 1e-6.
  {
    const StructuredSolution at4 = solve_structured(case6_params(1e-4), tol);
    const StructuredSolution at6 = solve_structured(case6_params(1e-6), tol);
    out.push_back(value_entry("case6.ratio_at_1e-04", at4.ratio, 501.0, 1e-3));
    out.push_back(value_entry("case6.ratio_at_1e-06", at6.ratio, 50001.0,
                              1e-3));
    out.push_back(
        threshold_entry("case6.ratio_at_1e-04_exceeds", at4.ratio, 100.0));
    out.push_back(
        threshold_entry("case6.ratio_at_1e-06_exceeds", at6.ratio, 10000.0));
    out.push_back(text_entry("case6.ratio_monotone",
                             at6.ratio > at4.ratio ? "increasing"
                                                   : "not increasing",
                             "increasing"));
  }
  return out;
}

std::size_t count_failures(const std::vector<Entry>& entries) {
  std::size_t failures = 0;
  for (const Entry& e : entries) {
    if (!e.pass) ++failures;
  }
  return failures;
}

}  // namespace qsd::ref
