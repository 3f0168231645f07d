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

#ifndef QSD_TOOLS_REFERENCE_HPP_
#define QSD_TOOLS_REFERENCE_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "qsd/ensemble.hpp"
#include "qsd/tolerances.hpp"

// Built-in reference cases with closed-form expected values. Every constant
// here is derivable by hand from the case's definition (derivations in the
// .cpp); the `reference` command re-evaluates all of them and is the
// self-test that the numerics reproduce the closed forms.
namespace qsd::ref {

// Case 1: three diagonal states in dim 4 sharing the |0> direction with
// weights 1/2, 1/3, 1/4, uniform priors. Commuting, so exactly solvable.
Ensemble case1();

// Case 2: |0>, |+>, |1> with uniform priors (dim 2, pure, non-commuting).
Ensemble case2();

// Case 3: like case 1 with all shared weights 1/2.
Ensemble case3();

// Case 4: shared weights 0.9 and priors (0.1, 0.1, 0.8).
Ensemble case4();

// Case 1's parameters as a structured-family instance, its minimum-error
// POVM (|0> merged into hypothesis 0) and its unambiguous POVM.
StructuredEnsemble case5_params();
Povm case5_optimal_povm();
Povm case5_unambiguous_povm();

// The diverging-ratio family: uniform priors with p_i alpha_i =
// (0.1, eps, eps), so qu/qe = (0.1 + 2 eps) / (2 eps).
StructuredEnsemble case6_params(double eps);

struct Entry {
  std::string name;      // e.g. "case1.L4"
  std::string expected;  // rendered value (17 digits) or text
  std::string actual;
  double abs_error = 0.0;  // |actual - expected| for numeric entries
  double tolerance = 0.0;  // 0 for exact-text entries
  bool pass = false;
};

// Recomputes every reference value and compares against the closed forms.
std::vector<Entry> evaluate_all(const Tolerances& tol = {});

std::size_t count_failures(const std::vector<Entry>& entries);

}  // namespace qsd::ref

#endif  // QSD_TOOLS_REFERENCE_HPP_
