// Copyright 2026 The qmip Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QMIP_MEASUREMENT_HPP
#define QMIP_MEASUREMENT_HPP

#include <vector>

#include "qmip/rng.hpp"
#include "qmip/statevector.hpp"

namespace qmip {

/// Projective measurement on a qubit subset: orthogonal projectors summing to
/// identity, one per outcome. Each outcome carries a tuple of +-1 answer bits.
struct ProjectiveMeasurement {
  std::vector<int> targets;
  std::vector<CMatrix> projectors;
  std::vector<std::vector<int>> outcome_bits;

  size_t num_outcomes() const { return projectors.size(); }
  size_t arity() const { return outcome_bits.empty() ? 0 : outcome_bits[0].size(); }

  /// Checks Hermiticity, orthogonality, completeness, and label shape.
  void validate(double tol = 1e-9) const;
};

/// POVM on a qubit subset: PSD elements summing to identity.
struct Povm {
  std::vector<int> targets;
  std::vector<CMatrix> elements;

  void validate(double tol = 1e-9) const;
};

/// <state| O |state> for a dense Hermitian operator on a subset. The
/// imaginary part must vanish within tolerance.
double dense_expectation(const StateVector& state, const CMatrix& op,
                         const std::vector<int>& targets, double tol = 1e-9);

/// Two-outcome measurement of sign(A) for Hermitian A: the +1 outcome
/// projects onto the strictly positive eigenspace, the -1 outcome onto the
/// strictly negative one, and each zero eigenvector is assigned to +1 or -1
/// with probability 1/2 using `rng` (fresh per invocation).
ProjectiveMeasurement eigsign_observable(const CMatrix& a, const std::vector<int>& targets,
                                         RngStream& rng, double zero_tol = 1e-9);

/// Joint outcome distribution of measurements on pairwise disjoint subsets.
struct JointTable {
  std::vector<size_t> outcome_counts;
  std::vector<double> probabilities;  // flat, part 0 slowest-varying

  size_t flat_index(const std::vector<size_t>& outcome) const;
  double at(const std::vector<size_t>& outcome) const;
  /// Marginal table after dropping one part.
  JointTable drop_part(size_t part) const;
};

JointTable joint_distribution(const StateVector& state,
                              const std::vector<ProjectiveMeasurement>& parts);

/// State-dependent distance sqrt(sum_a ||(sqrt(M^a) - sqrt(N^a)) psi||^2).
/// M and N must have matching outcome counts.
double povm_distance(const StateVector& state, const Povm& m, const Povm& n);

/// Consistency Re sum_a <psi| M^a N^a |psi>.
double povm_consistency(const StateVector& state, const Povm& m, const Povm& n);

}  // namespace qmip

#endif
