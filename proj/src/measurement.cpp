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

#include "qmip/measurement.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <set>

#include "qmip/errors.hpp"
#include "qmip/linalg.hpp"

namespace qmip {

void ProjectiveMeasurement::validate(double tol) const {
  if (projectors.empty()) throw InvariantError("measurement has no outcomes");
  if (outcome_bits.size() != projectors.size())
    throw InvariantError("outcome label count mismatch");
  const Eigen::Index d = projectors[0].rows();
  if (d != static_cast<Eigen::Index>(uint64_t{1} << targets.size()))
    throw InvariantError("projector dimension does not match target count");
  size_t slots = outcome_bits[0].size();
  CMatrix sum = CMatrix::Zero(d, d);
  for (size_t i = 0; i < projectors.size(); ++i) {
    const CMatrix& p = projectors[i];
    if (p.rows() != d || p.cols() != d) throw InvariantError("projector shape mismatch");
    if (!is_hermitian(p, tol)) throw InvariantError("projector is not Hermitian");
    if (outcome_bits[i].size() != slots) throw InvariantError("ragged outcome labels");
    for (int b : outcome_bits[i])
      if (b != 1 && b != -1) throw InvariantError("outcome bits must be +-1");
    for (size_t k = 0; k < projectors.size(); ++k) {
      CMatrix prod = p * projectors[k];
      if (max_abs_diff(prod, i == k ? p : CMatrix::Zero(d, d).eval()) > tol)
        throw InvariantError("projectors are not orthogonal idempotents");
    }
    sum += p;
  }
  if (max_abs_diff(sum, CMatrix::Identity(d, d)) > tol)
    throw InvariantError("projectors do not sum to identity");
}

void Povm::validate(double tol) const {
  if (elements.empty()) throw InvariantError("POVM has no elements");
  const Eigen::Index d = elements[0].rows();
  if (d != static_cast<Eigen::Index>(uint64_t{1} << targets.size()))
    throw InvariantError("POVM dimension does not match target count");
  CMatrix sum = CMatrix::Zero(d, d);
  for (const CMatrix& e : elements) {
    if (e.rows() != d || e.cols() != d) throw InvariantError("POVM element shape mismatch");
    if (!is_hermitian(e, tol)) throw InvariantError("POVM element is not Hermitian");
    Eigen::SelfAdjointEigenSolver<CMatrix> es(e, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -tol)
      throw InvariantError("POVM element is not positive semidefinite");
    sum += e;
  }
  if (max_abs_diff(sum, CMatrix::Identity(d, d)) > tol)
    throw InvariantError("POVM elements do not sum to identity");
}

double dense_expectation(const StateVector& state, const CMatrix& op,
                         const std::vector<int>& targets, double tol) {
  StateVector applied = apply_dense(state, op, targets);
  std::complex<double> v = inner_product(state, applied);
  if (std::abs(v.imag()) > tol) throw InvariantError("expectation has imaginary part");
  return v.real();
}

ProjectiveMeasurement eigsign_observable(const CMatrix& a, const std::vector<int>& targets,
                                         RngStream& rng, double zero_tol) {
  if (!is_hermitian(a)) throw InvariantError("eigsign input must be Hermitian");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(a);
  if (es.info() != Eigen::Success) throw InvariantError("eigendecomposition failed");
  const Eigen::Index d = a.rows();
  CMatrix plus = CMatrix::Zero(d, d);
  CMatrix minus = CMatrix::Zero(d, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    double lam = es.eigenvalues()(k);
    CVector v = es.eigenvectors().col(k);
    CMatrix vv = v * v.adjoint();
    if (lam > zero_tol) {
      plus += vv;
    } else if (lam < -zero_tol) {
      minus += vv;
    } else if (rng.next_bool()) {
      plus += vv;
    } else {
      minus += vv;
    }
  }
  ProjectiveMeasurement m;
  m.targets = targets;
  m.projectors = {plus, minus};
  m.outcome_bits = {{+1}, {-1}};
  return m;
}

size_t JointTable::flat_index(const std::vector<size_t>& outcome) const {
  if (outcome.size() != outcome_counts.size()) throw InvariantError("outcome rank mismatch");
  size_t idx = 0;
  for (size_t p = 0; p < outcome.size(); ++p) {
    if (outcome[p] >= outcome_counts[p]) throw InvariantError("outcome index out of range");
    idx = idx * outcome_counts[p] + outcome[p];
  }
  return idx;
}

double JointTable::at(const std::vector<size_t>& outcome) const {
  return probabilities[flat_index(outcome)];
}

JointTable JointTable::drop_part(size_t part) const {
  if (part >= outcome_counts.size()) throw InvariantError("part index out of range");
  JointTable out;
  for (size_t p = 0; p < outcome_counts.size(); ++p)
    if (p != part) out.outcome_counts.push_back(outcome_counts[p]);
  size_t total = 1;
  for (size_t c : out.outcome_counts) total *= c;
  out.probabilities.assign(total, 0.0);
  std::vector<size_t> idx(outcome_counts.size(), 0);
  for (double p : probabilities) {
    std::vector<size_t> rest;
    for (size_t q = 0; q < idx.size(); ++q)
      if (q != part) rest.push_back(idx[q]);
    out.probabilities[out.flat_index(rest)] += p;
    for (size_t q = idx.size(); q-- > 0;) {
      if (++idx[q] < outcome_counts[q]) break;
      idx[q] = 0;
    }
  }
  return out;
}

namespace {

/// Orthonormal eigenbasis of a projective measurement: unitary whose columns
/// are range bases of the projectors, plus an outcome label per column.
struct RotatedBasis {
  CMatrix u;
  std::vector<size_t> column_outcome;
};

RotatedBasis rotated_basis(const ProjectiveMeasurement& part) {
  const Eigen::Index d = part.projectors[0].rows();
  RotatedBasis rb;
  rb.u = CMatrix::Zero(d, d);
  Eigen::Index col = 0;
  for (size_t o = 0; o < part.projectors.size(); ++o) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(part.projectors[o]);
    for (Eigen::Index k = 0; k < d; ++k) {
      if (es.eigenvalues()(k) > 0.5) {
        if (col >= d) throw InvariantError("projector ranks exceed dimension");
        rb.u.col(col) = es.eigenvectors().col(k);
        rb.column_outcome.push_back(o);
        ++col;
      }
    }
  }
  if (col != d) throw InvariantError("projector ranks do not fill the space");
  return rb;
}

}  // namespace

JointTable joint_distribution(const StateVector& state,
                              const std::vector<ProjectiveMeasurement>& parts) {
  std::set<int> used;
  for (const auto& part : parts) {
    part.validate();
    for (int t : part.targets) {
      if (!used.insert(t).second)
        throw InvariantError("joint distribution parts must act on disjoint qubits");
      if (t < 1 || static_cast<uint32_t>(t) > state.num_qubits())
        throw InvariantError("part target out of range");
    }
  }
  JointTable table;
  size_t total = 1;
  for (const auto& part : parts) {
    table.outcome_counts.push_back(part.num_outcomes());
    total *= part.num_outcomes();
  }
  table.probabilities.assign(total, 0.0);
  if (parts.empty()) {
    table.probabilities = {1.0};
    return table;
  }

  // Rotate each part to its eigenbasis, then bin amplitudes by outcome labels.
  StateVector rotated = state;
  std::vector<std::vector<size_t>> labels(parts.size());
  for (size_t p = 0; p < parts.size(); ++p) {
    RotatedBasis rb = rotated_basis(parts[p]);
    rotated = apply_dense(rotated, rb.u.adjoint(), parts[p].targets);
    labels[p] = rb.column_outcome;
  }
  std::vector<std::vector<uint64_t>> bit_of(parts.size());
  for (size_t p = 0; p < parts.size(); ++p)
    for (int t : parts[p].targets)
      bit_of[p].push_back(uint64_t{1} << (state.num_qubits() - t));
  const uint64_t dim = state.dim();
  for (uint64_t j = 0; j < dim; ++j) {
    double mass = std::norm(rotated[j]);
    if (mass == 0) continue;
    size_t idx = 0;
    for (size_t p = 0; p < parts.size(); ++p) {
      uint64_t sub = 0;
      for (uint64_t bit : bit_of[p]) sub = (sub << 1) | ((j & bit) ? 1 : 0);
      idx = idx * table.outcome_counts[p] + labels[p][sub];
    }
    table.probabilities[idx] += mass;
  }
  return table;
}

double povm_distance(const StateVector& state, const Povm& m, const Povm& n) {
  m.validate();
  n.validate();
  if (m.elements.size() != n.elements.size())
    throw InvariantError("POVMs must have matching outcome counts");
  double acc = 0;
  for (size_t a = 0; a < m.elements.size(); ++a) {
    CMatrix diff_applied;
    StateVector ma = apply_dense(state, matrix_sqrt_psd(m.elements[a]), m.targets);
    StateVector na = apply_dense(state, matrix_sqrt_psd(n.elements[a]), n.targets);
    double term = 0;
    for (uint64_t j = 0; j < state.dim(); ++j) term += std::norm(ma[j] - na[j]);
    acc += term;
  }
  return std::sqrt(acc);
}

double povm_consistency(const StateVector& state, const Povm& m, const Povm& n) {
  m.validate();
  n.validate();
  if (m.elements.size() != n.elements.size())
    throw InvariantError("POVMs must have matching outcome counts");
  double acc = 0;
  for (size_t a = 0; a < m.elements.size(); ++a) {
    StateVector ma = apply_dense(state, m.elements[a], m.targets);
    StateVector na = apply_dense(state, n.elements[a], n.targets);
    acc += inner_product(ma, na).real();
  }
  return acc;
}

}  // namespace qmip
