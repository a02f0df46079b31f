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

#ifndef QMIP_LINALG_HPP
#define QMIP_LINALG_HPP

#include "qmip/pauli.hpp"

namespace qmip {

/// PSD square root via eigendecomposition; eigenvalues below -tol are an
/// error, eigenvalues in [-tol, 0) are clamped to zero.
CMatrix matrix_sqrt_psd(const CMatrix& m, double tol = 1e-9);

/// Largest singular value.
double operator_norm(const CMatrix& m);

bool is_hermitian(const CMatrix& m, double tol = 1e-9);

/// max_ij |a_ij - b_ij|.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

CMatrix kron(const CMatrix& a, const CMatrix& b);

}  // namespace qmip

#endif
