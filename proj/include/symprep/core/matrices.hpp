// Copyright 2026 The symprep Authors
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

#pragma once

#include "symprep/core/types.hpp"

namespace symprep::mat {

Matrix2 identity();
Matrix2 pauli_x();
Matrix2 pauli_z();
Matrix2 hadamard();

/** diag(-1, 1): flips the sign of |0>. */
Matrix2 minus_z();

/** diag(1, e^{i phi}). */
Matrix2 phase(double phi);

/**
 * [[sqrt g, sqrt(1-g)], [sqrt(1-g), -sqrt g]]. Real symmetric, so it is its
 * own inverse. |0> goes to sqrt(g)|0> + sqrt(1-g)|1>.
 */
Matrix2 rot(double gamma);

/**
 * X rot(beta) X. Sends |1> to sqrt(1-beta)|0> + sqrt(beta)|1>.
 */
Matrix2 flipped_rot(double beta);

Matrix2 adjoint(const Matrix2& m);
Matrix2 multiply(const Matrix2& a, const Matrix2& b);

/** Max-entry distance. */
double distance(const Matrix2& a, const Matrix2& b);

bool is_unitary(const Matrix2& m, double tol = 1e-12);
bool is_hermitian(const Matrix2& m, double tol = 1e-12);

}  // namespace symprep::mat
