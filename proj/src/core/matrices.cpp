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

#include "symprep/core/matrices.hpp"

#include <algorithm>
#include <cmath>

namespace symprep::mat {

namespace {

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

}  // namespace

Matrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

Matrix2 pauli_x() { return {0.0, 1.0, 1.0, 0.0}; }

Matrix2 pauli_z() { return {1.0, 0.0, 0.0, -1.0}; }

Matrix2 hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  return {s, s, s, -s};
}

Matrix2 minus_z() { return {-1.0, 0.0, 0.0, 1.0}; }

Matrix2 phase(double phi) {
  return {1.0, 0.0, 0.0, std::polar(1.0, phi)};
}

Matrix2 rot(double gamma) {
  if (gamma < -1e-12 || gamma > 1.0 + 1e-12) {
    throw PreconditionError("rot: parameter outside [0,1]");
  }
  const double a = std::sqrt(clamp01(gamma));
  const double b = std::sqrt(clamp01(1.0 - gamma));
  return {a, b, b, -a};
}

Matrix2 flipped_rot(double beta) {
  if (beta < -1e-12 || beta > 1.0 + 1e-12) {
    throw PreconditionError("flipped_rot: parameter outside [0,1]");
  }
  const double a = std::sqrt(clamp01(beta));
  const double b = std::sqrt(clamp01(1.0 - beta));
  return {-a, b, b, a};
}

Matrix2 adjoint(const Matrix2& m) {
  return {std::conj(m[0]), std::conj(m[2]), std::conj(m[1]),
          std::conj(m[3])};
}

Matrix2 multiply(const Matrix2& a, const Matrix2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

double distance(const Matrix2& a, const Matrix2& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < 4; ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

bool is_unitary(const Matrix2& m, double tol) {
  return distance(multiply(adjoint(m), m), identity()) < tol;
}

bool is_hermitian(const Matrix2& m, double tol) {
  return distance(m, adjoint(m)) < tol;
}

}  // namespace symprep::mat
