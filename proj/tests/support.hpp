// Copyright 2026 The orbent Authors
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

// Helpers shared by the test programs. The operators here are built directly
// from occupation strings so they do not reuse the library's Fock code.
#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <random>

#include "orbent/fock.hpp"
#include "orbent/random.hpp"

namespace orbent::testing {

// Modes (A up, A down, B up, B down) live at these bits of the product index
// 4 * local_A + local_B with local = up + 2 * down.
inline int index_bit(int mode) {
  static constexpr std::array<int, 4> bit{2, 3, 0, 1};
  return bit[mode];
}

inline int occupation(int index, int mode) { return (index >> index_bit(mode)) & 1; }

// c_mode in the convention |n> = (c0^+)^n0 (c1^+)^n1 ... |vac>.
inline Eigen::Matrix<double, 16, 16> annihilator(int mode) {
  Eigen::Matrix<double, 16, 16> c = Eigen::Matrix<double, 16, 16>::Zero();
  for (int s = 0; s < 16; ++s) {
    if (!occupation(s, mode)) continue;
    int sign = 1;
    for (int k = 0; k < mode; ++k)
      if (occupation(s, k)) sign = -sign;
    c(s & ~(1 << index_bit(mode)), s) = sign;
  }
  return c;
}

struct PairOperators {
  Eigen::Matrix<double, 16, 16> n, sz, s2, n_a, n_b;
};

inline PairOperators pair_operators() {
  std::array<Eigen::Matrix<double, 16, 16>, 4> c;
  for (int m = 0; m < 4; ++m) c[m] = annihilator(m);
  auto num = [&](int m) -> Eigen::Matrix<double, 16, 16> { return c[m].transpose() * c[m]; };
  PairOperators ops;
  ops.n_a = num(0) + num(1);
  ops.n_b = num(2) + num(3);
  ops.n = ops.n_a + ops.n_b;
  ops.sz = 0.5 * (num(0) - num(1) + num(2) - num(3));
  const Eigen::Matrix<double, 16, 16> s_plus =
      c[0].transpose() * c[1] + c[2].transpose() * c[3];
  ops.s2 = ops.sz * ops.sz +
           0.5 * (s_plus * s_plus.transpose() + s_plus.transpose() * s_plus);
  return ops;
}

// Index of |a, b> for local states a, b in {0, up, down, updown}.
inline int ket(int a, int b) { return 4 * a + b; }

// Partial transpose on orbital B written out index by index.
inline Matrix16 transpose_b(const Matrix16& rho) {
  Matrix16 out;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int ap = 0; ap < 4; ++ap)
        for (int bp = 0; bp < 4; ++bp) out(4 * a + bp, 4 * ap + b) = rho(4 * a + b, 4 * ap + bp);
  return out;
}

inline double min_eigenvalue(const Matrix16& m) {
  Eigen::SelfAdjointEigenSolver<Matrix16> es(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

inline Matrix16 random_density(Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix16 a;
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 16; ++j) a(i, j) = Complex(g(rng), g(rng));
  Matrix16 rho = a * a.adjoint();
  return rho / rho.trace().real();
}

inline Vector16 singlet_vector() {
  Vector16 v = Vector16::Zero();
  v(ket(1, 2)) = 1.0 / std::sqrt(2.0);
  v(ket(2, 1)) = -1.0 / std::sqrt(2.0);
  return v;
}

}  // namespace orbent::testing
