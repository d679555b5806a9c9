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

#include <bit>
#include <cmath>
#include <vector>

#include "orbent/oracle.hpp"

namespace orbent {

Complex pfaffian(Eigen::MatrixXcd a) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw InvalidArgument("pfaffian needs a square matrix");
  if (n % 2 == 1) return 0.0;
  Complex pf = 1.0;
  // Parlett-Reid tridiagonalization with partial pivoting.
  for (Eigen::Index k = 0; k + 1 < n; k += 2) {
    Eigen::Index kp = k + 1;
    a.col(k).tail(n - k - 1).cwiseAbs().maxCoeff(&kp);
    kp += k + 1;
    if (kp != k + 1) {
      a.row(k + 1).swap(a.row(kp));
      a.col(k + 1).swap(a.col(kp));
      pf = -pf;
    }
    if (a(k + 1, k) == Complex(0.0)) return 0.0;
    pf *= a(k, k + 1);
    if (k + 2 < n) {
      const Eigen::Index m = n - k - 2;
      const Eigen::VectorXcd tau = a.row(k).tail(m).transpose() / a(k, k + 1);
      const Eigen::VectorXcd col = a.col(k + 1).tail(m);
      a.bottomRightCorner(m, m) += tau * col.transpose() - col * tau.transpose();
    }
  }
  return pf;
}

namespace {

struct Ladder {
  int mode;
  bool creation;
};

// <o_i o_j> for a number-conserving Gaussian state.
Complex contraction(const Ladder& a, const Ladder& b, const Matrix4c& c) {
  if (a.creation == b.creation) return 0.0;
  if (a.creation) return c(a.mode, b.mode);
  return (a.mode == b.mode ? 1.0 : 0.0) - c(b.mode, a.mode);
}

}  // namespace

TwoOrbitalState wick_rdm_oracle(const Matrix4c& correlation) {
  if ((correlation - correlation.adjoint()).norm() > 1e-12)
    throw InvalidArgument("correlation matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix4c> es(correlation, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-10 || es.eigenvalues().maxCoeff() > 1.0 + 1e-10)
    throw InvalidArgument("correlation matrix eigenvalues outside [0, 1]");

  Matrix16 rho = Matrix16::Zero();
  for (int n = 0; n < 16; ++n) {
    const std::uint64_t bn = product_index_to_bits(n, 2);
    for (int m = 0; m < 16; ++m) {
      const std::uint64_t bm = product_index_to_bits(m, 2);
      if (std::popcount(bn) != std::popcount(bm)) continue;
      // rho_nm = < |m><n| > with |m><n| = c^dag_m... (prod_k c_k c^dag_k) ...c_n.
      std::vector<Ladder> ops;
      for (int k = 0; k < 4; ++k)
        if ((bm >> k) & 1) ops.push_back({k, true});
      for (int k = 0; k < 4; ++k) {
        ops.push_back({k, false});
        ops.push_back({k, true});
      }
      for (int k = 3; k >= 0; --k)
        if ((bn >> k) & 1) ops.push_back({k, false});
      const Eigen::Index len = static_cast<Eigen::Index>(ops.size());
      Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(len, len);
      for (Eigen::Index i = 0; i < len; ++i)
        for (Eigen::Index j = i + 1; j < len; ++j) {
          a(i, j) = contraction(ops[i], ops[j], correlation);
          a(j, i) = -a(i, j);
        }
      rho(n, m) = pfaffian(a);
    }
  }
  return TwoOrbitalState::from_matrix(rho, {1e-11, 1e-11, -1e-10});
}

}  // namespace orbent
