// Copyright 2026 The symcirc Authors
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

#ifndef SYMCIRC_RANDOM_HPP
#define SYMCIRC_RANDOM_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <Eigen/Dense>

namespace symcirc {

// The standard distributions are implementation-defined; these are not, so seeded
// outputs match across toolchains.

inline double uniform01(std::mt19937_64 &rng) {
    return (double)(rng() >> 11) * 0x1.0p-53;
}

inline double gaussian(std::mt19937_64 &rng) {
    double u1 = uniform01(rng);
    double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log1p(-u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

inline Eigen::MatrixXcd random_ginibre(int rows, int cols, std::mt19937_64 &rng) {
    Eigen::MatrixXcd g(rows, cols);
    for (int c = 0; c < cols; c++) {
        for (int r = 0; r < rows; r++) {
            double re = gaussian(rng);
            double im = gaussian(rng);
            g(r, c) = std::complex<double>(re, im);
        }
    }
    return g;
}

/// Haar-random unitary (QR of a Ginibre matrix with the R-diagonal phases removed).
inline Eigen::MatrixXcd random_unitary(int m, std::mt19937_64 &rng) {
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(random_ginibre(m, m, rng));
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXcd r = qr.matrixQR();
    for (int k = 0; k < m; k++) {
        double a = std::abs(r(k, k));
        if (a > 0) {
            q.col(k) *= r(k, k) / a;
        }
    }
    return q;
}

}  // namespace symcirc

#endif
