/*
   Copyright 2026 The regbound authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "regbound/linalg.hpp"

#include <stdexcept>

namespace regbound {

ScalarMatrix identity_matrix(const FieldSpec& field, int n) {
    ScalarMatrix m(n, std::vector<Scalar>(n, Scalar::zero(field)));
    for (int i = 0; i < n; ++i) m[i][i] = Scalar::one(field);
    return m;
}

ScalarMatrix matrix_product(const FieldSpec& field, const ScalarMatrix& a, const ScalarMatrix& b) {
    const int n = static_cast<int>(a.size());
    ScalarMatrix c(n, std::vector<Scalar>(n, Scalar::zero(field)));
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    }
    return c;
}

Scalar determinant(const FieldSpec& field, ScalarMatrix m) {
    const int n = static_cast<int>(m.size());
    Scalar det = Scalar::one(field);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r) {
            if (!m[r][col].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return Scalar::zero(field);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        Scalar inv = m[col][col].inverse();
        for (int r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            Scalar factor = m[r][col] * inv;
            for (int j = col; j < n; ++j) m[r][j] -= factor * m[col][j];
        }
    }
    return det;
}

std::optional<ScalarMatrix> matrix_inverse(const FieldSpec& field, ScalarMatrix m) {
    const int n = static_cast<int>(m.size());
    ScalarMatrix inv = identity_matrix(field, n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r) {
            if (!m[r][col].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return std::nullopt;
        std::swap(m[pivot], m[col]);
        std::swap(inv[pivot], inv[col]);
        Scalar scale = m[col][col].inverse();
        for (int j = 0; j < n; ++j) {
            m[col][j] *= scale;
            inv[col][j] *= scale;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            Scalar factor = m[r][col];
            for (int j = 0; j < n; ++j) {
                m[r][j] -= factor * m[col][j];
                inv[r][j] -= factor * inv[col][j];
            }
        }
    }
    return inv;
}

int matrix_rank(const FieldSpec& field, ScalarMatrix m, int cols) {
    const int rows = static_cast<int>(m.size());
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r) {
            if (!m[r][col].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(m[pivot], m[rank]);
        Scalar inv = m[rank][col].inverse();
        for (int r = rank + 1; r < rows; ++r) {
            if (m[r][col].is_zero()) continue;
            Scalar factor = m[r][col] * inv;
            for (int j = col; j < cols; ++j) m[r][j] -= factor * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace regbound
