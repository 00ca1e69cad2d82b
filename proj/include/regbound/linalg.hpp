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

#ifndef REGBOUND_LINALG_HPP
#define REGBOUND_LINALG_HPP

#include <optional>
#include <vector>

#include "regbound/field.hpp"

namespace regbound {

// Small exact dense matrices over a Scalar field. Enough for coordinate
// changes and homology ranks; nothing here is tuned for size.

using ScalarMatrix = std::vector<std::vector<Scalar>>;

ScalarMatrix identity_matrix(const FieldSpec& field, int n);
ScalarMatrix matrix_product(const FieldSpec& field, const ScalarMatrix& a, const ScalarMatrix& b);
Scalar determinant(const FieldSpec& field, ScalarMatrix m);
std::optional<ScalarMatrix> matrix_inverse(const FieldSpec& field, ScalarMatrix m);

/// Rank by Gaussian elimination; rows of length `cols`.
int matrix_rank(const FieldSpec& field, ScalarMatrix m, int cols);

}  // namespace regbound

#endif
