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

#ifndef REGBOUND_BETTI_HPP
#define REGBOUND_BETTI_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "regbound/field.hpp"
#include "regbound/monomial_ideal.hpp"

namespace regbound {

/// Graded Betti numbers beta_{i,j} of an ideal I, indexed so that beta_0
/// counts minimal generators and j is the internal (total) degree.
struct BettiTable {
    std::map<std::pair<int, int>, long long> entries;

    void add(int i, int j, long long count);
    long long beta(int i, int j) const;
    long long total(int i) const;

    /// max{j - i : beta_{i,j} != 0}; requires a nonempty table.
    int regularity() const;

    bool operator==(const BettiTable& o) const { return entries == o.entries; }

    std::string to_string() const;
};

/// Closed-form Betti numbers of a stable ideal from its minimal
/// generators: each u contributes C(m(u)-1, i) to beta_{i, deg(u)+i}.
/// Requires a nonzero proper stable ideal; its regularity equals D(I).
BettiTable betti_stable_EK(const MonomialIdeal& I);

/// Brute-force multigraded Betti numbers over the given field: reduced
/// simplicial homology of the upper Koszul complex in every multidegree
/// of the box 0 <= b_i <= Md_i(I)+1, ranks by exact Gaussian elimination.
/// `max_cells` caps the number of multidegrees visited.
BettiTable betti_oracle_koszul(const MonomialIdeal& I, const FieldSpec& field,
                               long long max_cells = 1 << 22);

}  // namespace regbound

#endif
