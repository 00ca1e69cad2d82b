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

#include "regbound/betti.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "regbound/errors.hpp"
#include "regbound/linalg.hpp"

namespace regbound {

void BettiTable::add(int i, int j, long long count) {
    if (count == 0) return;
    entries[{i, j}] += count;
    if (entries[{i, j}] == 0) entries.erase({i, j});
}

long long BettiTable::beta(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
}

long long BettiTable::total(int i) const {
    long long out = 0;
    for (const auto& [ij, v] : entries) {
        if (ij.first == i) out += v;
    }
    return out;
}

int BettiTable::regularity() const {
    if (entries.empty()) throw std::domain_error("regularity of an empty Betti table");
    int reg = std::numeric_limits<int>::min();
    for (const auto& [ij, v] : entries) reg = std::max(reg, ij.second - ij.first);
    return reg;
}

std::string BettiTable::to_string() const {
    std::string out;
    for (const auto& [ij, v] : entries) {
        out += "beta(" + std::to_string(ij.first) + "," + std::to_string(ij.second) +
               ")=" + std::to_string(v) + " ";
    }
    return out;
}

BettiTable betti_stable_EK(const MonomialIdeal& I) {
    if (I.is_zero() || I.is_unit()) {
        throw std::invalid_argument("betti_stable_EK: ideal must be nonzero and proper");
    }
    if (!classify(I, FieldSpec::rationals(), 1).stable) {
        throw std::invalid_argument("betti_stable_EK: ideal is not stable");
    }
    BettiTable table;
    for (const auto& u : I.generators()) {
        const int m = u.max_var();
        const int d = u.degree();
        for (int i = 0; i < m; ++i) {
            table.add(i, d + i, binomial_ll(m - 1, i));
        }
    }
    return table;
}

namespace {

// Reduced homology dimensions of the upper Koszul complex of I at b.
// in_complex[W] says whether x^(b - e_W) lies in I.
void homology_at_multidegree(const MonomialIdeal& I, const FieldSpec& field,
                             const std::vector<int>& b, BettiTable& table) {
    const int n = I.n();
    std::vector<char> in_complex(std::size_t(1) << n, 0);
    std::vector<int> e(n);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (int i = 0; i < n; ++i) {
            e[i] = b[i] - (mask >> i & 1);
            if (e[i] < 0) {
                ok = false;
                break;
            }
        }
        in_complex[mask] = ok && I.contains(Monomial{std::vector<int>(e)});
    }
    if (!in_complex[0]) return;  // empty complex, no homology

    // faces grouped by dimension; dimension k faces have k+1 vertices
    std::vector<std::vector<unsigned>> faces(n + 1);
    std::vector<int> index_of(std::size_t(1) << n, -1);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (!in_complex[mask]) continue;
        int k = __builtin_popcount(mask) - 1;
        index_of[mask] = static_cast<int>(faces[k + 1].size());
        faces[k + 1].push_back(mask);  // slot k+1 holds dimension k (slot 0 = empty face)
    }

    const int deg_b = std::accumulate(b.begin(), b.end(), 0);
    // boundary ranks: rank_d[k] = rank of the map from dimension-k faces
    // down to dimension-(k-1) faces, k = 0..n-1
    std::vector<int> rank_d(n + 1, 0);
    for (int k = 0; k <= n - 1; ++k) {
        const auto& cols = faces[k + 1];
        const auto& rows = faces[k];
        if (cols.empty() || rows.empty()) continue;
        ScalarMatrix m(rows.size(), std::vector<Scalar>(cols.size(), Scalar::zero(field)));
        for (std::size_t c = 0; c < cols.size(); ++c) {
            unsigned w = cols[c];
            int sign = 0;
            for (int v = 0; v < n; ++v) {
                if (!(w >> v & 1)) continue;
                unsigned sub = w & ~(1u << v);
                int r = index_of[sub];
                m[r][c] += Scalar::from_int(field, (sign % 2 == 0) ? 1 : -1);
                ++sign;
            }
        }
        rank_d[k] = matrix_rank(field, std::move(m), static_cast<int>(cols.size()));
    }

    for (int k = -1; k <= n - 1; ++k) {
        long long dim_ck = static_cast<long long>(faces[k + 1].size());
        if (dim_ck == 0) continue;
        long long h = dim_ck - rank_d[k + 1];
        if (k >= 0) h -= rank_d[k];
        if (h > 0) table.add(k + 1, deg_b, h);  // beta_{i,b}(I) with i = k+1
    }
}

}  // namespace

BettiTable betti_oracle_koszul(const MonomialIdeal& I, const FieldSpec& field,
                               long long max_cells) {
    if (I.is_zero() || I.is_unit()) {
        throw std::invalid_argument("betti_oracle_koszul: ideal must be nonzero and proper");
    }
    const int n = I.n();
    if (n > 30) throw std::invalid_argument("betti_oracle_koszul: too many variables");
    std::vector<int> bound(n);
    long long cells = 1;
    for (int i = 1; i <= n; ++i) {
        bound[i - 1] = I.max_var_degree(i) + 1;
        cells *= bound[i - 1] + 1;
        if (cells > max_cells) {
            throw ResourceCapError("betti_oracle_koszul: multidegree box exceeds cap");
        }
    }
    BettiTable table;
    std::vector<int> b(n, 0);
    while (true) {
        homology_at_multidegree(I, field, b, table);
        int i = 0;
        while (i < n && b[i] == bound[i]) b[i++] = 0;
        if (i == n) break;
        ++b[i];
    }
    return table;
}

}  // namespace regbound
