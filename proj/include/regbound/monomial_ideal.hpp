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

#ifndef REGBOUND_MONOMIAL_IDEAL_HPP
#define REGBOUND_MONOMIAL_IDEAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "regbound/field.hpp"
#include "regbound/monomial.hpp"

namespace regbound {

/// Monomial ideal stored as its minimal generating set G(I), sorted
/// structurally. The zero ideal has no generators; the unit ideal is {1}.
class MonomialIdeal {
   public:
    explicit MonomialIdeal(int n) : n_(n) {}

    /// Builds the ideal generated by `gens`, keeping only the
    /// divisibility-minimal ones.
    static MonomialIdeal from_generators(int n, std::vector<Monomial> gens);
    static MonomialIdeal zero(int n) { return MonomialIdeal(n); }
    static MonomialIdeal unit(int n);

    int n() const { return n_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    std::size_t generator_count() const { return gens_.size(); }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

    bool contains(const Monomial& m) const;

    /// Generating degree D(I); 0 for the zero and unit ideals.
    int generating_degree() const;
    /// Md_i(I) = max X_i-exponent over G(I); 0 when no generator uses X_i.
    int max_var_degree(int var) const;

    bool operator==(const MonomialIdeal& o) const { return n_ == o.n_ && gens_ == o.gens_; }
    bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }
    /// Structural order (for use as a map key).
    bool operator<(const MonomialIdeal& o) const;

    std::string to_string() const;

   private:
    int n_;
    std::vector<Monomial> gens_;  // minimal, sorted
};

MonomialIdeal minimalize(int n, std::vector<Monomial> gens);

/// Image of I in K[X_1..X_i]: generators supported on the first i
/// variables survive, the rest map to zero. restrict_to(I, n) == I.
MonomialIdeal restrict_to(const MonomialIdeal& I, int i);

struct IdealProfile {
    int generating_degree = 0;          // D(I)
    std::vector<int> max_var_degrees;   // Md_i(I) for i = 1..n
    std::size_t generator_count = 0;
};

IdealProfile profile(const MonomialIdeal& I);

/// Digit-wise comparison of base-p expansions: k <=_p l.
bool p_adic_leq(long long k, long long l, std::uint32_t p);

struct ClassificationFlags {
    bool stable = false;
    bool strongly_stable = false;
    bool p_borel = false;
    std::uint32_t p = 0;  // characteristic used for p_borel (0 = char 0)
    bool weakly_stable = false;
    bool condition_star = false;
    bool condition_star_star = false;
    int d = 0;  // degree parameter for the Condition flags
};

/// Evaluates every stability predicate on the minimal generators. For the
/// unit ideal all flags are true, for the zero ideal all false. In
/// characteristic 0 `p_borel` mirrors `strongly_stable` (Borel-fixed
/// ideals in characteristic 0 are exactly the strongly stable ones).
ClassificationFlags classify(const MonomialIdeal& I, const FieldSpec& field, int d);

/// Condition (*) w.r.t. d on the generator degrees: for i >= d, a degree
/// with no minimal generator is never followed by one with a generator.
bool condition_star(const MonomialIdeal& I, int d);
/// Condition (**): every section I_[i] satisfies Condition (*) w.r.t. d.
bool condition_star_star(const MonomialIdeal& I, int d);

enum class CombineMode { sum, product, intersection };

MonomialIdeal combine(const MonomialIdeal& I, const MonomialIdeal& J, CombineMode mode);

MonomialIdeal colon_by_monomial(const MonomialIdeal& I, const Monomial& u);

struct AssociatedPrime {
    std::vector<int> vars;  // sorted variable indices generating P
    Monomial witness;       // u with I : u = P
    bool lexicographic = false;  // vars == {1, ..., |vars|}
};

struct PrimeList {
    std::vector<AssociatedPrime> primes;
    bool all_lexicographic() const;
};

/// Exhaustive associated-prime search over the witness box
/// 0 <= e_i <= Md_i(I). Requires a nonzero proper ideal.
PrimeList associated_primes(const MonomialIdeal& I);

struct HilbertData {
    /// Numerator N(t) of the Hilbert series of R/I over (1-t)^n,
    /// as coefficients by degree.
    std::vector<long long> numerator;
    int height = 0;  // min size of a variable set meeting every generator
    int dim = 0;     // dim R/I = n - height (-1 for the unit ideal)
};

HilbertData hilbert_dimension(const MonomialIdeal& I);

std::vector<long long> hilbert_numerator(const MonomialIdeal& I);

/// dim_K (R/I)_m from a numerator produced by hilbert_numerator.
long long hilbert_function_from_numerator(const std::vector<long long>& numerator, int n, int m);

/// dim_K (R/I)_m.
long long hilbert_function(const MonomialIdeal& I, int m);

long long binomial_ll(long long a, long long b);

}  // namespace regbound

#endif
