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

#include "regbound/monomial_ideal.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace regbound {

MonomialIdeal MonomialIdeal::from_generators(int n, std::vector<Monomial> gens) {
    for (const auto& g : gens) {
        if (g.n() != n) throw std::invalid_argument("generator ambient mismatch");
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> minimal;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
            if (i != j && gens[j].divides(gens[i]) && gens[j] != gens[i]) redundant = true;
        }
        if (!redundant) minimal.push_back(gens[i]);
    }
    MonomialIdeal I(n);
    I.gens_ = std::move(minimal);
    return I;
}

MonomialIdeal MonomialIdeal::unit(int n) {
    return from_generators(n, {Monomial::one(n)});
}

bool MonomialIdeal::contains(const Monomial& m) const {
    for (const auto& g : gens_) {
        if (g.divides(m)) return true;
    }
    return false;
}

int MonomialIdeal::generating_degree() const {
    int d = 0;
    for (const auto& g : gens_) d = std::max(d, g.degree());
    return d;
}

int MonomialIdeal::max_var_degree(int var) const {
    int md = 0;
    for (const auto& g : gens_) md = std::max(md, g.exponent(var));
    return md;
}

bool MonomialIdeal::operator<(const MonomialIdeal& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    std::vector<std::vector<int>> a, b;
    for (const auto& g : gens_) a.push_back(g.exponents());
    for (const auto& g : o.gens_) b.push_back(g.exponents());
    return a < b;
}

std::string MonomialIdeal::to_string() const {
    if (is_zero()) return "(0)";
    std::string out = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) out += ", ";
        out += gens_[i].to_string();
    }
    return out + ")";
}

MonomialIdeal minimalize(int n, std::vector<Monomial> gens) {
    return MonomialIdeal::from_generators(n, std::move(gens));
}

MonomialIdeal restrict_to(const MonomialIdeal& I, int i) {
    if (i < 1 || i > I.n()) throw std::invalid_argument("restrict_to: index out of range");
    std::vector<Monomial> kept;
    for (const auto& g : I.generators()) {
        if (g.max_var() <= i) {
            std::vector<int> exps(g.exponents().begin(), g.exponents().begin() + i);
            kept.emplace_back(std::move(exps));
        }
    }
    return MonomialIdeal::from_generators(i, std::move(kept));
}

IdealProfile profile(const MonomialIdeal& I) {
    if (I.is_zero()) throw std::invalid_argument("profile: zero ideal");
    IdealProfile p;
    p.generating_degree = I.generating_degree();
    p.generator_count = I.generator_count();
    p.max_var_degrees.resize(I.n());
    for (int i = 1; i <= I.n(); ++i) p.max_var_degrees[i - 1] = I.max_var_degree(i);
    return p;
}

bool p_adic_leq(long long k, long long l, std::uint32_t p) {
    if (k < 0 || l < 0) throw std::invalid_argument("p_adic_leq: negative input");
    if (!is_prime_u32(p)) throw std::invalid_argument("p_adic_leq: p is not prime");
    while (k > 0 || l > 0) {
        if (k % p > l % p) return false;
        k /= p;
        l /= p;
    }
    return true;
}

namespace {

bool stable_check(const MonomialIdeal& I) {
    for (const auto& u : I.generators()) {
        int m = u.max_var();
        if (m <= 1) continue;
        Monomial v = u / Monomial::variable(m, I.n());
        for (int j = 1; j < m; ++j) {
            if (!I.contains(v * Monomial::variable(j, I.n()))) return false;
        }
    }
    return true;
}

bool strongly_stable_check(const MonomialIdeal& I) {
    for (const auto& u : I.generators()) {
        for (int i = 2; i <= I.n(); ++i) {
            if (u.exponent(i) == 0) continue;
            Monomial v = u / Monomial::variable(i, I.n());
            for (int j = 1; j < i; ++j) {
                if (!I.contains(v * Monomial::variable(j, I.n()))) return false;
            }
        }
    }
    return true;
}

bool p_borel_check(const MonomialIdeal& I, std::uint32_t p) {
    for (const auto& u : I.generators()) {
        for (int i = 2; i <= I.n(); ++i) {
            int l = u.exponent(i);
            if (l == 0) continue;
            for (int k = 1; k <= l; ++k) {
                if (!p_adic_leq(k, l, p)) continue;
                Monomial v = u / Monomial::power(i, k, I.n());
                for (int j = 1; j < i; ++j) {
                    if (!I.contains(v * Monomial::power(j, k, I.n()))) return false;
                }
            }
        }
    }
    return true;
}

// Checks the exchange property on u for every j < m(u), using the single
// exponent k = Md_j(I): the witness set is upward closed and a minimal
// witness generator never needs more X_j than Md_j(I).
bool weakly_stable_check(const MonomialIdeal& I) {
    std::vector<int> md(I.n() + 1, 0);
    for (int j = 1; j <= I.n(); ++j) md[j] = I.max_var_degree(j);
    for (const auto& u : I.generators()) {
        int m = u.max_var();
        if (m <= 1) continue;
        Monomial base = u / Monomial::power(m, u.exponent(m), I.n());
        for (int j = 1; j < m; ++j) {
            if (!I.contains(base * Monomial::power(j, md[j], I.n()))) return false;
        }
    }
    return true;
}

bool condition_star_degrees(const std::vector<Monomial>& gens, int d, int D) {
    std::vector<char> has(std::max(D + 2, d + 2), 0);
    for (const auto& g : gens) has[g.degree()] = 1;
    for (int i = d; i <= D; ++i) {
        if (!has[i] && has[i + 1]) return false;
    }
    return true;
}

}  // namespace

bool condition_star(const MonomialIdeal& I, int d) {
    if (d < 1) throw std::invalid_argument("condition_star: d must be >= 1");
    if (I.is_zero()) return true;  // vacuous
    return condition_star_degrees(I.generators(), d, I.generating_degree());
}

bool condition_star_star(const MonomialIdeal& I, int d) {
    if (d < 1) throw std::invalid_argument("condition_star_star: d must be >= 1");
    for (int i = 1; i <= I.n(); ++i) {
        if (!condition_star(restrict_to(I, i), d)) return false;
    }
    return true;
}

ClassificationFlags classify(const MonomialIdeal& I, const FieldSpec& field, int d) {
    if (d < 1) throw std::invalid_argument("classify: d must be >= 1");
    ClassificationFlags flags;
    flags.p = field.characteristic();
    flags.d = d;
    if (I.is_zero()) return flags;  // all false by convention
    if (I.is_unit()) {
        flags.stable = flags.strongly_stable = flags.p_borel = true;
        flags.weakly_stable = true;
        flags.condition_star = flags.condition_star_star = true;
        return flags;
    }
    flags.stable = stable_check(I);
    flags.strongly_stable = strongly_stable_check(I);
    flags.p_borel = field.is_rationals() ? flags.strongly_stable
                                         : p_borel_check(I, field.characteristic());
    flags.weakly_stable = weakly_stable_check(I);
    flags.condition_star = condition_star(I, d);
    flags.condition_star_star = condition_star_star(I, d);
    return flags;
}

MonomialIdeal combine(const MonomialIdeal& I, const MonomialIdeal& J, CombineMode mode) {
    if (I.n() != J.n()) throw std::invalid_argument("combine: ambient mismatch");
    std::vector<Monomial> gens;
    switch (mode) {
        case CombineMode::sum:
            gens = I.generators();
            gens.insert(gens.end(), J.generators().begin(), J.generators().end());
            break;
        case CombineMode::product:
            for (const auto& u : I.generators()) {
                for (const auto& v : J.generators()) gens.push_back(u * v);
            }
            break;
        case CombineMode::intersection:
            for (const auto& u : I.generators()) {
                for (const auto& v : J.generators()) gens.push_back(lcm(u, v));
            }
            break;
    }
    return MonomialIdeal::from_generators(I.n(), std::move(gens));
}

MonomialIdeal colon_by_monomial(const MonomialIdeal& I, const Monomial& u) {
    std::vector<Monomial> gens;
    gens.reserve(I.generator_count());
    for (const auto& g : I.generators()) gens.push_back(g / gcd(g, u));
    return MonomialIdeal::from_generators(I.n(), std::move(gens));
}

bool PrimeList::all_lexicographic() const {
    for (const auto& p : primes) {
        if (!p.lexicographic) return false;
    }
    return true;
}

PrimeList associated_primes(const MonomialIdeal& I) {
    if (I.is_zero() || I.is_unit()) {
        throw std::invalid_argument("associated_primes: ideal must be nonzero and proper");
    }
    const int n = I.n();
    std::vector<int> bound(n);
    for (int i = 1; i <= n; ++i) bound[i - 1] = I.max_var_degree(i);

    std::map<std::vector<int>, Monomial> found;
    std::vector<int> e(n, 0);
    while (true) {
        Monomial u{std::vector<int>(e)};
        MonomialIdeal J = colon_by_monomial(I, u);
        if (!J.is_unit() && !J.is_zero()) {
            bool all_vars = true;
            std::vector<int> vars;
            for (const auto& g : J.generators()) {
                if (g.degree() != 1) {
                    all_vars = false;
                    break;
                }
                vars.push_back(g.max_var());
            }
            if (all_vars) {
                std::sort(vars.begin(), vars.end());
                found.emplace(vars, u);
            }
        }
        // odometer over the witness box
        int i = 0;
        while (i < n && e[i] == bound[i]) e[i++] = 0;
        if (i == n) break;
        ++e[i];
    }

    PrimeList out;
    for (auto& [vars, witness] : found) {
        AssociatedPrime p;
        p.vars = vars;
        p.witness = witness;
        p.lexicographic = true;
        for (std::size_t k = 0; k < vars.size(); ++k) {
            if (vars[k] != static_cast<int>(k) + 1) {
                p.lexicographic = false;
                break;
            }
        }
        out.primes.push_back(std::move(p));
    }
    return out;
}

namespace {

using Series = std::vector<long long>;

Series series_add(const Series& a, const Series& b) {
    Series out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

Series series_shift(const Series& a, int k) {
    if (a.empty()) return a;
    Series out(a.size() + k, 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i + k] = a[i];
    return out;
}

// multiply by (1 - t^k)
Series series_mul_one_minus(const Series& a, int k) {
    Series out(a.size() + k, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] += a[i];
        out[i + k] -= a[i];
    }
    return out;
}

void series_trim(Series& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Series numerator_rec(int n, std::vector<Monomial> gens) {
    if (gens.empty()) return {1};
    for (const auto& g : gens) {
        if (g.is_one()) return {0};
    }
    bool all_pure = true;
    for (const auto& g : gens) {
        if (g.support_size() > 1) {
            all_pure = false;
            break;
        }
    }
    if (all_pure) {
        Series out{1};
        for (const auto& g : gens) out = series_mul_one_minus(out, g.degree());
        return out;
    }
    // pivot: most frequent variable among mixed generators
    std::vector<int> freq(n + 1, 0);
    for (const auto& g : gens) {
        if (g.support_size() < 2) continue;
        for (int i = 1; i <= n; ++i) {
            if (g.exponent(i) > 0) ++freq[i];
        }
    }
    int v = 1;
    for (int i = 2; i <= n; ++i) {
        if (freq[i] > freq[v]) v = i;
    }
    Monomial pivot = Monomial::variable(v, n);

    std::vector<Monomial> plus;  // generators of I + (X_v), minimal
    plus.push_back(pivot);
    for (const auto& g : gens) {
        if (g.exponent(v) == 0) plus.push_back(g);
    }
    std::vector<Monomial> colon;  // generators of I : X_v
    for (const auto& g : gens) colon.push_back(g.exponent(v) > 0 ? g / pivot : g);
    colon = MonomialIdeal::from_generators(n, std::move(colon)).generators();

    Series a = numerator_rec(n, std::move(plus));
    Series b = numerator_rec(n, std::move(colon));
    Series out = series_add(a, series_shift(b, 1));
    series_trim(out);
    return out;
}

}  // namespace

std::vector<long long> hilbert_numerator(const MonomialIdeal& I) {
    Series s = numerator_rec(I.n(), I.generators());
    series_trim(s);
    if (s.empty()) s.push_back(0);
    return s;
}

HilbertData hilbert_dimension(const MonomialIdeal& I) {
    HilbertData data;
    data.numerator = hilbert_numerator(I);
    const int n = I.n();
    if (I.is_unit()) {
        data.height = n;
        data.dim = -1;
        return data;
    }
    if (I.is_zero()) {
        data.height = 0;
        data.dim = n;
        return data;
    }
    // height: minimal vertex cover of the generator supports
    int best = n;
    for (int mask = 0; mask < (1 << n); ++mask) {
        int size = __builtin_popcount(static_cast<unsigned>(mask));
        if (size >= best) continue;
        bool covers = true;
        for (const auto& g : I.generators()) {
            bool hit = false;
            for (int i = 0; i < n && !hit; ++i) {
                if ((mask >> i & 1) && g.exponents()[i] > 0) hit = true;
            }
            if (!hit) {
                covers = false;
                break;
            }
        }
        if (covers) best = size;
    }
    data.height = best;
    data.dim = n - best;
    return data;
}

long long binomial_ll(long long a, long long b) {
    if (b < 0 || a < b) return 0;
    b = std::min(b, a - b);
    long long out = 1;
    for (long long i = 1; i <= b; ++i) {
        out = out * (a - b + i) / i;
    }
    return out;
}

long long hilbert_function_from_numerator(const std::vector<long long>& numerator, int n, int m) {
    if (m < 0) return 0;
    long long out = 0;
    for (std::size_t k = 0; k < numerator.size(); ++k) {
        if (static_cast<long long>(k) > m) break;
        if (numerator[k] == 0) continue;
        out += numerator[k] * binomial_ll(n - 1 + m - static_cast<long long>(k), n - 1);
    }
    return out;
}

long long hilbert_function(const MonomialIdeal& I, int m) {
    return hilbert_function_from_numerator(hilbert_numerator(I), I.n(), m);
}

}  // namespace regbound
