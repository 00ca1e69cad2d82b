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

#ifndef REGBOUND_MONOMIAL_HPP
#define REGBOUND_MONOMIAL_HPP

#include <string>
#include <vector>

namespace regbound {

// Variables are numbered 1..n with X_1 > X_2 > ... > X_n in every
// supported term order. All public `var` parameters use this numbering.

/// Exponent vector in n variables. Exponents are small non-negative
/// integers; products are overflow-checked against a fixed cap.
class Monomial {
   public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exponents);

    static Monomial one(int n) { return Monomial(std::vector<int>(n, 0)); }
    static Monomial variable(int var, int n);        // X_var
    static Monomial power(int var, int e, int n);    // X_var^e

    int n() const { return static_cast<int>(exps_.size()); }
    int degree() const;
    int exponent(int var) const { return exps_[var - 1]; }
    const std::vector<int>& exponents() const { return exps_; }
    bool is_one() const;

    /// m(u) = max{i : X_i | u}; 0 for the constant monomial.
    int max_var() const;
    /// Number of distinct variables dividing u.
    int support_size() const;

    Monomial operator*(const Monomial& o) const;
    /// Exact division; requires o | *this.
    Monomial operator/(const Monomial& o) const;

    bool divides(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }
    /// Structural (storage) order, unrelated to any term order.
    bool operator<(const Monomial& o) const { return exps_ < o.exps_; }

    std::string to_string() const;
    std::string to_string(const std::vector<std::string>& names) const;

    static constexpr int kExponentCap = 1 << 16;

   private:
    std::vector<int> exps_;
};

Monomial gcd(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);

/// Supported term orders; all satisfy X_1 > X_2 > ... > X_n and are
/// multiplicative total orders refining divisibility.
struct TermOrder {
    enum class Kind { rlex, lex, grlex };
    Kind kind = Kind::rlex;

    static TermOrder rlex() { return {Kind::rlex}; }
    static TermOrder lex() { return {Kind::lex}; }
    static TermOrder grlex() { return {Kind::grlex}; }

    bool operator==(const TermOrder& o) const { return kind == o.kind; }
    std::string name() const;
};

/// Returns -1, 0, +1 for u < v, u = v, u > v under the given order.
int term_compare(const TermOrder& order, const Monomial& u, const Monomial& v);

}  // namespace regbound

#endif
