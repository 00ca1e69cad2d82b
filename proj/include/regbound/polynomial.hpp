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

#ifndef REGBOUND_POLYNOMIAL_HPP
#define REGBOUND_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regbound/field.hpp"
#include "regbound/monomial.hpp"

namespace regbound {

/// Sparse multivariate polynomial with exact coefficients. Term storage is
/// order-agnostic (structural map); term orders are applied on demand.
class Polynomial {
   public:
    using TermMap = std::map<Monomial, Scalar>;

    Polynomial() : n_(0) {}
    Polynomial(FieldSpec field, int n) : field_(field), n_(n) {}

    static Polynomial zero(FieldSpec field, int n) { return Polynomial(field, n); }
    static Polynomial constant(FieldSpec field, int n, const Scalar& c);
    static Polynomial term(const Scalar& c, const Monomial& m);
    static Polynomial variable(FieldSpec field, int n, int var);

    const FieldSpec& field() const { return field_; }
    int n() const { return n_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_homogeneous() const;
    /// Total degree of the polynomial; -1 for the zero polynomial.
    int degree() const;

    Scalar coefficient(const Monomial& m) const;
    void add_term(const Monomial& m, const Scalar& c);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Scalar& c) const;
    Polynomial pow(int e) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Simultaneous substitution X_i -> images[i-1]; images live in any
    /// ambient ring over the same field.
    Polynomial substitute(const std::vector<Polynomial>& images) const;

    /// Leading term under the given order; requires a nonzero polynomial.
    std::pair<Monomial, Scalar> leading_term(const TermOrder& order) const;

    /// Monic copy (leading coefficient 1 under the given order).
    Polynomial monic(const TermOrder& order) const;

    std::string to_string() const;
    std::string to_string(const std::vector<std::string>& names) const;

   private:
    void check_compatible(const Polynomial& o) const;

    FieldSpec field_;
    int n_;
    TermMap terms_;
};

std::pair<Monomial, Scalar> leading_term(const TermOrder& order, const Polynomial& f);

/// Homogeneous linear form sum c_i X_i, not all c_i zero.
class LinearForm {
   public:
    LinearForm(FieldSpec field, std::vector<Scalar> coefficients);

    static LinearForm variable(FieldSpec field, int n, int var);

    const FieldSpec& field() const { return field_; }
    int n() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<Scalar>& coefficients() const { return coeffs_; }
    const Scalar& coefficient(int var) const { return coeffs_[var - 1]; }

    Polynomial to_polynomial() const;
    std::string to_string() const;

   private:
    FieldSpec field_;
    std::vector<Scalar> coeffs_;
};

/// Invertible linear change of coordinates X_i -> sum_j m[i][j] X_j.
/// Composition: apply(g1, apply(g2, f)) == apply(g1 * g2, f), where `*`
/// composes the substitution maps.
class LinearChange {
   public:
    LinearChange(FieldSpec field, std::vector<std::vector<Scalar>> matrix);

    static LinearChange identity(FieldSpec field, int n);

    const FieldSpec& field() const { return field_; }
    int n() const { return static_cast<int>(matrix_.size()); }
    const std::vector<std::vector<Scalar>>& matrix() const { return matrix_; }

    Polynomial apply(const Polynomial& f) const;
    LinearForm apply(const LinearForm& l) const;

    LinearChange operator*(const LinearChange& o) const;

   private:
    FieldSpec field_;
    std::vector<std::vector<Scalar>> matrix_;
};

Polynomial apply_linear_change(const LinearChange& g, const Polynomial& f);

/// Ideal presented by nonzero homogeneous generators (not necessarily a
/// minimal system). The zero ideal is the empty generator list.
class HomogeneousIdeal {
   public:
    HomogeneousIdeal(FieldSpec field, int n) : field_(field), n_(n) {}
    HomogeneousIdeal(FieldSpec field, int n, std::vector<Polynomial> generators);

    const FieldSpec& field() const { return field_; }
    int n() const { return n_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }

    /// Generating degree: max degree over the generators (0 for the zero ideal).
    int generating_degree() const;

    std::string to_string() const;

   private:
    FieldSpec field_;
    int n_;
    std::vector<Polynomial> gens_;
};

HomogeneousIdeal apply_linear_change(const LinearChange& g, const HomogeneousIdeal& I);

/// Image under the Frobenius substitution X_i -> X_i^p; requires the
/// coefficient field to have characteristic p.
HomogeneousIdeal frobenius_image(const HomogeneousIdeal& I, std::uint32_t p);

}  // namespace regbound

#endif
