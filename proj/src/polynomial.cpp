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

#include "regbound/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "regbound/linalg.hpp"

namespace regbound {

Polynomial Polynomial::constant(FieldSpec field, int n, const Scalar& c) {
    Polynomial f(field, n);
    f.add_term(Monomial::one(n), c);
    return f;
}

Polynomial Polynomial::term(const Scalar& c, const Monomial& m) {
    Polynomial f(c.field(), m.n());
    f.add_term(m, c);
    return f;
}

Polynomial Polynomial::variable(FieldSpec field, int n, int var) {
    return term(Scalar::one(field), Monomial::variable(var, n));
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_) {
        if (m.degree() != d) return false;
    }
    return true;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

Scalar Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
    if (m.n() != n_) throw std::invalid_argument("term ambient mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Polynomial::check_compatible(const Polynomial& o) const {
    if (n_ != o.n_ || field_ != o.field_) {
        throw std::invalid_argument("polynomial ring mismatch");
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_compatible(o);
    Polynomial f(*this);
    for (const auto& [m, c] : o.terms_) f.add_term(m, c);
    return f;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check_compatible(o);
    Polynomial f(*this);
    for (const auto& [m, c] : o.terms_) f.add_term(m, -c);
    return f;
}

Polynomial Polynomial::operator-() const {
    Polynomial f(field_, n_);
    for (const auto& [m, c] : terms_) f.terms_.emplace(m, -c);
    return f;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_compatible(o);
    Polynomial f(field_, n_);
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            f.add_term(m1 * m2, c1 * c2);
        }
    }
    return f;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    Polynomial f(field_, n_);
    if (c.is_zero()) return f;
    for (const auto& [m, a] : terms_) f.add_term(m, a * c);
    return f;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    Polynomial acc = Polynomial::constant(field_, n_, Scalar::one(field_));
    Polynomial base(*this);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = (e >>= 1) ? base * base : base;
    }
    return acc;
}

bool Polynomial::operator==(const Polynomial& o) const {
    return n_ == o.n_ && field_ == o.field_ && terms_ == o.terms_;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
    if (static_cast<int>(images.size()) != n_) {
        throw std::invalid_argument("substitute: wrong number of images");
    }
    const int target_n = images.empty() ? 0 : images[0].n();
    for (const auto& g : images) {
        if (g.field() != field_ || g.n() != target_n) {
            throw std::invalid_argument("substitute: image ring mismatch");
        }
    }
    // cache powers of each image as needed
    std::vector<std::vector<Polynomial>> powers(n_);
    auto image_power = [&](int i, int e) -> const Polynomial& {
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(Polynomial::constant(field_, target_n, Scalar::one(field_)));
        while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images[i]);
        return pw[e];
    };
    Polynomial out(field_, target_n);
    for (const auto& [m, c] : terms_) {
        Polynomial t = Polynomial::constant(field_, target_n, c);
        for (int i = 0; i < n_; ++i) {
            int e = m.exponents()[i];
            if (e > 0) t = t * image_power(i, e);
        }
        out = out + t;
    }
    return out;
}

std::pair<Monomial, Scalar> Polynomial::leading_term(const TermOrder& order) const {
    if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
        if (term_compare(order, it->first, best->first) > 0) best = it;
    }
    return {best->first, best->second};
}

Polynomial Polynomial::monic(const TermOrder& order) const {
    auto [m, c] = leading_term(order);
    return scaled(c.inverse());
}

std::pair<Monomial, Scalar> leading_term(const TermOrder& order, const Polynomial& f) {
    return f.leading_term(order);
}

std::string Polynomial::to_string() const {
    std::vector<std::string> names;
    for (int i = 1; i <= n_; ++i) names.push_back("x" + std::to_string(i));
    return to_string(names);
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
    if (is_zero()) return "0";
    // print terms in descending rlex order
    std::vector<const TermMap::value_type*> ts;
    for (const auto& t : terms_) ts.push_back(&t);
    TermOrder ord = TermOrder::rlex();
    std::sort(ts.begin(), ts.end(), [&](auto* a, auto* b) {
        return term_compare(ord, a->first, b->first) > 0;
    });
    std::string out;
    bool first = true;
    for (auto* t : ts) {
        const auto& [m, c] = *t;
        std::string cs = c.to_string();
        bool neg = !cs.empty() && cs[0] == '-';
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (neg) cs = cs.substr(1);
        first = false;
        if (m.is_one()) {
            out += cs;
        } else if (cs == "1") {
            out += m.to_string(names);
        } else {
            out += cs + "*" + m.to_string(names);
        }
    }
    return out;
}

LinearForm::LinearForm(FieldSpec field, std::vector<Scalar> coefficients)
    : field_(field), coeffs_(std::move(coefficients)) {
    bool nonzero = false;
    for (const auto& c : coeffs_) {
        if (c.field() != field_) throw std::invalid_argument("linear form field mismatch");
        nonzero = nonzero || !c.is_zero();
    }
    if (!nonzero) throw std::invalid_argument("linear form must be nonzero");
}

LinearForm LinearForm::variable(FieldSpec field, int n, int var) {
    std::vector<Scalar> coeffs(n, Scalar::zero(field));
    coeffs.at(var - 1) = Scalar::one(field);
    return LinearForm(field, std::move(coeffs));
}

Polynomial LinearForm::to_polynomial() const {
    Polynomial f(field_, n());
    for (int i = 1; i <= n(); ++i) f.add_term(Monomial::variable(i, n()), coeffs_[i - 1]);
    return f;
}

std::string LinearForm::to_string() const { return to_polynomial().to_string(); }

LinearChange::LinearChange(FieldSpec field, std::vector<std::vector<Scalar>> matrix)
    : field_(field), matrix_(std::move(matrix)) {
    const std::size_t n = matrix_.size();
    for (const auto& row : matrix_) {
        if (row.size() != n) throw std::invalid_argument("linear change matrix must be square");
        for (const auto& c : row) {
            if (c.field() != field_) throw std::invalid_argument("matrix field mismatch");
        }
    }
    if (determinant(field_, matrix_).is_zero()) {
        throw std::invalid_argument("linear change matrix is singular");
    }
}

LinearChange LinearChange::identity(FieldSpec field, int n) {
    return LinearChange(field, identity_matrix(field, n));
}

Polynomial LinearChange::apply(const Polynomial& f) const {
    if (f.n() != n()) throw std::invalid_argument("linear change dimension mismatch");
    std::vector<Polynomial> images;
    images.reserve(n());
    for (int i = 0; i < n(); ++i) {
        Polynomial g(field_, n());
        for (int j = 0; j < n(); ++j) {
            g.add_term(Monomial::variable(j + 1, n()), matrix_[i][j]);
        }
        images.push_back(std::move(g));
    }
    return f.substitute(images);
}

LinearForm LinearChange::apply(const LinearForm& l) const {
    if (l.n() != n()) throw std::invalid_argument("linear change dimension mismatch");
    // l = sum c_i X_i maps to sum_j (sum_i c_i m[i][j]) X_j
    std::vector<Scalar> out(n(), Scalar::zero(field_));
    for (int j = 0; j < n(); ++j) {
        for (int i = 0; i < n(); ++i) {
            out[j] += l.coefficients()[i] * matrix_[i][j];
        }
    }
    return LinearForm(field_, std::move(out));
}

LinearChange LinearChange::operator*(const LinearChange& o) const {
    // substitution composition: (g1 * g2)(f) = g1(g2(f)), realized by the
    // matrix product o.matrix * this->matrix under the row convention
    return LinearChange(field_, matrix_product(field_, o.matrix_, matrix_));
}

Polynomial apply_linear_change(const LinearChange& g, const Polynomial& f) {
    return g.apply(f);
}

HomogeneousIdeal::HomogeneousIdeal(FieldSpec field, int n, std::vector<Polynomial> generators)
    : field_(field), n_(n), gens_(std::move(generators)) {
    for (const auto& g : gens_) {
        if (g.field() != field_ || g.n() != n_) {
            throw std::invalid_argument("ideal generator ring mismatch");
        }
        if (g.is_zero()) throw std::invalid_argument("ideal generator must be nonzero");
        if (!g.is_homogeneous()) throw std::invalid_argument("ideal generator must be homogeneous");
    }
}

int HomogeneousIdeal::generating_degree() const {
    int d = 0;
    for (const auto& g : gens_) d = std::max(d, g.degree());
    return d;
}

std::string HomogeneousIdeal::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) out += ", ";
        out += gens_[i].to_string();
    }
    return out + ")";
}

HomogeneousIdeal apply_linear_change(const LinearChange& g, const HomogeneousIdeal& I) {
    std::vector<Polynomial> gens;
    gens.reserve(I.generators().size());
    for (const auto& f : I.generators()) gens.push_back(g.apply(f));
    return HomogeneousIdeal(I.field(), I.n(), std::move(gens));
}

HomogeneousIdeal frobenius_image(const HomogeneousIdeal& I, std::uint32_t p) {
    if (I.field().characteristic() != p) {
        throw std::invalid_argument("frobenius_image: field characteristic mismatch");
    }
    const int n = I.n();
    std::vector<Polynomial> images;
    images.reserve(n);
    for (int i = 1; i <= n; ++i) {
        images.push_back(Polynomial::term(Scalar::one(I.field()),
                                          Monomial::power(i, static_cast<int>(p), n)));
    }
    std::vector<Polynomial> gens;
    gens.reserve(I.generators().size());
    for (const auto& g : I.generators()) gens.push_back(g.substitute(images));
    return HomogeneousIdeal(I.field(), n, std::move(gens));
}

}  // namespace regbound
