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

#include "regbound/monomial.hpp"

#include <numeric>
#include <stdexcept>

namespace regbound {

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
    for (int e : exps_) {
        if (e < 0 || e >= kExponentCap) {
            throw std::invalid_argument("monomial exponent out of range");
        }
    }
}

Monomial Monomial::variable(int var, int n) { return power(var, 1, n); }

Monomial Monomial::power(int var, int e, int n) {
    if (var < 1 || var > n) throw std::invalid_argument("variable index out of range");
    std::vector<int> exps(n, 0);
    exps[var - 1] = e;
    return Monomial(std::move(exps));
}

int Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

bool Monomial::is_one() const {
    for (int e : exps_) {
        if (e != 0) return false;
    }
    return true;
}

int Monomial::max_var() const {
    for (int i = n(); i >= 1; --i) {
        if (exps_[i - 1] > 0) return i;
    }
    return 0;
}

int Monomial::support_size() const {
    int c = 0;
    for (int e : exps_) c += (e > 0);
    return c;
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (n() != o.n()) throw std::invalid_argument("monomial ambient mismatch");
    std::vector<int> exps(exps_);
    for (int i = 0; i < n(); ++i) {
        exps[i] += o.exps_[i];
        if (exps[i] >= kExponentCap) throw std::overflow_error("monomial exponent overflow");
    }
    Monomial m;
    m.exps_ = std::move(exps);
    return m;
}

Monomial Monomial::operator/(const Monomial& o) const {
    if (n() != o.n()) throw std::invalid_argument("monomial ambient mismatch");
    std::vector<int> exps(exps_);
    for (int i = 0; i < n(); ++i) {
        exps[i] -= o.exps_[i];
        if (exps[i] < 0) throw std::domain_error("monomial division is not exact");
    }
    Monomial m;
    m.exps_ = std::move(exps);
    return m;
}

bool Monomial::divides(const Monomial& o) const {
    if (n() != o.n()) throw std::invalid_argument("monomial ambient mismatch");
    for (int i = 0; i < n(); ++i) {
        if (exps_[i] > o.exps_[i]) return false;
    }
    return true;
}

std::string Monomial::to_string() const {
    std::vector<std::string> names;
    names.reserve(exps_.size());
    for (int i = 1; i <= n(); ++i) names.push_back("x" + std::to_string(i));
    return to_string(names);
}

std::string Monomial::to_string(const std::vector<std::string>& names) const {
    if (is_one()) return "1";
    std::string out;
    for (int i = 0; i < n(); ++i) {
        if (exps_[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += names[i];
        if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
    }
    return out;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    if (a.n() != b.n()) throw std::invalid_argument("monomial ambient mismatch");
    std::vector<int> exps(a.n());
    for (int i = 0; i < a.n(); ++i) exps[i] = std::min(a.exponents()[i], b.exponents()[i]);
    return Monomial(std::move(exps));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    if (a.n() != b.n()) throw std::invalid_argument("monomial ambient mismatch");
    std::vector<int> exps(a.n());
    for (int i = 0; i < a.n(); ++i) exps[i] = std::max(a.exponents()[i], b.exponents()[i]);
    return Monomial(std::move(exps));
}

std::string TermOrder::name() const {
    switch (kind) {
        case Kind::rlex: return "rlex";
        case Kind::lex: return "lex";
        case Kind::grlex: return "grlex";
    }
    return "?";
}

namespace {

int lex_compare(const Monomial& u, const Monomial& v) {
    for (int i = 0; i < u.n(); ++i) {
        int d = u.exponents()[i] - v.exponents()[i];
        if (d > 0) return 1;
        if (d < 0) return -1;
    }
    return 0;
}

}  // namespace

int term_compare(const TermOrder& order, const Monomial& u, const Monomial& v) {
    if (u.n() != v.n()) throw std::invalid_argument("monomial ambient mismatch");
    switch (order.kind) {
        case TermOrder::Kind::lex:
            return lex_compare(u, v);
        case TermOrder::Kind::grlex: {
            int du = u.degree(), dv = v.degree();
            if (du != dv) return du > dv ? 1 : -1;
            return lex_compare(u, v);
        }
        case TermOrder::Kind::rlex: {
            int du = u.degree(), dv = v.degree();
            if (du != dv) return du > dv ? 1 : -1;
            // the greater monomial has the last nonzero entry of u - v negative
            for (int i = u.n() - 1; i >= 0; --i) {
                int d = u.exponents()[i] - v.exponents()[i];
                if (d < 0) return 1;
                if (d > 0) return -1;
            }
            return 0;
        }
    }
    return 0;
}

}  // namespace regbound
