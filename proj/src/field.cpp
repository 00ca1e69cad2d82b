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

#include "regbound/field.hpp"

namespace regbound {

bool is_prime_u32(std::uint32_t m) {
    if (m < 2) return false;
    if (m % 2 == 0) return m == 2;
    for (std::uint64_t d = 3; d * d <= m; d += 2) {
        if (m % d == 0) return false;
    }
    return true;
}

FieldSpec::FieldSpec(std::uint32_t characteristic) : p_(characteristic) {
    if (p_ != 0) {
        if (p_ >= (1u << 31)) {
            throw std::invalid_argument("field characteristic must be below 2^31");
        }
        if (!is_prime_u32(p_)) {
            throw std::invalid_argument("field characteristic " + std::to_string(p_) +
                                        " is not prime");
        }
    }
}

std::string FieldSpec::to_string() const {
    return p_ == 0 ? std::string("QQ") : "GF(" + std::to_string(p_) + ")";
}

namespace {

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    // extended Euclid on (a, p), p prime, a != 0 mod p
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw std::domain_error("not invertible mod p");
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

}  // namespace

Scalar Scalar::from_int(const FieldSpec& f, long long v) {
    Scalar s;
    s.field_ = f;
    s.p_ = f.characteristic();
    if (s.p_ == 0) {
        s.rat_ = mpq_class(static_cast<long>(v));
    } else {
        long long r = v % static_cast<long long>(s.p_);
        if (r < 0) r += s.p_;
        s.res_ = static_cast<std::uint64_t>(r);
    }
    return s;
}

Scalar Scalar::from_rational(const mpq_class& q) {
    Scalar s;
    s.field_ = FieldSpec::rationals();
    s.p_ = 0;
    s.rat_ = q;
    s.rat_.canonicalize();
    return s;
}

Scalar Scalar::from_residue(const FieldSpec& f, std::uint64_t r) {
    if (f.is_rationals()) throw std::invalid_argument("from_residue needs a prime field");
    Scalar s;
    s.field_ = f;
    s.p_ = f.characteristic();
    s.res_ = r % s.p_;
    return s;
}

bool Scalar::is_zero() const { return p_ == 0 ? rat_ == 0 : res_ == 0; }
bool Scalar::is_one() const { return p_ == 0 ? rat_ == 1 : res_ == 1; }

void Scalar::check_same_field(const Scalar& o) const {
    if (p_ != o.p_) throw std::invalid_argument("scalar field mismatch");
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar s(*this);
    if (p_ == 0) {
        s.rat_ = rat_ + o.rat_;
    } else {
        s.res_ = res_ + o.res_;
        if (s.res_ >= p_) s.res_ -= p_;
    }
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    Scalar s(*this);
    if (p_ == 0) {
        s.rat_ = rat_ - o.rat_;
    } else {
        s.res_ = res_ + p_ - o.res_;
        if (s.res_ >= p_) s.res_ -= p_;
    }
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar s(*this);
    if (p_ == 0) {
        s.rat_ = rat_ * o.rat_;
    } else {
        s.res_ = (res_ * o.res_) % p_;  // p < 2^31 so the product fits
    }
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
    Scalar s(*this);
    if (p_ == 0) {
        s.rat_ = -rat_;
    } else if (res_ != 0) {
        s.res_ = p_ - res_;
    }
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Scalar s(*this);
    if (p_ == 0) {
        s.rat_ = 1 / rat_;
    } else {
        s.res_ = mod_inverse(res_, p_);
    }
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    if (p_ != o.p_) return false;
    return p_ == 0 ? rat_ == o.rat_ : res_ == o.res_;
}

std::uint64_t Scalar::residue() const {
    if (p_ == 0) throw std::logic_error("residue() on a rational scalar");
    return res_;
}

const mpq_class& Scalar::rational() const {
    if (p_ != 0) throw std::logic_error("rational() on a modular scalar");
    return rat_;
}

std::string Scalar::to_string() const {
    return p_ == 0 ? rat_.get_str() : std::to_string(res_);
}

}  // namespace regbound
