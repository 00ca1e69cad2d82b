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

#ifndef REGBOUND_FIELD_HPP
#define REGBOUND_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace regbound {

/// Coefficient field: the rationals (characteristic 0) or a prime field
/// GF(p) with p < 2^31. Primality is checked at construction.
class FieldSpec {
   public:
    FieldSpec() : p_(0) {}
    explicit FieldSpec(std::uint32_t characteristic);

    static FieldSpec rationals() { return FieldSpec(); }
    static FieldSpec prime_field(std::uint32_t p) { return FieldSpec(p); }

    std::uint32_t characteristic() const { return p_; }
    bool is_rationals() const { return p_ == 0; }

    bool operator==(const FieldSpec& other) const { return p_ == other.p_; }
    bool operator!=(const FieldSpec& other) const { return p_ != other.p_; }

    std::string to_string() const;

   private:
    std::uint32_t p_;
};

bool is_prime_u32(std::uint32_t m);

/// Exact field element. Over the rationals the value is an
/// arbitrary-precision reduced fraction; over GF(p) a residue in [0, p).
class Scalar {
   public:
    Scalar() : p_(0), res_(0), rat_(0) {}

    static Scalar zero(const FieldSpec& f) { return from_int(f, 0); }
    static Scalar one(const FieldSpec& f) { return from_int(f, 1); }
    static Scalar from_int(const FieldSpec& f, long long v);
    static Scalar from_rational(const mpq_class& q);
    static Scalar from_residue(const FieldSpec& f, std::uint64_t r);

    const FieldSpec& field() const { return field_; }
    std::uint32_t characteristic() const { return p_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Residue value; only valid over a prime field.
    std::uint64_t residue() const;
    /// Rational value; only valid over the rationals.
    const mpq_class& rational() const;

    std::string to_string() const;

   private:
    void check_same_field(const Scalar& o) const;

    FieldSpec field_;
    std::uint32_t p_;      // cached characteristic
    std::uint64_t res_;    // residue when p_ > 0
    mpq_class rat_;        // value when p_ == 0
};

}  // namespace regbound

#endif
