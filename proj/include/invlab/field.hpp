/*
   Copyright 2026 The invlab authors

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

#ifndef INVLAB_FIELD_HPP
#define INVLAB_FIELD_HPP

#include <string>
#include <vector>

#include <gmpxx.h>

#include "invlab/errors.hpp"

namespace invlab {

using Rational = mpq_class;

/// Euler totient, small arguments.
int euler_phi(int n);

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
/// Integer coefficients, leading coefficient 1, degree phi(n).
const std::vector<Rational>& cyclotomic_polynomial(int n);

/// An element of Q(zeta_n), stored as a polynomial of degree < phi(n) in a
/// fixed primitive n-th root of unity zeta, reduced modulo the n-th
/// cyclotomic polynomial. index 1 means plain Q. All arithmetic is exact.
///
/// Elements of Q embed into any Q(zeta_n); the only rejected combination is
/// two distinct indices > 1 (no compositum construction by design).
class FieldElement {
public:
    FieldElement() : index_(1) {}
    FieldElement(const Rational& r, int index = 1);
    FieldElement(long n, int index = 1) : FieldElement(Rational(n), index) {}

    static FieldElement zero(int index = 1) { return FieldElement(Rational(0), index); }
    static FieldElement one(int index = 1) { return FieldElement(Rational(1), index); }
    /// zeta^k in Q(zeta_index); index must be > 1.
    static FieldElement zeta_power(int index, long k);
    /// From raw coefficients (powers of zeta), reduced on construction.
    static FieldElement from_coeffs(std::vector<Rational> coeffs, int index);

    int cyclotomic_index() const { return index_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    /// True when the element lies in Q (all zeta-coefficients beyond 0 vanish).
    bool is_rational() const;
    Rational rational_value() const; // throws InputError if not rational

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    FieldElement operator-() const;
    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement inverse() const; // throws InputError on zero
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }
    /// Deterministic total order (index-agnostic for rational values);
    /// used for canonical element dedup, not a field order.
    bool operator<(const FieldElement& o) const;

    /// Canonical text: lowest terms, '+'/'-' separated zeta powers,
    /// e.g. "1/2", "-zeta", "1 - 2*zeta^2".
    std::string to_string() const;

private:
    int index_;                    // cyclotomic index n; 1 = Q
    std::vector<Rational> coeffs_; // coeffs of zeta^0.., trailing zeros trimmed; empty = 0

    void reduce();
    static int common_index(int a, int b);
    FieldElement promoted(int index) const;
};

/// Parse a field constant (rationals, zeta powers, +,-,*,^, parentheses).
/// `index` is the scenario's cyclotomic index; 'zeta' requires index > 1.
FieldElement parse_field_element(const std::string& text, int index);

} // namespace invlab

#endif
