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

#ifndef INVLAB_POLY_HPP
#define INVLAB_POLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "invlab/field.hpp"

namespace invlab {

/// Exponent vector in N^m.
using Exponents = std::vector<int>;

long total_degree(const Exponents& e);
bool divides(const Exponents& a, const Exponents& b);      // a | b componentwise
Exponents exponent_sum(const Exponents& a, const Exponents& b);
Exponents exponent_diff(const Exponents& a, const Exponents& b); // b must be divisible by a? caller checks
Exponents exponent_lcm(const Exponents& a, const Exponents& b);

enum class MonomialOrder { GrevLex, Lex };

/// -1, 0, +1 with a < b meaning a is smaller in the order. X1 > X2 > ... > Xm.
int monomial_compare(MonomialOrder order, const Exponents& a, const Exponents& b);

/// All exponent vectors in m variables of total degree d, descending in
/// `order`. The canonical basis enumeration used everywhere.
std::vector<Exponents> monomials_of_degree(int m, long d, MonomialOrder order = MonomialOrder::GrevLex);

/// Number of monomials of degree d in m variables (binomial), as long.
long monomial_count(int m, long d);

/// Sparse multivariate polynomial over Q or a cyclotomic field. Zero
/// coefficients are never stored; all exponent vectors have length
/// num_vars(). Arithmetic is exact.
class MultiPoly {
public:
    MultiPoly() : num_vars_(0) {}
    explicit MultiPoly(int num_vars) : num_vars_(num_vars) {}

    static MultiPoly zero(int num_vars) { return MultiPoly(num_vars); }
    static MultiPoly constant(int num_vars, const FieldElement& c);
    static MultiPoly variable(int num_vars, int index_zero_based);
    static MultiPoly monomial(Exponents e, const FieldElement& c);

    int num_vars() const { return num_vars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Exponents, FieldElement>& terms() const { return terms_; }

    /// Max cyclotomic index over coefficients (1 when rational or zero).
    int field_index() const;

    long degree() const; // -1 for the zero polynomial
    /// Homogeneous iff all stored terms share one total degree; zero is
    /// homogeneous of every degree (returned degree -1 then).
    bool is_homogeneous() const;

    FieldElement coeff(const Exponents& e) const;
    void add_term(const Exponents& e, const FieldElement& c); // accumulates, drops zeros

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scalar_mul(const FieldElement& c) const;
    MultiPoly pow(long e) const;

    bool operator==(const MultiPoly& o) const { return num_vars_ == o.num_vars_ && terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }
    bool operator<(const MultiPoly& o) const; // deterministic total order for dedup

    /// Linear substitution X_j -> sum_i M(i,j) X_i given column vectors of
    /// images; images[j] is the polynomial replacing X_j.
    MultiPoly substitute_linear(const std::vector<MultiPoly>& images) const;

    /// Partial derivative with respect to variable i (zero based).
    MultiPoly derivative(int var) const;

    /// Leading term with respect to a monomial order.
    std::pair<Exponents, FieldElement> leading_term(MonomialOrder order) const; // throws on zero

    /// Divide all coefficients so content is 1 with positive rational lead
    /// (deterministic normalization used for generator sets).
    MultiPoly normalized_primitive(MonomialOrder order = MonomialOrder::GrevLex) const;

    /// Canonical text, terms descending in `order`. `var_prefix` is "X" for
    /// ring variables and "D" for the dual (differential) variables.
    std::string to_string(MonomialOrder order = MonomialOrder::GrevLex,
                          const std::string& var_prefix = "X") const;

private:
    int num_vars_;
    std::map<Exponents, FieldElement> terms_;
    void check_compatible(const MultiPoly& o) const;
};

/// Parse the documented polynomial grammar (variables X1..Xm or D1..Dm,
/// rational coefficients, zeta, ^, *, + , -, parentheses; whitespace
/// insensitive). Errors carry the character position.
MultiPoly parse_poly(const std::string& text, int num_vars, int field_index);

} // namespace invlab

#endif
