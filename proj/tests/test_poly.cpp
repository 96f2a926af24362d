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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "invlab/poly.hpp"
#include "invlab/prng.hpp"

using namespace invlab;

namespace {
MultiPoly P(const std::string& s, int m = 2, int field = 1) { return parse_poly(s, m, field); }
} // namespace

TEST_CASE("difference of squares") {
    CHECK(P("X1 + X2") * P("X1 - X2") == P("X1^2 - X2^2"));
}

TEST_CASE("multiplication by zero annihilates") {
    MultiPoly p = P("3*X1^2*X2 - 7*X2^3 + 1/2");
    CHECK((p * MultiPoly::zero(2)).is_zero());
}

TEST_CASE("cancellation removes the stored term") {
    MultiPoly sum = P("X1^2 + X1*X2") + P("-X1*X2");
    CHECK(sum == P("X1^2"));
    CHECK(sum.term_count() == 1);
}

TEST_CASE("variable count mismatch is an error") {
    CHECK_THROWS_AS((void)(P("X1", 2) + P("X1", 3)), InputError);
}

TEST_CASE("homogeneity") {
    CHECK(P("X1^2 + X1*X2").is_homogeneous());
    CHECK(!P("X1^2 + X2").is_homogeneous());
    CHECK(MultiPoly::zero(2).is_homogeneous());
    CHECK(P("X1^3").degree() == 3);
    CHECK(MultiPoly::zero(2).degree() == -1);
}

TEST_CASE("monomial orders") {
    // grevlex with X1 > X2 > X3: x1*x3 > x2^2 is FALSE in grevlex (compare last differing)
    Exponents a{1, 0, 1}, b{0, 2, 0};
    CHECK(monomial_compare(MonomialOrder::GrevLex, a, b) < 0); // x1x3 < x2^2
    CHECK(monomial_compare(MonomialOrder::Lex, a, b) > 0);     // lex: x1 wins
    Exponents c{2, 0}, d{1, 1};
    CHECK(monomial_compare(MonomialOrder::GrevLex, c, d) > 0);
}

TEST_CASE("monomial enumeration is ordered and complete") {
    auto monos = monomials_of_degree(3, 4);
    CHECK(static_cast<long>(monos.size()) == monomial_count(3, 4));
    for (std::size_t k = 0; k + 1 < monos.size(); ++k)
        CHECK(monomial_compare(MonomialOrder::GrevLex, monos[k], monos[k + 1]) > 0);
}

TEST_CASE("ring axioms on randomized polynomials") {
    Prng rng(7);
    auto random_poly = [&](int m) {
        MultiPoly p(m);
        int terms = static_cast<int>(rng.uniform(0, 4));
        for (int k = 0; k < terms; ++k) {
            Exponents e(m);
            for (int v = 0; v < m; ++v) e[v] = static_cast<int>(rng.uniform(0, 3));
            p.add_term(e, FieldElement(Rational(rng.uniform(-5, 5))));
        }
        return p;
    };
    for (int rep = 0; rep < 80; ++rep) {
        MultiPoly a = random_poly(2), b = random_poly(2), c = random_poly(2);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("canonical printing order and round trip") {
    MultiPoly p = P("X2^2 - X1*X2 + 2*X1^2 - 1/3");
    CHECK(p.to_string() == "2*X1^2 - X1*X2 + X2^2 - 1/3");
    CHECK(P(p.to_string()) == p);
    CHECK(MultiPoly::zero(2).to_string() == "0");
    MultiPoly q = P("(1 - zeta)*X1 + zeta^2*X2", 2, 3);
    CHECK(P(q.to_string(), 2, 3) == q);
}

TEST_CASE("parser diagnostics carry position") {
    try {
        P("X1 + @");
        CHECK(false);
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("position 5") != std::string::npos);
    }
    CHECK_THROWS_AS(P("X9"), InputError);
    CHECK_THROWS_AS(P("zeta*X1", 2, 1), InputError); // zeta needs a cyclotomic field
}

TEST_CASE("derivative and substitution") {
    CHECK(P("X1^3*X2").derivative(0) == P("3*X1^2*X2"));
    CHECK(P("X2^4").derivative(0).is_zero());
    // substitute X1 -> X1 + X2, X2 -> X2
    std::vector<MultiPoly> images{P("X1 + X2"), P("X2")};
    CHECK(P("X1^2").substitute_linear(images) == P("X1^2 + 2*X1*X2 + X2^2"));
}

TEST_CASE("normalized primitive form") {
    MultiPoly p = P("2/3*X1^2 - 4/3*X2^2");
    MultiPoly n = p.normalized_primitive();
    CHECK(n == P("X1^2 - 2*X2^2"));
    CHECK((-p).normalized_primitive() == n);
}
