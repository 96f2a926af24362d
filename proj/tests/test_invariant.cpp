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

#include "invlab/invariant.hpp"

using namespace invlab;

namespace {

ExactMatrix mat2(long a, long b, long c, long d) {
    ExactMatrix m(2, 2);
    m.at(0, 0) = FieldElement(Rational(a));
    m.at(0, 1) = FieldElement(Rational(b));
    m.at(1, 0) = FieldElement(Rational(c));
    m.at(1, 1) = FieldElement(Rational(d));
    return m;
}

ExactMatrix mat1(long a) {
    ExactMatrix m(1, 1);
    m.at(0, 0) = FieldElement(Rational(a));
    return m;
}

MultiPoly P(const std::string& s, int m = 2) { return parse_poly(s, m, 1); }

MatrixGroup c3_group() {
    ExactMatrix d(2, 2);
    d.at(0, 0) = FieldElement::zeta_power(3, 1);
    d.at(1, 1) = FieldElement::zeta_power(3, 2);
    return close_group({d});
}

} // namespace

TEST_CASE("noether generators of the trivial group are the variables") {
    InvariantAlgebra alg = noether_generators(trivial_group(2));
    REQUIRE(alg.generators.size() == 2);
    CHECK(alg.generators[0] == P("X1"));
    CHECK(alg.generators[1] == P("X2"));
    CHECK(alg.certificate_ok);
}

TEST_CASE("noether generators of the sign group are the quadrics") {
    InvariantAlgebra alg = noether_generators(close_group({mat2(-1, 0, 0, -1)}));
    REQUIRE(alg.generators.size() == 3);
    CHECK(alg.generators[0] == P("X1^2"));
    CHECK(alg.generators[1] == P("X1*X2"));
    CHECK(alg.generators[2] == P("X2^2"));
    CHECK(alg.certificate_ok);
}

TEST_CASE("noether generators of the swap group span the symmetric functions") {
    InvariantAlgebra alg = noether_generators(close_group({mat2(0, 1, 1, 0)}));
    REQUIRE(alg.generators.size() == 2);
    CHECK(alg.generators[0] == P("X1 + X2"));
    CHECK(alg.generators[1].degree() == 2);
    CHECK(alg.certificate_ok);
}

TEST_CASE("noether generators of the C3 diagonal group") {
    InvariantAlgebra alg = noether_generators(c3_group());
    // xy, x^3, y^3
    REQUIRE(alg.generators.size() == 3);
    CHECK(alg.generators[0] == P("X1*X2"));
    CHECK(alg.certificate_ok);
}

TEST_CASE("subalgebra slice dims certify minimality") {
    // the pruned generators of the sign group generate every invariant slice
    MatrixGroup g = close_group({mat2(-1, 0, 0, -1)});
    InvariantAlgebra alg = noether_generators(g);
    for (long n = 0; n <= 4; ++n)
        CHECK(subalgebra_slice_dim(alg.generators, n) == invariant_slice_dim(g, n));
}

TEST_CASE("fundamental invariants for the trivial group in two variables") {
    FundamentalInvariants fi = fundamental_invariants(trivial_group(2), 7);
    CHECK(fi.c == 1);
    REQUIRE(fi.f.size() == 2);
    for (const auto& f : fi.f) CHECK(f.degree() == 1);
    QuotientProfile prof = quotient_profile(fi.f, fi.c);
    CHECK(prof.dims == std::vector<long>{1});
    CHECK(prof.top_degree == 0);
    CHECK(prof.hilbert_bound == 0);
    CHECK(prof.power_bound == 0);
    CHECK(!prof.bounds_differ);
}

TEST_CASE("fundamental invariants for the sign group flag the bound discrepancy") {
    MatrixGroup g = close_group({mat2(-1, 0, 0, -1)});
    FundamentalInvariants fi = fundamental_invariants(g, 11);
    CHECK(fi.c == 2);
    REQUIRE(fi.f.size() == 2);
    for (const auto& f : fi.f) {
        CHECK(f.degree() == 2);
        for (const auto& sigma : g.elements) CHECK(act_on_poly(sigma, f) == f);
    }
    CHECK(verify_regular_sequence(fi.f, 8));
    QuotientProfile prof = quotient_profile(fi.f, fi.c);
    CHECK(prof.dims == std::vector<long>{1, 2, 1});
    CHECK(prof.top_degree == 2);
    CHECK(prof.total == 4); // c^m
    CHECK(prof.hilbert_bound == 2);
    CHECK(prof.power_bound == 1);
    CHECK(prof.bounds_differ); // m(c-1) = 2 vs (c-1)^m = 1 must be flagged
}

TEST_CASE("fundamental invariants in one variable") {
    MatrixGroup g = close_group({mat1(-1)});
    FundamentalInvariants fi = fundamental_invariants(g, 3);
    CHECK(fi.c == 2);
    REQUIRE(fi.f.size() == 1);
    CHECK(fi.f[0] == parse_poly("X1^2", 1, 1));
    QuotientProfile prof = quotient_profile(fi.f, fi.c);
    CHECK(prof.dims == std::vector<long>{1, 1});
    CHECK(prof.top_degree == 1);
    CHECK(prof.hilbert_bound == 1);
    CHECK(prof.power_bound == 1);
    CHECK(!prof.bounds_differ);
}

TEST_CASE("fundamental invariants are deterministic given the seed") {
    MatrixGroup g = close_group({mat2(0, 1, 1, 0)});
    FundamentalInvariants a = fundamental_invariants(g, 5);
    FundamentalInvariants b = fundamental_invariants(g, 5);
    CHECK(a.f == b.f);
    CHECK(a.dual == b.dual);
    CHECK(a.retries_used == b.retries_used);
}

TEST_CASE("dual tuple is fundamental for the contragredient group") {
    MatrixGroup g = c3_group();
    FundamentalInvariants fi = fundamental_invariants(g, 2);
    CHECK(fi.c == 6);
    MatrixGroup dual = contragredient_group(g);
    for (const auto& gpoly : fi.dual) {
        CHECK(gpoly.degree() == 6);
        for (const auto& sigma : dual.elements) CHECK(act_on_poly(sigma, gpoly) == gpoly);
    }
    CHECK(verify_regular_sequence(fi.dual, 14));
}

TEST_CASE("verify_regular_sequence accepts the variables and rejects junk") {
    CHECK(verify_regular_sequence({P("X1"), P("X2")}, 6));
    CHECK(!verify_regular_sequence({P("X1^2"), P("X1^2")}, 6)); // Koszul H_1 != 0
    CHECK(!verify_regular_sequence({P("X1*X2"), P("X1^2")}, 6)); // not zero-dimensional
}

TEST_CASE("quotient profile equals the complete intersection series with total c^m") {
    for (long c : {2L, 3L}) {
        std::vector<MultiPoly> f{P("X1^" + std::to_string(c)), P("X2^" + std::to_string(c))};
        QuotientProfile prof = quotient_profile(f, c);
        CHECK(prof.dims == complete_intersection_series(2, c));
        CHECK(prof.total == c * c);
        CHECK(prof.top_degree == 2 * (c - 1));
    }
}

TEST_CASE("factorial guard") {
    CHECK(factorial_checked(4) == 24);
    CHECK(factorial_checked(6) == 720);
    CHECK_THROWS_AS(factorial_checked(30), ResourceLimitError);
}
