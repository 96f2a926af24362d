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

#include "invlab/oracle.hpp"

using namespace invlab;

namespace {
MultiPoly P(const std::string& s, int m) { return parse_poly(s, m, 1); }
} // namespace

TEST_CASE("simplicial complex closure is verified") {
    CHECK_THROWS_AS(SimplicialComplex(2, {3}), InputError); // {1,2} without its subsets
    SimplicialComplex ok(2, {0, 1, 2, 3});
    CHECK(ok.has_face(3));
}

TEST_CASE("reduced cohomology conventions") {
    // void complex: everything vanishes
    SimplicialComplex v = SimplicialComplex::void_complex(3);
    for (int q = -1; q <= 2; ++q) CHECK(v.reduced_cohomology_dim(q) == 0);
    // irrelevant complex {empty face}: H~^{-1} = K
    SimplicialComplex irr(2, {0});
    CHECK(irr.reduced_cohomology_dim(-1) == 1);
    CHECK(irr.reduced_cohomology_dim(0) == 0);
    // full simplex on 3 vertices: contractible
    std::vector<int> faces;
    for (int f = 0; f < 8; ++f) faces.push_back(f);
    SimplicialComplex simplex(3, faces);
    for (int q = -1; q <= 2; ++q) CHECK(simplex.reduced_cohomology_dim(q) == 0);
    // two points: H~^0 = K
    SimplicialComplex two(2, {0, 1, 2});
    CHECK(two.reduced_cohomology_dim(0) == 1);
    CHECK(two.reduced_cohomology_dim(-1) == 0);
    // hollow triangle: H~^1 = K
    SimplicialComplex hollow(3, {0, 1, 2, 4, 3, 5, 6});
    CHECK(hollow.reduced_cohomology_dim(1) == 1);
    CHECK(hollow.reduced_cohomology_dim(0) == 0);
}

TEST_CASE("hochster oracle: the maximal ideal in two variables") {
    std::vector<MultiPoly> j{P("X1", 2), P("X2", 2)};
    for (long n = -8; n <= 3; ++n) {
        OracleComponent top = monomial_component(j, 2, 2, n);
        CHECK(!top.divergent);
        CHECK(top.dim == std::max(0L, -n - 1));
        OracleComponent h1 = monomial_component(j, 2, 1, n);
        CHECK(!h1.divergent);
        CHECK(h1.dim == 0);
        OracleComponent h0 = monomial_component(j, 2, 0, n);
        CHECK(h0.dim == 0);
    }
}

TEST_CASE("hochster oracle: a principal ideal diverges in degree one") {
    std::vector<MultiPoly> j{P("X1", 2)};
    for (long n = -4; n <= 4; ++n) {
        OracleComponent c = monomial_component(j, 2, 1, n);
        CHECK(c.divergent);
    }
    CHECK(!monomial_component(j, 2, 2, 0).divergent);
    CHECK(monomial_component(j, 2, 2, 0).dim == 0);
}

TEST_CASE("hochster oracle: three variables, maximal ideal") {
    std::vector<MultiPoly> j{P("X1", 3), P("X2", 3), P("X3", 3)};
    for (long n = -7; n <= 0; ++n) {
        OracleComponent top = monomial_component(j, 3, 3, n);
        CHECK(!top.divergent);
        long expected = n <= -3 ? (-n - 1) * (-n - 2) / 2 : 0;
        CHECK(top.dim == expected);
    }
}

TEST_CASE("hochster oracle rejects non-squarefree input") {
    CHECK_THROWS_AS(monomial_component({P("X1^2", 2)}, 2, 1, 0), InputError);
    CHECK_THROWS_AS(monomial_component({P("X1 + X2", 2)}, 2, 1, 0), InputError);
}

TEST_CASE("hochster oracle: unit and zero ideals") {
    // unit ideal: everything vanishes
    for (int i = 0; i <= 2; ++i)
        for (long n = -3; n <= 3; ++n) {
            OracleComponent c = monomial_component({P("1", 2)}, 2, i, n);
            CHECK(!c.divergent);
            CHECK(c.dim == 0);
        }
    // zero ideal: H^0 = R
    OracleComponent r0 = monomial_component({}, 2, 0, 3);
    CHECK(r0.dim == 4);
    CHECK(monomial_component({}, 2, 1, 0).dim == 0);
}

TEST_CASE("hsop limit oracle on the trivial group matches the fraction count") {
    MatrixGroup triv = trivial_group(2);
    std::vector<MultiPoly> f{P("X1", 2), P("X2", 2)};
    for (long n = -6; n <= 1; ++n) {
        HsopLimitResult res = hsop_limit_component(triv, f, 1, n, 14);
        REQUIRE(res.determined);
        CHECK(res.dim == std::max(0L, -n - 1));
    }
}

TEST_CASE("hsop limit oracle for the one-variable sign group") {
    ExactMatrix m(1, 1);
    m.at(0, 0) = FieldElement(Rational(-1));
    MatrixGroup g = close_group({m});
    std::vector<MultiPoly> f{parse_poly("X1^2", 1, 1)};
    for (long n = -8; n <= 2; ++n) {
        HsopLimitResult res = hsop_limit_component(g, f, 2, n, 14);
        REQUIRE(res.determined);
        long expected = (n < 0 && n % 2 == 0) ? 1 : 0;
        CHECK(res.dim == expected);
    }
}

TEST_CASE("hsop limit oracle undetermined under a tiny stage cap") {
    MatrixGroup triv = trivial_group(2);
    std::vector<MultiPoly> f{P("X1", 2), P("X2", 2)};
    HsopLimitResult res = hsop_limit_component(triv, f, 1, -6, 1);
    CHECK(!res.determined);
}
