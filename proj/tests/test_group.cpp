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

#include "invlab/group.hpp"
#include "invlab/prng.hpp"

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

MultiPoly P(const std::string& s, int m = 2, int field = 1) { return parse_poly(s, m, field); }

MatrixGroup sign_group() { return close_group({mat2(-1, 0, 0, -1)}); }
MatrixGroup swap_group() { return close_group({mat2(0, 1, 1, 0)}); }

} // namespace

TEST_CASE("closure of an involution has order 2") {
    CHECK(sign_group().order() == 2);
    CHECK(swap_group().order() == 2);
}

TEST_CASE("rotation generates the cyclic group of order 4") {
    MatrixGroup g = close_group({mat2(0, -1, 1, 0)});
    CHECK(g.order() == 4);
    // closed under inverse: every index has one
    for (int a = 0; a < g.order(); ++a) CHECK(g.inverse_index(a) >= 0);
}

TEST_CASE("group cap raises a resource error") {
    CHECK_THROWS_AS(close_group({mat2(0, -1, 1, 0)}, 3), ResourceLimitError);
}

TEST_CASE("non-invertible generator is rejected") {
    CHECK_THROWS_AS(close_group({mat2(1, 1, 1, 1)}), InputError);
}

TEST_CASE("action on polynomials under the column convention") {
    ExactMatrix minus = mat2(-1, 0, 0, -1);
    CHECK(act_on_poly(minus, P("X1^2")) == P("X1^2"));
    CHECK(act_on_poly(minus, P("X1")) == P("-X1"));
    ExactMatrix swp = mat2(0, 1, 1, 0);
    CHECK(act_on_poly(swp, P("X1^2*X2")) == P("X2^2*X1"));
    CHECK_THROWS_AS(act_on_poly(minus, P("X1", 3)), InputError);
}

TEST_CASE("action axiom on all pairs for monomials of degree <= 3") {
    for (const MatrixGroup& g : {sign_group(), swap_group(), close_group({mat2(0, -1, 1, 0)})}) {
        for (int a = 0; a < g.order(); ++a) {
            for (int b = 0; b < g.order(); ++b) {
                const ExactMatrix& prod = g.elements[g.cayley[a][b]];
                for (long d = 0; d <= 3; ++d) {
                    for (const auto& e : monomials_of_degree(2, d)) {
                        MultiPoly mono = MultiPoly::monomial(e, FieldElement::one());
                        CHECK(act_on_poly(prod, mono) ==
                              act_on_poly(g.elements[a], act_on_poly(g.elements[b], mono)));
                    }
                }
            }
        }
    }
}

TEST_CASE("reynolds on the sign group") {
    MatrixGroup g = sign_group();
    CHECK(reynolds(P("X1"), g).is_zero());
    CHECK(reynolds(P("X1^2"), g) == P("X1^2"));
}

TEST_CASE("reynolds on the swap group averages") {
    MatrixGroup g = swap_group();
    CHECK(reynolds(P("X1^2"), g) == P("1/2*X1^2 + 1/2*X2^2"));
}

TEST_CASE("reynolds is idempotent and equivariant on randomized inputs") {
    Prng rng(424242);
    std::vector<MatrixGroup> groups{sign_group(), swap_group(), close_group({mat2(0, -1, 1, 0)})};
    int checked = 0;
    for (int rep = 0; rep < 1000; ++rep) {
        const MatrixGroup& g = groups[rep % groups.size()];
        MultiPoly p(2);
        for (int k = 0; k < 3; ++k) {
            Exponents e{static_cast<int>(rng.uniform(0, 3)), static_cast<int>(rng.uniform(0, 3))};
            p.add_term(e, FieldElement(Rational(rng.uniform(-4, 4))));
        }
        MultiPoly rp = reynolds(p, g);
        CHECK(reynolds(rp, g) == rp);
        for (const auto& sigma : g.elements) CHECK(act_on_poly(sigma, rp) == rp);
        ++checked;
    }
    CHECK(checked == 1000);
}

TEST_CASE("invariant slice dims of the sign group") {
    MatrixGroup g = sign_group();
    CHECK(invariant_slice_dim(g, 1) == 0);
    CHECK(invariant_slice_dim(g, 2) == 3);
    CHECK(invariant_slice_dim(g, 3) == 0);
    CHECK(invariant_slice_dim(g, 4) == 5);
}

TEST_CASE("invariant slice dims, trivial and swap") {
    MatrixGroup triv = trivial_group(2);
    for (long n = 0; n <= 6; ++n) CHECK(invariant_slice_dim(triv, n) == n + 1);
    CHECK(invariant_slice_dim(swap_group(), 2) == 2);
}

TEST_CASE("molien series equals projector ranks up to degree 12") {
    std::vector<MatrixGroup> groups{trivial_group(2), sign_group(), swap_group(),
                                    close_group({mat2(0, -1, 1, 0)})};
    for (const auto& g : groups) {
        auto mol = molien_series(g, 12);
        for (int n = 0; n <= 12; ++n) CHECK(mol[n] == invariant_slice_dim(g, n));
    }
}

TEST_CASE("molien series of known groups") {
    CHECK(molien_series(trivial_group(2), 5) == std::vector<long>{1, 2, 3, 4, 5, 6});
    CHECK(molien_series(sign_group(), 5) == std::vector<long>{1, 0, 3, 0, 5, 0});
    CHECK(molien_series(swap_group(), 5) == std::vector<long>{1, 1, 2, 2, 3, 3});
}

TEST_CASE("molien over a cyclotomic group") {
    // C3 diagonal: diag(zeta, zeta^2)
    ExactMatrix d(2, 2);
    d.at(0, 0) = FieldElement::zeta_power(3, 1);
    d.at(1, 1) = FieldElement::zeta_power(3, 2);
    MatrixGroup g = close_group({d});
    CHECK(g.order() == 3);
    CHECK(molien_series(g, 6) == std::vector<long>{1, 0, 1, 2, 1, 2, 3});
    for (int n = 0; n <= 6; ++n) CHECK(molien_series(g, 6)[n] == invariant_slice_dim(g, n));
}

TEST_CASE("contragredient group properties") {
    // orthogonal swap is self-contragredient
    MatrixGroup g = swap_group();
    MatrixGroup dual = contragredient_group(g);
    CHECK(dual.elements[1] == g.elements[1]);
    // diag(zeta, zeta^2) maps to diag(zeta^2, zeta)
    ExactMatrix d(2, 2);
    d.at(0, 0) = FieldElement::zeta_power(3, 1);
    d.at(1, 1) = FieldElement::zeta_power(3, 2);
    MatrixGroup c3 = close_group({d});
    MatrixGroup c3d = contragredient_group(c3);
    bool found = false;
    for (const auto& e : c3d.elements) {
        if (e.at(0, 0) == FieldElement::zeta_power(3, 2) && e.at(1, 1) == FieldElement::zeta_power(3, 1))
            found = true;
    }
    CHECK(found);
    // homomorphism: dual(ab) = dual(a) dual(b) via the shared Cayley table
    for (int a = 0; a < c3.order(); ++a)
        for (int b = 0; b < c3.order(); ++b)
            CHECK(c3d.elements[c3d.cayley[a][b]] == c3d.elements[a] * c3d.elements[b]);
}

TEST_CASE("minus identity is its own contragredient") {
    MatrixGroup g = sign_group();
    MatrixGroup dual = contragredient_group(g);
    for (int a = 0; a < g.order(); ++a) CHECK(dual.elements[a] == g.elements[a]);
}
