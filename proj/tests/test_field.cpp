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

#include "invlab/field.hpp"
#include "invlab/prng.hpp"

using namespace invlab;

TEST_CASE("euler phi") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(2) == 1);
    CHECK(euler_phi(3) == 2);
    CHECK(euler_phi(4) == 2);
    CHECK(euler_phi(12) == 4);
}

TEST_CASE("cyclotomic polynomials") {
    // Phi_1 = x - 1, Phi_2 = x + 1, Phi_3 = x^2 + x + 1, Phi_4 = x^2 + 1, Phi_6 = x^2 - x + 1
    CHECK(cyclotomic_polynomial(2) == std::vector<Rational>{1, 1});
    CHECK(cyclotomic_polynomial(3) == std::vector<Rational>{1, 1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<Rational>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<Rational>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<Rational>{1, 0, -1, 0, 1});
}

TEST_CASE("zeta_3 arithmetic") {
    FieldElement z = FieldElement::zeta_power(3, 1);
    FieldElement z2 = FieldElement::zeta_power(3, 2);
    // 1 + zeta + zeta^2 = 0
    CHECK((FieldElement::one(3) + z + z2).is_zero());
    // zeta^3 = 1
    CHECK((z * z * z).is_one());
    // inverse of zeta is zeta^2
    CHECK(z.inverse() == z2);
    CHECK((z / z).is_one());
}

TEST_CASE("rational embedding and mixed indices") {
    FieldElement half(Rational(1, 2));
    FieldElement z = FieldElement::zeta_power(3, 1);
    FieldElement sum = half + z;
    CHECK(sum.cyclotomic_index() == 3);
    CHECK(!sum.is_rational());
    CHECK((sum - z) == half);
    FieldElement z4 = FieldElement::zeta_power(4, 1);
    CHECK_THROWS_AS((void)(z + z4), InputError);
}

TEST_CASE("canonical form is reduced and trimmed") {
    // zeta^2 + zeta + 1 reduces to 0 in Q(zeta_3)
    FieldElement e = FieldElement::from_coeffs({Rational(1), Rational(1), Rational(1)}, 3);
    CHECK(e.is_zero());
    FieldElement f = FieldElement::from_coeffs({Rational(0), Rational(0), Rational(0), Rational(2)}, 5);
    CHECK(!f.is_zero()); // zeta_5^3 is a basis element
}

TEST_CASE("field axioms on randomized cyclotomic inputs") {
    Prng rng(20260808);
    auto random_elem = [&](int index) {
        std::vector<Rational> c;
        for (int k = 0; k < euler_phi(index); ++k)
            c.emplace_back(rng.uniform(-6, 6), rng.uniform(1, 4));
        return FieldElement::from_coeffs(std::move(c), index);
    };
    for (int index : {1, 3, 4, 5}) {
        for (int rep = 0; rep < 60; ++rep) {
            FieldElement a = random_elem(index), b = random_elem(index), c = random_elem(index);
            CHECK((a + b) * c == a * c + b * c);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            if (!a.is_zero()) {
                CHECK((a * a.inverse()).is_one());
            }
        }
    }
}

TEST_CASE("printing") {
    CHECK(FieldElement(Rational(-3, 6)).to_string() == "-1/2");
    CHECK(FieldElement::zeta_power(3, 1).to_string() == "zeta");
    // 1 - zeta^2 reduces to 2 + zeta modulo 1 + zeta + zeta^2
    FieldElement e = FieldElement::one(3) - FieldElement::zeta_power(3, 2);
    CHECK(e.to_string() == "2 + zeta");
    CHECK(FieldElement::zero().to_string() == "0");
}

TEST_CASE("parse round trip") {
    FieldElement e = parse_field_element("1/2", 1);
    CHECK(e == FieldElement(Rational(1, 2)));
    FieldElement z = parse_field_element("zeta^2", 3);
    CHECK(z == FieldElement::zeta_power(3, 2));
    FieldElement mix = parse_field_element("1 - 2*zeta", 3);
    CHECK(mix.to_string() == "1 - 2*zeta");
    CHECK_THROWS_AS(parse_field_element("zeta", 1), InputError);
}
