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

#include "invlab/cech.hpp"
#include "invlab/koszul.hpp"
#include "invlab/oracle.hpp"

using namespace invlab;

namespace {

MultiPoly P(const std::string& s, int m = 2) { return parse_poly(s, m, 1); }

ExactMatrix mat2(long a, long b, long c, long d) {
    ExactMatrix m(2, 2);
    m.at(0, 0) = FieldElement(Rational(a));
    m.at(0, 1) = FieldElement(Rational(b));
    m.at(1, 0) = FieldElement(Rational(c));
    m.at(1, 1) = FieldElement(Rational(d));
    return m;
}

MatrixGroup sign_group() { return close_group({mat2(-1, 0, 0, -1)}); }
MatrixGroup swap_group() { return close_group({mat2(0, 1, 1, 0)}); }

CechPolicy default_policy() { return CechPolicy{}; }

} // namespace

TEST_CASE("principal ideal: H^1 components diverge at every degree") {
    CechContext ctx(2, {P("X1")}, default_policy());
    for (long n : {-3L, -1L, 0L, 2L}) {
        const ComponentDim& c = ctx.component(1, n);
        CHECK(!c.finite());
    }
}

TEST_CASE("maximal ideal of K[x,y]: H^2 is the socle count, H^1 vanishes") {
    CechContext ctx(2, {P("X1"), P("X2")}, default_policy());
    for (long n = -6; n <= 2; ++n) {
        const ComponentDim& h2 = ctx.component(2, n);
        REQUIRE(h2.finite());
        CHECK(h2.dim == std::max(0L, -n - 1));
        const ComponentDim& h1 = ctx.component(1, n);
        REQUIRE(h1.finite());
        CHECK(h1.dim == 0);
        const ComponentDim& h0 = ctx.component(0, n);
        REQUIRE(h0.finite());
        CHECK(h0.dim == 0);
    }
}

TEST_CASE("zero ideal gives back the ring itself at i = 0") {
    CechContext ctx(2, {}, default_policy());
    for (long n = -2; n <= 4; ++n) {
        const ComponentDim& c = ctx.component(0, n);
        REQUIRE(c.finite());
        CHECK(c.dim == (n < 0 ? 0 : n + 1));
    }
}

TEST_CASE("unit ideal kills all components, computed not special-cased") {
    CechContext ctx(2, {P("1")}, default_policy());
    for (int i = 0; i <= 1; ++i)
        for (long n = -3; n <= 3; ++n) {
            const ComponentDim& c = ctx.component(i, n);
            REQUIRE(c.finite());
            CHECK(c.dim == 0);
        }
}

TEST_CASE("vanishing beyond the generator count and the dimension") {
    CechContext ctx(2, {P("X1"), P("X2")}, default_policy());
    for (long n = -4; n <= 2; ++n) {
        const ComponentDim& c = ctx.component(3, n);
        REQUIRE(c.finite());
        CHECK(c.dim == 0);
    }
    CechContext ctx3(2, {P("X1"), P("X2"), P("X1 + X2")}, default_policy());
    for (long n = -4; n <= 1; ++n) {
        const ComponentDim& c = ctx3.component(3, n); // i = r = 3 > m = 2
        REQUIRE(c.finite());
        CHECK(c.dim == 0);
    }
}

TEST_CASE("radical invariance: (x) and (x, x^2) agree") {
    CechContext a(2, {P("X1")}, default_policy());
    CechContext b(2, {P("X1"), P("X1^2")}, default_policy());
    for (long n = -3; n <= 2; ++n) {
        const ComponentDim& ca = a.component(1, n);
        const ComponentDim& cb = b.component(1, n);
        CHECK(ca.finite() == cb.finite());
        if (ca.finite()) CHECK(ca.dim == cb.dim);
    }
    // and the (now reducible) complex still vanishes at i = 2
    for (long n = -3; n <= 2; ++n) {
        const ComponentDim& c2 = b.component(2, n);
        REQUIRE(c2.finite());
        CHECK(c2.dim == 0);
    }
}

TEST_CASE("veronese suite: invariants of the socle under the sign action") {
    CechContext ctx(sign_group(), {P("X1^2"), P("X1*X2"), P("X2^2")}, default_policy());
    CHECK(ctx.block_mode());
    for (long n = -10; n <= 0; ++n) {
        const ComponentDim& c = ctx.component(2, n);
        REQUIRE(c.finite());
        long expected = (n % 2 == 0) ? std::max(0L, -n - 1) : 0;
        CHECK(c.dim == expected);
    }
}

TEST_CASE("veronese suite agrees between block and dense modes") {
    CechPolicy dense = default_policy();
    dense.force_dense = true;
    CechContext blocks(sign_group(), {P("X1^2"), P("X1*X2"), P("X2^2")}, default_policy());
    CechContext full(sign_group(), {P("X1^2"), P("X1*X2"), P("X2^2")}, dense);
    CHECK(!full.block_mode());
    for (long n = -5; n <= 0; ++n) {
        const ComponentDim& a = blocks.component(2, n);
        const ComponentDim& b = full.component(2, n);
        REQUIRE(a.finite());
        REQUIRE(b.finite());
        CHECK(a.dim == b.dim);
    }
}

TEST_CASE("invariant principal ideal (x^2)S: parity-split verdicts") {
    CechContext ctx(sign_group(), {P("X1^2")}, default_policy());
    for (long n = -6; n <= 4; ++n) {
        const ComponentDim& c = ctx.component(1, n);
        if (n % 2 == 0) {
            CHECK(!c.finite()); // infinitely many invariant fractions
        } else {
            REQUIRE(c.finite());
            CHECK(c.dim == 0); // odd components of an S-module vanish
        }
    }
}

TEST_CASE("non-invariant generators are rejected with a witness") {
    try {
        CechContext ctx(sign_group(), {P("X1")}, default_policy());
        CHECK(false);
    } catch (const InputError& e) {
        std::string msg = e.what();
        CHECK(msg.find("not invariant") != std::string::npos);
        CHECK(msg.find("X1") != std::string::npos);
    }
    CHECK_THROWS_AS(CechContext(sign_group(), {P("X1^2 + X1")}, default_policy()), InputError);
}

TEST_CASE("trivial group reduces the invariant engine to the plain one") {
    CechContext plain(2, {P("X1"), P("X2")}, default_policy());
    CechContext inv(trivial_group(2), {P("X1"), P("X2")}, default_policy());
    for (long n = -5; n <= 1; ++n) {
        CHECK(plain.component(2, n).dim == inv.component(2, n).dim);
    }
}

TEST_CASE("undetermined within t_max raises with the observation sequence") {
    CechPolicy tiny = default_policy();
    tiny.t_max = 1;
    CechContext ctx(2, {P("X1")}, tiny);
    try {
        ctx.component(1, 0);
        CHECK(false);
    } catch (const UndeterminedError& e) {
        CHECK(!e.observations.empty());
        CHECK(e.observations.find("\"t\":") != std::string::npos);
    }
}

TEST_CASE("oracle agreement on squarefree ideals in two variables") {
    std::vector<std::vector<MultiPoly>> ideals{
        {P("X1")}, {P("X2")}, {P("X1*X2")}, {P("X1"), P("X2")}};
    for (const auto& gens : ideals) {
        CechContext ctx(2, gens, default_policy());
        for (int i = 0; i <= 2; ++i) {
            for (long n = -5; n <= 2; ++n) {
                OracleComponent oc = monomial_component(gens, 2, i, n);
                const ComponentDim& ec = ctx.component(i, n);
                CHECK(ec.finite() == !oc.divergent);
                if (ec.finite()) CHECK(ec.dim == oc.dim);
            }
        }
    }
}

TEST_CASE("chain-level identities: d o d = 0 and Reynolds commutes") {
    CechContext dense(swap_group(), {P("X1 + X2"), P("X1*X2")}, default_policy());
    for (int t = 1; t <= 3; ++t) {
        for (long n = -2; n <= 2; ++n) {
            CHECK(dense.check_boundary_square_zero(1, n, t));
            CHECK(dense.check_equivariance_identities(1, n, t));
        }
    }
    CechContext blocks(sign_group(), {P("X1^2"), P("X1*X2"), P("X2^2")}, default_policy());
    for (int t = 1; t <= 2; ++t) {
        CHECK(blocks.check_boundary_square_zero(1, -2, t));
        CHECK(blocks.check_boundary_square_zero(2, -2, t));
        CHECK(blocks.check_equivariance_identities(2, -2, t));
    }
}

TEST_CASE("multiplication action on the ring module (zero ideal)") {
    auto ctx = std::make_shared<CechContext>(sign_group(), std::vector<MultiPoly>{}, default_policy());
    // S = second Veronese: S_0 -> S_2 by x^2 is injective of rank 1
    ExactMatrix a = ctx->multiplication_action(P("X1^2"), 0, 0);
    CHECK(a.cols() == 1);
    CHECK(a.rows() == 3);
    CHECK(rank(a) == 1);
}

TEST_CASE("multiplication action on the Veronese socle drops rank") {
    auto ctx = std::make_shared<CechContext>(sign_group(),
                                             std::vector<MultiPoly>{P("X1^2"), P("X1*X2"), P("X2^2")},
                                             default_policy());
    // x^2 : M_{-4} -> M_{-2} has source dim 3, target dim 1, rank 1
    ExactMatrix a = ctx->multiplication_action(P("X1^2"), 2, -4);
    CHECK(a.cols() == 3);
    CHECK(a.rows() == 1);
    CHECK(rank(a) == 1);
}

TEST_CASE("injection evidence: y acts freely on R_x/R, x does not") {
    CechContext ctx(2, {P("X1")}, default_policy());
    for (long n = -3; n <= 2; ++n) {
        auto ok = ctx.injection_evidence(P("X2"), 1, n);
        CHECK(ok.injective);
        // x kills exactly the classes with denominator exponent one, which
        // exist iff n + 1 >= 0
        auto bad = ctx.injection_evidence(P("X1"), 1, n);
        if (n >= -1) {
            CHECK(!bad.injective);
            CHECK(bad.surviving_kernel_dim == 1);
        } else {
            CHECK(bad.injective);
        }
    }
}

TEST_CASE("eventual kernels realize the torsion special case") {
    auto ctx = std::make_shared<CechContext>(2, std::vector<MultiPoly>{P("X1"), P("X2")},
                                             default_policy());
    for (long n = -5; n <= -2; ++n) {
        long full = ctx->component(2, n).dim;
        // the whole of H^2 is torsion for each variable
        CHECK(ctx->eventual_kernel_dim(P("X1"), 2, n) == full);
        CHECK(ctx->outer_h0_dim({P("X1")}, 2, n) == full);
        CHECK(ctx->outer_h0_dim({P("X1"), P("X2")}, 2, n) == full);
    }
    // the ring itself is torsion free
    auto ring = std::make_shared<CechContext>(2, std::vector<MultiPoly>{}, default_policy());
    CHECK(ring->outer_h0_dim({P("X1")}, 0, 3) == 0);
    CHECK(ring->eventual_kernel_dim(P("X1"), 0, 3) == 0);
}

TEST_CASE("koszul strands over the engine: dual fundamental strand is onto") {
    auto ctx = std::make_shared<CechContext>(sign_group(),
                                             std::vector<MultiPoly>{P("X1^2"), P("X1*X2"), P("X2^2")},
                                             default_policy());
    CohomologyModule h2(ctx, 2);
    // dims: slices of H^2_{S_+}(S)
    CHECK(h2.slice_dim(-6) == 5);
    CHECK(h2.slice_dim(-4) == 3);
    CHECK(h2.slice_dim(-5) == 0);
    // dual quadrics (contragredient of the sign group is itself): generic pair
    std::vector<RingElem> g{RingElem::dual_of(P("D1^2 + D2^2")), RingElem::dual_of(P("D1^2 - 2*D1*D2"))};
    CHECK(strand_surjectivity(g, h2, -6));
    // and the ring-side fundamental strand: (M_{-4})^2 via quadrics into M_{-2}
    std::vector<RingElem> f{RingElem::mul(P("X1^2 + X2^2")), RingElem::mul(P("X1^2 - X1*X2"))};
    CHECK(strand_surjectivity(f, h2, -2));
}

TEST_CASE("derivation action: x d/dx on the socle has known spectrum") {
    auto ctx = std::make_shared<CechContext>(2, std::vector<MultiPoly>{P("X1"), P("X2")},
                                             default_policy());
    for (long n : {-3L, -4L, -5L}) {
        // d/dx : M_n -> M_{n-1} then x : M_{n-1} -> M_n; on the fraction basis
        // x^{-a} y^{-b} the composite is diagonal with eigenvalues -a
        ExactMatrix der = ctx->dual_action(P("D1"), 2, n);
        ExactMatrix mul = ctx->multiplication_action(P("X1"), 2, n - 1);
        ExactMatrix comp = mul * der;
        long k = -n - 1; // dim M_n
        REQUIRE(comp.rows() == k);
        REQUIRE(comp.cols() == k);
        FieldElement trace = FieldElement::zero();
        for (int j = 0; j < comp.rows(); ++j) trace += comp.at(j, j);
        long expected_trace = 0;
        Rational expected_det(1);
        for (long a = 1; a <= k; ++a) {
            expected_trace -= a;
            expected_det *= Rational(-a);
        }
        CHECK(trace == FieldElement(Rational(expected_trace)));
        CHECK(determinant(comp) == FieldElement(expected_det));
    }
}

TEST_CASE("coset profiles on the Veronese") {
    auto ctx = std::make_shared<CechContext>(sign_group(),
                                             std::vector<MultiPoly>{P("X1^2"), P("X1*X2"), P("X2^2")},
                                             default_policy());
    CosetProfile even = coset_profile(*ctx, 2, 2, 0, -5, 5);
    CHECK(!even.any_undetermined);
    CHECK(even.dichotomy_ok);
    REQUIRE(even.beta.has_value());
    CHECK(even.beta->fitted);
    CHECK(even.beta->degree == 1); // 2|t| - 1 on the negative tail
    CHECK(tail_fit_eval(*even.beta, -4) == Rational(7));
    REQUIRE(even.alpha.has_value());
    CHECK(even.alpha->degree == -1); // identically zero on the positive tail
    CHECK(!even.degree_alarm);

    CosetProfile odd = coset_profile(*ctx, 2, 2, 1, -5, 5);
    CHECK(odd.dichotomy_ok);
    for (const auto& e : odd.entries) {
        REQUIRE(e.value.has_value());
        CHECK(e.value->dim == 0);
    }
    CHECK(odd.alpha->degree == -1);
    CHECK(odd.beta->degree == -1);
}

TEST_CASE("coset dichotomy for the invariant principal ideal") {
    auto ctx = std::make_shared<CechContext>(sign_group(), std::vector<MultiPoly>{P("X1^2")},
                                             default_policy());
    CosetProfile even = coset_profile(*ctx, 1, 2, 0, -3, 3);
    CHECK(even.dichotomy_ok);
    for (const auto& e : even.entries) {
        REQUIRE(e.value.has_value());
        CHECK(!e.value->finite());
    }
    CosetProfile odd = coset_profile(*ctx, 1, 2, 1, -3, 3);
    CHECK(odd.dichotomy_ok);
    for (const auto& e : odd.entries) {
        REQUIRE(e.value.has_value());
        CHECK(e.value->finite());
        CHECK(e.value->dim == 0);
    }
}

TEST_CASE("swap group socle counts via the dense path") {
    // S = K[e1, e2] with deg e1 = 1, deg e2 = 2; the top local cohomology has
    // basis e1^{-i} e2^{-j} with i, j >= 1, so the degree-n count is
    // #{(i, j) : i + 2j = -n} = floor((-n-1)/2). Equivalently: the swap acts
    // on socle classes with the Cech orientation sign, so invariants are the
    // antisymmetric pairs.
    InvariantAlgebra alg = noether_generators(swap_group());
    CechContext ctx(swap_group(), alg.generators, default_policy());
    CHECK(!ctx.block_mode());
    for (long n = -7; n <= 0; ++n) {
        const ComponentDim& c = ctx.component(2, n);
        REQUIRE(c.finite());
        long expected = n <= -2 ? (-n - 1) / 2 : 0;
        CHECK(c.dim == expected);
    }
}

TEST_CASE("C3 diagonal group socle counts via the cyclotomic block filter") {
    // invariance of x^{-a} y^{-b} forces b congruent to n mod 3
    ExactMatrix d(2, 2);
    d.at(0, 0) = FieldElement::zeta_power(3, 1);
    d.at(1, 1) = FieldElement::zeta_power(3, 2);
    MatrixGroup g = close_group({d});
    InvariantAlgebra alg = noether_generators(g);
    CechContext ctx(g, alg.generators, default_policy());
    CHECK(ctx.block_mode());
    for (long n = -8; n <= 0; ++n) {
        const ComponentDim& c = ctx.component(2, n);
        REQUIRE(c.finite());
        long expected = 0;
        long residue = ((n % 3) + 3) % 3;
        for (long b = 1; b <= -n - 1; ++b)
            if (b % 3 == residue) ++expected;
        CHECK(c.dim == expected);
    }
}

TEST_CASE("one variable sign group: S = K[x^2]") {
    ExactMatrix m(1, 1);
    m.at(0, 0) = FieldElement(Rational(-1));
    MatrixGroup g = close_group({m});
    CechContext ctx(g, {parse_poly("X1^2", 1, 1)}, default_policy());
    for (long n = -8; n <= 2; ++n) {
        const ComponentDim& c = ctx.component(1, n);
        REQUIRE(c.finite());
        long expected = (n < 0 && n % 2 == 0) ? 1 : 0;
        CHECK(c.dim == expected);
    }
}
