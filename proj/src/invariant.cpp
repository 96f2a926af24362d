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

#include "invlab/invariant.hpp"

#include <functional>

#include "invlab/koszul.hpp"
#include "invlab/prng.hpp"

namespace invlab {

long factorial_checked(int n) {
    long f = 1;
    for (int k = 2; k <= n; ++k) {
        if (f > 1000000000L / k)
            throw ResourceLimitError("|G|! overflows the desk-scale degree budget (|G| = " +
                                     std::to_string(n) + ")");
        f *= k;
    }
    return f;
}

long subalgebra_slice_dim(const std::vector<MultiPoly>& gens, long n) {
    if (n == 0) return 1;
    if (gens.empty()) return 0;
    int m = gens[0].num_vars();
    long dim = monomial_count(m, n);
    VectorSpan span(static_cast<int>(dim));
    long count = 0;
    // enumerate products of generators with total degree n
    std::vector<long> degs;
    degs.reserve(gens.size());
    for (const auto& g : gens) degs.push_back(g.degree());
    MultiPoly one = MultiPoly::constant(m, FieldElement::one());
    std::function<void(std::size_t, long, const MultiPoly&)> walk =
        [&](std::size_t idx, long remaining, const MultiPoly& acc) {
            if (remaining == 0) {
                Vector v = poly_to_monomial_coords(acc, n);
                if (span.insert(std::move(v))) ++count;
                return;
            }
            if (idx >= gens.size()) return;
            // exponent of gens[idx] from high to low keeps enumeration stable
            long maxe = remaining / degs[idx];
            MultiPoly power = acc;
            for (long e = 0; e <= maxe; ++e) {
                if (e > 0) power = power * gens[idx];
                walk(idx + 1, remaining - e * degs[idx], power);
            }
        };
    walk(0, n, one);
    return count;
}

InvariantAlgebra noether_generators(const MatrixGroup& group) {
    int m = group.dim;
    int g = group.order();
    InvariantAlgebra alg;
    alg.group = group;

    for (long d = 1; d <= g; ++d) {
        long dim = monomial_count(m, d);
        VectorSpan span(static_cast<int>(dim));
        // span of products of the generators found so far, in degree d
        std::vector<MultiPoly> chosen = alg.generators;
        std::function<void(std::size_t, long, const MultiPoly&)> seed =
            [&](std::size_t idx, long remaining, const MultiPoly& acc) {
                if (remaining == 0) {
                    span.insert(poly_to_monomial_coords(acc, d));
                    return;
                }
                if (idx >= chosen.size()) return;
                long gd = chosen[idx].degree();
                MultiPoly power = acc;
                for (long e = 0; e * gd <= remaining; ++e) {
                    if (e > 0) power = power * chosen[idx];
                    seed(idx + 1, remaining - e * gd, power);
                }
            };
        seed(0, d, MultiPoly::constant(m, FieldElement::one()));

        for (const auto& mono : monomials_of_degree(m, d)) {
            MultiPoly r = reynolds(MultiPoly::monomial(mono, FieldElement::one()), group);
            if (r.is_zero()) continue;
            if (span.insert(poly_to_monomial_coords(r, d)))
                alg.generators.push_back(r.normalized_primitive());
        }
    }

    alg.slice_bound = 2 * g;
    alg.certificate_ok = true;
    for (long n = 0; n <= alg.slice_bound; ++n) {
        long sub = subalgebra_slice_dim(alg.generators, n);
        long inv = invariant_slice_dim(group, n);
        alg.subalgebra_slice_dims.push_back(sub);
        alg.reynolds_slice_dims.push_back(inv);
        if (sub != inv) alg.certificate_ok = false;
    }
    if (!alg.certificate_ok)
        throw Error("Noether generator certificate failed; pruning is wrong");
    return alg;
}

namespace {

std::vector<MultiPoly> draw_hsop(const std::vector<MultiPoly>& gens, long c, int m,
                                 Prng& rng, const GroebnerBudget& budget, int retry_cap,
                                 int* retries_used, std::uint64_t seed, MonomialOrder order) {
    // powers u_i^{c / deg u_i}, all of degree c
    std::vector<MultiPoly> powers;
    for (const auto& u : gens) {
        long d = u.degree();
        if (c % d != 0) throw Error("generator degree does not divide |G|!");
        powers.push_back(u.pow(c / d));
    }
    for (int attempt = 0; attempt <= retry_cap; ++attempt) {
        std::vector<MultiPoly> f;
        for (int k = 0; k < m; ++k) {
            MultiPoly combo(m);
            for (const auto& p : powers) {
                long a = rng.uniform(-9, 9);
                if (a != 0) combo = combo + p.scalar_mul(FieldElement(Rational(a)));
            }
            if (!combo.is_zero()) f.push_back(combo.normalized_primitive());
        }
        if (static_cast<int>(f.size()) != m) continue;
        try {
            GroebnerBasis gb = groebner_basis(f, order, budget);
            if (zero_dimensional(gb)) {
                *retries_used = attempt;
                return f;
            }
        } catch (const ResourceLimitError&) {
            throw; // budgets are hard errors, not retry fodder
        }
    }
    throw ResourceLimitError("fundamental invariant search exhausted " +
                             std::to_string(retry_cap) + " retries at seed " +
                             std::to_string(seed) + "; rerun with another seed");
}

} // namespace

FundamentalInvariants fundamental_invariants(const MatrixGroup& group, std::uint64_t seed,
                                             const GroebnerBudget& budget, int retry_cap,
                                             MonomialOrder order) {
    int m = group.dim;
    FundamentalInvariants out;
    out.seed = seed;
    out.c = factorial_checked(group.order());

    InvariantAlgebra alg = noether_generators(group);
    Prng rng(seed);
    out.f = draw_hsop(alg.generators, out.c, m, rng, budget, retry_cap, &out.retries_used, seed,
                      order);

    MatrixGroup dual_group = contragredient_group(group);
    InvariantAlgebra dual_alg = noether_generators(dual_group);
    out.dual = draw_hsop(dual_alg.generators, out.c, m, rng, budget, retry_cap,
                         &out.dual_retries_used, seed, order);
    return out;
}

bool verify_regular_sequence(const std::vector<MultiPoly>& f, long degree_bound,
                             const GroebnerBudget& budget, MonomialOrder order) {
    if (f.empty()) throw InputError("empty sequence");
    int m = f[0].num_vars();
    for (const auto& p : f) {
        if (p.is_zero() || !p.is_homogeneous())
            throw InputError("verify_regular_sequence requires nonzero homogeneous input");
    }
    GroebnerBasis gb = groebner_basis(f, order, budget);
    if (!zero_dimensional(gb)) return false;

    std::vector<RingElem> tuple;
    for (const auto& p : f) tuple.push_back(RingElem::mul(p));
    FreeRingModule free_mod(m);
    for (long j = 0; j <= degree_bound; ++j) {
        if (koszul_homology_slice(tuple, free_mod, 1, j) != 0) return false;
    }
    return true;
}

QuotientProfile quotient_profile(const std::vector<MultiPoly>& f, long c,
                                 const GroebnerBudget& budget, MonomialOrder order) {
    if (f.empty()) throw InputError("empty sequence");
    int m = f[0].num_vars();
    GroebnerBasis gb = groebner_basis(f, order, budget);
    QuotientProfile prof;
    prof.dims = quotient_dims_profile(gb);
    prof.top_degree = static_cast<long>(prof.dims.size()) - 1;
    for (long d : prof.dims) prof.total += d;
    prof.hilbert_bound = static_cast<long>(m) * (c - 1);
    long pw = 1;
    for (int k = 0; k < m; ++k) {
        if (c > 1 && pw > 2000000000L / (c - 1)) { pw = -1; break; } // overflow sentinel
        pw *= (c - 1);
    }
    prof.power_bound = pw;
    prof.bounds_differ = prof.hilbert_bound != prof.power_bound;
    return prof;
}

std::vector<long> complete_intersection_series(int m, long c) {
    std::vector<long> acc{1};
    std::vector<long> factor(static_cast<std::size_t>(c), 1); // 1 + z + ... + z^{c-1}
    for (int k = 0; k < m; ++k) {
        std::vector<long> next(acc.size() + factor.size() - 1, 0);
        for (std::size_t i = 0; i < acc.size(); ++i)
            for (std::size_t j = 0; j < factor.size(); ++j) next[i + j] += acc[i] * factor[j];
        acc = std::move(next);
    }
    return acc;
}

} // namespace invlab
