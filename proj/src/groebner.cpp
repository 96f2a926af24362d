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

#include "invlab/groebner.hpp"

#include <algorithm>
#include <set>

namespace invlab {

namespace {

bool coprime(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

MultiPoly make_monic(const MultiPoly& p, MonomialOrder order) {
    auto [le, lc] = p.leading_term(order);
    return p.scalar_mul(lc.inverse());
}

// Full reduction against a list of monic polynomials.
MultiPoly reduce_full(MultiPoly p, const std::vector<MultiPoly>& basis, MonomialOrder order) {
    MultiPoly remainder(p.num_vars());
    while (!p.is_zero()) {
        auto [le, lc] = p.leading_term(order);
        bool reduced = false;
        for (const auto& g : basis) {
            auto [ge, gc] = g.leading_term(order);
            if (divides(ge, le)) {
                Exponents q = exponent_diff(le, ge);
                // p -= lc * X^q * g   (g monic)
                MultiPoly sub = g * MultiPoly::monomial(q, lc);
                p = p - sub;
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            remainder.add_term(le, lc);
            p.add_term(le, -lc);
        }
    }
    return remainder;
}

struct Pair {
    long lcm_deg;
    Exponents lcm;
    int i, j;
    bool operator<(const Pair& o) const {
        if (lcm_deg != o.lcm_deg) return lcm_deg < o.lcm_deg;
        if (lcm != o.lcm) return lcm < o.lcm;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

} // namespace

GroebnerBasis groebner_basis(const std::vector<MultiPoly>& gens, MonomialOrder order,
                             const GroebnerBudget& budget) {
    if (gens.empty()) throw InputError("groebner_basis: empty generator list");
    int m = gens[0].num_vars();
    std::vector<MultiPoly> basis;
    for (const auto& g : gens) {
        if (g.is_zero()) throw InputError("groebner_basis: zero generator");
        if (g.num_vars() != m) throw InputError("groebner_basis: variable-count mismatch");
        basis.push_back(make_monic(g, order));
    }

    std::set<Pair> pairs;
    auto push_pairs = [&](int jnew) {
        auto [lj, cj] = basis[jnew].leading_term(order);
        for (int i = 0; i < jnew; ++i) {
            auto [li, ci] = basis[i].leading_term(order);
            if (coprime(li, lj)) continue; // Buchberger's first criterion
            Exponents l = exponent_lcm(li, lj);
            pairs.insert(Pair{total_degree(l), l, i, jnew});
        }
    };
    for (int j = 1; j < static_cast<int>(basis.size()); ++j) push_pairs(j);

    long processed = 0;
    while (!pairs.empty()) {
        if (++processed > budget.max_pairs)
            throw ResourceLimitError("groebner pair budget exceeded (" +
                                     std::to_string(budget.max_pairs) + " pairs)");
        Pair p = *pairs.begin();
        pairs.erase(pairs.begin());
        const MultiPoly& f = basis[p.i];
        const MultiPoly& g = basis[p.j];
        auto [lf, cf] = f.leading_term(order);
        auto [lg, cg] = g.leading_term(order);
        MultiPoly spoly = f * MultiPoly::monomial(exponent_diff(p.lcm, lf), FieldElement::one()) -
                          g * MultiPoly::monomial(exponent_diff(p.lcm, lg), FieldElement::one());
        MultiPoly r = reduce_full(std::move(spoly), basis, order);
        if (!r.is_zero()) {
            basis.push_back(make_monic(r, order));
            if (static_cast<long>(basis.size()) > budget.max_basis)
                throw ResourceLimitError("groebner basis-size budget exceeded");
            push_pairs(static_cast<int>(basis.size()) - 1);
        }
    }

    // self-reduce: drop elements whose lead divides by another lead, then
    // tail-reduce each against the rest
    std::vector<MultiPoly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        auto [li, ci] = basis[i].leading_term(order);
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            auto [lj, cj] = basis[j].leading_term(order);
            if (divides(lj, li) && (lj != li || j < i)) { redundant = true; break; }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    std::vector<MultiPoly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MultiPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        MultiPoly r = others.empty() ? minimal[i] : reduce_full(minimal[i], others, order);
        reduced.push_back(make_monic(r, order));
    }
    std::sort(reduced.begin(), reduced.end(), [order](const MultiPoly& a, const MultiPoly& b) {
        return monomial_compare(order, a.leading_term(order).first, b.leading_term(order).first) < 0;
    });

    GroebnerBasis out;
    out.gens = std::move(reduced);
    out.order = order;
    out.num_vars = m;
    return out;
}

MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& basis) {
    if (p.is_zero()) return p;
    return reduce_full(p, basis.gens, basis.order);
}

bool zero_dimensional(const GroebnerBasis& basis) {
    std::vector<bool> covered(basis.num_vars, false);
    for (const auto& g : basis.gens) {
        auto [le, lc] = g.leading_term(basis.order);
        int support = -1;
        bool pure = true;
        for (int j = 0; j < basis.num_vars; ++j) {
            if (le[j] > 0) {
                if (support >= 0) { pure = false; break; }
                support = j;
            }
        }
        if (pure && support >= 0) covered[support] = true;
        if (pure && support < 0) return true; // unit ideal
    }
    for (bool c : covered)
        if (!c) return false;
    return true;
}

long quotient_slice_dim(const GroebnerBasis& basis, long j) {
    if (j < 0) return 0;
    std::vector<Exponents> leads;
    for (const auto& g : basis.gens) leads.push_back(g.leading_term(basis.order).first);
    long count = 0;
    for (const auto& mono : monomials_of_degree(basis.num_vars, j)) {
        bool standard = true;
        for (const auto& l : leads) {
            if (divides(l, mono)) { standard = false; break; }
        }
        if (standard) ++count;
    }
    return count;
}

long quotient_slice_dim(const std::vector<MultiPoly>& gens, int num_vars, long j,
                        MonomialOrder order, const GroebnerBudget& budget) {
    if (gens.empty()) return monomial_count(num_vars, j);
    return quotient_slice_dim(groebner_basis(gens, order, budget), j);
}

std::vector<long> quotient_dims_profile(const GroebnerBasis& basis) {
    if (!zero_dimensional(basis))
        throw InputError("quotient profile requires a zero-dimensional ideal");
    // standard monomials are bounded by the pure powers x_i^{a_i} among the
    // leads: degree <= sum (a_i - 1)
    std::vector<long> pure(basis.num_vars, 0);
    for (const auto& g : basis.gens) {
        auto [le, lc] = g.leading_term(basis.order);
        int support = -1;
        bool is_pure = true;
        for (int j = 0; j < basis.num_vars; ++j) {
            if (le[j] > 0) {
                if (support >= 0) { is_pure = false; break; }
                support = j;
            }
        }
        if (is_pure && support >= 0) {
            if (pure[support] == 0 || le[support] < pure[support]) pure[support] = le[support];
        }
    }
    long bound = 0;
    for (long a : pure) bound += a > 0 ? a - 1 : 0;
    std::vector<long> dims;
    for (long j = 0; j <= bound; ++j) {
        long d = quotient_slice_dim(basis, j);
        if (d == 0) break;
        dims.push_back(d);
    }
    return dims;
}

} // namespace invlab
