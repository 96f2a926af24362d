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

#ifndef INVLAB_GROEBNER_HPP
#define INVLAB_GROEBNER_HPP

#include <vector>

#include "invlab/poly.hpp"

namespace invlab {

/// Work budget for the Buchberger loop. Exceeding it raises
/// ResourceLimitError, never a truncated answer.
struct GroebnerBudget {
    long max_pairs = 20000; // S-pairs processed
    long max_basis = 2000;  // basis elements during the run
};

struct GroebnerBasis {
    std::vector<MultiPoly> gens; // reduced, monic-normalized, sorted
    MonomialOrder order = MonomialOrder::GrevLex;
    int num_vars = 0;
};

/// Buchberger with the coprime-leading-term criterion, followed by
/// self-reduction. Generators must be nonzero.
GroebnerBasis groebner_basis(const std::vector<MultiPoly>& gens, MonomialOrder order,
                             const GroebnerBudget& budget = {});

/// Full reduction of p modulo the basis; normal_form(p).is_zero() decides
/// ideal membership.
MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& basis);

/// Zero-dimensionality test: every variable appears as a pure power among
/// the leading monomials.
bool zero_dimensional(const GroebnerBasis& basis);

/// Number of degree-j standard monomials of the leading-term ideal,
/// i.e. dim of (polynomial ring / ideal) in degree j for homogeneous input.
long quotient_slice_dim(const GroebnerBasis& basis, long j);

/// Same, from raw homogeneous generators; the empty list is the zero ideal
/// and gives the full polynomial-ring slice.
long quotient_slice_dim(const std::vector<MultiPoly>& gens, int num_vars, long j,
                        MonomialOrder order = MonomialOrder::GrevLex,
                        const GroebnerBudget& budget = {});

/// dim/degree profile of a zero-dimensional homogeneous quotient: entry j is
/// the degree-j dimension; stops at the first zero (the set of standard
/// monomials is closed under division).
std::vector<long> quotient_dims_profile(const GroebnerBasis& basis);

} // namespace invlab

#endif
