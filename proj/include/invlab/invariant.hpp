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

#ifndef INVLAB_INVARIANT_HPP
#define INVLAB_INVARIANT_HPP

#include <cstdint>
#include <vector>

#include "invlab/groebner.hpp"
#include "invlab/group.hpp"

namespace invlab {

/// The invariant ring presented by a minimal homogeneous generating set in
/// degrees <= |G| (Noether degree bound, characteristic zero), with a
/// slice-dimension certificate.
struct InvariantAlgebra {
    MatrixGroup group;
    std::vector<MultiPoly> generators;
    int slice_bound = 0;                    // certificate covers degrees 0..slice_bound
    std::vector<long> subalgebra_slice_dims; // dims of the generated subalgebra per degree
    std::vector<long> reynolds_slice_dims;   // invariant_slice_dim per degree
    bool certificate_ok = false;            // the two dimension rows agree
};

/// Reynolds images of all monomials of degree <= |G|, pruned degreewise to a
/// minimal generating set by linear span over products of lower-degree
/// generators; certificate attached up to degree 2|G|.
InvariantAlgebra noether_generators(const MatrixGroup& group);

/// Dimension of the degree-n slice of the subalgebra generated by `gens`
/// (span of all products of total degree n).
long subalgebra_slice_dim(const std::vector<MultiPoly>& gens, long n);

/// The tuple (f_1..f_m ; g_1..g_m ; c = |G|!) of fundamental and dual
/// fundamental invariants. The dual tuple lives in the D-variables and
/// carries internal degree -c everywhere it enters graded bookkeeping.
struct FundamentalInvariants {
    long c = 1;
    std::vector<MultiPoly> f;
    std::vector<MultiPoly> dual;
    std::uint64_t seed = 0;
    int retries_used = 0;
    int dual_retries_used = 0;
};

/// Raises each Noether generator u to the power c/deg u, draws m seeded
/// small-integer linear combinations, verifies zero-dimensionality of
/// K[X]/(f) by Groebner basis, retrying with fresh coefficients up to
/// `retry_cap`; the dual tuple comes from the same procedure for the
/// contragredient group. Deterministic given (group, seed).
FundamentalInvariants fundamental_invariants(const MatrixGroup& group, std::uint64_t seed,
                                             const GroebnerBudget& budget = {},
                                             int retry_cap = 5,
                                             MonomialOrder order = MonomialOrder::GrevLex);

/// True iff Koszul H_1(f; R)_j = 0 for all j <= degree_bound AND the
/// quotient is zero-dimensional. For homogeneous f over the polynomial ring
/// the two certificates agree (h.s.o.p. <=> regular sequence).
bool verify_regular_sequence(const std::vector<MultiPoly>& f, long degree_bound,
                             const GroebnerBudget& budget = {},
                             MonomialOrder order = MonomialOrder::GrevLex);

/// Degree profile of R/(f) with the two vanishing bounds compared.
struct QuotientProfile {
    std::vector<long> dims;   // index j
    long top_degree = -1;     // largest j with nonzero dim (-1 when empty)
    long total = 0;           // sum of dims; equals c^m for an h.s.o.p. of degree c
    long hilbert_bound = 0;   // m(c-1), top degree of ((1-z^c)/(1-z))^m
    long power_bound = 0;     // (c-1)^m
    bool bounds_differ = false;
};

QuotientProfile quotient_profile(const std::vector<MultiPoly>& f, long c,
                                 const GroebnerBudget& budget = {},
                                 MonomialOrder order = MonomialOrder::GrevLex);

/// Coefficients of ((1 - z^c)/(1 - z))^m, the Hilbert series of a complete
/// intersection of m forms of degree c. Used as the independent reference.
std::vector<long> complete_intersection_series(int m, long c);

/// |G|! with overflow guard (ResourceLimitError beyond desk scale).
long factorial_checked(int n);

} // namespace invlab

#endif
