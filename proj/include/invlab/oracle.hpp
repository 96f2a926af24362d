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

#ifndef INVLAB_ORACLE_HPP
#define INVLAB_ORACLE_HPP

#include <optional>
#include <set>
#include <vector>

#include "invlab/cech.hpp"
#include "invlab/invariant.hpp"

namespace invlab {

/// Abstract simplicial complex on vertices 0..vertex_count-1, faces stored as
/// bitmasks and closed under subsets (verified on construction).
///
/// Conventions, fixed here and relied on by the oracle:
///  - the VOID complex (no faces at all, not even the empty face) has
///    H~^q = 0 for every q;
///  - the IRRELEVANT complex { empty face } has H~^{-1} = K and nothing else;
///  - otherwise H~^q is the reduced simplicial cohomology over the field.
class SimplicialComplex {
public:
    SimplicialComplex(int vertex_count, std::vector<int> face_masks);
    static SimplicialComplex void_complex(int vertex_count);

    int vertex_count() const { return vertices_; }
    bool is_void() const { return faces_.empty(); }
    bool has_face(int mask) const { return faces_.count(mask) > 0; }
    const std::set<int>& faces() const { return faces_; }

    /// dim_K H~^q(complex; K) for q >= -1.
    long reduced_cohomology_dim(int q) const;

private:
    int vertices_;
    std::set<int> faces_;
};

/// Result of a brute-force component computation: finite dimension or
/// divergence (decided exactly, not sampled).
struct OracleComponent {
    bool divergent = false;
    long dim = 0;
};

/// Hochster-type multigraded oracle for H^i_J(R)_n, J a squarefree monomial
/// ideal over the trivial group. Divergence is decided by the finite
/// sign-pattern case analysis over negative supports.
OracleComponent monomial_component(const std::vector<MultiPoly>& squarefree_gens, int m,
                                   int i, long n);

/// Direct-limit oracle for H^m at a verified h.s.o.p. of degree c: dimension
/// of colim_t (S/(f_1^t..f_m^t)) at the internal degree matching n, with
/// multiplication by f_1...f_m as transition. Stabilizes for every n.
struct HsopLimitResult {
    bool determined = false;
    long dim = 0;
    std::vector<std::pair<int, long>> stage_dims; // (t, dim) audit trail
};

HsopLimitResult hsop_limit_component(const MatrixGroup& group, const std::vector<MultiPoly>& f,
                                     long c, long n, int t_max, int confirmation_window = 3);

} // namespace invlab

#endif
