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

#ifndef INVLAB_KOSZUL_HPP
#define INVLAB_KOSZUL_HPP

#include <vector>

#include "invlab/module.hpp"

namespace invlab {

/// One internal degree of the Koszul complex K(f; M): the finite spaces
/// C_p = (+)_{|T|=p} M_{j - deg f_T} for the requested homological window,
/// with boundary matrices d_p : C_p -> C_{p-1}. Assembled lazily per degree;
/// no global complex is ever materialized.
struct KoszulStrand {
    long internal_degree = 0;
    int p_lo = 0, p_hi = 0;             // inclusive homological window
    std::vector<long> dims;             // dims[p - p_lo] = dim C_p
    std::vector<ExactMatrix> boundaries; // boundaries[k] : C_{p_lo+k+1} -> C_{p_lo+k}
};

/// Assemble the degree-j strand over levels [p_lo, p_hi]. Throws
/// DivergentSliceError when any required slice of M is divergent.
KoszulStrand koszul_strand(const std::vector<RingElem>& tuple, GradedSliceModule& mod,
                           int p_lo, int p_hi, long j);

/// dim_K H_i(f; M)_j by exact rank computations on the degree-j strand.
/// i must lie in [0, #tuple].
long koszul_homology_slice(const std::vector<RingElem>& tuple, GradedSliceModule& mod,
                           int i, long j);

/// True iff the degree-0 strand map (+)_k M_{j - deg f_k} -> M_j is
/// surjective, i.e. H_0(f; M)_j = 0.
bool strand_surjectivity(const std::vector<RingElem>& tuple, GradedSliceModule& mod, long j);

} // namespace invlab

#endif
