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

#include "invlab/koszul.hpp"

#include <algorithm>
#include <string>

namespace invlab {

namespace {

std::vector<int> subsets_of_size(int r, int p) {
    std::vector<int> out;
    for (int mask = 0; mask < (1 << r); ++mask) {
        if (__builtin_popcount(static_cast<unsigned>(mask)) == p) out.push_back(mask);
    }
    return out;
}

long subset_degree(const std::vector<RingElem>& tuple, int mask) {
    long d = 0;
    for (std::size_t k = 0; k < tuple.size(); ++k) {
        if (mask & (1 << k)) d += tuple[k].internal_degree();
    }
    return d;
}

// sign of removing element k from subset mask: (-1)^{#elements below k}
int removal_sign(int mask, int k) {
    int below = __builtin_popcount(static_cast<unsigned>(mask & ((1 << k) - 1)));
    return below % 2 == 0 ? 1 : -1;
}

} // namespace

KoszulStrand koszul_strand(const std::vector<RingElem>& tuple, GradedSliceModule& mod,
                           int p_lo, int p_hi, long j) {
    int r = static_cast<int>(tuple.size());
    for (const auto& e : tuple) {
        if (e.p.is_zero() || !e.p.is_homogeneous())
            throw InputError("Koszul tuple entries must be nonzero homogeneous");
        if (e.p.num_vars() != mod.num_vars()) throw InputError("Koszul tuple variable-count mismatch");
    }
    p_lo = std::max(p_lo, 0);
    p_hi = std::min(p_hi, r);
    if (p_lo > p_hi) throw InputError("empty Koszul window");

    KoszulStrand strand;
    strand.internal_degree = j;
    strand.p_lo = p_lo;
    strand.p_hi = p_hi;

    // per level: subsets and slice offsets into the concatenated space
    struct Level {
        std::vector<int> masks;
        std::vector<long> offset;
        long dim = 0;
    };
    std::vector<Level> levels;
    for (int p = p_lo; p <= p_hi; ++p) {
        Level lv;
        lv.masks = subsets_of_size(r, p);
        for (int mask : lv.masks) {
            lv.offset.push_back(lv.dim);
            long n = j - subset_degree(tuple, mask);
            if (!mod.slice_finite(n))
                throw DivergentSliceError("divergent slice at internal degree " + std::to_string(n) +
                                          " poisons the Koszul strand");
            lv.dim += mod.slice_dim(n);
        }
        strand.dims.push_back(lv.dim);
        levels.push_back(std::move(lv));
    }

    for (int p = p_lo + 1; p <= p_hi; ++p) {
        const Level& src = levels[p - p_lo];
        const Level& dst = levels[p - 1 - p_lo];
        ExactMatrix d(static_cast<int>(dst.dim), static_cast<int>(src.dim));
        for (std::size_t si = 0; si < src.masks.size(); ++si) {
            int mask = src.masks[si];
            long n_src = j - subset_degree(tuple, mask);
            for (int k = 0; k < r; ++k) {
                if (!(mask & (1 << k))) continue;
                int sub = mask & ~(1 << k);
                auto it = std::find(dst.masks.begin(), dst.masks.end(), sub);
                std::size_t di = static_cast<std::size_t>(it - dst.masks.begin());
                ExactMatrix act = mod.action_matrix(tuple[k], n_src);
                int sign = removal_sign(mask, k);
                for (int row = 0; row < act.rows(); ++row) {
                    for (int col = 0; col < act.cols(); ++col) {
                        if (act.at(row, col).is_zero()) continue;
                        FieldElement v = sign > 0 ? act.at(row, col) : -act.at(row, col);
                        d.at(static_cast<int>(dst.offset[di]) + row,
                             static_cast<int>(src.offset[si]) + col) += v;
                    }
                }
            }
        }
        strand.boundaries.push_back(std::move(d));
    }
    return strand;
}

long koszul_homology_slice(const std::vector<RingElem>& tuple, GradedSliceModule& mod,
                           int i, long j) {
    int r = static_cast<int>(tuple.size());
    if (i < 0 || i > r)
        throw InputError("Koszul homological index " + std::to_string(i) +
                         " out of range [0, " + std::to_string(r) + "]");
    KoszulStrand strand = koszul_strand(tuple, mod, i - 1, i + 1, j);
    int at = i - strand.p_lo;
    long dim_i = strand.dims[at];
    long rank_into = 0;  // d_i : C_i -> C_{i-1}
    long rank_from = 0;  // d_{i+1} : C_{i+1} -> C_i
    if (i > strand.p_lo) rank_into = rank(strand.boundaries[at - 1]);
    if (i < strand.p_hi) rank_from = rank(strand.boundaries[at]);
    return dim_i - rank_into - rank_from;
}

bool strand_surjectivity(const std::vector<RingElem>& tuple, GradedSliceModule& mod, long j) {
    return koszul_homology_slice(tuple, mod, 0, j) == 0;
}

} // namespace invlab
