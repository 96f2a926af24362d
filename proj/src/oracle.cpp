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

#include "invlab/oracle.hpp"

#include <algorithm>

namespace invlab {

SimplicialComplex::SimplicialComplex(int vertex_count, std::vector<int> face_masks)
    : vertices_(vertex_count) {
    for (int f : face_masks) faces_.insert(f);
    for (int f : face_masks) {
        // verify closure under subsets
        for (int sub = f; ; sub = (sub - 1) & f) {
            if (!faces_.count(sub))
                throw InputError("face set is not closed under subsets");
            if (sub == 0) break;
        }
    }
}

SimplicialComplex SimplicialComplex::void_complex(int vertex_count) {
    return SimplicialComplex(vertex_count, {});
}

long SimplicialComplex::reduced_cohomology_dim(int q) const {
    if (q < -1) return 0;
    if (faces_.empty()) return 0; // void complex
    // augmented cochain complex: C~^q has one generator per face of size q+1
    auto faces_of_size = [this](int sz) {
        std::vector<int> out;
        for (int f : faces_)
            if (__builtin_popcount(static_cast<unsigned>(f)) == sz) out.push_back(f);
        return out;
    };
    auto coboundary = [this](const std::vector<int>& src, const std::vector<int>& dst) {
        ExactMatrix d(static_cast<int>(dst.size()), static_cast<int>(src.size()));
        for (std::size_t j = 0; j < src.size(); ++j) {
            for (int v = 0; v < vertices_; ++v) {
                if (src[j] & (1 << v)) continue;
                int up = src[j] | (1 << v);
                auto it = std::lower_bound(dst.begin(), dst.end(), up);
                if (it == dst.end() || *it != up) continue;
                int below = __builtin_popcount(static_cast<unsigned>(src[j] & ((1 << v) - 1)));
                FieldElement s = below % 2 == 0 ? FieldElement::one() : -FieldElement::one();
                d.at(static_cast<int>(it - dst.begin()), static_cast<int>(j)) += s;
            }
        }
        return d;
    };
    std::vector<int> here = faces_of_size(q + 1);
    if (here.empty()) return 0;
    std::vector<int> above = faces_of_size(q + 2);
    std::vector<int> below_f = faces_of_size(q);
    long dim_here = static_cast<long>(here.size());
    long rank_up = above.empty() ? 0 : rank(coboundary(here, above));
    long rank_dn = (q == -1 || below_f.empty()) ? 0 : rank(coboundary(below_f, here));
    return dim_here - rank_up - rank_dn;
}

namespace {

long binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace

OracleComponent monomial_component(const std::vector<MultiPoly>& squarefree_gens, int m,
                                   int i, long n) {
    int r = static_cast<int>(squarefree_gens.size());
    std::vector<int> supports;
    for (std::size_t k = 0; k < squarefree_gens.size(); ++k) {
        const MultiPoly& g = squarefree_gens[k];
        if (g.term_count() != 1)
            throw InputError("oracle generator " + std::to_string(k + 1) + " is not a monomial");
        const Exponents& e = g.terms().begin()->first;
        int mask = 0;
        for (int v = 0; v < m; ++v) {
            if (e[v] > 1)
                throw InputError("oracle generator " + std::to_string(k + 1) + " is not squarefree");
            if (e[v] == 1) mask |= (1 << v);
        }
        supports.push_back(mask);
    }
    OracleComponent out;
    if (r == 0) {
        // the zero ideal: H^0 = R, higher cohomology vanishes
        if (i == 0) out.dim = n < 0 ? 0 : monomial_count(m, n);
        return out;
    }
    if (i == 0) return out; // torsion of a domain at a nonzero ideal is zero

    // for each negative-support pattern F, the multidegree contribution is
    // H~^{i-2} of K_F = { T subset of generators : F not subset of vars(h_T) }
    for (int F = 0; F < (1 << m); ++F) {
        std::vector<int> faces;
        for (int T = 0; T < (1 << r); ++T) {
            int vars = 0;
            for (int k = 0; k < r; ++k)
                if (T & (1 << k)) vars |= supports[k];
            // T is a face of K_F iff F is NOT covered by the variables of h_T;
            // for F = 0 nothing qualifies and K_F is void
            if (F != 0 && (F & ~vars) != 0) faces.push_back(T);
        }
        SimplicialComplex kf = faces.empty() ? SimplicialComplex::void_complex(r)
                                             : SimplicialComplex(r, faces);
        long h = kf.reduced_cohomology_dim(i - 2);
        if (h == 0) continue;
        int fsz = __builtin_popcount(static_cast<unsigned>(F));
        if (F != 0 && fsz < m) {
            // mixed sign pattern: infinitely many multidegrees reach total degree n
            out.divergent = true;
            out.dim = 0;
            return out;
        }
        if (F == 0) {
            continue; // K_F void, h == 0; unreachable but kept for clarity
        }
        // F = all variables: multidegrees a <= -1 with sum n: C(-n-1, m-1) of them
        long count = binomial(-n - 1, m - 1);
        out.dim += h * count;
    }
    return out;
}

HsopLimitResult hsop_limit_component(const MatrixGroup& group, const std::vector<MultiPoly>& f,
                                     long c, long n, int t_max, int confirmation_window) {
    int m = group.dim;
    if (static_cast<int>(f.size()) != m)
        throw InputError("h.s.o.p. oracle needs exactly m forms");
    HsopLimitResult res;
    InvariantRingModule s_mod(group);
    long prev = -1;
    int stable = 0;
    for (int t = 1; t <= t_max; ++t) {
        long degree = n + static_cast<long>(t) * m * c;
        long dim;
        if (degree < 0) {
            dim = 0;
        } else {
            const auto& basis = s_mod.basis(degree);
            if (basis.empty()) {
                dim = 0;
            } else {
                // dim S_degree minus dim of sum_i f_i^t * S_{degree - t*c}
                VectorSpan span(static_cast<int>(monomial_count(m, degree)));
                for (const auto& fi : f) {
                    MultiPoly power = fi.pow(t);
                    long lower = degree - t * c;
                    if (lower < 0) continue;
                    for (const auto& s : s_mod.basis(lower)) span.insert(poly_to_monomial_coords(power * s, degree));
                }
                dim = static_cast<long>(basis.size()) - span.rank();
            }
        }
        res.stage_dims.emplace_back(t, dim);
        if (dim == prev) {
            if (++stable >= confirmation_window) {
                res.determined = true;
                res.dim = dim;
                return res;
            }
        } else {
            stable = 0;
        }
        prev = dim;
    }
    return res;
}

} // namespace invlab
