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

#ifndef INVLAB_GROUP_HPP
#define INVLAB_GROUP_HPP

#include <vector>

#include "invlab/matrix.hpp"
#include "invlab/poly.hpp"

namespace invlab {

/// A finite subgroup of GL_m over the ground field, closed under products
/// and inverses, with its Cayley table. Immutable after closure.
struct MatrixGroup {
    std::vector<ExactMatrix> elements;
    int identity_index = 0;
    std::vector<std::vector<int>> cayley; // cayley[a][b] = index of elements[a]*elements[b]
    int dim = 0;                          // m

    int order() const { return static_cast<int>(elements.size()); }
    int inverse_index(int a) const;
    bool is_trivial() const { return order() == 1; }
    /// Every element diagonal; enables multidegree block decompositions.
    bool is_diagonal() const;
};

/// Trivial group in GL_m.
MatrixGroup trivial_group(int m);

/// Close a generator set under products. Errors: non-square or non-invertible
/// generator (named by position); size exceeding `cap`.
MatrixGroup close_group(const std::vector<ExactMatrix>& generators, int cap = 720);

/// sigma . X_j = sum_i sigma(i,j) X_i, extended to polynomials by
/// substitution (column convention, fixed project-wide).
MultiPoly act_on_poly(const ExactMatrix& sigma, const MultiPoly& p);

/// Averaging projector (1/|G|) sum_sigma sigma(p) onto the invariant ring.
MultiPoly reynolds(const MultiPoly& p, const MatrixGroup& group);

/// Matrix of sigma acting on the degree-n monomial basis (columns indexed by
/// the canonical grevlex-descending enumeration).
ExactMatrix action_on_slice(const ExactMatrix& sigma, int m, long n);

/// dim_K (R_n)^G = rank of the Reynolds projector on the degree-n slice.
long invariant_slice_dim(const MatrixGroup& group, long n);

/// Basis of (R_n)^G as polynomials (deterministic: Reynolds images of
/// monomials in canonical order, pruned to a basis, primitive-normalized).
std::vector<MultiPoly> invariant_slice_basis(const MatrixGroup& group, long n);

/// Coefficients 0..D of (1/|G|) sum_sigma 1/det(I - z sigma), by exact
/// power-series expansion. Independent cross-check of invariant_slice_dim.
std::vector<long> molien_series(const MatrixGroup& group, int degree_bound);

/// The group { (sigma^{-1})^T }, acting on the dual variables.
MatrixGroup contragredient_group(const MatrixGroup& group);

} // namespace invlab

#endif
