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

#include "invlab/module.hpp"

namespace invlab {

Vector poly_to_monomial_coords(const MultiPoly& p, long d) {
    auto basis = monomials_of_degree(p.num_vars(), d);
    std::map<Exponents, int> index;
    for (std::size_t k = 0; k < basis.size(); ++k) index[basis[k]] = static_cast<int>(k);
    Vector v(basis.size(), FieldElement::zero());
    for (const auto& [e, c] : p.terms()) {
        auto it = index.find(e);
        if (it == index.end()) throw InputError("polynomial is not homogeneous of degree " + std::to_string(d));
        v[it->second] = c;
    }
    return v;
}

ExactMatrix polys_to_monomial_coords(const std::vector<MultiPoly>& ps, long d) {
    std::vector<Vector> cols;
    cols.reserve(ps.size());
    for (const auto& p : ps) cols.push_back(poly_to_monomial_coords(p, d));
    return ExactMatrix::from_columns(static_cast<int>(cols.empty() ? 0 : cols[0].size()), cols);
}

FreeRingModule::FreeRingModule(int m, std::optional<MatrixGroup> group)
    : m_(m), group_(std::move(group)) {
    if (group_ && group_->dim != m_) throw InputError("group dimension mismatch");
}

long FreeRingModule::slice_dim(long n) {
    return n < 0 ? 0 : monomial_count(m_, n);
}

ExactMatrix FreeRingModule::action_matrix(const RingElem& h, long n) {
    long target = n + h.internal_degree();
    auto src = monomials_of_degree(m_, n);
    auto dst = monomials_of_degree(m_, target);
    std::map<Exponents, int> index;
    for (std::size_t k = 0; k < dst.size(); ++k) index[dst[k]] = static_cast<int>(k);
    ExactMatrix a(static_cast<int>(dst.size()), static_cast<int>(src.size()));
    for (std::size_t j = 0; j < src.size(); ++j) {
        MultiPoly image(m_);
        MultiPoly mono = MultiPoly::monomial(src[j], FieldElement::one());
        if (!h.dual) {
            image = h.p * mono;
        } else {
            // derivation action of a D-polynomial: sum over its terms of the
            // iterated partial derivative scaled by the coefficient
            for (const auto& [e, c] : h.p.terms()) {
                MultiPoly d = mono;
                for (int v = 0; v < m_ && !d.is_zero(); ++v) {
                    for (int k = 0; k < e[v] && !d.is_zero(); ++k) d = d.derivative(v);
                }
                if (!d.is_zero()) image = image + d.scalar_mul(c);
            }
        }
        for (const auto& [e, c] : image.terms()) a.at(index.at(e), static_cast<int>(j)) = c;
    }
    return a;
}

std::optional<std::vector<ExactMatrix>> FreeRingModule::group_action(long n) {
    if (!group_) return std::nullopt;
    std::vector<ExactMatrix> mats;
    mats.reserve(group_->elements.size());
    for (const auto& sigma : group_->elements) mats.push_back(action_on_slice(sigma, m_, n));
    return mats;
}

InvariantRingModule::InvariantRingModule(MatrixGroup group) : group_(std::move(group)) {}

const std::vector<MultiPoly>& InvariantRingModule::basis(long n) {
    auto it = cache_.find(n);
    if (it != cache_.end()) return it->second;
    std::vector<MultiPoly> b;
    if (n == 0) {
        b.push_back(MultiPoly::constant(group_.dim, FieldElement::one()));
    } else if (n > 0) {
        b = invariant_slice_basis(group_, n);
    }
    return cache_.emplace(n, std::move(b)).first->second;
}

long InvariantRingModule::slice_dim(long n) {
    return static_cast<long>(basis(n).size());
}

ExactMatrix InvariantRingModule::action_matrix(const RingElem& h, long n) {
    if (h.dual) throw InputError("dual action is not defined on the invariant ring module");
    MultiPoly r = reynolds(h.p, group_);
    if (r != h.p) throw InputError("invariant ring action requires an invariant element");
    long target = n + h.internal_degree();
    const auto& src = basis(n);
    const auto& dst = basis(target);
    if (src.empty()) return ExactMatrix(static_cast<int>(dst.size()), 0);
    if (dst.empty()) {
        // target slice is zero; the product must vanish for each basis element
        for (const auto& b : src) {
            if (!(h.p * b).is_zero()) throw Error("invariant product escaped the invariant slice");
        }
        return ExactMatrix(0, static_cast<int>(src.size()));
    }
    ExactMatrix dst_mat = polys_to_monomial_coords(dst, target);
    std::vector<MultiPoly> images;
    images.reserve(src.size());
    for (const auto& b : src) images.push_back(h.p * b);
    ExactMatrix img_mat = polys_to_monomial_coords(images, target);
    auto x = solve_columns(dst_mat, img_mat);
    if (!x) throw Error("invariant product not expressible in the invariant basis");
    return *x;
}

} // namespace invlab
