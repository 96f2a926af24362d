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

#ifndef INVLAB_MODULE_HPP
#define INVLAB_MODULE_HPP

#include <memory>
#include <optional>
#include <vector>

#include "invlab/group.hpp"
#include "invlab/matrix.hpp"
#include "invlab/poly.hpp"

namespace invlab {

/// A homogeneous ring element acting on graded modules. `dual` marks
/// elements of the D-variable polynomial ring T = K[D1..Dm] with
/// deg D_i = -1, so the internal degree is minus the polynomial degree.
struct RingElem {
    MultiPoly p;
    bool dual = false;

    long internal_degree() const {
        long d = p.degree();
        if (d < 0) throw InputError("ring element must be nonzero");
        return dual ? -d : d;
    }
    static RingElem mul(MultiPoly q) { return RingElem{std::move(q), false}; }
    static RingElem dual_of(MultiPoly q) { return RingElem{std::move(q), true}; }
};

/// Degreewise-finite graded module presented through slice bases and exact
/// multiplication matrices. Slices are reproducible; multiplication maps
/// commute with each other on every computed slice.
class GradedSliceModule {
public:
    virtual ~GradedSliceModule() = default;
    virtual int num_vars() const = 0;
    /// Dimension of M_n; throws DivergentSliceError when M_n is not finite.
    virtual long slice_dim(long n) = 0;
    virtual bool slice_finite(long n) = 0;
    /// Matrix of the action of h: M_n -> M_{n + h.internal_degree()}.
    /// Multiplication for ring-side h; the derivation action for dual h.
    virtual ExactMatrix action_matrix(const RingElem& h, long n) = 0;
    /// Group action on the slice when the module carries one (for
    /// equivariance checks); columns/rows in the slice basis.
    virtual std::optional<std::vector<ExactMatrix>> group_action(long n) { (void)n; return std::nullopt; }
};

/// The free module R = K[X1..Xm] with its monomial slice bases. Dual
/// elements act by differentiation (the natural T-module structure).
class FreeRingModule : public GradedSliceModule {
public:
    FreeRingModule(int m, std::optional<MatrixGroup> group = std::nullopt);
    int num_vars() const override { return m_; }
    long slice_dim(long n) override;
    bool slice_finite(long n) override { (void)n; return true; }
    ExactMatrix action_matrix(const RingElem& h, long n) override;
    std::optional<std::vector<ExactMatrix>> group_action(long n) override;

private:
    int m_;
    std::optional<MatrixGroup> group_;
};

/// The invariant ring S = R^G through its Reynolds-image slice bases.
/// Actions must be by invariant elements (checked).
class InvariantRingModule : public GradedSliceModule {
public:
    explicit InvariantRingModule(MatrixGroup group);
    int num_vars() const override { return group_.dim; }
    long slice_dim(long n) override;
    bool slice_finite(long n) override { (void)n; return true; }
    ExactMatrix action_matrix(const RingElem& h, long n) override;

    /// Slice basis as polynomials (cached).
    const std::vector<MultiPoly>& basis(long n);

private:
    MatrixGroup group_;
    std::map<long, std::vector<MultiPoly>> cache_;
};

/// Coordinates of polynomials in the degree-d monomial basis (canonical
/// enumeration); shared helper.
Vector poly_to_monomial_coords(const MultiPoly& p, long d);
ExactMatrix polys_to_monomial_coords(const std::vector<MultiPoly>& ps, long d);

} // namespace invlab

#endif
