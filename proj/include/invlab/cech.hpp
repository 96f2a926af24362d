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

#ifndef INVLAB_CECH_HPP
#define INVLAB_CECH_HPP

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "invlab/module.hpp"

namespace invlab {

/// Truncation-colimit policy. A component verdict requires `confirmation_window`
/// consecutive agreeing stages; anything else is an honest UndeterminedError.
struct CechPolicy {
    int t_start = 1;
    int t_max = 14;
    int confirmation_window = 3;
    long monomial_budget = 200000; // cap on one numerator space dimension
    bool force_dense = false;      // disable the multidegree block decomposition
};

struct StageObservation {
    int t = 0;
    long dim = 0;             // dim of the stage-t cohomology
    long transition_rank = -1; // rank of H(t) -> H(t+1); -1 before it is known
};

/// The computed dimension of one graded component, finite(d) or divergent,
/// with the full stabilization audit trail.
struct ComponentDim {
    enum class Kind { Finite, Divergent };
    Kind kind = Kind::Finite;
    long dim = 0; // for Finite
    std::vector<StageObservation> observations;

    bool finite() const { return kind == Kind::Finite; }
    bool nonzero() const { return kind == Kind::Divergent || dim > 0; }
};

std::string observations_json(const std::vector<StageObservation>& obs);

/// Validate that every generator is homogeneous, nonzero and G-invariant;
/// rejection names the offending generator, the group element and a witness
/// monomial. Returns the echo of the validated generators.
std::vector<MultiPoly> validate_invariant_generators(const std::vector<MultiPoly>& gens,
                                                     const MatrixGroup& group);

/// Graded components of H^i_{IR}(R) (and of its G-invariant part, which is
/// H^i_I(S) for invariant generators) via stage-truncated Cech strands with
/// transition-rank stabilization.
class CechContext {
public:
    /// Trivial-group variant: components of H^i_I(R).
    CechContext(int m, std::vector<MultiPoly> gens, CechPolicy policy);
    /// Invariant variant: generators are validated against the group and the
    /// engine computes the G-invariant part of each stage cohomology.
    CechContext(MatrixGroup group, std::vector<MultiPoly> gens, CechPolicy policy);

    int num_vars() const { return m_; }
    int num_generators() const { return static_cast<int>(gens_.size()); }
    const CechPolicy& policy() const { return policy_; }
    const std::optional<MatrixGroup>& group() const { return group_; }
    bool block_mode() const { return block_mode_; }

    /// Computed dimension of the degree-n component of H^i. Throws
    /// UndeterminedError when no verdict is reached within t_max.
    const ComponentDim& component(int i, long n);

    /// Matrix of multiplication by the invariant homogeneous h on stabilized
    /// components: M_n -> M_{n + deg h}. Both endpoints must be finite.
    ExactMatrix multiplication_action(const MultiPoly& h, int i, long n);

    /// Matrix of the derivation action of a homogeneous polynomial in the
    /// dual variables (internal degree -deg): M_n -> M_{n - deg}.
    ExactMatrix dual_action(const MultiPoly& dual_poly, int i, long n);

    /// Injectivity evidence for multiplication by h on the component at n,
    /// valid for divergent components too: kernel classes at the horizon
    /// that survive from the earliest stage are counterexamples.
    struct InjectionEvidence {
        bool injective = true;
        long surviving_kernel_dim = 0;
        int horizon_stage = 0;
    };
    InjectionEvidence injection_evidence(const MultiPoly& h, int i, long n);

    /// Joint variant: surviving classes killed by every listed multiplier
    /// at once (the stage-level analogue of Gamma_X-torsion detection).
    InjectionEvidence joint_injection_evidence(const std::vector<MultiPoly>& hs, int i, long n);

    /// Dimension of the eventual kernel of iterated multiplication by h on
    /// the finite component at n (the h-torsion of that component).
    long eventual_kernel_dim(const MultiPoly& h, int i, long n);

    /// The torsion special case: dim of H^0_{I'}(H^i_I(-))_n on computed
    /// components, i.e. the joint eventual kernel of the outer generators.
    long outer_h0_dim(const std::vector<MultiPoly>& outer_gens, int i, long n);

    /// Chain-level identity checks used by the property suites: the Reynolds
    /// projector commutes with boundaries and transitions at stage t.
    bool check_equivariance_identities(int i, long n, int t);
    /// d o d = 0 at stage t, degree n (levels i-1 -> i -> i+1).
    bool check_boundary_square_zero(int i, long n, int t);

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
    int m_ = 0;
    std::vector<MultiPoly> gens_;
    std::optional<MatrixGroup> group_;
    CechPolicy policy_;
    bool block_mode_ = false;
};

/// A finite local-cohomology component system exposed as a GradedSliceModule
/// (slices = stabilized component bases; actions = engine actions).
class CohomologyModule : public GradedSliceModule {
public:
    CohomologyModule(std::shared_ptr<CechContext> ctx, int i) : ctx_(std::move(ctx)), i_(i) {}
    int num_vars() const override { return ctx_->num_vars(); }
    long slice_dim(long n) override;
    bool slice_finite(long n) override;
    ExactMatrix action_matrix(const RingElem& h, long n) override;

private:
    std::shared_ptr<CechContext> ctx_;
    int i_;
};

/// One coset entry: n = residue + c*t.
struct CosetEntry {
    long t = 0;
    long n = 0;
    std::optional<ComponentDim> value; // nullopt = undetermined
    std::string note;                  // error text when undetermined
};

/// Exact finite-difference tail fit.
struct TailFit {
    bool fitted = false;
    int degree = -1;                  // -1 = identically zero on the window
    std::vector<Rational> coeffs;     // polynomial in t, constant term first
    long window_from = 0, window_to = 0; // largest window with Delta^m == 0
};

/// Dimensions along one coset l + cZ with the dichotomy verdict and the
/// polynomial tail fits.
struct CosetProfile {
    long c = 1;
    long residue = 0;
    int i = 0;
    std::vector<CosetEntry> entries;
    bool any_undetermined = false;
    bool dichotomy_ok = true; // all determined entries share one finiteness kind
    std::optional<TailFit> alpha; // largest-t tail (only when all finite)
    std::optional<TailFit> beta;  // smallest-t tail
    bool degree_alarm = false;    // no tail window certifies degree <= m-1
};

CosetProfile coset_profile(CechContext& ctx, int i, long c, long residue,
                           long t_lo, long t_hi);

/// Evaluate a TailFit polynomial at integer t.
Rational tail_fit_eval(const TailFit& fit, long t);

} // namespace invlab

#endif
