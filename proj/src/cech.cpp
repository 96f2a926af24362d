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

#include "invlab/cech.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace invlab {

std::string observations_json(const std::vector<StageObservation>& obs) {
    std::ostringstream os;
    os << "[";
    for (std::size_t k = 0; k < obs.size(); ++k) {
        if (k) os << ",";
        os << "{\"t\":" << obs[k].t << ",\"dim\":" << obs[k].dim
           << ",\"transition_rank\":" << obs[k].transition_rank << "}";
    }
    os << "]";
    return os.str();
}

std::vector<MultiPoly> validate_invariant_generators(const std::vector<MultiPoly>& gens,
                                                     const MatrixGroup& group) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
        const MultiPoly& g = gens[k];
        if (g.is_zero())
            throw InputError("ideal generator " + std::to_string(k + 1) + " is zero");
        if (!g.is_homogeneous())
            throw InputError("ideal generator " + std::to_string(k + 1) + " is not homogeneous");
        if (g.num_vars() != group.dim)
            throw InputError("ideal generator " + std::to_string(k + 1) + " variable-count mismatch");
        for (int s = 0; s < group.order(); ++s) {
            MultiPoly moved = act_on_poly(group.elements[s], g);
            if (moved != g) {
                MultiPoly diff = moved - g;
                auto [we, wc] = diff.leading_term(MonomialOrder::GrevLex);
                throw InputError("ideal generator " + std::to_string(k + 1) +
                                 " is not invariant: group element #" + std::to_string(s) +
                                 " moves it, witness monomial " +
                                 MultiPoly::monomial(we, FieldElement::one()).to_string());
            }
        }
    }
    return gens;
}

namespace {

using BlockKey = Exponents; // empty key = the dense single block

struct Label {
    int mask;
    Exponents e;
    bool operator<(const Label& o) const {
        if (mask != o.mask) return mask < o.mask;
        return e < o.e;
    }
};

using LabelVec = std::map<Label, FieldElement>;

struct LevelSpace {
    int p = 0;
    int t = 0;
    long n = 0;
    std::vector<Label> labels;                    // sorted by (block key, label)
    std::map<Label, long> label_pos;              // label -> global label coordinate
    std::vector<BlockKey> keys;                   // sorted
    std::vector<std::pair<long, long>> ranges;    // work-coordinate range per key
    std::optional<ExactMatrix> restriction;       // label_dim x work_dim (dense + group)

    long label_dim() const { return static_cast<long>(labels.size()); }
    long work_dim() const { return restriction ? restriction->cols() : label_dim(); }
    int key_index(const BlockKey& k) const {
        auto it = std::lower_bound(keys.begin(), keys.end(), k);
        if (it == keys.end() || *it != k) return -1;
        return static_cast<int>(it - keys.begin());
    }
};

int popcount(int mask) { return __builtin_popcount(static_cast<unsigned>(mask)); }

int insertion_sign(int mask, int j) {
    int below = popcount(mask & ((1 << j) - 1));
    return below % 2 == 0 ? 1 : -1;
}

} // namespace

struct CechContext::Impl {
    int m;
    std::vector<MultiPoly> gens;
    std::optional<MatrixGroup> group;
    CechPolicy policy;
    bool block_mode = false;
    int r = 0;

    std::vector<long> gen_deg;
    // caches
    std::map<int, MultiPoly> mask_product_cache;            // h_T
    std::map<std::pair<int, int>, MultiPoly> gen_power_cache; // h_j^t
    std::map<std::tuple<long, int, int, bool>, std::shared_ptr<const LevelSpace>> level_cache;
    // diagonal character tables: per element, per variable, powers of the diagonal entry
    std::vector<std::vector<std::vector<FieldElement>>> diag_powers;

    struct BlockStage {
        std::vector<BlockKey> keys;       // sorted, for level i of this component
        std::vector<Subquotient> h;       // aligned with keys
        long total = 0;
        std::shared_ptr<const LevelSpace> level_i;
        std::vector<long> h_offsets;      // offsets of each block in concatenated H coords
        long h_dim_of(const BlockKey& k) const {
            auto it = std::lower_bound(keys.begin(), keys.end(), k);
            if (it == keys.end() || *it != k) return 0;
            return h[static_cast<std::size_t>(it - keys.begin())].dim();
        }
    };

    struct CompData {
        int i = 0;
        long n = 0;
        std::optional<ComponentDim> verdict;
        int stab_start = -1;
        int stab_horizon = -1;
        int first_informative = -1;
        int last_stage = 0;
        bool exhausted = false;
        std::map<int, BlockStage> stages;
        std::map<int, std::map<BlockKey, ExactMatrix>> transitions; // source stage t -> (t+1)
        std::vector<StageObservation> obs;
    };
    std::map<std::pair<int, long>, CompData> comp_cache;

    long degsum(int mask) const {
        long d = 0;
        for (int k = 0; k < r; ++k)
            if (mask & (1 << k)) d += gen_deg[k];
        return d;
    }

    const MultiPoly& mask_product(int mask) {
        auto it = mask_product_cache.find(mask);
        if (it != mask_product_cache.end()) return it->second;
        MultiPoly p = MultiPoly::constant(m, FieldElement::one());
        for (int k = 0; k < r; ++k)
            if (mask & (1 << k)) p = p * gens[k];
        return mask_product_cache.emplace(mask, std::move(p)).first->second;
    }

    const MultiPoly& gen_power(int j, int t) {
        auto key = std::make_pair(j, t);
        auto it = gen_power_cache.find(key);
        if (it != gen_power_cache.end()) return it->second;
        return gen_power_cache.emplace(key, gens[j].pow(t)).first->second;
    }

    Exponents mask_mdeg(int mask) {
        // block mode only: generators are monomials
        Exponents d(m, 0);
        for (int k = 0; k < r; ++k) {
            if (mask & (1 << k)) d = exponent_sum(d, gens[k].terms().begin()->first);
        }
        return d;
    }

    void init_diag_tables() {
        if (!group || !group->is_diagonal()) return;
        diag_powers.resize(group->order());
        for (int s = 0; s < group->order(); ++s) {
            diag_powers[s].resize(m);
            for (int v = 0; v < m; ++v) {
                FieldElement base = group->elements[s].at(v, v);
                std::vector<FieldElement> pows{FieldElement::one()};
                FieldElement cur = base;
                // diagonal entries of a finite group element are roots of unity
                int guard = 0;
                while (!cur.is_one()) {
                    pows.push_back(cur);
                    cur = cur * base;
                    if (++guard > 4 * group->order() + 16)
                        throw Error("diagonal entry is not a root of unity; closure broken");
                }
                diag_powers[s][v] = std::move(pows);
            }
        }
    }

    bool label_invariant(const Exponents& e) {
        if (!group) return true;
        for (int s = 0; s < group->order(); ++s) {
            FieldElement chi = FieldElement::one();
            for (int v = 0; v < m; ++v) {
                const auto& pows = diag_powers[s][v];
                int ord = static_cast<int>(pows.size());
                chi = chi * pows[e[v] % ord];
            }
            if (!chi.is_one()) return false;
        }
        return true;
    }

    std::shared_ptr<const LevelSpace> level(long n, int t, int p, bool raw) {
        auto key = std::make_tuple(n, t, p, raw);
        auto it = level_cache.find(key);
        if (it != level_cache.end()) return it->second;
        auto ls = std::make_shared<LevelSpace>();
        ls->p = p;
        ls->t = t;
        ls->n = n;
        std::vector<std::pair<BlockKey, Label>> entries;
        for (int mask = 0; mask < (1 << r); ++mask) {
            if (popcount(mask) != p) continue;
            long d = n + static_cast<long>(t) * degsum(mask);
            if (d < 0) continue;
            if (monomial_count(m, d) > policy.monomial_budget)
                throw ResourceLimitError("numerator space of dimension " +
                                         std::to_string(monomial_count(m, d)) +
                                         " exceeds the monomial budget");
            Exponents shift;
            if (block_mode && !raw) shift = mask_mdeg(mask);
            for (const auto& e : monomials_of_degree(m, d)) {
                if (block_mode && !raw && group && !label_invariant(e)) continue;
                BlockKey key_of_label;
                if (block_mode && !raw) {
                    key_of_label = e;
                    for (int v = 0; v < m; ++v) key_of_label[v] -= t * shift[v];
                }
                entries.emplace_back(std::move(key_of_label), Label{mask, e});
            }
        }
        std::sort(entries.begin(), entries.end());
        for (long pos = 0; pos < static_cast<long>(entries.size()); ++pos) {
            ls->labels.push_back(entries[pos].second);
            ls->label_pos.emplace(entries[pos].second, pos);
        }
        if (block_mode && !raw) {
            long begin = 0;
            for (long pos = 0; pos < static_cast<long>(entries.size()); ++pos) {
                if (pos + 1 == static_cast<long>(entries.size()) ||
                    entries[pos + 1].first != entries[pos].first) {
                    ls->keys.push_back(entries[pos].first);
                    ls->ranges.emplace_back(begin, pos + 1);
                    begin = pos + 1;
                }
            }
        } else {
            if (group && !raw) {
                // invariant restriction, block diagonal per component mask
                std::vector<Vector> cols;
                long offset = 0;
                int mask_begin = 0;
                while (mask_begin < static_cast<int>(ls->labels.size())) {
                    int mask = ls->labels[mask_begin].mask;
                    int end = mask_begin;
                    while (end < static_cast<int>(ls->labels.size()) && ls->labels[end].mask == mask) ++end;
                    long dim = end - mask_begin;
                    long d = total_degree(ls->labels[mask_begin].e);
                    ExactMatrix proj(static_cast<int>(dim), static_cast<int>(dim));
                    for (const auto& sigma : group->elements)
                        proj = proj + action_on_slice(sigma, m, d);
                    proj = proj.scalar_mul(FieldElement(Rational(1, group->order())));
                    for (int piv : column_space_pivots(proj)) {
                        Vector col(ls->labels.size(), FieldElement::zero());
                        for (long row = 0; row < dim; ++row) col[offset + row] = proj.at(static_cast<int>(row), piv);
                        cols.push_back(std::move(col));
                    }
                    offset += dim;
                    mask_begin = end;
                }
                ls->restriction = ExactMatrix::from_columns(static_cast<int>(ls->labels.size()), cols);
            }
            ls->keys.push_back(BlockKey{});
            ls->ranges.emplace_back(0, ls->work_dim());
        }
        level_cache.emplace(key, ls);
        return ls;
    }

    // ----- label-level linear maps -----

    // target accumulation of q * (numerator of lab), component mask changed to dst_mask
    static void emit_mul(const Label& lab, const MultiPoly& q, int dst_mask,
                         const FieldElement& scale, LabelVec& out) {
        for (const auto& [qe, qc] : q.terms()) {
            Label dst{dst_mask, exponent_sum(lab.e, qe)};
            auto it = out.find(dst);
            FieldElement add = qc * scale;
            if (it == out.end()) out.emplace(std::move(dst), add);
            else {
                it->second += add;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }

    // matrix (dst label coords x src label coords) of a label-level map
    ExactMatrix label_matrix(const LevelSpace& src, const LevelSpace& dst,
                             const std::function<void(const Label&, LabelVec&)>& fn) const {
        ExactMatrix a(static_cast<int>(dst.label_dim()), static_cast<int>(src.label_dim()));
        for (long js = 0; js < src.label_dim(); ++js) {
            LabelVec out;
            fn(src.labels[js], out);
            for (const auto& [lab, c] : out) {
                auto it = dst.label_pos.find(lab);
                if (it == dst.label_pos.end()) {
                    if (block_mode)
                        throw Error("label map left the block decomposition; internal error");
                    continue; // dense raw spaces hold every monomial, so this is unreachable
                }
                a.at(static_cast<int>(it->second), static_cast<int>(js)) += c;
            }
        }
        return a;
    }

    // work-coordinate matrix of a label-level map (handles restrictions)
    ExactMatrix work_matrix(const LevelSpace& src, const LevelSpace& dst,
                            const std::function<void(const Label&, LabelVec&)>& fn) const {
        ExactMatrix lm = label_matrix(src, dst, fn);
        if (!src.restriction && !dst.restriction) return lm;
        ExactMatrix mapped = src.restriction ? lm * (*src.restriction) : lm;
        if (!dst.restriction) return mapped;
        auto x = solve_columns(*dst.restriction, mapped);
        if (!x) throw Error("restricted image escaped the invariant subspace; internal error");
        return *x;
    }

    // boundary d_p : level p -> level p+1 at stage t (Cech localization maps)
    ExactMatrix boundary_matrix(const LevelSpace& src, const LevelSpace& dst, int t) {
        return work_matrix(src, dst, [this, t](const Label& lab, LabelVec& out) {
            for (int j = 0; j < r; ++j) {
                if (lab.mask & (1 << j)) continue;
                int sign = insertion_sign(lab.mask, j);
                FieldElement s = sign > 0 ? FieldElement::one() : -FieldElement::one();
                emit_mul(lab, gen_power(j, t), lab.mask | (1 << j), s, out);
            }
        });
    }

    // extract the per-key submatrix of a work-coordinate matrix
    static ExactMatrix sub_block(const ExactMatrix& a, const LevelSpace& dst, const LevelSpace& src,
                                 const BlockKey& key) {
        int di = dst.key_index(key);
        int si = src.key_index(key);
        long r0 = di < 0 ? 0 : dst.ranges[di].first;
        long r1 = di < 0 ? 0 : dst.ranges[di].second;
        long c0 = si < 0 ? 0 : src.ranges[si].first;
        long c1 = si < 0 ? 0 : src.ranges[si].second;
        ExactMatrix s(static_cast<int>(r1 - r0), static_cast<int>(c1 - c0));
        for (long i2 = r0; i2 < r1; ++i2)
            for (long j2 = c0; j2 < c1; ++j2) s.at(static_cast<int>(i2 - r0), static_cast<int>(j2 - c0)) = a.at(static_cast<int>(i2), static_cast<int>(j2));
        return s;
    }

    // union of keys present in any of the given level spaces
    static std::vector<BlockKey> key_union(std::initializer_list<const LevelSpace*> spaces) {
        std::vector<BlockKey> keys;
        for (const LevelSpace* s : spaces)
            for (const auto& k : s->keys) keys.push_back(k);
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        return keys;
    }

    bool stage_informative(int i, long n, int t) const {
        // a stage can still be missing classes while some growing component
        // of level i has negative numerator degree
        for (int mask = 0; mask < (1 << r); ++mask) {
            if (popcount(mask) != i) continue;
            long ds = degsum(mask);
            if (ds > 0 && n + static_cast<long>(t) * ds < 0) return false;
        }
        return true;
    }

    // first truncation stage at which every growing numerator space of the
    // whole homological window (levels i-1, i, i+1) has nonnegative degree;
    // the stage budget counts from here. Before that point cycles or
    // relations are still missing and dimension growth is a truncation
    // artifact, not evidence.
    int activation_stage(int i, long n) const {
        int t0 = policy.t_start;
        if (n >= 0) return t0;
        int p_lo = std::max(0, i - 1), p_hi = std::min(r, i + 1);
        for (int mask = 0; mask < (1 << r); ++mask) {
            int pc = popcount(mask);
            if (pc < p_lo || pc > p_hi) continue;
            long ds = degsum(mask);
            if (ds > 0) t0 = std::max(t0, static_cast<int>((-n + ds - 1) / ds));
        }
        return t0;
    }

    void compute_stage(CompData& cd, int t) {
        if (cd.stages.count(t)) return;
        int i = cd.i;
        long n = cd.n;
        auto li = level(n, t, i, false);
        std::shared_ptr<const LevelSpace> lo, hi;
        ExactMatrix d_dn, d_up;
        if (i > 0) {
            lo = level(n, t, i - 1, false);
            d_dn = boundary_matrix(*lo, *li, t);
        }
        if (i < r) {
            hi = level(n, t, i + 1, false);
            d_up = boundary_matrix(*li, *hi, t);
        }
        BlockStage st;
        st.level_i = li;
        st.keys = li->keys;
        long offset = 0;
        for (std::size_t kx = 0; kx < st.keys.size(); ++kx) {
            const BlockKey& key = st.keys[kx];
            int ki = li->key_index(key);
            long dim = li->ranges[ki].second - li->ranges[ki].first;
            std::vector<Vector> kernel_vecs;
            if (i < r) {
                ExactMatrix up = sub_block(d_up, *hi, *li, key);
                kernel_vecs = kernel_basis(up);
            } else {
                for (long j = 0; j < dim; ++j) {
                    Vector v(dim, FieldElement::zero());
                    v[j] = FieldElement::one();
                    kernel_vecs.push_back(std::move(v));
                }
            }
            std::vector<Vector> image_vecs;
            if (i > 0) {
                ExactMatrix dn = sub_block(d_dn, *li, *lo, key);
                for (int j = 0; j < dn.cols(); ++j) image_vecs.push_back(dn.column(j));
            }
            st.h.emplace_back(static_cast<int>(dim), kernel_vecs, image_vecs);
            st.h_offsets.push_back(offset);
            offset += st.h.back().dim();
            st.total += st.h.back().dim();
        }
        cd.stages.emplace(t, std::move(st));
        cd.last_stage = std::max(cd.last_stage, t);
    }

    // lift block-local H representatives to global label coordinates
    std::vector<Vector> reps_as_labels(const BlockStage& st, const BlockKey& key,
                                       const std::vector<Vector>& work_vecs) const {
        const LevelSpace& li = *st.level_i;
        int ki = li.key_index(key);
        long begin = li.ranges[ki].first;
        std::vector<Vector> out;
        for (const auto& wv : work_vecs) {
            if (li.restriction) {
                Vector full(static_cast<std::size_t>(li.work_dim()), FieldElement::zero());
                for (std::size_t j = 0; j < wv.size(); ++j) full[begin + j] = wv[j];
                out.push_back(li.restriction->apply(full));
            } else {
                Vector lv(li.label_dim(), FieldElement::zero());
                for (std::size_t j = 0; j < wv.size(); ++j) lv[begin + j] = wv[j];
                out.push_back(std::move(lv));
            }
        }
        return out;
    }

    // gather a label vector into block-local work coordinates of `key`
    Vector labels_to_block(const LevelSpace& li, const BlockKey& key, const Vector& label_vec) const {
        int ki = li.key_index(key);
        if (ki < 0) {
            for (const auto& c : label_vec)
                if (!c.is_zero()) throw Error("class fell into a missing block; internal error");
            return Vector{};
        }
        auto [b, e] = li.ranges[ki];
        if (li.restriction) {
            ExactMatrix bm(static_cast<int>(label_vec.size()), 1);
            for (std::size_t j = 0; j < label_vec.size(); ++j) bm.at(static_cast<int>(j), 0) = label_vec[j];
            auto x = solve_columns(*li.restriction, bm);
            if (!x) throw Error("vector escaped the invariant restriction; internal error");
            Vector out(static_cast<std::size_t>(e - b));
            for (long j = b; j < e; ++j) out[j - b] = x->at(static_cast<int>(j), 0);
            return out;
        }
        Vector out(static_cast<std::size_t>(e - b), FieldElement::zero());
        for (std::size_t j = 0; j < label_vec.size(); ++j) {
            if (label_vec[j].is_zero()) continue;
            if (static_cast<long>(j) < b || static_cast<long>(j) >= e)
                throw Error("class leaked across blocks; internal error");
            out[j - b] = label_vec[j];
        }
        return out;
    }

    // transition chain map H(t) -> H(t+1), per block
    void compute_transition(CompData& cd, int t) {
        if (cd.transitions.count(t)) return;
        compute_stage(cd, t);
        compute_stage(cd, t + 1);
        const BlockStage& src = cd.stages.at(t);
        const BlockStage& dst = cd.stages.at(t + 1);
        std::map<BlockKey, ExactMatrix> tr;
        for (std::size_t kx = 0; kx < src.keys.size(); ++kx) {
            const BlockKey& key = src.keys[kx];
            const Subquotient& hs = src.h[kx];
            long dtgt = dst.h_dim_of(key);
            if (hs.dim() == 0) {
                tr.emplace(key, ExactMatrix(static_cast<int>(dtgt), 0));
                continue;
            }
            std::vector<Vector> label_reps = reps_as_labels(src, key, hs.representatives());
            // numerator *= h_T for each label
            const LevelSpace& li_dst = *dst.level_i;
            std::vector<Vector> mapped;
            for (const auto& lr : label_reps) {
                LabelVec acc;
                for (std::size_t j = 0; j < lr.size(); ++j) {
                    if (lr[j].is_zero()) continue;
                    const Label& lab = src.level_i->labels[j];
                    emit_mul(lab, mask_product(lab.mask), lab.mask, lr[j], acc);
                }
                Vector lv(li_dst.label_dim(), FieldElement::zero());
                for (const auto& [lab, c] : acc) {
                    auto it = li_dst.label_pos.find(lab);
                    if (it == li_dst.label_pos.end()) {
                        if (!c.is_zero()) throw Error("transition image missing a label; internal error");
                        continue;
                    }
                    lv[it->second] = c;
                }
                mapped.push_back(std::move(lv));
            }
            if (dtgt == 0) {
                tr.emplace(key, ExactMatrix(0, static_cast<int>(hs.dim())));
                continue;
            }
            std::vector<Vector> block_vecs;
            for (const auto& mv : mapped) block_vecs.push_back(labels_to_block(li_dst, key, mv));
            int kt = -1;
            for (std::size_t q = 0; q < dst.keys.size(); ++q)
                if (dst.keys[q] == key) kt = static_cast<int>(q);
            tr.emplace(key, dst.h[kt].coords(block_vecs));
        }
        // blocks newborn at t+1 receive nothing; no explicit matrix needed
        cd.transitions.emplace(t, std::move(tr));
    }

    // composite transition H(key, t0) -> H(key, t1)
    ExactMatrix composite(CompData& cd, const BlockKey& key, int t0, int t1) {
        compute_stage(cd, t0);
        long d0 = cd.stages.at(t0).h_dim_of(key);
        ExactMatrix acc = ExactMatrix::identity(static_cast<int>(d0));
        for (int t = t0; t < t1; ++t) {
            compute_transition(cd, t);
            const auto& tr = cd.transitions.at(t);
            auto it = tr.find(key);
            if (it == tr.end()) {
                // block vanished (or was never there)
                compute_stage(cd, t + 1);
                acc = ExactMatrix(static_cast<int>(cd.stages.at(t + 1).h_dim_of(key)), acc.cols());
                continue;
            }
            acc = it->second * acc;
        }
        return acc;
    }

    long aggregate_transition_rank(CompData& cd, int t) {
        compute_transition(cd, t);
        long rk = 0;
        for (const auto& [key, mat] : cd.transitions.at(t)) rk += rank(mat);
        return rk;
    }

    long aggregate_composite_rank(CompData& cd, int t0, int t1) {
        compute_stage(cd, t0);
        long rk = 0;
        for (const auto& key : cd.stages.at(t0).keys) rk += rank(composite(cd, key, t0, t1));
        return rk;
    }

    CompData& ensure_data(int i, long n) {
        auto ck = std::make_pair(i, n);
        auto it = comp_cache.find(ck);
        if (it != comp_cache.end() && (it->second.verdict || it->second.exhausted)) return it->second;
        CompData& cd = comp_cache[ck];
        cd.i = i;
        cd.n = n;
        int w = policy.confirmation_window;
        int t0 = activation_stage(i, n);
        int t_hi = t0 + (policy.t_max - policy.t_start);
        std::vector<int> informative; // stages examined, in order
        std::vector<long> dims;       // aligned with informative
        std::vector<long> ranks;      // ranks[k] = transition rank informative[k] -> +1
        for (int t = t0; t <= t_hi; ++t) {
            compute_stage(cd, t);
            long dim = cd.stages.at(t).total;
            cd.obs.push_back(StageObservation{t, dim, -1});
            if (cd.first_informative < 0) cd.first_informative = t;
            if (!informative.empty()) {
                int prev = informative.back();
                long rk = aggregate_transition_rank(cd, prev);
                for (auto& ob : cd.obs)
                    if (ob.t == prev) ob.transition_rank = rk;
                ranks.push_back(rk);
            }
            informative.push_back(t);
            dims.push_back(dim);

            // Verdicts rest on survivor ranks v_s = rank of H(s) -> H(T) at
            // the current horizon T. A start stage is decay-tested when its
            // survivor rank has not moved during the last w horizon steps
            // (Mittag-Leffler stabilization observed at the horizon end);
            // one-step ranks alone can keep growing on systems whose classes
            // all die late, e.g. (x, x^2).
            int horizon = t;
            std::vector<int> stable_starts;
            std::vector<long> stable_ranks;
            for (int s = t0; s + 1 <= horizon - w; ++s) {
                long settled_rank = aggregate_composite_rank(cd, s, horizon - w);
                long horizon_rank = aggregate_composite_rank(cd, s, horizon);
                if (settled_rank == horizon_rank) {
                    stable_starts.push_back(s);
                    stable_ranks.push_back(horizon_rank);
                }
            }
            // finite: w consecutive decay-tested starts with one survivor rank.
            // Excess classes at the frontier must be explained: either the
            // current stage dimension already equals the verdict, or some
            // tested stage demonstrably lost classes (a death witness).
            // Otherwise late-activating cycles could hide behind a vacuous
            // zero prefix, e.g. H^1 of (x y, x z).
            if (static_cast<int>(stable_starts.size()) >= w) {
                std::size_t last = stable_starts.size() - 1;
                bool consecutive = true, flat = true;
                for (std::size_t k = last + 1 - w; k < last; ++k) {
                    if (stable_starts[k + 1] != stable_starts[k] + 1) consecutive = false;
                    if (stable_ranks[k + 1] != stable_ranks[k]) flat = false;
                }
                if (consecutive && flat) {
                    long d = stable_ranks[last];
                    bool explained = (dims.back() == d);
                    for (int s = t0; s < horizon && !explained; ++s) {
                        if (dims[s - t0] > aggregate_composite_rank(cd, s, horizon))
                            explained = true;
                    }
                    if (explained) {
                        ComponentDim out;
                        out.kind = ComponentDim::Kind::Finite;
                        out.dim = d;
                        out.observations = cd.obs;
                        cd.verdict = std::move(out);
                        cd.stab_start = stable_starts[last];
                        cd.stab_horizon = horizon;
                        return cd;
                    }
                }
            }
            // divergent: w+1 consecutive decay-tested starts whose survivor
            // ranks climb, confirmed by net dimension growth at the frontier
            // (growth may be parity-periodic, so monotone-with-net, not strict)
            if (static_cast<int>(stable_starts.size()) >= w + 1 &&
                dims.size() >= static_cast<std::size_t>(w) + 2) {
                std::size_t last = stable_starts.size() - 1;
                bool consecutive = true, climbing = true;
                for (std::size_t k = last - w; k < last; ++k) {
                    if (stable_starts[k + 1] != stable_starts[k] + 1) consecutive = false;
                    if (stable_ranks[k + 1] < stable_ranks[k]) climbing = false;
                }
                if (stable_ranks[last] <= stable_ranks[last - w]) climbing = false;
                bool dims_climbing = true;
                std::size_t d0 = dims.size() - w - 2;
                for (std::size_t k = d0; k + 1 < dims.size(); ++k)
                    if (dims[k] > dims[k + 1]) dims_climbing = false;
                if (dims.back() <= dims[d0]) dims_climbing = false;
                if (consecutive && climbing && dims_climbing) {
                    ComponentDim out;
                    out.kind = ComponentDim::Kind::Divergent;
                    out.dim = -1;
                    out.observations = cd.obs;
                    cd.verdict = std::move(out);
                    return cd;
                }
            }
        }
        cd.exhausted = true;
        return cd;
    }

    // canonical eventual basis of a finite component: block keys in order,
    // pivot columns of the composite over the confirming window
    struct Eventual {
        int ss = 0;
        int horizon = 0;
        std::vector<std::pair<BlockKey, int>> order; // (key, column of H_key(ss))
        std::map<BlockKey, ExactMatrix> comps;       // composite ss -> horizon per key
    };

    Eventual eventual_basis(CompData& cd) {
        if (!cd.verdict || cd.verdict->kind != ComponentDim::Kind::Finite)
            throw DivergentSliceError("component (" + std::to_string(cd.i) + ", " +
                                      std::to_string(cd.n) + ") is not finite");
        Eventual ev;
        ev.ss = cd.stab_start;
        ev.horizon = cd.stab_horizon;
        compute_stage(cd, ev.ss);
        for (const auto& key : cd.stages.at(ev.ss).keys) {
            ExactMatrix comp = composite(cd, key, ev.ss, ev.horizon);
            for (int piv : column_space_pivots(comp)) ev.order.emplace_back(key, piv);
            ev.comps.emplace(key, std::move(comp));
        }
        if (static_cast<long>(ev.order.size()) != cd.verdict->dim)
            throw UndeterminedError("eventual basis dimension drifted from the verdict",
                                    observations_json(cd.obs));
        return ev;
    }

    // images of the canonical eventual basis inside concatenated H(tt) coords
    ExactMatrix eventual_images_at(CompData& cd, const Eventual& ev, int tt) {
        compute_stage(cd, tt);
        const BlockStage& st = cd.stages.at(tt);
        ExactMatrix out(static_cast<int>(st.total), static_cast<int>(ev.order.size()));
        int colx = 0;
        for (const auto& [key, piv] : ev.order) {
            // push the pivot column from ss to tt
            ExactMatrix comp = composite(cd, key, ev.ss, tt);
            int kx = -1;
            for (std::size_t q = 0; q < st.keys.size(); ++q)
                if (st.keys[q] == key) kx = static_cast<int>(q);
            if (kx >= 0) {
                long off = st.h_offsets[kx];
                for (int row = 0; row < comp.rows(); ++row)
                    out.at(static_cast<int>(off) + row, colx) = comp.at(row, piv);
            }
            ++colx;
        }
        return out;
    }

    // concatenated-H -> per-block work representative label vectors at stage t
    std::vector<Vector> h_coords_to_labels(CompData& cd, int t, const ExactMatrix& hvecs) {
        compute_stage(cd, t);
        const BlockStage& st = cd.stages.at(t);
        const LevelSpace& li = *st.level_i;
        std::vector<Vector> out;
        for (int col = 0; col < hvecs.cols(); ++col) {
            Vector label_vec(li.label_dim(), FieldElement::zero());
            for (std::size_t kx = 0; kx < st.keys.size(); ++kx) {
                const Subquotient& h = st.h[kx];
                if (h.dim() == 0) continue;
                Vector hv(static_cast<std::size_t>(h.dim()));
                for (long row = 0; row < h.dim(); ++row) hv[row] = hvecs.at(static_cast<int>(st.h_offsets[kx] + row), col);
                bool nonzero = false;
                for (const auto& c : hv)
                    if (!c.is_zero()) nonzero = true;
                if (!nonzero) continue;
                // rep combination in block-local work coords
                Vector block(static_cast<std::size_t>(h.ambient_dim()), FieldElement::zero());
                for (long rix = 0; rix < h.dim(); ++rix) {
                    if (hv[rix].is_zero()) continue;
                    const Vector& rep = h.representatives()[rix];
                    for (std::size_t j = 0; j < rep.size(); ++j) block[j] += rep[j] * hv[rix];
                }
                auto lifted = reps_as_labels(st, st.keys[kx], {block});
                for (std::size_t j = 0; j < lifted[0].size(); ++j) label_vec[j] += lifted[0][j];
            }
            out.push_back(std::move(label_vec));
        }
        return out;
    }

    // label vectors (level i of target component at stage t) -> concatenated H(t) coords
    ExactMatrix labels_to_h(CompData& cd, int t, const std::vector<Vector>& label_vecs) {
        compute_stage(cd, t);
        const BlockStage& st = cd.stages.at(t);
        const LevelSpace& li = *st.level_i;
        ExactMatrix out(static_cast<int>(st.total), static_cast<int>(label_vecs.size()));
        for (std::size_t col = 0; col < label_vecs.size(); ++col) {
            for (std::size_t kx = 0; kx < st.keys.size(); ++kx) {
                // project the label vector onto this block; a nonzero piece
                // falling into a block with vanishing homology is a boundary,
                // so coordinates are checked there but contribute nothing
                Vector block;
                if (!li.restriction) {
                    auto [b, e] = li.ranges[li.key_index(st.keys[kx])];
                    block.assign(static_cast<std::size_t>(e - b), FieldElement::zero());
                    for (long j = b; j < e; ++j) block[j - b] = label_vecs[col][j];
                } else {
                    block = labels_to_block(li, st.keys[kx], label_vecs[col]);
                }
                bool nonzero = false;
                for (const auto& c : block)
                    if (!c.is_zero()) nonzero = true;
                if (!nonzero) continue;
                ExactMatrix hc = st.h[kx].coords({block});
                for (long row = 0; row < st.h[kx].dim(); ++row)
                    out.at(static_cast<int>(st.h_offsets[kx] + row), static_cast<int>(col)) = hc.at(static_cast<int>(row), 0);
            }
        }
        return out;
    }

    // push concatenated H(t0) coords to H(t1) coords through transitions
    ExactMatrix push_h(CompData& cd, int t0, int t1, const ExactMatrix& vecs) {
        compute_stage(cd, t0);
        ExactMatrix cur = vecs;
        for (int t = t0; t < t1; ++t) {
            compute_transition(cd, t);
            compute_stage(cd, t + 1);
            const BlockStage& src = cd.stages.at(t);
            const BlockStage& dst = cd.stages.at(t + 1);
            ExactMatrix next(static_cast<int>(dst.total), cur.cols());
            const auto& tr = cd.transitions.at(t);
            for (std::size_t kx = 0; kx < src.keys.size(); ++kx) {
                auto it = tr.find(src.keys[kx]);
                if (it == tr.end()) continue;
                int dx = -1;
                for (std::size_t q = 0; q < dst.keys.size(); ++q)
                    if (dst.keys[q] == src.keys[kx]) dx = static_cast<int>(q);
                if (dx < 0) continue;
                const ExactMatrix& tm = it->second;
                for (int col = 0; col < cur.cols(); ++col) {
                    for (int row = 0; row < tm.rows(); ++row) {
                        FieldElement acc = FieldElement::zero();
                        for (int j = 0; j < tm.cols(); ++j) {
                            const FieldElement& v = cur.at(static_cast<int>(src.h_offsets[kx]) + j, col);
                            if (v.is_zero() || tm.at(row, j).is_zero()) continue;
                            acc += tm.at(row, j) * v;
                        }
                        if (!acc.is_zero()) next.at(static_cast<int>(dst.h_offsets[dx]) + row, col) = acc;
                    }
                }
            }
            cur = std::move(next);
        }
        return cur;
    }

    // multiply label vectors of component (i, n, stage t) by polynomial q
    std::vector<Vector> mul_labels(int n_src, int t, const std::vector<Vector>& label_vecs,
                                   const MultiPoly& q, long n_dst, int i) {
        auto src_level = level(n_src, t, i, false);
        auto dst_level = level(n_dst, t, i, false);
        std::vector<Vector> out;
        for (const auto& lv : label_vecs) {
            LabelVec acc;
            for (std::size_t j = 0; j < lv.size(); ++j) {
                if (lv[j].is_zero()) continue;
                const Label& lab = src_level->labels[j];
                emit_mul(lab, q, lab.mask, lv[j], acc);
            }
            Vector dv(dst_level->label_dim(), FieldElement::zero());
            for (const auto& [lab, c] : acc) {
                auto it = dst_level->label_pos.find(lab);
                if (it == dst_level->label_pos.end()) {
                    if (!c.is_zero()) throw Error("product left the computed space; internal error");
                    continue;
                }
                dv[it->second] = c;
            }
            out.push_back(std::move(dv));
        }
        return out;
    }

    // one partial-derivative step: labels of (n, t) -> labels of (n-1, t+1)
    LabelVec dual_step_label(const Label& lab, int v, int t) {
        LabelVec out;
        const MultiPoly& h = mask_product(lab.mask);
        if (lab.e[v] > 0) {
            Label base{lab.mask, lab.e};
            base.e[v] -= 1;
            emit_mul(base, h, lab.mask, FieldElement(Rational(lab.e[v])), out);
        }
        MultiPoly dh = h.derivative(v);
        if (!dh.is_zero()) {
            emit_mul(lab, dh, lab.mask, FieldElement(Rational(-t)), out);
        }
        return out;
    }

    // derivation action of a homogeneous dual polynomial g on label vectors
    // at stage t: result lives at stage t + deg g, internal degree n - deg g
    std::vector<Vector> dual_apply_labels(long n_src, int t, const std::vector<Vector>& label_vecs,
                                          const MultiPoly& g, int i) {
        long k = g.degree();
        auto src_level = level(n_src, t, i, false);
        auto dst_level = level(n_src - k, t + static_cast<int>(k), i, false);
        std::vector<Vector> out;
        for (const auto& lv : label_vecs) {
            LabelVec total;
            for (const auto& [alpha, c] : g.terms()) {
                // iterate single-derivative steps for this dual monomial
                LabelVec cur;
                for (std::size_t j = 0; j < lv.size(); ++j) {
                    if (!lv[j].is_zero()) cur.emplace(src_level->labels[j], lv[j]);
                }
                int tt = t;
                for (int v = 0; v < m; ++v) {
                    for (int rep = 0; rep < alpha[v]; ++rep) {
                        LabelVec next;
                        for (const auto& [lab, cc] : cur) {
                            LabelVec step = dual_step_label(lab, v, tt);
                            for (const auto& [lab2, c2] : step) {
                                FieldElement add = c2 * cc;
                                auto it = next.find(lab2);
                                if (it == next.end()) next.emplace(lab2, add);
                                else {
                                    it->second += add;
                                    if (it->second.is_zero()) next.erase(it);
                                }
                            }
                        }
                        cur = std::move(next);
                        ++tt;
                    }
                }
                for (const auto& [lab, cc] : cur) {
                    FieldElement add = cc * c;
                    auto it = total.find(lab);
                    if (it == total.end()) total.emplace(lab, add);
                    else {
                        it->second += add;
                        if (it->second.is_zero()) total.erase(it);
                    }
                }
            }
            Vector dv(dst_level->label_dim(), FieldElement::zero());
            for (const auto& [lab, c] : total) {
                auto it = dst_level->label_pos.find(lab);
                if (it == dst_level->label_pos.end()) {
                    if (!c.is_zero()) throw Error("derivation left the computed space; internal error");
                    continue;
                }
                dv[it->second] = c;
            }
            out.push_back(std::move(dv));
        }
        return out;
    }
};

// ------------------------- public surface -------------------------

CechContext::CechContext(int m, std::vector<MultiPoly> gens, CechPolicy policy)
    : m_(m), gens_(std::move(gens)), policy_(policy) {
    for (std::size_t k = 0; k < gens_.size(); ++k) {
        if (gens_[k].is_zero())
            throw InputError("ideal generator " + std::to_string(k + 1) + " is zero");
        if (!gens_[k].is_homogeneous())
            throw InputError("ideal generator " + std::to_string(k + 1) + " is not homogeneous");
        if (gens_[k].num_vars() != m_)
            throw InputError("ideal generator " + std::to_string(k + 1) + " variable-count mismatch");
    }
    if (static_cast<int>(gens_.size()) > 24)
        throw ResourceLimitError("too many ideal generators for subset enumeration");
    bool monomial_gens = true;
    for (const auto& g : gens_)
        if (g.term_count() != 1) monomial_gens = false;
    block_mode_ = !policy_.force_dense && monomial_gens;
    impl_ = std::make_shared<Impl>();
    impl_->m = m_;
    impl_->gens = gens_;
    impl_->policy = policy_;
    impl_->block_mode = block_mode_;
    impl_->r = static_cast<int>(gens_.size());
    for (const auto& g : gens_) impl_->gen_deg.push_back(g.degree());
}

CechContext::CechContext(MatrixGroup group, std::vector<MultiPoly> gens, CechPolicy policy)
    : CechContext(group.dim, validate_invariant_generators(gens, group), policy) {
    group_ = group;
    block_mode_ = block_mode_ && group.is_diagonal();
    impl_->group = std::move(group);
    impl_->block_mode = block_mode_;
    impl_->init_diag_tables();
}

const ComponentDim& CechContext::component(int i, long n) {
    if (i < 0) throw InputError("cohomological index must be >= 0");
    auto& cd = impl_->ensure_data(i, n);
    if (!cd.verdict)
        throw UndeterminedError("component (i=" + std::to_string(i) + ", n=" + std::to_string(n) +
                                    ") undetermined within t_max=" + std::to_string(policy_.t_max),
                                observations_json(cd.obs));
    return *cd.verdict;
}

ExactMatrix CechContext::multiplication_action(const MultiPoly& h, int i, long n) {
    if (h.is_zero() || !h.is_homogeneous())
        throw InputError("multiplication action requires a nonzero homogeneous element");
    if (group_) {
        MultiPoly moved = reynolds(h, *group_);
        if (moved != h) throw InputError("multiplication action requires an invariant element");
    }
    long d = h.degree();
    auto& src = impl_->ensure_data(i, n);
    auto& tgt = impl_->ensure_data(i, n + d);
    if (!src.verdict || !tgt.verdict)
        throw UndeterminedError("action endpoints undetermined", observations_json(src.obs));
    auto ev_s = impl_->eventual_basis(src);
    auto ev_t = impl_->eventual_basis(tgt);
    int tau = std::max(ev_s.ss, ev_t.ss);
    int horizon = std::max(ev_t.horizon, tau + policy_.confirmation_window);

    ExactMatrix src_at_tau = impl_->eventual_images_at(src, ev_s, tau);
    std::vector<Vector> labels = impl_->h_coords_to_labels(src, tau, src_at_tau);
    std::vector<Vector> mapped = impl_->mul_labels(n, tau, labels, h, n + d, i);
    ExactMatrix h_tau = impl_->labels_to_h(tgt, tau, mapped);
    ExactMatrix pushed = impl_->push_h(tgt, tau, horizon, h_tau);

    ExactMatrix target_frame = impl_->eventual_images_at(tgt, ev_t, horizon);
    if (rank(target_frame) != tgt.verdict->dim)
        throw UndeterminedError("target stabilization broke under extension",
                                observations_json(tgt.obs));
    auto x = solve_columns(target_frame, pushed);
    if (!x)
        throw UndeterminedError("action image escaped the stabilized component",
                                observations_json(tgt.obs));
    return *x;
}

ExactMatrix CechContext::dual_action(const MultiPoly& dual_poly, int i, long n) {
    if (dual_poly.is_zero() || !dual_poly.is_homogeneous())
        throw InputError("dual action requires a nonzero homogeneous element");
    long k = dual_poly.degree();
    auto& src = impl_->ensure_data(i, n);
    auto& tgt = impl_->ensure_data(i, n - k);
    if (!src.verdict || !tgt.verdict)
        throw UndeterminedError("action endpoints undetermined", observations_json(src.obs));
    auto ev_s = impl_->eventual_basis(src);
    auto ev_t = impl_->eventual_basis(tgt);
    int tau = std::max(ev_s.ss, ev_t.ss);
    int horizon = std::max(ev_t.horizon, tau + static_cast<int>(k) + policy_.confirmation_window);

    ExactMatrix src_at_tau = impl_->eventual_images_at(src, ev_s, tau);
    std::vector<Vector> labels = impl_->h_coords_to_labels(src, tau, src_at_tau);
    std::vector<Vector> mapped = impl_->dual_apply_labels(n, tau, labels, dual_poly, i);
    ExactMatrix h_after = impl_->labels_to_h(tgt, tau + static_cast<int>(k), mapped);
    ExactMatrix pushed = impl_->push_h(tgt, tau + static_cast<int>(k), horizon, h_after);

    ExactMatrix target_frame = impl_->eventual_images_at(tgt, ev_t, horizon);
    if (rank(target_frame) != tgt.verdict->dim)
        throw UndeterminedError("target stabilization broke under extension",
                                observations_json(tgt.obs));
    auto x = solve_columns(target_frame, pushed);
    if (!x)
        throw UndeterminedError("dual image escaped the stabilized component",
                                observations_json(tgt.obs));
    return *x;
}

CechContext::InjectionEvidence CechContext::injection_evidence(const MultiPoly& h, int i, long n) {
    if (h.is_zero() || !h.is_homogeneous())
        throw InputError("injection evidence requires a nonzero homogeneous element");
    long d = h.degree();
    auto& src = impl_->ensure_data(i, n);
    auto& tgt = impl_->ensure_data(i, n + d);
    (void)tgt;
    InjectionEvidence out;
    int T = src.last_stage;
    impl_->compute_stage(tgt, T);
    out.horizon_stage = T;
    if (src.first_informative < 0) return out; // nothing observable: vacuous
    int t0 = src.first_informative;

    // E: surviving classes from the first informative stage
    impl_->compute_stage(src, t0);
    const auto& st0 = src.stages.at(t0);
    ExactMatrix e0 = ExactMatrix::identity(static_cast<int>(st0.total));
    ExactMatrix surv = impl_->push_h(src, t0, T, e0);

    // A: stage-T action on classes
    const auto& stT = src.stages.at(T);
    ExactMatrix idT = ExactMatrix::identity(static_cast<int>(stT.total));
    std::vector<Vector> labels = impl_->h_coords_to_labels(src, T, idT);
    std::vector<Vector> mapped = impl_->mul_labels(n, T, labels, h, n + d, i);
    ExactMatrix a = impl_->labels_to_h(tgt, T, mapped);

    long rank_e = rank(surv);
    long rank_ae = rank(a * surv);
    out.surviving_kernel_dim = rank_e - rank_ae;
    out.injective = (out.surviving_kernel_dim == 0);
    return out;
}

CechContext::InjectionEvidence CechContext::joint_injection_evidence(
    const std::vector<MultiPoly>& hs, int i, long n) {
    if (hs.empty()) throw InputError("joint injection evidence needs at least one multiplier");
    auto& src = impl_->ensure_data(i, n);
    InjectionEvidence out;
    int T = src.last_stage;
    out.horizon_stage = T;
    if (src.first_informative < 0) return out;
    int t0 = src.first_informative;
    impl_->compute_stage(src, t0);
    const auto& st0 = src.stages.at(t0);
    ExactMatrix surv =
        impl_->push_h(src, t0, T, ExactMatrix::identity(static_cast<int>(st0.total)));

    const auto& stT = src.stages.at(T);
    ExactMatrix idT = ExactMatrix::identity(static_cast<int>(stT.total));
    std::vector<Vector> labels = impl_->h_coords_to_labels(src, T, idT);
    std::vector<ExactMatrix> mapped;
    long total_rows = 0;
    for (const auto& h : hs) {
        if (h.is_zero() || !h.is_homogeneous())
            throw InputError("joint injection evidence requires nonzero homogeneous multipliers");
        auto& tgt = impl_->ensure_data(i, n + h.degree());
        impl_->compute_stage(tgt, T);
        std::vector<Vector> hl = impl_->mul_labels(n, T, labels, h, n + h.degree(), i);
        mapped.push_back(impl_->labels_to_h(tgt, T, hl) * surv);
        total_rows += mapped.back().rows();
    }
    ExactMatrix stacked(static_cast<int>(total_rows), surv.cols());
    int row0 = 0;
    for (const auto& blockm : mapped) {
        for (int r2 = 0; r2 < blockm.rows(); ++r2)
            for (int c2 = 0; c2 < blockm.cols(); ++c2) stacked.at(row0 + r2, c2) = blockm.at(r2, c2);
        row0 += blockm.rows();
    }
    out.surviving_kernel_dim = rank(surv) - rank(stacked);
    out.injective = (out.surviving_kernel_dim == 0);
    return out;
}

long CechContext::eventual_kernel_dim(const MultiPoly& h, int i, long n) {
    const ComponentDim& c0 = component(i, n);
    if (!c0.finite()) throw DivergentSliceError("eventual kernel needs a finite component");
    if (c0.dim == 0) return 0;
    long d = h.degree();
    ExactMatrix acc = multiplication_action(h, i, n);
    long prev = -1;
    for (int step = 1;; ++step) {
        long kd = static_cast<long>(kernel_basis(acc).size());
        if (kd == prev) return kd;
        if (kd == c0.dim) return kd;
        prev = kd;
        ExactMatrix next = multiplication_action(h, i, n + step * d);
        acc = next * acc;
        if (step > c0.dim + 2) return kd; // chain must have stabilized
    }
}

long CechContext::outer_h0_dim(const std::vector<MultiPoly>& outer_gens, int i, long n) {
    const ComponentDim& c0 = component(i, n);
    if (!c0.finite()) throw DivergentSliceError("outer H^0 needs a finite component");
    if (c0.dim == 0) return 0;
    if (outer_gens.empty()) return c0.dim; // H^0 over the zero ideal is the module itself
    // joint eventual kernel: stack the stabilized iterated actions
    std::vector<Vector> stacked_rows;
    for (const auto& g : outer_gens) {
        if (g.is_zero() || !g.is_homogeneous())
            throw InputError("outer ideal generators must be nonzero homogeneous");
        long d = g.degree();
        ExactMatrix acc = multiplication_action(g, i, n);
        long prev = -1;
        for (int step = 1;; ++step) {
            long kd = static_cast<long>(kernel_basis(acc).size());
            if (kd == prev || kd == c0.dim) break;
            prev = kd;
            acc = multiplication_action(g, i, n + step * d) * acc;
            if (step > c0.dim + 2) break;
        }
        for (int row = 0; row < acc.rows(); ++row) {
            Vector v(static_cast<std::size_t>(acc.cols()));
            for (int col = 0; col < acc.cols(); ++col) v[col] = acc.at(row, col);
            stacked_rows.push_back(std::move(v));
        }
    }
    ExactMatrix stack(static_cast<int>(stacked_rows.size()), static_cast<int>(c0.dim));
    for (std::size_t rix = 0; rix < stacked_rows.size(); ++rix)
        for (long col = 0; col < c0.dim; ++col) stack.at(static_cast<int>(rix), static_cast<int>(col)) = stacked_rows[rix][col];
    return static_cast<long>(kernel_basis(stack).size());
}

bool CechContext::check_boundary_square_zero(int i, long n, int t) {
    auto& im = *impl_;
    if (i < 1 || i + 1 > im.r) return true;
    auto lo = im.level(n, t, i - 1, true);
    auto mid = im.level(n, t, i, true);
    auto hi = im.level(n, t, i + 1, true);
    ExactMatrix d1 = im.boundary_matrix(*lo, *mid, t);
    ExactMatrix d2 = im.boundary_matrix(*mid, *hi, t);
    return (d2 * d1).is_zero();
}

bool CechContext::check_equivariance_identities(int i, long n, int t) {
    auto& im = *impl_;
    if (!group_) return true;
    auto projector = [&](const LevelSpace& ls) {
        ExactMatrix p(static_cast<int>(ls.label_dim()), static_cast<int>(ls.label_dim()));
        long offset = 0;
        int pos = 0;
        while (pos < static_cast<int>(ls.labels.size())) {
            int mask = ls.labels[pos].mask;
            int end = pos;
            while (end < static_cast<int>(ls.labels.size()) && ls.labels[end].mask == mask) ++end;
            long d = total_degree(ls.labels[pos].e);
            ExactMatrix blk(static_cast<int>(end - pos), static_cast<int>(end - pos));
            for (const auto& sigma : group_->elements)
                blk = blk + action_on_slice(sigma, m_, d);
            blk = blk.scalar_mul(FieldElement(Rational(1, group_->order())));
            for (int a = 0; a < blk.rows(); ++a)
                for (int b = 0; b < blk.cols(); ++b) p.at(static_cast<int>(offset) + a, static_cast<int>(offset) + b) = blk.at(a, b);
            offset += end - pos;
            pos = end;
        }
        return p;
    };
    bool ok = true;
    auto mid = im.level(n, t, i, true);
    ExactMatrix p_mid = projector(*mid);
    if (i + 1 <= im.r) {
        auto hi = im.level(n, t, i + 1, true);
        ExactMatrix d = im.boundary_matrix(*mid, *hi, t);
        ok = ok && (d * p_mid == projector(*hi) * d);
    }
    if (i >= 1) {
        auto lo = im.level(n, t, i - 1, true);
        ExactMatrix d = im.boundary_matrix(*lo, *mid, t);
        ok = ok && (d * projector(*lo) == p_mid * d);
    }
    {
        // transition commutes with the projector
        auto next = im.level(n, t + 1, i, true);
        ExactMatrix tr = im.work_matrix(*mid, *next, [&im](const Label& lab, LabelVec& out) {
            Impl::emit_mul(lab, im.mask_product(lab.mask), lab.mask, FieldElement::one(), out);
        });
        ok = ok && (tr * p_mid == projector(*next) * tr);
    }
    return ok;
}

long CohomologyModule::slice_dim(long n) {
    const ComponentDim& c = ctx_->component(i_, n);
    if (!c.finite())
        throw DivergentSliceError("divergent component at internal degree " + std::to_string(n));
    return c.dim;
}

bool CohomologyModule::slice_finite(long n) {
    return ctx_->component(i_, n).finite();
}

ExactMatrix CohomologyModule::action_matrix(const RingElem& h, long n) {
    if (h.dual) return ctx_->dual_action(h.p, i_, n);
    return ctx_->multiplication_action(h.p, i_, n);
}

// ------------------------- coset machinery -------------------------

namespace {

TailFit fit_tail(const std::vector<long>& values, long t_lo, int m, bool suffix) {
    // find the largest window (suffix or prefix) on which Delta^m vanishes
    TailFit fit;
    int npts = static_cast<int>(values.size());
    if (npts < m + 1) return fit;
    std::vector<std::vector<Rational>> diff(m + 1);
    diff[0].assign(values.begin(), values.end());
    for (int k = 1; k <= m; ++k) {
        diff[k].resize(diff[k - 1].size() - 1);
        for (std::size_t j = 0; j + 1 < diff[k - 1].size(); ++j)
            diff[k][j] = diff[k - 1][j + 1] - diff[k - 1][j];
    }
    auto window_ok = [&](int a, int b) {
        // all Delta^m values with base points inside [a, b]
        for (int j = a; j + m <= b; ++j)
            if (diff[m][j] != 0) return false;
        return true;
    };
    int a = -1, b = -1;
    if (suffix) {
        b = npts - 1;
        for (int start = npts - 1 - m; start >= 0; --start) {
            if (window_ok(start, b)) a = start;
            else break;
        }
        if (a < 0) return fit;
    } else {
        a = 0;
        for (int end = m; end < npts; ++end) {
            if (window_ok(a, end)) b = end;
            else break;
        }
        if (b < 0) return fit;
    }
    fit.fitted = true;
    fit.window_from = t_lo + a;
    fit.window_to = t_lo + b;
    // Newton polynomial from the window start: p(t) = sum_k D_k[a] * C(t - t0, k)
    long t0 = t_lo + a;
    std::vector<Rational> coeffs{Rational(0)};
    int degree = -1;
    for (int k = 0; k < m + 1 && k <= b - a; ++k) {
        if (k == m) break;
        Rational dk = diff[k][a];
        if (dk == 0) continue;
        degree = std::max(degree, k);
        // expand C(t - t0, k) = prod_{i=0..k-1} (t - t0 - i) / k!
        std::vector<Rational> poly{Rational(1)};
        Rational kfact(1);
        for (int i = 0; i < k; ++i) {
            std::vector<Rational> next(poly.size() + 1, Rational(0));
            Rational shift(-(t0 + i));
            for (std::size_t q = 0; q < poly.size(); ++q) {
                next[q] += poly[q] * shift;
                next[q + 1] += poly[q];
            }
            poly = std::move(next);
            kfact *= (i + 1);
        }
        if (coeffs.size() < poly.size()) coeffs.resize(poly.size(), Rational(0));
        for (std::size_t q = 0; q < poly.size(); ++q) coeffs[q] += dk * poly[q] / kfact;
    }
    while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
    fit.coeffs = std::move(coeffs);
    fit.degree = degree;
    return fit;
}

} // namespace

Rational tail_fit_eval(const TailFit& fit, long t) {
    Rational acc(0), power(1);
    for (const auto& c : fit.coeffs) {
        acc += c * power;
        power *= t;
    }
    return acc;
}

CosetProfile coset_profile(CechContext& ctx, int i, long c, long residue,
                           long t_lo, long t_hi) {
    if (residue < 0 || residue >= c) throw InputError("coset residue out of range [0, c)");
    if (t_lo > t_hi) throw InputError("empty coset range");
    CosetProfile prof;
    prof.c = c;
    prof.residue = residue;
    prof.i = i;
    bool all_finite = true;
    std::optional<ComponentDim::Kind> kind_seen;
    for (long t = t_lo; t <= t_hi; ++t) {
        CosetEntry entry;
        entry.t = t;
        entry.n = residue + c * t;
        try {
            entry.value = ctx.component(i, entry.n);
        } catch (const UndeterminedError& e) {
            entry.note = e.what();
            prof.any_undetermined = true;
        }
        if (entry.value) {
            if (!entry.value->finite()) all_finite = false;
            if (!kind_seen) kind_seen = entry.value->kind;
            else if (*kind_seen != entry.value->kind) prof.dichotomy_ok = false;
        }
        prof.entries.push_back(std::move(entry));
    }
    if (!prof.any_undetermined && all_finite && !prof.entries.empty()) {
        std::vector<long> values;
        for (const auto& e : prof.entries) values.push_back(e.value->dim);
        int m = ctx.num_vars();
        prof.alpha = fit_tail(values, t_lo, m, /*suffix=*/true);
        prof.beta = fit_tail(values, t_lo, m, /*suffix=*/false);
        if (!prof.alpha->fitted || !prof.beta->fitted) prof.degree_alarm = true;
        if (prof.alpha->degree > m - 1 || prof.beta->degree > m - 1) prof.degree_alarm = true;
    }
    return prof;
}

} // namespace invlab
