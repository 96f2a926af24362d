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

#include "invlab/group.hpp"

#include <map>

namespace invlab {

int MatrixGroup::inverse_index(int a) const {
    for (int b = 0; b < order(); ++b)
        if (cayley[a][b] == identity_index) return b;
    throw Error("group element without inverse; closure is broken");
}

bool MatrixGroup::is_diagonal() const {
    for (const auto& g : elements) {
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                if (i != j && !g.at(i, j).is_zero()) return false;
    }
    return true;
}

MatrixGroup trivial_group(int m) {
    MatrixGroup g;
    g.dim = m;
    g.elements.push_back(ExactMatrix::identity(m));
    g.identity_index = 0;
    g.cayley = {{0}};
    return g;
}

namespace {

// Deterministic comparable key for dedup.
struct MatrixKey {
    std::vector<FieldElement> flat;
    bool operator<(const MatrixKey& o) const {
        if (flat.size() != o.flat.size()) return flat.size() < o.flat.size();
        for (std::size_t i = 0; i < flat.size(); ++i) {
            if (flat[i] != o.flat[i]) return flat[i] < o.flat[i];
        }
        return false;
    }
};

MatrixKey key_of(const ExactMatrix& m) {
    MatrixKey k;
    k.flat.reserve(static_cast<std::size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) k.flat.push_back(m.at(i, j));
    return k;
}

} // namespace

MatrixGroup close_group(const std::vector<ExactMatrix>& generators, int cap) {
    if (generators.empty()) throw InputError("close_group: at least the dimension is needed; pass trivial_group for no generators");
    int m = generators[0].rows();
    for (std::size_t k = 0; k < generators.size(); ++k) {
        const auto& g = generators[k];
        if (g.rows() != m || g.cols() != m)
            throw InputError("generator " + std::to_string(k + 1) + " is not " +
                             std::to_string(m) + "x" + std::to_string(m));
        if (determinant(g).is_zero())
            throw InputError("generator " + std::to_string(k + 1) + " is not invertible");
    }

    std::vector<ExactMatrix> elements;
    std::map<MatrixKey, int> index_of;
    auto add = [&](const ExactMatrix& g) -> int {
        MatrixKey k = key_of(g);
        auto it = index_of.find(k);
        if (it != index_of.end()) return it->second;
        if (static_cast<int>(elements.size()) >= cap)
            throw ResourceLimitError("group closure exceeded cap " + std::to_string(cap));
        elements.push_back(g);
        int idx = static_cast<int>(elements.size()) - 1;
        index_of.emplace(std::move(k), idx);
        return idx;
    };

    int identity_index = add(ExactMatrix::identity(m));
    for (const auto& g : generators) add(g);

    // closure under products; inverses follow from finiteness
    for (std::size_t i = 0; i < elements.size(); ++i) {
        for (std::size_t j = 0; j < elements.size(); ++j) {
            add(elements[i] * elements[j]);
        }
    }

    MatrixGroup group;
    group.dim = m;
    group.identity_index = identity_index;
    group.elements = elements;
    int n = group.order();
    group.cayley.assign(n, std::vector<int>(n, -1));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            MatrixKey k = key_of(elements[a] * elements[b]);
            auto it = index_of.find(k);
            if (it == index_of.end()) throw Error("closure is not closed; internal error");
            group.cayley[a][b] = it->second;
        }
    }
    return group;
}

MultiPoly act_on_poly(const ExactMatrix& sigma, const MultiPoly& p) {
    int m = p.num_vars();
    if (sigma.rows() != m || sigma.cols() != m)
        throw InputError("action dimension mismatch: " + std::to_string(sigma.rows()) +
                         "x" + std::to_string(sigma.cols()) + " on " + std::to_string(m) + " variables");
    std::vector<MultiPoly> images;
    images.reserve(m);
    for (int j = 0; j < m; ++j) {
        MultiPoly img(m);
        for (int i = 0; i < m; ++i) {
            if (sigma.at(i, j).is_zero()) continue;
            Exponents e(m, 0);
            e[i] = 1;
            img.add_term(e, sigma.at(i, j));
        }
        images.push_back(std::move(img));
    }
    return p.substitute_linear(images);
}

MultiPoly reynolds(const MultiPoly& p, const MatrixGroup& group) {
    MultiPoly sum(p.num_vars());
    for (const auto& sigma : group.elements) sum = sum + act_on_poly(sigma, p);
    return sum.scalar_mul(FieldElement(Rational(1, group.order())));
}

ExactMatrix action_on_slice(const ExactMatrix& sigma, int m, long n) {
    auto basis = monomials_of_degree(m, n);
    std::map<Exponents, int> index;
    for (std::size_t k = 0; k < basis.size(); ++k) index[basis[k]] = static_cast<int>(k);
    ExactMatrix a(static_cast<int>(basis.size()), static_cast<int>(basis.size()));
    for (std::size_t j = 0; j < basis.size(); ++j) {
        MultiPoly img = act_on_poly(sigma, MultiPoly::monomial(basis[j], FieldElement::one()));
        for (const auto& [e, c] : img.terms()) a.at(index.at(e), static_cast<int>(j)) = c;
    }
    return a;
}

namespace {

ExactMatrix reynolds_on_slice(const MatrixGroup& group, long n) {
    int m = group.dim;
    long dim = monomial_count(m, n);
    ExactMatrix p(static_cast<int>(dim), static_cast<int>(dim));
    for (const auto& sigma : group.elements) p = p + action_on_slice(sigma, m, n);
    return p.scalar_mul(FieldElement(Rational(1, group.order())));
}

} // namespace

long invariant_slice_dim(const MatrixGroup& group, long n) {
    if (n < 0) throw InputError("invariant_slice_dim: negative degree");
    if (n == 0) return 1;
    return rank(reynolds_on_slice(group, n));
}

std::vector<MultiPoly> invariant_slice_basis(const MatrixGroup& group, long n) {
    int m = group.dim;
    auto monos = monomials_of_degree(m, n);
    VectorSpan span(static_cast<int>(monos.size()));
    std::map<Exponents, int> index;
    for (std::size_t k = 0; k < monos.size(); ++k) index[monos[k]] = static_cast<int>(k);
    std::vector<MultiPoly> basis;
    for (const auto& mono : monos) {
        MultiPoly r = reynolds(MultiPoly::monomial(mono, FieldElement::one()), group);
        if (r.is_zero()) continue;
        Vector v(monos.size(), FieldElement::zero());
        for (const auto& [e, c] : r.terms()) v[index.at(e)] = c;
        if (span.insert(std::move(v))) basis.push_back(r.normalized_primitive());
    }
    return basis;
}

namespace {

// Dense univariate polynomial helpers over the field, for Molien series.
using Series = std::vector<FieldElement>;

Series poly_mul_trunc(const Series& a, const Series& b, int trunc) {
    Series r(std::min<std::size_t>(a.size() + b.size() - 1, trunc + 1), FieldElement::zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size() && i + j < r.size(); ++j) {
            if (b[j].is_zero()) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

// det(I - z * sigma) by expansion along the first row (m is small).
Series char_det(const ExactMatrix& sigma, const std::vector<int>& rows, const std::vector<int>& cols) {
    if (rows.empty()) return Series{FieldElement::one()};
    Series acc{FieldElement::zero()};
    int r0 = rows[0];
    for (std::size_t k = 0; k < cols.size(); ++k) {
        // entry of (I - z sigma) at (r0, cols[k])
        Series entry(2, FieldElement::zero());
        entry[0] = r0 == cols[k] ? FieldElement::one() : FieldElement::zero();
        entry[1] = -sigma.at(r0, cols[k]);
        if (entry[0].is_zero() && entry[1].is_zero()) continue;
        std::vector<int> sub_rows(rows.begin() + 1, rows.end());
        std::vector<int> sub_cols;
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != k) sub_cols.push_back(cols[j]);
        Series minor = char_det(sigma, sub_rows, sub_cols);
        Series term = poly_mul_trunc(entry, minor, static_cast<int>(rows.size()));
        if (k % 2 == 1) {
            for (auto& c : term) c = -c;
        }
        acc.resize(std::max(acc.size(), term.size()), FieldElement::zero());
        for (std::size_t i = 0; i < term.size(); ++i) acc[i] += term[i];
    }
    return acc;
}

// Inverse of a power series with constant term 1, to degree D.
Series series_inverse(const Series& a, int degree_bound) {
    Series inv(degree_bound + 1, FieldElement::zero());
    inv[0] = FieldElement::one();
    for (int n = 1; n <= degree_bound; ++n) {
        FieldElement s = FieldElement::zero();
        for (int k = 1; k <= n && k < static_cast<int>(a.size()); ++k) {
            if (a[k].is_zero() || inv[n - k].is_zero()) continue;
            s += a[k] * inv[n - k];
        }
        inv[n] = -s;
    }
    return inv;
}

} // namespace

std::vector<long> molien_series(const MatrixGroup& group, int degree_bound) {
    if (degree_bound < 0) throw InputError("molien_series: negative degree bound");
    int m = group.dim;
    std::vector<int> all(m);
    for (int i = 0; i < m; ++i) all[i] = i;
    Series total(degree_bound + 1, FieldElement::zero());
    for (const auto& sigma : group.elements) {
        Series det = char_det(sigma, all, all);
        Series inv = series_inverse(det, degree_bound);
        for (int i = 0; i <= degree_bound; ++i) total[i] += inv[i];
    }
    FieldElement scale = FieldElement(Rational(1, group.order()));
    std::vector<long> out(degree_bound + 1, 0);
    for (int i = 0; i <= degree_bound; ++i) {
        FieldElement c = total[i] * scale;
        if (!c.is_rational())
            throw Error("Molien coefficient is not rational; internal error");
        Rational r = c.rational_value();
        if (r.get_den() != 1)
            throw Error("Molien coefficient is not an integer; internal error");
        out[i] = static_cast<long>(r.get_num().get_si());
    }
    return out;
}

MatrixGroup contragredient_group(const MatrixGroup& group) {
    MatrixGroup dual = group;
    for (int a = 0; a < group.order(); ++a) {
        dual.elements[a] = inverse(group.elements[a]).transpose();
    }
    // g -> (g^{-1})^T is a homomorphism, so the Cayley table carries over.
    return dual;
}

} // namespace invlab
