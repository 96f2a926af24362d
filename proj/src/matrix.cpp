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

#include "invlab/matrix.hpp"

namespace invlab {

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = FieldElement::one();
    return m;
}

ExactMatrix ExactMatrix::from_columns(int rows, const std::vector<Vector>& cols) {
    ExactMatrix m(rows, static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols_; ++j) {
        if (static_cast<int>(cols[j].size()) != rows) throw InputError("column length mismatch");
        for (int i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_) throw InputError("matrix product shape mismatch");
    ExactMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const FieldElement& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const FieldElement& b = o.at(k, j);
                if (b.is_zero()) continue;
                r.at(i, j) += a * b;
            }
        }
    }
    return r;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix sum shape mismatch");
    ExactMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix difference shape mismatch");
    ExactMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

ExactMatrix ExactMatrix::scalar_mul(const FieldElement& c) const {
    ExactMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * c;
    return r;
}

Vector ExactMatrix::apply(const Vector& v) const {
    if (static_cast<int>(v.size()) != cols_) throw InputError("matrix apply shape mismatch");
    Vector r(rows_, FieldElement::zero());
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero() || v[j].is_zero()) continue;
            r[i] += at(i, j) * v[j];
        }
    }
    return r;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool ExactMatrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

Vector ExactMatrix::column(int j) const {
    Vector v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

namespace {

// In-place reduced row echelon form. Returns (pivot row, pivot col) pairs in
// order. Deterministic: first nonzero entry scanning rows downward.
std::vector<std::pair<int, int>> rref_inplace(ExactMatrix& m) {
    std::vector<std::pair<int, int>> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pr = -1;
        for (int i = row; i < m.rows(); ++i) {
            if (!m.at(i, col).is_zero()) { pr = i; break; }
        }
        if (pr < 0) continue;
        if (pr != row) {
            for (int j = col; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(row, j));
        }
        FieldElement inv = m.at(row, col).inverse();
        for (int j = col; j < m.cols(); ++j) {
            if (!m.at(row, j).is_zero()) m.at(row, j) = m.at(row, j) * inv;
        }
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row) continue;
            const FieldElement& f = m.at(i, col);
            if (f.is_zero()) continue;
            FieldElement factor = f;
            for (int j = col; j < m.cols(); ++j) {
                if (m.at(row, j).is_zero()) continue;
                m.at(i, j) -= factor * m.at(row, j);
            }
        }
        pivots.emplace_back(row, col);
        ++row;
    }
    return pivots;
}

} // namespace

long rank(const ExactMatrix& m) {
    ExactMatrix copy = m;
    return static_cast<long>(rref_inplace(copy).size());
}

std::vector<Vector> kernel_basis(const ExactMatrix& m) {
    ExactMatrix r = m;
    auto pivots = rref_inplace(r);
    std::vector<int> pivot_of_col(m.cols(), -1);
    for (auto [pr, pc] : pivots) pivot_of_col[pc] = pr;
    std::vector<Vector> basis;
    for (int col = 0; col < m.cols(); ++col) {
        if (pivot_of_col[col] >= 0) continue;
        Vector v(m.cols(), FieldElement::zero());
        v[col] = FieldElement::one();
        for (auto [pr, pc] : pivots) v[pc] = -r.at(pr, col);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<ExactMatrix> solve_columns(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows() != b.rows()) throw InputError("solve shape mismatch");
    ExactMatrix aug(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) aug.at(i, a.cols() + j) = b.at(i, j);
    }
    auto pivots = rref_inplace(aug);
    ExactMatrix x(a.cols(), b.cols());
    for (auto [pr, pc] : pivots) {
        if (pc >= a.cols()) return std::nullopt; // pivot escaped into rhs: inconsistent
        for (int j = 0; j < b.cols(); ++j) x.at(pc, j) = aug.at(pr, a.cols() + j);
    }
    return x;
}

std::vector<int> column_space_pivots(const ExactMatrix& m) {
    ExactMatrix copy = m;
    auto pivots = rref_inplace(copy);
    std::vector<int> cols;
    cols.reserve(pivots.size());
    for (auto [pr, pc] : pivots) cols.push_back(pc);
    return cols;
}

ExactMatrix inverse(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw InputError("inverse of non-square matrix");
    int n = m.rows();
    ExactMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = FieldElement::one();
    }
    auto pivots = rref_inplace(aug);
    int left_pivots = 0;
    for (auto [pr, pc] : pivots)
        if (pc < n) ++left_pivots;
    if (left_pivots != n) throw InputError("matrix is singular");
    ExactMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

FieldElement determinant(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw InputError("determinant of non-square matrix");
    ExactMatrix a = m;
    int n = a.rows();
    FieldElement det = FieldElement::one();
    for (int col = 0; col < n; ++col) {
        int pr = -1;
        for (int i = col; i < n; ++i) {
            if (!a.at(i, col).is_zero()) { pr = i; break; }
        }
        if (pr < 0) return FieldElement::zero();
        if (pr != col) {
            for (int j = 0; j < n; ++j) std::swap(a.at(pr, j), a.at(col, j));
            det = -det;
        }
        det = det * a.at(col, col);
        FieldElement inv = a.at(col, col).inverse();
        for (int i = col + 1; i < n; ++i) {
            if (a.at(i, col).is_zero()) continue;
            FieldElement f = a.at(i, col) * inv;
            for (int j = col; j < n; ++j) {
                if (a.at(col, j).is_zero()) continue;
                a.at(i, j) -= f * a.at(col, j);
            }
        }
    }
    return det;
}

Vector VectorSpan::reduce(Vector v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const FieldElement& c = v[pivots_[k]];
        if (c.is_zero()) continue;
        FieldElement f = c;
        for (int j = 0; j < dim_; ++j) {
            if (rows_[k][j].is_zero()) continue;
            v[j] -= f * rows_[k][j];
        }
    }
    return v;
}

bool VectorSpan::contains(const Vector& v) const {
    Vector r = reduce(v);
    for (const auto& c : r)
        if (!c.is_zero()) return false;
    return true;
}

bool VectorSpan::insert(Vector v) {
    v = reduce(std::move(v));
    int pivot = -1;
    for (int j = 0; j < dim_; ++j) {
        if (!v[j].is_zero()) { pivot = j; break; }
    }
    if (pivot < 0) return false;
    FieldElement inv = v[pivot].inverse();
    for (auto& c : v)
        if (!c.is_zero()) c = c * inv;
    // keep earlier rows reduced against the new one
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const FieldElement& c = rows_[k][pivot];
        if (c.is_zero()) continue;
        FieldElement f = c;
        for (int j = 0; j < dim_; ++j) {
            if (v[j].is_zero()) continue;
            rows_[k][j] -= f * v[j];
        }
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
}

Subquotient::Subquotient(int ambient_dim, const std::vector<Vector>& kernel_vecs,
                         const std::vector<Vector>& image_vecs)
    : ambient_(ambient_dim) {
    VectorSpan span(ambient_dim);
    for (const auto& v : image_vecs) {
        if (span.insert(v)) image_.push_back(v);
    }
    for (std::size_t k = 0; k < kernel_vecs.size(); ++k) {
        if (span.insert(kernel_vecs[k])) {
            reps_.push_back(kernel_vecs[k]);
            rep_indices_.push_back(static_cast<int>(k));
        }
    }
}

ExactMatrix Subquotient::coords(const std::vector<Vector>& vecs) const {
    // [image | reps] x = v ; homology coordinates are the rep block.
    std::vector<Vector> cols = image_;
    cols.insert(cols.end(), reps_.begin(), reps_.end());
    ExactMatrix a = ExactMatrix::from_columns(ambient_, cols);
    ExactMatrix b = ExactMatrix::from_columns(ambient_, vecs);
    auto x = solve_columns(a, b);
    if (!x) throw Error("subquotient coordinates: vector outside kernel span");
    ExactMatrix h(static_cast<int>(reps_.size()), static_cast<int>(vecs.size()));
    for (int i = 0; i < h.rows(); ++i)
        for (int j = 0; j < h.cols(); ++j)
            h.at(i, j) = x->at(static_cast<int>(image_.size()) + i, j);
    return h;
}

} // namespace invlab
