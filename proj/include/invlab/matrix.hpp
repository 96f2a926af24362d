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

#ifndef INVLAB_MATRIX_HPP
#define INVLAB_MATRIX_HPP

#include <optional>
#include <vector>

#include "invlab/field.hpp"

namespace invlab {

using Vector = std::vector<FieldElement>;

/// Dense matrix over the ground field, row major. Exact arithmetic only.
class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols) {}

    static ExactMatrix identity(int n);
    static ExactMatrix from_columns(int rows, const std::vector<Vector>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    FieldElement& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    const FieldElement& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    ExactMatrix scalar_mul(const FieldElement& c) const;
    Vector apply(const Vector& v) const;
    ExactMatrix transpose() const;
    bool operator==(const ExactMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
    bool operator!=(const ExactMatrix& o) const { return !(*this == o); }
    bool is_zero() const;
    Vector column(int j) const;

private:
    int rows_, cols_;
    std::vector<FieldElement> e_;
};

long rank(const ExactMatrix& m);

/// Basis of { x : M x = 0 }, deterministic (free variables in column order).
std::vector<Vector> kernel_basis(const ExactMatrix& m);

/// Solves A X = B column by column; nullopt when any column is inconsistent.
std::optional<ExactMatrix> solve_columns(const ExactMatrix& a, const ExactMatrix& b);

/// Indices of a deterministic maximal independent subset of the columns.
std::vector<int> column_space_pivots(const ExactMatrix& m);

ExactMatrix inverse(const ExactMatrix& m); // throws InputError when singular

FieldElement determinant(const ExactMatrix& m);

/// An incremental row-reduced span of vectors; used for degreewise span
/// pruning and basis extension.
class VectorSpan {
public:
    explicit VectorSpan(int dim) : dim_(dim) {}
    int dim() const { return dim_; }
    long rank() const { return static_cast<long>(rows_.size()); }
    /// Reduce v against the span; returns the residual.
    Vector reduce(Vector v) const;
    bool contains(const Vector& v) const;
    /// Insert if independent; true when the span grew.
    bool insert(Vector v);

private:
    int dim_;
    std::vector<Vector> rows_;    // row echelon, each with leading 1 at pivot
    std::vector<int> pivots_;     // pivot position per row
};

/// ker/img subquotient with an explicit representative basis and coordinate
/// maps; the homology workhorse.
///
/// Built from an ambient dimension, a spanning set of the kernel (cycles)
/// and a spanning set of the image (boundaries, contained in the kernel).
class Subquotient {
public:
    Subquotient(int ambient_dim, const std::vector<Vector>& kernel_vecs,
                const std::vector<Vector>& image_vecs);

    int ambient_dim() const { return ambient_; }
    long dim() const { return static_cast<long>(rep_indices_.size()); }
    /// Representative vectors (ambient coordinates) of the homology basis.
    const std::vector<Vector>& representatives() const { return reps_; }

    /// Coordinates of ambient vectors (which must lie in the kernel span)
    /// in the homology basis, as a dim() x n matrix for n inputs.
    ExactMatrix coords(const std::vector<Vector>& vecs) const;

private:
    int ambient_;
    std::vector<Vector> image_;       // spanning set actually used (independent)
    std::vector<Vector> reps_;
    std::vector<int> rep_indices_;    // positions of reps among kernel input (diagnostic)
};

} // namespace invlab

#endif
