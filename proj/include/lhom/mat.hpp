#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lhom/field.hpp"

namespace lhom {

/// Dense exact matrix over Q or F_p, row-major. A morphism from an object
/// of dimension n to one of dimension m is an m x n matrix acting on
/// column vectors. Immutable by convention once built.
class Mat {
public:
    Mat(FieldSpec f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(f)) {}

    static Mat identity(FieldSpec f, std::size_t n);
    static Mat zero(FieldSpec f, std::size_t rows, std::size_t cols) { return Mat(f, rows, cols); }
    static Mat from_ints(FieldSpec f, const std::vector<std::vector<long>>& rows);

    FieldSpec field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    bool is_zero() const;
    friend bool operator==(const Mat& a, const Mat& b);

    Mat operator*(const Mat& o) const;           // composition; InputError on shape/field mismatch
    Mat operator+(const Mat& o) const;
    Mat scaled(const Scalar& s) const;
    Mat transpose() const;

    std::vector<Scalar> apply(const std::vector<Scalar>& x) const;

    std::vector<Scalar> col(std::size_t c) const;
    Mat columns(const std::vector<std::size_t>& idx) const;

    static Mat hstack(const Mat& a, const Mat& b);
    static Mat kron(const Mat& a, const Mat& b);
    /// Block-diagonal sum: [a 0; 0 b].
    static Mat direct_sum(const Mat& a, const Mat& b);

    std::string str() const;  // for diagnostics

private:
    FieldSpec field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> a_;
};

struct RrefResult {
    Mat mat;
    std::vector<std::size_t> pivots;
};

/// Unique reduced row echelon form with deterministic pivoting (first
/// nonzero entry in column order). Pivot search is restricted to the
/// first `pivot_limit` columns; the rest are carried along (used for
/// augmented solving).
RrefResult rref(const Mat& m, std::size_t pivot_limit = static_cast<std::size_t>(-1));

std::size_t rank(const Mat& m);

/// Columns spanning a subspace of F^rows -> the canonical column basis:
/// the unique basis whose transpose is in reduced row echelon form with
/// no zero rows.
Mat canonical_colspan(const Mat& m);

/// Canonical basis of {x : m x = 0}; cols(m) - rank(m) columns.
Mat kernel(const Mat& m);

/// Canonical basis of the column space; rank(m) columns.
Mat image(const Mat& m);

/// Some x with m x = b, or nullopt when b is outside the column space.
/// Deterministic: free variables are zero under the rref parameterization.
std::optional<std::vector<Scalar>> solve(const Mat& m, const std::vector<Scalar>& b);

/// Column-wise solve of m X = B with one elimination; nullopt if any
/// column of B is outside the column space of m.
std::optional<Mat> solve_all(const Mat& m, const Mat& b);

}  // namespace lhom
