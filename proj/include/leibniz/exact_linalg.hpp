#pragma once

#include "leibniz/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

namespace leibniz {

/// Dense row-major matrix of exact rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows);
    static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns);
    /// Integer literal convenience, mostly for tests.
    static Matrix from_ints(std::initializer_list<std::initializer_list<long>> rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;

    Vector apply(const Vector& v) const;
    Matrix operator*(const Matrix& rhs) const;
    Matrix transpose() const;

    bool is_zero() const;
    bool operator==(const Matrix& other) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> entries_;
};

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivots; // strictly increasing
};

/// Linearly independent vectors in a fixed ambient space. The constructor
/// rejects dependent or wrongly sized input with PreconditionError.
class SubspaceBasis {
public:
    explicit SubspaceBasis(std::size_t ambient_dim, std::vector<Vector> vectors = {});

    std::size_t ambient_dim() const noexcept { return ambient_dim_; }
    std::size_t size() const noexcept { return vectors_.size(); }
    bool empty() const noexcept { return vectors_.empty(); }
    const std::vector<Vector>& vectors() const noexcept { return vectors_; }
    const Vector& operator[](std::size_t i) const { return vectors_[i]; }

    bool contains(const Vector& v) const;
    /// Mutual-membership test.
    bool same_span(const SubspaceBasis& other) const;

private:
    std::size_t ambient_dim_;
    std::vector<Vector> vectors_;
    RrefResult echelon_; // rref of the vectors stacked as rows
};

/// Reduced row echelon form. Pivot search scans each column top to bottom,
/// columns left to right.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Free-variable basis: one vector per non-pivot column, in increasing order.
SubspaceBasis kernel_basis(const Matrix& m);

/// The original pivot columns of m.
SubspaceBasis image_basis(const Matrix& m);

/// Particular solution with all free variables zero, or nullopt if m x = rhs
/// is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& rhs);

/// A complement of `sub` inside a larger span together with the coordinate
/// map onto that complement modulo `sub`.
class QuotientSpace {
public:
    /// Uses caller-chosen representatives; throws if they are not linearly
    /// independent modulo `sub`.
    static QuotientSpace with_representatives(const SubspaceBasis& sub,
                                              std::vector<Vector> representatives);

    const SubspaceBasis& sub() const noexcept { return sub_; }
    const SubspaceBasis& representatives() const noexcept { return reps_; }
    std::size_t dimension() const noexcept { return reps_.size(); }

    /// True iff v lies in span(sub + representatives).
    bool contains(const Vector& v) const;

    /// Coordinates of v on the representatives modulo sub. Throws
    /// PreconditionError if v is outside span(sub + representatives).
    Vector project(const Vector& v) const;

private:
    QuotientSpace(SubspaceBasis sub, SubspaceBasis reps);
    friend QuotientSpace quotient_representatives(const SubspaceBasis&, const SubspaceBasis&);

    SubspaceBasis sub_;
    SubspaceBasis reps_;
    Matrix left_inverse_; // rows 0..r-1 recover coordinates, rows r.. test membership
    std::size_t combined_ = 0;
};

/// Extends `sub` greedily by vectors of `full`, in order. Requires
/// span(sub) to be contained in span(full).
QuotientSpace quotient_representatives(const SubspaceBasis& sub, const SubspaceBasis& full);

} // namespace leibniz
