#include "leibniz/exact_linalg.hpp"

#include "leibniz/errors.hpp"

#include <string>
#include <utility>

namespace leibniz {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols, Scalar(0)) {}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows)
{
    if (rows.empty())
        return Matrix();
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_)
            throw PreconditionError("Matrix::from_rows: ragged rows");
        for (std::size_t c = 0; c < m.cols_; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& columns)
{
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows)
            throw PreconditionError("Matrix::from_columns: column length mismatch");
        for (std::size_t r = 0; r < rows; ++r)
            m(r, c) = columns[c][r];
    }
    return m;
}

Matrix Matrix::from_ints(std::initializer_list<std::initializer_list<long>> rows)
{
    std::vector<Vector> data;
    for (const auto& row : rows) {
        Vector v;
        for (long x : row)
            v.emplace_back(x);
        data.push_back(std::move(v));
    }
    return from_rows(data);
}

Vector Matrix::row(std::size_t r) const
{
    return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const
{
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

Vector Matrix::apply(const Vector& v) const
{
    if (v.size() != cols_)
        throw PreconditionError("Matrix::apply: dimension mismatch");
    Vector out(rows_, Scalar(0));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            const Scalar& a = (*this)(r, c);
            if (a != 0 && v[c] != 0)
                out[r] += a * v[c];
        }
    return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw PreconditionError("Matrix product: dimension mismatch");
    Matrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const Scalar& b = rhs(k, j);
                if (b != 0)
                    out(i, j) += a * b;
            }
        }
    return out;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const
{
    for (const auto& x : entries_)
        if (x != 0)
            return false;
    return true;
}

bool Matrix::operator==(const Matrix& other) const
{
    return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

RrefResult rref(const Matrix& m)
{
    RrefResult result{m, {}};
    Matrix& a = result.reduced;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::size_t r = 0;
    Scalar factor;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && a(pivot, c) == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != r)
            for (std::size_t j = c; j < cols; ++j)
                std::swap(a(pivot, j), a(r, j));
        if (a(r, c) != 1) {
            Scalar inv = 1 / a(r, c);
            for (std::size_t j = c; j < cols; ++j)
                if (a(r, j) != 0)
                    a(r, j) *= inv;
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, c) == 0)
                continue;
            factor = a(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (a(r, j) != 0)
                    a(i, j) -= factor * a(r, j);
        }
        result.pivots.push_back(c);
        ++r;
    }
    return result;
}

std::size_t rank(const Matrix& m)
{
    return rref(m).pivots.size();
}

namespace {

// Subtracts multiples of the echelon rows from v; zero result means v lies
// in their span.
void reduce_against(const RrefResult& echelon, Vector& v)
{
    for (std::size_t i = 0; i < echelon.pivots.size(); ++i) {
        Scalar coeff = v[echelon.pivots[i]];
        if (coeff == 0)
            continue;
        for (std::size_t j = 0; j < v.size(); ++j) {
            const Scalar& e = echelon.reduced(i, j);
            if (e != 0)
                v[j] -= coeff * e;
        }
    }
}

} // namespace

SubspaceBasis::SubspaceBasis(std::size_t ambient_dim, std::vector<Vector> vectors)
    : ambient_dim_(ambient_dim), vectors_(std::move(vectors))
{
    for (const auto& v : vectors_)
        if (v.size() != ambient_dim_)
            throw PreconditionError("SubspaceBasis: vector length " + std::to_string(v.size()) +
                                    " differs from ambient dimension " + std::to_string(ambient_dim_));
    if (vectors_.empty()) {
        echelon_.reduced = Matrix(0, ambient_dim_);
        return;
    }
    echelon_ = rref(Matrix::from_rows(vectors_));
    if (echelon_.pivots.size() != vectors_.size())
        throw PreconditionError("SubspaceBasis: vectors are linearly dependent");
}

bool SubspaceBasis::contains(const Vector& v) const
{
    if (v.size() != ambient_dim_)
        throw PreconditionError("SubspaceBasis::contains: dimension mismatch");
    Vector w = v;
    reduce_against(echelon_, w);
    return is_zero(w);
}

bool SubspaceBasis::same_span(const SubspaceBasis& other) const
{
    if (ambient_dim_ != other.ambient_dim_ || size() != other.size())
        return false;
    for (const auto& v : other.vectors_)
        if (!contains(v))
            return false;
    return true;
}

SubspaceBasis kernel_basis(const Matrix& m)
{
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : r.pivots)
        is_pivot[p] = true;

    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        Vector v(m.cols(), Scalar(0));
        v[free] = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i)
            v[r.pivots[i]] = -r.reduced(i, free);
        basis.push_back(std::move(v));
    }
    return SubspaceBasis(m.cols(), std::move(basis));
}

SubspaceBasis image_basis(const Matrix& m)
{
    RrefResult r = rref(m);
    std::vector<Vector> basis;
    basis.reserve(r.pivots.size());
    for (auto p : r.pivots)
        basis.push_back(m.column(p));
    return SubspaceBasis(m.rows(), std::move(basis));
}

std::optional<Vector> solve(const Matrix& m, const Vector& rhs)
{
    if (rhs.size() != m.rows())
        throw PreconditionError("solve: right-hand side has length " + std::to_string(rhs.size()) +
                                ", expected " + std::to_string(m.rows()));
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            aug(i, j) = m(i, j);
        aug(i, m.cols()) = rhs[i];
    }
    RrefResult r = rref(aug);
    if (!r.pivots.empty() && r.pivots.back() == m.cols())
        return std::nullopt;
    Vector x(m.cols(), Scalar(0));
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
        x[r.pivots[i]] = r.reduced(i, m.cols());
    return x;
}

QuotientSpace::QuotientSpace(SubspaceBasis sub, SubspaceBasis reps)
    : sub_(std::move(sub)), reps_(std::move(reps)), combined_(sub_.size() + reps_.size())
{
    const std::size_t n = sub_.ambient_dim();
    // rref([C | I]) = [E C | E]; with C of full column rank, E C = [I_r; 0].
    Matrix aug(n, combined_ + n);
    for (std::size_t c = 0; c < combined_; ++c) {
        const Vector& col = c < sub_.size() ? sub_[c] : reps_[c - sub_.size()];
        for (std::size_t r = 0; r < n; ++r)
            aug(r, c) = col[r];
    }
    for (std::size_t r = 0; r < n; ++r)
        aug(r, combined_ + r) = 1;
    RrefResult red = rref(aug);
    left_inverse_ = Matrix(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            left_inverse_(r, c) = red.reduced(r, combined_ + c);
}

QuotientSpace QuotientSpace::with_representatives(const SubspaceBasis& sub, std::vector<Vector> representatives)
{
    std::vector<Vector> all = sub.vectors();
    all.insert(all.end(), representatives.begin(), representatives.end());
    try {
        SubspaceBasis check(sub.ambient_dim(), std::move(all));
    } catch (const PreconditionError&) {
        throw PreconditionError("quotient: representatives are not independent modulo the subspace");
    }
    return QuotientSpace(sub, SubspaceBasis(sub.ambient_dim(), std::move(representatives)));
}

bool QuotientSpace::contains(const Vector& v) const
{
    Vector coords = left_inverse_.apply(v);
    for (std::size_t i = combined_; i < coords.size(); ++i)
        if (coords[i] != 0)
            return false;
    return true;
}

Vector QuotientSpace::project(const Vector& v) const
{
    if (v.size() != sub_.ambient_dim())
        throw PreconditionError("QuotientSpace::project: dimension mismatch");
    Vector coords = left_inverse_.apply(v);
    for (std::size_t i = combined_; i < coords.size(); ++i)
        if (coords[i] != 0)
            throw PreconditionError("QuotientSpace::project: vector outside the represented span");
    return Vector(coords.begin() + static_cast<std::ptrdiff_t>(sub_.size()),
                  coords.begin() + static_cast<std::ptrdiff_t>(combined_));
}

QuotientSpace quotient_representatives(const SubspaceBasis& sub, const SubspaceBasis& full)
{
    if (sub.ambient_dim() != full.ambient_dim())
        throw PreconditionError("quotient_representatives: ambient dimension mismatch");
    for (const auto& v : sub.vectors())
        if (!full.contains(v))
            throw PreconditionError("quotient_representatives: subspace is not contained in the full span");

    // Incremental echelon: rows keep zeros at every earlier pivot.
    std::vector<Vector> rows;
    std::vector<std::size_t> pivots;
    auto try_add = [&](Vector v) {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            Scalar coeff = v[pivots[i]];
            if (coeff == 0)
                continue;
            for (std::size_t j = 0; j < v.size(); ++j)
                if (rows[i][j] != 0)
                    v[j] -= coeff * rows[i][j];
        }
        std::size_t p = 0;
        while (p < v.size() && v[p] == 0)
            ++p;
        if (p == v.size())
            return false;
        Scalar inv = 1 / v[p];
        for (auto& x : v)
            x *= inv;
        rows.push_back(std::move(v));
        pivots.push_back(p);
        return true;
    };

    for (const auto& v : sub.vectors())
        try_add(v);
    std::vector<Vector> reps;
    for (const auto& v : full.vectors())
        if (try_add(v))
            reps.push_back(v);
    return QuotientSpace(sub, SubspaceBasis(sub.ambient_dim(), std::move(reps)));
}

} // namespace leibniz
