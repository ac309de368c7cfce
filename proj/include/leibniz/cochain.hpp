#pragma once

#include "leibniz/scalar.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace leibniz {

/// n^p to the power helper used for cochain sizes.
std::size_t ipow(std::size_t base, std::size_t exp);

/// A p-linear map L^{(x)p} -> L, stored densely.
///
/// Coordinates are laid out lexicographically in the input tuple
/// (i_1, ..., i_p) with the output basis index varying fastest:
///   coordinate = tuple_index(i_1..i_p) * n + k.
/// A 0-cochain has a single input tuple and is just a vector.
class Cochain {
public:
    Cochain() = default;
    Cochain(std::size_t algebra_dim, std::size_t arity);
    static Cochain from_coordinates(std::size_t algebra_dim, std::size_t arity, Vector coords);

    std::size_t algebra_dim() const noexcept { return dim_; }
    std::size_t arity() const noexcept { return arity_; }
    std::size_t num_inputs() const noexcept { return inputs_; }

    const Vector& coordinates() const noexcept { return coords_; }

    std::size_t tuple_index(std::span<const std::size_t> inputs) const;
    std::vector<std::size_t> decode_tuple(std::size_t index) const;

    const Scalar& at(std::size_t tuple, std::size_t k) const { return coords_[tuple * dim_ + k]; }
    Scalar& at(std::size_t tuple, std::size_t k) { return coords_[tuple * dim_ + k]; }

    Vector value(std::size_t tuple) const;
    Vector value(std::span<const std::size_t> inputs) const { return value(tuple_index(inputs)); }
    void set_value(std::span<const std::size_t> inputs, const Vector& v);

    /// Multilinear evaluation on arbitrary argument vectors.
    Vector evaluate(std::span<const Vector> args) const;

    bool is_zero() const;

    Cochain& operator+=(const Cochain& other);
    Cochain& operator-=(const Cochain& other);
    Cochain& operator*=(const Scalar& s);
    friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
    friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
    friend Cochain operator*(const Scalar& s, Cochain a) { return a *= s; }
    friend Cochain operator-(Cochain a) { return a *= Scalar(-1); }
    bool operator==(const Cochain& other) const
    {
        return dim_ == other.dim_ && arity_ == other.arity_ && coords_ == other.coords_;
    }

private:
    void require_compatible(const Cochain& other) const;

    std::size_t dim_ = 0;
    std::size_t arity_ = 0;
    std::size_t inputs_ = 1;
    Vector coords_;
};

} // namespace leibniz
