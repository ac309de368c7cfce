#include "leibniz/cochain.hpp"

#include "leibniz/errors.hpp"

#include <string>
#include <utility>

namespace leibniz {

std::size_t ipow(std::size_t base, std::size_t exp)
{
    std::size_t r = 1;
    while (exp-- > 0)
        r *= base;
    return r;
}

Cochain::Cochain(std::size_t algebra_dim, std::size_t arity)
    : dim_(algebra_dim), arity_(arity), inputs_(ipow(algebra_dim, arity)),
      coords_(inputs_ * algebra_dim, Scalar(0))
{
}

Cochain Cochain::from_coordinates(std::size_t algebra_dim, std::size_t arity, Vector coords)
{
    Cochain c(algebra_dim, arity);
    if (coords.size() != c.coords_.size())
        throw PreconditionError("Cochain: expected " + std::to_string(c.coords_.size()) + " coordinates, got " +
                                std::to_string(coords.size()));
    c.coords_ = std::move(coords);
    return c;
}

std::size_t Cochain::tuple_index(std::span<const std::size_t> inputs) const
{
    if (inputs.size() != arity_)
        throw PreconditionError("Cochain: expected " + std::to_string(arity_) + " inputs");
    std::size_t idx = 0;
    for (auto i : inputs) {
        if (i >= dim_)
            throw PreconditionError("Cochain: input index out of range");
        idx = idx * dim_ + i;
    }
    return idx;
}

std::vector<std::size_t> Cochain::decode_tuple(std::size_t index) const
{
    std::vector<std::size_t> t(arity_);
    for (std::size_t pos = arity_; pos-- > 0;) {
        t[pos] = index % dim_;
        index /= dim_;
    }
    return t;
}

Vector Cochain::value(std::size_t tuple) const
{
    auto first = coords_.begin() + static_cast<std::ptrdiff_t>(tuple * dim_);
    return Vector(first, first + static_cast<std::ptrdiff_t>(dim_));
}

void Cochain::set_value(std::span<const std::size_t> inputs, const Vector& v)
{
    if (v.size() != dim_)
        throw PreconditionError("Cochain::set_value: value has wrong length");
    std::size_t t = tuple_index(inputs);
    for (std::size_t k = 0; k < dim_; ++k)
        coords_[t * dim_ + k] = v[k];
}

Vector Cochain::evaluate(std::span<const Vector> args) const
{
    if (args.size() != arity_)
        throw PreconditionError("Cochain::evaluate: expected " + std::to_string(arity_) + " arguments");
    for (const auto& a : args)
        if (a.size() != dim_)
            throw PreconditionError("Cochain::evaluate: argument has wrong length");

    Vector out = zero_vector(dim_);
    // Odometer over the support of each argument.
    std::vector<std::vector<std::size_t>> support(arity_);
    for (std::size_t pos = 0; pos < arity_; ++pos) {
        for (std::size_t i = 0; i < dim_; ++i)
            if (args[pos][i] != 0)
                support[pos].push_back(i);
        if (support[pos].empty())
            return out;
    }
    std::vector<std::size_t> cursor(arity_, 0);
    Scalar coeff;
    while (true) {
        std::size_t idx = 0;
        coeff = 1;
        for (std::size_t pos = 0; pos < arity_; ++pos) {
            std::size_t i = support[pos][cursor[pos]];
            idx = idx * dim_ + i;
            coeff *= args[pos][i];
        }
        for (std::size_t k = 0; k < dim_; ++k) {
            const Scalar& c = coords_[idx * dim_ + k];
            if (c != 0)
                out[k] += coeff * c;
        }
        std::size_t pos = arity_;
        while (pos > 0) {
            --pos;
            if (++cursor[pos] < support[pos].size())
                break;
            cursor[pos] = 0;
            if (pos == 0)
                return out;
        }
        if (arity_ == 0)
            return out;
    }
}

bool Cochain::is_zero() const
{
    return leibniz::is_zero(coords_);
}

void Cochain::require_compatible(const Cochain& other) const
{
    if (dim_ != other.dim_ || arity_ != other.arity_)
        throw PreconditionError("Cochain: arity or dimension mismatch");
}

Cochain& Cochain::operator+=(const Cochain& other)
{
    require_compatible(other);
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (other.coords_[i] != 0)
            coords_[i] += other.coords_[i];
    return *this;
}

Cochain& Cochain::operator-=(const Cochain& other)
{
    require_compatible(other);
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (other.coords_[i] != 0)
            coords_[i] -= other.coords_[i];
    return *this;
}

Cochain& Cochain::operator*=(const Scalar& s)
{
    for (auto& x : coords_)
        x *= s;
    return *this;
}

} // namespace leibniz
