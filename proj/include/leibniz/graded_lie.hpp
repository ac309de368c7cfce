#pragma once

#include "leibniz/algebra.hpp"
#include "leibniz/cochain.hpp"

#include <cstddef>
#include <vector>

namespace leibniz {

/// A (p,q)-shuffle: image[0..p) and image[p..p+q) are each increasing.
/// Images are 0-based.
struct Shuffle {
    std::size_t p = 0;
    std::size_t q = 0;
    std::vector<std::size_t> image;
    int sign = 1;
};

/// All (p,q)-shuffles, lexicographic by image, generated from the
/// p-element subsets {image[0..p)} rather than by filtering S_{p+q}.
std::vector<Shuffle> shuffles(std::size_t p, std::size_t q);

/// Cochain of arity p+1 viewed as an element of graded degree p.
class GradedElement {
public:
    explicit GradedElement(Cochain cochain);

    std::size_t degree() const noexcept { return cochain_.arity() - 1; }
    const Cochain& cochain() const noexcept { return cochain_; }
    bool is_zero() const { return cochain_.is_zero(); }

    bool operator==(const GradedElement& other) const { return cochain_ == other.cochain_; }

private:
    Cochain cochain_;
};

/// a o b for deg a = p, deg b = q:
///   sum_{k=1}^{p+1} (-1)^{q(k-1)} sum_{s in Sh(q,p-k+1)} sgn(s)
///     a(x_1..x_{k-1}, b(x_k, x_s(k+1)..x_s(k+q)), x_s(k+q+1)..x_s(p+q+1)).
GradedElement circle(const GradedElement& a, const GradedElement& b);

/// [a,b] = a o b + (-1)^{pq+1} b o a.
GradedElement graded_bracket(const GradedElement& a, const GradedElement& b);

/// d a = (-1)^{deg a} delta(a).
GradedElement dgla_differential(const LeibnizAlgebra& alg, const GradedElement& a);

} // namespace leibniz
