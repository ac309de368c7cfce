#pragma once

#include "leibniz/scalar.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace leibniz {

/// Exponent vector over the generators t_1..t_m.
using Monomial = std::vector<unsigned>;

unsigned total_degree(const Monomial& m);
Monomial multiply(const Monomial& a, const Monomial& b);

/// Graded lexicographic order with t_1 > t_2 > ... (strict less-than).
bool grlex_less(const Monomial& a, const Monomial& b);

/// Iteration and display order: total degree ascending, then the larger
/// monomial in lex order first. Gives 1, t, s, t^2, t*s, s^2, ...
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

using PolyTerms = std::map<Monomial, Scalar, MonomialOrder>;

/// "1", "t", "t^2*s".
std::string to_string(const Monomial& m, const std::vector<std::string>& names);
/// "0", "t - 1/2*s^2".
std::string to_string(const PolyTerms& p, const std::vector<std::string>& names);

/// A = K[t_1..t_m] / (m^{k+1} + relations), m = (t_1..t_m).
///
/// The relation ideal is handled inside the truncated ring: the span of
/// all monomial multiples of the relations is row reduced with columns in
/// descending grlex order. Pivot columns are the leading monomials; the
/// remaining monomials are standard and form a basis of A.
class LocalBase {
public:
    /// Polynomial ring truncated at total degree `order`, optionally with
    /// relations. Relations must have zero constant term and use only the
    /// given generators.
    LocalBase(std::vector<std::string> generators, unsigned order, std::vector<PolyTerms> relations = {});

    /// t, s for up to two generators, t1..th otherwise.
    static std::vector<std::string> default_generator_names(std::size_t h);

    std::size_t num_generators() const noexcept;
    const std::vector<std::string>& generators() const noexcept;
    unsigned order() const noexcept;
    const std::vector<PolyTerms>& relations() const noexcept;

    /// Monomials of degree <= order not in the leading-term ideal, in
    /// MonomialOrder. Always starts with the unit monomial.
    const std::vector<Monomial>& standard_monomials() const noexcept;
    std::vector<Monomial> standard_monomials_of_degree(unsigned d) const;
    /// Leading monomials of the reduced ideal basis.
    std::vector<Monomial> leading_monomials() const;
    bool is_standard(const Monomial& m) const;

    /// Drops terms above the truncation order and rewrites leading
    /// monomials in terms of standard ones.
    PolyTerms reduce(const PolyTerms& p) const;

    LocalBase with_order(unsigned order) const;
    LocalBase with_relations(const std::vector<PolyTerms>& extra) const;

    Monomial unit() const;
    Monomial generator_monomial(std::size_t i) const;

    /// "K[t,s] / (m^4)" or "K[t] / (m^4 + (t^2))".
    std::string describe() const;

    /// Same generators, order and ideal.
    bool operator==(const LocalBase& other) const;

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

/// Element of a LocalBase, always stored in normal form.
class TruncatedPolynomial {
public:
    explicit TruncatedPolynomial(LocalBase base);
    TruncatedPolynomial(LocalBase base, const PolyTerms& terms);

    static TruncatedPolynomial constant(LocalBase base, const Scalar& c);
    static TruncatedPolynomial generator(LocalBase base, std::size_t i);
    static TruncatedPolynomial monomial(LocalBase base, const Monomial& m, const Scalar& c = 1);

    const LocalBase& base() const noexcept { return base_; }
    const PolyTerms& terms() const noexcept { return terms_; }

    Scalar coefficient(const Monomial& m) const;
    Scalar constant_term() const;
    bool is_zero() const noexcept { return terms_.empty(); }

    TruncatedPolynomial& operator+=(const TruncatedPolynomial& other);
    TruncatedPolynomial& operator-=(const TruncatedPolynomial& other);
    TruncatedPolynomial& operator*=(const TruncatedPolynomial& other);
    TruncatedPolynomial& operator*=(const Scalar& s);

    friend TruncatedPolynomial operator+(TruncatedPolynomial a, const TruncatedPolynomial& b) { return a += b; }
    friend TruncatedPolynomial operator-(TruncatedPolynomial a, const TruncatedPolynomial& b) { return a -= b; }
    friend TruncatedPolynomial operator*(TruncatedPolynomial a, const TruncatedPolynomial& b) { return a *= b; }
    friend TruncatedPolynomial operator*(const Scalar& s, TruncatedPolynomial a) { return a *= s; }

    bool operator==(const TruncatedPolynomial& other) const;

    std::string to_string() const;

private:
    void require_same_base(const TruncatedPolynomial& other) const;

    LocalBase base_;
    PolyTerms terms_;
};

} // namespace leibniz
