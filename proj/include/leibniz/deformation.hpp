#pragma once

#include "leibniz/algebra.hpp"
#include "leibniz/cochain.hpp"
#include "leibniz/cochain_complex.hpp"
#include "leibniz/local_base.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace leibniz {

/// The bracket of L as a 2-cochain.
Cochain bracket_cochain(const LeibnizAlgebra& alg);

/// Element of A (x) L: one base coefficient per basis vector of L.
using PolyVector = std::vector<TruncatedPolynomial>;

/// A bracket on A (x) L of the form
///   [1(x)l_1, 1(x)l_2] = 1(x)[l_1,l_2] + sum_m m (x) psi_m(l_1,l_2)
/// over the standard monomials m != 1 of the base.
class Deformation {
public:
    /// Terms are rewritten into the normal form of `base`; monomials of
    /// degree 0 are rejected.
    Deformation(LeibnizAlgebra algebra, LocalBase base, const std::map<Monomial, Cochain, MonomialOrder>& terms);

    /// The trivial deformation over `base`.
    Deformation(LeibnizAlgebra algebra, LocalBase base);

    const LeibnizAlgebra& algebra() const noexcept { return algebra_; }
    const LocalBase& base() const noexcept { return base_; }
    /// Nonzero psi_m keyed by standard monomial.
    const std::map<Monomial, Cochain, MonomialOrder>& terms() const noexcept { return terms_; }

    /// psi_m, or the zero 2-cochain. The unit monomial gives the bracket of L.
    Cochain term(const Monomial& m) const;

    /// Coefficient polynomial of e_k in [e_i, e_j].
    TruncatedPolynomial structure_polynomial(std::size_t i, std::size_t j, std::size_t k) const;
    PolyVector basis_bracket(std::size_t i, std::size_t j) const;

    /// Same terms over another base (normal form recomputed).
    Deformation rebased(const LocalBase& base) const;

    bool operator==(const Deformation& other) const;

private:
    LeibnizAlgebra algebra_;
    LocalBase base_;
    std::map<Monomial, Cochain, MonomialOrder> terms_;
};

PolyVector poly_vector(const LocalBase& base, const Vector& v);
PolyVector zero_poly_vector(const LocalBase& base, std::size_t n);

/// First-order deformation 1(x)[l_1,l_2] + sum_i t_i (x) mu_i(l_1,l_2) over
/// K[t_1..t_h] / m^2. Throws PreconditionError if some mu_i is not a
/// 2-cocycle.
Deformation universal_infinitesimal(const LeibnizAlgebra& alg, const std::vector<Cochain>& reps,
                                    std::vector<std::string> generator_names = {});

/// A-bilinear extension of the deformed bracket.
PolyVector deformation_bracket(const Deformation& d, const PolyVector& x, const PolyVector& y);

/// rho(a,b)(x,y,z) = a(x,b(y,z)) - a(b(x,y),z) + a(b(x,z),y).
Cochain leibniz_term(const Cochain& a, const Cochain& b);

/// Per standard monomial M, the coefficient of M in
///   [x,[y,z]] - [[x,y],z] + [[x,z],y]
/// for the deformed bracket. Every standard monomial of the base appears.
std::map<Monomial, Cochain, MonomialOrder> leibniz_defect(const Deformation& d);
/// Reference implementation without the parallel kernel.
std::map<Monomial, Cochain, MonomialOrder> leibniz_defect_serial(const Deformation& d);

bool defect_vanishes(const Deformation& d);

struct ObstructionReport {
    unsigned order = 0;
    /// Defect of the lift to `order`, per standard monomial of that degree.
    std::map<Monomial, Cochain, MonomialOrder> cocycles;
    /// HL^3 coordinates of each of those cocycles.
    std::map<Monomial, Vector, MonomialOrder> classes;
    /// One polynomial per HL^3 direction: sum_M classes[M][j] * M.
    std::vector<PolyTerms> relation_polynomials;

    bool obstructed() const;
    /// The nonzero relation polynomials.
    std::vector<PolyTerms> nonzero_relations() const;
};

/// Obstruction to extending `d` (defect zero over its base, order k) to
/// order k+1. Throws PreconditionError if the defect does not vanish, and
/// std::logic_error if a candidate obstruction is not a cocycle.
ObstructionReport obstruction_classes(const Deformation& d, const CohomologySpace& hl3);

/// Extension to order k+1 with psi_M = particular solution of
/// delta psi_M = -(defect at M), or the report when some class is nonzero.
std::variant<Deformation, ObstructionReport> extend_to_order(const Deformation& d, const CohomologySpace& hl3);

/// Homomorphism of local bases given by the images of the generators.
class BaseMap {
public:
    /// Throws PreconditionError on a nonzero constant term, a target with
    /// larger truncation order, or a relation not mapped into the ideal.
    BaseMap(LocalBase source, LocalBase target, std::vector<TruncatedPolynomial> images);

    static BaseMap identity(const LocalBase& base);

    const LocalBase& source() const noexcept { return source_; }
    const LocalBase& target() const noexcept { return target_; }
    const std::vector<TruncatedPolynomial>& images() const noexcept { return images_; }

    TruncatedPolynomial apply(const Monomial& m) const;
    TruncatedPolynomial apply(const TruncatedPolynomial& p) const;

private:
    LocalBase source_;
    LocalBase target_;
    std::vector<TruncatedPolynomial> images_;
};

/// (g o f): first f, then g.
BaseMap compose(const BaseMap& g, const BaseMap& f);

/// 1(x)[l_1,l_2] + sum_m phi(m) (x) psi_m(l_1,l_2).
Deformation push_forward(const Deformation& d, const BaseMap& phi);

/// A-linear map of A (x) L: columns[j] is the image of 1 (x) e_j.
struct BaseLinearMap {
    std::vector<PolyVector> columns;
};

BaseLinearMap identity_map(const LocalBase& base, std::size_t n);
PolyVector apply(const BaseLinearMap& phi, const PolyVector& v);

struct EquivalenceCheck {
    bool equivalent = false;
    bool invertible = false;
    bool augmentation = false;
    bool intertwines = false;
    /// First basis pair where phi([e_i,e_j]_1) != [phi e_i, phi e_j]_2.
    std::optional<std::pair<std::size_t, std::size_t>> counterexample;
    PolyVector lhs;
    PolyVector rhs;
};

/// Whether phi is an isomorphism of deformations d1 -> d2 reducing to the
/// identity modulo m. Throws PreconditionError if the deformations do not
/// share algebra and base.
EquivalenceCheck check_equivalence(const BaseLinearMap& phi, const Deformation& d1, const Deformation& d2);

struct VersalResult {
    Deformation deformation;
    /// Relations added when passing to each order (order, polynomials).
    std::vector<std::pair<unsigned, std::vector<PolyTerms>>> relations_by_order;
    std::vector<ObstructionReport> reports;
};

/// Order-by-order extension of the universal infinitesimal deformation.
/// Nonzero obstructions are added to the relation ideal of the base.
VersalResult versal_construct(const LeibnizAlgebra& alg, unsigned max_order = 3,
                              const std::optional<std::vector<Cochain>>& reps = std::nullopt);

/// Fixed HL^2 representatives of lambda6:
/// mu_1(e_2,e_3) = -e_1 and mu_2(e_1,e_3) = e_1, all else zero.
std::vector<Cochain> lambda6_reference_representatives();

} // namespace leibniz
