#ifndef MBT_REPRESENTATION_HPP_
#define MBT_REPRESENTATION_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "mbt/matrix.hpp"
#include "mbt/monoid.hpp"
#include "mbt/polynomial.hpp"
#include "mbt/rational.hpp"

namespace mbt {

  //! A matrix representation of a finite monoid, one dim x dim matrix per
  //! element. Immutable.
  class Representation {
   public:
    //! Checks that the identity maps to I and that matrix(a b) = matrix(a)
    //! matrix(b) for every pair; throws InputError with the first bad pair.
    Representation(MonoidPtr monoid, std::vector<Matrix> matrices);

    //! Skips the homomorphism check. For constructions that preserve it
    //! (Kronecker powers, block sums of valid representations).
    static Representation unchecked(MonoidPtr           monoid,
                                    std::size_t         dim,
                                    std::vector<Matrix> matrices);

    //! Re-runs the homomorphism check.
    void validate() const;

    [[nodiscard]] Monoid const&    monoid() const noexcept { return *_monoid; }
    [[nodiscard]] MonoidPtr const& monoid_ptr() const noexcept {
      return _monoid;
    }
    [[nodiscard]] std::size_t   dim() const noexcept { return _dim; }
    [[nodiscard]] Matrix const& matrix(Element a) const { return _matrices[a]; }
    [[nodiscard]] std::vector<Matrix> const& matrices() const noexcept {
      return _matrices;
    }

   private:
    Representation() = default;

    MonoidPtr           _monoid;
    std::size_t         _dim = 0;
    std::vector<Matrix> _matrices;
  };

  // Builders

  //! The one-dimensional module on which every element acts as 1.
  [[nodiscard]] Representation trivial_representation(MonoidPtr monoid);

  //! e_i -> e_{f(i)}.
  [[nodiscard]] Representation
  natural_representation(MonoidPtr                          monoid,
                         std::vector<Transformation> const& elements);

  //! The defining representation of a monoid of matrices.
  [[nodiscard]] Representation
  defining_representation(MonoidPtr monoid, std::vector<Matrix> elements);

  //! Left multiplication on the basis M of the monoid algebra.
  [[nodiscard]] Representation regular_representation(MonoidPtr monoid);

  //! The two-dimensional representation of N_t with rho(0) = 0,
  //! rho(1) = I and rho(j) = [[0, j], [0, 0]] for 2 <= j <= t.
  [[nodiscard]] Representation nt_paper_representation(std::size_t t);

  // Queries

  struct FaithfulCheck {
    bool                                       faithful = true;
    std::optional<std::pair<Element, Element>> witness;
  };

  [[nodiscard]] FaithfulCheck is_faithful(Representation const& rho);

  //! values[m] = trace(rho(m)).
  struct Character {
    Vector values;
  };

  [[nodiscard]] Character character(Representation const& rho);

  //! Distinct values in order of first occurrence along the element order.
  [[nodiscard]] std::vector<Rational>
  distinct_character_values(Representation const& rho);

  //! Distinct characteristic polynomials in order of first occurrence.
  [[nodiscard]] std::vector<Polynomial>
  distinct_charpolys(Representation const& rho);

  //! {m : theta(m) = dim}, checked against {m : rho(m) = I}; a mismatch
  //! throws InvariantViolation.
  [[nodiscard]] ElementSubset character_kernel(Representation const& rho);

  // Constructions

  //! i-fold Kronecker power; i = 0 is the trivial representation.
  [[nodiscard]] Representation tensor_power(Representation const& rho,
                                            std::size_t           i);

  //! Degree-d monomials in dim variables, as nondecreasing index tuples in
  //! lexicographic order. This is the basis used by sym_power.
  [[nodiscard]] std::vector<std::vector<std::size_t>>
  monomial_basis(std::size_t variables, std::size_t degree);

  //! d-th symmetric power on the monomial basis: the column of x^alpha is
  //! the product of the images of its variables.
  [[nodiscard]] Representation sym_power(Representation const& rho,
                                         std::size_t           d);

  //! Character of the d-th symmetric power at m, from the power traces
  //! theta(m^i) through Newton's identities.
  [[nodiscard]] Rational sym_power_character(Representation const& rho,
                                             Element               m,
                                             std::size_t           d);

  //! Block-diagonal sum over a common monoid; the empty sum has dim 0.
  [[nodiscard]] Representation
  direct_sum(MonoidPtr monoid, std::vector<Representation> const& parts);

  //! rho restricted to eMe acting on eV, in the echelon basis of the column
  //! space of rho(e). basis holds that basis as columns.
  struct LocalRepresentation {
    Submonoid      local;
    Matrix         basis;
    Representation rep;
  };

  [[nodiscard]] LocalRepresentation restrict_to_local(Representation const& rho,
                                                      Element               e);

}  // namespace mbt

#endif  // MBT_REPRESENTATION_HPP_
