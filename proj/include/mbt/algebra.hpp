#ifndef MBT_ALGEBRA_HPP_
#define MBT_ALGEBRA_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "mbt/matrix.hpp"
#include "mbt/monoid.hpp"
#include "mbt/representation.hpp"

namespace mbt {

  //! An element sum_m c_m m of the rational monoid algebra QM.
  struct AlgebraElement {
    Vector coefficients;

    friend bool operator==(AlgebraElement const&, AlgebraElement const&) = default;
  };

  [[nodiscard]] AlgebraElement basis_element(Monoid const& m, Element a);
  [[nodiscard]] AlgebraElement multiply(Monoid const&         m,
                                        AlgebraElement const& a,
                                        AlgebraElement const& b);

  //! Matrix of x -> a x on the basis M.
  [[nodiscard]] Matrix left_regular_matrix(Monoid const&         m,
                                           AlgebraElement const& a);

  //! A linear subspace of Q^n stored by its reduced echelon basis, which is
  //! unique per subspace, so equality is basis equality.
  class Subspace {
   public:
    explicit Subspace(std::size_t ambient) : _ambient(ambient) {}

    static Subspace span(std::size_t ambient, std::vector<Vector> const& vectors);

    [[nodiscard]] std::size_t ambient_dim() const noexcept { return _ambient; }
    [[nodiscard]] std::size_t dim() const noexcept { return _basis.size(); }
    [[nodiscard]] std::vector<Vector> const& basis() const noexcept {
      return _basis;
    }
    [[nodiscard]] bool contains(Vector const& v) const;

    friend bool operator==(Subspace const&, Subspace const&) = default;

   private:
    std::size_t         _ambient;
    std::vector<Vector> _basis;
  };

  struct Containment {
    bool                  holds = true;
    std::optional<Vector> witness;
  };

  //! Whether a lies in b; the witness is the first basis vector of a outside
  //! b. Throws InputError on an ambient dimension mismatch.
  [[nodiscard]] Containment subspace_leq(Subspace const& a, Subspace const& b);

  [[nodiscard]] Subspace intersect(Subspace const& a, Subspace const& b);

  //! Span of all products x y with x in a and y in b.
  [[nodiscard]] Subspace product(Monoid const&   m,
                                 Subspace const& a,
                                 Subspace const& b);

  inline constexpr std::size_t radical_size_guard = 300;

  //! Rad(QM) as the kernel of the trace form (x, y) -> tr L_{xy}. Monoids
  //! larger than radical_size_guard are refused unless allow_large is set.
  [[nodiscard]] Subspace radical_basis(Monoid const& m, bool allow_large = false);

  //! {c : sum_m c_m rho(m) = 0}, from the explicit matrices.
  [[nodiscard]] Subspace annihilator_basis(Representation const& rho);

  //! Frobenius Gram matrix G[a][b] = tr(rho(a)^T rho(b)). For any
  //! representation W the kernel of its Gram matrix is Ann(W).
  [[nodiscard]] Matrix frobenius_gram(Representation const& rho);

  //! Gram matrix of the i-th tensor power: G^{(i)}[a][b] = G[a][b]^i.
  [[nodiscard]] Matrix tensor_power_gram(Matrix const& frobenius,
                                         std::size_t   i);

  //! Gram matrices of the symmetric powers 0..max_degree, where entry
  //! (a, b) of the d-th is h_d evaluated on the eigenvalues of
  //! rho(a)^T rho(b), taken through its power traces.
  [[nodiscard]] std::vector<Matrix> sym_power_grams(Representation const& rho,
                                                    std::size_t max_degree);

  //! Kernel of a sum of Gram matrices, i.e. the annihilator of the direct
  //! sum of the underlying modules.
  [[nodiscard]] Subspace annihilator_from_grams(std::vector<Matrix> const& grams,
                                                std::size_t size);

  //! Every simple QM-module is a composition factor of W exactly when
  //! Ann(W) lies in Rad(QM).
  [[nodiscard]] Containment all_simples_appear(Representation const& W);
  [[nodiscard]] Containment all_simples_appear(Representation const& W,
                                               Subspace const&       radical);

}  // namespace mbt

#endif  // MBT_ALGEBRA_HPP_
