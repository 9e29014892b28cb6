#ifndef MBT_VERIFY_HPP_
#define MBT_VERIFY_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mbt/algebra.hpp"
#include "mbt/representation.hpp"

namespace mbt {

  enum class Theorem { tensor, symmetric, positive_refinement, steinberg };
  enum class PowerMode { tensor, symmetric };

  [[nodiscard]] std::string to_string(Theorem t);
  [[nodiscard]] std::string to_string(PowerMode m);

  //! Outcome of checking that every simple module is a composition factor
  //! of the sum of the powers listed in powers_used.
  struct VerificationReport {
    Theorem                    theorem = Theorem::tensor;
    std::size_t                r       = 0;
    std::optional<std::size_t> s;
    std::size_t                dim = 0;
    std::size_t                bound = 0;  // largest power index used
    std::vector<std::size_t>   powers_used;
    std::size_t                dim_rad = 0;
    std::size_t                dim_ann = 0;
    bool                       holds   = false;
    std::optional<Vector>      witness;
    //! Least k such that the powers of powers_used up to k already suffice.
    std::optional<std::size_t> minimal_k;
  };

  // The verifiers compute the annihilator of a sum of powers through Gram
  // matrices, so no power is ever materialised. Each takes an optional
  // precomputed radical; passing a wrong one is how the failure path is
  // exercised.

  //! Powers 0..r-1 with r the number of distinct character values.
  [[nodiscard]] VerificationReport
  verify_tensor_theorem(Representation const&          rho,
                        std::optional<Subspace> const& radical = {});

  //! Symmetric powers 0..n s - 1, s the number of distinct characteristic
  //! polynomials.
  [[nodiscard]] VerificationReport
  verify_symmetric_theorem(Representation const&          rho,
                           std::optional<Subspace> const& radical = {});

  //! Tensor powers 1..r; refused when the monoid has a zero element.
  [[nodiscard]] VerificationReport
  verify_positive_power_refinement(Representation const&          rho,
                                   std::optional<Subspace> const& radical = {});

  //! Tensor powers 0..|M|-1.
  [[nodiscard]] VerificationReport
  verify_steinberg_bound(Representation const&          rho,
                         std::optional<Subspace> const& radical = {});

  //! Least k with every simple a composition factor of the sum of powers
  //! 0..k; nullopt past cap.
  [[nodiscard]] std::optional<std::size_t>
  minimal_covering_power(Representation const& rho,
                         PowerMode             mode,
                         std::size_t           cap);

  //! Least k with the sum of powers 0..k faithful for QM; nullopt past cap.
  [[nodiscard]] std::optional<std::size_t>
  minimal_faithful_power(Representation const& rho,
                         PowerMode             mode,
                         std::size_t           cap);

  //! Gram matrices of powers 0..max_power in the given mode.
  [[nodiscard]] std::vector<Matrix> power_grams(Representation const& rho,
                                                PowerMode             mode,
                                                std::size_t max_power);

}  // namespace mbt

#endif  // MBT_VERIFY_HPP_
