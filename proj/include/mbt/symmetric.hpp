#ifndef MBT_SYMMETRIC_HPP_
#define MBT_SYMMETRIC_HPP_

#include <cstddef>

#include "mbt/polynomial.hpp"
#include "mbt/rational.hpp"

namespace mbt {

  // Newton's identities over the rationals. Power sums are indexed from 1:
  // power_sums[i - 1] = p_i.

  //! h_d from p_1, ..., p_d via d h_d = sum_{i=1}^d p_i h_{d-i}, h_0 = 1.
  [[nodiscard]] Rational
  complete_homogeneous_from_power_sums(Vector const& power_sums, std::size_t d);

  //! h_0, ..., h_d in one pass.
  [[nodiscard]] Vector complete_homogeneous_sequence(Vector const& power_sums,
                                                     std::size_t   d);

  //! Monic degree-n polynomial whose roots have the given power sums; the
  //! coefficient of t^{n-k} is (-1)^k e_k.
  [[nodiscard]] Polynomial charpoly_from_power_traces(Vector const& power_sums,
                                                      std::size_t   n);

}  // namespace mbt

#endif  // MBT_SYMMETRIC_HPP_
