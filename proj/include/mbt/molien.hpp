#ifndef MBT_MOLIEN_HPP_
#define MBT_MOLIEN_HPP_

#include <cstddef>

#include "mbt/algebra.hpp"
#include "mbt/polynomial.hpp"
#include "mbt/representation.hpp"

namespace mbt {

  //! numerator / denominator in lowest terms. The denominator has constant
  //! term 1 when its constant term is nonzero and is monic otherwise; zero
  //! is 0 / 1.
  class RationalFunction {
   public:
    RationalFunction() : _den(Polynomial::constant(1)) {}
    RationalFunction(Polynomial numerator, Polynomial denominator);

    [[nodiscard]] Polynomial const& numerator() const noexcept { return _num; }
    [[nodiscard]] Polynomial const& denominator() const noexcept {
      return _den;
    }
    [[nodiscard]] bool is_zero() const noexcept { return _num.is_zero(); }

    friend RationalFunction operator+(RationalFunction const& a,
                                      RationalFunction const& b);
    friend bool operator==(RationalFunction const&,
                           RationalFunction const&) = default;

   private:
    Polynomial _num;
    Polynomial _den;
  };

  //! Coefficients of t^0, ..., t^N of a formal power series.
  struct SeriesPrefix {
    Vector coefficients;

    friend bool operator==(SeriesPrefix const&, SeriesPrefix const&) = default;
  };

  //! det(I - t rho(m)), the degree reversal of the characteristic polynomial.
  [[nodiscard]] Polynomial reversed_charpoly(Representation const& rho,
                                             Element               m);

  //! First N + 1 coefficients of 1 / det(I - t rho(m)).
  [[nodiscard]] SeriesPrefix element_series(Representation const& rho,
                                            Element               m,
                                            std::size_t           N);

  //! sum_{m in eMe} c_m / det(I - t rho'(m)) with rho' the restriction of
  //! rho to eV. Throws InputError when the weights leave eMe.
  [[nodiscard]] RationalFunction weighted_series(Representation const& rho,
                                                 Element               e,
                                                 AlgebraElement const& weights);

  //! Taylor coefficients at 0 through the denominator recurrence. Throws
  //! InputError when the denominator vanishes at 0.
  [[nodiscard]] SeriesPrefix series_prefix(RationalFunction const& f,
                                           std::size_t             N);

}  // namespace mbt

#endif  // MBT_MOLIEN_HPP_
