#ifndef MBT_POLYNOMIAL_HPP_
#define MBT_POLYNOMIAL_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "mbt/matrix.hpp"
#include "mbt/rational.hpp"

namespace mbt {

  //! Dense univariate polynomial; coefficient i multiplies t^i. The zero
  //! polynomial has no coefficients, otherwise the leading one is nonzero.
  class Polynomial {
   public:
    Polynomial() = default;
    explicit Polynomial(Vector coefficients);
    Polynomial(std::initializer_list<Rational> coefficients)
        : Polynomial(Vector(coefficients)) {}

    static Polynomial constant(Rational c) {
      return Polynomial(Vector{std::move(c)});
    }
    static Polynomial monomial(Rational c, std::size_t degree);

    [[nodiscard]] Vector const& coefficients() const noexcept {
      return _coeffs;
    }
    [[nodiscard]] bool is_zero() const noexcept { return _coeffs.empty(); }
    //! Degree; -1 for the zero polynomial.
    [[nodiscard]] long degree() const noexcept {
      return static_cast<long>(_coeffs.size()) - 1;
    }
    //! Coefficient of t^i, zero beyond the degree.
    [[nodiscard]] Rational coefficient(std::size_t i) const {
      return i < _coeffs.size() ? _coeffs[i] : Rational();
    }
    [[nodiscard]] Rational leading() const {
      return _coeffs.empty() ? Rational() : _coeffs.back();
    }
    [[nodiscard]] Polynomial monic() const;
    [[nodiscard]] Rational operator()(Rational const& x) const;

    //! t^n p(1/t) for n >= degree.
    [[nodiscard]] Polynomial reversed(std::size_t n) const;

    [[nodiscard]] std::string str(char var = 't') const;

    Polynomial& operator+=(Polynomial const& other);
    Polynomial& operator-=(Polynomial const& other);
    Polynomial& operator*=(Rational const& scalar);

    friend Polynomial operator+(Polynomial a, Polynomial const& b) {
      return a += b;
    }
    friend Polynomial operator-(Polynomial a, Polynomial const& b) {
      return a -= b;
    }
    friend Polynomial operator*(Polynomial a, Rational const& s) {
      return a *= s;
    }
    friend Polynomial operator*(Polynomial const& a, Polynomial const& b);

    friend bool operator==(Polynomial const&, Polynomial const&) = default;
    friend auto operator<=>(Polynomial const& a, Polynomial const& b) {
      return a._coeffs <=> b._coeffs;
    }

   private:
    void trim();

    Vector _coeffs;
  };

  //! Quotient and remainder; throws std::domain_error on a zero divisor.
  [[nodiscard]] std::pair<Polynomial, Polynomial>
  divmod(Polynomial const& a, Polynomial const& b);

  //! Monic greatest common divisor (zero when both inputs are zero).
  [[nodiscard]] Polynomial gcd(Polynomial a, Polynomial b);

  //! det(tI - m) by the Faddeev-LeVerrier recurrence.
  [[nodiscard]] Polynomial charpoly(Matrix const& m);

}  // namespace mbt

#endif  // MBT_POLYNOMIAL_HPP_
