#ifndef MBT_RATIONAL_HPP_
#define MBT_RATIONAL_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace mbt {

  //! Exact rational number, always in lowest terms with positive denominator.
  class Rational {
   public:
    Rational() = default;
    Rational(std::int64_t n) : _value(static_cast<long>(n)) {}  // NOLINT
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(mpq_class value) : _value(std::move(value)) {
      _value.canonicalize();
    }

    //! Parses "p" or "p/q" (optional sign, decimal digits only).
    static Rational parse(std::string_view text);

    [[nodiscard]] std::string str() const;
    [[nodiscard]] bool is_zero() const { return sgn(_value) == 0; }
    [[nodiscard]] bool is_integer() const {
      return _value.get_den() == 1;
    }
    [[nodiscard]] int sign() const { return sgn(_value); }
    [[nodiscard]] mpz_class numerator() const { return _value.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return _value.get_den(); }
    [[nodiscard]] mpq_class const& raw() const { return _value; }

    Rational& operator+=(Rational const& x) {
      _value += x._value;
      return *this;
    }
    Rational& operator-=(Rational const& x) {
      _value -= x._value;
      return *this;
    }
    Rational& operator*=(Rational const& x) {
      _value *= x._value;
      return *this;
    }
    Rational& operator/=(Rational const& x);

    friend Rational operator+(Rational a, Rational const& b) {
      return a += b;
    }
    friend Rational operator-(Rational a, Rational const& b) {
      return a -= b;
    }
    friend Rational operator*(Rational a, Rational const& b) {
      return a *= b;
    }
    friend Rational operator/(Rational a, Rational const& b) {
      return a /= b;
    }
    friend Rational operator-(Rational const& a) {
      return Rational(mpq_class(-a._value));
    }

    friend bool operator==(Rational const& a, Rational const& b) {
      return a._value == b._value;
    }
    friend std::strong_ordering operator<=>(Rational const& a,
                                            Rational const& b) {
      int c = cmp(a._value, b._value);
      return c < 0   ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    //! Adds a * b into this without temporaries where possible.
    void add_product(Rational const& a, Rational const& b) {
      _value += a._value * b._value;
    }

   private:
    mpq_class _value;
  };

  std::ostream& operator<<(std::ostream& os, Rational const& x);

  //! Integer power, x^0 = 1 (including 0^0).
  Rational pow(Rational const& x, std::size_t k);

  using Vector = std::vector<Rational>;

  [[nodiscard]] bool is_zero(Vector const& v);
  [[nodiscard]] std::vector<std::string> to_strings(Vector const& v);

}  // namespace mbt

template <>
struct std::hash<mbt::Rational> {
  std::size_t operator()(mbt::Rational const& x) const noexcept;
};

#endif  // MBT_RATIONAL_HPP_
