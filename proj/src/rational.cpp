#include "mbt/rational.hpp"

#include <algorithm>
#include <ostream>

#include "mbt/error.hpp"

namespace mbt {

  namespace {
    bool valid_integer(std::string_view s) {
      if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
      }
      return !s.empty()
             && std::all_of(s.begin(), s.end(), [](char c) {
                  return c >= '0' && c <= '9';
                });
    }

    mpz_class parse_integer(std::string_view s) {
      if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
      }
      return mpz_class(std::string(s), 10);
    }
  }  // namespace

  Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) {
      throw InputError("rational with zero denominator");
    }
    _value = mpq_class(mpz_class(static_cast<long>(num)),
                       mpz_class(static_cast<long>(den)));
    _value.canonicalize();
  }

  Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    if (!valid_integer(num)) {
      throw InputError("malformed rational \"" + std::string(text) + "\"");
    }
    mpq_class q(parse_integer(num));
    if (slash != std::string_view::npos) {
      std::string_view den = text.substr(slash + 1);
      if (!valid_integer(den) || den.front() == '-' || den.front() == '+') {
        throw InputError("malformed rational \"" + std::string(text) + "\"");
      }
      mpz_class d = parse_integer(den);
      if (d == 0) {
        throw InputError("rational with zero denominator \""
                         + std::string(text) + "\"");
      }
      q = mpq_class(parse_integer(num), d);
    }
    return Rational(std::move(q));
  }

  std::string Rational::str() const {
    return _value.get_str(10);
  }

  Rational& Rational::operator/=(Rational const& x) {
    if (x.is_zero()) {
      throw std::domain_error("rational division by zero");
    }
    _value /= x._value;
    return *this;
  }

  std::ostream& operator<<(std::ostream& os, Rational const& x) {
    return os << x.str();
  }

  Rational pow(Rational const& x, std::size_t k) {
    Rational result(1);
    Rational base = x;
    while (k > 0) {
      if (k & 1) {
        result *= base;
      }
      k >>= 1;
      if (k > 0) {
        base *= base;
      }
    }
    return result;
  }

  bool is_zero(Vector const& v) {
    return std::all_of(
        v.begin(), v.end(), [](Rational const& x) { return x.is_zero(); });
  }

  std::vector<std::string> to_strings(Vector const& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (auto const& x : v) {
      out.push_back(x.str());
    }
    return out;
  }

}  // namespace mbt

std::size_t std::hash<mbt::Rational>::operator()(
    mbt::Rational const& x) const noexcept {
  return std::hash<std::string>()(x.str());
}
