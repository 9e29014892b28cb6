#include "mbt/polynomial.hpp"

#include <sstream>
#include <stdexcept>

#include "mbt/error.hpp"

namespace mbt {

  Polynomial::Polynomial(Vector coefficients) : _coeffs(std::move(coefficients)) {
    trim();
  }

  Polynomial Polynomial::monomial(Rational c, std::size_t degree) {
    Vector v(degree + 1);
    v[degree] = std::move(c);
    return Polynomial(std::move(v));
  }

  void Polynomial::trim() {
    while (!_coeffs.empty() && _coeffs.back().is_zero()) {
      _coeffs.pop_back();
    }
  }

  Polynomial Polynomial::monic() const {
    if (is_zero()) {
      return *this;
    }
    return *this * (Rational(1) / leading());
  }

  Rational Polynomial::operator()(Rational const& x) const {
    Rational acc;
    for (auto it = _coeffs.rbegin(); it != _coeffs.rend(); ++it) {
      acc = acc * x + *it;
    }
    return acc;
  }

  Polynomial Polynomial::reversed(std::size_t n) const {
    if (degree() > static_cast<long>(n)) {
      throw InputError("reversal length below polynomial degree");
    }
    Vector v(n + 1);
    for (std::size_t i = 0; i < _coeffs.size(); ++i) {
      v[n - i] = _coeffs[i];
    }
    return Polynomial(std::move(v));
  }

  std::string Polynomial::str(char var) const {
    if (is_zero()) {
      return "0";
    }
    std::ostringstream os;
    bool               first = true;
    for (std::size_t k = _coeffs.size(); k-- > 0;) {
      Rational const& c = _coeffs[k];
      if (c.is_zero()) {
        continue;
      }
      Rational mag = c.sign() < 0 ? -c : c;
      if (first) {
        os << (c.sign() < 0 ? "-" : "");
      } else {
        os << (c.sign() < 0 ? " - " : " + ");
      }
      first = false;
      if (k == 0 || mag != Rational(1)) {
        os << mag;
      }
      if (k > 0) {
        os << var;
        if (k > 1) {
          os << '^' << k;
        }
      }
    }
    return os.str();
  }

  Polynomial& Polynomial::operator+=(Polynomial const& other) {
    if (other._coeffs.size() > _coeffs.size()) {
      _coeffs.resize(other._coeffs.size());
    }
    for (std::size_t i = 0; i < other._coeffs.size(); ++i) {
      _coeffs[i] += other._coeffs[i];
    }
    trim();
    return *this;
  }

  Polynomial& Polynomial::operator-=(Polynomial const& other) {
    if (other._coeffs.size() > _coeffs.size()) {
      _coeffs.resize(other._coeffs.size());
    }
    for (std::size_t i = 0; i < other._coeffs.size(); ++i) {
      _coeffs[i] -= other._coeffs[i];
    }
    trim();
    return *this;
  }

  Polynomial& Polynomial::operator*=(Rational const& scalar) {
    for (auto& c : _coeffs) {
      c *= scalar;
    }
    trim();
    return *this;
  }

  Polynomial operator*(Polynomial const& a, Polynomial const& b) {
    if (a.is_zero() || b.is_zero()) {
      return {};
    }
    Vector v(a._coeffs.size() + b._coeffs.size() - 1);
    for (std::size_t i = 0; i < a._coeffs.size(); ++i) {
      for (std::size_t j = 0; j < b._coeffs.size(); ++j) {
        v[i + j].add_product(a._coeffs[i], b._coeffs[j]);
      }
    }
    return Polynomial(std::move(v));
  }

  std::pair<Polynomial, Polynomial> divmod(Polynomial const& a,
                                           Polynomial const& b) {
    if (b.is_zero()) {
      throw std::domain_error("polynomial division by zero");
    }
    Vector      rem = a.coefficients();
    std::size_t db  = static_cast<std::size_t>(b.degree());
    if (rem.size() <= db) {
      return {Polynomial(), a};
    }
    Vector   quot(rem.size() - db);
    Rational lead_inv = Rational(1) / b.leading();
    for (std::size_t k = rem.size(); k-- > db;) {
      Rational q = rem[k] * lead_inv;
      quot[k - db] = q;
      if (q.is_zero()) {
        continue;
      }
      for (std::size_t j = 0; j <= db; ++j) {
        rem[k - db + j] -= q * b.coefficient(j);
      }
    }
    rem.resize(db);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
  }

  Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
      Polynomial r = divmod(a, b).second.monic();
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  Polynomial charpoly(Matrix const& m) {
    if (!m.is_square()) {
      throw InputError("characteristic polynomial of a non-square matrix");
    }
    std::size_t n = m.rows();
    // c[k] is the coefficient of t^k.
    Vector c(n + 1);
    c[n] = 1;
    Matrix acc = Matrix::zero(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
      acc = m * acc;
      for (std::size_t i = 0; i < n; ++i) {
        acc(i, i) += c[n - k + 1];
      }
      c[n - k] = -(m * acc).trace() / Rational(static_cast<std::int64_t>(k));
    }
    return Polynomial(std::move(c));
  }

}  // namespace mbt
