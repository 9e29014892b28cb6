#include "mbt/molien.hpp"

#include <map>

#include "mbt/error.hpp"

namespace mbt {

  RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
      : _num(std::move(numerator)), _den(std::move(denominator)) {
    if (_den.is_zero()) {
      throw std::domain_error("rational function with zero denominator");
    }
    if (_num.is_zero()) {
      _den = Polynomial::constant(1);
      return;
    }
    Polynomial g = gcd(_num, _den);
    if (g.degree() > 0) {
      _num = divmod(_num, g).first;
      _den = divmod(_den, g).first;
    }
    Rational scale = _den.coefficient(0).is_zero() ? _den.leading()
                                                   : _den.coefficient(0);
    scale = Rational(1) / scale;
    _num *= scale;
    _den *= scale;
  }

  RationalFunction operator+(RationalFunction const& a,
                             RationalFunction const& b) {
    if (a._den == b._den) {
      return RationalFunction(a._num + b._num, a._den);
    }
    return RationalFunction(a._num * b._den + b._num * a._den, a._den * b._den);
  }

  Polynomial reversed_charpoly(Representation const& rho, Element m) {
    return charpoly(rho.matrix(m)).reversed(rho.dim());
  }

  namespace {
    SeriesPrefix expand(Polynomial const& num, Polynomial const& den,
                        std::size_t N) {
      if (den.coefficient(0).is_zero()) {
        throw InputError("denominator vanishes at 0; no power series");
      }
      Rational inv = Rational(1) / den.coefficient(0);
      Vector   a(N + 1);
      for (std::size_t k = 0; k <= N; ++k) {
        Rational s = num.coefficient(k);
        for (std::size_t j = 1; j <= k && static_cast<long>(j) <= den.degree();
             ++j) {
          s -= den.coefficient(j) * a[k - j];
        }
        a[k] = s * inv;
      }
      return {std::move(a)};
    }
  }  // namespace

  SeriesPrefix element_series(Representation const& rho,
                              Element               m,
                              std::size_t           N) {
    return expand(Polynomial::constant(1), reversed_charpoly(rho, m), N);
  }

  SeriesPrefix series_prefix(RationalFunction const& f, std::size_t N) {
    return expand(f.numerator(), f.denominator(), N);
  }

  RationalFunction weighted_series(Representation const& rho,
                                   Element               e,
                                   AlgebraElement const& weights) {
    Monoid const& m = rho.monoid();
    if (weights.coefficients.size() != m.size()) {
      throw InputError("weight vector length does not match monoid size");
    }
    LocalRepresentation local = restrict_to_local(rho, e);
    ElementSubset       eme(local.local.embedding);
    for (Element x = 0; x < m.size(); ++x) {
      if (!weights.coefficients[x].is_zero() && !eme.contains(x)) {
        throw InputError("weight on " + m.label(x) + " lies outside eMe for e = "
                         + m.label(e));
      }
    }
    // Collect the weights b_j per distinct det(I - t rho'(m)).
    std::map<Polynomial, Rational> grouped;
    for (Element i = 0; i < local.local.embedding.size(); ++i) {
      Rational const& c = weights.coefficients[local.local.embedding[i]];
      if (!c.is_zero()) {
        grouped[reversed_charpoly(local.rep, i)] += c;
      }
    }
    RationalFunction sum;
    for (auto const& [q, b] : grouped) {
      if (!b.is_zero()) {
        sum = sum + RationalFunction(Polynomial::constant(b), q);
      }
    }
    return sum;
  }

}  // namespace mbt
