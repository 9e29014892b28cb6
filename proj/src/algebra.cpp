#include "mbt/algebra.hpp"

#include "mbt/error.hpp"
#include "mbt/symmetric.hpp"

namespace mbt {

  AlgebraElement basis_element(Monoid const& m, Element a) {
    AlgebraElement x{Vector(m.size())};
    x.coefficients[a] = 1;
    return x;
  }

  AlgebraElement multiply(Monoid const&         m,
                          AlgebraElement const& a,
                          AlgebraElement const& b) {
    AlgebraElement out{Vector(m.size())};
    for (Element x = 0; x < m.size(); ++x) {
      if (a.coefficients[x].is_zero()) {
        continue;
      }
      for (Element y = 0; y < m.size(); ++y) {
        if (!b.coefficients[y].is_zero()) {
          out.coefficients[m.product(x, y)].add_product(a.coefficients[x],
                                                        b.coefficients[y]);
        }
      }
    }
    return out;
  }

  Matrix left_regular_matrix(Monoid const& m, AlgebraElement const& a) {
    if (a.coefficients.size() != m.size()) {
      throw InputError("algebra element length does not match monoid size");
    }
    Matrix l(m.size(), m.size());
    for (Element x = 0; x < m.size(); ++x) {
      if (a.coefficients[x].is_zero()) {
        continue;
      }
      for (Element b = 0; b < m.size(); ++b) {
        l(m.product(x, b), b) += a.coefficients[x];
      }
    }
    return l;
  }

  Subspace Subspace::span(std::size_t ambient, std::vector<Vector> const& vectors) {
    Subspace s(ambient);
    if (vectors.empty()) {
      return s;
    }
    Echelon e = rref(Matrix::from_rows(vectors, ambient));
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      s._basis.push_back(e.reduced.row(i));
    }
    return s;
  }

  bool Subspace::contains(Vector const& v) const {
    if (v.size() != _ambient) {
      throw InputError("vector length does not match the ambient dimension");
    }
    // Reduce v against the echelon basis; pivots are the leading entries.
    Vector r = v;
    for (auto const& b : _basis) {
      std::size_t p = 0;
      while (b[p].is_zero()) {
        ++p;
      }
      if (!r[p].is_zero()) {
        Rational f = r[p];
        for (std::size_t j = p; j < _ambient; ++j) {
          r[j] -= f * b[j];
        }
      }
    }
    return mbt::is_zero(r);
  }

  Containment subspace_leq(Subspace const& a, Subspace const& b) {
    if (a.ambient_dim() != b.ambient_dim()) {
      throw InputError("subspaces live in different ambient spaces");
    }
    for (auto const& v : a.basis()) {
      if (!b.contains(v)) {
        return {false, v};
      }
    }
    return {};
  }

  Subspace intersect(Subspace const& a, Subspace const& b) {
    if (a.ambient_dim() != b.ambient_dim()) {
      throw InputError("subspaces live in different ambient spaces");
    }
    std::size_t n = a.ambient_dim();
    // x a_basis = y b_basis  <=>  (x, y) in ker [A^T | -B^T]
    Matrix sys(n, a.dim() + b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        sys(k, i) = a.basis()[i][k];
      }
    }
    for (std::size_t i = 0; i < b.dim(); ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        sys(k, a.dim() + i) = -b.basis()[i][k];
      }
    }
    std::vector<Vector> vectors;
    for (auto const& coeffs : kernel_basis(sys)) {
      Vector v(n);
      for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t k = 0; k < n; ++k) {
          v[k].add_product(coeffs[i], a.basis()[i][k]);
        }
      }
      vectors.push_back(std::move(v));
    }
    return Subspace::span(n, vectors);
  }

  Subspace product(Monoid const& m, Subspace const& a, Subspace const& b) {
    std::vector<Vector> vectors;
    for (auto const& x : a.basis()) {
      for (auto const& y : b.basis()) {
        vectors.push_back(multiply(m, {x}, {y}).coefficients);
      }
    }
    return Subspace::span(m.size(), vectors);
  }

  Subspace radical_basis(Monoid const& m, bool allow_large) {
    if (m.size() > radical_size_guard && !allow_large) {
      throw InputError("monoid of size " + std::to_string(m.size())
                       + " exceeds the radical size guard of "
                       + std::to_string(radical_size_guard));
    }
    // tr L_z counts the b with z b = b.
    std::vector<std::int64_t> fixed(m.size(), 0);
    for (Element z = 0; z < m.size(); ++z) {
      for (Element b = 0; b < m.size(); ++b) {
        fixed[z] += m.product(z, b) == b;
      }
    }
    Matrix gram(m.size(), m.size());
    for (Element x = 0; x < m.size(); ++x) {
      for (Element y = 0; y < m.size(); ++y) {
        gram(x, y) = fixed[m.product(x, y)];
      }
    }
    return Subspace::span(m.size(), kernel_basis(gram));
  }

  Subspace annihilator_basis(Representation const& rho) {
    std::size_t n    = rho.dim();
    std::size_t size = rho.monoid().size();
    Matrix      sys(n * n, size);
    for (Element a = 0; a < size; ++a) {
      auto const& entries = rho.matrix(a).entries();
      for (std::size_t k = 0; k < n * n; ++k) {
        sys(k, a) = entries[k];
      }
    }
    return Subspace::span(size, kernel_basis(sys));
  }

  Matrix frobenius_gram(Representation const& rho) {
    std::size_t size = rho.monoid().size();
    Matrix      g(size, size);
    for (Element a = 0; a < size; ++a) {
      for (Element b = a; b < size; ++b) {
        g(a, b) = frobenius(rho.matrix(a), rho.matrix(b));
        g(b, a) = g(a, b);
      }
    }
    return g;
  }

  Matrix tensor_power_gram(Matrix const& frobenius, std::size_t i) {
    Matrix g(frobenius.rows(), frobenius.cols());
    for (std::size_t a = 0; a < g.rows(); ++a) {
      for (std::size_t b = 0; b < g.cols(); ++b) {
        g(a, b) = pow(frobenius(a, b), i);
      }
    }
    return g;
  }

  std::vector<Matrix> sym_power_grams(Representation const& rho,
                                      std::size_t           max_degree) {
    std::size_t         size = rho.monoid().size();
    std::vector<Matrix> grams(max_degree + 1, Matrix(size, size));
    for (Element a = 0; a < size; ++a) {
      Matrix at = rho.matrix(a).transpose();
      for (Element b = a; b < size; ++b) {
        Vector h = complete_homogeneous_sequence(
            power_traces(at * rho.matrix(b), max_degree), max_degree);
        for (std::size_t d = 0; d <= max_degree; ++d) {
          grams[d](a, b) = h[d];
          grams[d](b, a) = h[d];
        }
      }
    }
    return grams;
  }

  Subspace annihilator_from_grams(std::vector<Matrix> const& grams,
                                  std::size_t                size) {
    Matrix sum(size, size);
    for (auto const& g : grams) {
      sum += g;
    }
    return Subspace::span(size, kernel_basis(sum));
  }

  Containment all_simples_appear(Representation const& W) {
    return all_simples_appear(W, radical_basis(W.monoid()));
  }

  Containment all_simples_appear(Representation const& W,
                                 Subspace const&       radical) {
    return subspace_leq(annihilator_basis(W), radical);
  }

}  // namespace mbt
