#include "mbt/representation.hpp"

#include <algorithm>
#include <map>

#include "mbt/error.hpp"
#include "mbt/symmetric.hpp"

namespace mbt {

  Representation::Representation(MonoidPtr monoid, std::vector<Matrix> matrices)
      : _monoid(std::move(monoid)), _matrices(std::move(matrices)) {
    if (_matrices.size() != _monoid->size()) {
      throw InputError("representation needs one matrix per element: got "
                       + std::to_string(_matrices.size()) + ", expected "
                       + std::to_string(_monoid->size()));
    }
    _dim = _matrices.front().rows();
    for (Element a = 0; a < _matrices.size(); ++a) {
      if (!_matrices[a].is_square() || _matrices[a].rows() != _dim) {
        throw InputError("matrix of element " + _monoid->label(a)
                         + " is not " + std::to_string(_dim) + "x"
                         + std::to_string(_dim));
      }
    }
    validate();
  }

  Representation Representation::unchecked(MonoidPtr           monoid,
                                           std::size_t         dim,
                                           std::vector<Matrix> matrices) {
    Representation r;
    r._monoid   = std::move(monoid);
    r._dim      = dim;
    r._matrices = std::move(matrices);
    return r;
  }

  void Representation::validate() const {
    Monoid const& m = *_monoid;
    if (_matrices[m.identity()] != Matrix::identity(_dim)) {
      throw InputError("identity element " + m.label(m.identity())
                       + " is not mapped to the identity matrix");
    }
    for (Element a = 0; a < m.size(); ++a) {
      for (Element b = 0; b < m.size(); ++b) {
        if (_matrices[a] * _matrices[b] != _matrices[m.product(a, b)]) {
          throw InputError("homomorphism property fails at ("
                           + m.label(a) + "," + m.label(b) + ")");
        }
      }
    }
  }

  Representation trivial_representation(MonoidPtr monoid) {
    std::vector<Matrix> mats(monoid->size(), Matrix::identity(1));
    return Representation::unchecked(std::move(monoid), 1, std::move(mats));
  }

  Representation
  natural_representation(MonoidPtr                          monoid,
                         std::vector<Transformation> const& elements) {
    if (elements.size() != monoid->size()) {
      throw InputError("one transformation per element required");
    }
    std::size_t         k = elements.empty() ? 0 : elements.front().size();
    std::vector<Matrix> mats;
    for (auto const& f : elements) {
      Matrix p(k, k);
      for (std::size_t i = 0; i < k; ++i) {
        p(f[i], i) = 1;
      }
      mats.push_back(std::move(p));
    }
    return Representation(std::move(monoid), std::move(mats));
  }

  Representation defining_representation(MonoidPtr           monoid,
                                         std::vector<Matrix> elements) {
    return Representation(std::move(monoid), std::move(elements));
  }

  Representation regular_representation(MonoidPtr monoid) {
    Monoid const&       m = *monoid;
    std::vector<Matrix> mats;
    for (Element a = 0; a < m.size(); ++a) {
      Matrix l(m.size(), m.size());
      for (Element b = 0; b < m.size(); ++b) {
        l(m.product(a, b), b) = 1;
      }
      mats.push_back(std::move(l));
    }
    std::size_t n = m.size();
    return Representation::unchecked(std::move(monoid), n, std::move(mats));
  }

  Representation nt_paper_representation(std::size_t t) {
    if (t < 2) {
      throw InputError("the N_t representation requires t >= 2");
    }
    auto                monoid = std::make_shared<Monoid const>(nt_monoid(t));
    std::vector<Matrix> mats;
    mats.push_back(Matrix::zero(2, 2));
    mats.push_back(Matrix::identity(2));
    for (std::size_t j = 2; j <= t; ++j) {
      mats.push_back(Matrix{{0, static_cast<std::int64_t>(j)}, {0, 0}});
    }
    return Representation(std::move(monoid), std::move(mats));
  }

  FaithfulCheck is_faithful(Representation const& rho) {
    std::map<Vector, Element> seen;
    for (Element a = 0; a < rho.monoid().size(); ++a) {
      auto [it, fresh] = seen.emplace(rho.matrix(a).entries(), a);
      if (!fresh) {
        return {false, std::make_pair(it->second, a)};
      }
    }
    return {};
  }

  Character character(Representation const& rho) {
    Character chi;
    for (auto const& m : rho.matrices()) {
      chi.values.push_back(m.trace());
    }
    return chi;
  }

  std::vector<Rational> distinct_character_values(Representation const& rho) {
    std::vector<Rational> out;
    for (auto const& v : character(rho).values) {
      if (std::find(out.begin(), out.end(), v) == out.end()) {
        out.push_back(v);
      }
    }
    return out;
  }

  std::vector<Polynomial> distinct_charpolys(Representation const& rho) {
    std::vector<Polynomial> out;
    for (auto const& m : rho.matrices()) {
      Polynomial p = charpoly(m);
      if (std::find(out.begin(), out.end(), p) == out.end()) {
        out.push_back(std::move(p));
      }
    }
    return out;
  }

  ElementSubset character_kernel(Representation const& rho) {
    Rational const       n(static_cast<std::int64_t>(rho.dim()));
    Matrix const         id = Matrix::identity(rho.dim());
    Character const      chi = character(rho);
    std::vector<Element> by_trace, by_matrix;
    for (Element a = 0; a < rho.monoid().size(); ++a) {
      if (chi.values[a] == n) {
        by_trace.push_back(a);
      }
      if (rho.matrix(a) == id) {
        by_matrix.push_back(a);
      }
    }
    if (by_trace != by_matrix) {
      throw InvariantViolation(
          "character kernel disagrees with the kernel of the representation");
    }
    return ElementSubset(std::move(by_trace));
  }

  Representation tensor_power(Representation const& rho, std::size_t i) {
    if (i == 0) {
      return trivial_representation(rho.monoid_ptr());
    }
    std::vector<Matrix> mats;
    for (auto const& m : rho.matrices()) {
      Matrix p = m;
      for (std::size_t k = 1; k < i; ++k) {
        p = kron(p, m);
      }
      mats.push_back(std::move(p));
    }
    std::size_t dim = 1;
    for (std::size_t k = 0; k < i; ++k) {
      dim *= rho.dim();
    }
    return Representation::unchecked(rho.monoid_ptr(), dim, std::move(mats));
  }

  std::vector<std::vector<std::size_t>> monomial_basis(std::size_t variables,
                                                       std::size_t degree) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t>              current;
    // Depth-first over nondecreasing tuples yields lexicographic order.
    auto rec = [&](auto&& self, std::size_t start) -> void {
      if (current.size() == degree) {
        out.push_back(current);
        return;
      }
      for (std::size_t v = start; v < variables; ++v) {
        current.push_back(v);
        self(self, v);
        current.pop_back();
      }
    };
    rec(rec, 0);
    return out;
  }

  Representation sym_power(Representation const& rho, std::size_t d) {
    if (d == 0) {
      return trivial_representation(rho.monoid_ptr());
    }
    std::size_t const n     = rho.dim();
    auto const        basis = monomial_basis(n, d);
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      index.emplace(basis[k], k);
    }
    std::vector<Matrix> mats;
    for (auto const& m : rho.matrices()) {
      Matrix s(basis.size(), basis.size());
      for (std::size_t col = 0; col < basis.size(); ++col) {
        // Expand the product of the images of the variables of x^alpha.
        std::map<std::vector<std::size_t>, Rational> poly{{{}, Rational(1)}};
        for (std::size_t var : basis[col]) {
          std::map<std::vector<std::size_t>, Rational> next;
          for (auto const& [mono, coeff] : poly) {
            for (std::size_t i = 0; i < n; ++i) {
              if (m(i, var).is_zero()) {
                continue;
              }
              auto grown = mono;
              grown.insert(std::upper_bound(grown.begin(), grown.end(), i), i);
              next[std::move(grown)].add_product(coeff, m(i, var));
            }
          }
          poly = std::move(next);
        }
        for (auto const& [mono, coeff] : poly) {
          s(index.at(mono), col) = coeff;
        }
      }
      mats.push_back(std::move(s));
    }
    return Representation::unchecked(
        rho.monoid_ptr(), basis.size(), std::move(mats));
  }

  Rational sym_power_character(Representation const& rho,
                               Element               m,
                               std::size_t           d) {
    Monoid const& monoid = rho.monoid();
    Vector        p;
    Element       power = m;
    for (std::size_t i = 1; i <= d; ++i) {
      p.push_back(rho.matrix(power).trace());
      power = monoid.product(power, m);
    }
    return complete_homogeneous_from_power_sums(p, d);
  }

  Representation direct_sum(MonoidPtr                          monoid,
                            std::vector<Representation> const& parts) {
    std::size_t dim = 0;
    for (auto const& r : parts) {
      if (!(r.monoid() == *monoid)) {
        throw InputError("direct sum of representations of different monoids");
      }
      dim += r.dim();
    }
    std::vector<Matrix> mats;
    for (Element a = 0; a < monoid->size(); ++a) {
      std::vector<Matrix> blocks;
      for (auto const& r : parts) {
        blocks.push_back(r.matrix(a));
      }
      mats.push_back(block_diagonal(blocks));
    }
    return Representation::unchecked(std::move(monoid), dim, std::move(mats));
  }

  LocalRepresentation restrict_to_local(Representation const& rho, Element e) {
    Monoid const& m     = rho.monoid();
    ElementSubset local = local_monoid(m, e);
    Submonoid     sub   = submonoid(m, local, e);

    Echelon     ech = rref(rho.matrix(e).transpose());
    std::size_t k   = ech.pivots.size();
    Matrix      basis(rho.dim(), k);
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t i = 0; i < rho.dim(); ++i) {
        basis(i, j) = ech.reduced(j, i);
      }
    }
    // Basis vector j has a 1 at pivot j and 0 at every other pivot, so the
    // coordinates of a vector in eV are its entries at the pivots.
    std::vector<Matrix> mats;
    for (Element x : sub.embedding) {
      Matrix image = rho.matrix(x) * basis;
      Matrix coords(k, k);
      for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t l = 0; l < k; ++l) {
          coords(j, l) = image(ech.pivots[j], l);
        }
      }
      mats.push_back(std::move(coords));
    }
    auto local_monoid_ptr = std::make_shared<Monoid const>(sub.monoid);
    Representation rep(local_monoid_ptr, std::move(mats));
    return {std::move(sub), std::move(basis), std::move(rep)};
  }

}  // namespace mbt
