#include "mbt/monoid.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "mbt/error.hpp"

namespace mbt {

  Monoid Monoid::from_cayley_table(Element                  identity,
                                   Table const&             table,
                                   std::vector<std::string> labels) {
    std::size_t n = table.size();
    if (n == 0) {
      throw InputError("Cayley table is empty");
    }
    if (identity >= n) {
      throw InputError("identity " + std::to_string(identity)
                       + " out of range");
    }
    Monoid m;
    m._size     = n;
    m._identity = identity;
    m._table.reserve(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      if (table[a].size() != n) {
        throw InputError("Cayley table row " + std::to_string(a)
                         + " has length " + std::to_string(table[a].size())
                         + ", expected " + std::to_string(n));
      }
      for (std::size_t b = 0; b < n; ++b) {
        if (table[a][b] >= n) {
          throw InputError("Cayley table entry (" + std::to_string(a) + ","
                           + std::to_string(b) + ") out of range");
        }
        m._table.push_back(table[a][b]);
      }
    }
    for (Element a = 0; a < n; ++a) {
      if (m.product(identity, a) != a || m.product(a, identity) != a) {
        throw InputError("identity law fails at element "
                         + std::to_string(a));
      }
    }
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        Element ab = m.product(a, b);
        for (Element c = 0; c < n; ++c) {
          if (m.product(ab, c) != m.product(a, m.product(b, c))) {
            throw InputError("associativity fails at (" + std::to_string(a)
                             + "," + std::to_string(b) + ","
                             + std::to_string(c) + ")");
          }
        }
      }
    }
    if (labels.empty()) {
      for (Element a = 0; a < n; ++a) {
        labels.push_back(std::to_string(a));
      }
    } else if (labels.size() != n) {
      throw InputError("label count does not match monoid size");
    }
    m._labels = std::move(labels);
    return m;
  }

  Element Monoid::power(Element a, std::size_t k) const {
    Element result = _identity;
    for (std::size_t i = 0; i < k; ++i) {
      result = product(result, a);
    }
    return result;
  }

  Monoid::Table Monoid::table() const {
    Table t(_size, std::vector<Element>(_size));
    for (Element a = 0; a < _size; ++a) {
      for (Element b = 0; b < _size; ++b) {
        t[a][b] = product(a, b);
      }
    }
    return t;
  }

  std::optional<Element> Monoid::find(std::string const& label) const {
    auto it = std::find(_labels.begin(), _labels.end(), label);
    if (it == _labels.end()) {
      return std::nullopt;
    }
    return static_cast<Element>(it - _labels.begin());
  }

  ElementSubset::ElementSubset(std::vector<Element> members)
      : _members(std::move(members)) {
    std::sort(_members.begin(), _members.end());
    _members.erase(std::unique(_members.begin(), _members.end()),
                   _members.end());
  }

  bool ElementSubset::contains(Element a) const {
    return std::binary_search(_members.begin(), _members.end(), a);
  }

  std::string transformation_label(Transformation const& f) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < f.size(); ++i) {
      os << (i ? "," : "") << f[i] + 1;
    }
    os << ']';
    return os.str();
  }

  namespace {
    // Breadth-first closure; x * g appended when new. Returns the element
    // list and the Cayley table over it.
    template <typename T, typename Mul, typename Key>
    std::pair<std::vector<T>, Monoid::Table>
    close(T identity, std::vector<T> const& gens, Mul mul, Key key,
          std::size_t cap) {
      std::vector<T>                        elts{identity};
      std::map<decltype(key(identity)), Element> index{{key(identity), 0}};
      auto                                  intern = [&](T x) -> Element {
        auto k  = key(x);
        auto it = index.find(k);
        if (it != index.end()) {
          return it->second;
        }
        if (elts.size() >= cap) {
          throw InputError("cap exceeded: more than " + std::to_string(cap)
                           + " distinct elements");
        }
        index.emplace(std::move(k), elts.size());
        elts.push_back(std::move(x));
        return elts.size() - 1;
      };
      std::vector<Element> gen_index;
      for (auto const& g : gens) {
        gen_index.push_back(intern(g));
      }
      for (std::size_t i = 0; i < elts.size(); ++i) {
        for (auto const& g : gens) {
          intern(mul(elts[i], g));
        }
      }
      // Full table by multiplying element representatives.
      std::size_t   n = elts.size();
      Monoid::Table table(n, std::vector<Element>(n));
      for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
          auto it = index.find(key(mul(elts[a], elts[b])));
          if (it == index.end()) {
            throw InvariantViolation("closure is not closed under product");
          }
          table[a][b] = it->second;
        }
      }
      return {std::move(elts), std::move(table)};
    }
  }  // namespace

  TransformationMonoid
  from_transformations(std::size_t                        degree,
                       std::vector<Transformation> const& generators) {
    for (auto const& g : generators) {
      if (g.size() != degree) {
        throw InputError("transformation " + transformation_label(g)
                         + " does not have degree " + std::to_string(degree));
      }
      for (auto x : g) {
        if (x >= degree) {
          throw InputError("transformation " + transformation_label(g)
                           + " has an image out of range");
        }
      }
    }
    Transformation id(degree);
    for (std::size_t i = 0; i < degree; ++i) {
      id[i] = i;
    }
    auto compose = [](Transformation const& f, Transformation const& g) {
      Transformation h(g.size());
      for (std::size_t i = 0; i < g.size(); ++i) {
        h[i] = f[g[i]];
      }
      return h;
    };
    auto [elts, table] = close(
        id, generators, compose, [](Transformation const& f) { return f; },
        static_cast<std::size_t>(-1));
    std::vector<std::string> labels;
    for (auto const& f : elts) {
      labels.push_back(transformation_label(f));
    }
    return {Monoid::from_cayley_table(0, table, std::move(labels)),
            std::move(elts)};
  }

  MatrixMonoid from_matrices(std::vector<Matrix> const& generators,
                             std::size_t                cap) {
    if (generators.empty()) {
      throw InputError("matrix monoid needs a dimension; no generators given");
    }
    std::size_t n = generators.front().rows();
    for (auto const& g : generators) {
      if (!g.is_square() || g.rows() != n) {
        throw InputError("matrix generators must be square of equal size");
      }
    }
    auto [elts, table] = close(
        Matrix::identity(n), generators,
        [](Matrix const& a, Matrix const& b) { return a * b; },
        [](Matrix const& a) { return a.entries(); }, cap);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < elts.size(); ++i) {
      labels.push_back("g" + std::to_string(i));
    }
    return {Monoid::from_cayley_table(0, table, std::move(labels)),
            std::move(elts)};
  }

  Monoid nt_monoid(std::size_t t) {
    if (t < 1) {
      throw InputError("N_t requires t >= 1");
    }
    Monoid::Table table(t + 1, std::vector<Element>(t + 1, 0));
    for (Element a = 0; a <= t; ++a) {
      table[1][a] = a;
      table[a][1] = a;
    }
    return Monoid::from_cayley_table(1, table);
  }

  ElementSubset idempotents(Monoid const& m) {
    std::vector<Element> out;
    for (Element a = 0; a < m.size(); ++a) {
      if (m.is_idempotent(a)) {
        out.push_back(a);
      }
    }
    return ElementSubset(std::move(out));
  }

  namespace {
    void require_idempotent(Monoid const& m, Element e) {
      if (e >= m.size() || !m.is_idempotent(e)) {
        throw InputError("element " + (e < m.size() ? m.label(e) : std::to_string(e))
                         + " is not an idempotent");
      }
    }
  }  // namespace

  ElementSubset local_monoid(Monoid const& m, Element e) {
    require_idempotent(m, e);
    std::vector<Element> out;
    for (Element x = 0; x < m.size(); ++x) {
      out.push_back(m.product(m.product(e, x), e));
    }
    return ElementSubset(std::move(out));
  }

  ElementSubset unit_group(Monoid const& m, Element e) {
    ElementSubset        local = local_monoid(m, e);
    std::vector<Element> out;
    for (Element g : local) {
      for (Element h : local) {
        if (m.product(g, h) == e && m.product(h, g) == e) {
          out.push_back(g);
          break;
        }
      }
    }
    return ElementSubset(std::move(out));
  }

  ElementSubset local_ideal(Monoid const& m, Element e) {
    ElementSubset        local = local_monoid(m, e);
    ElementSubset        units = unit_group(m, e);
    std::vector<Element> out;
    std::set_difference(local.begin(), local.end(), units.begin(), units.end(),
                        std::back_inserter(out));
    return ElementSubset(std::move(out));
  }

  std::optional<Element> has_zero(Monoid const& m) {
    for (Element z = 0; z < m.size(); ++z) {
      bool is_zero = true;
      for (Element x = 0; x < m.size() && is_zero; ++x) {
        is_zero = m.product(z, x) == z && m.product(x, z) == z;
      }
      if (is_zero) {
        return z;
      }
    }
    return std::nullopt;
  }

  Submonoid submonoid(Monoid const&        m,
                      ElementSubset const& subset,
                      Element              identity) {
    if (!subset.contains(identity)) {
      throw InputError("submonoid identity not in subset");
    }
    std::vector<Element> const& emb = subset.members();
    std::map<Element, Element>  local;
    for (Element i = 0; i < emb.size(); ++i) {
      local[emb[i]] = i;
    }
    Monoid::Table table(emb.size(), std::vector<Element>(emb.size()));
    for (Element i = 0; i < emb.size(); ++i) {
      for (Element j = 0; j < emb.size(); ++j) {
        auto it = local.find(m.product(emb[i], emb[j]));
        if (it == local.end()) {
          throw InputError("subset is not closed under the product");
        }
        table[i][j] = it->second;
      }
    }
    std::vector<std::string> labels;
    for (Element a : emb) {
      labels.push_back(m.label(a));
    }
    return {Monoid::from_cayley_table(local.at(identity), table,
                                      std::move(labels)),
            emb};
  }

  MonoidMorphism::MonoidMorphism(MonoidPtr            source,
                                 MonoidPtr            target,
                                 std::vector<Element> map)
      : _source(std::move(source)),
        _target(std::move(target)),
        _map(std::move(map)) {
    if (_map.size() != _source->size()) {
      throw InputError("morphism map length does not match source size");
    }
    for (Element x : _map) {
      if (x >= _target->size()) {
        throw InputError("morphism image out of range");
      }
    }
    if (_map[_source->identity()] != _target->identity()) {
      throw InputError("morphism does not preserve the identity");
    }
    for (Element a = 0; a < _source->size(); ++a) {
      for (Element b = 0; b < _source->size(); ++b) {
        if (_map[_source->product(a, b)]
            != _target->product(_map[a], _map[b])) {
          throw InputError("morphism fails at (" + std::to_string(a) + ","
                           + std::to_string(b) + ")");
        }
      }
    }
  }

  LiCheck is_li_morphism(MonoidMorphism const& phi) {
    Monoid const& src = phi.source();
    for (Element e : idempotents(src)) {
      for (Element x : local_monoid(src, e)) {
        if (x != e && phi(x) == phi(e)) {
          return {false, std::make_pair(e, x)};
        }
      }
    }
    return {};
  }

}  // namespace mbt
