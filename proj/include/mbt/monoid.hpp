#ifndef MBT_MONOID_HPP_
#define MBT_MONOID_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mbt/matrix.hpp"

namespace mbt {

  using Element = std::size_t;

  //! A finite monoid given by its Cayley table. Immutable; the identity and
  //! associativity laws are checked exhaustively on construction.
  class Monoid {
   public:
    using Table = std::vector<std::vector<Element>>;

    //! Throws InputError naming the first violated identity law or
    //! associativity triple (a, b, c) in lexicographic order.
    static Monoid from_cayley_table(Element                  identity,
                                    Table const&             table,
                                    std::vector<std::string> labels = {});

    [[nodiscard]] std::size_t size() const noexcept { return _size; }
    [[nodiscard]] Element     identity() const noexcept { return _identity; }
    [[nodiscard]] Element     product(Element a, Element b) const {
      return _table[a * _size + b];
    }
    [[nodiscard]] Element power(Element a, std::size_t k) const;
    [[nodiscard]] bool    is_idempotent(Element e) const {
      return product(e, e) == e;
    }
    [[nodiscard]] Table table() const;

    [[nodiscard]] std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }
    [[nodiscard]] std::string const& label(Element a) const {
      return _labels[a];
    }
    [[nodiscard]] std::optional<Element> find(std::string const& label) const;

    friend bool operator==(Monoid const& a, Monoid const& b) {
      return a._identity == b._identity && a._table == b._table;
    }

   private:
    Monoid() = default;

    std::size_t              _size     = 0;
    Element                  _identity = 0;
    std::vector<Element>     _table;
    std::vector<std::string> _labels;
  };

  using MonoidPtr = std::shared_ptr<Monoid const>;

  //! A sorted, duplicate-free set of elements of some monoid.
  class ElementSubset {
   public:
    ElementSubset() = default;
    explicit ElementSubset(std::vector<Element> members);

    [[nodiscard]] std::vector<Element> const& members() const noexcept {
      return _members;
    }
    [[nodiscard]] std::size_t size() const noexcept { return _members.size(); }
    [[nodiscard]] bool        empty() const noexcept { return _members.empty(); }
    [[nodiscard]] bool        contains(Element a) const;
    [[nodiscard]] auto        begin() const { return _members.begin(); }
    [[nodiscard]] auto        end() const { return _members.end(); }

    friend bool operator==(ElementSubset const&, ElementSubset const&) = default;

   private:
    std::vector<Element> _members;
  };

  //! Transformations act on {0, ..., k-1}; composition (f g)(i) = f(g(i)).
  using Transformation = std::vector<std::size_t>;

  struct TransformationMonoid {
    Monoid                      monoid;
    std::vector<Transformation> elements;
  };

  struct MatrixMonoid {
    Monoid              monoid;
    std::vector<Matrix> elements;
  };

  //! Closure of the generators under composition. Elements are ordered
  //! identity first, then breadth-first by right multiplication with the
  //! generators. Labels use 1-based one-line notation, e.g. "[2,3,1]".
  [[nodiscard]] TransformationMonoid
  from_transformations(std::size_t                        degree,
                       std::vector<Transformation> const& generators);

  //! One-line notation with 1-based images.
  [[nodiscard]] std::string transformation_label(Transformation const& f);

  inline constexpr std::size_t default_matrix_cap = 10000;

  //! Closure under matrix multiplication with the identity adjoined; throws
  //! InputError("cap exceeded ...") beyond cap elements. Labels "g<i>".
  [[nodiscard]] MatrixMonoid
  from_matrices(std::vector<Matrix> const& generators,
                std::size_t                cap = default_matrix_cap);

  //! N_t = {0, 1, ..., t}: 1 is the identity and every product of two
  //! non-identity elements is 0. Element i carries label "i".
  [[nodiscard]] Monoid nt_monoid(std::size_t t);

  [[nodiscard]] ElementSubset idempotents(Monoid const& m);

  //! eMe; throws InputError when e is not idempotent.
  [[nodiscard]] ElementSubset local_monoid(Monoid const& m, Element e);
  //! G_e, the group of units of eMe.
  [[nodiscard]] ElementSubset unit_group(Monoid const& m, Element e);
  //! I_e = eMe \ G_e.
  [[nodiscard]] ElementSubset local_ideal(Monoid const& m, Element e);

  [[nodiscard]] std::optional<Element> has_zero(Monoid const& m);

  //! A subset closed under the product, containing its own identity, viewed
  //! as a monoid. embedding[i] is the ambient element of local element i.
  struct Submonoid {
    Monoid               monoid;
    std::vector<Element> embedding;
  };

  //! Throws InputError unless the subset is closed and identity lies in it.
  [[nodiscard]] Submonoid submonoid(Monoid const&        m,
                                    ElementSubset const& subset,
                                    Element              identity);

  class MonoidMorphism {
   public:
    //! Throws InputError if map is not a monoid homomorphism.
    MonoidMorphism(MonoidPtr source, MonoidPtr target, std::vector<Element> map);

    [[nodiscard]] Monoid const& source() const noexcept { return *_source; }
    [[nodiscard]] Monoid const& target() const noexcept { return *_target; }
    [[nodiscard]] Element       operator()(Element a) const { return _map[a]; }

   private:
    MonoidPtr            _source;
    MonoidPtr            _target;
    std::vector<Element> _map;
  };

  struct LiCheck {
    bool                                   holds = true;
    std::optional<std::pair<Element, Element>> witness;  // (e, x)
  };

  //! Whether phi separates every idempotent e from eMe \ {e}.
  [[nodiscard]] LiCheck is_li_morphism(MonoidMorphism const& phi);

}  // namespace mbt

#endif  // MBT_MONOID_HPP_
