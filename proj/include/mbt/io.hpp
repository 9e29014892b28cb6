#ifndef MBT_IO_HPP_
#define MBT_IO_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mbt/molien.hpp"
#include "mbt/monoid.hpp"
#include "mbt/representation.hpp"
#include "mbt/verify.hpp"

namespace mbt {

  using Json        = nlohmann::json;
  using OrderedJson = nlohmann::ordered_json;

  //! A monoid together with whatever its input format says about it.
  struct LoadedMonoid {
    MonoidPtr                                  monoid;
    std::string                                type;
    std::optional<std::vector<Transformation>> transformations;
    std::optional<std::vector<Matrix>>         matrices;
    std::optional<std::size_t>                 nt_t;
  };

  //! Accepts {"type": "cayley" | "transformations" | "nt" | "matrices", ...}.
  [[nodiscard]] LoadedMonoid load_monoid(Json const& input);
  [[nodiscard]] LoadedMonoid
  load_monoid_file(std::filesystem::path const& path);

  //! {"mode": "explicit" (default) | "natural" | "nt-paper" | "regular" |
  //!  "trivial", "dim": n, "matrices": {"<label>": [[...]]}}.
  [[nodiscard]] Representation load_representation(Json const&         input,
                                                   LoadedMonoid const& monoid);

  //! Uses the given monoid, else the file's "monoid" member: an inline
  //! monoid object or a path relative to the file.
  [[nodiscard]] Representation
  load_representation_file(std::filesystem::path const& path,
                           std::optional<LoadedMonoid>  monoid = {});

  [[nodiscard]] Json read_json_file(std::filesystem::path const& path);

  [[nodiscard]] Matrix parse_matrix(Json const& rows, std::string const& where);

  [[nodiscard]] OrderedJson to_json(Vector const& v);
  [[nodiscard]] OrderedJson to_json(Polynomial const& p);
  [[nodiscard]] OrderedJson to_json(RationalFunction const& f);
  [[nodiscard]] OrderedJson to_json(VerificationReport const& report);

  //! Parses "label:rational,label:rational,...".
  [[nodiscard]] AlgebraElement parse_weights(std::string const& text,
                                             Monoid const&      m);

}  // namespace mbt

#endif  // MBT_IO_HPP_
