#include "mbt/io.hpp"

#include <fstream>

#include "mbt/error.hpp"

namespace mbt {

  namespace {
    Json const& member(Json const& obj, char const* key, std::string const& where) {
      if (!obj.is_object() || !obj.contains(key)) {
        throw InputError(where + ": missing field \"" + key + "\"");
      }
      return obj.at(key);
    }

    std::size_t as_count(Json const& v, std::string const& where) {
      if (!v.is_number_integer() || v.get<long long>() < 0) {
        throw InputError(where + ": expected a non-negative integer");
      }
      return v.get<std::size_t>();
    }

    Rational as_rational(Json const& v, std::string const& where) {
      if (v.is_string()) {
        try {
          return Rational::parse(v.get<std::string>());
        } catch (InputError const& e) {
          throw InputError(where + ": " + e.what());
        }
      }
      if (v.is_number_integer()) {
        return Rational(v.get<std::int64_t>());
      }
      throw InputError(where + ": expected a rational string such as \"3/4\"");
    }
  }  // namespace

  Json read_json_file(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw InputError("cannot open " + path.string());
    }
    try {
      return Json::parse(in);
    } catch (Json::parse_error const& e) {
      throw InputError(path.string() + ": " + e.what());
    }
  }

  Matrix parse_matrix(Json const& rows, std::string const& where) {
    if (!rows.is_array()) {
      throw InputError(where + ": expected an array of rows");
    }
    std::size_t n    = rows.size();
    std::size_t cols = n == 0 ? 0 : rows[0].size();
    Matrix      m(n, cols);
    for (std::size_t i = 0; i < n; ++i) {
      std::string wi = where + "[" + std::to_string(i) + "]";
      if (!rows[i].is_array() || rows[i].size() != cols) {
        throw InputError(wi + ": expected a row of length "
                         + std::to_string(cols));
      }
      for (std::size_t j = 0; j < cols; ++j) {
        m(i, j) = as_rational(rows[i][j], wi + "[" + std::to_string(j) + "]");
      }
    }
    return m;
  }

  LoadedMonoid load_monoid(Json const& input) {
    std::string type = member(input, "type", "monoid").get<std::string>();
    LoadedMonoid out;
    out.type = type;
    if (type == "cayley") {
      Element     id    = as_count(member(input, "identity", "monoid"),
                                   "monoid.identity");
      Json const& table = member(input, "table", "monoid");
      if (!table.is_array()) {
        throw InputError("monoid.table: expected an array of rows");
      }
      Monoid::Table t;
      for (std::size_t i = 0; i < table.size(); ++i) {
        std::string where = "monoid.table[" + std::to_string(i) + "]";
        if (!table[i].is_array()) {
          throw InputError(where + ": expected an array");
        }
        std::vector<Element> row;
        for (std::size_t j = 0; j < table[i].size(); ++j) {
          row.push_back(
              as_count(table[i][j], where + "[" + std::to_string(j) + "]"));
        }
        t.push_back(std::move(row));
      }
      out.monoid = std::make_shared<Monoid const>(Monoid::from_cayley_table(id, t));
    } else if (type == "transformations") {
      std::size_t degree = as_count(member(input, "degree", "monoid"),
                                    "monoid.degree");
      Json const& gens = member(input, "generators", "monoid");
      std::vector<Transformation> gs;
      for (std::size_t g = 0; g < gens.size(); ++g) {
        std::string    where = "monoid.generators[" + std::to_string(g) + "]";
        Transformation f;
        for (std::size_t i = 0; i < gens[g].size(); ++i) {
          std::size_t image = as_count(gens[g][i], where);
          if (image < 1 || image > degree) {
            throw InputError(where + ": image " + std::to_string(image)
                             + " outside 1.." + std::to_string(degree));
          }
          f.push_back(image - 1);
        }
        if (f.size() != degree) {
          throw InputError(where + ": expected " + std::to_string(degree)
                           + " images");
        }
        gs.push_back(std::move(f));
      }
      auto tm             = from_transformations(degree, gs);
      out.monoid          = std::make_shared<Monoid const>(std::move(tm.monoid));
      out.transformations = std::move(tm.elements);
    } else if (type == "nt") {
      std::size_t t = as_count(member(input, "t", "monoid"), "monoid.t");
      if (t < 1) {
        throw InputError("monoid.t: N_t requires t >= 1");
      }
      out.monoid = std::make_shared<Monoid const>(nt_monoid(t));
      out.nt_t   = t;
    } else if (type == "matrices") {
      std::size_t dim = as_count(member(input, "dim", "monoid"), "monoid.dim");
      std::size_t cap = input.contains("cap")
                            ? as_count(input.at("cap"), "monoid.cap")
                            : default_matrix_cap;
      Json const& gens = member(input, "generators", "monoid");
      std::vector<Matrix> gs;
      for (std::size_t g = 0; g < gens.size(); ++g) {
        std::string where = "monoid.generators[" + std::to_string(g) + "]";
        Matrix      mat   = parse_matrix(gens[g], where);
        if (!mat.is_square() || mat.rows() != dim) {
          throw InputError(where + ": expected a " + std::to_string(dim) + "x"
                           + std::to_string(dim) + " matrix");
        }
        gs.push_back(std::move(mat));
      }
      if (gs.empty()) {
        gs.push_back(Matrix::identity(dim));
      }
      auto mm      = from_matrices(gs, cap);
      out.monoid   = std::make_shared<Monoid const>(std::move(mm.monoid));
      out.matrices = std::move(mm.elements);
    } else {
      throw InputError("monoid.type: unknown type \"" + type + "\"");
    }
    return out;
  }

  LoadedMonoid load_monoid_file(std::filesystem::path const& path) {
    Json input = read_json_file(path);
    try {
      return load_monoid(input);
    } catch (Json::exception const& e) {
      throw InputError(path.string() + ": " + e.what());
    } catch (InputError const& e) {
      throw InputError(path.string() + ": " + e.what());
    }
  }

  Representation load_representation(Json const& input, LoadedMonoid const& lm) {
    std::string mode = input.value("mode", std::string("explicit"));
    if (mode == "natural") {
      if (lm.transformations) {
        return natural_representation(lm.monoid, *lm.transformations);
      }
      if (lm.matrices) {
        return defining_representation(lm.monoid, *lm.matrices);
      }
      throw InputError("representation.mode: \"natural\" needs a "
                       "transformation or matrix monoid");
    }
    if (mode == "nt-paper") {
      if (!lm.nt_t) {
        throw InputError("representation.mode: \"nt-paper\" needs an nt monoid");
      }
      Representation rho = nt_paper_representation(*lm.nt_t);
      return Representation(lm.monoid, rho.matrices());
    }
    if (mode == "regular") {
      return regular_representation(lm.monoid);
    }
    if (mode == "trivial") {
      return trivial_representation(lm.monoid);
    }
    if (mode != "explicit") {
      throw InputError("representation.mode: unknown mode \"" + mode + "\"");
    }
    std::size_t dim  = as_count(member(input, "dim", "representation"),
                               "representation.dim");
    Json const& mats = member(input, "matrices", "representation");
    if (!mats.is_object()) {
      throw InputError("representation.matrices: expected an object keyed by "
                       "element label");
    }
    Monoid const&       m = *lm.monoid;
    std::vector<Matrix> out;
    for (Element a = 0; a < m.size(); ++a) {
      std::string where = "representation.matrices." + m.label(a);
      if (!mats.contains(m.label(a))) {
        throw InputError(where + ": missing");
      }
      Matrix mat = parse_matrix(mats.at(m.label(a)), where);
      if (dim == 0 && mat.rows() == 0) {
        mat = Matrix(0, 0);
      }
      if (mat.rows() != dim || mat.cols() != dim) {
        throw InputError(where + ": expected a " + std::to_string(dim) + "x"
                         + std::to_string(dim) + " matrix");
      }
      out.push_back(std::move(mat));
    }
    for (auto const& [label, value] : mats.items()) {
      if (!m.find(label)) {
        throw InputError("representation.matrices." + label
                         + ": no element with this label");
      }
    }
    return Representation(lm.monoid, std::move(out));
  }

  Representation load_representation_file(std::filesystem::path const& path,
                                          std::optional<LoadedMonoid>  monoid) {
    Json input = read_json_file(path);
    try {
      if (!monoid) {
        Json const& ref = member(input, "monoid", "representation");
        if (ref.is_string()) {
          monoid = load_monoid_file(path.parent_path() / ref.get<std::string>());
        } else {
          monoid = load_monoid(ref);
        }
      }
      return load_representation(input, *monoid);
    } catch (Json::exception const& e) {
      throw InputError(path.string() + ": " + e.what());
    } catch (InputError const& e) {
      throw InputError(path.string() + ": " + e.what());
    }
  }

  OrderedJson to_json(Vector const& v) {
    return OrderedJson(to_strings(v));
  }

  OrderedJson to_json(Polynomial const& p) {
    return to_json(p.coefficients());
  }

  OrderedJson to_json(RationalFunction const& f) {
    OrderedJson j;
    j["num"] = to_json(f.numerator());
    j["den"] = to_json(f.denominator());
    return j;
  }

  OrderedJson to_json(VerificationReport const& report) {
    OrderedJson j;
    j["theorem"] = to_string(report.theorem);
    j["r"]       = report.r;
    j["s"]       = report.s ? OrderedJson(*report.s) : OrderedJson(nullptr);
    j["dim"]     = report.dim;
    j["bound"]   = report.bound;
    j["dim_rad"] = report.dim_rad;
    j["dim_ann"] = report.dim_ann;
    j["holds"]   = report.holds;
    j["witness"] = report.witness ? to_json(*report.witness)
                                  : OrderedJson(nullptr);
    j["powers_used"] = report.powers_used;
    j["minimal_k"]   = report.minimal_k ? OrderedJson(*report.minimal_k)
                                        : OrderedJson(nullptr);
    return j;
  }

  AlgebraElement parse_weights(std::string const& text, Monoid const& m) {
    AlgebraElement w{Vector(m.size())};
    std::size_t    start = 0;
    while (start < text.size()) {
      std::size_t end  = text.find(',', start);
      std::string item = text.substr(start, end - start);
      std::size_t colon = item.find(':');
      if (colon == std::string::npos) {
        throw InputError("weights: expected label:rational, got \"" + item
                         + "\"");
      }
      std::string label = item.substr(0, colon);
      auto        a     = m.find(label);
      if (!a) {
        throw InputError("weights: no element labelled \"" + label + "\"");
      }
      w.coefficients[*a] += Rational::parse(item.substr(colon + 1));
      if (end == std::string::npos) {
        break;
      }
      start = end + 1;
    }
    return w;
  }

}  // namespace mbt
