// mbt: finite monoids, their rational representations, and checks that
// every simple module shows up among a bounded number of tensor or
// symmetric powers of a faithful module.

#include <cstdlib>
#include <future>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mbt/error.hpp"
#include "mbt/io.hpp"
#include "mbt/molien.hpp"
#include "mbt/verify.hpp"

namespace {

  using namespace mbt;

  constexpr int exit_ok        = 0;
  constexpr int exit_violation = 1;
  constexpr int exit_input     = 2;

  std::string join(std::vector<std::string> const& xs, char const* sep = ", ") {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      out += (i ? sep : "") + xs[i];
    }
    return out;
  }

  std::vector<std::string> labels_of(Monoid const& m, ElementSubset const& s) {
    std::vector<std::string> out;
    for (Element a : s) {
      out.push_back(m.label(a));
    }
    return out;
  }

  std::string opt_str(std::optional<std::size_t> const& x) {
    return x ? std::to_string(*x) : std::string("-");
  }

  struct Options {
    std::string monoid_path;
    std::string rep_path;
    std::string which  = "all";
    std::string mode   = "tensor";
    std::string idempotent;
    std::string weights;
    std::size_t from       = 2;
    std::size_t to         = 12;
    std::size_t N          = 6;
    std::size_t powers_cap = 12;
    bool        json           = false;
    bool        parallel       = false;
    bool        allow_large    = false;
    bool        corrupt_radical = false;
  };

  int run_info(Options const& opt) {
    LoadedMonoid  lm = load_monoid_file(opt.monoid_path);
    Monoid const& m  = *lm.monoid;
    auto        zero = has_zero(m);
    OrderedJson j;
    j["size"]     = m.size();
    j["identity"] = m.label(m.identity());
    j["zero"]     = zero ? OrderedJson(m.label(*zero)) : OrderedJson(nullptr);
    ElementSubset idem = idempotents(m);
    j["idempotents"]   = labels_of(m, idem);
    OrderedJson local  = OrderedJson::array();
    for (Element e : idem) {
      OrderedJson row;
      row["e"]   = m.label(e);
      row["eMe"] = local_monoid(m, e).size();
      row["G_e"] = unit_group(m, e).size();
      row["I_e"] = local_ideal(m, e).size();
      local.push_back(row);
    }
    j["local"] = local;
    std::vector<std::string> poly_strings;
    if (!opt.rep_path.empty()) {
      Representation rho = load_representation_file(opt.rep_path, lm);
      OrderedJson    rep;
      rep["dim"]      = rho.dim();
      rep["faithful"] = is_faithful(rho).faithful;
      auto values     = distinct_character_values(rho);
      rep["r"]        = values.size();
      rep["character_values"] = to_json(Vector(values.begin(), values.end()));
      auto polys = distinct_charpolys(rho);
      rep["s"]   = polys.size();
      OrderedJson ps = OrderedJson::array();
      for (auto const& p : polys) {
        ps.push_back(to_json(p));
        poly_strings.push_back(p.str('x'));
      }
      rep["charpolys"]  = ps;
      j["representation"] = rep;
    }
    if (opt.json) {
      std::cout << j.dump() << '\n';
      return exit_ok;
    }
    std::cout << "size:        " << m.size() << '\n'
              << "identity:    " << m.label(m.identity()) << '\n'
              << "zero:        " << (zero ? m.label(*zero) : "none") << '\n'
              << "idempotents: {" << join(labels_of(m, idem)) << "}\n\n";
    std::cout << std::left << std::setw(16) << "e" << std::right
              << std::setw(8) << "|eMe|" << std::setw(8) << "|G_e|"
              << std::setw(8) << "|I_e|" << '\n';
    for (auto const& row : j["local"]) {
      std::cout << std::left << std::setw(16) << row["e"].get<std::string>()
                << std::right << std::setw(8) << row["eMe"].get<std::size_t>()
                << std::setw(8) << row["G_e"].get<std::size_t>()
                << std::setw(8) << row["I_e"].get<std::size_t>() << '\n';
    }
    if (j.contains("representation")) {
      auto const& rep = j["representation"];
      std::vector<std::string> values;
      for (auto const& v : rep["character_values"]) {
        values.push_back(v.get<std::string>());
      }
      std::cout << "\ndim:         " << rep["dim"].get<std::size_t>() << '\n'
                << "faithful:    " << (rep["faithful"].get<bool>() ? "true" : "false")
                << '\n'
                << "r:           " << rep["r"].get<std::size_t>() << "  {"
                << join(values) << "}\n"
                << "s:           " << rep["s"].get<std::size_t>() << "  {"
                << join(poly_strings) << "}\n";
    }
    return exit_ok;
  }

  void print_report_table(std::vector<VerificationReport> const& reports) {
    std::cout << std::left << std::setw(21) << "theorem" << std::right
              << std::setw(5) << "r" << std::setw(5) << "s" << std::setw(7)
              << "bound" << std::setw(7) << "min_k" << std::setw(9)
              << "dim_rad" << std::setw(9) << "dim_ann" << std::setw(7)
              << "holds" << '\n';
    for (auto const& r : reports) {
      std::cout << std::left << std::setw(21) << to_string(r.theorem)
                << std::right << std::setw(5) << r.r << std::setw(5)
                << opt_str(r.s) << std::setw(7) << r.bound << std::setw(7)
                << opt_str(r.minimal_k) << std::setw(9) << r.dim_rad
                << std::setw(9) << r.dim_ann << std::setw(7)
                << (r.holds ? "yes" : "NO") << '\n';
    }
  }

  int run_verify(Options const& opt) {
    LoadedMonoid   lm  = load_monoid_file(opt.monoid_path);
    Representation rho = load_representation_file(opt.rep_path, lm);
    FaithfulCheck  fc  = is_faithful(rho);
    if (!fc.faithful) {
      throw InputError("representation is not faithful: elements "
                       + rho.monoid().label(fc.witness->first) + " and "
                       + rho.monoid().label(fc.witness->second)
                       + " have equal matrices");
    }
    std::vector<std::string> which;
    if (opt.which == "all") {
      which = {"tensor", "symmetric", "positive", "steinberg"};
      if (has_zero(rho.monoid())) {
        which = {"tensor", "symmetric", "steinberg"};
      }
    } else {
      which = {opt.which};
    }
    Subspace radical = radical_basis(rho.monoid(), opt.allow_large);
    if (opt.corrupt_radical) {
      radical = Subspace(rho.monoid().size());
    }
    auto run_one = [&](std::string const& w) {
      if (w == "tensor") {
        return verify_tensor_theorem(rho, radical);
      }
      if (w == "symmetric") {
        return verify_symmetric_theorem(rho, radical);
      }
      if (w == "positive") {
        return verify_positive_power_refinement(rho, radical);
      }
      if (w == "steinberg") {
        return verify_steinberg_bound(rho, radical);
      }
      throw InputError("--which: unknown theorem \"" + w + "\"");
    };
    std::vector<VerificationReport> reports;
    if (opt.parallel) {
      std::vector<std::future<VerificationReport>> futures;
      for (auto const& w : which) {
        futures.push_back(std::async(std::launch::async, run_one, w));
      }
      for (auto& f : futures) {
        reports.push_back(f.get());
      }
    } else {
      for (auto const& w : which) {
        reports.push_back(run_one(w));
      }
    }
    bool all_hold = true;
    for (auto const& r : reports) {
      all_hold = all_hold && r.holds;
    }
    if (opt.json) {
      OrderedJson j = OrderedJson::array();
      for (auto const& r : reports) {
        j.push_back(to_json(r));
      }
      std::cout << j.dump() << '\n';
    } else {
      print_report_table(reports);
      for (auto const& r : reports) {
        if (!r.holds) {
          std::cout << "violation (" << to_string(r.theorem)
                    << "): " << to_json(r).dump() << '\n';
        }
      }
    }
    return all_hold ? exit_ok : exit_violation;
  }

  int run_scan_nt(Options const& opt) {
    if (opt.from < 2 || opt.to < opt.from) {
      throw InputError("scan-nt: need 2 <= --from <= --to");
    }
    if (opt.mode != "tensor" && opt.mode != "symmetric") {
      throw InputError("--mode: expected tensor or symmetric");
    }
    PowerMode   mode = opt.mode == "tensor" ? PowerMode::tensor
                                            : PowerMode::symmetric;
    OrderedJson rows = OrderedJson::array();
    bool        all_hold = true;
    for (std::size_t t = opt.from; t <= opt.to; ++t) {
      Representation     rho = nt_paper_representation(t);
      VerificationReport rep = mode == PowerMode::tensor
                                   ? verify_tensor_theorem(rho)
                                   : verify_symmetric_theorem(rho);
      auto faithful = minimal_faithful_power(rho, mode, opt.powers_cap);
      auto covering = minimal_covering_power(rho, mode, opt.powers_cap);
      // Summands of the theorem's module; for tensor powers 0..1 this is
      // 1 + 2 = 3, whose square falls below |N_t| = t + 1 from t = 9 on.
      std::size_t dim_w = 0;
      for (std::size_t k : rep.powers_used) {
        std::size_t d = 1;
        if (mode == PowerMode::tensor) {
          for (std::size_t i = 0; i < k; ++i) {
            d *= 2;
          }
        } else {
          d = k + 1;
        }
        dim_w += d;
      }
      OrderedJson row;
      row["t"] = t;
      row["minimal_faithful_k"] =
          faithful ? OrderedJson(*faithful) : OrderedJson(nullptr);
      row["minimal_covering_k"] =
          covering ? OrderedJson(*covering) : OrderedJson(nullptr);
      row["bound"]   = rep.bound;
      row["dim_rad"] = rep.dim_rad;
      row["dim_ann"] = rep.dim_ann;
      row["dim_w"]   = dim_w;
      row["too_small_to_be_faithful"] = dim_w * dim_w < t + 1;
      row["holds"]   = rep.holds;
      all_hold       = all_hold && rep.holds;
      rows.push_back(row);
    }
    if (opt.json) {
      std::cout << rows.dump() << '\n';
    } else {
      std::cout << "N_t, two-dimensional representation, " << opt.mode
                << " powers (cap " << opt.powers_cap << ")\n";
      std::cout << std::setw(4) << "t" << std::setw(12) << "faithful_k"
                << std::setw(12) << "covering_k" << std::setw(7) << "bound"
                << std::setw(9) << "dim_rad" << std::setw(9) << "dim_ann"
                << std::setw(7) << "dim_W" << std::setw(13) << "dim_W^2<|M|"
                << std::setw(7) << "holds" << '\n';
      for (auto const& row : rows) {
        auto show = [](OrderedJson const& v) {
          return v.is_null() ? std::string(">cap") : std::to_string(v.get<std::size_t>());
        };
        std::cout << std::setw(4) << row["t"].get<std::size_t>()
                  << std::setw(12) << show(row["minimal_faithful_k"])
                  << std::setw(12) << show(row["minimal_covering_k"])
                  << std::setw(7) << row["bound"].get<std::size_t>()
                  << std::setw(9) << row["dim_rad"].get<std::size_t>()
                  << std::setw(9) << row["dim_ann"].get<std::size_t>()
                  << std::setw(7) << row["dim_w"].get<std::size_t>()
                  << std::setw(13)
                  << (row["too_small_to_be_faithful"].get<bool>() ? "yes" : "no")
                  << std::setw(7) << (row["holds"].get<bool>() ? "yes" : "NO")
                  << '\n';
      }
    }
    return all_hold ? exit_ok : exit_violation;
  }

  int run_molien(Options const& opt) {
    LoadedMonoid   lm  = load_monoid_file(opt.monoid_path);
    Representation rho = load_representation_file(opt.rep_path, lm);
    Monoid const&  m   = rho.monoid();
    auto           e   = m.find(opt.idempotent);
    if (!e) {
      throw InputError("--idempotent: no element labelled \"" + opt.idempotent
                       + "\"");
    }
    if (!m.is_idempotent(*e)) {
      throw InputError("--idempotent: " + opt.idempotent
                       + " is not an idempotent");
    }
    AlgebraElement   w      = parse_weights(opt.weights, m);
    RationalFunction f      = weighted_series(rho, *e, w);
    SeriesPrefix     series = series_prefix(f, opt.N);
    // Same coefficients from symmetric-power characters on the full module.
    Vector direct(opt.N + 1);
    for (Element x = 0; x < m.size(); ++x) {
      if (w.coefficients[x].is_zero()) {
        continue;
      }
      for (std::size_t d = 0; d <= opt.N; ++d) {
        direct[d].add_product(w.coefficients[x], sym_power_character(rho, x, d));
      }
    }
    bool agree = direct == series.coefficients;
    if (opt.json) {
      OrderedJson j;
      j["function"]   = to_json(f);
      j["series"]     = to_json(series.coefficients);
      j["cross_check"] = agree;
      std::cout << j.dump() << '\n';
    } else {
      std::cout << "g(t)   = (" << f.numerator().str() << ") / ("
                << f.denominator().str() << ")\n"
                << "series = (" << join(to_strings(series.coefficients))
                << ")\n"
                << "check  = " << (agree ? "agrees" : "MISMATCH")
                << " with weighted symmetric-power characters\n";
    }
    return agree ? exit_ok : exit_violation;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite monoid representations: tensor and symmetric power "
               "coverage of simple modules"};
  app.require_subcommand(1);
  Options opt;

  auto* info = app.add_subcommand("info", "Local structure and character data");
  info->add_option("monoid", opt.monoid_path, "Monoid JSON file")->required();
  info->add_option("representation", opt.rep_path, "Representation JSON file");
  info->add_flag("--json", opt.json, "Emit JSON");

  auto* verify = app.add_subcommand("verify", "Check the coverage bounds");
  verify->add_option("monoid", opt.monoid_path, "Monoid JSON file")->required();
  verify->add_option("representation", opt.rep_path, "Representation JSON file")
      ->required();
  verify->add_option("--which", opt.which,
                     "all | tensor | symmetric | positive | steinberg")
      ->check(CLI::IsMember({"all", "tensor", "symmetric", "positive",
                             "steinberg"}));
  verify->add_flag("--json", opt.json, "Emit JSON");
  verify->add_flag("--parallel", opt.parallel, "Run the checks concurrently");
  verify->add_flag("--allow-large", opt.allow_large,
                   "Lift the monoid size guard for the radical");
  verify->add_flag("--debug-corrupt-radical", opt.corrupt_radical)
      ->group("");  // test hook: replaces the radical by 0

  auto* scan = app.add_subcommand("scan-nt", "Scan the N_t family");
  scan->add_option("--from", opt.from, "First t (>= 2)");
  scan->add_option("--to", opt.to, "Last t");
  scan->add_option("--mode", opt.mode, "tensor | symmetric");
  scan->add_option("--powers-cap", opt.powers_cap,
                   "Largest power tried by the minimal-power scans")
      ->check(CLI::PositiveNumber);
  scan->add_flag("--json", opt.json, "Emit JSON");

  auto* molien = app.add_subcommand("molien", "Weighted Molien-type series");
  molien->add_option("monoid", opt.monoid_path, "Monoid JSON file")->required();
  molien->add_option("representation", opt.rep_path, "Representation JSON file")
      ->required();
  molien->add_option("--idempotent", opt.idempotent, "Idempotent label")
      ->required();
  molien->add_option("--weights", opt.weights, "label:rational,...")
      ->required();
  molien->add_option("-N", opt.N, "Highest series coefficient");
  molien->add_flag("--json", opt.json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_input;
  }

  try {
    if (*info) {
      return run_info(opt);
    }
    if (*verify) {
      return run_verify(opt);
    }
    if (*scan) {
      return run_scan_nt(opt);
    }
    return run_molien(opt);
  } catch (mbt::InputError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input;
  } catch (nlohmann::json::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input;
  } catch (mbt::InvariantViolation const& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return exit_violation;
  }
}
