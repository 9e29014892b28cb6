#include "mbt/verify.hpp"

#include "mbt/error.hpp"

namespace mbt {

  std::string to_string(Theorem t) {
    switch (t) {
      case Theorem::tensor:
        return "tensor";
      case Theorem::symmetric:
        return "symmetric";
      case Theorem::positive_refinement:
        return "positive-refinement";
      case Theorem::steinberg:
        return "steinberg";
    }
    return "unknown";
  }

  std::string to_string(PowerMode m) {
    return m == PowerMode::tensor ? "tensor" : "symmetric";
  }

  namespace {
    void require_faithful(Representation const& rho) {
      FaithfulCheck fc = is_faithful(rho);
      if (!fc.faithful) {
        auto [a, b] = *fc.witness;
        throw InputError("representation is not faithful: elements "
                         + rho.monoid().label(a) + " and "
                         + rho.monoid().label(b) + " have equal matrices");
      }
    }

    // Fills the containment fields of report for the sum of powers
    // first..last, plus the least prefix that already suffices.
    void check_powers(VerificationReport&            report,
                      Representation const&          rho,
                      PowerMode                      mode,
                      std::size_t                    first,
                      std::size_t                    last,
                      std::optional<Subspace> const& radical) {
      Monoid const& m   = rho.monoid();
      Subspace      rad = radical ? *radical : radical_basis(m);
      if (rad.ambient_dim() != m.size()) {
        throw InputError("radical lives in the wrong ambient space");
      }
      std::vector<Matrix> grams = power_grams(rho, mode, last);
      std::vector<Matrix> used;
      report.powers_used.clear();
      report.minimal_k.reset();
      for (std::size_t k = first; k <= last; ++k) {
        report.powers_used.push_back(k);
        used.push_back(grams[k]);
        if (!report.minimal_k
            && subspace_leq(annihilator_from_grams(used, m.size()), rad)
                   .holds) {
          report.minimal_k = k;
        }
      }
      Subspace    ann = annihilator_from_grams(used, m.size());
      Containment c   = subspace_leq(ann, rad);
      report.bound    = last;
      report.dim_rad  = rad.dim();
      report.dim_ann  = ann.dim();
      report.holds    = c.holds;
      report.witness  = c.witness;
    }
  }  // namespace

  std::vector<Matrix> power_grams(Representation const& rho,
                                  PowerMode             mode,
                                  std::size_t           max_power) {
    if (mode == PowerMode::symmetric) {
      return sym_power_grams(rho, max_power);
    }
    Matrix              frob = frobenius_gram(rho);
    std::vector<Matrix> grams;
    for (std::size_t i = 0; i <= max_power; ++i) {
      grams.push_back(tensor_power_gram(frob, i));
    }
    return grams;
  }

  VerificationReport verify_tensor_theorem(Representation const&          rho,
                                           std::optional<Subspace> const& radical) {
    require_faithful(rho);
    VerificationReport report;
    report.theorem = Theorem::tensor;
    report.r       = distinct_character_values(rho).size();
    report.dim     = rho.dim();
    check_powers(report, rho, PowerMode::tensor, 0, report.r - 1, radical);
    return report;
  }

  VerificationReport
  verify_symmetric_theorem(Representation const&          rho,
                           std::optional<Subspace> const& radical) {
    require_faithful(rho);
    VerificationReport report;
    report.theorem = Theorem::symmetric;
    report.s       = distinct_charpolys(rho).size();
    report.dim     = rho.dim();
    report.r       = rho.dim() * *report.s;
    // A zero-dimensional faithful module only exists for the trivial
    // monoid, where r = 0; the degree-0 power is always included.
    std::size_t last = report.r == 0 ? 0 : report.r - 1;
    check_powers(report, rho, PowerMode::symmetric, 0, last, radical);
    return report;
  }

  VerificationReport
  verify_positive_power_refinement(Representation const&          rho,
                                   std::optional<Subspace> const& radical) {
    require_faithful(rho);
    if (has_zero(rho.monoid())) {
      throw InputError("monoid has a zero element");
    }
    VerificationReport report;
    report.theorem = Theorem::positive_refinement;
    report.r       = distinct_character_values(rho).size();
    report.dim     = rho.dim();
    check_powers(report, rho, PowerMode::tensor, 1, report.r, radical);
    return report;
  }

  VerificationReport verify_steinberg_bound(Representation const&          rho,
                                            std::optional<Subspace> const& radical) {
    require_faithful(rho);
    VerificationReport report;
    report.theorem = Theorem::steinberg;
    report.r       = rho.monoid().size();
    report.dim     = rho.dim();
    check_powers(report, rho, PowerMode::tensor, 0, report.r - 1, radical);
    return report;
  }

  namespace {
    template <typename Done>
    std::optional<std::size_t> scan(Representation const& rho,
                                    PowerMode             mode,
                                    std::size_t           cap,
                                    Done                  done) {
      require_faithful(rho);
      std::size_t         size  = rho.monoid().size();
      std::vector<Matrix> grams = power_grams(rho, mode, cap);
      Matrix              sum(size, size);
      for (std::size_t k = 0; k <= cap; ++k) {
        sum += grams[k];
        if (done(Subspace::span(size, kernel_basis(sum)))) {
          return k;
        }
      }
      return std::nullopt;
    }
  }  // namespace

  std::optional<std::size_t> minimal_covering_power(Representation const& rho,
                                                    PowerMode             mode,
                                                    std::size_t           cap) {
    Subspace rad = radical_basis(rho.monoid());
    return scan(rho, mode, cap, [&rad](Subspace const& ann) {
      return subspace_leq(ann, rad).holds;
    });
  }

  std::optional<std::size_t> minimal_faithful_power(Representation const& rho,
                                                    PowerMode             mode,
                                                    std::size_t           cap) {
    return scan(
        rho, mode, cap, [](Subspace const& ann) { return ann.dim() == 0; });
  }

}  // namespace mbt
