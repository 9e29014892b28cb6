#include "mbt/symmetric.hpp"

#include "mbt/error.hpp"

namespace mbt {

  Vector complete_homogeneous_sequence(Vector const& power_sums,
                                       std::size_t   d) {
    if (power_sums.size() < d) {
      throw InputError("too few power sums for the requested degree");
    }
    Vector h(d + 1);
    h[0] = 1;
    for (std::size_t k = 1; k <= d; ++k) {
      Rational s;
      for (std::size_t i = 1; i <= k; ++i) {
        s.add_product(power_sums[i - 1], h[k - i]);
      }
      h[k] = s / Rational(static_cast<std::int64_t>(k));
    }
    return h;
  }

  Rational complete_homogeneous_from_power_sums(Vector const& power_sums,
                                                std::size_t   d) {
    return complete_homogeneous_sequence(power_sums, d)[d];
  }

  Polynomial charpoly_from_power_traces(Vector const& power_sums,
                                        std::size_t   n) {
    if (power_sums.size() < n) {
      throw InputError("too few power sums for the requested degree");
    }
    // k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} p_i
    Vector e(n + 1);
    e[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
      Rational s;
      for (std::size_t i = 1; i <= k; ++i) {
        Rational term = e[k - i] * power_sums[i - 1];
        if (i % 2 == 0) {
          s -= term;
        } else {
          s += term;
        }
      }
      e[k] = s / Rational(static_cast<std::int64_t>(k));
    }
    Vector c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
      c[n - k] = (k % 2 == 0) ? e[k] : -e[k];
    }
    return Polynomial(std::move(c));
  }

}  // namespace mbt
