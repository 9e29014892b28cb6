#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "mbt/algebra.hpp"
#include "mbt/error.hpp"
#include "mbt/verify.hpp"
#include "oracles.hpp"

using namespace mbt;

namespace {
  Representation sum_of_tensor_powers(Representation const& rho,
                                      std::size_t first, std::size_t last) {
    std::vector<Representation> parts;
    for (std::size_t i = first; i <= last; ++i) {
      parts.push_back(tensor_power(rho, i));
    }
    return direct_sum(rho.monoid_ptr(), parts);
  }

  Representation sum_of_sym_powers(Representation const& rho, std::size_t last) {
    std::vector<Representation> parts;
    for (std::size_t d = 0; d <= last; ++d) {
      parts.push_back(sym_power(rho, d));
    }
    return direct_sum(rho.monoid_ptr(), parts);
  }

  Vector unit(std::size_t n, std::size_t i) {
    Vector v(n);
    v[i] = 1;
    return v;
  }

  // Rad(QN_t) is spanned by the nilpotent elements j - 0.
  Subspace nt_nilpotent_span(std::size_t t) {
    std::vector<Vector> vs;
    for (std::size_t j = 2; j <= t; ++j) {
      Vector v(t + 1);
      v[j] = 1;
      v[0] = -1;
      vs.push_back(v);
    }
    return Subspace::span(t + 1, vs);
  }
}  // namespace

TEST_CASE("left_regular_matrix") {
  Monoid n3 = nt_monoid(3);
  CHECK(left_regular_matrix(n3, basis_element(n3, 1)) == Matrix::identity(4));
  Matrix l2 = left_regular_matrix(n3, basis_element(n3, 2));
  Matrix expected(4, 4);
  expected(2, 1) = 1;
  expected(0, 0) = 1;
  expected(0, 2) = 1;
  expected(0, 3) = 1;
  CHECK(l2 == expected);

  std::mt19937 rng(17);
  Monoid       t2 = test::t2().monoid;
  for (int trial = 0; trial < 10; ++trial) {
    AlgebraElement a{test::random_matrix(rng, 1, 4).row(0)};
    AlgebraElement b{test::random_matrix(rng, 1, 4).row(0)};
    AlgebraElement s{a.coefficients};
    for (std::size_t i = 0; i < 4; ++i) {
      s.coefficients[i] += b.coefficients[i];
    }
    CHECK(left_regular_matrix(t2, s)
          == left_regular_matrix(t2, a) + left_regular_matrix(t2, b));
    // L_{ab} = L_a L_b.
    CHECK(left_regular_matrix(t2, multiply(t2, a, b))
          == left_regular_matrix(t2, a) * left_regular_matrix(t2, b));
  }
}

TEST_CASE("radical_basis") {
  CHECK(radical_basis(*test::s2()).dim() == 0);
  for (std::size_t t = 1; t <= 12; ++t) {
    Subspace rad = radical_basis(nt_monoid(t));
    CHECK(rad.dim() == t - 1);
    CHECK(rad == nt_nilpotent_span(t));
    for (auto const& v : rad.basis()) {
      CHECK(v[1].is_zero());
      Rational sum;
      for (auto const& x : v) {
        sum += x;
      }
      CHECK(sum.is_zero());
    }
  }
  Monoid   t2  = test::t2().monoid;
  Subspace rad = radical_basis(t2);
  CHECK(rad.dim() == 1);
  CHECK(rad == Subspace::span(4, {Vector{0, 0, 1, -1}}));

  // The trace form from explicit left-regular matrices.
  Matrix gram(4, 4);
  for (Element x = 0; x < 4; ++x) {
    for (Element y = 0; y < 4; ++y) {
      gram(x, y) = left_regular_matrix(
                       t2, multiply(t2, basis_element(t2, x), basis_element(t2, y)))
                       .trace();
    }
  }
  CHECK(gram == Matrix{{4, 0, 1, 1}, {0, 4, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 1}});
  CHECK(Subspace::span(4, kernel_basis(gram)) == rad);

  CHECK_THROWS_AS((void) radical_basis(nt_monoid(radical_size_guard)), InputError);
  CHECK(radical_basis(nt_monoid(radical_size_guard - 1)).dim() == radical_size_guard - 2);
}

TEST_CASE("radical invariants over the corpus") {
  for (auto const& mp : test::monoid_corpus()) {
    Monoid const& m   = *mp;
    Subspace      rad = radical_basis(m);
    for (auto const& v : rad.basis()) {
      for (Element a = 0; a < m.size(); ++a) {
        CHECK(rad.contains(multiply(m, basis_element(m, a), {v}).coefficients));
        CHECK(rad.contains(multiply(m, {v}, basis_element(m, a)).coefficients));
      }
    }
    Subspace power = rad;
    std::size_t steps = 1;
    while (power.dim() > 0 && steps <= m.size()) {
      power = product(m, power, rad);
      ++steps;
    }
    CHECK(power.dim() == 0);
  }
  // Maschke.
  CHECK(radical_basis(test::s3().monoid).dim() == 0);
  CHECK(radical_basis(*test::s2()).dim() == 0);
  CHECK(radical_basis(*test::trivial_monoid()).dim() == 0);
}

TEST_CASE("annihilator_basis") {
  for (auto const& mp : test::monoid_corpus()) {
    CHECK(annihilator_basis(regular_representation(mp)).dim() == 0);
  }
  auto     v3 = nt_paper_representation(3);
  Subspace a3 = annihilator_basis(sum_of_tensor_powers(v3, 0, 1));
  CHECK(a3.dim() == 1);
  CHECK(a3.contains(Vector{Rational(1, 2), 0, Rational(-3, 2), 1}));
  CHECK(a3.basis()[0] == Vector{1, 0, -3, 2});

  auto v9 = nt_paper_representation(9);
  CHECK(annihilator_basis(sum_of_tensor_powers(v9, 0, 1)).dim() == 7);
}

TEST_CASE("Gram route agrees with explicit annihilators") {
  for (auto const& [name, rho] : test::all_corpus()) {
    CAPTURE(name);
    std::size_t size = rho.monoid().size();
    CHECK(annihilator_from_grams({frobenius_gram(rho)}, size)
          == annihilator_basis(rho));
    if (rho.dim() > 3) {
      continue;
    }
    Matrix frob = frobenius_gram(rho);
    std::vector<Matrix> tensor_grams;
    for (std::size_t k = 0; k <= 2; ++k) {
      tensor_grams.push_back(tensor_power_gram(frob, k));
      CHECK(annihilator_from_grams({tensor_grams.back()}, size)
            == annihilator_basis(tensor_power(rho, k)));
      CHECK(annihilator_from_grams(tensor_grams, size)
            == annihilator_basis(sum_of_tensor_powers(rho, 0, k)));
    }
    auto sym_grams = sym_power_grams(rho, 4);
    for (std::size_t d = 0; d <= 4; ++d) {
      CHECK(annihilator_from_grams({sym_grams[d]}, size)
            == annihilator_basis(sym_power(rho, d)));
    }
    std::vector<Matrix> prefix(sym_grams.begin(), sym_grams.begin() + 4);
    CHECK(annihilator_from_grams(prefix, size)
          == annihilator_basis(sum_of_sym_powers(rho, 3)));
  }
}

TEST_CASE("annihilator invariants") {
  for (auto const& [name, rho] : test::all_corpus()) {
    CAPTURE(name);
    if (rho.dim() > 3) {
      continue;
    }
    Monoid const&  m     = rho.monoid();
    Representation other = tensor_power(rho, 2);
    Subspace       a     = annihilator_basis(rho);
    Subspace       b     = annihilator_basis(other);
    Subspace       both  = annihilator_basis(direct_sum(rho.monoid_ptr(), {rho, other}));
    CHECK(both == intersect(a, b));
    CHECK(subspace_leq(both, a).holds);
    for (auto const& v : a.basis()) {
      for (Element x = 0; x < m.size(); ++x) {
        CHECK(a.contains(multiply(m, basis_element(m, x), {v}).coefficients));
        CHECK(a.contains(multiply(m, {v}, basis_element(m, x)).coefficients));
      }
    }
  }
}

TEST_CASE("subspace_leq") {
  Subspace x = Subspace::span(3, {Vector{1, 1, 0}, Vector{0, 1, 1}});
  CHECK(subspace_leq(x, x).holds);
  CHECK(subspace_leq(Subspace(3), x).holds);
  Containment c = subspace_leq(Subspace::span(3, {Vector{1, 0, 0}}), x);
  CHECK_FALSE(c.holds);
  CHECK(*c.witness == Vector{1, 0, 0});
  CHECK_THROWS_AS((void) subspace_leq(Subspace(2), x), InputError);

  auto     v5  = nt_paper_representation(5);
  Subspace ann = annihilator_basis(sum_of_tensor_powers(v5, 0, 1));
  Subspace rad = radical_basis(v5.monoid());
  CHECK(ann.dim() == 3);
  CHECK(rad.dim() == 4);
  CHECK(subspace_leq(ann, rad).holds);
}

TEST_CASE("all_simples_appear") {
  for (auto const& mp : test::monoid_corpus()) {
    CHECK(all_simples_appear(regular_representation(mp)).holds);
  }
  auto v5 = nt_paper_representation(5);
  CHECK(all_simples_appear(sum_of_tensor_powers(v5, 0, 1)).holds);

  Containment miss = all_simples_appear(v5);
  REQUIRE_FALSE(miss.holds);
  Vector const& w = *miss.witness;
  CHECK((!w[0].is_zero() || !w[1].is_zero()));
  CHECK(annihilator_basis(v5).contains(w));
  CHECK_FALSE(radical_basis(v5.monoid()).contains(w));
}

TEST_CASE("verify_tensor_theorem") {
  for (std::size_t t = 2; t <= 12; ++t) {
    CAPTURE(t);
    auto report = verify_tensor_theorem(nt_paper_representation(t));
    CHECK(report.r == 2);
    CHECK(report.powers_used == std::vector<std::size_t>{0, 1});
    CHECK(report.dim_rad == t - 1);
    CHECK(report.dim_ann == t - 2);
    CHECK(report.holds);
    CHECK_FALSE(report.witness.has_value());
  }

  auto t2 = test::natural(test::t2());
  auto r2 = verify_tensor_theorem(t2);
  CHECK(r2.r == 3);
  CHECK(r2.holds);
  auto w2 = sum_of_tensor_powers(t2, 0, 2);
  CHECK(w2.dim() == 7);
  CHECK(all_simples_appear(w2).holds);
  CHECK(subspace_leq(annihilator_basis(w2), Subspace::span(4, {Vector{0, 0, 1, -1}})).holds);

  auto t3 = test::natural(test::t3());
  auto r3 = verify_tensor_theorem(t3);
  CHECK(r3.r == 4);
  CHECK(r3.holds);
  auto w3 = sum_of_tensor_powers(t3, 0, 3);
  CHECK(w3.dim() == 40);
  CHECK(annihilator_basis(w3).dim() == r3.dim_ann);
  CHECK(all_simples_appear(w3).holds);

  auto triv = trivial_representation(test::share(nt_monoid(3)));
  CHECK_THROWS_AS((void) verify_tensor_theorem(triv), InputError);

  // A radical that is too small turns the check red with a witness.
  auto bad = verify_tensor_theorem(nt_paper_representation(7), Subspace(8));
  CHECK_FALSE(bad.holds);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->size() == 8);
}

TEST_CASE("verify_symmetric_theorem") {
  for (std::size_t t = 2; t <= 8; ++t) {
    auto report = verify_symmetric_theorem(nt_paper_representation(t));
    CHECK(*report.s == 2);
    CHECK(report.r == 4);
    CHECK(report.holds);
  }
  auto nt = nt_paper_representation(4);
  CHECK(sum_of_sym_powers(nt, 3).dim() == 10);
  CHECK(all_simples_appear(sum_of_sym_powers(nt, 3)).holds);

  auto t2 = test::natural(test::t2());
  auto r2 = verify_symmetric_theorem(t2);
  CHECK(*r2.s == 3);
  CHECK(r2.r == 6);
  CHECK(r2.holds);
  CHECK(sum_of_sym_powers(t2, 5).dim() == 21);
  CHECK(all_simples_appear(sum_of_sym_powers(t2, 5)).holds);

  auto one = verify_symmetric_theorem(trivial_representation(test::trivial_monoid()));
  CHECK(*one.s == 1);
  CHECK(one.r == 1);
  CHECK(one.powers_used == std::vector<std::size_t>{0});
  CHECK(one.holds);
}

TEST_CASE("verify_positive_power_refinement") {
  auto t2 = verify_positive_power_refinement(test::natural(test::t2()));
  CHECK(t2.r == 3);
  CHECK(t2.powers_used == std::vector<std::size_t>{1, 2, 3});
  CHECK(t2.holds);
  CHECK(verify_positive_power_refinement(test::natural(test::s3())).holds);
  CHECK(verify_positive_power_refinement(test::s2_sign()).holds);
  try {
    (void) verify_positive_power_refinement(nt_paper_representation(4));
    FAIL("expected rejection");
  } catch (InputError const& e) {
    CHECK(std::string(e.what()) == "monoid has a zero element");
  }
}

TEST_CASE("theorems and bounds over the faithful corpus") {
  for (auto const& [name, rho] : test::faithful_corpus()) {
    CAPTURE(name);
    auto tensor = verify_tensor_theorem(rho);
    auto sym    = verify_symmetric_theorem(rho);
    auto st     = verify_steinberg_bound(rho);
    CHECK(tensor.holds);
    CHECK(sym.holds);
    CHECK(st.holds);
    if (!has_zero(rho.monoid())) {
      CHECK(verify_positive_power_refinement(rho).holds);
    }
    auto cov_t = minimal_covering_power(rho, PowerMode::tensor, 30);
    auto cov_s = minimal_covering_power(rho, PowerMode::symmetric, 30);
    REQUIRE(cov_t.has_value());
    REQUIRE(cov_s.has_value());
    CHECK(*cov_t <= tensor.r - 1);
    CHECK(*cov_s + 1 <= std::max<std::size_t>(sym.r, 1));
    CHECK(tensor.minimal_k == cov_t);
    CHECK(sym.minimal_k == cov_s);
  }
}

TEST_CASE("minimal powers") {
  CHECK(minimal_covering_power(nt_paper_representation(5), PowerMode::tensor, 12) == 1u);
  auto t2 = minimal_covering_power(test::natural(test::t2()), PowerMode::tensor, 12);
  REQUIRE(t2.has_value());
  CHECK(*t2 <= 2);
  CHECK(minimal_covering_power(test::s2_sign(), PowerMode::tensor, 12) == 1u);

  std::size_t previous = 0;
  for (std::size_t t = 2; t <= 8; ++t) {
    auto rho = nt_paper_representation(t);
    CHECK(minimal_faithful_power(rho, PowerMode::tensor, 12) == t - 1);
    auto sym = minimal_faithful_power(rho, PowerMode::symmetric, 12);
    REQUIRE(sym.has_value());
    CHECK(*sym > previous);
    previous = *sym;
    // Oracle: explicit kernels of V^0 + ... + V^k.
    CHECK(annihilator_basis(sum_of_tensor_powers(rho, 0, t - 1)).dim() == 0);
    CHECK(annihilator_basis(sum_of_tensor_powers(rho, 0, t - 2)).dim() > 0);
  }
  for (auto const& mp : test::monoid_corpus()) {
    std::size_t expected = mp->size() == 1 ? 0 : 1;
    CHECK(minimal_faithful_power(regular_representation(mp), PowerMode::tensor, 3) == expected);
  }
  CHECK_FALSE(minimal_faithful_power(nt_paper_representation(12), PowerMode::tensor, 5)
                  .has_value());
}
