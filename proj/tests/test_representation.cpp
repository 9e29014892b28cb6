#include <doctest.h>

#include "corpus.hpp"
#include "mbt/error.hpp"
#include "mbt/representation.hpp"
#include "oracles.hpp"

using namespace mbt;

namespace {
  Vector pointwise_power(Vector v, std::size_t i) {
    for (auto& x : v) {
      x = pow(x, i);
    }
    return v;
  }

  std::size_t binomial(std::size_t n, std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
      r = r * (n - k + i) / i;
    }
    return r;
  }
}  // namespace

TEST_CASE("build_representation") {
  auto t2 = test::t2();
  auto v  = test::natural(t2);
  CHECK(v.dim() == 2);
  CHECK(v.matrix(2) == Matrix{{1, 1}, {0, 0}});  // const_1

  auto nt = nt_paper_representation(4);
  CHECK(nt.dim() == 2);

  auto zero_dim = Representation(test::share(nt_monoid(3)),
                                 std::vector<Matrix>(4, Matrix(0, 0)));
  CHECK(zero_dim.dim() == 0);

  // Trading swap for const_1 breaks the homomorphism property.
  auto mats = v.matrices();
  std::swap(mats[1], mats[2]);
  try {
    Representation bad(v.monoid_ptr(), mats);
    FAIL("expected a homomorphism failure");
  } catch (InputError const& e) {
    CHECK(std::string(e.what()).find("homomorphism") != std::string::npos);
  }
  CHECK_THROWS_AS(Representation(v.monoid_ptr(), std::vector<Matrix>(4, Matrix{{2}})),
                  InputError);
  CHECK_THROWS_AS(Representation(v.monoid_ptr(), std::vector<Matrix>(3, Matrix{{1}})),
                  InputError);
}

TEST_CASE("nt_paper_representation") {
  CHECK(nt_paper_representation(2).matrix(2) == Matrix{{0, 2}, {0, 0}});
  auto nine = nt_paper_representation(9);
  CHECK(nine.monoid().size() == 10);
  CHECK(is_faithful(nine).faithful);
  for (std::size_t t = 2; t <= 12; ++t) {
    auto chi = character(nt_paper_representation(t)).values;
    for (Element a = 0; a <= t; ++a) {
      CHECK(chi[a] == Rational(a == 1 ? 2 : 0));
    }
  }
  CHECK_THROWS_AS((void) nt_paper_representation(1), InputError);
}

TEST_CASE("is_faithful") {
  CHECK(is_faithful(nt_paper_representation(5)).faithful);
  auto triv = trivial_representation(test::share(nt_monoid(2)));
  auto fc   = is_faithful(triv);
  CHECK_FALSE(fc.faithful);
  CHECK(*fc.witness == std::make_pair(Element(0), Element(1)));
  CHECK(is_faithful(test::natural(test::t2())).faithful);
}

TEST_CASE("character and value counts") {
  auto t2 = test::natural(test::t2());
  CHECK(character(t2).values == Vector{2, 0, 1, 1});
  CHECK(distinct_character_values(t2) == std::vector<Rational>{2, 0, 1});
  CHECK(distinct_character_values(nt_paper_representation(6))
        == std::vector<Rational>{0, 2});
  auto t3 = distinct_character_values(test::natural(test::t3()));
  CHECK(t3.size() == 4);
  std::sort(t3.begin(), t3.end());
  CHECK(t3 == std::vector<Rational>{0, 1, 2, 3});

  CHECK(distinct_charpolys(nt_paper_representation(7))
        == std::vector<Polynomial>{{0, 0, 1}, {1, -2, 1}});
  CHECK(distinct_charpolys(t2)
        == std::vector<Polynomial>{{1, -2, 1}, {-1, 0, 1}, {0, -1, 1}});
  CHECK(distinct_charpolys(trivial_representation(test::trivial_monoid())).size() == 1);
}

TEST_CASE("tensor powers") {
  auto t2 = test::natural(test::t2());
  auto p0 = tensor_power(t2, 0);
  CHECK(p0.dim() == 1);
  for (auto const& m : p0.matrices()) {
    CHECK(m == Matrix{{1}});
  }
  CHECK(tensor_power(t2, 1).matrices() == t2.matrices());
  CHECK(character(tensor_power(t2, 2)).values[1] == Rational(0));

  for (auto const& [name, rho] : test::all_corpus()) {
    CAPTURE(name);
    if (rho.dim() > 9) {
      continue;
    }
    Vector chi = character(rho).values;
    for (std::size_t i = 0; i <= 3; ++i) {
      Representation p = tensor_power(rho, i);
      CHECK(character(p).values == pointwise_power(chi, i));
      if (i <= 2) {
        p.validate();
      }
    }
    // theta_{V^i (x) V^j} = theta_V^i theta_V^j, from explicit Kronecker products.
    for (std::size_t i = 0; i <= 2; ++i) {
      for (std::size_t j = 0; j <= 2; ++j) {
        Representation a = tensor_power(rho, i), b = tensor_power(rho, j);
        Vector         ca = character(a).values, cb = character(b).values;
        for (Element m = 0; m < rho.monoid().size(); ++m) {
          CHECK(kron(a.matrix(m), b.matrix(m)).trace() == ca[m] * cb[m]);
        }
      }
    }
  }
}

TEST_CASE("monomial basis order") {
  using T = std::vector<std::vector<std::size_t>>;
  CHECK(monomial_basis(2, 2) == T{{0, 0}, {0, 1}, {1, 1}});
  CHECK(monomial_basis(3, 0) == T{{}});
  CHECK(monomial_basis(0, 2).empty());
  CHECK(monomial_basis(3, 2).size() == 6);
}

TEST_CASE("symmetric powers") {
  auto t2 = test::natural(test::t2());
  auto s0 = sym_power(t2, 0);
  CHECK(s0.dim() == 1);
  CHECK(s0.matrices() == trivial_representation(t2.monoid_ptr()).matrices());
  CHECK(sym_power(t2, 1).matrices() == t2.matrices());

  SUBCASE("N_t degree 2: x_2^2 goes to j^2 x_1^2, the rest dies") {
    auto nt = nt_paper_representation(5);
    auto s2 = sym_power(nt, 2);
    for (std::size_t j = 2; j <= 5; ++j) {
      Matrix expected(3, 3);
      expected(0, 2) = static_cast<std::int64_t>(j * j);
      CHECK(s2.matrix(j) == expected);
    }
  }

  SUBCASE("dimensions and homomorphism property") {
    for (auto const& [name, rho] : test::faithful_corpus()) {
      CAPTURE(name);
      for (std::size_t d = 0; d <= 4; ++d) {
        Representation s = sym_power(rho, d);
        if (rho.dim() > 0) {
          CHECK(s.dim() == binomial(rho.dim() + d - 1, d));
        }
        CHECK(s.dim() == test::count_monomials(rho.dim(), d));
        if (rho.dim() <= 3 && d <= 3) {
          CHECK_NOTHROW(s.validate());
        }
      }
    }
  }
}

TEST_CASE("sym_power_character") {
  auto v2  = Representation(test::trivial_monoid(), {Matrix::identity(2)});
  CHECK(sym_power_character(v2, 0, 2) == Rational(3));
  auto nt = nt_paper_representation(4);
  CHECK(sym_power_character(nt, 3, 2) == Rational(0));

  for (auto const& [name, rho] : test::all_corpus()) {
    CAPTURE(name);
    Monoid const& m   = rho.monoid();
    Vector        chi = character(rho).values;
    for (Element x = 0; x < m.size(); ++x) {
      Rational h2 = (chi[x] * chi[x] + chi[m.product(x, x)]) / Rational(2);
      CHECK(sym_power_character(rho, x, 2) == h2);
    }
    if (rho.dim() > 4) {
      continue;
    }
    for (std::size_t d = 0; d <= 6; ++d) {
      Representation s = sym_power(rho, d);
      for (Element x = 0; x < m.size(); ++x) {
        CHECK(s.matrix(x).trace() == sym_power_character(rho, x, d));
      }
    }
  }
}

TEST_CASE("restrict_to_local") {
  auto t2 = test::natural(test::t2());
  auto whole = restrict_to_local(t2, 0);
  CHECK(whole.rep.dim() == 2);
  CHECK(character(whole.rep).values == character(t2).values);

  auto c1 = restrict_to_local(t2, 2);
  CHECK(c1.local.embedding == std::vector<Element>{2});
  CHECK(c1.rep.dim() == 1);
  CHECK(character(c1.rep).values == Vector{1});

  auto zero = restrict_to_local(nt_paper_representation(4), 0);
  CHECK(zero.rep.dim() == 0);
  CHECK(zero.local.embedding == std::vector<Element>{0});

  CHECK_THROWS_AS((void) restrict_to_local(t2, 1), InputError);

  for (auto const& [name, rho] : test::all_corpus()) {
    CAPTURE(name);
    Vector chi = character(rho).values;
    for (Element e : idempotents(rho.monoid())) {
      auto   local = restrict_to_local(rho, e);
      Vector restricted;
      for (Element x : local.local.embedding) {
        restricted.push_back(chi[x]);
      }
      CHECK(character(local.rep).values == restricted);
      CHECK(local.rep.dim() == rank(rho.matrix(e)));
      // The basis spans the image of rho(e) and is fixed by it.
      CHECK(rho.matrix(e) * local.basis == local.basis);
    }
  }
}

TEST_CASE("character_kernel") {
  for (auto const& [name, rho] : test::faithful_corpus()) {
    CAPTURE(name);
    CHECK(character_kernel(rho).members()
          == std::vector<Element>{rho.monoid().identity()});
  }
  auto triv = trivial_representation(test::share(nt_monoid(3)));
  CHECK(character_kernel(triv).size() == 4);
  CHECK(character_kernel(test::natural(test::t3())).members()
        == std::vector<Element>{0});
  for (auto const& [name, rho] : test::all_corpus()) {
    CAPTURE(name);
    CHECK_NOTHROW((void) character_kernel(rho));
  }
}

TEST_CASE("direct sums") {
  auto nt = nt_paper_representation(3);
  auto w  = direct_sum(nt.monoid_ptr(), {tensor_power(nt, 0), nt});
  CHECK(w.dim() == 3);
  CHECK_NOTHROW(w.validate());
  CHECK(direct_sum(nt.monoid_ptr(), {}).dim() == 0);
  Vector a = character(tensor_power(nt, 0)).values, b = character(nt).values;
  Vector sum = character(w).values;
  for (std::size_t i = 0; i < sum.size(); ++i) {
    CHECK(sum[i] == a[i] + b[i]);
  }
  auto other = nt_paper_representation(4);
  CHECK_THROWS_AS((void) direct_sum(nt.monoid_ptr(), {nt, other}), InputError);
}
