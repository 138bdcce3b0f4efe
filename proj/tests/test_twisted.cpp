#include <doctest.h>

#include <random>

#include "charvar/catalog.hpp"
#include "charvar/error.hpp"
#include "charvar/fox.hpp"
#include "charvar/jump_loci.hpp"
#include "oracles.hpp"

using namespace charvar;

namespace {

LaurentPolynomial P(const std::string& s, std::size_t m) { return parse_laurent(s, m); }

std::vector<Character> sample(std::size_t m, std::size_t count, std::uint64_t seed) {
  CharacterSampler s(m, seed);
  std::vector<Character> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(s.next());
  return out;
}

Character restrict(const Character& rho, std::size_t first, std::size_t count) {
  const auto& c = rho.coords();
  return Character::at(std::vector<Rational>(c.begin() + static_cast<long>(first),
                                             c.begin() + static_cast<long>(first + count)));
}

std::string error_code(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

const Presentation kTorus = parse_presentation("gens a,b; rel [a,b];");

}  // namespace

TEST_CASE("presentation complex examples") {
  TwistedComplex t = presentation_complex(kTorus, abelianize(kTorus).generator_images(), 2);
  CHECK(t.ranks() == std::vector<std::size_t>{1, 2, 1});
  CHECK(t.differential(1) == LaurentMatrix::from_strings({{"t1 - 1", "t2 - 1"}}, 2));
  CHECK(t.differential(2) == LaurentMatrix::from_strings({{"1 - t2"}, {"t1 - 1"}}, 2));
  CHECK_NOTHROW(t.verify());

  CHECK(free_group(2).full_complex().ranks() == std::vector<std::size_t>{1, 2, 0});
  CHECK(surface_group(2).full_complex().ranks() == std::vector<std::size_t>{1, 4, 1});
  CHECK(error_code([] { presentation_complex(parse_presentation("gens a; rel a;"), {{1}}, 1); }) == "QuotientInvalid");
}

TEST_CASE("tensor complex examples") {
  TwistedComplex f2 = free_group(2).full_complex();
  TwistedComplex ff = tensor_complex(f2, f2);
  CHECK(ff.variable_count() == 4);
  CHECK(ff.ranks() == std::vector<std::size_t>{1, 4, 4, 0, 0});
  CHECK_NOTHROW(ff.verify());

  TwistedComplex x = surface_group(2).full_complex();
  TwistedComplex xp = tensor_complex(x, point_complex());
  CHECK(xp.ranks() == x.ranks());
  for (std::size_t j = 1; j <= x.top_degree(); ++j) CHECK(xp.differential(j) == x.differential(j));

  TwistedComplex gg = tensor_complex(x, x);
  CHECK(gg.ranks() == std::vector<std::size_t>{1, 8, 18, 8, 1});
  CHECK_NOTHROW(gg.verify());
}

TEST_CASE("verify rejects a non-complex") {
  LaurentMatrix d1 = LaurentMatrix::from_strings({{"t - 1"}}, 1);
  LaurentMatrix d2 = LaurentMatrix::from_strings({{"t"}}, 1);
  TwistedComplex bad(1, {1, 1, 1}, {d1, d2});
  CHECK(error_code([&] { bad.verify(); }) == "NotAComplex");
}

TEST_CASE("twisted Betti examples") {
  TwistedComplex t = surface_group(1).full_complex();
  CHECK(twisted_betti(t, Character::at({2, 3})).betti == std::vector<long>{0, 0, 0});
  CHECK(twisted_betti(t, Character::trivial(2)).betti == std::vector<long>{1, 2, 1});

  // Oracle: evaluate both torus differentials at (2,3) and rank them independently.
  oracle::QMatrix d1{{2 - 1, 3 - 1}}, d2{{1 - 3}, {2 - 1}};
  CHECK(oracle::rank(d1) == 1);
  CHECK(oracle::rank(d2) == 1);
  CHECK(1 - oracle::rank(d1) == 0);
  CHECK(2 - oracle::rank(d1) - oracle::rank(d2) == 0);

  TwistedComplex g2 = surface_group(2).full_complex();
  for (const auto& rho : sample(4, 20, 9)) CHECK(twisted_betti(g2, rho).betti == std::vector<long>{0, 2, 0});
  CHECK(twisted_betti(g2, Character::generic()).betti == std::vector<long>{0, 2, 0});
}

TEST_CASE("composition zero for every catalog complex") {
  std::vector<TwistedComplex> cs{surface_group(1).full_complex(), surface_group(3).full_complex(),
                                 direct_product({surface_group(2), free_group(2)}).full_complex(),
                                 raag(Graph::cycle(5)).full_complex(), raag_complex(Graph::octahedron()),
                                 direct_product({free_group(2), free_group(3)}).complex(
                                     std::vector<IntVector>(5, IntVector{1}), 1)};
  for (const auto& c : cs) CHECK_NOTHROW(c.verify());
}

TEST_CASE("Euler invariance and semicontinuity") {
  std::vector<GroupModel> gs{surface_group(1), surface_group(2), free_group(3),
                             direct_product({free_group(2), surface_group(1)}), raag(Graph::cycle(5))};
  for (const auto& g : gs) {
    TwistedComplex c = g.full_complex();
    auto generic = twisted_betti(c, Character::generic()).betti;
    std::vector<Character> chars = sample(c.variable_count(), 15, 4);
    for (const auto& rho : order_two_characters(c.variable_count())) chars.push_back(rho);
    for (const auto& rho : chars) {
      BettiProfile b = twisted_betti(c, rho);
      CHECK(b.euler_characteristic() == c.euler_characteristic());
      for (std::size_t j = 0; j < generic.size(); ++j) CHECK(b.betti[j] >= generic[j]);
    }
  }
}

TEST_CASE("Kunneth: tensor Betti numbers are the convolution of the factors'") {
  TwistedComplex a = surface_group(2).full_complex(), b = free_group(2).full_complex();
  TwistedComplex ab = tensor_complex(a, b);
  std::vector<Character> chars = sample(6, 12, 8);
  chars.push_back(Character::trivial(6));
  chars.push_back(Character::at({1, 1, 1, 1, 2, 3}));
  chars.push_back(Character::at({-1, 1, 1, 1, 1, 1}));
  for (const auto& rho : chars) {
    auto pa = twisted_betti(a, restrict(rho, 0, 4)).betti;
    auto pb = twisted_betti(b, restrict(rho, 4, 2)).betti;
    auto conv = oracle::convolve(pa, pb);
    auto pab = twisted_betti(ab, rho).betti;
    conv.resize(pab.size(), 0);
    CHECK(pab == conv);
  }
}

TEST_CASE("kernel homology of F2 x F2 with the diagonal map") {
  GroupModel g = direct_product({free_group(2), free_group(2)});
  TwistedComplex c = g.complex(diagonal_epimorphism(g));
  // Degree-2 differential is (t - 1) times the K_{2,2} incidence matrix.
  LaurentMatrix d2 = c.differential(2);
  REQUIRE(d2.rows() == 4);
  REQUIRE(d2.cols() == 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const auto& e = d2(i, j);
      if (e.is_zero()) continue;
      CHECK((e == P("t - 1", 1) || e == P("1 - t", 1)));
    }
  const long inc = oracle::rank(oracle::bipartite_incidence(2, 2));
  CHECK(inc == 3);
  KernelHomologyReport r = kernel_homology_univariate(c);
  REQUIRE(r.degrees.size() >= 3);
  CHECK(r.degrees[2].free_rank == static_cast<std::size_t>(4 - inc));
  CHECK(r.degrees[2].infinite_dimensional());
  CHECK(r.degrees[0].free_rank == 0);
  CHECK(r.degrees[0].torsion_dimension == 1);
  CHECK_FALSE(r.degrees[1].infinite_dimensional());
}

TEST_CASE("kernel homology of the torus over a coordinate map") {
  EpimorphismToZm nu = validate_epimorphism(kTorus, {{1}, {0}});
  KernelHomologyReport r = kernel_homology_univariate(presentation_complex(kTorus, nu));
  CHECK(r.degrees[1].free_rank == 0);
  CHECK(r.degrees[1].torsion_dimension == 1);
  CHECK(r.degrees[0].torsion_dimension == 1);
  CHECK(error_code([] { kernel_homology_univariate(surface_group(1).full_complex()); }) == "NotUnivariate");
}

TEST_CASE("window homology growth") {
  GroupModel g = direct_product({free_group(2), free_group(2)});
  TwistedComplex c = g.complex(diagonal_epimorphism(g));
  auto w = window_homology(c, 6);
  REQUIRE(w.size() == 6);
  for (std::size_t k = 1; k < w.size(); ++k) CHECK(w[k][2] > w[k - 1][2]);
  // Eventually constant differences: one new copy of Q per added translate.
  CHECK(w[5][2] - w[4][2] == 2);
  CHECK(w[4][2] - w[3][2] == 2);
  for (const auto& row : w) CHECK(row[0] == 1);

  EpimorphismToZm nu = validate_epimorphism(kTorus, {{1}, {0}});
  auto wt = window_homology(presentation_complex(kTorus, nu), 6);
  CHECK(wt.back()[1] == 1);
  CHECK(wt[4][1] == wt[5][1]);
  CHECK(error_code([&] { window_homology(c, 6, 10); }) == "WindowTooLarge");
  CHECK(error_code([] { window_homology(surface_group(2).full_complex(), 1); }) == "UnsupportedRank");
}

TEST_CASE("window dimensions are monotone and unbounded exactly in infinite degrees") {
  std::vector<std::pair<GroupModel, EpimorphismToZm>> cases;
  auto add = [&](GroupModel g) { cases.push_back({g, diagonal_epimorphism(g)}); };
  add(direct_product({free_group(2), free_group(2)}));
  add(free_group(2));
  add(surface_group(2));
  add(raag(Graph::complete(3)));
  add(raag(Graph::cycle(5)));
  cases.push_back({surface_group(1), validate_epimorphism(surface_group(1).presentation(), {{1}, {0}})});
  for (const auto& [g, nu] : cases) {
    TwistedComplex c = g.complex(nu);
    auto w = window_homology(c, 5);
    auto k = kernel_homology_univariate(c);
    for (std::size_t j = 0; j <= c.top_degree(); ++j) {
      for (std::size_t r = 1; r < w.size(); ++r) CHECK(w[r][j] >= w[r - 1][j]);
      const bool growing = w[4][j] > w[3][j];
      CHECK(growing == k.degrees[j].infinite_dimensional());
      if (!growing) CHECK(w[4][j] == k.degrees[j].torsion_dimension);
    }
  }
}

TEST_CASE("finite-cover oracle examples") {
  GroupModel f2 = free_group(2);
  auto r1 = finite_cover_oracle(f2.presentation(), diagonal_epimorphism(f2));
  CHECK(r1.cover_b1 == oracle::schreier_rank(2, 2));
  CHECK(r1.b1_trivial == 2);
  CHECK(r1.b1_sign == 1);
  CHECK(r1.passed);

  auto r2 = finite_cover_oracle(kTorus, validate_epimorphism(kTorus, {{1}, {0}}));
  CHECK(r2.cover_b1 == 2);
  CHECK(r2.b1_sign == 0);
  CHECK(r2.passed);

  GroupModel g2 = surface_group(2);
  auto r3 = finite_cover_oracle(g2.presentation(), validate_epimorphism(g2.presentation(), {{0}, {1}, {0}, {0}}));
  CHECK(r3.cover_b1 == 2 * 3);  // genus-3 cover: 2 - 2g = 2 * (2 - 2*2)
  CHECK(r3.b1_trivial == 4);
  CHECK(r3.b1_sign == 2);
  CHECK(r3.passed);

  Presentation sub = index_two_subgroup(f2.presentation(), diagonal_epimorphism(f2));
  CHECK(sub.generator_count() == 3);
  CHECK(sub.relator_count() == 0);
}
