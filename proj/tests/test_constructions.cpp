#include <doctest.h>

#include "charvar/certifier.hpp"
#include "charvar/error.hpp"
#include "charvar/pencil.hpp"
#include "oracles.hpp"

using namespace charvar;

namespace {

std::string error_code(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

std::vector<Character> sample(std::size_t m, std::size_t count, std::uint64_t seed) {
  CharacterSampler s(m, seed);
  std::vector<Character> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(s.next());
  return out;
}

}  // namespace

TEST_CASE("surface groups") {
  GroupModel t = surface_group(1);
  CHECK(t.presentation().generator_count() == 2);
  CHECK(t.name() == "torus");
  GroupModel g2 = surface_group(2);
  CHECK(g2.presentation().generator_count() == 4);
  CHECK(g2.presentation().relator_count() == 1);
  CHECK(*g2.presentation().tags().curve_euler == -2);
  GroupModel g3 = surface_group(3);
  CHECK(*g3.presentation().tags().curve_euler == -4);
  CHECK(twisted_betti(g3.full_complex(), Character::generic()).betti == std::vector<long>{0, 4, 0});
  CHECK(error_code([] { surface_group(0); }) == "BadArgument");
}

TEST_CASE("surface catalog consistency") {
  for (long g = 1; g <= 3; ++g) {
    GroupModel s = surface_group(g);
    TwistedComplex c = s.full_complex();
    CHECK(twisted_betti(c, Character::trivial(static_cast<std::size_t>(2 * g))).betti ==
          std::vector<long>{1, 2 * g, 1});
    for (const auto& rho : sample(static_cast<std::size_t>(2 * g), 10, static_cast<std::uint64_t>(g)))
      CHECK(twisted_betti(c, rho).betti == std::vector<long>{0, 2 * g - 2, 0});
  }
}

TEST_CASE("punctured surface groups") {
  auto check = [](long g, long n, std::size_t rank, long chi) {
    GroupModel p = punctured_surface_group(g, n);
    CHECK(p.presentation().generator_count() == rank);
    CHECK(p.presentation().relator_count() == 0);
    CHECK(*p.presentation().tags().curve_euler == chi);
  };
  check(0, 3, 2, -1);
  check(1, 1, 2, -1);
  check(2, 1, 4, -3);
  CHECK(error_code([] { punctured_surface_group(1, 0); }) == "BadArgument");
}

TEST_CASE("direct products") {
  GroupModel g2 = surface_group(2);
  GroupModel gg = direct_product({g2, g2});
  CHECK(gg.presentation().generator_count() == 8);
  CHECK(gg.presentation().relator_count() == 2 + 16);
  CHECK(gg.full_complex().ranks() == std::vector<std::size_t>{1, 8, 18, 8, 1});
  CHECK(gg.presentation().tags().aspherical);
  GroupModel ff = direct_product({free_group(2), free_group(2)});
  auto r = ff.full_complex().ranks();
  while (!r.empty() && r.back() == 0) r.pop_back();
  CHECK(r == std::vector<std::size_t>{1, 4, 4});
  CHECK(error_code([] { direct_product({free_group(2)}); }) == "BadArgument");
}

TEST_CASE("RAAG examples") {
  GroupModel f2 = raag(Graph(2, {}));
  CHECK(f2.presentation().relator_count() == 0);
  CHECK(f2.abelianization().torsion_free_rank == 2);
  GroupModel z3 = raag(Graph::complete(3));
  CHECK(z3.presentation().relator_count() == 3);
  CHECK(twisted_betti(z3.full_complex(), Character::trivial(3)).betti == std::vector<long>{1, 3, 3, 1});
  // C_4 is the join of two non-edges, so its RAAG is F2 x F2: same Betti numbers everywhere.
  GroupModel c4 = raag(Graph::cycle(4));
  GroupModel ff = direct_product({free_group(2), free_group(2)});
  for (const auto& rho : sample(4, 10, 2)) {
    const auto& x = rho.coords();
    // Vertex order 0,1,2,3 around the cycle; the free factors are {0,2} and {1,3}.
    Character swapped = Character::at({x[0], x[2], x[1], x[3]});
    auto a = twisted_betti(c4.full_complex(), rho).betti;
    auto b = twisted_betti(ff.full_complex(), swapped).betti;
    b.resize(a.size(), 0);
    CHECK(a == b);
  }
}

TEST_CASE("Bestvina-Brady examples") {
  BestvinaBrady c4 = bestvina_brady(Graph::cycle(4));
  CHECK(c4.graph_connected);
  auto k = kernel_report_univariate(c4.group, c4.nu, 2);
  CHECK(k.report.degrees[2].infinite_dimensional());

  BestvinaBrady k3 = bestvina_brady(Graph::complete(3));
  Certificate c = certify_non_fp(k3.group, k3.nu, 3, Strategy::kGenericRank);
  CHECK_FALSE(c.certified());

  BestvinaBrady oct = bestvina_brady(Graph::octahedron());
  CHECK(oct.group.presentation().generator_count() == 6);
  CHECK(oct.group.presentation().relator_count() == 12);
  CHECK(certify_non_fp(oct.group, oct.nu, 3, Strategy::kGenericRank).certified());

  BestvinaBrady split = bestvina_brady(Graph(4, {{0, 1}, {2, 3}}));
  CHECK_FALSE(split.graph_connected);
}

TEST_CASE("abelian RAAGs are never certified") {
  for (std::size_t n = 1; n <= 4; ++n) {
    BestvinaBrady bb = bestvina_brady(Graph::complete(n));
    for (std::size_t r = 1; r <= n; ++r) CHECK_FALSE(certify_non_fp(bb.group, bb.nu, r, Strategy::kGenericRank).certified());
  }
}

TEST_CASE("flag complexes and reduced homology") {
  SimplicialComplex c4 = flag_complex(Graph::cycle(4));
  CHECK(c4.dimension() == 1);
  CHECK(reduced_homology(c4) == std::vector<long>{0, 1});
  CHECK(reduced_homology(flag_complex(Graph::complete(3))) == std::vector<long>{0, 0, 0});
  CHECK(reduced_homology(flag_complex(Graph(4, {{0, 1}, {2, 3}}))) == std::vector<long>{1, 0});
  // Octahedron boundary is a 2-sphere.
  CHECK(reduced_homology(flag_complex(Graph::octahedron())) == std::vector<long>{0, 0, 1});
}

TEST_CASE("RAAG cube complex examples") {
  TwistedComplex c4 = raag_complex(Graph::cycle(4));
  CHECK(c4.ranks() == std::vector<std::size_t>{1, 4, 4});
  TwistedComplex v = raag_complex(Graph(1, {}));
  CHECK(v.ranks() == std::vector<std::size_t>{1, 1});
  CHECK(v.differential(1) == LaurentMatrix::from_strings({{"t - 1"}}, 1));
  CHECK(raag_complex(Graph::complete(3)).ranks() == std::vector<std::size_t>{1, 3, 3, 1});
}

TEST_CASE("cube complex and tensor route agree as modules") {
  GroupModel ff = direct_product({free_group(2), free_group(2)});
  auto a = kernel_homology_univariate(raag_complex(Graph::cycle(4)));
  auto b = kernel_homology_univariate(ff.complex(diagonal_epimorphism(ff)));
  const std::size_t top = std::max(a.degrees.size(), b.degrees.size());
  a.degrees.resize(top);
  b.degrees.resize(top);
  for (std::size_t j = 0; j < top; ++j) {
    CHECK(a.degrees[j].free_rank == b.degrees[j].free_rank);
    CHECK(a.degrees[j].torsion_factors == b.degrees[j].torsion_factors);
  }
}

TEST_CASE("graph parsing") {
  Graph g = parse_graph("# square\nv 4\ne 0 1\ne 1 2\ne 2 3\ne 3 0\ne 1 0\n");
  CHECK(g.vertex_count() == 4);
  CHECK(g.edges().size() == 4);
  CHECK(error_code([] { parse_graph("v 2\ne 0 0\n"); }) != "");
  CHECK(error_code([] { parse_graph("v 2\ne 0 5\n"); }) != "");
}

TEST_CASE("pencil numerology examples") {
  PencilData a = pencil_numerology({2, 2, 2});
  CHECK(a.branch_sizes == std::vector<long>{2, 2, 2});
  CHECK(a.critical_points == 8);
  CHECK(a.euler_x == -8);
  CHECK(a.finiteness_verdict == "F_2 but not FP_3");

  PencilData b = pencil_numerology({2, 2, 2, 2});
  CHECK(b.critical_points == 16);
  CHECK(b.euler_x == 16);
  CHECK(b.finiteness_verdict == "F_3 but not FP_4");

  PencilData c = pencil_numerology({3, 2});
  CHECK(c.critical_points == 8);
  CHECK(c.finiteness_verdict.empty());
  CHECK_FALSE(c.flags.empty());

  CHECK(error_code([] { pencil_numerology({2, 1, 2}); }) == "GenusTooSmall");
  CHECK(error_code([] { pencil_numerology({2}); }) == "BadArgument");
}

TEST_CASE("pencil invariants and Riemann-Hurwitz audit") {
  for (long g = 2; g <= 10; ++g) {
    auto audit = riemann_hurwitz_audit(g);
    CHECK(audit.holds);
    CHECK(2 - 2 * g == 2 * 0 - (2 * g - 2));
    for (long h = 2; h <= 4; ++h) {
      PencilData p = pencil_numerology({g, h, 2});
      long prod = 1, chi = 1;
      for (std::size_t j = 0; j < 3; ++j) {
        CHECK(p.branch_sizes[j] % 2 == 0);
        CHECK(p.branch_sizes[j] > 0);
        CHECK(p.ramification_sizes[j] == p.branch_sizes[j]);
        prod *= p.ramification_sizes[j];
        chi *= 2 - 2 * p.genera[j];
      }
      CHECK(p.critical_points == prod);
      CHECK(p.euler_x == chi);
    }
  }
}

TEST_CASE("branch monodromy check") {
  CHECK(branch_monodromy_check(2, {1, 1}));
  CHECK_FALSE(branch_monodromy_check(2, {1, 0}));
  CHECK(branch_monodromy_check(2, {1, 1}, {1, 0}));
  CHECK(branch_monodromy_check(2, {1, 1}, {1, 1}));
  CHECK_FALSE(branch_monodromy_check(3, {1, 1}));
  for (long g = 2; g <= 10; ++g) CHECK(branch_monodromy_check(g, std::vector<int>(static_cast<std::size_t>(2 * g - 2), 1)));
}
