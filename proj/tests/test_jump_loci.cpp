#include <doctest.h>

#include "charvar/error.hpp"
#include "charvar/jump_loci.hpp"
#include "oracles.hpp"

using namespace charvar;

namespace {

std::vector<Character> sample(std::size_t m, std::size_t count, std::uint64_t seed) {
  CharacterSampler s(m, seed);
  std::vector<Character> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(s.next());
  return out;
}

std::string error_code(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

}  // namespace

TEST_CASE("in_variety examples") {
  GroupModel torus = surface_group(1);
  CHECK_FALSE(in_variety(torus, 1, 1, Character::at({2, 3})));
  CHECK(in_variety(torus, 1, 1, Character::trivial(2)));
  GroupModel g2 = surface_group(2);
  for (const auto& rho : sample(4, 10, 3)) CHECK(in_variety(g2, 1, 1, rho));
  CHECK(in_variety(g2, 1, 1, Character::trivial(4)));
}

TEST_CASE("in_variety rejects degree 2 on user presentations and generic points") {
  GroupModel g = GroupModel::from_presentation("user", parse_presentation("gens a,b; rel [a,b];"));
  CHECK(error_code([&] { in_variety(g, 2, 1, Character::at({2, 3})); }) == "UnsupportedDegree");
  CHECK_NOTHROW(in_variety(surface_group(1), 2, 1, Character::at({2, 3})));
  CHECK(error_code([] { in_variety(surface_group(1), 1, 1, Character::generic()); }) == "GenericNotEvaluable");
}

TEST_CASE("v1_ideal examples") {
  V1Ideal t = v1_ideal(surface_group(1), 1);
  REQUIRE(t.generators.size() == 2);
  CHECK(t.generators[0] == parse_laurent("t2 - 1", 2));
  CHECK(t.generators[1] == parse_laurent("t1 - 1", 2));
  CHECK(t.trivial_character_b1 == 2);
  CHECK(t.trivial_character_in_locus);

  V1Ideal f = v1_ideal(free_group(2), 1);
  CHECK(f.is_zero_ideal());

  V1Ideal g = v1_ideal(surface_group(2), 2);
  CHECK(g.is_zero_ideal());
  CHECK(g.minor_size == 2);
  CHECK(twisted_betti(surface_group(2).full_complex(), Character::generic()).betti[1] >= 2);
}

TEST_CASE("zero set of the V^1_t ideal matches membership away from the trivial character") {
  std::vector<GroupModel> gs{surface_group(1), surface_group(2), free_group(2),
                             GroupModel::from_presentation("knot", parse_presentation("gens a,b; rel a b a B A B;")),
                             GroupModel::from_presentation("x", parse_presentation("gens x,y,z; rel [x,y]; rel [x,z];"))};
  for (const auto& g : gs) {
    const std::size_t m = g.abelianization().torsion_free_rank;
    if (m == 0) continue;
    for (long t = 1; t <= 2; ++t) {
      V1Ideal ideal = v1_ideal(g, t);
      std::vector<Character> chars = sample(m, 20, 6);
      for (const auto& rho : order_two_characters(m))
        if (!rho.is_trivial()) chars.push_back(rho);
      for (const auto& rho : chars) CHECK(ideal.vanishes_at(rho.coords()) == in_variety(g, 1, t, rho));
      CHECK(ideal.trivial_character_in_locus == in_variety(g, 1, t, Character::trivial(m)));
    }
  }
}

TEST_CASE("is_full_v1 examples") {
  FullnessVerdict g2 = is_full_v1(surface_group(2));
  CHECK(g2.is_full());
  CHECK(g2.method == "euler-curve");
  REQUIRE(g2.euler_characteristic.has_value());
  CHECK(*g2.euler_characteristic == -2);

  FullnessVerdict t = is_full_v1(surface_group(1));
  CHECK(t.status == FullnessVerdict::Status::kNotFull);
  CHECK(t.generic_betti.at(1) == 0);

  FullnessVerdict f = is_full_v1(free_group(2));
  CHECK(f.is_full());
  CHECK(f.method == "generic-rank");
  CHECK(f.generic_betti.at(1) == 1);
}

TEST_CASE("fullness verdicts are sound at sampled and special characters") {
  std::vector<GroupModel> gs{surface_group(2), surface_group(3), free_group(2), free_group(3),
                             punctured_surface_group(1, 1), raag(Graph::cycle(5))};
  for (const auto& g : gs) {
    FullnessVerdict v = is_full_v1(g);
    if (!v.is_full()) continue;
    const std::size_t m = g.abelianization().torsion_free_rank;
    for (const auto& rho : sample(m, 20, 12)) CHECK(in_variety(g, 1, 1, rho));
    for (const auto& rho : order_two_characters(m)) CHECK(in_variety(g, 1, 1, rho));
    for (const auto& sp : v.special_points) CHECK(sp.in_locus);
  }
}

TEST_CASE("product fullness examples") {
  GroupModel g2 = surface_group(2), f2 = free_group(2), torus = surface_group(1);
  FullnessVerdict a = is_full_vr_product({g2, g2, g2});
  CHECK(a.is_full());
  CHECK(a.method == "kunneth-product");
  CHECK(a.degree == 3);
  CHECK(a.factor_verdicts.size() == 3);

  FullnessVerdict b = is_full_vr_product({g2, torus});
  CHECK(b.status == FullnessVerdict::Status::kNotConcluded);
  CHECK(b.reason == "factor 2 not full");

  FullnessVerdict c = is_full_vr_product({f2, f2, f2});
  CHECK(c.is_full());
  for (const auto& s : c.samples) CHECK(s.in_locus);
}

TEST_CASE("product lower bound: b_r >= product of factor b_1") {
  std::vector<GroupModel> fs{surface_group(2), free_group(2), surface_group(2)};
  GroupModel g = direct_product(fs);
  TwistedComplex c = g.full_complex();
  for (const auto& rho : sample(10, 10, 21)) {
    const auto& x = rho.coords();
    long prod = 1;
    std::size_t at = 0;
    for (const auto& f : fs) {
      const std::size_t m = f.abelianization().torsion_free_rank;
      Character r = Character::at(std::vector<Rational>(x.begin() + static_cast<long>(at), x.begin() + static_cast<long>(at + m)));
      prod *= twisted_betti(f.full_complex(), r).betti[1];
      at += m;
    }
    CHECK(betti_in_degree(c, 3, rho) >= prod);
    CHECK(prod >= 1);
  }
}

TEST_CASE("generic route agrees with the product route on small products") {
  GroupModel ff = direct_product({free_group(2), free_group(2)});
  CHECK(is_full_vr_generic(ff, 2).is_full());
  GroupModel tt = direct_product({surface_group(1), free_group(2)});
  CHECK(is_full_vr_generic(tt, 2).status == FullnessVerdict::Status::kNotFull);
}

TEST_CASE("order-two characters and the sampler") {
  CHECK(order_two_characters(3).size() == 8);
  CHECK(order_two_characters(12).size() == 1 + 12 + 66);
  CharacterSampler a(3, 42), b(3, 42);
  for (int i = 0; i < 35; ++i) {
    Character x = a.next(), y = b.next();
    CHECK(x.to_string() == y.to_string());
    CHECK_FALSE(x.is_trivial());
    for (const auto& q : x.coords()) CHECK(q != 0);
  }
  CHECK(a.current_box() == 16);
}

TEST_CASE("knot groups recover their Alexander polynomials") {
  auto ideal_of = [](const std::string& text) {
    GroupModel g = GroupModel::from_presentation("knot", parse_presentation(text));
    return v1_ideal(g, 1);
  };
  V1Ideal trefoil = ideal_of("gens x,y; rel x y x Y X Y;");
  REQUIRE(trefoil.generators.size() == 1);
  CHECK(trefoil.generators[0].unit_normalized() == parse_laurent("t^2 - t + 1", 1).unit_normalized());
  V1Ideal eight = ideal_of("gens x,y; rel X y x Y x y X Y x Y;");
  REQUIRE(eight.generators.size() == 1);
  CHECK(eight.generators[0].unit_normalized() == parse_laurent("t^2 - 3*t + 1", 1).unit_normalized());
  // Roots of the trefoil polynomial are primitive sixth roots of unity, not rational.
  for (const auto& rho : sample(1, 20, 8)) CHECK_FALSE(trefoil.vanishes_at(rho.coords()));
}
