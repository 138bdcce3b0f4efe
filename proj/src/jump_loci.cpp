#include "charvar/jump_loci.hpp"

#include <algorithm>
#include <set>

#include "charvar/error.hpp"
#include "charvar/fox.hpp"

namespace charvar {

namespace {

void require_degree(const TwistedComplex& c, std::size_t s) {
  if (s > c.group_homology_through())
    throw Error("UnsupportedDegree", "degree " + std::to_string(s) +
                                         " of this model is presentation-complex homology, not group homology");
  if (s > c.top_degree())
    throw Error("UnsupportedDegree", "degree " + std::to_string(s) + " exceeds the model's dimension");
}

}  // namespace

long betti_in_degree(const TwistedComplex& c, std::size_t s, const Character& rho) {
  if (s > c.top_degree()) return 0;
  std::size_t in = s >= 1 ? rank_at(c.differential(s), rho) : 0;
  std::size_t out = s + 1 <= c.top_degree() ? rank_at(c.differential(s + 1), rho) : 0;
  return static_cast<long>(c.ranks()[s]) - static_cast<long>(in) - static_cast<long>(out);
}

bool in_variety(const GroupModel& g, std::size_t s, long t, const Character& rho) {
  if (rho.is_generic()) throw Error("GenericNotEvaluable", "membership needs a rational character");
  TwistedComplex c = g.full_complex();
  require_degree(c, s);
  return betti_in_degree(c, s, rho) >= t;
}

bool V1Ideal::vanishes_at(const std::vector<Rational>& point) const {
  return std::all_of(generators.begin(), generators.end(),
                     [&](const LaurentPolynomial& p) { return p.evaluate(point) == 0; });
}

V1Ideal v1_ideal(const GroupModel& g, long depth, std::size_t ceiling) {
  if (depth < 1) throw Error("BadArgument", "depth must be at least 1");
  const auto& ab = g.abelianization();
  const auto& p = g.presentation();
  V1Ideal out;
  out.depth = depth;
  out.minor_size = static_cast<long>(p.generator_count()) - depth;
  out.trivial_character_b1 = static_cast<long>(ab.torsion_free_rank);
  out.trivial_character_in_locus = out.trivial_character_b1 >= depth;
  if (!ab.torsion_invariants.empty())
    out.caveats.push_back("H_1 has torsion; only the identity component of the character torus is described");
  out.caveats.push_back("trivial character handled separately: b_1(1) = " +
                        std::to_string(out.trivial_character_b1));

  const std::size_t m = ab.torsion_free_rank;
  if (out.minor_size <= 0) {
    out.generators.push_back(LaurentPolynomial::constant(m, 1));
    return out;
  }
  LaurentMatrix alex = alexander_matrix(p, ab);
  std::set<std::string> seen;
  for (auto& f : minors(alex, static_cast<std::size_t>(out.minor_size), ceiling)) {
    if (f.is_zero()) continue;
    auto n = f.unit_normalized();
    if (seen.insert(n.to_string()).second) out.generators.push_back(std::move(n));
  }
  return out;
}

std::string to_string(FullnessVerdict::Status s) {
  switch (s) {
    case FullnessVerdict::Status::kFull: return "full";
    case FullnessVerdict::Status::kNotFull: return "not-full";
    case FullnessVerdict::Status::kNotConcluded: return "not-concluded";
  }
  return "unknown";
}

std::vector<Character> order_two_characters(std::size_t m) {
  std::vector<Character> out;
  if (m <= 10) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
      std::vector<Rational> c(m, Rational(1));
      for (std::size_t k = 0; k < m; ++k)
        if (mask & (std::size_t{1} << k)) c[k] = -1;
      out.push_back(Character::at(std::move(c)));
    }
    return out;
  }
  out.push_back(Character::trivial(m));
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Rational> c(m, Rational(1));
    c[i] = -1;
    out.push_back(Character::at(c));
    for (std::size_t j = i + 1; j < m; ++j) {
      auto d = c;
      d[j] = -1;
      out.push_back(Character::at(std::move(d)));
    }
  }
  return out;
}

CharacterSampler::CharacterSampler(std::size_t m, std::uint64_t seed, std::size_t batch, long initial_box)
    : m_(m), state_(seed), batch_(batch == 0 ? 1 : batch), box_(initial_box < 1 ? 1 : initial_box) {}

std::uint64_t CharacterSampler::draw(std::uint64_t bound) {
  // splitmix64: fixed across platforms, so reruns are byte-identical.
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z % bound;
}

Character CharacterSampler::next() {
  if (m_ == 0) throw Error("BadArgument", "the character torus of rank 0 has no nontrivial points");
  if (produced_ > 0 && produced_ % batch_ == 0) box_ *= 2;
  ++produced_;
  const auto b = static_cast<std::uint64_t>(box_);
  for (;;) {
    std::vector<Rational> c(m_);
    for (std::size_t k = 0; k < m_; ++k) {
      long num = static_cast<long>(draw(b)) + 1;
      long den = static_cast<long>(draw(b)) + 1;
      if (draw(2)) num = -num;
      c[k] = Rational(num, den);
      c[k].canonicalize();
    }
    auto ch = Character::at(std::move(c));
    if (!ch.is_trivial()) return ch;
  }
}

namespace {

constexpr std::size_t kWitnessSamples = 6;

void check_special_points(FullnessVerdict& v, const TwistedComplex& c, std::size_t s, long t) {
  for (const auto& ch : order_two_characters(c.variable_count())) {
    long b = betti_in_degree(c, s, ch);
    v.special_points.push_back({ch.to_string(), b, b >= t});
  }
}

void sample_witnesses(FullnessVerdict& v, const TwistedComplex& c, std::size_t s, std::uint64_t seed) {
  if (c.variable_count() == 0) return;
  CharacterSampler sampler(c.variable_count(), seed);
  for (std::size_t i = 0; i < kWitnessSamples; ++i) {
    auto ch = sampler.next();
    long b = betti_in_degree(c, s, ch);
    v.samples.push_back({ch.to_string(), b, b >= 1});
  }
}

void demote_on_failed_points(FullnessVerdict& v) {
  if (!v.is_full()) return;
  for (const auto* list : {&v.special_points, &v.samples})
    for (const auto& p : *list)
      if (!p.in_locus) {
        v.status = FullnessVerdict::Status::kNotConcluded;
        v.reason = "character " + p.character + " lies outside the locus";
        return;
      }
}

}  // namespace

FullnessVerdict is_full_vr_generic(const GroupModel& g, std::size_t r, std::uint64_t seed) {
  FullnessVerdict v;
  v.degree = r;
  v.method = "generic-rank";
  const auto& ab = g.abelianization();
  TwistedComplex c = g.full_complex();
  require_degree(c, r);
  v.generic_betti = twisted_betti(c, Character::generic()).betti;
  if (!ab.torsion_invariants.empty()) {
    v.status = FullnessVerdict::Status::kNotConcluded;
    v.reason = "H_1 has torsion; components of the character torus beyond the identity are unsupported";
    return v;
  }
  if (ab.torsion_free_rank == 0) {
    v.status = FullnessVerdict::Status::kNotConcluded;
    v.reason = "b_1 = 0: the torus is a point and the criterion needs a nontrivial ν";
    check_special_points(v, c, r, 1);
    return v;
  }
  if (v.generic_betti.at(r) >= 1) {
    v.status = FullnessVerdict::Status::kFull;
  } else {
    v.status = FullnessVerdict::Status::kNotFull;
    v.reason = "generic b_" + std::to_string(r) + " = 0, so the locus misses a Zariski open set";
  }
  check_special_points(v, c, r, 1);
  sample_witnesses(v, c, r, seed);
  demote_on_failed_points(v);
  return v;
}

FullnessVerdict is_full_v1(const GroupModel& g, std::uint64_t seed) {
  const auto& tags = g.presentation().tags();
  if (!tags.curve_euler || *tags.curve_euler >= 0 || !g.abelianization().torsion_invariants.empty())
    return is_full_vr_generic(g, 1, seed);

  // Curve groups with χ < 0: χ(C, Q_ρ) = χ(C) and b_0(ρ) = b_2(ρ) = 0 for ρ ≠ 1
  // force b_1(ρ) >= -χ(C) > 0 everywhere, with no elimination needed.
  FullnessVerdict v;
  v.degree = 1;
  v.method = "euler-curve";
  v.euler_characteristic = *tags.curve_euler;
  v.status = FullnessVerdict::Status::kFull;
  TwistedComplex c = g.full_complex();
  check_special_points(v, c, 1, 1);
  sample_witnesses(v, c, 1, seed);
  demote_on_failed_points(v);
  return v;
}

FullnessVerdict is_full_vr_product(const std::vector<GroupModel>& factors, std::uint64_t seed) {
  FullnessVerdict v;
  v.method = "kunneth-product";
  v.degree = factors.size();
  if (factors.empty()) throw Error("BadArgument", "need at least one factor");
  v.status = FullnessVerdict::Status::kFull;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    v.factor_verdicts.push_back(is_full_v1(factors[i], seed + i));
    if (!v.factor_verdicts.back().is_full() && v.status == FullnessVerdict::Status::kFull) {
      v.status = FullnessVerdict::Status::kNotConcluded;
      v.reason = "factor " + std::to_string(i + 1) + " not full";
    }
  }
  if (!v.is_full()) return v;

  // Spot-check on the tensor model: b_r(ρ) >= Π b_1(ρ_i) >= 1.
  std::vector<TwistedComplex> fc;
  TwistedComplex joint = point_complex(0);
  for (const auto& f : factors) {
    fc.push_back(f.full_complex());
    joint = tensor_complex(joint, fc.back());
  }
  const std::size_t r = factors.size();
  auto split = [&](const Character& ch) {
    std::vector<Character> parts;
    std::size_t off = 0;
    for (const auto& c : fc) {
      std::vector<Rational> sub(ch.coords().begin() + static_cast<long>(off),
                                ch.coords().begin() + static_cast<long>(off + c.variable_count()));
      parts.push_back(Character::at(std::move(sub)));
      off += c.variable_count();
    }
    return parts;
  };
  auto check = [&](const Character& ch, std::vector<SpecialPointCheck>& into) {
    long bound = 1;
    auto parts = split(ch);
    for (std::size_t i = 0; i < r; ++i) bound *= betti_in_degree(fc[i], 1, parts[i]);
    long b = betti_in_degree(joint, r, ch);
    into.push_back({ch.to_string(), b, b >= 1 && b >= bound});
  };
  check(Character::trivial(joint.variable_count()), v.special_points);
  // Order-2 characters that are -1 on every factor's first coordinate, and on
  // a single factor only.
  {
    std::vector<Rational> all(joint.variable_count(), Rational(1));
    std::size_t off = 0;
    for (const auto& c : fc) {
      if (c.variable_count()) {
        std::vector<Rational> one(joint.variable_count(), Rational(1));
        one[off] = -1;
        all[off] = -1;
        check(Character::at(std::move(one)), v.special_points);
      }
      off += c.variable_count();
    }
    check(Character::at(std::move(all)), v.special_points);
  }
  if (joint.variable_count()) {
    CharacterSampler sampler(joint.variable_count(), seed);
    for (std::size_t i = 0; i < 3; ++i) check(sampler.next(), v.samples);
  }
  demote_on_failed_points(v);
  return v;
}

}  // namespace charvar
