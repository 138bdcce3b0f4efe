#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "charvar/catalog.hpp"
#include "charvar/laurent_matrix.hpp"

namespace charvar {

/// Does ρ lie in V^s_t, i.e. dim H_s(G; Q_ρ) >= t? ρ is given in the
/// coordinates of the group's free abelianization. Throws UnsupportedDegree
/// when the model does not compute group homology in degree s.
bool in_variety(const GroupModel& g, std::size_t s, long t, const Character& rho);

/// Generators of the ideal of (n - t)-minors of the Alexander matrix, whose
/// zero set is V^1_t away from the trivial character.
struct V1Ideal {
  long depth = 1;
  long minor_size = 0;
  /// Unit-normalized, deduplicated, nonzero generators; empty means the zero ideal.
  std::vector<LaurentPolynomial> generators;
  /// dim H_1(G; Q) at the trivial character, where the minors do not apply.
  long trivial_character_b1 = 0;
  bool trivial_character_in_locus = false;
  std::vector<std::string> caveats;

  bool is_zero_ideal() const { return generators.empty(); }
  bool vanishes_at(const std::vector<Rational>& point) const;
};

V1Ideal v1_ideal(const GroupModel& g, long depth, std::size_t ceiling = kDefaultMinorCeiling);

struct SpecialPointCheck {
  std::string character;
  long betti = 0;
  bool in_locus = false;
};

struct FullnessVerdict {
  enum class Status { kFull, kNotFull, kNotConcluded };
  Status status = Status::kNotConcluded;
  std::string method;  // "generic-rank", "euler-curve" or "kunneth-product"
  std::size_t degree = 1;
  std::vector<long> generic_betti;
  std::optional<long> euler_characteristic;
  std::vector<FullnessVerdict> factor_verdicts;
  std::vector<SpecialPointCheck> special_points;
  std::vector<SpecialPointCheck> samples;
  std::string reason;

  bool is_full() const { return status == Status::kFull; }
};

std::string to_string(FullnessVerdict::Status s);

/// Decides V^1_1(G) = T_G by exact generic rank (or the Euler-characteristic
/// shortcut for curve groups), always checking the trivial and order-2 characters.
FullnessVerdict is_full_v1(const GroupModel& g, std::uint64_t seed = 1);

/// Künneth route: V^r_1 of a product of r groups is full when every factor has
/// V^1_1 full. Only sufficiency is claimed; otherwise the verdict is "not concluded".
FullnessVerdict is_full_vr_product(const std::vector<GroupModel>& factors, std::uint64_t seed = 1);

/// Generic-rank route for V^r_1(G) = T_G in an arbitrary degree r.
FullnessVerdict is_full_vr_generic(const GroupModel& g, std::size_t r, std::uint64_t seed = 1);

/// Betti number in one degree (only the two relevant ranks are computed).
long betti_in_degree(const TwistedComplex& c, std::size_t s, const Character& rho);

/// Characters of order dividing 2 in (Q^*)^m: all of them for m <= 10,
/// otherwise those with at most two coordinates equal to -1. Includes the trivial one.
std::vector<Character> order_two_characters(std::size_t m);

/// Deterministic sampler of nontrivial rational characters. Coordinates are
/// ±p/q with 1 <= p, q <= B, and B doubles after every batch.
class CharacterSampler {
 public:
  CharacterSampler(std::size_t m, std::uint64_t seed, std::size_t batch = 10, long initial_box = 2);
  Character next();
  long current_box() const noexcept { return box_; }

 private:
  std::uint64_t draw(std::uint64_t bound);

  std::size_t m_;
  std::uint64_t state_;
  std::size_t batch_;
  std::size_t produced_ = 0;
  long box_;
};

}  // namespace charvar
