#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace charvar {

/// One syllable x_gen^exp of a word. Exponent is nonzero.
struct Syllable {
  std::size_t gen = 0;
  long exp = 0;

  bool operator==(const Syllable&) const = default;
  auto operator<=>(const Syllable&) const = default;
};

/// Element of a free group in syllable normal form: adjacent syllables have
/// distinct generators and no exponent is zero. The empty word is the identity.
class Word {
 public:
  Word() = default;
  /// Builds the freely reduced form of an arbitrary syllable list.
  explicit Word(std::vector<Syllable> syllables);

  static Word generator(std::size_t gen, long exp = 1);

  const std::vector<Syllable>& syllables() const noexcept { return syllables_; }
  bool is_identity() const noexcept { return syllables_.empty(); }
  /// Number of letters counted with multiplicity (sum of |exp|).
  std::size_t length() const;
  /// Largest generator index used plus one (0 for the identity).
  std::size_t generator_bound() const;

  Word inverse() const;
  /// Exponent sum of each generator; `gens` must exceed generator_bound().
  std::vector<long> exponent_vector(std::size_t gens) const;

  friend Word operator*(const Word& a, const Word& b);
  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::vector<Syllable> syllables_;
};

/// Free reduction of an unreduced syllable sequence; idempotent.
Word free_reduce(const std::vector<Syllable>& letters);

/// Commutator [x, y] = x y x^-1 y^-1.
Word commutator(const Word& x, const Word& y);

}  // namespace charvar
