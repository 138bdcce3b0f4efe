#include "charvar/word.hpp"

#include <algorithm>
#include <cstdlib>

namespace charvar {

Word free_reduce(const std::vector<Syllable>& letters) { return Word(letters); }

Word::Word(std::vector<Syllable> syllables) {
  std::vector<Syllable> out;
  out.reserve(syllables.size());
  for (const auto& s : syllables) {
    if (s.exp == 0) continue;
    if (!out.empty() && out.back().gen == s.gen) {
      out.back().exp += s.exp;
      if (out.back().exp == 0) out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  syllables_ = std::move(out);
}

Word Word::generator(std::size_t gen, long exp) { return Word({Syllable{gen, exp}}); }

std::size_t Word::length() const {
  std::size_t n = 0;
  for (const auto& s : syllables_) n += static_cast<std::size_t>(std::labs(s.exp));
  return n;
}

std::size_t Word::generator_bound() const {
  std::size_t b = 0;
  for (const auto& s : syllables_) b = std::max(b, s.gen + 1);
  return b;
}

Word Word::inverse() const {
  std::vector<Syllable> inv(syllables_.rbegin(), syllables_.rend());
  for (auto& s : inv) s.exp = -s.exp;
  Word w;
  w.syllables_ = std::move(inv);
  return w;
}

std::vector<long> Word::exponent_vector(std::size_t gens) const {
  std::vector<long> v(gens, 0);
  for (const auto& s : syllables_) v.at(s.gen) += s.exp;
  return v;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Syllable> all = a.syllables_;
  all.insert(all.end(), b.syllables_.begin(), b.syllables_.end());
  return Word(std::move(all));
}

std::string Word::to_string(const std::vector<std::string>& names) const {
  if (syllables_.empty()) return "1";
  std::string out;
  for (const auto& s : syllables_) {
    if (!out.empty()) out += ' ';
    out += s.gen < names.size() ? names[s.gen] : "x" + std::to_string(s.gen);
    if (s.exp != 1) out += "^" + std::to_string(s.exp);
  }
  return out;
}

Word commutator(const Word& x, const Word& y) { return x * y * x.inverse() * y.inverse(); }

}  // namespace charvar
