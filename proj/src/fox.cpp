#include "charvar/fox.hpp"

#include "charvar/error.hpp"

namespace charvar {

GroupRingElement GroupRingElement::of(const Word& w, const Integer& c) {
  GroupRingElement e;
  e.add_term(w, c);
  return e;
}

void GroupRingElement::add_term(const Word& w, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  GroupRingElement r;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) r.add_term(wa * wb, ca * cb);
  return r;
}

GroupRingElement operator*(const Word& u, const GroupRingElement& a) {
  GroupRingElement r;
  for (const auto& [w, c] : a.terms_) r.add_term(u * w, c);
  return r;
}

LaurentPolynomial GroupRingElement::pushforward(const std::vector<IntVector>& images,
                                                std::size_t m) const {
  LaurentPolynomial p(m);
  Exponent e(m);
  for (const auto& [w, c] : terms_) {
    std::fill(e.begin(), e.end(), 0);
    for (const auto& s : w.syllables())
      for (std::size_t k = 0; k < m; ++k) e[k] += s.exp * images.at(s.gen).at(k);
    p.add_term(e, Rational(c));
  }
  return p;
}

std::string GroupRingElement::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    Integer mag = abs(c);
    if (mag != 1) out += mag.get_str() + "*";
    out += w.is_identity() ? "1" : "(" + w.to_string(names) + ")";
  }
  return out;
}

GroupRingElement fox_derivative(const Word& w, std::size_t gen) {
  GroupRingElement result;
  Word prefix;
  for (const auto& s : w.syllables()) {
    if (s.gen == gen) {
      // d(x^e)/dx = 1 + x + ... + x^{e-1} for e > 0, -(x^-1 + ... + x^e) for e < 0.
      if (s.exp > 0) {
        for (long k = 0; k < s.exp; ++k) result.add_term(prefix * Word::generator(gen, k), 1);
      } else {
        for (long k = -1; k >= s.exp; --k) result.add_term(prefix * Word::generator(gen, k), -1);
      }
    }
    prefix = prefix * Word::generator(s.gen, s.exp);
  }
  return result;
}

bool fundamental_identity_check(const Word& w) {
  GroupRingElement lhs;
  const std::size_t n = w.generator_bound();
  for (std::size_t i = 0; i < n; ++i) {
    GroupRingElement xi_minus_1 = GroupRingElement::of(Word::generator(i)) - GroupRingElement::of(Word());
    lhs += fox_derivative(w, i) * xi_minus_1;
  }
  GroupRingElement rhs = GroupRingElement::of(w) - GroupRingElement::of(Word());
  return lhs == rhs;
}

void check_quotient(const Presentation& p, const std::vector<IntVector>& images, std::size_t m) {
  if (images.size() != p.generator_count())
    throw Error("QuotientInvalid", "quotient needs one image per generator");
  for (const auto& v : images)
    if (v.size() != m) throw Error("QuotientInvalid", "quotient image has wrong length");
  for (std::size_t j = 0; j < p.relator_count(); ++j) {
    IntVector v(m, 0);
    for (const auto& s : p.relators()[j].syllables())
      for (std::size_t k = 0; k < m; ++k) v[k] += s.exp * images[s.gen][k];
    for (long x : v)
      if (x != 0) throw Error("QuotientInvalid", "relator " + std::to_string(j) + " survives in the quotient");
  }
}

LaurentMatrix alexander_matrix(const Presentation& p, const std::vector<IntVector>& images,
                               std::size_t m) {
  check_quotient(p, images, m);
  LaurentMatrix a(p.relator_count(), p.generator_count(), m);
  for (std::size_t j = 0; j < p.relator_count(); ++j)
    for (std::size_t i = 0; i < p.generator_count(); ++i)
      a.set(j, i, fox_derivative(p.relators()[j], i).pushforward(images, m));
  return a;
}

LaurentMatrix alexander_matrix(const Presentation& p, const EpimorphismToZm& nu) {
  return alexander_matrix(p, nu.images, nu.target_rank);
}

LaurentMatrix alexander_matrix(const Presentation& p, const AbelianData& ab) {
  return alexander_matrix(p, ab.generator_images(), ab.torsion_free_rank);
}

}  // namespace charvar
