#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "charvar/abelian.hpp"
#include "charvar/laurent_matrix.hpp"
#include "charvar/presentation.hpp"

namespace charvar {

/// Element of the integral group ring Z F of a free group.
class GroupRingElement {
 public:
  using TermMap = std::map<Word, Integer>;

  GroupRingElement() = default;
  static GroupRingElement of(const Word& w, const Integer& c = 1);

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  void add_term(const Word& w, const Integer& c);

  GroupRingElement& operator+=(const GroupRingElement& o);
  GroupRingElement& operator-=(const GroupRingElement& o);
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  /// Left multiplication by a group element.
  friend GroupRingElement operator*(const Word& u, const GroupRingElement& a);
  bool operator==(const GroupRingElement&) const = default;

  /// Ring map Z F -> Q[Z^m] sending generator i to t^{images[i]}.
  LaurentPolynomial pushforward(const std::vector<IntVector>& images, std::size_t m) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  TermMap terms_;
};

/// Fox derivative d w / d x_gen, computed exactly in Z F.
GroupRingElement fox_derivative(const Word& w, std::size_t gen);

/// Checks  sum_i (dw/dx_i)(x_i - 1) == w - 1  in Z F.
bool fundamental_identity_check(const Word& w);

/// Alexander matrix: rows are relators, columns generators, entry (j, i) the
/// image of d r_j / d x_i under x -> t^{images[x]}. Throws QuotientInvalid
/// if some relator does not map to zero.
LaurentMatrix alexander_matrix(const Presentation& p, const std::vector<IntVector>& images,
                               std::size_t m);
LaurentMatrix alexander_matrix(const Presentation& p, const EpimorphismToZm& nu);
LaurentMatrix alexander_matrix(const Presentation& p, const AbelianData& ab);

/// Throws QuotientInvalid unless every relator maps to zero under `images`.
void check_quotient(const Presentation& p, const std::vector<IntVector>& images, std::size_t m);

}  // namespace charvar
