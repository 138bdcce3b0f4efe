#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "charvar/abelian.hpp"
#include "charvar/laurent_matrix.hpp"
#include "charvar/presentation.hpp"

namespace charvar {

/// Finite chain complex of free modules over Q[Z^m]:
///
///     C_top --d_top--> ... --d_2--> C_1 --d_1--> C_0
///
/// with d_j a c_{j-1} x c_j Laurent matrix acting on column vectors.
class TwistedComplex {
 public:
  static constexpr std::size_t kAllDegrees = std::numeric_limits<std::size_t>::max();

  TwistedComplex() = default;
  /// `differentials[j-1]` is d_j. Shapes and variable counts are checked;
  /// composition is checked by verify().
  TwistedComplex(std::size_t variable_count, std::vector<std::size_t> ranks,
                 std::vector<LaurentMatrix> differentials);

  std::size_t variable_count() const noexcept { return m_; }
  const std::vector<std::size_t>& ranks() const noexcept { return ranks_; }
  std::size_t top_degree() const noexcept { return ranks_.empty() ? 0 : ranks_.size() - 1; }
  /// d_j for 1 <= j <= top_degree().
  const LaurentMatrix& differential(std::size_t j) const { return diffs_.at(j - 1); }

  /// Highest degree through which the complex computes group homology
  /// (kAllDegrees for aspherical catalog models, 1 for arbitrary presentations).
  std::size_t group_homology_through() const noexcept { return group_through_; }
  void set_group_homology_through(std::size_t d) noexcept { group_through_ = d; }

  /// Throws NotAComplex unless d_{j} d_{j+1} = 0 exactly for all j.
  void verify() const;

  long euler_characteristic() const;

  /// Applies the monomial ring map given by an integer matrix (target_vars x m).
  TwistedComplex pushforward(const std::vector<std::vector<long>>& map, std::size_t target_vars) const;

 private:
  std::size_t m_ = 0;
  std::vector<std::size_t> ranks_;
  std::vector<LaurentMatrix> diffs_;
  std::size_t group_through_ = 1;
};

/// C_2 = Λ^s -> C_1 = Λ^n -> C_0 = Λ from the Fox calculus; `images` send
/// generators into Z^m and must kill every relator (QuotientInvalid otherwise).
TwistedComplex presentation_complex(const Presentation& p, const std::vector<IntVector>& images,
                                    std::size_t m);
TwistedComplex presentation_complex(const Presentation& p, const EpimorphismToZm& nu);

/// Tensor product over Q with concatenated variables:
/// d(a ⊗ b) = da ⊗ b + (-1)^{|a|} a ⊗ db.
TwistedComplex tensor_complex(const TwistedComplex& a, const TwistedComplex& b);

/// The one-cell complex (ranks (1)) in m variables, unit for tensor_complex.
TwistedComplex point_complex(std::size_t m = 0);

struct BettiProfile {
  std::vector<long> betti;
  std::string character;
  /// Degrees above this are homology of the chosen complex, not necessarily of the group.
  std::size_t group_homology_through = 1;

  long euler_characteristic() const;
};

/// b_j(ρ) = c_j - rank d_j(ρ) - rank d_{j+1}(ρ), exact; generic ranks at Character::generic().
BettiProfile twisted_betti(const TwistedComplex& c, const Character& rho);

/// Ranks of all differentials at ρ (index j holds rank d_j, index 0 is 0).
std::vector<std::size_t> differential_ranks(const TwistedComplex& c, const Character& rho,
                                            std::size_t up_to_degree = TwistedComplex::kAllDegrees);

struct KernelDegree {
  std::size_t free_rank = 0;
  std::vector<LaurentPolynomial> torsion_factors;  // non-unit invariant factors
  long torsion_dimension = 0;
  bool infinite_dimensional() const { return free_rank > 0; }
};

/// Homology of a univariate complex as Q[t^{±1}]-modules, i.e. H_*(N; Q)
/// for N the kernel of the map to Z.
struct KernelHomologyReport {
  std::vector<KernelDegree> degrees;
  std::size_t group_homology_through = 1;
};

KernelHomologyReport kernel_homology_univariate(const TwistedComplex& c);

constexpr std::size_t kDefaultWindowCeiling = 4'000'000;

/// dims[k-1][j] is dim_Q H_j of the window of radius k (k = 1..radius) in the
/// Z^m-cover, m in {1, 2}. A cell is kept when all of its boundary is kept.
/// `ceiling` bounds the number of dense boundary-matrix entries.
std::vector<std::vector<long>> window_homology(const TwistedComplex& c, std::size_t radius,
                                               std::size_t ceiling = kDefaultWindowCeiling);

struct FiniteCoverReport {
  std::size_t cover_generators = 0;
  std::size_t cover_relators = 0;
  long cover_b1 = 0;
  long b1_trivial = 0;   // dim H_1(G; Q)
  long b1_sign = 0;      // dim H_1(G; Q_{ν*(-1)})
  bool passed = false;
};

/// Reidemeister-Schreier presentation of ν^{-1}(2Z) and the check
/// b_1(cover) = b_1(G, 1) + b_1(G, ν*(-1)). Requires ν onto Z.
FiniteCoverReport finite_cover_oracle(const Presentation& p, const EpimorphismToZm& nu);

/// Reidemeister-Schreier presentation of the index-2 subgroup ν^{-1}(2Z).
Presentation index_two_subgroup(const Presentation& p, const EpimorphismToZm& nu);

}  // namespace charvar
