#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace charvar {

/// Riemann-Hurwitz check for a double cover C -> E of an elliptic curve with
/// |R| simple ramification points: χ(C) = 2 χ(E) - Σ_{p∈R} (e_p - 1).
struct RiemannHurwitzAudit {
  long genus = 0;
  long euler_cover = 0;        // 2 - 2g
  long degree_times_euler = 0; // 2 * χ(E) = 0
  long ramification_sum = 0;   // |R| * (2 - 1)
  bool holds = false;
};

RiemannHurwitzAudit riemann_hurwitz_audit(long genus);

/// Integer shadow of the elliptic pencil h: C_1 x ... x C_r -> E built from
/// double covers f_j: C_j -> E branched over 2 g_j - 2 points.
struct PencilData {
  std::size_t r = 0;
  std::vector<long> genera;
  std::vector<long> branch_sizes;        // |B_j| = 2 g_j - 2
  std::vector<long> ramification_sizes;  // |R_j| = |B_j|
  long critical_points = 0;              // |C(h)| = Π |R_j|
  long euler_x = 0;                      // Π (2 - 2 g_j)
  std::size_t fiber_dimension = 0;       // r - 1
  /// "F_{r-1} but not FP_r" for r >= 3; empty when r = 2.
  std::string finiteness_verdict;
  std::vector<std::string> flags;
  std::vector<RiemannHurwitzAudit> audits;
  /// Structure of π_{r-1}(H) as a module (symbolic, since π_1(E) = Z^2 is infinite).
  std::string higher_homotopy_module;
  std::string universal_cover_homotopy_type;
  /// Lower bound on cd(π_1(H)) (= dim H + 1), r >= 3 only.
  std::optional<long> cd_fiber_lower_bound;
  long cd_total_lower_bound = 0;  // cd(π_1(X)) >= dim X for a Stein universal cover
};

/// Throws GenusTooSmall if some g_j <= 1, BadArgument if fewer than two factors.
PencilData pencil_numerology(const std::vector<long>& genera);

/// Validates a Z/2 monodromy datum on E \ B: `branch_classes[b]` is the image
/// of the loop around the b-th branch point, `torus_classes` the images of
/// the two generators of H_1(E). Requires |B| = 2g - 2, every loop -> 1,
/// and the relation Σ α_b = 0 respected in Z/2.
bool branch_monodromy_check(long genus, const std::vector<int>& branch_classes,
                            const std::vector<int>& torus_classes = {0, 0});

}  // namespace charvar
