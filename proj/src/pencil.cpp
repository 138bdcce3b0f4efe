#include "charvar/pencil.hpp"

#include "charvar/error.hpp"

namespace charvar {

RiemannHurwitzAudit riemann_hurwitz_audit(long genus) {
  RiemannHurwitzAudit a;
  a.genus = genus;
  a.euler_cover = 2 - 2 * genus;
  a.degree_times_euler = 2 * (2 - 2 * 1);
  a.ramification_sum = (2 * genus - 2) * (2 - 1);
  a.holds = a.euler_cover == a.degree_times_euler - a.ramification_sum;
  return a;
}

PencilData pencil_numerology(const std::vector<long>& genera) {
  if (genera.size() < 2) throw Error("BadArgument", "a pencil needs at least two curve factors");
  for (long g : genera)
    if (g <= 1)
      throw Error("GenusTooSmall", "genus " + std::to_string(g) +
                                       " gives an empty branch set; every factor needs genus >= 2");
  PencilData d;
  d.r = genera.size();
  d.genera = genera;
  d.critical_points = 1;
  d.euler_x = 1;
  for (long g : genera) {
    d.branch_sizes.push_back(2 * g - 2);
    d.ramification_sizes.push_back(2 * g - 2);
    d.critical_points *= 2 * g - 2;
    d.euler_x *= 2 - 2 * g;
    d.audits.push_back(riemann_hurwitz_audit(g));
  }
  d.fiber_dimension = d.r - 1;
  d.cd_total_lower_bound = static_cast<long>(d.r);
  const std::string r = std::to_string(d.r), r1 = std::to_string(d.r - 1);
  const std::string n = std::to_string(d.critical_points);
  if (d.r >= 3) {
    d.finiteness_verdict = "F_" + r1 + " but not FP_" + r;
    d.cd_fiber_lower_bound = static_cast<long>(d.r);
    d.higher_homotopy_module = "pi_" + r1 + "(H) is a free Z[pi_1(H)]-module on C(h) x pi_1(E): " + n +
                               " generators per element of pi_1(E) = Z^2";
    d.universal_cover_homotopy_type =
        "wedge of " + r1 + "-spheres indexed by pi_1(H) x C(h) x pi_1(E), |C(h)| = " + n;
  } else {
    d.flags.push_back("dim X = 2 < 3: the fiber-group conclusions need dim X >= 3");
  }
  return d;
}

bool branch_monodromy_check(long genus, const std::vector<int>& branch_classes,
                            const std::vector<int>& torus_classes) {
  if (genus < 2) return false;
  if (static_cast<long>(branch_classes.size()) != 2 * genus - 2) return false;
  if (torus_classes.size() != 2) return false;
  int sum = 0;
  for (int c : branch_classes) {
    if (((c % 2) + 2) % 2 != 1) return false;
    sum += c;
  }
  // The loops satisfy Σ α_b = 0 in H_1(E \ B), so their images must too.
  return ((sum % 2) + 2) % 2 == 0;
}

}  // namespace charvar
