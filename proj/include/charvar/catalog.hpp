#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "charvar/abelian.hpp"
#include "charvar/graph.hpp"
#include "charvar/presentation.hpp"
#include "charvar/twisted_complex.hpp"

namespace charvar {

/// A group together with the chain model used for its twisted homology.
///
/// Plain presentations use the presentation 2-complex; direct products use
/// the tensor product of their factors' models; right-angled Artin groups use
/// the Salvetti (cube) complex of the flag complex.
class GroupModel {
 public:
  enum class Kind { kPresentation, kProduct, kRaag };

  static GroupModel from_presentation(std::string name, Presentation p);

  const std::string& name() const noexcept { return name_; }
  Kind kind() const noexcept { return kind_; }
  const Presentation& presentation() const noexcept { return presentation_; }
  const std::vector<GroupModel>& factors() const noexcept { return factors_; }
  const Graph& graph() const noexcept { return graph_; }
  const AbelianData& abelianization() const noexcept { return abelian_; }

  /// Chain model pushed through a quotient sending generator i to images[i] in Z^m.
  TwistedComplex complex(const std::vector<IntVector>& images, std::size_t m) const;
  TwistedComplex complex(const EpimorphismToZm& nu) const { return complex(nu.images, nu.target_rank); }
  /// Chain model over the full free abelianization Z^{b_1}.
  TwistedComplex full_complex() const;

  /// Generator index range [first, last) of each product factor.
  std::vector<std::pair<std::size_t, std::size_t>> factor_ranges() const;

 private:
  friend GroupModel direct_product(const std::vector<GroupModel>& factors);
  friend GroupModel raag(const Graph& g);

  std::string name_;
  Kind kind_ = Kind::kPresentation;
  Presentation presentation_;
  std::vector<GroupModel> factors_;
  Graph graph_;
  AbelianData abelian_;
};

/// <a_1,b_1,...,a_g,b_g | [a_1,b_1]...[a_g,b_g]>, curve group with χ = 2 - 2g.
GroupModel surface_group(long genus);
/// Free group of rank 2g + n - 1 tagged as a curve group with χ = 2 - 2g - n.
GroupModel punctured_surface_group(long genus, long punctures);
GroupModel free_group(std::size_t rank);
/// Product presentation (factor relators plus commutators across factors),
/// modelled by the tensor product of the factors' complexes. Needs >= 2 factors.
GroupModel direct_product(const std::vector<GroupModel>& factors);
/// Right-angled Artin group: a generator per vertex, [u, v] per edge.
GroupModel raag(const Graph& g);

struct BestvinaBrady {
  GroupModel group;
  EpimorphismToZm nu;
  bool graph_connected = true;
};
/// RAAG with ν sending every generator to 1 in Z.
BestvinaBrady bestvina_brady(const Graph& g);

/// Salvetti complex of Γ twisted by vertex images in Z^m:
/// d(e_σ) = Σ_i (-1)^i (t^{q(v_i)} - 1) e_{σ - v_i}, with a cell per clique.
TwistedComplex raag_complex(const Graph& g, const std::vector<IntVector>& images, std::size_t m);
/// The univariate complex for ν = all ones.
TwistedComplex raag_complex(const Graph& g);

/// ν onto Z^2 for a product of surface groups: in every factor a_1 -> (1,0),
/// b_1 -> (0,1) and the remaining generators -> 0, summed over the factors.
EpimorphismToZm pencil_epimorphism(const GroupModel& product_of_surfaces);

/// ν onto Z sending every generator to 1.
EpimorphismToZm diagonal_epimorphism(const GroupModel& g);

}  // namespace charvar
