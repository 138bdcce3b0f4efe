#pragma once

#include <cstddef>
#include <vector>

#include "charvar/dense_matrix.hpp"
#include "charvar/presentation.hpp"
#include "charvar/rational.hpp"

namespace charvar {

using IntVector = std::vector<long>;
using IntMatrix = DenseMatrix<Integer>;

/// Integer Smith form  U * A * V = D  with unimodular U, V (inverses included).
struct IntegerSmith {
  IntMatrix diagonal, left, left_inverse, right, right_inverse;
  std::size_t rank = 0;
};
IntegerSmith smith_integer(const IntMatrix& a);

/// H_1(G; Z) = Z^m + torsion, with an integral projection from generator
/// exponent vectors onto the free part.
struct AbelianData {
  std::size_t torsion_free_rank = 0;
  std::vector<Integer> torsion_invariants;  // each >= 2, divisibility chain
  IntMatrix projection;                     // m x n
  IntMatrix section;                        // n x m, projection * section = I_m

  /// Image of generator i in Z^m (column i of the projection).
  IntVector image_of(std::size_t generator) const;
  std::vector<IntVector> generator_images() const;
};

AbelianData abelianize(const Presentation& p);

/// Epimorphism G -> Z^m given by one image vector per generator.
struct EpimorphismToZm {
  std::size_t target_rank = 0;
  std::vector<IntVector> images;

  IntVector apply(const Word& w) const;
};

/// Checks relators map to zero and that the images generate all of Z^m.
/// Throws RelatorNotKilled, ZeroMap, NotSurjective or DimensionMismatch.
EpimorphismToZm validate_epimorphism(const Presentation& p, const std::vector<IntVector>& images);

/// For a homomorphism whose image is a rank-k sublattice of Z^m: the
/// surjection onto Z^k together with the basis matrix B (m x k) such that the
/// original map equals B composed with the surjection.
struct Recoordinatization {
  std::size_t image_rank = 0;
  std::vector<IntVector> images;  // onto Z^k
  IntMatrix basis;                // m x k
  Integer index;                  // index of the image in its saturation, 1 if saturated
};
Recoordinatization recoordinatize(const std::vector<IntVector>& images, std::size_t target_rank);

}  // namespace charvar
