#include "charvar/abelian.hpp"

#include "charvar/detail/smith.hpp"
#include "charvar/error.hpp"

namespace charvar {

namespace {

struct IntegerTraits {
  static Integer zero(const Integer&) { return 0; }
  static Integer one(const Integer&) { return 1; }
  static bool is_zero(const Integer& a) { return a == 0; }
  static Integer size(const Integer& a) { return abs(a); }
  static std::pair<Integer, Integer> divmod(const Integer& a, const Integer& b) {
    Integer q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return {q, r};
  }
  static std::pair<Integer, Integer> normalizing_unit(const Integer& a) {
    return a < 0 ? std::pair<Integer, Integer>{-1, -1} : std::pair<Integer, Integer>{1, 1};
  }
};

}  // namespace

IntegerSmith smith_integer(const IntMatrix& a) {
  auto d = detail::smith_decompose<Integer, IntegerTraits>(a, Integer(0));
  return {std::move(d.diagonal), std::move(d.left), std::move(d.left_inverse), std::move(d.right),
          std::move(d.right_inverse), d.rank};
}

IntVector AbelianData::image_of(std::size_t generator) const {
  IntVector v(torsion_free_rank);
  for (std::size_t k = 0; k < torsion_free_rank; ++k) v[k] = projection(k, generator).get_si();
  return v;
}

std::vector<IntVector> AbelianData::generator_images() const {
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < projection.cols(); ++i) out.push_back(image_of(i));
  return out;
}

AbelianData abelianize(const Presentation& p) {
  const std::size_t n = p.generator_count();
  const std::size_t s = p.relator_count();
  // Columns are relator exponent vectors; H_1 = Z^n / column span.
  IntMatrix a(n, s, Integer(0));
  for (std::size_t j = 0; j < s; ++j) {
    auto e = p.relators()[j].exponent_vector(n);
    for (std::size_t i = 0; i < n; ++i) a(i, j) = e[i];
  }
  auto snf = smith_integer(a);

  AbelianData out;
  for (std::size_t t = 0; t < snf.rank; ++t)
    if (snf.diagonal(t, t) > 1) out.torsion_invariants.push_back(snf.diagonal(t, t));
  const std::size_t m = n - snf.rank;
  out.torsion_free_rank = m;
  out.projection = IntMatrix(m, n, Integer(0));
  out.section = IntMatrix(n, m, Integer(0));
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      out.projection(k, i) = snf.left(snf.rank + k, i);
      out.section(i, k) = snf.left_inverse(i, snf.rank + k);
    }
  return out;
}

IntVector EpimorphismToZm::apply(const Word& w) const {
  IntVector v(target_rank, 0);
  for (const auto& s : w.syllables())
    for (std::size_t k = 0; k < target_rank; ++k) v[k] += s.exp * images.at(s.gen)[k];
  return v;
}

Recoordinatization recoordinatize(const std::vector<IntVector>& images, std::size_t target_rank) {
  const std::size_t n = images.size();
  IntMatrix m(target_rank, n, Integer(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (images[i].size() != target_rank)
      throw Error("DimensionMismatch", "image vector has wrong length");
    for (std::size_t k = 0; k < target_rank; ++k) m(k, i) = images[i][k];
  }
  // U M V = D  =>  M = (U^-1 D) V^-1 and rows of V^-1 give the surjection.
  auto snf = smith_integer(m);
  Recoordinatization out;
  out.image_rank = snf.rank;
  out.index = 1;
  out.images.assign(n, IntVector(snf.rank, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < snf.rank; ++k) out.images[i][k] = snf.right_inverse(k, i).get_si();
  out.basis = IntMatrix(target_rank, snf.rank, Integer(0));
  for (std::size_t r = 0; r < target_rank; ++r)
    for (std::size_t k = 0; k < snf.rank; ++k)
      out.basis(r, k) = snf.left_inverse(r, k) * snf.diagonal(k, k);
  for (std::size_t k = 0; k < snf.rank; ++k) out.index *= snf.diagonal(k, k);
  return out;
}

EpimorphismToZm validate_epimorphism(const Presentation& p, const std::vector<IntVector>& images) {
  if (images.size() != p.generator_count())
    throw Error("DimensionMismatch", "need exactly one image vector per generator");
  if (images.empty() || images.front().empty())
    throw Error("DimensionMismatch", "target rank must be at least 1");
  EpimorphismToZm nu{images.front().size(), images};
  for (const auto& v : images)
    if (v.size() != nu.target_rank) throw Error("DimensionMismatch", "image vectors differ in length");

  for (std::size_t j = 0; j < p.relator_count(); ++j) {
    auto v = nu.apply(p.relators()[j]);
    for (long x : v)
      if (x != 0)
        throw Error("RelatorNotKilled", "relator " + std::to_string(j) + " does not map to zero");
  }
  bool all_zero = true;
  for (const auto& v : images)
    for (long x : v) all_zero = all_zero && x == 0;
  if (all_zero) throw Error("ZeroMap", "the homomorphism is trivial");

  auto rc = recoordinatize(images, nu.target_rank);
  if (rc.image_rank != nu.target_rank || rc.index != 1)
    throw Error("NotSurjective", "images generate a proper subgroup of Z^" +
                                     std::to_string(nu.target_rank) + " (rank " +
                                     std::to_string(rc.image_rank) + ", index " +
                                     to_string(rc.index) + "); re-coordinatize first");
  return nu;
}

}  // namespace charvar
