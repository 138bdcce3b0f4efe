#include "charvar/twisted_complex.hpp"

#include "charvar/error.hpp"
#include "charvar/fox.hpp"

namespace charvar {

TwistedComplex::TwistedComplex(std::size_t variable_count, std::vector<std::size_t> ranks,
                               std::vector<LaurentMatrix> differentials)
    : m_(variable_count), ranks_(std::move(ranks)), diffs_(std::move(differentials)) {
  if (ranks_.empty()) throw Error("BadComplex", "complex needs at least degree 0");
  if (diffs_.size() + 1 != ranks_.size())
    throw Error("BadComplex", "need one differential per positive degree");
  for (std::size_t j = 1; j < ranks_.size(); ++j) {
    const auto& d = diffs_[j - 1];
    if (d.rows() != ranks_[j - 1] || d.cols() != ranks_[j])
      throw Error("BadComplex", "differential d_" + std::to_string(j) + " has the wrong shape");
    if (d.variable_count() != m_)
      throw Error("VariableCountMismatch", "differential over a different Laurent ring");
  }
}

void TwistedComplex::verify() const {
  for (std::size_t j = 1; j + 1 < ranks_.size(); ++j)
    if (!(diffs_[j - 1] * diffs_[j]).is_zero())
      throw Error("NotAComplex", "d_" + std::to_string(j) + " d_" + std::to_string(j + 1) + " != 0");
}

long TwistedComplex::euler_characteristic() const {
  long chi = 0;
  for (std::size_t j = 0; j < ranks_.size(); ++j)
    chi += (j % 2 ? -1 : 1) * static_cast<long>(ranks_[j]);
  return chi;
}

TwistedComplex TwistedComplex::pushforward(const std::vector<std::vector<long>>& map,
                                           std::size_t target_vars) const {
  std::vector<LaurentMatrix> d;
  for (const auto& x : diffs_) d.push_back(x.pushforward(map, target_vars));
  TwistedComplex out(target_vars, ranks_, std::move(d));
  out.group_through_ = group_through_;
  return out;
}

TwistedComplex presentation_complex(const Presentation& p, const std::vector<IntVector>& images,
                                    std::size_t m) {
  LaurentMatrix alex = alexander_matrix(p, images, m);
  const std::size_t n = p.generator_count();
  LaurentMatrix d1(1, n, m);
  for (std::size_t i = 0; i < n; ++i) {
    Exponent e(images[i].begin(), images[i].end());
    d1.set(0, i, LaurentPolynomial::monomial(m, e) - LaurentPolynomial::constant(m, 1));
  }
  TwistedComplex c(m, {1, n, p.relator_count()}, {std::move(d1), alex.transposed()});
  c.set_group_homology_through(p.tags().two_complex_aspherical ? TwistedComplex::kAllDegrees : 1);
  c.verify();
  return c;
}

TwistedComplex presentation_complex(const Presentation& p, const EpimorphismToZm& nu) {
  return presentation_complex(p, nu.images, nu.target_rank);
}

TwistedComplex point_complex(std::size_t m) {
  TwistedComplex c(m, {1}, {});
  c.set_group_homology_through(TwistedComplex::kAllDegrees);
  return c;
}

TwistedComplex tensor_complex(const TwistedComplex& a, const TwistedComplex& b) {
  const std::size_t ma = a.variable_count(), mb = b.variable_count(), m = ma + mb;
  // Embeddings of the factor rings into the joint ring.
  std::vector<std::vector<long>> embed_a(m, std::vector<long>(ma, 0));
  std::vector<std::vector<long>> embed_b(m, std::vector<long>(mb, 0));
  for (std::size_t k = 0; k < ma; ++k) embed_a[k][k] = 1;
  for (std::size_t k = 0; k < mb; ++k) embed_b[ma + k][k] = 1;
  TwistedComplex ea = a.pushforward(embed_a, m);
  TwistedComplex eb = b.pushforward(embed_b, m);

  const std::size_t ta = a.top_degree(), tb = b.top_degree(), top = ta + tb;
  const auto& ra = a.ranks();
  const auto& rb = b.ranks();
  // offset[k][p] = position of block (p, k-p) inside degree k.
  std::vector<std::vector<std::size_t>> offset(top + 1, std::vector<std::size_t>(ta + 1, 0));
  std::vector<std::size_t> ranks(top + 1, 0);
  for (std::size_t k = 0; k <= top; ++k)
    for (std::size_t p = 0; p <= ta; ++p) {
      offset[k][p] = ranks[k];
      if (k >= p && k - p <= tb) ranks[k] += ra[p] * rb[k - p];
    }

  const LaurentPolynomial one = LaurentPolynomial::constant(m, 1);
  std::vector<LaurentMatrix> diffs;
  for (std::size_t k = 1; k <= top; ++k) {
    LaurentMatrix d(ranks[k - 1], ranks[k], m);
    for (std::size_t p = 0; p <= ta; ++p) {
      if (k < p || k - p > tb) continue;
      const std::size_t q = k - p;
      for (std::size_t x = 0; x < ra[p]; ++x)
        for (std::size_t y = 0; y < rb[q]; ++y) {
          const std::size_t col = offset[k][p] + x * rb[q] + y;
          if (p >= 1) {
            const auto& da = ea.differential(p);
            for (std::size_t x2 = 0; x2 < ra[p - 1]; ++x2) {
              if (da(x2, x).is_zero()) continue;
              d.at(offset[k - 1][p - 1] + x2 * rb[q] + y, col) += da(x2, x);
            }
          }
          if (q >= 1) {
            const auto& db = eb.differential(q);
            for (std::size_t y2 = 0; y2 < rb[q - 1]; ++y2) {
              if (db(y2, y).is_zero()) continue;
              auto& cell = d.at(offset[k - 1][p] + x * rb[q - 1] + y2, col);
              if (p % 2) cell -= db(y2, y);
              else cell += db(y2, y);
            }
          }
        }
    }
    diffs.push_back(std::move(d));
  }
  TwistedComplex out(m, std::move(ranks), std::move(diffs));
  out.set_group_homology_through(std::min(a.group_homology_through(), b.group_homology_through()));
  out.verify();
  return out;
}

long BettiProfile::euler_characteristic() const {
  long chi = 0;
  for (std::size_t j = 0; j < betti.size(); ++j) chi += (j % 2 ? -1 : 1) * betti[j];
  return chi;
}

std::vector<std::size_t> differential_ranks(const TwistedComplex& c, const Character& rho,
                                            std::size_t up_to_degree) {
  const std::size_t top = c.top_degree();
  std::vector<std::size_t> ranks(top + 2, 0);
  for (std::size_t j = 1; j <= top; ++j) {
    if (up_to_degree != TwistedComplex::kAllDegrees && j > up_to_degree + 1) break;
    ranks[j] = rank_at(c.differential(j), rho);
  }
  return ranks;
}

BettiProfile twisted_betti(const TwistedComplex& c, const Character& rho) {
  if (!rho.is_generic() && rho.coords().size() != c.variable_count())
    throw Error("VariableCountMismatch", "character has " + std::to_string(rho.coords().size()) +
                                             " coordinates, complex has " +
                                             std::to_string(c.variable_count()) + " variables");
  auto rk = differential_ranks(c, rho);
  BettiProfile out;
  out.character = rho.to_string();
  out.group_homology_through = c.group_homology_through();
  for (std::size_t j = 0; j <= c.top_degree(); ++j)
    out.betti.push_back(static_cast<long>(c.ranks()[j]) - static_cast<long>(rk[j]) -
                        static_cast<long>(rk[j + 1]));
  return out;
}

KernelHomologyReport kernel_homology_univariate(const TwistedComplex& c) {
  if (c.variable_count() != 1)
    throw Error("NotUnivariate", "kernel homology needs a complex over Q[t^{±1}]");
  const std::size_t top = c.top_degree();
  std::vector<SmithFormUnivariate> smith(top + 2);
  std::vector<std::size_t> rank(top + 2, 0);
  for (std::size_t j = 1; j <= top; ++j) {
    smith[j] = smith_univariate(c.differential(j));
    rank[j] = smith[j].invariant_factors.size();
  }
  KernelHomologyReport out;
  out.group_homology_through = c.group_homology_through();
  for (std::size_t j = 0; j <= top; ++j) {
    KernelDegree deg;
    deg.free_rank = c.ranks()[j] - rank[j] - rank[j + 1];
    // Torsion of H_j equals torsion of coker d_{j+1}, since im d_j is free.
    if (j + 1 <= top)
      for (const auto& f : smith[j + 1].invariant_factors)
        if (degree_span(f) > 0) {
          deg.torsion_dimension += degree_span(f);
          deg.torsion_factors.push_back(f);
        }
    out.degrees.push_back(std::move(deg));
  }
  return out;
}

namespace {

struct Window {
  std::size_t m;
  long radius;
  std::size_t side() const { return static_cast<std::size_t>(2 * radius + 1); }
  std::size_t translates() const { return m == 1 ? side() : side() * side(); }
  bool contains(const Exponent& g) const {
    for (long x : g)
      if (x < -radius || x > radius) return false;
    return true;
  }
  std::size_t index(const Exponent& g) const {
    std::size_t idx = 0;
    for (long x : g) idx = idx * side() + static_cast<std::size_t>(x + radius);
    return idx;
  }
  Exponent translate(std::size_t idx) const {
    Exponent g(m);
    for (std::size_t k = m; k-- > 0;) {
      g[k] = static_cast<long>(idx % side()) - radius;
      idx /= side();
    }
    return g;
  }
};

}  // namespace

std::vector<std::vector<long>> window_homology(const TwistedComplex& c, std::size_t radius,
                                               std::size_t ceiling) {
  const std::size_t m = c.variable_count();
  if (m != 1 && m != 2) throw Error("UnsupportedRank", "window homology supports m = 1 or 2");
  if (radius < 1) throw Error("BadArgument", "window radius must be at least 1");
  const std::size_t top = c.top_degree();
  std::vector<std::vector<long>> out;
  for (std::size_t k = 1; k <= radius; ++k) {
    Window w{m, static_cast<long>(k)};
    const std::size_t tr = w.translates();
    // kept[j][cell * tr + translate] -> index in the window's basis of degree j, or npos.
    constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
    std::vector<std::vector<std::size_t>> kept(top + 1);
    std::vector<std::size_t> count(top + 1, 0);
    for (std::size_t j = 0; j <= top; ++j) {
      kept[j].assign(c.ranks()[j] * tr, npos);
      for (std::size_t cell = 0; cell < c.ranks()[j]; ++cell)
        for (std::size_t g = 0; g < tr; ++g) {
          bool ok = true;
          if (j >= 1) {
            const Exponent base = w.translate(g);
            const auto& d = c.differential(j);
            for (std::size_t i = 0; i < d.rows() && ok; ++i)
              for (const auto& [e, coef] : d(i, cell).terms()) {
                Exponent h = base;
                for (std::size_t q = 0; q < m; ++q) h[q] += e[q];
                if (!w.contains(h) || kept[j - 1][i * tr + w.index(h)] == npos) {
                  ok = false;
                  break;
                }
              }
          }
          if (ok) kept[j][cell * tr + g] = count[j]++;
        }
    }
    std::vector<std::size_t> rk(top + 2, 0);
    for (std::size_t j = 1; j <= top; ++j) {
      if (count[j] * count[j - 1] > ceiling)
        throw Error("WindowTooLarge", "window of radius " + std::to_string(k) + " needs " +
                                          std::to_string(count[j] * count[j - 1]) +
                                          " matrix entries, ceiling is " + std::to_string(ceiling));
      DenseMatrix<Rational> bd(count[j - 1], count[j], Rational(0));
      const auto& d = c.differential(j);
      for (std::size_t cell = 0; cell < c.ranks()[j]; ++cell)
        for (std::size_t g = 0; g < tr; ++g) {
          const std::size_t col = kept[j][cell * tr + g];
          if (col == npos) continue;
          const Exponent base = w.translate(g);
          for (std::size_t i = 0; i < d.rows(); ++i)
            for (const auto& [e, coef] : d(i, cell).terms()) {
              Exponent h = base;
              for (std::size_t q = 0; q < m; ++q) h[q] += e[q];
              bd(kept[j - 1][i * tr + w.index(h)], col) += coef;
            }
        }
      rk[j] = rank_rational(std::move(bd));
    }
    std::vector<long> dims;
    for (std::size_t j = 0; j <= top; ++j)
      dims.push_back(static_cast<long>(count[j]) - static_cast<long>(rk[j]) - static_cast<long>(rk[j + 1]));
    out.push_back(std::move(dims));
  }
  return out;
}

Presentation index_two_subgroup(const Presentation& p, const EpimorphismToZm& nu) {
  if (nu.target_rank != 1) throw Error("NotUnivariate", "index-2 oracle needs ν onto Z");
  const std::size_t n = p.generator_count();
  auto parity = [&](std::size_t gen) { return static_cast<int>(((nu.images[gen][0] % 2) + 2) % 2); };
  std::size_t odd = n;
  for (std::size_t i = 0; i < n && odd == n; ++i)
    if (parity(i)) odd = i;
  if (odd == n) throw Error("NotSurjective", "ν has no generator of odd image");

  // Schreier transversal {1, x_odd}; generator s(c, y) = rep(c) y rep(c + ν(y))^-1.
  // s(0, x_odd) is trivial and omitted.
  auto schreier_index = [&](int coset, std::size_t y) -> long {
    if (coset == 0 && y == odd) return -1;
    std::size_t raw = static_cast<std::size_t>(coset) * n + y;
    return static_cast<long>(raw > odd ? raw - 1 : raw);
  };
  std::vector<std::string> names;
  for (int c = 0; c < 2; ++c)
    for (std::size_t y = 0; y < n; ++y)
      if (schreier_index(c, y) >= 0) names.push_back(p.generator_names()[y] + "_" + std::to_string(c));

  auto rewrite = [&](const Word& w, int start) {
    std::vector<Syllable> out;
    int coset = start;
    for (const auto& s : w.syllables()) {
      const long steps = s.exp > 0 ? s.exp : -s.exp;
      for (long i = 0; i < steps; ++i) {
        if (s.exp > 0) {
          long idx = schreier_index(coset, s.gen);
          if (idx >= 0) out.push_back({static_cast<std::size_t>(idx), 1});
          coset = (coset + parity(s.gen)) % 2;
        } else {
          coset = (coset + parity(s.gen)) % 2;  // ±1 agree mod 2
          long idx = schreier_index(coset, s.gen);
          if (idx >= 0) out.push_back({static_cast<std::size_t>(idx), -1});
        }
      }
    }
    if (coset != start) throw Error("InternalError", "relator does not close up in the cover");
    return Word(std::move(out));
  };
  std::vector<Word> rels;
  for (const auto& r : p.relators())
    for (int c = 0; c < 2; ++c) rels.push_back(rewrite(r, c));
  return Presentation(std::move(names), std::move(rels));
}

FiniteCoverReport finite_cover_oracle(const Presentation& p, const EpimorphismToZm& nu) {
  Presentation cover = index_two_subgroup(p, nu);
  FiniteCoverReport rep;
  rep.cover_generators = cover.generator_count();
  rep.cover_relators = cover.relator_count();
  rep.cover_b1 = static_cast<long>(abelianize(cover).torsion_free_rank);
  TwistedComplex c = presentation_complex(p, nu);
  rep.b1_trivial = twisted_betti(c, Character::at({Rational(1)})).betti[1];
  rep.b1_sign = twisted_betti(c, Character::at({Rational(-1)})).betti[1];
  rep.passed = rep.cover_b1 == rep.b1_trivial + rep.b1_sign;
  return rep;
}

}  // namespace charvar
