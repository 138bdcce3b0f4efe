#include "charvar/catalog.hpp"

#include <algorithm>

#include "charvar/error.hpp"

namespace charvar {

GroupModel GroupModel::from_presentation(std::string name, Presentation p) {
  GroupModel g;
  g.name_ = std::move(name);
  g.presentation_ = std::move(p);
  g.abelian_ = abelianize(g.presentation_);
  return g;
}

std::vector<std::pair<std::size_t, std::size_t>> GroupModel::factor_ranges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::size_t start = 0;
  for (const auto& f : factors_) {
    out.push_back({start, start + f.presentation().generator_count()});
    start += f.presentation().generator_count();
  }
  return out;
}

TwistedComplex GroupModel::complex(const std::vector<IntVector>& images, std::size_t m) const {
  switch (kind_) {
    case Kind::kPresentation:
      return presentation_complex(presentation_, images, m);
    case Kind::kRaag:
      return raag_complex(graph_, images, m);
    case Kind::kProduct: {
      if (images.size() != presentation_.generator_count())
        throw Error("QuotientInvalid", "quotient needs one image per generator");
      // Tensor the factor models in separate variables, then identify them.
      TwistedComplex acc = point_complex(0);
      auto ranges = factor_ranges();
      for (std::size_t f = 0; f < factors_.size(); ++f) {
        std::vector<IntVector> sub(images.begin() + static_cast<long>(ranges[f].first),
                                   images.begin() + static_cast<long>(ranges[f].second));
        acc = tensor_complex(acc, factors_[f].complex(sub, m));
      }
      std::vector<std::vector<long>> identify(m, std::vector<long>(m * factors_.size(), 0));
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t f = 0; f < factors_.size(); ++f) identify[k][f * m + k] = 1;
      TwistedComplex out = acc.pushforward(identify, m);
      out.verify();
      return out;
    }
  }
  throw Error("InternalError", "unknown group model kind");
}

TwistedComplex GroupModel::full_complex() const {
  return complex(abelian_.generator_images(), abelian_.torsion_free_rank);
}

GroupModel surface_group(long genus) {
  if (genus < 1) throw Error("BadArgument", "surface group genus must be at least 1");
  std::vector<std::string> names;
  Word rel;
  for (long i = 1; i <= genus; ++i) {
    names.push_back("a" + std::to_string(i));
    names.push_back("b" + std::to_string(i));
    const auto a = static_cast<std::size_t>(2 * (i - 1));
    rel = rel * commutator(Word::generator(a), Word::generator(a + 1));
  }
  GroupTags tags{true, true, 2 - 2 * genus};
  std::string name = genus == 1 ? "torus" : "surface-genus-" + std::to_string(genus);
  return GroupModel::from_presentation(name, Presentation(std::move(names), {rel}, tags));
}

GroupModel punctured_surface_group(long genus, long punctures) {
  if (genus < 0) throw Error("BadArgument", "genus must be nonnegative");
  if (punctures < 1) throw Error("BadArgument", "punctured surface needs at least one puncture");
  const long rank = 2 * genus + punctures - 1;
  std::vector<std::string> names;
  for (long i = 1; i <= rank; ++i) names.push_back("x" + std::to_string(i));
  GroupTags tags{true, true, 2 - 2 * genus - punctures};
  return GroupModel::from_presentation(
      "punctured-surface-" + std::to_string(genus) + "-" + std::to_string(punctures),
      Presentation(std::move(names), {}, tags));
}

GroupModel free_group(std::size_t rank) {
  if (rank < 1) throw Error("BadArgument", "free group rank must be at least 1");
  std::vector<std::string> names;
  if (rank <= 2) {
    names = rank == 1 ? std::vector<std::string>{"a"} : std::vector<std::string>{"a", "b"};
  } else {
    for (std::size_t i = 1; i <= rank; ++i) names.push_back("x" + std::to_string(i));
  }
  GroupTags tags{true, true, std::nullopt};
  return GroupModel::from_presentation("free-" + std::to_string(rank),
                                       Presentation(std::move(names), {}, tags));
}

GroupModel direct_product(const std::vector<GroupModel>& factors) {
  if (factors.size() < 2) throw Error("BadArgument", "a direct product needs at least two factors");
  std::vector<std::string> names;
  std::vector<Word> rels;
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  bool aspherical = true;
  std::string name;
  for (std::size_t f = 0; f < factors.size(); ++f) {
    const auto& p = factors[f].presentation();
    const std::size_t offset = names.size();
    for (const auto& n : p.generator_names()) names.push_back(n + "_" + std::to_string(f + 1));
    for (const auto& r : p.relators()) {
      std::vector<Syllable> s = r.syllables();
      for (auto& x : s) x.gen += offset;
      rels.push_back(Word(std::move(s)));
    }
    ranges.push_back({offset, names.size()});
    aspherical = aspherical && p.tags().aspherical;
    name += (f ? " x " : "") + factors[f].name();
  }
  for (std::size_t f = 0; f < ranges.size(); ++f)
    for (std::size_t h = f + 1; h < ranges.size(); ++h)
      for (std::size_t x = ranges[f].first; x < ranges[f].second; ++x)
        for (std::size_t y = ranges[h].first; y < ranges[h].second; ++y)
          rels.push_back(commutator(Word::generator(x), Word::generator(y)));

  GroupModel g;
  g.name_ = name;
  g.kind_ = GroupModel::Kind::kProduct;
  g.presentation_ = Presentation(std::move(names), std::move(rels), GroupTags{aspherical, false, std::nullopt});
  g.factors_ = factors;
  g.abelian_ = abelianize(g.presentation_);
  return g;
}

GroupModel raag(const Graph& gr) {
  if (gr.vertex_count() == 0) throw Error("BadGraph", "graph needs at least one vertex");
  std::vector<std::string> names;
  for (std::size_t v = 0; v < gr.vertex_count(); ++v) names.push_back("v" + std::to_string(v));
  std::vector<Word> rels;
  for (auto [u, v] : gr.edges()) rels.push_back(commutator(Word::generator(u), Word::generator(v)));
  GroupModel g;
  g.name_ = "raag";
  g.kind_ = GroupModel::Kind::kRaag;
  g.presentation_ = Presentation(std::move(names), std::move(rels), GroupTags{true, false, std::nullopt});
  g.graph_ = gr;
  g.abelian_ = abelianize(g.presentation_);
  return g;
}

BestvinaBrady bestvina_brady(const Graph& g) {
  BestvinaBrady bb{raag(g), {}, g.connected()};
  bb.group = raag(g);
  bb.nu = diagonal_epimorphism(bb.group);
  return bb;
}

TwistedComplex raag_complex(const Graph& g, const std::vector<IntVector>& images, std::size_t m) {
  if (images.size() != g.vertex_count()) throw Error("QuotientInvalid", "need one image per vertex");
  auto cliques = g.cliques();
  std::vector<std::vector<std::vector<std::size_t>>> by_size;
  for (auto& c : cliques) {
    if (by_size.size() <= c.size()) by_size.resize(c.size() + 1);
    by_size[c.size()].push_back(c);
  }
  std::vector<std::size_t> ranks;
  for (const auto& layer : by_size) ranks.push_back(layer.size());
  std::vector<LaurentMatrix> diffs;
  const auto one = LaurentPolynomial::constant(m, 1);
  for (std::size_t k = 1; k < by_size.size(); ++k) {
    LaurentMatrix d(ranks[k - 1], ranks[k], m);
    for (std::size_t c = 0; c < by_size[k].size(); ++c) {
      const auto& s = by_size[k][c];
      for (std::size_t i = 0; i < s.size(); ++i) {
        auto face = s;
        face.erase(face.begin() + static_cast<long>(i));
        const auto row = static_cast<std::size_t>(
            std::find(by_size[k - 1].begin(), by_size[k - 1].end(), face) - by_size[k - 1].begin());
        const auto& img = images[s[i]];
        if (img.size() != m) throw Error("QuotientInvalid", "vertex image has wrong length");
        LaurentPolynomial entry = LaurentPolynomial::monomial(m, Exponent(img.begin(), img.end())) - one;
        if (i % 2) entry = -entry;
        d.set(row, c, std::move(entry));
      }
    }
    diffs.push_back(std::move(d));
  }
  TwistedComplex out(m, std::move(ranks), std::move(diffs));
  out.set_group_homology_through(TwistedComplex::kAllDegrees);
  out.verify();
  return out;
}

TwistedComplex raag_complex(const Graph& g) {
  return raag_complex(g, std::vector<IntVector>(g.vertex_count(), IntVector{1}), 1);
}

EpimorphismToZm pencil_epimorphism(const GroupModel& product) {
  std::vector<const GroupModel*> factors;
  if (product.kind() == GroupModel::Kind::kProduct) {
    for (const auto& f : product.factors()) factors.push_back(&f);
  } else {
    factors.push_back(&product);
  }
  std::vector<IntVector> images;
  for (const auto* f : factors) {
    const auto& tags = f->presentation().tags();
    if (!tags.curve_euler || f->presentation().relator_count() != 1 ||
        f->presentation().generator_count() < 2)
      throw Error("BadArgument", "pencil map needs a product of closed surface groups");
    for (std::size_t i = 0; i < f->presentation().generator_count(); ++i)
      images.push_back(i == 0 ? IntVector{1, 0} : i == 1 ? IntVector{0, 1} : IntVector{0, 0});
  }
  return validate_epimorphism(product.presentation(), images);
}

EpimorphismToZm diagonal_epimorphism(const GroupModel& g) {
  return validate_epimorphism(g.presentation(),
                              std::vector<IntVector>(g.presentation().generator_count(), IntVector{1}));
}

}  // namespace charvar
