#include "charvar/json_io.hpp"

#include "charvar/error.hpp"

namespace charvar {

namespace {

Json strings(const std::vector<LaurentPolynomial>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

Json degree_label(std::size_t j, std::size_t through) {
  return j <= through ? "group-homology" : "presentation-complex homology";
}

Json through_json(std::size_t through) {
  if (through == TwistedComplex::kAllDegrees) return "all";
  return through;
}

}  // namespace

Json to_json(const LaurentPolynomial& p) { return p.to_string(); }

Json to_json(const LaurentMatrix& mx) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < mx.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < mx.cols(); ++j) row.push_back(mx(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return Json{{"rows", mx.rows()}, {"cols", mx.cols()}, {"variable_count", mx.variable_count()},
              {"entries", std::move(rows)}};
}

Json to_json(const Presentation& p) {
  Json rels = Json::array();
  for (const auto& r : p.relators()) rels.push_back(r.to_string(p.generator_names()));
  Json j{{"generators", p.generator_names()}, {"relators", std::move(rels)}, {"text", p.to_text()}};
  j["tags"] = Json{{"aspherical", p.tags().aspherical},
                   {"two_complex_aspherical", p.tags().two_complex_aspherical}};
  j["tags"]["curve_euler_characteristic"] =
      p.tags().curve_euler ? Json(*p.tags().curve_euler) : Json(nullptr);
  return j;
}

Json to_json(const EpimorphismToZm& nu) {
  return Json{{"target_rank", nu.target_rank}, {"images", nu.images}};
}

Json to_json(const AbelianData& a) {
  Json tors = Json::array();
  for (const auto& t : a.torsion_invariants) tors.push_back(t.get_str());
  return Json{{"torsion_free_rank", a.torsion_free_rank},
              {"torsion_invariants", std::move(tors)},
              {"generator_images", a.generator_images()}};
}

Json to_json(const TwistedComplex& c) {
  Json d = Json::array();
  for (std::size_t j = 1; j <= c.top_degree(); ++j) {
    Json m = to_json(c.differential(j));
    m["degree"] = j;
    d.push_back(std::move(m));
  }
  return Json{{"variable_count", c.variable_count()},
              {"ranks", c.ranks()},
              {"euler_characteristic", c.euler_characteristic()},
              {"group_homology_through", through_json(c.group_homology_through())},
              {"differentials", std::move(d)}};
}

TwistedComplex complex_from_json(const Json& j) {
  try {
    const auto m = j.at("variable_count").get<std::size_t>();
    const auto ranks = j.at("ranks").get<std::vector<std::size_t>>();
    std::vector<LaurentMatrix> diffs;
    for (const auto& d : j.at("differentials")) {
      auto cells = d.at("entries").get<std::vector<std::vector<std::string>>>();
      LaurentMatrix mx(d.at("rows").get<std::size_t>(), d.at("cols").get<std::size_t>(), m);
      for (std::size_t r = 0; r < cells.size(); ++r)
        for (std::size_t c = 0; c < cells[r].size(); ++c) mx.set(r, c, parse_laurent(cells[r][c], m));
      diffs.push_back(std::move(mx));
    }
    TwistedComplex out(m, ranks, std::move(diffs));
    out.verify();
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw Error("SyntaxError", std::string("malformed complex JSON: ") + e.what());
  }
}

Json to_json(const BettiProfile& b) {
  Json labels = Json::array();
  for (std::size_t j = 0; j < b.betti.size(); ++j) labels.push_back(degree_label(j, b.group_homology_through));
  return Json{{"character", b.character},
              {"betti", b.betti},
              {"euler_characteristic", b.euler_characteristic()},
              {"labels", std::move(labels)}};
}

Json to_json(const KernelHomologyReport& r) {
  Json degs = Json::array();
  for (std::size_t j = 0; j < r.degrees.size(); ++j) {
    const auto& d = r.degrees[j];
    degs.push_back(Json{{"degree", j},
                        {"free_rank", d.free_rank},
                        {"torsion_factors", strings(d.torsion_factors)},
                        {"torsion_dimension", d.torsion_dimension},
                        {"verdict", d.infinite_dimensional() ? "infinite-dimensional" : "finite-dimensional"},
                        {"label", degree_label(j, r.group_homology_through)}});
  }
  return Json{{"degrees", std::move(degs)}};
}

Json to_json(const V1Ideal& ideal) {
  return Json{{"depth", ideal.depth},
              {"minor_size", ideal.minor_size},
              {"generators", strings(ideal.generators)},
              {"zero_ideal", ideal.is_zero_ideal()},
              {"trivial_character_b1", ideal.trivial_character_b1},
              {"trivial_character_in_locus", ideal.trivial_character_in_locus},
              {"caveats", ideal.caveats}};
}

namespace {
Json points(const std::vector<SpecialPointCheck>& ps) {
  Json a = Json::array();
  for (const auto& p : ps)
    a.push_back(Json{{"character", p.character}, {"betti", p.betti}, {"in_locus", p.in_locus}});
  return a;
}
}  // namespace

Json to_json(const FullnessVerdict& v) {
  Json f = Json::array();
  for (const auto& x : v.factor_verdicts) f.push_back(to_json(x));
  return Json{{"status", to_string(v.status)},
              {"is_full", v.is_full()},
              {"method", v.method},
              {"degree", v.degree},
              {"generic_betti", v.generic_betti},
              {"euler_characteristic", v.euler_characteristic ? Json(*v.euler_characteristic) : Json(nullptr)},
              {"factor_verdicts", std::move(f)},
              {"special_points", points(v.special_points)},
              {"samples", points(v.samples)},
              {"reason", v.reason}};
}

Json to_json(const Certificate& c) {
  Json cites = Json::array();
  for (const auto& x : c.citations) cites.push_back(Json{{"id", x.id}, {"statement", x.statement}});
  Json ev = to_json(c.evidence);
  return Json{{"group", c.group},
              {"nu", Json{{"target_rank", c.nu.empty() ? 0 : c.nu.front().size()}, {"images", c.nu}}},
              {"r", c.r},
              {"strategy", c.strategy},
              {"outcome", c.outcome},
              {"conclusions", c.conclusions},
              {"failed_hypotheses", c.failed_hypotheses},
              {"evidence", std::move(ev)},
              {"citations", std::move(cites)},
              {"seed", c.seed},
              {"tool_version", c.tool_version}};
}

Json to_json(const ProbeReport& p) {
  Json s = Json::array();
  for (const auto& x : p.samples)
    s.push_back(Json{{"character", x.character}, {"betti", x.betti}, {"vanishes", x.vanishes}});
  return Json{{"r", p.r},           {"trials", p.trials},   {"vanishing", p.vanishing},
              {"final_box", p.final_box}, {"seed", p.seed}, {"samples", std::move(s)}};
}

Json to_json(const KernelCrossCheck& k) {
  Json j = to_json(k.report);
  j["top_degree"] = k.top_degree;
  j["consistent_with_certificate"] =
      k.consistent_with_certificate ? Json(*k.consistent_with_certificate) : Json(nullptr);
  return j;
}

Json to_json(const PencilData& p) {
  Json audits = Json::array();
  for (const auto& a : p.audits)
    audits.push_back(Json{{"genus", a.genus},
                          {"euler_cover", a.euler_cover},
                          {"degree_times_euler_base", a.degree_times_euler},
                          {"ramification_sum", a.ramification_sum},
                          {"holds", a.holds}});
  return Json{{"r", p.r},
              {"genera", p.genera},
              {"branch_sizes", p.branch_sizes},
              {"ramification_sizes", p.ramification_sizes},
              {"critical_points", p.critical_points},
              {"euler_X", p.euler_x},
              {"fiber_dimension", p.fiber_dimension},
              {"finiteness_verdict", p.finiteness_verdict.empty() ? Json(nullptr) : Json(p.finiteness_verdict)},
              {"flags", p.flags},
              {"riemann_hurwitz", std::move(audits)},
              {"higher_homotopy_module", p.higher_homotopy_module},
              {"universal_cover_homotopy_type", p.universal_cover_homotopy_type},
              {"cd_fiber_lower_bound", p.cd_fiber_lower_bound ? Json(*p.cd_fiber_lower_bound) : Json(nullptr)},
              {"cd_total_lower_bound", p.cd_total_lower_bound}};
}

Json to_json(const FiniteCoverReport& r) {
  return Json{{"cover_generators", r.cover_generators},
              {"cover_relators", r.cover_relators},
              {"cover_b1", r.cover_b1},
              {"b1_trivial", r.b1_trivial},
              {"b1_sign", r.b1_sign},
              {"passed", r.passed}};
}

Json to_json(const Graph& g) {
  Json e = Json::array();
  for (const auto& [u, v] : g.edges()) e.push_back(Json::array({u, v}));
  return Json{{"vertices", g.vertex_count()}, {"edges", std::move(e)}, {"connected", g.connected()}};
}

Json to_json(const SimplicialComplex& k) {
  std::vector<std::size_t> counts(static_cast<std::size_t>(k.dimension() + 1), 0);
  for (const auto& s : k.simplices()) ++counts[s.size() - 1];
  return Json{{"dimension", k.dimension()},
              {"facets", k.facets()},
              {"simplex_counts", counts},
              {"reduced_betti", reduced_homology(k)}};
}

Json window_to_json(const std::vector<std::vector<long>>& dims, std::size_t variable_count) {
  Json table = Json::array();
  for (std::size_t k = 0; k < dims.size(); ++k) table.push_back(Json{{"radius", k + 1}, {"dims", dims[k]}});
  Json growth = Json::array();
  const std::size_t degrees = dims.empty() ? 0 : dims.front().size();
  for (std::size_t j = 0; j < degrees; ++j) {
    Json diffs = Json::array();
    for (std::size_t k = 1; k < dims.size(); ++k) diffs.push_back(dims[k][j] - dims[k - 1][j]);
    Json g{{"degree", j}, {"differences", diffs}};
    if (variable_count == 1 && !diffs.empty()) {
      const long last = diffs.back().get<long>();
      g["slope"] = last % 2 == 0 ? Json(last / 2) : Json(std::to_string(last) + "/2");
    } else {
      g["slope"] = nullptr;
    }
    bool stable = diffs.size() >= 2 && diffs.back().get<long>() == 0 && diffs[diffs.size() - 2].get<long>() == 0;
    g["stabilized"] = stable;
    growth.push_back(std::move(g));
  }
  return Json{{"variable_count", variable_count}, {"table", std::move(table)}, {"growth", std::move(growth)}};
}

}  // namespace charvar
