#include "charvar/certifier.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "charvar/error.hpp"

namespace charvar {

Strategy parse_strategy(const std::string& s) {
  if (s == "generic-rank") return Strategy::kGenericRank;
  if (s == "kunneth-product") return Strategy::kKunnethProduct;
  throw Error("BadArgument", "unknown strategy '" + s + "'");
}

std::string to_string(Strategy s) {
  return s == Strategy::kGenericRank ? "generic-rank" : "kunneth-product";
}

namespace {

std::vector<Citation> citation_chain(const FullnessVerdict& v) {
  std::vector<Citation> c;
  if (v.method == "kunneth-product") {
    c.push_back({"product-fullness",
                 "if V^1_1(G_i) = T_{G_i} for every factor of G = G_1 x ... x G_r, then V^r_1(G) = T_G "
                 "(Kunneth: H_r(G, C_rho) contains the tensor product of the H_1(G_i, C_rho_i))"});
  }
  if (v.method == "euler-curve" ||
      std::any_of(v.factor_verdicts.begin(), v.factor_verdicts.end(),
                  [](const FullnessVerdict& f) { return f.method == "euler-curve"; })) {
    c.push_back({"curve-euler-characteristic",
                 "for a curve group with chi(C) < 0, chi(C, C_rho) = chi(C) forces V^1_1(G) = T_G"});
  }
  if (v.method == "generic-rank" ||
      std::any_of(v.factor_verdicts.begin(), v.factor_verdicts.end(),
                  [](const FullnessVerdict& f) { return f.method == "generic-rank"; })) {
    c.push_back({"generic-rank-semicontinuity",
                 "rank conditions on evaluated differentials are Zariski open; generic Betti numbers "
                 "bound b_j(rho) from below at every character"});
  }
  c.push_back({"generic-vanishing",
               "if dim H_{<=r}(N, C) < infinity then H_{<=r}(G, C_{nu*rho}) = 0 on a nonempty Zariski open set"});
  c.push_back({"fullness-criterion-infinite",
               "V^r_1(G) = T_G and nu nontrivial imply dim H_{<=r}(N, C) = infinity"});
  c.push_back({"fullness-criterion-not-FP",
               "hence N is not of type FP_r and not commensurable up to finite kernels to any FP_r group"});
  c.push_back({"finite-index-FP", "a finite-index subgroup pi of G is FP_n iff G is FP_n (Bieri)"});
  c.push_back({"commensurability-FP",
               "groups commensurable up to finite kernels are simultaneously FP_n"});
  return c;
}

}  // namespace

Certificate certify_non_fp(const GroupModel& g, const EpimorphismToZm& nu, std::size_t r,
                           Strategy strategy, std::uint64_t seed) {
  if (r < 1) throw Error("BadArgument", "degree r must be at least 1");
  EpimorphismToZm checked;
  try {
    checked = validate_epimorphism(g.presentation(), nu.images);
  } catch (const Error& e) {
    if (e.code() == "ZeroMap") throw Error("TrivialNu", "ν is trivial; the criterion needs a nontrivial map");
    throw;
  }

  Certificate cert;
  cert.group = g.name();
  cert.nu = checked.images;
  cert.r = r;
  cert.strategy = to_string(strategy);
  cert.seed = seed;

  if (strategy == Strategy::kKunnethProduct) {
    if (g.kind() != GroupModel::Kind::kProduct)
      throw Error("BadArgument", "kunneth-product needs a direct-product group");
    if (g.factors().size() != r)
      throw Error("BadArgument", "kunneth-product certifies r = number of factors (" +
                                     std::to_string(g.factors().size()) + ")");
    cert.evidence = is_full_vr_product(g.factors(), seed);
  } else {
    cert.evidence = is_full_vr_generic(g, r, seed);
  }

  if (!g.abelianization().torsion_invariants.empty()) {
    cert.outcome = "UnsupportedTorsion";
    cert.failed_hypotheses.push_back("H_1(G; Z) has torsion; only the identity component is checked");
    return cert;
  }
  if (!cert.evidence.is_full()) {
    cert.outcome = "FullnessNotEstablished";
    cert.failed_hypotheses.push_back("V^" + std::to_string(r) + "_1(G) = T_G not established: " +
                                     (cert.evidence.reason.empty() ? to_string(cert.evidence.status)
                                                                   : cert.evidence.reason));
    return cert;
  }
  cert.outcome = "Certified";
  cert.conclusions = {"H_leq_r_infinite", "not_FP_r", "not_commensurable_FP_r"};
  cert.citations = citation_chain(cert.evidence);
  return cert;
}

ProbeReport generic_vanishing_probe(const GroupModel& g, const EpimorphismToZm& nu, std::size_t r,
                                    std::size_t trials, std::uint64_t seed) {
  if (trials < 1) throw Error("BadArgument", "need at least one trial");
  TwistedComplex c = g.complex(nu);
  CharacterSampler sampler(nu.target_rank, seed);
  std::vector<Character> chars;
  for (std::size_t i = 0; i < trials; ++i) chars.push_back(sampler.next());

  ProbeReport rep;
  rep.r = r;
  rep.trials = trials;
  rep.seed = seed;
  rep.final_box = sampler.current_box();
  rep.samples.resize(trials);

  auto run = [&](std::size_t i) {
    auto ranks = differential_ranks(c, chars[i], r);
    ProbeSample s;
    s.character = chars[i].to_string();
    s.vanishes = true;
    for (std::size_t j = 0; j <= r; ++j) {
      long b = j <= c.top_degree() ? static_cast<long>(c.ranks()[j]) - static_cast<long>(ranks[j]) -
                                         static_cast<long>(ranks[j + 1])
                                   : 0;
      s.betti.push_back(b);
      s.vanishes = s.vanishes && b == 0;
    }
    rep.samples[i] = std::move(s);
  };
  // Trials are independent; each worker owns a strided subset of the output slots.
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(trials, std::thread::hardware_concurrency()));
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w)
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < trials; i += workers) run(i);
    }));
  for (auto& j : jobs) j.get();

  for (const auto& s : rep.samples) rep.vanishing += s.vanishes ? 1 : 0;
  return rep;
}

KernelCrossCheck kernel_report_univariate(const GroupModel& g, const EpimorphismToZm& nu,
                                          std::size_t top_degree, const Certificate* certificate) {
  if (nu.target_rank != 1) throw Error("NotUnivariate", "kernel report needs ν onto Z");
  validate_epimorphism(g.presentation(), nu.images);
  KernelCrossCheck out;
  TwistedComplex c = g.complex(nu);
  out.report = kernel_homology_univariate(c);
  out.top_degree = std::min(top_degree, c.top_degree());
  out.report.degrees.resize(out.top_degree + 1);
  if (certificate) {
    bool infinite_somewhere = false;
    for (std::size_t j = 0; j <= std::min(certificate->r, out.top_degree); ++j)
      infinite_somewhere = infinite_somewhere || out.report.degrees[j].infinite_dimensional();
    out.consistent_with_certificate = !certificate->certified() || infinite_somewhere;
  }
  return out;
}

}  // namespace charvar
