#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "charvar/catalog.hpp"
#include "charvar/jump_loci.hpp"

namespace charvar {

inline constexpr const char* kToolVersion = "charvar 1.0.0";

struct Citation {
  std::string id;
  std::string statement;
};

/// Verdict of the non-finiteness criterion: if V^r_1(G) is the whole
/// character torus, then N = ker(ν) has infinite-dimensional rational
/// homology in some degree <= r, so N is not FP_r, nor commensurable up to
/// finite kernels with any FP_r group. The criterion never shows N *is* FP_r.
struct Certificate {
  std::string group;
  std::vector<std::vector<long>> nu;  // one image per generator
  std::size_t r = 0;
  std::string strategy;
  /// "Certified", "FullnessNotEstablished" or "UnsupportedTorsion".
  std::string outcome;
  std::vector<std::string> conclusions;  // H_leq_r_infinite, not_FP_r, not_commensurable_FP_r
  std::vector<std::string> failed_hypotheses;
  FullnessVerdict evidence;
  std::vector<Citation> citations;
  std::uint64_t seed = 0;
  std::string tool_version = kToolVersion;

  bool certified() const { return !conclusions.empty(); }
};

enum class Strategy { kGenericRank, kKunnethProduct };
Strategy parse_strategy(const std::string& s);
std::string to_string(Strategy s);

/// Throws TrivialNu for the zero map, and the validate_epimorphism errors for
/// maps that are not onto Z^m.
Certificate certify_non_fp(const GroupModel& g, const EpimorphismToZm& nu, std::size_t r,
                           Strategy strategy, std::uint64_t seed = 1);

struct ProbeSample {
  std::string character;
  std::vector<long> betti;  // b_0..b_r at the pulled-back character
  bool vanishes = false;
};

struct ProbeReport {
  std::size_t r = 0;
  std::size_t trials = 0;
  std::size_t vanishing = 0;
  long final_box = 0;
  std::uint64_t seed = 0;
  std::vector<ProbeSample> samples;
};

/// Samples nontrivial ρ in (Q^*)^m and computes b_{<=r}(G; Q_{ν*ρ}). A vanishing
/// profile at a generic point is what finite-dimensional H_{<=r}(N) would force;
/// zero vanishing samples is evidence of dim H_{<=r}(N) = ∞.
ProbeReport generic_vanishing_probe(const GroupModel& g, const EpimorphismToZm& nu, std::size_t r,
                                    std::size_t trials, std::uint64_t seed);

struct KernelCrossCheck {
  KernelHomologyReport report;
  std::size_t top_degree = 0;
  /// Set when a certificate was supplied.
  std::optional<bool> consistent_with_certificate;
};

/// Exact H_*(ker ν; Q) for ν onto Z via the Smith form over Q[t^{±1}].
KernelCrossCheck kernel_report_univariate(const GroupModel& g, const EpimorphismToZm& nu,
                                          std::size_t top_degree,
                                          const Certificate* certificate = nullptr);

}  // namespace charvar
