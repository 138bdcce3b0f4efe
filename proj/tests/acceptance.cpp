// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "charvar/cli.hpp"
#include "charvar/json_io.hpp"
#include "oracles.hpp"

using namespace charvar;

namespace {

struct Result {
  bool ok = true;
  std::string detail;
};

void require(Result& r, bool cond, const std::string& what) {
  if (!cond && r.ok) {
    r.ok = false;
    r.detail = what;
  }
}

Word from_letters(const oracle::Letters& l) {
  std::vector<Syllable> s;
  for (int x : l) s.push_back({static_cast<std::size_t>(std::abs(x) - 1), x > 0 ? 1 : -1});
  return Word(s);
}

std::vector<Character> sample(std::size_t m, std::size_t count, std::uint64_t seed) {
  CharacterSampler s(m, seed);
  std::vector<Character> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(s.next());
  return out;
}

Result fox_soundness() {
  Result r;
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> rank(1, 4);
  int passed = 0;
  for (int i = 0; i < 1000; ++i) {
    Word w = from_letters(oracle::random_letters(rng, rank(rng), 20));
    if (fundamental_identity_check(w)) ++passed;
  }
  require(r, passed == 1000, std::to_string(1000 - passed) + " words violate the identity");
  if (r.ok) r.detail = "1000/1000 words";
  return r;
}

Result euler_invariance() {
  Result r;
  for (long g : {2L, 3L}) {
    TwistedComplex c = surface_group(g).full_complex();
    for (const auto& rho : sample(static_cast<std::size_t>(2 * g), 50, static_cast<std::uint64_t>(100 + g))) {
      BettiProfile b = twisted_betti(c, rho);
      require(r, b.euler_characteristic() == 2 - 2 * g, "chi mismatch at " + rho.to_string());
      require(r, b.betti[1] == 2 * g - 2, "b1 mismatch at " + rho.to_string());
    }
  }
  if (r.ok) r.detail = "g=2,3 x 50 characters";
  return r;
}

Result torus_locus() {
  Result r;
  GroupModel t = surface_group(1);
  V1Ideal ideal = v1_ideal(t, 1);
  std::set<std::string> got, want{parse_laurent("t2 - 1", 2).unit_normalized().to_string(),
                                  parse_laurent("t1 - 1", 2).unit_normalized().to_string()};
  for (const auto& p : ideal.generators) got.insert(p.unit_normalized().to_string());
  require(r, got == want, "ideal generators differ");
  TwistedComplex c = t.full_complex();
  for (const auto& rho : sample(2, 100, 3)) require(r, twisted_betti(c, rho).betti[1] == 0, "b1 != 0 at " + rho.to_string());
  require(r, twisted_betti(c, Character::trivial(2)).betti[1] == 2, "trivial b1 != 2");
  if (r.ok) r.detail = "ideal (t1-1, t2-1); 100 samples b1=0; trivial b1=2";
  return r;
}

Result fullness() {
  Result r;
  GroupModel g2 = surface_group(2), f2 = free_group(2), t = surface_group(1);
  require(r, is_full_vr_product({g2, g2, g2}).is_full(), "(genus-2)^3 not full");
  require(r, is_full_vr_product({f2, f2, f2}).is_full(), "F2^3 not full");
  require(r, is_full_vr_product({g2, t}).status == FullnessVerdict::Status::kNotConcluded,
          "genus-2 x torus not 'not-concluded'");
  if (r.ok) r.detail = "full, full, not-concluded";
  return r;
}

Result certificate_pipeline() {
  Result r;
  std::ostringstream out, err;
  const int code = cli::run({"certify", "--preset", "product-surface", "--genus", "2,2,2", "--nu", "pencil", "--r", "3",
                             "--json"},
                            out, err);
  require(r, code == 0, "certify exit code " + std::to_string(code));
  Json j = Json::parse(out.str());
  const auto conclusions = j["result"]["conclusions"].get<std::vector<std::string>>();
  require(r, conclusions == std::vector<std::string>{"H_leq_r_infinite", "not_FP_r", "not_commensurable_FP_r"},
          "conclusions " + j["result"]["conclusions"].dump());
  GroupModel g2 = surface_group(2);
  GroupModel g = direct_product({g2, g2, g2});
  ProbeReport p = generic_vanishing_probe(g, pencil_epimorphism(g), 3, 100, 1);
  require(r, p.trials == 100 && p.vanishing == 0, std::to_string(p.vanishing) + " vanishing samples");
  if (r.ok) r.detail = "3 conclusions; 0/100 vanishing";
  return r;
}

Result shapiro() {
  Result r;
  GroupModel ff = direct_product({free_group(2), free_group(2)});
  auto k = kernel_homology_univariate(ff.complex(diagonal_epimorphism(ff)));
  require(r, k.degrees.size() > 2 && k.degrees[2].free_rank == 1, "F2xF2 degree-2 free rank is not 1");
  BestvinaBrady z3 = bestvina_brady(Graph::complete(3));
  auto kz = kernel_homology_univariate(z3.group.complex(z3.nu));
  std::vector<long> dims;
  for (const auto& d : kz.degrees) {
    require(r, !d.infinite_dimensional(), "K3 kernel has an infinite degree");
    dims.push_back(d.torsion_dimension);
  }
  require(r, dims == std::vector<long>{1, 2, 1, 0}, "K3 kernel dims mismatch");
  if (r.ok) r.detail = "F2xF2 H2 free rank 1; K3 kernel dims (1,2,1)";
  return r;
}

Result window_growth() {
  Result r;
  GroupModel ff = direct_product({free_group(2), free_group(2)});
  auto w = window_homology(ff.complex(diagonal_epimorphism(ff)), 6);
  for (std::size_t k = 1; k < w.size(); ++k) require(r, w[k][2] > w[k - 1][2], "degree-2 window not increasing");
  // A box of radius k holds 2k + 1 translates; slope is per added translate.
  const long d5 = w[5][2] - w[4][2], d4 = w[4][2] - w[3][2];
  require(r, d5 == d4 && d5 == 2, "final differences " + std::to_string(d4) + ", " + std::to_string(d5));
  GroupModel t = surface_group(1);
  auto wt = window_homology(t.complex(validate_epimorphism(t.presentation(), {{1}, {0}})), 6);
  for (std::size_t j = 0; j < wt.back().size(); ++j)
    require(r, wt[5][j] == wt[4][j] && wt[4][j] == wt[3][j], "torus window not stable in degree " + std::to_string(j));
  if (r.ok) {
    std::ostringstream s;
    s << "H2 dims";
    for (const auto& row : w) s << ' ' << row[2];
    s << ", slope " << d5 / 2 << "; torus stable";
    r.detail = s.str();
  }
  return r;
}

Result finite_cover() {
  Result r;
  GroupModel f2 = free_group(2), t = surface_group(1), g2 = surface_group(2);
  std::vector<std::pair<const GroupModel*, EpimorphismToZm>> cases{
      {&f2, diagonal_epimorphism(f2)},
      {&t, validate_epimorphism(t.presentation(), {{1}, {0}})},
      {&g2, validate_epimorphism(g2.presentation(), {{1}, {0}, {0}, {0}})}};
  std::ostringstream s;
  for (const auto& [g, nu] : cases) {
    FiniteCoverReport rep = finite_cover_oracle(g->presentation(), nu);
    require(r, rep.passed, g->name() + " cover mismatch");
    s << (s.tellp() > 0 ? "; " : "") << g->name() << ' ' << rep.cover_b1 << '=' << rep.b1_trivial << '+'
      << rep.b1_sign;
  }
  if (r.ok) r.detail = s.str();
  return r;
}

Result pencil() {
  Result r;
  PencilData p = pencil_numerology({2, 2, 2});
  require(r, p.branch_sizes == std::vector<long>{2, 2, 2}, "|B_j| != 2");
  require(r, p.critical_points == 8, "|C(h)| != 8");
  require(r, p.euler_x == -8, "chi(X) != -8");
  for (long g = 2; g <= 10; ++g) require(r, riemann_hurwitz_audit(g).holds, "audit fails at g=" + std::to_string(g));
  if (r.ok) r.detail = "|B_j|=2, |C(h)|=8, chi=-8; audit g=2..10";
  return r;
}

Result model_agreement() {
  Result r;
  GroupModel ff = direct_product({free_group(2), free_group(2)});
  auto a = kernel_homology_univariate(raag_complex(Graph::cycle(4)));
  auto b = kernel_homology_univariate(ff.complex(diagonal_epimorphism(ff)));
  const std::size_t top = std::max(a.degrees.size(), b.degrees.size());
  a.degrees.resize(top);
  b.degrees.resize(top);
  for (std::size_t j = 0; j < top; ++j) {
    require(r, a.degrees[j].free_rank == b.degrees[j].free_rank, "free rank differs in degree " + std::to_string(j));
    require(r, a.degrees[j].torsion_factors == b.degrees[j].torsion_factors,
            "torsion differs in degree " + std::to_string(j));
  }
  if (r.ok) r.detail = "C4 cube complex = F2xF2 tensor route in all degrees";
  return r;
}

Result flag() {
  Result r;
  require(r, reduced_homology(flag_complex(Graph::cycle(4))) == std::vector<long>{0, 1}, "C4 reduced Betti");
  require(r, reduced_homology(flag_complex(Graph::complete(3))) == std::vector<long>{0, 0, 0}, "K3 reduced Betti");
  if (r.ok) r.detail = "C4 b~1=1; K3 all 0";
  return r;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    std::function<Result()> run;
    double limit_seconds;
  };
  const std::vector<Criterion> criteria{
      {1, "Fox calculus soundness", fox_soundness, 5},
      {2, "Euler invariance on curves", euler_invariance, 10},
      {3, "torus-group jump locus", torus_locus, 0},
      {4, "fullness of products", fullness, 0},
      {5, "certificate end-to-end", certificate_pipeline, 120},
      {6, "univariate kernel homology", shapiro, 0},
      {7, "window growth", window_growth, 60},
      {8, "finite-cover oracle", finite_cover, 0},
      {9, "pencil numerology", pencil, 0},
      {10, "model agreement", model_agreement, 0},
      {11, "flag-complex diagnostics", flag, 0},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      r.ok = false;
      r.detail += " (over " + std::to_string(static_cast<int>(c.limit_seconds)) + " s)";
    }
    failures += r.ok ? 0 : 1;
    std::printf("criterion %2d %-30s %s  %.3fs  %s\n", c.id, c.name.c_str(), r.ok ? "PASS" : "FAIL", secs,
                r.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
