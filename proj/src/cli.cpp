#include "charvar/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "charvar/error.hpp"
#include "charvar/json_io.hpp"

namespace charvar::cli {

namespace {

struct RunConfig {
  std::string command;
  std::string preset;
  std::vector<long> genus;
  long rank = 2;
  long factors = 1;
  std::string input;
  std::string graph;
  std::string character = "generic";
  std::string nu;
  long r = 0;
  long depth = 1;
  long degree = 0;
  long trials = 100;
  std::uint64_t seed = 1;
  long radius = 4;
  std::string strategy;
  long memory_ceiling = 0;
  bool json = false;
};

struct Outcome {
  Json result;
  int code = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("FileNotFound", "cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

long to_long(const std::string& s) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    throw Error("BadArgument", "not an integer: '" + s + "'");
  }
  if (used != s.size()) throw Error("BadArgument", "not an integer: '" + s + "'");
  return v;
}

Graph resolve_graph(const std::string& spec) {
  if (spec.empty()) throw Error("UsageError", "this command needs --graph");
  if (spec == "octahedron") return Graph::octahedron();
  if (spec.size() > 1 && (spec[0] == 'C' || spec[0] == 'K') &&
      std::all_of(spec.begin() + 1, spec.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    const auto n = static_cast<std::size_t>(to_long(spec.substr(1)));
    return spec[0] == 'C' ? Graph::cycle(n) : Graph::complete(n);
  }
  return parse_graph(read_file(spec));
}

struct Target {
  GroupModel group;
  std::string default_nu;
};

GroupModel power(GroupModel g, long copies) {
  if (copies <= 1) return g;
  return direct_product(std::vector<GroupModel>(static_cast<std::size_t>(copies), g));
}

Target resolve_group(const RunConfig& cfg) {
  if (!cfg.input.empty()) {
    const std::string stem = std::filesystem::path(cfg.input).stem().string();
    return {power(GroupModel::from_presentation(stem, parse_presentation(read_file(cfg.input))), cfg.factors), ""};
  }
  if (!cfg.graph.empty()) return {raag(resolve_graph(cfg.graph)), "diagonal"};
  const std::string& p = cfg.preset;
  if (p.empty()) throw Error("UsageError", "choose a group with --preset, --input or --graph");
  auto one_genus = [&](long fallback) {
    if (cfg.genus.size() > 1) throw Error("BadArgument", "preset '" + p + "' takes a single genus");
    return cfg.genus.empty() ? fallback : cfg.genus.front();
  };
  if (p == "surface") return {power(surface_group(one_genus(2)), cfg.factors), "pencil"};
  if (p == "torus") return {power(surface_group(1), cfg.factors), "pencil"};
  if (p == "free") return {power(free_group(static_cast<std::size_t>(cfg.rank)), cfg.factors), "diagonal"};
  if (p == "product-surface") {
    std::vector<long> g = cfg.genus.empty() ? std::vector<long>{2, 2, 2} : cfg.genus;
    if (g.size() < 2) throw Error("BadArgument", "product-surface needs at least two genera");
    std::vector<GroupModel> fs;
    for (long x : g) fs.push_back(surface_group(x));
    return {direct_product(fs), "pencil"};
  }
  if (p == "bb-octahedron") return {raag(Graph::octahedron()), "diagonal"};
  if (p == "stallings") return {direct_product({free_group(2), free_group(2), free_group(2)}), "diagonal"};
  throw Error("BadArgument", "unknown preset '" + p + "'");
}

EpimorphismToZm resolve_nu(const RunConfig& cfg, const Target& t) {
  const std::string spec = cfg.nu.empty() ? t.default_nu : cfg.nu;
  if (spec.empty()) throw Error("UsageError", "this command needs --nu");
  if (spec == "pencil") return pencil_epimorphism(t.group);
  if (spec == "diagonal") return diagonal_epimorphism(t.group);
  if (spec == "abelianization")
    return validate_epimorphism(t.group.presentation(), t.group.abelianization().generator_images());
  std::vector<IntVector> images;
  for (const auto& v : split(spec, ';')) {
    IntVector img;
    for (const auto& x : split(v, ',')) img.push_back(to_long(x));
    images.push_back(std::move(img));
  }
  return validate_epimorphism(t.group.presentation(), images);
}

Character resolve_character(const std::string& spec, std::size_t m) {
  if (spec == "generic") return Character::generic();
  if (spec == "trivial") return Character::trivial(m);
  std::vector<Rational> coords;
  for (const auto& x : split(spec, ',')) coords.push_back(parse_rational(x));
  if (coords.size() != m)
    throw Error("VariableCountMismatch", "character has " + std::to_string(coords.size()) +
                                             " coordinates, expected " + std::to_string(m));
  return Character::at(std::move(coords));
}

std::size_t default_r(const RunConfig& cfg, const GroupModel& g) {
  if (cfg.r > 0) return static_cast<std::size_t>(cfg.r);
  return g.kind() == GroupModel::Kind::kProduct ? g.factors().size() : 1;
}

std::size_t memory_ceiling(const RunConfig& cfg) {
  if (cfg.memory_ceiling > 0) return static_cast<std::size_t>(cfg.memory_ceiling);
  if (const char* env = std::getenv(kMemoryCeilingEnv)) {
    const long v = to_long(env);
    if (v <= 0) throw Error("BadArgument", std::string(kMemoryCeilingEnv) + " must be positive");
    return static_cast<std::size_t>(v);
  }
  return kDefaultWindowCeiling;
}

Json group_header(const GroupModel& g) {
  return Json{{"name", g.name()}, {"presentation", to_json(g.presentation())},
              {"abelianization", to_json(g.abelianization())}};
}

Outcome cmd_betti(const RunConfig& cfg) {
  Target t = resolve_group(cfg);
  Json res{{"group", group_header(t.group)}};
  TwistedComplex c;
  if (cfg.nu.empty()) {
    c = t.group.full_complex();
    res["coordinates"] = "abelianization";
  } else {
    auto nu = resolve_nu(cfg, t);
    c = t.group.complex(nu);
    res["coordinates"] = "nu";
    res["nu"] = to_json(nu);
  }
  res["ranks"] = c.ranks();
  res["profile"] = to_json(twisted_betti(c, resolve_character(cfg.character, c.variable_count())));
  return {res, 0};
}

Outcome cmd_alexander(const RunConfig& cfg) {
  Target t = resolve_group(cfg);
  Json res{{"group", group_header(t.group)}};
  if (cfg.nu.empty()) {
    res["matrix"] = to_json(alexander_matrix(t.group.presentation(), t.group.abelianization()));
  } else {
    auto nu = resolve_nu(cfg, t);
    res["nu"] = to_json(nu);
    res["matrix"] = to_json(alexander_matrix(t.group.presentation(), nu));
  }
  return {res, 0};
}

Outcome cmd_jumploci(const RunConfig& cfg) {
  Target t = resolve_group(cfg);
  const auto s = static_cast<std::size_t>(cfg.degree > 0 ? cfg.degree : 1);
  Json res{{"group", group_header(t.group)}, {"degree", s}, {"depth", cfg.depth}};
  if (s == 1) {
    try {
      res["ideal"] = to_json(v1_ideal(t.group, cfg.depth));
    } catch (const Error& e) {
      if (e.code() != "TooManyMinors") throw;
      res["ideal"] = nullptr;
      res["ideal_error"] = Json{{"code", e.code()}, {"message", e.what()}};
    }
    res["fullness"] = to_json(is_full_v1(t.group, cfg.seed));
  } else {
    res["fullness"] = to_json(is_full_vr_generic(t.group, s, cfg.seed));
  }
  if (t.group.kind() == GroupModel::Kind::kProduct && t.group.factors().size() == s)
    res["product_fullness"] = to_json(is_full_vr_product(t.group.factors(), cfg.seed));
  if (cfg.character != "generic") {
    const Character rho = resolve_character(cfg.character, t.group.abelianization().torsion_free_rank);
    res["membership"] = Json{{"character", rho.to_string()},
                             {"in_variety", in_variety(t.group, s, cfg.depth, rho)}};
  }
  return {res, 0};
}

Strategy resolve_strategy(const RunConfig& cfg, const GroupModel& g, std::size_t r) {
  if (!cfg.strategy.empty()) return parse_strategy(cfg.strategy);
  return g.kind() == GroupModel::Kind::kProduct && g.factors().size() == r ? Strategy::kKunnethProduct
                                                                           : Strategy::kGenericRank;
}

Outcome cmd_certify(const RunConfig& cfg) {
  Target t = resolve_group(cfg);
  EpimorphismToZm nu;
  try {
    nu = resolve_nu(cfg, t);
  } catch (const Error& e) {
    if (e.code() != "ZeroMap") throw;
    throw Error("TrivialNu", "ν is trivial; the criterion needs a nontrivial map");
  }
  const std::size_t r = default_r(cfg, t.group);
  Certificate cert = certify_non_fp(t.group, nu, r, resolve_strategy(cfg, t.group, r), cfg.seed);
  return {to_json(cert), cert.certified() ? 0 : 2};
}

Outcome cmd_probe(const RunConfig& cfg) {
  Target t = resolve_group(cfg);
  auto nu = resolve_nu(cfg, t);
  const std::size_t r = default_r(cfg, t.group);
  auto rep = generic_vanishing_probe(t.group, nu, r, static_cast<std::size_t>(cfg.trials), cfg.seed);
  Json res{{"group", t.group.name()}, {"nu", to_json(nu)}};
  res.update(to_json(rep));
  return {res, 0};
}

Outcome cmd_kernel(const RunConfig& cfg) {
  Target t = resolve_group(cfg);
  auto nu = resolve_nu(cfg, t);
  const std::size_t top = cfg.degree > 0 ? static_cast<std::size_t>(cfg.degree) : TwistedComplex::kAllDegrees;
  std::optional<Certificate> cert;
  if (cfg.r > 0) {
    const auto r = static_cast<std::size_t>(cfg.r);
    cert = certify_non_fp(t.group, nu, r, resolve_strategy(cfg, t.group, r), cfg.seed);
  }
  auto rep = kernel_report_univariate(t.group, nu, top, cert ? &*cert : nullptr);
  Json res{{"group", t.group.name()}, {"nu", to_json(nu)}};
  res.update(to_json(rep));
  if (cert) res["certificate_outcome"] = cert->outcome;
  const bool inconsistent = rep.consistent_with_certificate && !*rep.consistent_with_certificate;
  return {res, inconsistent ? 2 : 0};
}

Outcome cmd_window(const RunConfig& cfg) {
  Target t = resolve_group(cfg);
  auto nu = resolve_nu(cfg, t);
  TwistedComplex c = t.group.complex(nu);
  auto dims = window_homology(c, static_cast<std::size_t>(cfg.radius), memory_ceiling(cfg));
  Json res{{"group", t.group.name()}, {"nu", to_json(nu)}};
  res.update(window_to_json(dims, c.variable_count()));
  return {res, 0};
}

Outcome cmd_raag(const RunConfig& cfg) {
  Graph g = resolve_graph(cfg.graph);
  GroupModel a = raag(g);
  return {Json{{"graph", to_json(g)},
               {"group", group_header(a)},
               {"flag_complex", to_json(flag_complex(g))},
               {"complex", to_json(raag_complex(g))}},
          0};
}

Outcome cmd_bb(const RunConfig& cfg) {
  Graph g = resolve_graph(cfg.graph);
  BestvinaBrady bb = bestvina_brady(g);
  Json res{{"graph", to_json(g)},
           {"group", group_header(bb.group)},
           {"nu", to_json(bb.nu)},
           {"graph_connected", bb.graph_connected},
           {"flag_complex", to_json(flag_complex(g))}};
  res["kernel"] = to_json(kernel_homology_univariate(raag_complex(g)));
  return {res, bb.graph_connected ? 0 : 2};
}

Outcome cmd_flag(const RunConfig& cfg) {
  Graph g = resolve_graph(cfg.graph);
  return {Json{{"graph", to_json(g)}, {"flag_complex", to_json(flag_complex(g))}}, 0};
}

Outcome cmd_pencil(const RunConfig& cfg) {
  PencilData d = pencil_numerology(cfg.genus.empty() ? std::vector<long>{2, 2, 2} : cfg.genus);
  Json res = to_json(d);
  Json mono = Json::array();
  for (long g : d.genera) {
    std::vector<int> ones(static_cast<std::size_t>(2 * g - 2), 1);
    mono.push_back(Json{{"genus", g}, {"double_cover_datum_valid", branch_monodromy_check(g, ones)}});
  }
  res["monodromy"] = std::move(mono);
  return {res, 0};
}

Outcome cmd_oracle(const RunConfig& cfg) {
  Target t = resolve_group(cfg);
  RunConfig c = cfg;
  if (c.nu.empty() && t.default_nu == "pencil") {
    // Onto Z: first generator to 1, the rest to 0.
    std::string spec = "1";
    for (std::size_t i = 1; i < t.group.presentation().generator_count(); ++i) spec += ";0";
    c.nu = spec;
  } else if (c.nu.empty() && t.group.abelianization().torsion_free_rank == 1) {
    c.nu = "abelianization";
  }
  auto nu = resolve_nu(c, t);
  auto rep = finite_cover_oracle(t.group.presentation(), nu);
  Json res{{"group", t.group.name()}, {"nu", to_json(nu)}};
  res.update(to_json(rep));
  return {res, rep.passed ? 0 : 2};
}

void render_text(const Json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto flat = [&](const Json& v) {
    if (!v.is_array()) return false;
    return std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive() || (x.is_array() && std::all_of(x.begin(), x.end(), [](const Json& y) { return y.is_primitive(); })); });
  };
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    if (v.is_primitive()) {
      out << pad << it.key() << ": " << scalar(v) << '\n';
    } else if (flat(v)) {
      out << pad << it.key() << ": " << v.dump() << '\n';
    } else if (v.is_object()) {
      out << pad << it.key() << ":\n";
      render_text(v, out, indent + 2);
    } else {
      out << pad << it.key() << ":\n";
      for (const auto& x : v) {
        if (x.is_object()) {
          out << pad << "  -\n";
          render_text(x, out, indent + 4);
        } else {
          out << pad << "  - " << scalar(x) << '\n';
        }
      }
    }
  }
}

void render_window(const Json& res, std::ostream& out) {
  out << "group: " << res["group"].get<std::string>() << '\n';
  out << "radius";
  const std::size_t degrees = res["table"].empty() ? 0 : res["table"][0]["dims"].size();
  for (std::size_t j = 0; j < degrees; ++j) out << "\tH" << j;
  out << '\n';
  for (const auto& row : res["table"]) {
    out << row["radius"].get<long>();
    for (const auto& d : row["dims"]) out << '\t' << d.get<long>();
    out << '\n';
  }
  for (const auto& g : res["growth"])
    out << "H" << g["degree"].get<long>() << " slope " << (g["slope"].is_null() ? "n/a" : g["slope"].dump())
        << (g["stabilized"].get<bool>() ? " (stabilized)" : "") << '\n';
}

int exit_for_error(const Error& e) {
  return e.code() == "TrivialNu" || e.code() == "FullnessNotEstablished" ? 2 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Characteristic varieties and non-finiteness certificates", "charvar"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  auto json_flag = [&](CLI::App* s) { s->add_flag("--json", cfg.json, "Emit a JSON report"); };
  auto group_opts = [&](CLI::App* s) {
    s->add_option("--preset", cfg.preset, "surface | product-surface | torus | free | bb-octahedron | stallings");
    s->add_option("--genus", cfg.genus, "Genus or comma-separated genera")->delimiter(',')->check(CLI::PositiveNumber);
    s->add_option("--rank", cfg.rank, "Free group rank")->check(CLI::PositiveNumber);
    s->add_option("--factors", cfg.factors, "Number of direct factors")->check(CLI::PositiveNumber);
    s->add_option("--input", cfg.input, "Presentation file")->check(CLI::ExistingFile);
    s->add_option("--graph", cfg.graph, "Graph file or C<n>, K<n>, octahedron");
  };
  auto nu_opt = [&](CLI::App* s) {
    s->add_option("--nu", cfg.nu, "pencil | diagonal | abelianization | v1;v2;... (one vector per generator)");
  };
  auto seed_opt = [&](CLI::App* s) { s->add_option("--seed", cfg.seed, "Sampler seed")->check(CLI::PositiveNumber); };
  auto r_opt = [&](CLI::App* s) { s->add_option("--r", cfg.r, "Degree r")->check(CLI::PositiveNumber); };

  struct Entry {
    std::string name;
    Outcome (*fn)(const RunConfig&);
  };
  std::vector<std::pair<CLI::App*, Entry>> subs;
  auto add = [&](const std::string& name, const std::string& help, Outcome (*fn)(const RunConfig&)) {
    CLI::App* s = app.add_subcommand(name, help);
    json_flag(s);
    subs.push_back({s, {name, fn}});
    return s;
  };

  auto* betti = add("betti", "Twisted Betti numbers at a character", cmd_betti);
  group_opts(betti);
  nu_opt(betti);
  betti->add_option("--char", cfg.character, "generic | trivial | comma-separated rationals");

  auto* alex = add("alexander", "Alexander matrix of the presentation", cmd_alexander);
  group_opts(alex);
  nu_opt(alex);

  auto* jl = add("jumploci", "V^1_t ideal and fullness of V^s_1", cmd_jumploci);
  group_opts(jl);
  jl->add_option("--depth", cfg.depth, "Depth t")->check(CLI::PositiveNumber);
  jl->add_option("--degree", cfg.degree, "Degree s")->check(CLI::PositiveNumber);
  jl->add_option("--char", cfg.character, "Character for a membership query");
  seed_opt(jl);

  auto* cert = add("certify", "Non-finiteness certificate for ker(nu)", cmd_certify);
  group_opts(cert);
  nu_opt(cert);
  r_opt(cert);
  seed_opt(cert);
  cert->add_option("--strategy", cfg.strategy, "generic-rank | kunneth-product");

  auto* probe = add("probe", "Generic vanishing probe at pulled-back characters", cmd_probe);
  group_opts(probe);
  nu_opt(probe);
  r_opt(probe);
  seed_opt(probe);
  probe->add_option("--trials", cfg.trials, "Number of sampled characters")->check(CLI::PositiveNumber);

  auto* kern = add("kernel", "Exact homology of ker(nu) for nu onto Z", cmd_kernel);
  group_opts(kern);
  nu_opt(kern);
  kern->add_option("--degree", cfg.degree, "Top degree reported")->check(CLI::PositiveNumber);
  r_opt(kern);
  seed_opt(kern);
  kern->add_option("--strategy", cfg.strategy, "Strategy for the cross-check certificate");

  auto* win = add("window", "Homology of finite windows of the cover", cmd_window);
  group_opts(win);
  nu_opt(win);
  win->add_option("--radius", cfg.radius, "Largest window radius")->check(CLI::PositiveNumber);
  win->add_option("--memory-ceiling", cfg.memory_ceiling, "Dense matrix entry budget")->check(CLI::PositiveNumber);

  auto* ra = add("raag", "Right-angled Artin group of a graph", cmd_raag);
  ra->add_option("--graph", cfg.graph, "Graph file or C<n>, K<n>, octahedron")->required();
  auto* bb = add("bb", "Bestvina-Brady map of a graph", cmd_bb);
  bb->add_option("--graph", cfg.graph, "Graph file or C<n>, K<n>, octahedron")->required();
  auto* fl = add("flag", "Flag complex and its reduced homology", cmd_flag);
  fl->add_option("--graph", cfg.graph, "Graph file or C<n>, K<n>, octahedron")->required();

  auto* pen = add("pencil", "Elliptic pencil numerology", cmd_pencil);
  pen->add_option("--genus", cfg.genus, "Comma-separated genera")->delimiter(',');

  auto* orc = add("oracle", "Finite-cover consistency check", cmd_oracle);
  group_opts(orc);
  nu_opt(orc);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() != 0 && std::find(args.begin(), args.end(), "--json") != args.end()) {
      Json env{{"command", args.front()}, {"tool_version", kToolVersion}, {"exit_code", 1},
               {"error", Json{{"code", "UsageError"}, {"message", e.what()}}}};
      out << env.dump(2) << '\n';
      return 1;
    }
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  for (const auto& [sub, entry] : subs) {
    if (!sub->parsed()) continue;
    cfg.command = entry.name;
    try {
      Outcome o = entry.fn(cfg);
      if (cfg.json) {
        Json env{{"command", entry.name}, {"tool_version", kToolVersion}, {"exit_code", o.code},
                 {"result", std::move(o.result)}};
        out << env.dump(2) << '\n';
      } else if (entry.name == "window") {
        render_window(o.result, out);
      } else {
        render_text(o.result, out, 0);
      }
      return o.code;
    } catch (const Error& e) {
      const int code = exit_for_error(e);
      if (cfg.json) {
        Json env{{"command", entry.name}, {"tool_version", kToolVersion}, {"exit_code", code},
                 {"error", Json{{"code", e.code()}, {"message", e.what()}}}};
        out << env.dump(2) << '\n';
      } else {
        err << "error [" << e.code() << "]: " << e.what() << '\n';
      }
      return code;
    }
  }
  return 1;
}

}  // namespace charvar::cli
