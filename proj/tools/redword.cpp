#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "redword/analysis.hpp"
#include "redword/config.hpp"
#include "redword/factor.hpp"
#include "redword/graph.hpp"
#include "redword/lattice.hpp"
#include "redword/shuffle.hpp"
#include "redword/words.hpp"

using namespace redword;
using json = nlohmann::ordered_json;

namespace {

constexpr int kUsage = 1;
constexpr int kHardFailure = 2;
constexpr int kSoftViolation = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string config_path;
  std::optional<std::string> format;
  std::optional<int> max_n;
  std::optional<std::uint64_t> max_words;
  std::optional<std::uint64_t> seed;
};

Config resolve_config(const Globals& g) {
  Config cfg;
  if (!g.config_path.empty()) load_config_file(g.config_path, cfg);
  apply_environment(cfg);
  if (g.format) cfg.output_format = parse_output_format(*g.format);
  if (g.max_n) cfg.max_degree = *g.max_n;
  if (g.max_words) cfg.max_words = *g.max_words;
  if (g.seed) cfg.rng_seed = *g.seed;
  return cfg;
}

Permutation read_perm(const std::string& text, const Config& cfg) {
  Permutation p = parse_permutation(text);
  if (p.degree() > cfg.max_degree)
    throw UsageError("degree " + std::to_string(p.degree()) + " exceeds max_degree " + std::to_string(cfg.max_degree));
  return p;
}

void require_within_cap(const Permutation& p, const Config& cfg) {
  const auto r = count_words(p);
  if (r > cfg.max_words)
    throw UsageError("|R(" + to_string(p) + ")| = " + std::to_string(r) + " exceeds max_words " +
                     std::to_string(cfg.max_words));
}

std::string show(std::span<const Letter> w, int degree) {
  const auto s = to_string(w, degree);
  return s.empty() ? "e" : s;
}

std::string show(const Word& w) { return show(w.letters, w.degree); }

// words

struct WordsArgs {
  std::string perm;
  bool count_only = false;
};

int cmd_words(const WordsArgs& a, const Config& cfg) {
  const Permutation p = read_perm(a.perm, cfg);
  const auto r = count_words(p);
  if (a.count_only) {
    if (cfg.output_format == OutputFormat::Json)
      std::cout << json{{"sigma", to_string(p)}, {"count", r}}.dump() << "\n";
    else
      std::cout << r << "\n";
    return 0;
  }
  require_within_cap(p, cfg);
  const WordSet words = enumerate_desc(p);
  if (cfg.output_format == OutputFormat::Json) {
    std::cout << json{{"sigma", to_string(p)}, {"count", r}, {"words", words.strings()}}.dump() << "\n";
    return 0;
  }
  std::cout << "|R(" << to_string(p) << ")| = " << r << "\n";
  for (std::size_t k = 0; k < words.size(); ++k) std::cout << show(words[k], words.degree()) << "\n";
  return 0;
}

// graph

struct GraphArgs {
  std::string perm;
  bool dot = false;
  bool as_json = false;
};

int cmd_graph(const GraphArgs& a, const Config& cfg) {
  const Permutation p = read_perm(a.perm, cfg);
  require_within_cap(p, cfg);
  const WordGraph g = build_graph(p);
  OutputFormat fmt = cfg.output_format;
  if (a.dot) fmt = OutputFormat::Dot;
  if (a.as_json) fmt = OutputFormat::Json;
  if (fmt == OutputFormat::Dot) {
    std::cout << export_dot(g);
  } else if (fmt == OutputFormat::Json) {
    std::cout << export_json(g) << "\n";
  } else {
    std::cout << "G(" << to_string(p) << "): " << g.vertex_count() << " vertices, "
              << g.edge_count(EdgeKind::Commutation) << " commutation edges, " << g.edge_count(EdgeKind::Braid)
              << " braid edges\n";
    for (const Edge& e : g.edges())
      std::cout << show(g.vertices()[e.u], p.degree()) << " -- " << show(g.vertices()[e.v], p.degree()) << " "
                << to_string(e.kind) << "\n";
  }
  return 0;
}

// classes

struct ClassesArgs {
  std::string perm;
  std::string kind = "both";
};

int cmd_classes(const ClassesArgs& a, const Config& cfg) {
  const Permutation p = read_perm(a.perm, cfg);
  require_within_cap(p, cfg);
  const WordGraph g = build_graph(p);
  std::vector<EdgeKind> kinds;
  if (a.kind == "braid" || a.kind == "both") kinds.push_back(EdgeKind::Braid);
  if (a.kind == "commutation" || a.kind == "both") kinds.push_back(EdgeKind::Commutation);
  json j;
  j["sigma"] = to_string(p);
  for (EdgeKind kind : kinds) {
    const auto part = classes(g, kind);
    const char* name = kind == EdgeKind::Braid ? "braid" : "commutation";
    if (cfg.output_format == OutputFormat::Json) {
      auto blocks = json::array();
      for (const auto& b : part.blocks) {
        auto words = json::array();
        for (auto v : b) words.push_back(show(g.vertices()[v], p.degree()));
        blocks.push_back(std::move(words));
      }
      j[name] = std::move(blocks);
      continue;
    }
    std::cout << name << " classes: " << part.count() << "\n";
    for (const auto& b : part.blocks) {
      std::cout << " ";
      for (auto v : b) std::cout << " " << show(g.vertices()[v], p.degree());
      std::cout << "\n";
    }
  }
  if (cfg.output_format == OutputFormat::Json) std::cout << j.dump() << "\n";
  return 0;
}

// verify

struct VerifyArgs {
  std::string perm;
  std::optional<int> all_n;
  std::vector<std::string> checks;
};

struct Outcome {
  enum Kind { Pass, Fail, NotApplicable } kind = Pass;
  std::string detail;
};

Outcome from_identity(const IdentityCheck& c) {
  return {c.holds() ? Outcome::Pass : Outcome::Fail, std::to_string(c.lhs) + " = " + std::to_string(c.rhs)};
}

Outcome run_check(const std::string& check, const Permutation& p, StatsCache& cache) {
  if (check == "redrec") return from_identity(verify_word_count_recursion(p, cache));
  if (check == "braidrec") return from_identity(verify_braid_class_recursion(p, cache));
  if (check == "edges") {
    const auto b = verify_braid_edge_recursion(p, cache);
    const auto c = verify_comm_edge_recursion(p, cache);
    return {b.holds() && c.holds() ? Outcome::Pass : Outcome::Fail,
            "dB " + std::to_string(b.lhs) + " = " + std::to_string(b.rhs) + ", dC " + std::to_string(c.lhs) + " = " +
                std::to_string(c.rhs)};
  }
  const GraphStats s = cache.get(p);
  if (check == "reiner") {
    const auto block = as_w0_block(p);
    if (!block || block->k < 3) return {Outcome::NotApplicable, "not a w0 block"};
    return {s.sum_db == s.r ? Outcome::Pass : Outcome::Fail, std::to_string(s.sum_db) + " = " + std::to_string(s.r)};
  }
  if (check == "bound1") {
    const bool ok = check_class_bounds(s).bound1;
    return {ok ? Outcome::Pass : Outcome::Fail, std::to_string(s.b + s.c - 1) + " <= " + std::to_string(s.r) +
                                                    " <= " + std::to_string(s.b * s.c)};
  }
  if (check == "partition") {
    if (length(p) == 0) return {Outcome::NotApplicable, "identity"};
    const WordGraph g = build_graph(p);
    const auto blocks = partition_by_last_letter(g);
    GeneratorSet keys;
    for (const auto& [i, members] : blocks) keys.insert(i);
    bool ok = keys == descents(p);
    std::uint64_t inner[2] = {0, 0};
    for (const auto& [i, members] : blocks) {
      const WordGraph child = build_graph(right_mult(p, i));
      ok = ok && members.size() == child.vertex_count();
      const std::uint64_t child_edges[2] = {child.edge_count(EdgeKind::Commutation), child.edge_count(EdgeKind::Braid)};
      std::uint64_t here[2] = {0, 0};
      for (const Edge& e : g.edges())
        if (g.vertices()[e.u].back() == i && g.vertices()[e.v].back() == i) ++here[e.kind == EdgeKind::Braid];
      ok = ok && here[0] == child_edges[0] && here[1] == child_edges[1];
      inner[0] += here[0];
      inner[1] += here[1];
    }
    std::uint64_t cross = 0;
    for (const auto& [pair, cc] : cross_edge_counts(g)) cross += cc.braid + cc.commutation;
    ok = ok && inner[0] + inner[1] + cross == g.edges().size();
    return {ok ? Outcome::Pass : Outcome::Fail,
            std::to_string(blocks.size()) + " blocks, " + std::to_string(cross) + " cross edges"};
  }
  throw UsageError("unknown check '" + check + "'");
}

int cmd_verify(VerifyArgs a, const Config& cfg) {
  static const std::vector<std::string> kAll{"redrec", "braidrec", "reiner", "edges", "bound1", "partition"};
  if (a.checks.empty() || (a.checks.size() == 1 && a.checks[0] == "all")) a.checks = kAll;
  for (const auto& c : a.checks)
    if (std::find(kAll.begin(), kAll.end(), c) == kAll.end()) throw UsageError("unknown check '" + c + "'");
  std::vector<Permutation> domain;
  if (a.all_n) {
    if (!a.perm.empty()) throw UsageError("give either a permutation or --all-n, not both");
    if (*a.all_n < 1 || *a.all_n > cfg.exhaustive_cap)
      throw UsageError("--all-n must be in 1.." + std::to_string(cfg.exhaustive_cap));
    domain = all_permutations(*a.all_n);
  } else {
    if (a.perm.empty()) throw UsageError("verify needs a permutation or --all-n");
    domain.push_back(read_perm(a.perm, cfg));
  }
  StatsCache cache(cfg.max_words);
  bool failed = false;
  json report = json::object();
  for (const auto& check : a.checks) {
    std::size_t pass = 0, fail = 0, na = 0;
    for (const auto& p : domain) {
      const Outcome o = run_check(check, p, cache);
      (o.kind == Outcome::Pass ? pass : o.kind == Outcome::Fail ? fail : na) += 1;
      if (o.kind == Outcome::Fail && a.all_n)
        std::cerr << "FAIL " << check << " " << to_string(p) << ": " << o.detail << "\n";
      if (!a.all_n && cfg.output_format == OutputFormat::Text) {
        const char* word = o.kind == Outcome::Pass ? "pass" : o.kind == Outcome::Fail ? "fail" : "n/a";
        std::cout << check << " " << to_string(p) << ": " << o.detail << " " << word << "\n";
      }
    }
    failed = failed || fail > 0;
    if (cfg.output_format == OutputFormat::Json)
      report[check] = json{{"pass", pass}, {"fail", fail}, {"n/a", na}};
    else if (a.all_n)
      std::cout << check << ": " << (fail ? "fail" : "pass") << " (" << pass << " pass, " << fail << " fail, " << na
                << " n/a)\n";
  }
  if (cfg.output_format == OutputFormat::Json) std::cout << report.dump() << "\n";
  return failed ? kHardFailure : 0;
}

// scan

struct ScanArgs {
  int n = 0;
  std::optional<std::size_t> sample;
  bool strict = false;
  std::string out;
  unsigned threads = 0;
};

int cmd_scan(const ScanArgs& a, const Config& cfg) {
  if (a.sample) {
    if (a.n < 1 || a.n > cfg.max_degree) throw UsageError("--n must be in 1.." + std::to_string(cfg.max_degree));
  } else if (a.n < 1 || a.n > cfg.exhaustive_cap) {
    throw UsageError("exhaustive scans need --n in 1.." + std::to_string(cfg.exhaustive_cap));
  }
  ScanOptions opt;
  opt.n = a.n;
  opt.sample = a.sample;
  opt.seed = cfg.rng_seed;
  opt.max_words = cfg.max_words;
  opt.threads = a.threads;
  const ScanReport report = scan(opt);
  const std::string lines = to_json_lines(report);
  if (a.out.empty()) {
    std::cout << lines;
  } else {
    std::ofstream f(a.out);
    if (!f) throw UsageError("cannot write " + a.out);
    f << lines;
    std::cout << "checked " << report.checked << ", skipped " << report.skipped << ", hard failures "
              << report.hard_failures << ", soft violations " << report.soft_violations << "\n";
  }
  for (const auto& rec : report.records) {
    for (const auto& h : rec.hard_failures) std::cerr << "HARD " << to_string(rec.sigma) << " " << h << "\n";
    for (const auto& s : rec.soft_violations) std::cerr << "SOFT " << to_string(rec.sigma) << " " << s << "\n";
  }
  if (!report.argmax_has_block) std::cerr << "SOFT path2: no w0 block attains the maximum braid ratio\n";
  if (report.hard_failures > 0) return kHardFailure;
  if (a.strict && report.soft_violations > 0) return kSoftViolation;
  return 0;
}

// factor

int cmd_factor(const std::string& perm, const Config& cfg) {
  const Permutation p = read_perm(perm, cfg);
  const auto f = staircase_factorization(p);
  const Word w = factorization_word(f);
  if (cfg.output_format == OutputFormat::Json) {
    auto factors = json::array();
    for (const auto& b : f.factors) factors.push_back({b.k, b.i});
    std::cout << json{{"tau", to_string(f.tau)}, {"factors", factors}, {"word", to_string(w)}}.dump() << "\n";
    return 0;
  }
  std::cout << "tau = " << to_string(f.tau) << (length(f.tau) == 0 ? " (e)" : "") << "\nfactors =";
  for (const auto& b : f.factors) std::cout << " (" << b.k << "," << b.i << ")";
  std::cout << "\nword = " << show(w) << "\n";
  return 0;
}

// equiv

int cmd_equiv(const std::string& s_text, const std::string& t_text, const Config& cfg) {
  const Permutation s = read_perm(s_text, cfg);
  const Permutation t = read_perm(t_text, cfg);
  if (length(s) == length(t)) {
    require_within_cap(s, cfg);
    require_within_cap(t, cfg);
  }
  const bool eq = are_equivalent(s, t);
  if (cfg.output_format == OutputFormat::Json)
    std::cout << json{{"s", to_string(s)}, {"t", to_string(t)}, {"equivalent", eq}}.dump() << "\n";
  else
    std::cout << (eq ? "equivalent" : "not equivalent") << "\n";
  return 0;
}

// lattice

struct LatticeArgs {
  int n = 0;
  bool cycles = false;
  std::vector<std::string> interval;
};

int cmd_lattice(const LatticeArgs& a, const Config& cfg) {
  if (a.n < 2 || a.n > std::min(cfg.max_degree, WeakOrderLattice::kMaxDegree))
    throw UsageError("--n must be in 2.." + std::to_string(std::min(cfg.max_degree, WeakOrderLattice::kMaxDegree)));
  const WeakOrderLattice lattice(a.n, cfg.max_degree);
  const bool as_json = cfg.output_format == OutputFormat::Json;
  json j;
  if (a.cycles) {
    const auto f4 = count_4cycles(lattice), f6 = count_6cycles(lattice);
    if (as_json) {
      j["n"] = a.n;
      j["4-cycles"] = f4;
      j["6-cycles"] = f6;
      if (a.n <= 6) {
        j["chordless 4-cycles"] = count_chordless_cycles(lattice, 4);
        j["chordless 6-cycles"] = count_chordless_cycles(lattice, 6);
      }
    } else {
      std::cout << "4-cycles " << f4 << "\n6-cycles " << f6 << "\n";
      if (a.n <= 6)
        std::cout << "chordless 4-cycles " << count_chordless_cycles(lattice, 4) << "\nchordless 6-cycles "
                  << count_chordless_cycles(lattice, 6) << "\n";
    }
  }
  if (!a.interval.empty()) {
    const Permutation v = read_perm(a.interval[0], cfg);
    const Permutation w = read_perm(a.interval[1], cfg);
    if (v.degree() != a.n || w.degree() != a.n) throw UsageError("interval endpoints must lie in S_" + std::to_string(a.n));
    if (!weak_leq(v, w)) throw UsageError(to_string(v) + " is not below " + to_string(w));
    const auto members = interval(lattice, v, w);
    const bool boolean = is_boolean_interval(v, w);
    if (as_json) {
      j["interval"] = json{{"v", to_string(v)}, {"w", to_string(w)}, {"size", members.size()}, {"boolean", boolean}};
    } else {
      std::cout << "[" << to_string(v) << ", " << to_string(w) << "]: " << members.size() << " elements, "
                << (boolean ? "boolean" : "not boolean") << "\n";
    }
  }
  if (!a.cycles && a.interval.empty()) {
    if (as_json) {
      std::cout << export_json(lattice) << "\n";
      return 0;
    }
    std::cout << "W(S_" << a.n << "): " << lattice.size() << " elements, " << lattice.covers().size() << " covers\n";
    for (const auto& c : lattice.covers())
      std::cout << to_string(lattice.element(c.lower)) << " < " << to_string(lattice.element(c.upper)) << " s"
                << c.generator << "\n";
    return 0;
  }
  if (as_json) std::cout << j.dump() << "\n";
  return 0;
}

// shuffle

struct ShuffleArgs {
  std::string perm;
  bool configs = false;
  bool staircase = false;
};

int cmd_shuffle(const ShuffleArgs& a, const Config& cfg) {
  const Permutation p = read_perm(a.perm, cfg);
  if (length(p) == 0) throw UsageError("the identity has no descents to split off");
  const ShuffleSplit split = a.staircase ? staircase_split(p) : longest_block_split(p);
  const bool type3 = can_type3(split);
  const bool as_json = cfg.output_format == OutputFormat::Json;
  if (!a.configs || type3) {
    json j;
    j["sigma"] = to_string(p);
    j["alpha"] = to_string(split.alpha);
    auto betas = json::array();
    for (const auto& b : split.betas) betas.push_back(to_string(b));
    j["betas"] = betas;
    j["seed"] = to_string(split.seed);
    j["type3_possible"] = type3;
    if (split.betas.size() == 1) {
      const auto bound = check_count_bound(p, split.alpha, split.betas[0]);
      j["count_bound"] = json{{"lhs", bound.lhs}, {"rhs", bound.rhs}, {"holds", bound.holds}};
    }
    if (as_json) {
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "alpha = " << to_string(split.alpha) << "\nbetas =";
      for (const auto& b : split.betas) std::cout << " " << to_string(b);
      std::cout << "\nseed = " << to_string(split.seed) << "\ntype 3 possible: " << (type3 ? "yes" : "no") << "\n";
      if (j.contains("count_bound"))
        std::cout << "count bound: " << j["count_bound"]["lhs"] << " <= " << j["count_bound"]["rhs"] << "\n";
    }
    if (a.configs && type3) {
      std::cerr << "configurations are not tracked when a bichrome braid move is possible\n";
      return kUsage;
    }
    return 0;
  }
  require_within_cap(p, cfg);
  const ConfigurationSet set = configurations(split);
  if (as_json) {
    std::cout << export_json(set) << "\n";
    return 0;
  }
  std::cout << set.configs.size() << " configurations, " << set.words.size() << " words\n";
  for (const auto& c : set.configs) {
    std::cout << "I = {";
    for (std::size_t k = 0; k < c.positions.size(); ++k) std::cout << (k ? "," : "") << c.positions[k];
    std::cout << "}: " << c.members.size() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reduced words of permutations: word graphs, classes, recursions and bounds"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--config", g.config_path, "key = value configuration file");
  app.add_option("--format", g.format, "text, json or dot");
  app.add_option("--max-n", g.max_n, "largest permitted degree");
  app.add_option("--max-words", g.max_words, "largest |R(sigma)| to enumerate");
  app.add_option("--seed", g.seed, "sampling seed");

  WordsArgs words;
  auto* words_cmd = app.add_subcommand("words", "list or count reduced words");
  words_cmd->add_option("perm", words.perm)->required();
  words_cmd->add_flag("--count", words.count_only, "print only |R|");

  GraphArgs graph;
  auto* graph_cmd = app.add_subcommand("graph", "build G(sigma)");
  graph_cmd->add_option("perm", graph.perm)->required();
  graph_cmd->add_flag("--dot", graph.dot);
  graph_cmd->add_flag("--json", graph.as_json);

  ClassesArgs cls;
  auto* classes_cmd = app.add_subcommand("classes", "braid and commutation classes");
  classes_cmd->add_option("perm", cls.perm)->required();
  classes_cmd->add_option("--kind", cls.kind)->check(CLI::IsMember({"braid", "commutation", "both"}));

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "check recursions and identities");
  verify_cmd->add_option("--all-n", verify.all_n, "check every permutation of S_n");
  verify_cmd->add_option("args", verify.checks, "[perm] checks: redrec braidrec reiner edges bound1 partition all");

  ScanArgs scan_args;
  auto* scan_cmd = app.add_subcommand("scan", "scan S_n for violations");
  scan_cmd->add_option("--n", scan_args.n)->required();
  scan_cmd->add_option("--sample", scan_args.sample);
  scan_cmd->add_flag("--strict", scan_args.strict, "exit 3 on conjecture violations");
  scan_cmd->add_option("--out", scan_args.out, "write JSON lines here");
  scan_cmd->add_option("--threads", scan_args.threads);

  std::string factor_perm;
  auto* factor_cmd = app.add_subcommand("factor", "staircase factorization");
  factor_cmd->add_option("perm", factor_perm)->required();
  bool factor_json = false;
  factor_cmd->add_flag("--json", factor_json);

  std::string equiv_s, equiv_t;
  auto* equiv_cmd = app.add_subcommand("equiv", "equivalence by difference sequences");
  equiv_cmd->add_option("s", equiv_s)->required();
  equiv_cmd->add_option("t", equiv_t)->required();

  LatticeArgs lat;
  auto* lattice_cmd = app.add_subcommand("lattice", "right weak order on S_n");
  lattice_cmd->add_option("--n", lat.n)->required();
  lattice_cmd->add_flag("--cycles", lat.cycles);
  lattice_cmd->add_option("--interval", lat.interval)->expected(2);
  bool lattice_json = false;
  lattice_cmd->add_flag("--json", lattice_json);

  ShuffleArgs sh;
  auto* shuffle_cmd = app.add_subcommand("shuffle", "coloured shuffles and configurations");
  shuffle_cmd->add_option("perm", sh.perm)->required();
  shuffle_cmd->add_flag("--configs", sh.configs);
  shuffle_cmd->add_flag("--staircase", sh.staircase, "split along every descent block");
  bool shuffle_json = false;
  shuffle_cmd->add_flag("--json", shuffle_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kUsage;
  }

  try {
    Config cfg = resolve_config(g);
    if ((factor_cmd->parsed() && factor_json) || (lattice_cmd->parsed() && lattice_json) ||
        (shuffle_cmd->parsed() && shuffle_json))
      cfg.output_format = OutputFormat::Json;
    if (words_cmd->parsed()) return cmd_words(words, cfg);
    if (graph_cmd->parsed()) return cmd_graph(graph, cfg);
    if (classes_cmd->parsed()) return cmd_classes(cls, cfg);
    if (verify_cmd->parsed()) {
      if (!verify.checks.empty() && !verify.all_n) {
        verify.perm = verify.checks.front();
        verify.checks.erase(verify.checks.begin());
      }
      return cmd_verify(verify, cfg);
    }
    if (scan_cmd->parsed()) return cmd_scan(scan_args, cfg);
    if (factor_cmd->parsed()) return cmd_factor(factor_perm, cfg);
    if (equiv_cmd->parsed()) return cmd_equiv(equiv_s, equiv_t, cfg);
    if (lattice_cmd->parsed()) return cmd_lattice(lat, cfg);
    if (shuffle_cmd->parsed()) return cmd_shuffle(sh, cfg);
  } catch (const ResourceCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
