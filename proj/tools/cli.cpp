// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tlab/cert_cache.hpp"
#include "tlab/constructions.hpp"
#include "tlab/embed.hpp"
#include "tlab/errors.hpp"
#include "tlab/graph6.hpp"
#include "tlab/ortho.hpp"
#include "tlab/ramsey.hpp"
#include "tlab/transversal.hpp"
#include "tlab/version.hpp"

namespace tlab::cli {

namespace fs = std::filesystem;
using json = nlohmann::json;

uint64_t fnv1a64(std::string_view bytes) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

// Raised when an emitted witness fails its re-check.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

class IoFailure : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoFailure("cannot write " + path);
  out << body;
  if (!out) throw IoFailure("write failed for " + path);
}

std::string first_line(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (!line.empty()) return line;
  }
  throw MalformedInput("file holds no graph line");
}

UGraph load_graph(const std::string& path) {
  return decode_graph6(first_line(read_file(path)));
}

BitDigraph load_digraph(const std::string& path) {
  return decode_digraph6(first_line(read_file(path)));
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw MalformedInput(what + ": " + e.what());
  }
}

// {"classes": [[...], ...]} or a bare array of arrays.
std::vector<VertexSet> load_classes(const std::string& path) {
  json j = parse_json(read_file(path), path);
  if (j.is_object()) j = j.value("classes", json());
  if (!j.is_array()) throw MalformedInput(path + ": expected a class list");
  std::vector<VertexSet> out;
  try {
    for (const auto& c : j) out.emplace_back(c.get<std::vector<int>>());
  } catch (const json::exception& e) {
    throw MalformedInput(path + ": " + e.what());
  }
  return out;
}

PartitionedGraph load_partitioned(const std::string& graph,
                                  const std::string& classes) {
  PartitionedGraph pg{load_graph(graph), load_classes(classes)};
  try {
    pg.validate();
  } catch (const std::invalid_argument& e) {
    throw MalformedInput(classes + ": " + e.what());
  }
  return pg;
}

json classes_json(const std::vector<VertexSet>& classes) {
  json arr = json::array();
  for (const auto& c : classes) arr.push_back(c.members());
  return json{{"classes", arr}};
}

// A vector is an array of integers or of [numerator, denominator] pairs.
VectorFamily load_vectors(const std::string& path) {
  json j = parse_json(read_file(path), path);
  if (j.is_object()) j = j.value("vectors", json());
  if (!j.is_array() || j.empty())
    throw MalformedInput(path + ": expected a nonempty vector list");
  try {
    VectorFamily f(static_cast<int>(j[0].size()));
    for (const auto& v : j) {
      std::vector<std::pair<int64_t, int64_t>> coords;
      for (const auto& c : v) {
        if (c.is_array())
          coords.emplace_back(c.at(0).get<int64_t>(), c.at(1).get<int64_t>());
        else
          coords.emplace_back(c.get<int64_t>(), 1);
      }
      f.add(RatVec::from_rationals(coords));
    }
    return f;
  } catch (const json::exception& e) {
    throw MalformedInput(path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw MalformedInput(path + ": " + e.what());
  }
}

json vectors_json(const VectorFamily& f) {
  json arr = json::array();
  for (const auto& v : f.vectors()) arr.push_back(v.coords());
  return arr;
}

BipartitePattern load_pattern(const std::string& path) {
  json j = parse_json(read_file(path), path);
  BipartitePattern p;
  try {
    p.left_size = j.at("left").get<int>();
    p.right_size = j.at("right").get<int>();
    for (const auto& e : j.value("edges", json::array()))
      p.cross_edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  } catch (const json::exception& e) {
    throw MalformedInput(path + ": " + e.what());
  }
  return p;
}

struct Common {
  std::string cache_dir;
  bool no_cache = false;
  int threads = 1;
  uint64_t budget_nodes = 0;
  double budget_secs = 0.0;

  SearchLimits limits(uint64_t default_nodes) const {
    SearchLimits l;
    l.max_nodes = budget_nodes ? budget_nodes : default_nodes;
    l.max_seconds = budget_secs;
    return l;
  }

  fs::path resolved_cache_dir() const {
    if (!cache_dir.empty()) return cache_dir;
    if (const char* env = std::getenv("TRANSVERSAL_LAB_CACHE"); env && *env)
      return env;
    return ".transversal-lab-cache";
  }
};

class Runner {
 public:
  Runner(std::ostream& out) : out_(out) {}

  void emit(const std::string& command, const json& params, json result,
            uint64_t nodes) {
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
            .count();
    json report = {{"command", command},
                   {"parameters", params},
                   {"result", std::move(result)},
                   {"nodes", nodes},
                   {"timing", {{"seconds", secs}}},
                   {"version", kVersion}};
    out_ << report.dump(2) << '\n';
  }

  void emit_graph(const UGraph& g, const std::vector<VertexSet>* classes,
                  const std::string& out_path, const std::string& classes_path) {
    const std::string line = encode_graph6(g);
    if (out_path.empty())
      out_ << line << '\n';
    else
      write_file(out_path, line + "\n");
    if (classes) {
      const std::string cj = classes_json(*classes).dump();
      if (!classes_path.empty())
        write_file(classes_path, cj + "\n");
      else if (out_path.empty())
        out_ << cj << '\n';
      else
        write_file(out_path + ".classes.json", cj + "\n");
    }
  }

  std::ostream& out() { return out_; }

 private:
  std::ostream& out_;
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

json certificate_json(const DrCertificate& c) {
  return {{"order", c.order()},
          {"digraph6", encode_digraph6(c.digraph)},
          {"verified_no_transitive", c.verified_no_transitive},
          {"verified_no_independent", c.verified_no_independent}};
}

// ---- dr ----

struct DrArgs {
  int n = 0, m = 0;
  int max_order = 128;
  bool no_circulants = false;
  std::string digraph;
};

void dr_compute(Runner& run, const DrArgs& a, const Common& c) {
  json params = {{"n", a.n},
                 {"m", a.m},
                 {"max_order", a.max_order},
                 {"budget_nodes", c.budget_nodes},
                 {"budget_secs", c.budget_secs},
                 {"threads", c.threads},
                 {"circulants", !a.no_circulants}};
  const fs::path dir = c.resolved_cache_dir();
  const std::string key = json{{"command", "dr compute"}, {"parameters", params}}.dump();
  std::ostringstream hex;
  hex << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(key);
  const fs::path result_path = dir / "results" / (hex.str() + ".json");

  if (!c.no_cache && fs::exists(result_path)) {
    // Trust nothing: the cached certificate must re-verify.
    try {
      json cached = json::parse(read_file(result_path.string()));
      const json& res = cached.at("result");
      bool ok = true;
      if (!res.at("certificate").is_null()) {
        BitDigraph d =
            decode_digraph6(res.at("certificate").at("digraph6").get<std::string>());
        check_counterexample(d, a.n, a.m);
        ok = d.order() + 1 == res.at("lower").get<int>();
      }
      if (ok) {
        json r = res;
        r["from_cache"] = true;
        run.emit("dr compute", params, r, cached.value("nodes", 0ULL));
        return;
      }
    } catch (const std::exception&) {
      // Corrupt or stale entry: fall through and recompute.
    }
  }

  DrSearchOptions opts;
  opts.max_order = a.max_order;
  opts.limits = c.limits(std::numeric_limits<uint64_t>::max());
  if (c.budget_nodes == 0 && c.budget_secs <= 0) opts.limits.max_seconds = 1800;
  opts.threads = c.threads;
  opts.probe_circulants = !a.no_circulants;
  DrResult r = search_dr(a.n, a.m, opts);

  std::optional<CertificateCache> certs;
  if (!c.no_cache) certs.emplace(dir);
  if (certs && !r.exact) {
    try {
      if (auto best = certs->load_best(a.n, a.m);
          best && best->order() + 1 > r.lower && best->order() + 1 <= r.upper) {
        r.lower = best->order() + 1;
        r.certificate = best;
        r.exact = r.lower == r.upper;
      }
    } catch (const CacheCorrupt&) {
      // A bad file never contributes a bound.
    }
  }
  if (r.certificate) {
    DrCertificate again = check_counterexample(r.certificate->digraph, a.n, a.m);
    if (!again.verified() || again.order() + 1 != r.lower)
      throw VerificationFailure("dr certificate failed re-verification");
    if (certs) certs->store(*r.certificate);
  }

  json res = {{"n", r.n},
              {"m", r.m},
              {"lower", r.lower},
              {"upper", r.upper},
              {"exact", r.exact},
              {"proof_method", to_string(r.proof_method)},
              {"certificate", r.certificate ? certificate_json(*r.certificate)
                                            : json(nullptr)},
              {"classes_per_order", r.classes_per_order},
              {"exhausted_through", r.exhausted_through},
              {"budget_exhausted", r.budget_exhausted}};
  if (r.exact) res["value"] = r.lower;
  if (!c.no_cache) {
    json full = {{"result", res}, {"nodes", r.nodes}};
    fs::create_directories(result_path.parent_path());
    write_file(result_path.string(), full.dump() + "\n");
  }
  run.emit("dr compute", params, res, r.nodes);
}

void dr_bounds_cmd(Runner& run, const DrArgs& a) {
  DrInterval iv = dr_bounds(a.n, a.m, RamseyTable::with_literature());
  json res = {{"lower", iv.lower},
              {"upper", iv.upper},
              {"lower_source", iv.lower_source},
              {"upper_source", iv.upper_source},
              {"exact", iv.lower == iv.upper}};
  run.emit("dr bounds", {{"n", a.n}, {"m", a.m}}, res, 0);
}

void dr_check(Runner& run, const DrArgs& a) {
  BitDigraph d = load_digraph(a.digraph);
  json res;
  try {
    DrCertificate cert = check_counterexample(d, a.n, a.m);
    res = {{"ok", true},
           {"order", cert.order()},
           {"implied_lower_bound", cert.order() + 1},
           {"exact", true}};
  } catch (const NotACounterexample& e) {
    res = {{"ok", false},
           {"kind", e.kind() == NotACounterexample::Kind::kTransitive
                        ? "transitive"
                        : "independent"},
           {"witness", e.witness()},
           {"exact", true}};
  }
  run.emit("dr check", {{"n", a.n}, {"m", a.m}, {"digraph", a.digraph}}, res, 0);
}

// ---- gen ----

struct GenArgs {
  int k = 0, depth = 0, n = 0, N = 0, rounds = 0, pair_budget = 0;
  int seed_order = 2, cap = 3, vertex_budget = 50'000, vertex_cap = 100'000;
  uint64_t rng_seed = 0;
  std::string digraph, g, h, graph, classes, seed, out, classes_out;
};

// ---- transversal ----

struct TransArgs {
  std::string graph, classes, strategy = "random";
  int m = 1, ell = 1, n = 3, N = 1, r = 0, samples = 200, steps = 400;
  uint64_t rng_seed = 1;
};

json vertex_list(const std::optional<VertexSet>& s) {
  return s ? json(s->members()) : json(nullptr);
}

// ---- embed ----

struct EmbedArgs {
  std::string graph, classes, pattern;
  int exact_cap = 6, k = 1;
};

// ---- ortho ----

struct OrthoArgs {
  std::string vectors;
  int dim = 2, m = 1, pool_height = 1;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Directed Ramsey numbers, witness constructions and "
               "independent-transversal search"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub, bool search) {
    sub->add_option("--cache-dir", common.cache_dir, "Cache directory");
    sub->add_flag("--no-cache", common.no_cache, "Bypass the cache");
    if (search) {
      sub->add_option("--threads", common.threads, "Worker threads")
          ->check(CLI::Range(1, 256));
      sub->add_option("--budget-nodes", common.budget_nodes, "Node budget");
      sub->add_option("--budget-secs", common.budget_secs,
                      "Wall-clock budget in seconds");
    }
  };

  Runner run(out);
  std::function<void()> action;

  // dr
  DrArgs dr;
  auto* dr_cmd = app.add_subcommand("dr", "Directed Ramsey numbers");
  dr_cmd->require_subcommand(1);
  {
    auto* s = dr_cmd->add_subcommand("compute", "Compute or bound dr(n,m)");
    s->add_option("--n", dr.n)->required()->check(CLI::Range(1, 64));
    s->add_option("--m", dr.m)->required()->check(CLI::Range(1, 64));
    s->add_option("--max-order", dr.max_order)->check(CLI::Range(1, 128));
    s->add_flag("--no-circulants", dr.no_circulants);
    add_common(s, true);
    s->callback([&] { action = [&] { dr_compute(run, dr, common); }; });

    auto* b = dr_cmd->add_subcommand("bounds", "Bound arithmetic only");
    b->add_option("--n", dr.n)->required()->check(CLI::Range(1, 64));
    b->add_option("--m", dr.m)->required()->check(CLI::Range(1, 64));
    b->callback([&] { action = [&] { dr_bounds_cmd(run, dr); }; });

    auto* c = dr_cmd->add_subcommand("check", "Verify a counterexample");
    c->add_option("--digraph", dr.digraph, "digraph6 file")->required();
    c->add_option("--n", dr.n)->required()->check(CLI::Range(1, 128));
    c->add_option("--m", dr.m)->required()->check(CLI::Range(1, 128));
    c->callback([&] { action = [&] { dr_check(run, dr); }; });
  }

  // gen
  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Graph generators");
  gen_cmd->require_subcommand(1);
  {
    auto outputs = [&](CLI::App* s) {
      s->add_option("--out", gen.out, "graph6 output file");
      s->add_option("--classes-out", gen.classes_out, "classes JSON file");
    };
    auto emit_pg = [&](const PartitionedGraph& pg) {
      run.emit_graph(pg.graph, &pg.classes, gen.out, gen.classes_out);
    };

    auto* s = gen_cmd->add_subcommand("layered", "Layered blowup of a digraph");
    s->add_option("--digraph", gen.digraph)->required();
    s->add_option("--depth", gen.depth)->required()->check(CLI::Range(1, 4096));
    outputs(s);
    s->callback([&, emit_pg] {
      action = [&, emit_pg] {
        emit_pg(layered_from_digraph(load_digraph(gen.digraph), gen.depth));
      };
    });

    for (const char* kind : {"half", "complete", "empty"}) {
      auto* b = gen_cmd->add_subcommand(kind, std::string(kind) +
                                                  " bipartite graph on k+k");
      b->add_option("--k", gen.k)->required()->check(CLI::Range(0, 2048));
      outputs(b);
      const std::string which = kind;
      b->callback([&, emit_pg, which] {
        action = [&, emit_pg, which] {
          emit_pg(which == "half"       ? half_graph(gen.k)
                  : which == "complete" ? complete_bipartite(gen.k)
                                        : empty_bipartite(gen.k));
        };
      });
    }

    auto* t = gen_cmd->add_subcommand("tensor", "Tensor blowup g (x) h");
    // --h names the second factor here, so help is --help only.
    t->set_help_flag("--help", "Print this help message and exit");
    t->add_option("--g", gen.g)->required();
    t->add_option("--h", gen.h)->required();
    outputs(t);
    t->callback([&] {
      action = [&] {
        run.emit_graph(tensor(load_graph(gen.g), load_graph(gen.h)), nullptr,
                       gen.out, gen.classes_out);
      };
    });

    auto* sh = gen_cmd->add_subcommand("shift", "Shift graph on n-subsets");
    sh->add_option("--n", gen.n)->required()->check(CLI::Range(2, 64));
    sh->add_option("--N", gen.N)->required()->check(CLI::Range(2, 4096));
    sh->add_option("--cap", gen.vertex_cap, "Vertex cap");
    outputs(sh);
    sh->callback([&] {
      action = [&] {
        run.emit_graph(shift_graph(gen.n, gen.N, gen.vertex_cap).graph, nullptr,
                       gen.out, gen.classes_out);
      };
    });

    auto* he = gen_cmd->add_subcommand("henson", "Finite Henson approximation");
    he->add_option("--n", gen.n)->required()->check(CLI::Range(2, 16));
    he->add_option("--rounds", gen.rounds)->required()->check(CLI::Range(0, 16));
    he->add_option("--seed", gen.seed, "graph6 seed file (default: empty graph)");
    he->add_option("--seed-order", gen.seed_order, "Order of the empty seed")
        ->check(CLI::Range(0, 4096));
    he->add_option("--rng-seed", gen.rng_seed, "Pair-order shuffle seed");
    he->add_option("--cap", gen.cap, "Max |A u B|")->check(CLI::Range(0, 8));
    he->add_option("--vertex-budget", gen.vertex_budget);
    outputs(he);
    he->callback([&] {
      action = [&] {
        UGraph seed = gen.seed.empty() ? UGraph(gen.seed_order) : load_graph(gen.seed);
        HensonOptions o{gen.cap, gen.vertex_budget, gen.rng_seed};
        run.emit_graph(henson_approx(gen.n, gen.rounds, seed, o).graph, nullptr,
                       gen.out, gen.classes_out);
      };
    });

    auto* pw = gen_cmd->add_subcommand("partition-witness",
                                       "Partition extension witness");
    pw->add_option("--graph", gen.graph)->required();
    pw->add_option("--classes", gen.classes, "two-class JSON (a, b)")->required();
    pw->add_option("--n", gen.n)->required()->check(CLI::Range(2, 16));
    pw->add_option("--pair-budget", gen.pair_budget)->required()
        ->check(CLI::Range(0, 4096));
    outputs(pw);
    pw->callback([&, emit_pg] {
      action = [&, emit_pg] {
        PartitionedGraph in = load_partitioned(gen.graph, gen.classes);
        if (in.class_count() != 2)
          throw std::invalid_argument("partition-witness needs two classes");
        emit_pg(partition_extension_witness(in.graph, in.classes[0],
                                            in.classes[1], gen.n,
                                            gen.pair_budget));
      };
    });

    auto* ra = gen_cmd->add_subcommand("rado", "Rado partition witness");
    ra->add_option("--depth", gen.depth)->required()->check(CLI::Range(1, 2048));
    outputs(ra);
    ra->callback([&, emit_pg] {
      action = [&, emit_pg] { emit_pg(rado_partition_witness(gen.depth).pg); };
    });
  }

  // transversal
  TransArgs tr;
  auto* tr_cmd = app.add_subcommand("transversal", "Independent transversals");
  tr_cmd->require_subcommand(1);
  {
    auto* s = tr_cmd->add_subcommand("solve", "Find an (m, ell) transversal");
    s->add_option("--graph", tr.graph)->required();
    s->add_option("--classes", tr.classes)->required();
    s->add_option("--m", tr.m)->required()->check(CLI::PositiveNumber);
    s->add_option("--ell", tr.ell)->required()->check(CLI::PositiveNumber);
    add_common(s, true);
    s->callback([&] {
      action = [&] {
        PartitionedGraph pg = load_partitioned(tr.graph, tr.classes);
        TransversalResult r = find_transversal(
            pg, {tr.m, tr.ell},
            {common.limits(50'000'000), common.threads});
        if (r.witness && !verify_transversal(pg, {tr.m, tr.ell}, *r.witness))
          throw VerificationFailure("transversal witness failed re-check");
        json res = {{"status", to_string(r.status)},
                    {"witness", vertex_list(r.witness)},
                    {"profile", r.profile},
                    {"nodes_explored", r.nodes},
                    {"exact", r.status != TransversalStatus::kBudget}};
        run.emit("transversal solve",
                 {{"graph", tr.graph}, {"classes", tr.classes}, {"m", tr.m},
                  {"ell", tr.ell}},
                 res, r.nodes);
      };
    });

    auto* p = tr_cmd->add_subcommand("profile", "Largest m at a given ell");
    p->add_option("--graph", tr.graph)->required();
    p->add_option("--classes", tr.classes)->required();
    p->add_option("--ell", tr.ell)->required()->check(CLI::PositiveNumber);
    add_common(p, true);
    p->callback([&] {
      action = [&] {
        PartitionedGraph pg = load_partitioned(tr.graph, tr.classes);
        ProfileResult r = max_profile(pg, tr.ell,
                                      {common.limits(50'000'000), common.threads});
        if (r.witness && !verify_transversal(pg, {r.lower, tr.ell}, *r.witness))
          throw VerificationFailure("profile witness failed re-check");
        json res = {{"lower", r.lower},
                    {"upper", r.upper},
                    {"exact", r.exact},
                    {"witness", vertex_list(r.witness)}};
        if (r.exact) res["value"] = r.lower;
        run.emit("transversal profile",
                 {{"graph", tr.graph}, {"classes", tr.classes}, {"ell", tr.ell}},
                 res, r.nodes);
      };
    });

    auto* e = tr_cmd->add_subcommand("estimate", "Evidence about N(n,m,ell)");
    e->add_option("--n", tr.n)->required()->check(CLI::Range(2, 16));
    e->add_option("--m", tr.m)->required()->check(CLI::PositiveNumber);
    e->add_option("--ell", tr.ell)->required()->check(CLI::PositiveNumber);
    e->add_option("--N", tr.N, "Class size")->required()->check(CLI::PositiveNumber);
    e->add_option("--strategy", tr.strategy)
        ->check(CLI::IsMember({"random", "local-search", "exhaustive"}));
    e->add_option("--r", tr.r, "Number of classes (default dr(n,m))");
    e->add_option("--rng-seed", tr.rng_seed);
    e->add_option("--samples", tr.samples)->check(CLI::PositiveNumber);
    e->add_option("--steps", tr.steps)->check(CLI::PositiveNumber);
    add_common(e, true);
    e->callback([&] {
      action = [&] {
        EstimateOptions o;
        o.strategy = tr.strategy == "random"         ? EstimateStrategy::kRandom
                     : tr.strategy == "local-search" ? EstimateStrategy::kLocalSearch
                                                     : EstimateStrategy::kExhaustive;
        o.r = tr.r;
        o.rng_seed = tr.rng_seed;
        o.samples = tr.samples;
        o.steps = tr.steps;
        o.limits = common.limits(20'000'000);
        NEstimate est = estimate_N(tr.n, tr.m, tr.ell, tr.N, o);
        json res = {{"r", est.r},
                    {"class_size", est.class_size},
                    {"strategy", to_string(est.strategy)},
                    {"implied_N_greater_than", est.implied_greater
                                                   ? json(est.class_size)
                                                   : json(nullptr)},
                    {"exhausted", est.exhausted},
                    {"exact", est.strategy == EstimateStrategy::kExhaustive &&
                                  est.exhausted},
                    {"candidates_examined", est.candidates_examined}};
        if (est.best_counterexample) {
          res["counterexample"] = {
              {"graph6", encode_graph6(est.best_counterexample->graph)},
              {"classes", classes_json(est.best_counterexample->classes)["classes"]}};
        } else {
          res["counterexample"] = nullptr;
        }
        run.emit("transversal estimate",
                 {{"n", tr.n}, {"m", tr.m}, {"ell", tr.ell}, {"N", tr.N},
                  {"strategy", tr.strategy}, {"r", tr.r},
                  {"rng_seed", tr.rng_seed}, {"samples", tr.samples},
                  {"steps", tr.steps}},
                 res, est.nodes);
      };
    });
  }

  // embed
  EmbedArgs em;
  auto* em_cmd = app.add_subcommand("embed", "Embedding analyzers");
  em_cmd->require_subcommand(1);
  {
    auto two_classes = [&] {
      PartitionedGraph pg = load_partitioned(em.graph, em.classes);
      if (pg.class_count() != 2)
        throw std::invalid_argument("expected exactly two classes");
      return pg;
    };

    auto* h = em_cmd->add_subcommand("halforder", "Half-graph order of g[a,b]");
    h->add_option("--graph", em.graph)->required();
    h->add_option("--classes", em.classes)->required();
    h->add_option("--exact-cap", em.exact_cap)->check(CLI::Range(1, 64));
    add_common(h, true);
    h->callback([&, two_classes] {
      action = [&, two_classes] {
        PartitionedGraph pg = two_classes();
        HalfOrderResult r = half_graph_order(
            pg.graph, pg.classes[0], pg.classes[1],
            {em.exact_cap, common.limits(20'000'000)});
        if (!verify_half_graph(pg.graph, r.left, r.right))
          throw VerificationFailure("half-graph witness failed re-check");
        json res = {{"order", r.order},
                    {"exact", r.exact},
                    {"left", r.left},
                    {"right", r.right}};
        run.emit("embed halforder",
                 {{"graph", em.graph}, {"classes", em.classes},
                  {"exact_cap", em.exact_cap}},
                 res, r.nodes);
      };
    });

    auto* b = em_cmd->add_subcommand("balanced", "Balanced induced embedding");
    b->add_option("--graph", em.graph)->required();
    b->add_option("--classes", em.classes)->required();
    b->add_option("--pattern", em.pattern, "{left, right, edges} JSON")->required();
    add_common(b, true);
    b->callback([&, two_classes] {
      action = [&, two_classes] {
        PartitionedGraph pg = two_classes();
        BipartitePattern pat = load_pattern(em.pattern);
        EmbeddingResult r =
            balanced_induced_embed(pg, pat, common.limits(50'000'000));
        json res = {{"found", r.report.has_value()}, {"exact", r.exact}};
        if (r.report) {
          if (!verify_embedding(pg, pat, *r.report))
            throw VerificationFailure("embedding failed re-check");
          res["kind"] = "induced";
          res["map"] = r.report->map;
          res["left_class"] = r.report->left_class;
        }
        run.emit("embed balanced",
                 {{"graph", em.graph}, {"classes", em.classes},
                  {"pattern", em.pattern}},
                 res, r.nodes);
      };
    });

    auto* rp = em_cmd->add_subcommand("richpair", "Rich-pair surrogate");
    rp->add_option("--graph", em.graph)->required();
    rp->add_option("--classes", em.classes)->required();
    rp->add_option("--k", em.k)->required()->check(CLI::PositiveNumber);
    add_common(rp, true);
    rp->callback([&, two_classes] {
      action = [&, two_classes] {
        PartitionedGraph pg = two_classes();
        RichPairVerdict v = rich_pair_surrogate(
            pg.graph, pg.classes[0], pg.classes[1], em.k,
            common.limits(20'000'000));
        if (v.kind == RichPairKind::kHalfGraph &&
            !verify_half_graph(pg.graph, v.left, v.right))
          throw VerificationFailure("half-graph witness failed re-check");
        if (v.kind == RichPairKind::kEmptyPair)
          for (int x : v.left)
            for (int y : v.right)
              if (pg.graph.adjacent(x, y))
                throw VerificationFailure("empty pair has a cross edge");
        json res = {{"verdict", to_string(v.kind)},
                    {"left", v.left},
                    {"right", v.right},
                    {"exact", v.kind != RichPairKind::kInconclusive}};
        run.emit("embed richpair",
                 {{"graph", em.graph}, {"classes", em.classes}, {"k", em.k}},
                 res, v.nodes);
      };
    });
  }

  // ortho
  OrthoArgs orr;
  auto* or_cmd = app.add_subcommand("ortho", "Orthogonality graphs");
  or_cmd->require_subcommand(1);
  {
    auto* c = or_cmd->add_subcommand("check", "Every (m+1)-subset has an orthogonal pair?");
    c->add_option("--vectors", orr.vectors, "JSON vector list")->required();
    c->add_option("--m", orr.m)->required()->check(CLI::PositiveNumber);
    c->callback([&] {
      action = [&] {
        VectorFamily f = load_vectors(orr.vectors);
        const int alpha = independence_number(ortho_graph(f));
        json res = {{"ok", alpha <= orr.m},
                    {"size", f.size()},
                    {"independence_number", alpha},
                    {"exact", true}};
        run.emit("ortho check", {{"vectors", orr.vectors}, {"m", orr.m}}, res, 0);
      };
    });

    auto* s = or_cmd->add_subcommand("search", "Pool search for alpha(n,m)");
    s->add_option("--dim", orr.dim)->required()->check(CLI::Range(1, 8));
    s->add_option("--m", orr.m)->required()->check(CLI::PositiveNumber);
    s->add_option("--pool-height", orr.pool_height)->check(CLI::Range(1, 16));
    s->add_option("--vectors", orr.vectors, "Pool file instead of a height");
    add_common(s, true);
    s->callback([&] {
      action = [&] {
        VectorFamily pool = orr.vectors.empty()
                                ? integer_direction_pool(orr.dim, orr.pool_height)
                                : load_vectors(orr.vectors);
        AlphaSearchResult r = alpha_lower_search(orr.dim, orr.m, pool,
                                                 common.limits(100'000'000));
        if (!alpha_check(r.family, orr.m))
          throw VerificationFailure("search family fails alpha_check");
        RStarRelation rel = rstar_relation(orr.m, r.family.size());
        json res = {{"size", r.family.size()},
                    {"exact", r.exact},
                    {"vectors", vectors_json(r.family)},
                    {"pool_size", pool.size()},
                    {"alpha_lower_bound", r.family.size()},
                    {"r_star_m_plus_1_lower_bound", rel.r_star_m_plus_1},
                    {"r_m_plus_2_lower_bound", rel.r_m_plus_2}};
        run.emit("ortho search",
                 {{"dim", orr.dim}, {"m", orr.m}, {"pool_height", orr.pool_height},
                  {"vectors", orr.vectors}},
                 res, r.nodes);
      };
    });
  }

  std::vector<const char*> argv{"tlab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kOk;
  } catch (const CLI::Success&) {
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kArgumentError;
  }

  if (!action) {
    err << "error: no command given\n";
    return kArgumentError;
  }
  try {
    action();
  } catch (const NotACounterexample& e) {
    err << "verification failure: " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const VerificationFailure& e) {
    err << "verification failure: " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const MalformedInput& e) {
    err << "malformed input: " << e.what() << '\n';
    return kIoError;
  } catch (const IoFailure& e) {
    err << "i/o error: " << e.what() << '\n';
    return kIoError;
  } catch (const fs::filesystem_error& e) {
    err << "i/o error: " << e.what() << '\n';
    return kIoError;
  } catch (const CacheCorrupt& e) {
    err << "cache error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kArgumentError;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kArgumentError;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kArgumentError;
  } catch (const std::logic_error& e) {
    err << "verification failure: " << e.what() << '\n';
    return kVerificationFailure;
  }
  return kOk;
}

}  // namespace tlab::cli
