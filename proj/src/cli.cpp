#include "eulerclass/cli.hpp"

#include <climits>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "eulerclass/bijection.hpp"
#include "eulerclass/corpus.hpp"
#include "eulerclass/equivalence.hpp"
#include "eulerclass/error.hpp"
#include "eulerclass/graph_io.hpp"
#include "eulerclass/tutte.hpp"

namespace eulerclass {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string graph;
  std::vector<std::string> graphs;
  std::string orientation;
  std::string tree;
  std::string order;
  std::string normal;
  std::string relation = "eulerian";
  std::string restriction = "all";
  std::optional<int> cap;
  std::uint64_t seed = 0;
  bool trace = false;
  int count = 50;
  int max_vertices = 6;
  int max_edges = 9;
  std::string out_dir;
};

json big(const BigInt& v) {
  if (v >= LLONG_MIN && v <= LLONG_MAX) return v.convert_to<long long>();
  return v.str();
}

json edge_list(EdgeSet s) {
  json arr = json::array();
  s.for_each([&](EdgeId e) { arr.push_back(e + 1); });
  return arr;
}

json order_list(const Multigraph& g) {
  json arr = json::array();
  for (EdgeId e : g.activity_order()) arr.push_back(e + 1);
  return arr;
}

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::shared_ptr<const Multigraph> load_graph(const std::string& path, const std::string& order) {
  Multigraph g;
  if (path == "-") {
    g = parse_graph(read_all(std::cin));
  } else {
    g = read_graph_file(path);
  }
  if (!order.empty()) {
    std::vector<EdgeId> ids = parse_edge_ids(order, g.edge_count());
    g = g.with_order(ids);
  }
  return std::make_shared<const Multigraph>(std::move(g));
}

NormalContext load_context(const std::shared_ptr<const Multigraph>& g, const std::string& normal) {
  GraphView full(g);
  return normal.empty() ? NormalContext(g) : NormalContext(g, Orientation::parse(full, normal));
}

const std::vector<std::pair<long, long>> kEvalPoints = {{0, 1}, {1, 0}, {1, 1}, {1, 2},
                                                        {2, 1}, {2, 0}, {0, 2}};

std::string point_name(long x, long y) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

json polynomial_json(const TuttePolynomial& p) {
  json coeffs = json::array();
  for (const auto& [ij, c] : p.terms()) coeffs.push_back({ij.first, ij.second, big(c)});
  json evals = json::object();
  for (auto [x, y] : kEvalPoints) evals[point_name(x, y)] = big(evaluate(p, x, y));
  return {{"polynomial", p.str()}, {"coeffs", coeffs}, {"evals", evals}};
}

int cmd_tutte(const Options& opt, json& out) {
  auto g = load_graph(opt.graph, opt.order);
  GraphView view(g);
  TuttePolynomial dc = tutte_deletion_contraction(view);
  out = {{"graph", opt.graph}, {"vertices", g->vertex_count()}, {"edges", g->edge_count()},
         {"order", order_list(*g)}};
  out.update(polynomial_json(dc));
  try {
    bool same = tutte_activity_expansion(view) == dc;
    out["cross_check"] = same ? "pass" : "fail";
    return same ? kExitOk : kExitCheckFailed;
  } catch (const ResourceError& e) {
    out["cross_check"] = "skipped";
    return kExitOk;
  }
}

Restriction restriction_of(const Options& opt) {
  auto r = parse_restriction(opt.restriction);
  if (!r) throw ParseError("unknown restriction '" + opt.restriction + "'");
  return *r;
}

int cmd_orientations(const Options& opt, json& out) {
  auto g = load_graph(opt.graph, opt.order);
  GraphView view(g);
  Restriction restriction = restriction_of(opt);
  json list = json::array();
  for (const Orientation& o : restricted_orientations(view, restriction, opt.cap.value_or(kDefaultOrientationCap)))
    list.push_back({{"orientation", o.str()},
                    {"totally_cyclic", is_totally_cyclic(view, o)},
                    {"acyclic", is_acyclic(view, o)}});
  out = {{"graph", opt.graph}, {"restriction", to_string(restriction)},
         {"count", list.size()}, {"orientations", list}};
  return kExitOk;
}

// Tutte evaluation point counting the classes of a (relation, restriction) pair.
std::optional<std::pair<long, long>> counting_point(Relation rel, Restriction res) {
  if (rel == Relation::kEulerian && res == Restriction::kTotallyCyclic) return std::pair{0L, 1L};
  if (rel == Relation::kEulerian && res == Restriction::kAll) return std::pair{2L, 1L};
  if (rel == Relation::kCut && res == Restriction::kAll) return std::pair{1L, 2L};
  if (rel == Relation::kCut && res == Restriction::kAcyclic) return std::pair{1L, 0L};
  if (rel == Relation::kEulerianCut && res == Restriction::kAll) return std::pair{1L, 1L};
  return std::nullopt;
}

int cmd_classes(const Options& opt, json& out) {
  auto g = load_graph(opt.graph, opt.order);
  GraphView view(g);
  auto relation = parse_relation(opt.relation);
  if (!relation) throw ParseError("unknown relation '" + opt.relation + "'");
  Restriction restriction = restriction_of(opt);
  ClassPartition part = classes(view, *relation, restriction, opt.cap.value_or(kDefaultOrientationCap));

  json blocks = json::array();
  json reps = json::array();
  for (const auto& block : part.blocks) {
    json b = json::array();
    for (const Orientation& o : block) b.push_back(o.str());
    blocks.push_back(b);
    reps.push_back(block.front().str());
  }
  out = {{"graph", opt.graph}, {"relation", to_string(part.relation)},
         {"restriction", to_string(part.restriction)}, {"count", part.count()},
         {"blocks", blocks}, {"representatives", reps}};

  if (*relation == Relation::kEulerian && restriction == Restriction::kTotallyCyclic &&
      component_count(view) == 1) {
    NormalContext ctx = load_context(g, opt.normal);
    json reduced = json::array();
    for (const auto& block : part.blocks) reduced.push_back(normalize(ctx, block.front()).str());
    out["reduced"] = reduced;
  }

  int code = kExitOk;
  json ids = json::object();
  if (auto point = counting_point(*relation, restriction)) {
    BigInt expected = evaluate(tutte_deletion_contraction(view), point->first, point->second);
    bool ok = expected == BigInt(part.count());
    ids["T" + point_name(point->first, point->second)] = big(expected);
    ids["count"] = part.count();
    ids["status"] = ok ? "pass" : "fail";
    if (!ok) code = kExitCheckFailed;
  }
  out["identities"] = ids;
  return code;
}

json trace_json(const Trace& trace) {
  json arr = json::array();
  for (const TraceEvent& ev : trace) {
    json item = {{"stage", ev.stage}, {"action", ev.action}, {"edge", ev.edge + 1}};
    if (ev.action == "normalize-reversal") item["cycle"] = edge_list(ev.cycle);
    item["contraction"] = {{"vertices", ev.contraction_vertices},
                           {"edges", edge_list(ev.contraction_edges)},
                           {"orientation", ev.contraction_orientation}};
    arr.push_back(item);
  }
  return arr;
}

int cmd_forward(const Options& opt, json& out) {
  auto g = load_graph(opt.graph, opt.order);
  NormalContext ctx = load_context(g, opt.normal);
  Orientation o = Orientation::parse(ctx.view(), opt.orientation);
  Trace trace;
  EdgeSet tree = forward(ctx, o, opt.trace ? &trace : nullptr);
  out = {{"graph", opt.graph}, {"orientation", o.str()}, {"normal", ctx.normal.str()},
         {"order", order_list(*g)}, {"reduced", normalize(ctx, o).str()}, {"tree", edge_list(tree)}};
  if (opt.trace) out["trace"] = trace_json(trace);
  return kExitOk;
}

int cmd_inverse(const Options& opt, json& out) {
  auto g = load_graph(opt.graph, opt.order);
  NormalContext ctx = load_context(g, opt.normal);
  EdgeSet tree = parse_edge_set(opt.tree, g->edge_count());
  InverseStats stats;
  Orientation o = inverse(ctx, tree, &stats);
  bool round_trip = forward(ctx, o) == tree;
  out = {{"graph", opt.graph}, {"tree", edge_list(tree)}, {"normal", ctx.normal.str()},
         {"order", order_list(*g)}, {"orientation", o.str()},
         {"forward_check", round_trip ? "pass" : "fail"}};
  return round_trip ? kExitOk : kExitCheckFailed;
}

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kSkipped: return "skipped";
  }
  return "?";
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse: return kExitParse;
    case ErrorKind::kInvalidEdge:
    case ErrorKind::kInvalidInput:
    case ErrorKind::kPrecondition: return kExitInvalidInput;
    case ErrorKind::kResource: return kExitResource;
    case ErrorKind::kInternal: return kExitCheckFailed;
  }
  return kExitCheckFailed;
}

int cmd_verify(const Options& opt, json& out) {
  const int n = static_cast<int>(opt.graphs.size());
  std::vector<json> results(n);
  std::vector<int> codes(n, kExitOk);
  VerifyOptions vopt;
  if (opt.cap) vopt.enumeration_limit = *opt.cap;

#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < n; ++i) {
    json r = {{"graph", opt.graphs[i]}};
    try {
      auto g = load_graph(opt.graphs[i], opt.order);
      IdentityReport report = verify_identities(GraphView(g), vopt);
      json checks = json::array();
      for (const IdentityCheck& c : report.checks) {
        json item = {{"name", c.name}, {"status", status_name(c.status)}};
        if (c.status != CheckStatus::kSkipped) {
          item["lhs"] = big(c.lhs);
          item["rhs"] = big(c.rhs);
        }
        if (!c.note.empty()) item["note"] = c.note;
        checks.push_back(item);
      }
      r["pass"] = report.passed();
      r["identities"] = checks;
      codes[i] = report.passed() ? kExitOk : kExitCheckFailed;
    } catch (const Error& e) {
      r["pass"] = false;
      r["error"] = e.what();
      codes[i] = exit_code_for(e.kind());
    }
    results[i] = std::move(r);
  }

  int code = kExitOk;
  for (int c : codes)
    if (c != kExitOk && (code == kExitOk || c > code)) code = c;
  out = {{"pass", code == kExitOk}, {"results", results}};
  return code;
}

int cmd_corpus(const Options& opt, json& out) {
  CorpusLimits limits{opt.max_vertices, opt.max_edges};
  std::vector<NamedGraph> graphs = corpus(opt.seed, opt.count, limits);
  json list = json::array();
  if (!opt.out_dir.empty()) std::filesystem::create_directories(opt.out_dir);
  for (const NamedGraph& g : graphs) {
    std::string text = format_graph(g.graph, g.name);
    json item = {{"name", g.name}, {"vertices", g.graph.vertex_count()}, {"edges", g.graph.edge_count()}};
    if (opt.out_dir.empty()) {
      item["text"] = text;
    } else {
      std::filesystem::path file = std::filesystem::path(opt.out_dir) / (g.name + ".g");
      std::ofstream f(file, std::ios::binary);
      f << text;
      if (!f) throw InvalidInputError("cannot write " + file.string());
      item["file"] = file.string();
    }
    list.push_back(item);
  }
  out = {{"seed", opt.seed},
         {"limits", {{"max_vertices", limits.max_vertices}, {"max_edges", limits.max_edges}}},
         {"graphs", list}};
  return kExitOk;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  Options opt;
  CLI::App app{"Tutte polynomials, orientation classes and the Eulerian-class bijection"};
  app.name("eulerclass");
  app.require_subcommand(1);

  auto add_order = [&](CLI::App* sub) {
    sub->add_option("--order", opt.order, "edge ids from smallest to largest, e.g. 3,1,2");
  };
  auto add_normal = [&](CLI::App* sub) {
    sub->add_option("--normal", opt.normal, "normal orientation as a +/- string (default all '+')");
  };

  CLI::App* tutte = app.add_subcommand("tutte", "Tutte polynomial by deletion-contraction and activities");
  tutte->add_option("graph", opt.graph, "graph file ('-' for stdin)")->required();
  add_order(tutte);

  CLI::App* orients = app.add_subcommand("orientations", "list orientations with their predicates");
  orients->add_option("graph", opt.graph)->required();
  orients->add_option("--restrict", opt.restriction, "all | totally_cyclic | acyclic");
  orients->add_option("--cap", opt.cap, "maximum edge count for enumeration");
  add_order(orients);

  CLI::App* cls = app.add_subcommand("classes", "equivalence classes of orientations");
  cls->add_option("graph", opt.graph)->required();
  cls->add_option("--relation", opt.relation, "eulerian | cut | eulerian_cut");
  cls->add_option("--restrict", opt.restriction, "all | totally_cyclic | acyclic");
  cls->add_option("--cap", opt.cap, "maximum edge count for enumeration");
  add_order(cls);
  add_normal(cls);

  CLI::App* fwd = app.add_subcommand("bijection-forward", "map a totally cyclic orientation to its tree");
  fwd->add_option("graph", opt.graph)->required();
  fwd->add_option("orientation", opt.orientation, "+/- string, one character per edge")->required();
  fwd->add_flag("--trace", opt.trace, "emit the per-stage event log");
  add_order(fwd);
  add_normal(fwd);

  CLI::App* inv = app.add_subcommand("bijection-inverse", "map an internally inactive tree to its orientation");
  inv->add_option("graph", opt.graph)->required();
  inv->add_option("tree", opt.tree, "comma-separated 1-based edge ids")->required();
  add_order(inv);
  add_normal(inv);

  CLI::App* ver = app.add_subcommand("verify", "check the Tutte evaluation identities");
  ver->add_option("graphs", opt.graphs, "graph files")->required();
  ver->add_option("--cap", opt.cap, "skip enumeration identities above this many edges (default 14)");
  add_order(ver);

  CLI::App* corp = app.add_subcommand("corpus", "emit the named and seeded random test graphs");
  corp->add_option("--seed", opt.seed);
  corp->add_option("--count", opt.count, "number of random graphs");
  corp->add_option("--max-vertices", opt.max_vertices);
  corp->add_option("--max-edges", opt.max_edges);
  corp->add_option("--out", opt.out_dir, "directory to write NAME.g files into");

  CliResult result;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = kExitParse;
    result.err = e.what();
    return result;
  }

  json out;
  try {
    if (tutte->parsed()) result.exit_code = cmd_tutte(opt, out);
    else if (orients->parsed()) result.exit_code = cmd_orientations(opt, out);
    else if (cls->parsed()) result.exit_code = cmd_classes(opt, out);
    else if (fwd->parsed()) result.exit_code = cmd_forward(opt, out);
    else if (inv->parsed()) result.exit_code = cmd_inverse(opt, out);
    else if (ver->parsed()) result.exit_code = cmd_verify(opt, out);
    else if (corp->parsed()) result.exit_code = cmd_corpus(opt, out);
  } catch (const Error& e) {
    result.exit_code = exit_code_for(e.kind());
    result.err = e.what();
    out = {{"error", e.what()}, {"exit_code", result.exit_code}};
  }
  result.out = out.dump(2) + "\n";
  return result;
}

}  // namespace eulerclass
