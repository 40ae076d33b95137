#include "cli.hpp"

#include <iomanip>
#include <optional>
#include <set>
#include <unordered_map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "walkpart/dressing.hpp"
#include "walkpart/enumeration.hpp"
#include "walkpart/graph_io.hpp"
#include "walkpart/notation.hpp"
#include "walkpart/reduction.hpp"
#include "walkpart/signature.hpp"
#include "walkpart/walksum.hpp"

namespace walkpart {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string graph_file;
  bool as_json = false;
  bool dot = false;
  std::string signature = "0";
  std::optional<std::size_t> max_len;
  std::optional<std::size_t> level;
  std::string from, to, mode = "resummed", kind;
  std::vector<std::string> walks;
};

// Graph from --graph, or else the graph traced out by the given walks.
Digraph resolve_graph(const Options& o) {
  if (!o.graph_file.empty()) return load_graph(o.graph_file).graph;
  std::vector<std::string> labels;
  std::unordered_map<std::string, Vertex> index;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::set<std::pair<Vertex, Vertex>> seen;
  for (const auto& text : o.walks) {
    std::optional<Vertex> prev;
    for (const auto& l : split_walk_labels(text)) {
      auto [it, fresh] = index.emplace(l, static_cast<Vertex>(labels.size()));
      if (fresh) labels.push_back(l);
      if (prev && seen.insert({*prev, it->second}).second) edges.emplace_back(*prev, it->second);
      prev = it->second;
    }
  }
  return Digraph(std::move(labels), edges);
}

const Digraph& need_graph(const Options& o, std::optional<Digraph>& slot) {
  if (o.graph_file.empty()) throw UsageError("this command needs --graph");
  slot = load_graph(o.graph_file).graph;
  return *slot;
}

std::size_t need_max_len(const Options& o) {
  if (!o.max_len) throw UsageError("this command needs --max-len");
  return *o.max_len;
}

Walk read_walk(const std::string& text, const Digraph& g) {
  Walk w = parse_walk(text, g);
  if (w.is_zero()) return w;
  if (!g.admits(w)) throw DomainError("'" + text + "' is not a walk on the graph");
  return w;
}

std::string format_entry(std::complex<double> z) {
  std::ostringstream os;
  os << std::setprecision(17);
  if (z.imag() == 0.0) {
    os << z.real();
  } else {
    os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  }
  return os.str();
}

void print_matrix(const Matrix& m, std::ostream& out) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) out << (c ? " " : "") << format_entry(m(r, c));
    out << '\n';
  }
}

void print_walks(const std::vector<Walk>& ws, const Digraph& g, const Options& o,
                 std::ostream& out) {
  if (o.as_json) {
    json arr = json::array();
    for (const auto& w : ws) arr.push_back(format_walk(w, g));
    out << arr.dump() << '\n';
    return;
  }
  for (const auto& w : ws) out << format_walk(w, g) << '\n';
}

json annotate_json(const SyntaxTree& t, const Digraph& g, const Signature& k,
                   const LocalDepths& depths, const NodePath& path) {
  json hedges = json::array();
  for (std::size_t hi = 0; hi < t.hedges.size(); ++hi) {
    json children = json::array();
    for (std::size_t j = 0; j < t.hedges[hi].size(); ++j) {
      NodePath child = path;
      child.emplace_back(hi, j);
      children.push_back(annotate_json(t.hedges[hi][j], g, k, depths, child));
    }
    hedges.push_back({{"vertex", g.label(t.hedges[hi].front().root.head())}, {"children", children}});
  }
  json node{{"contents", format_walk(t.root, g)}, {"local_depth", depths.at(path)}};
  if (!path.empty()) node["resummable"] = is_structured_node(t, k, depths.at(path));
  node["hedges"] = hedges;
  return node;
}

void annotate_text(const SyntaxTree& t, const Digraph& g, const Signature& k,
                   const LocalDepths& depths, const NodePath& path, std::ostream& out) {
  out << std::string(2 * path.size(), ' ') << format_walk(t.root, g);
  if (path.empty()) {
    out << "  root\n";
  } else {
    const std::size_t d = depths.at(path);
    out << "  depth=" << d << (is_structured_node(t, k, d) ? "  resummable" : "") << '\n';
  }
  for (std::size_t hi = 0; hi < t.hedges.size(); ++hi)
    for (std::size_t j = 0; j < t.hedges[hi].size(); ++j) {
      NodePath child = path;
      child.emplace_back(hi, j);
      annotate_text(t.hedges[hi][j], g, k, depths, child, out);
    }
}

int dispatch(const std::string& cmd, const Options& o, std::ostream& out, std::ostream& err) {
  std::optional<Digraph> slot;
  if (cmd == "factor") {
    const Digraph g = resolve_graph(o);
    const Walk w = read_walk(o.walks.at(0), g);
    if (w.is_zero()) throw DomainError("cannot factorize the zero walk");
    const SyntaxTree t = prime_factorize(w);
    if (o.dot) {
      out << tree_to_dot(t, g);
    } else if (o.as_json) {
      out << tree_to_json(t, g).dump() << '\n';
    } else {
      out << format_tree(t, g) << '\n';
    }
    return 0;
  }
  if (cmd == "nest") {
    const Digraph g = resolve_graph(o);
    Walk acc = parse_walk(o.walks.at(0), g);
    for (std::size_t i = 1; i < o.walks.size(); ++i) acc = nest(acc, parse_walk(o.walks[i], g));
    out << format_walk(acc, g) << '\n';
    return 0;
  }
  if (cmd == "reduce" || cmd == "annotate") {
    const Digraph g = resolve_graph(o);
    const Signature k = Signature::parse(o.signature);
    const Walk w = read_walk(o.walks.at(0), g);
    if (w.is_zero()) throw DomainError("cannot reduce the zero walk");
    if (cmd == "reduce") {
      const Walk r = o.level ? cycle_reduce(w, k, *o.level) : walk_reduce(w, k);
      out << format_walk(r, g) << '\n';
      return 0;
    }
    const SyntaxTree t = prime_factorize(w);
    const auto depths = local_depths(t, k);
    if (o.as_json) {
      out << annotate_json(t, g, k, depths, {}).dump() << '\n';
    } else {
      annotate_text(t, g, k, depths, {}, out);
    }
    return 0;
  }
  if (cmd == "enumerate") {
    const Digraph& g = need_graph(o, slot);
    const std::size_t max_len = need_max_len(o);
    if (o.from.empty()) throw UsageError("enumerate needs --from");
    const Vertex a = g.index_of(o.from);
    const Signature k = Signature::parse(o.signature);
    if (o.kind == "cycles") {
      print_walks(irreducible_cycles(g, a, k, o.level.value_or(0), max_len), g, o, out);
      return 0;
    }
    if (o.to.empty()) throw UsageError("enumerate " + o.kind + " needs --to");
    const Vertex b = g.index_of(o.to);
    print_walks(o.kind == "walks" ? all_walks(g, a, b, max_len)
                                  : irreducible_walks(g, a, b, k, max_len),
                g, o, out);
    return 0;
  }
  if (cmd == "dress") {
    const Digraph& g = need_graph(o, slot);
    const std::size_t max_len = need_max_len(o);
    const Signature k = Signature::parse(o.signature);
    const Walk w = read_walk(o.walks.at(0), g);
    print_walks(o.level ? cycle_dress(w, k, *o.level, g, max_len) : walk_dress(w, k, g, max_len),
                g, o, out);
    return 0;
  }
  if (cmd == "partition-check") {
    const Digraph& g = need_graph(o, slot);
    const auto report = partition_check(g, Signature::parse(o.signature), need_max_len(o));
    json j{{"walk_count", report.walk_count},
           {"class_count", report.class_count},
           {"violations", report.violations}};
    out << j.dump(2) << '\n';
    return report.violations.empty() ? 0 : 2;
  }
  if (cmd == "kmax") {
    out << kmax(need_graph(o, slot)).to_string() << '\n';
    return 0;
  }
  if (cmd == "walksum") {
    if (o.graph_file.empty()) throw UsageError("walksum needs --graph");
    if (o.from.empty() || o.to.empty()) throw UsageError("walksum needs --from and --to");
    const WeightedDigraph wg = load_graph(o.graph_file).weighted();
    const Vertex a = wg.graph().index_of(o.from);
    const Vertex b = wg.graph().index_of(o.to);
    const double rho = spectral_radius(wg);
    if (rho >= 1.0)
      err << "warning: spectral radius " << rho << " >= 1; the walk series diverges\n";
    Matrix value;
    std::size_t terms = 0;
    if (o.mode == "resummed") {
      const Signature k = Signature::parse(o.signature);
      if (!o.max_len && !dominates(k, kmax(wg.graph())))
        throw UsageError("resummed mode needs --max-len unless the signature covers kmax");
      auto r = resummed_walk_sum(wg, a, b, k, o.max_len.value_or(0));
      value = std::move(r.value);
      terms = r.terms;
    } else if (o.mode == "truncated") {
      value = truncated_walk_sum(wg, a, b, need_max_len(o));
      terms = *o.max_len + 1;
    } else {
      value = resolvent_entry(wg, a, b);
      terms = 1;
    }
    if (o.as_json) {
      json j{{"value", matrix_to_json(value)},
             {"diagnostics", {{"mode", o.mode}, {"spectral_radius", rho}, {"terms", terms}}}};
      out << j.dump() << '\n';
    } else {
      print_matrix(value, out);
      out << "# spectral radius " << rho << ", terms " << terms << '\n';
    }
    return 0;
  }
  throw UsageError("unknown command");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Walk factorization, reduction, dressing and resummed walk sums"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--graph", o.graph_file, "JSON graph file");
  app.add_flag("--json", o.as_json, "machine-readable output");

  auto sig = [&](CLI::App* s) { s->add_option("--signature", o.signature, "e.g. 3,2,0"); };
  auto len = [&](CLI::App* s) { s->add_option("--max-len", o.max_len, "length bound"); };
  auto lvl = [&](CLI::App* s) { s->add_option("--level", o.level, "cycle level l"); };

  auto* factor = app.add_subcommand("factor", "prime factorization of a walk");
  factor->add_option("walk", o.walks)->required()->expected(1);
  factor->add_flag("--dot", o.dot, "emit Graphviz DOT");

  auto* nest_cmd = app.add_subcommand("nest", "nest walks left to right");
  nest_cmd->add_option("walks", o.walks)->required()->expected(2, 1 << 20);

  auto* reduce = app.add_subcommand("reduce", "reduce a walk (or a cycle with --level)");
  reduce->add_option("walk", o.walks)->required()->expected(1);
  sig(reduce);
  lvl(reduce);

  auto* annotate = app.add_subcommand("annotate", "local depths and resummable cycles");
  annotate->add_option("walk", o.walks)->required()->expected(1);
  sig(annotate);

  auto* enumerate = app.add_subcommand("enumerate", "list walks, irreducible walks or cycles");
  enumerate->add_option("kind", o.kind)->required()->check(
      CLI::IsMember({"walks", "irreducible", "cycles"}));
  enumerate->add_option("--from", o.from);
  enumerate->add_option("--to", o.to);
  sig(enumerate);
  len(enumerate);
  lvl(enumerate);

  auto* dress = app.add_subcommand("dress", "dress an irreducible walk (or cycle with --level)");
  dress->add_option("walk", o.walks)->required()->expected(1);
  sig(dress);
  len(dress);
  lvl(dress);

  auto* pcheck = app.add_subcommand("partition-check", "verify the walk partition");
  sig(pcheck);
  len(pcheck);

  app.add_subcommand("kmax", "least signature structuring every cycle");

  auto* wsum = app.add_subcommand("walksum", "sum of walk weights");
  wsum->add_option("--from", o.from);
  wsum->add_option("--to", o.to);
  wsum->add_option("--mode", o.mode)->check(CLI::IsMember({"resummed", "truncated", "inverse"}));
  sig(wsum);
  len(wsum);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return dispatch(cmd, o, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace walkpart
