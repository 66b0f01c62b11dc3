#include "splitgraph/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <fstream>
#include <iostream>
#include <sstream>

#include "splitgraph/errors.hpp"
#include "splitgraph/kirchhoff.hpp"
#include "splitgraph/splitting.hpp"
#include "splitgraph/structure.hpp"

namespace splitgraph {

using Json = nlohmann::ordered_json;

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string t; std::getline(ss, t, ',');) {
    t = trim(t);
    if (!t.empty()) out.push_back(t);
  }
  return out;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : sep) + x;
  return out;
}

std::vector<std::string> to_vec(const EdgeSet& s) { return {s.begin(), s.end()}; }

std::string set_text(const EdgeSet& s) { return "{" + join(to_vec(s), ",") + "}"; }

}  // namespace

Multigraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::vector<Edge> edges;
  VertexSet vertices;
  std::set<Label> labels;
  int lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.rfind("vertices:", 0) == 0) {
      for (const auto& v : split_ws(line.substr(9))) vertices.insert(v);
      continue;
    }
    auto toks = split_ws(line);
    if (toks.size() != 3)
      throw Error("line " + std::to_string(lineno) + ": expected '<label> <u> <v>', got '" + line + "'");
    if (toks[0].find(':') != std::string::npos)
      throw Error("line " + std::to_string(lineno) + ": unknown header '" + toks[0] + "'");
    if (!labels.insert(toks[0]).second)
      throw Error("line " + std::to_string(lineno) + ": duplicate edge label '" + toks[0] + "'");
    edges.push_back(Edge{toks[0], toks[1], toks[2]});
    vertices.insert(toks[1]);
    vertices.insert(toks[2]);
  }
  return Multigraph(std::vector<Vertex>(vertices.begin(), vertices.end()), edges);
}

std::string print_graph(const Multigraph& g) {
  std::ostringstream os;
  VertexSet touched;
  for (const Edge& e : g.edges()) touched.insert(e.u), touched.insert(e.v);
  if (touched.size() != g.num_vertices()) {
    os << "vertices:";
    for (const Vertex& v : g.vertices()) os << ' ' << v;
    os << '\n';
  }
  for (const Edge& e : g.edges()) os << e.label << ' ' << e.u << ' ' << e.v << '\n';
  return os.str();
}

Multigraph load_graph(const std::string& source) {
  if (source.rfind("builtin:", 0) == 0) {
    std::string rest = source.substr(8);
    auto colon = rest.find(':');
    if (colon == std::string::npos) return builtin(rest);
    std::string k = rest.substr(colon + 1);
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(k, &used);
      if (used != k.size()) throw std::invalid_argument(k);
    } catch (const std::exception&) {
      throw Error("bad builtin parameter '" + k + "'");
    }
    return builtin(rest.substr(0, colon), n);
  }
  std::ifstream in(source);
  if (!in) throw Error("cannot open '" + source + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_graph(ss.str());
  } catch (const Error& e) {
    throw Error(source + ": " + e.what());
  }
}

namespace {

// ---- report rendering ------------------------------------------------------

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_null()) return "none";
  if (v.is_array()) {
    std::vector<std::string> parts;
    for (const auto& x : v) parts.push_back(scalar_text(x));
    return join(parts, ",");
  }
  if (v.is_object()) {
    std::vector<std::string> parts;
    for (const auto& [k, x] : v.items()) parts.push_back(k + "=" + scalar_text(x));
    return join(parts, " ");
  }
  return v.dump();
}

bool is_flat(const Json& v) {
  if (!v.is_array()) return !v.is_object();
  for (const auto& x : v)
    if (x.is_array() || x.is_object()) return false;
  return true;
}

void render_text(const Json& obj, std::ostream& out, const std::string& indent) {
  for (const auto& [k, v] : obj.items()) {
    if (is_flat(v)) {
      out << indent << k << ": " << scalar_text(v) << '\n';
    } else if (v.is_object()) {
      out << indent << k << ":\n";
      render_text(v, out, indent + "  ");
    } else {
      out << indent << k << ":\n";
      for (const auto& x : v) out << indent << "  " << scalar_text(x) << '\n';
    }
  }
}

Json fixture_json(const Multigraph& g) {
  IncidenceFixture fx(g);
  Json f;
  f["vertex-order"] = fx.vertex_order;
  f["deleted-vertex"] = fx.deleted_vertex;
  f["edge-order"] = fx.edge_order;
  return f;
}

Json config_json(const SplitReport& r) {
  Json j;
  j["configuration"] = to_vec(r.configuration);
  j["splits"] = r.splits;
  j["shortcut"] = shortcut_name(r.shortcut);
  j["witness"] = r.witness ? Json(r.witness->to_string()) : Json();
  return j;
}

Json graph_json(const Multigraph& g) {
  Json es = Json::array();
  for (const Edge& e : g.edges()) es.push_back(e.label + " " + e.u + " " + e.v);
  return es;
}

struct Context {
  std::string format = "text";
  std::ostream* out = nullptr;
};

void emit(const Context& cx, const std::string& command, const std::string& source, const Multigraph* g, Json body) {
  Json r;
  r["format-version"] = kFormatVersion;
  r["command"] = command;
  if (!source.empty()) r["graph"] = source;
  if (g) r["fixture"] = fixture_json(*g);
  for (auto& [k, v] : body.items()) r[k] = v;
  if (cx.format == "json") {
    *cx.out << r.dump(2) << '\n';
  } else {
    render_text(r, *cx.out, "");
  }
}

// Graph-valued results stay loadable as graph files: headers become comments.
void emit_graph(const Context& cx, const std::string& command, const std::string& source, const Multigraph& g) {
  if (cx.format == "json") {
    Json body;
    body["edges"] = graph_json(g);
    body["vertices"] = g.vertices();
    emit(cx, command, source, &g, body);
    return;
  }
  Json r;
  r["format-version"] = kFormatVersion;
  r["command"] = command;
  if (!source.empty()) r["graph"] = source;
  r["fixture"] = fixture_json(g);
  std::ostringstream head;
  render_text(r, head, "");
  std::istringstream lines(head.str());
  for (std::string l; std::getline(lines, l);) *cx.out << "# " << l << '\n';
  *cx.out << print_graph(g);
}

std::array<Label, 5> five_labels(const std::vector<std::string>& v) {
  if (v.size() != 5) throw Error("expected five edges, got " + std::to_string(v.size()));
  return {v[0], v[1], v[2], v[3], v[4]};
}

EdgeSet edge_set(const std::vector<std::string>& v) { return EdgeSet(v.begin(), v.end()); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kirchhoff and Dodgson polynomials, splitting and forbidden minors of multigraphs", "splitgraph"};
  app.require_subcommand(1);
  app.fallthrough();
  Context cx;
  cx.out = &out;
  app.add_option("--format", cx.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  unsigned jobs = 0;
  app.add_option("--jobs", jobs, "worker threads for sweeps (0 = all cores)");

  std::string file;
  auto add_file = [&](CLI::App* sub) { sub->add_option("FILE", file, "graph file or builtin:NAME[:K]")->required(); };

  auto* psi = app.add_subcommand("psi", "Kirchhoff polynomial");
  add_file(psi);

  auto* dod = app.add_subcommand("dodgson", "Dodgson polynomial");
  add_file(dod);
  std::string opt_i, opt_j, opt_k;
  dod->add_option("--I", opt_i, "comma-separated edges");
  dod->add_option("--J", opt_j, "comma-separated edges");
  dod->add_option("--K", opt_k, "comma-separated edges");

  auto* five = app.add_subcommand("five-inv", "five-invariant of an ordered 5-configuration");
  add_file(five);
  std::vector<std::string> five_edges;
  five->add_option("EDGES", five_edges, "five edge labels")->required()->expected(5);

  auto* split = app.add_subcommand("split", "splitting verdicts");
  add_file(split);
  std::string config;
  bool check = false, exhaustive = false;
  split->add_option("--config", config, "comma-separated 5-configuration");
  split->add_flag("--check", check, "re-verify shortcut verdicts by the full Dodgson scan");
  split->add_flag("--exhaustive", exhaustive, "skip structural shortcuts");

  auto* nsc = app.add_subcommand("nonsplit-configs", "non-splitting 5-configurations and their orbits");
  add_file(nsc);

  auto* mm = app.add_subcommand("minor-minimal", "minor-minimality of a non-splitting graph");
  add_file(mm);

  auto* scan = app.add_subcommand("scan-minors", "scan for K5, K33, O, H, C minors");
  add_file(scan);

  auto* dy = app.add_subcommand("dy-family", "delta-wye family closure");
  add_file(dy);
  std::size_t cap = 5000;
  dy->add_option("--cap", cap, "closure size cap");

  auto* dual = app.add_subcommand("dual", "planar dual");
  add_file(dual);

  auto* pd = app.add_subcommand("primdiv", "primitive divergence");
  add_file(pd);

  auto* den = app.add_subcommand("denred", "denominator reduction trace");
  add_file(den);
  std::string order;
  den->add_option("--order", order, "comma-separated order of every edge")->required();

  auto* bi = app.add_subcommand("builtin", "print a named graph");
  std::string name;
  int param = -1;
  bi->add_option("NAME", name)->required();
  bi->add_option("--n", param, "family parameter");

  auto* ord = app.add_subcommand("ordering", "three-cut edge ordering");
  add_file(ord);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    if (app.get_subcommands().empty()) {
      for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--format" || args[i] == "--jobs") {
          ++i;
          continue;
        }
        if (args[i].rfind("-", 0) != 0) {
          err << "error: unknown command '" << args[i] << "'\n";
          return 1;
        }
      }
    }
    err << "error: " << e.what() << '\n';
    return 1;
  }

  SplitOptions sopt;
  sopt.jobs = jobs;

  try {
    if (*bi) {
      emit_graph(cx, "builtin", "builtin:" + name + (param >= 0 ? ":" + std::to_string(param) : ""), builtin(name, param));
      return 0;
    }
    Multigraph g = load_graph(file);
    Json body;
    if (*psi) {
      body["psi"] = kirchhoff_poly(g).to_string();
      emit(cx, "psi", file, &g, body);
    } else if (*dod) {
      DodgsonSpec spec{edge_set(split_commas(opt_i)), edge_set(split_commas(opt_j)), edge_set(split_commas(opt_k))};
      IncidenceFixture fx(g);
      body["spec"] = spec.to_string();
      body["dodgson"] = dodgson(fx, spec).to_string();
      emit(cx, "dodgson", file, &g, body);
    } else if (*five) {
      IncidenceFixture fx(g);
      auto e = five_labels(five_edges);
      Polynomial raw = five_invariant_raw(fx, e);
      Polynomial norm = normalize_sign(raw);
      body["edges"] = five_edges;
      body["five-invariant-raw"] = raw.to_string();
      body["five-invariant"] = norm.to_string();
      body["linear-in-every-variable"] = norm.is_linear_in_every_variable();
      emit(cx, "five-inv", file, &g, body);
    } else if (*split) {
      sopt.check = check;
      sopt.use_shortcuts = !exhaustive;
      if (!config.empty()) {
        body = config_json(config_splits(g, edge_set(split_commas(config)), sopt));
      } else {
        auto reports = sweep_configurations(g, sopt);
        std::size_t ns = 0;
        std::map<std::string, std::size_t> tally;
        for (const auto& r : reports) {
          ns += !r.splits;
          if (r.splits) ++tally[shortcut_name(r.shortcut)];
        }
        body["summary"] = std::to_string(ns) + " non-splitting / " + std::to_string(reports.size() - ns) +
                          " splitting of " + std::to_string(reports.size());
        body["non-splitting"] = ns;
        body["splitting"] = reports.size() - ns;
        body["configurations"] = reports.size();
        body["graph-splits"] = ns == 0;
        Json t;
        for (const char* k : {"small-edge-cut-in-S", "small-cycle-in-S", "two-cut-distribution",
                              "three-cut-distribution", "none"})
          t[k] = tally[k];
        body["splitting-by-shortcut"] = t;
      }
      emit(cx, "split", file, &g, body);
    } else if (*nsc) {
      auto ns = nonsplitting_configs(g, sopt);
      auto orbits = configuration_orbits(g, ns);
      body["count"] = ns.size();
      body["orbits"] = orbits.size();
      Json list = Json::array();
      for (const auto& s : ns) list.push_back(set_text(s));
      body["configurations"] = list;
      Json reps = Json::array();
      for (const auto& o : orbits) reps.push_back(set_text(o.front()) + " size=" + std::to_string(o.size()));
      body["orbit-representatives"] = reps;
      emit(cx, "nonsplit-configs", file, &g, body);
    } else if (*mm) {
      MinimalityReport r = is_minor_minimal_nonsplitting(g, sopt);
      body["minimal"] = r.minimal;
      body["non-splitting-configurations"] = r.nonsplitting.size();
      Json per = Json::array();
      for (const auto& e : r.per_edge) {
        Json x;
        x["edge"] = e.edge;
        x["deletion-splits"] = e.deletion_splits;
        x["contraction-splits"] = e.contraction_splits;
        per.push_back(x);
      }
      body["per-edge"] = per;
      body["reducible-via"] = r.reducible_via ? Json(r.reducible_via->second + " " + r.reducible_via->first) : Json();
      emit(cx, "minor-minimal", file, &g, body);
    } else if (*scan) {
      body["minors"] = forbidden_minor_scan(g);
      emit(cx, "scan-minors", file, &g, body);
    } else if (*dy) {
      auto fam = delta_y_family(g, cap);
      body["members"] = fam.size();
      Json list = Json::array();
      for (const auto& [form, h] : fam) {
        std::vector<std::string> es;
        for (const Edge& e : h.edges()) es.push_back(e.u + "-" + e.v);
        list.push_back(join(es, " "));
      }
      body["family"] = list;
      emit(cx, "dy-family", file, &g, body);
    } else if (*dual) {
      emit_graph(cx, "dual", file, planar_dual(g));
    } else if (*pd) {
      PrimitiveDivergence r = primitive_divergent(g);
      body["primitive-divergent"] = r.divergent;
      body["reason"] = r.divergent ? Json() : Json(r.reason);
      body["violation"] = r.violation ? graph_json(*r.violation) : Json();
      emit(cx, "primdiv", file, &g, body);
    } else if (*den) {
      ReductionTrace t = denominator_reduce(g, split_commas(order));
      Json steps = Json::array();
      for (const auto& s : t.steps) {
        Json x;
        x["n"] = s.index;
        x["variable"] = s.variable.empty() ? Json() : Json(s.variable);
        x["skipped"] = s.skipped;
        x["value"] = s.value.to_string();
        steps.push_back(x);
      }
      body["steps"] = steps;
      body["status"] = status_name(t.status);
      body["stop-index"] = t.stop_index;
      emit(cx, "denred", file, &g, body);
    } else if (*ord) {
      EdgeOrdering r = three_cut_edge_ordering(g);
      body["ordering"] = r.order ? Json(*r.order) : Json();
      body["verified"] = r.order && verify_three_cut_ordering(g, *r.order);
      body["diagnostics"] = r.diagnostics;
      emit(cx, "ordering", file, &g, body);
    }
  } catch (const FamilyCapError& e) {
    err << "error: " << e.what() << " (" << e.partial.size() << " members found)\n";
    return 2;
  } catch (const ScaleError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace splitgraph
