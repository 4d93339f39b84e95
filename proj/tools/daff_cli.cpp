#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "daff/bruhat.hpp"
#include "daff/element_io.hpp"
#include "daff/error.hpp"
#include "selftest.hpp"

using json = nlohmann::ordered_json;
using namespace daff;

namespace {

struct Globals {
  std::string type = "A";
  int rank = 2;
  std::string format = "text";
  std::uint64_t seed = 1;
  Int cap = 1'000'000;
  std::string out_path;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

json root_json(const DoubleAffineRoot& a) {
  return json::array({a.nu.coords(), a.r, a.j});
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

const RootSystem& system_of(const Globals& g) {
  if (g.type.size() != 1) throw DomainError("type must be a single letter A, D or E");
  return *RootSystem::build(static_cast<char>(std::toupper(g.type[0])), g.rank);
}

void require_format(const Globals& g, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (g.format == f) return;
  throw UsageError("format '" + g.format + "' is not available for this command");
}

template <class T>
void sort_by_length_and_text(std::vector<T>& items) {
  std::stable_sort(items.begin(), items.end(), [](const T& a, const T& b) {
    return std::tie(a.length, a.text) < std::tie(b.length, b.text);
  });
}

struct Row {
  Int length;
  std::string text;
  DoubleAffineRoot root;
  std::optional<CocoverDescriptor> descriptor;
};

void emit_rows(const Globals& g, std::ostream& out, const SemigroupElement& x,
               std::vector<Row> rows, const char* key) {
  require_format(g, {"text", "json"});
  sort_by_length_and_text(rows);
  if (g.format == "json") {
    json list = json::array();
    for (const auto& r : rows) {
      json item{{"root", root_json(r.root)}, {"element", r.text}, {"length", r.length}};
      if (r.descriptor) {
        item["case"] = r.descriptor->case_id;
        item["j"] = r.descriptor->j;
        item["alpha_tilde"] = json::array(
            {r.descriptor->alpha_tilde.nu.coords(), r.descriptor->alpha_tilde.r});
      }
      list.push_back(item);
    }
    out << json{{"element", format_element(x)}, {"length", daff_length(x)}, {key, list}}.dump(2)
        << '\n';
    return;
  }
  for (const auto& r : rows) {
    out << format_root(r.root) << '\t' << r.text << '\t' << r.length;
    if (r.descriptor) out << "\tcase " << r.descriptor->case_id;
    out << '\n';
  }
}

void cmd_len(const Globals& g, std::ostream& out, const std::string& elt) {
  require_format(g, {"text", "json"});
  SemigroupElement x = parse_element(system_of(g), elt);
  LengthBreakdown b = daff_length_breakdown(x);
  if (g.format == "json")
    out << json{{"element", format_element(x)}, {"length", b.total()}, {"big", b.big},
                {"small", b.small}}
               .dump(2)
        << '\n';
  else
    out << b.total() << '\n';
}

void cmd_ldset(const Globals& g, std::ostream& out, const std::string& elt,
               const std::string& root) {
  require_format(g, {"text", "json"});
  const RootSystem& sys = system_of(g);
  SemigroupElement x = parse_element(sys, elt);
  DoubleAffineRoot alpha = parse_root(sys, root);
  auto set = length_diff_set(x, alpha, BruhatOptions{g.cap});
  if (g.format == "json") {
    json roots = json::array();
    for (const auto& b : set) roots.push_back(root_json(b));
    out << json{{"element", format_element(x)},
                {"alpha", root_json(alpha)},
                {"length", daff_length(x)},
                {"reflected_length", daff_length(apply_reflection_left(alpha, x))},
                {"size", set.size()},
                {"roots", roots}}
               .dump(2)
        << '\n';
    return;
  }
  for (const auto& b : set) out << format_root(b) << '\n';
}

void cmd_cocovers(const Globals& g, std::ostream& out, const std::string& elt) {
  SemigroupElement x = parse_element(system_of(g), elt);
  std::vector<Row> rows;
  for (auto& c : cocovers(x))
    rows.push_back({daff_length(c.y), format_element(c.y), c.alpha, c.descriptor});
  emit_rows(g, out, x, std::move(rows), "cocovers");
}

void cmd_covers(const Globals& g, std::ostream& out, const std::string& elt) {
  SemigroupElement x = parse_element(system_of(g), elt);
  std::vector<Row> rows;
  for (auto& c : covers(x, BruhatOptions{g.cap}))
    rows.push_back({daff_length(c.y), format_element(c.y), c.beta, std::nullopt});
  emit_rows(g, out, x, std::move(rows), "covers");
}

void cmd_leq(const Globals& g, std::ostream& out, const std::string& a, const std::string& b) {
  require_format(g, {"text", "json"});
  const RootSystem& sys = system_of(g);
  SemigroupElement y = parse_element(sys, a);
  SemigroupElement x = parse_element(sys, b);
  bool result = is_leq(y, x);
  if (g.format == "json")
    out << json{{"lower", format_element(y)}, {"upper", format_element(x)}, {"leq", result}}
               .dump(2)
        << '\n';
  else
    out << (result ? "true" : "false") << '\n';
}

void cmd_interval(const Globals& g, std::ostream& out, const std::string& a,
                  const std::string& b) {
  const RootSystem& sys = system_of(g);
  SemigroupElement y = parse_element(sys, a);
  SemigroupElement x = parse_element(sys, b);
  Interval in = interval(y, x, BruhatOptions{g.cap});
  std::vector<std::string> text;
  for (const auto& e : in.elements) text.push_back(format_element(e));
  // Reorder by (length, canonical text).
  std::vector<std::size_t> order(in.elements.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t p, std::size_t q) {
    return std::tie(in.lengths[p], text[p]) < std::tie(in.lengths[q], text[q]);
  });
  std::vector<std::size_t> rank_of(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) rank_of[order[k]] = k;
  std::vector<std::tuple<std::size_t, std::size_t, std::string>> edges;
  for (const auto& e : in.edges)
    edges.emplace_back(rank_of[e.upper], rank_of[e.lower], format_root(e.alpha));
  std::sort(edges.begin(), edges.end());

  if (g.format == "json") {
    json elements = json::array();
    for (std::size_t k : order)
      elements.push_back({{"element", text[k]}, {"length", in.lengths[k]}});
    json je = json::array();
    for (const auto& [u, l, r] : edges) je.push_back({{"upper", u}, {"lower", l}, {"root", r}});
    out << json{{"lower", format_element(y)},
                {"upper", format_element(x)},
                {"size", in.elements.size()},
                {"elements", elements},
                {"edges", je}}
               .dump(2)
        << '\n';
  } else if (g.format == "dot") {
    out << "digraph interval {\n  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n";
    for (std::size_t k = 0; k < order.size(); ++k)
      out << "  n" << k << " [label=\"" << dot_escape(text[order[k]]) << "\\nl = "
          << in.lengths[order[k]] << "\"];\n";
    for (const auto& [u, l, r] : edges)
      out << "  n" << l << " -> n" << u << " [label=\"" << dot_escape(r) << "\"];\n";
    out << "}\n";
  } else {
    for (std::size_t k : order) out << in.lengths[k] << '\t' << text[k] << '\n';
  }
}

void cmd_graph(const Globals& g, std::ostream& out, const std::string& elt,
               const std::string& nu_text, const std::vector<Int>& window) {
  const RootSystem& sys = system_of(g);
  SemigroupElement x = parse_element(sys, elt);
  FiniteRoot nu = FiniteRoot::from_coords(sys, parse_intvec(sys, nu_text));
  if (window.size() != 4) throw UsageError("--window takes R0 R1 J0 J1");
  const Int r0 = window[0], r1 = window[1], j0 = window[2], j1 = window[3];
  if (r0 > r1 || j0 > j1) throw UsageError("--window bounds are reversed");
  if ((r1 - r0 + 1) * (j1 - j0 + 1) > g.cap) throw InternalError("window exceeds --cap");
  LowerGraph shape = gamma_shape(x, nu);
  auto corner_list = corners(x, nu);
  auto is_corner_point = [&](Int r, Int j) {
    return std::find(corner_list.begin(), corner_list.end(), DoubleAffineRoot{nu, r, j}) !=
           corner_list.end();
  };

  if (g.format == "json") {
    json points = json::array();
    for (Int j = j0; j <= j1; ++j)
      for (Int r = r0; r <= r1; ++r)
        if (gamma_contains(x, nu, r, j)) points.push_back(json::array({r, j}));
    json cs = json::array();
    for (const auto& c : corner_list) cs.push_back(root_json(c));
    out << json{{"element", format_element(x)},
                {"nu", nu.coords()},
                {"shape", shape.shape_name()},
                {"boundary_at_zero", shape.b},
                {"slope", -shape.level},
                {"window", window},
                {"points", points},
                {"corners", cs}}
               .dump(2)
        << '\n';
  } else if (g.format == "dot") {
    out << "graph lower_graph {\n  node [shape=circle, width=0.2, fixedsize=true, label=\"\"];\n";
    for (Int j = j0; j <= j1; ++j)
      for (Int r = r0; r <= r1; ++r) {
        bool in = gamma_contains(x, nu, r, j);
        out << "  \"" << r << "," << j << "\" [pos=\"" << r << "," << j << "!\"";
        if (in) out << ", style=filled, fillcolor=" << (is_corner_point(r, j) ? "red" : "black");
        out << "];\n";
      }
    out << "}\n";
  } else {
    out << "shape " << shape.shape_name() << '\n';
    for (Int j = j1; j >= j0; --j) {
      out << (j < 10 && j >= 0 ? " " : "") << j << ' ';
      for (Int r = r0; r <= r1; ++r)
        out << (gamma_contains(x, nu, r, j) ? (is_corner_point(r, j) ? '*' : '#') : '.');
      out << '\n';
    }
    out << "corners";
    for (const auto& c : corner_list) out << ' ' << format_root(c);
    out << '\n';
  }
}

void cmd_qbg(const Globals& g, std::ostream& out, int radius) {
  const RootSystem& sys = system_of(g);
  if (radius < 0) throw UsageError("--radius must be non-negative");
  auto edges = local_qbg(sys, radius);
  auto kind_name = [](QbgKind k) { return k == QbgKind::kBruhat ? "bruhat" : "quantum"; };
  std::vector<std::tuple<std::string, std::string, std::string, std::string>> rows;
  for (const auto& e : edges)
    rows.emplace_back(format_affine_element(e.source), format_affine_element(e.target),
                      format_affine_root(e.label), kind_name(e.kind));
  std::sort(rows.begin(), rows.end());
  if (g.format == "json") {
    json list = json::array();
    for (const auto& [s, t, l, k] : rows)
      list.push_back({{"source", s}, {"target", t}, {"label", l}, {"kind", k}});
    out << json{{"type", sys.label()}, {"radius", radius}, {"edges", list}}.dump(2) << '\n';
  } else if (g.format == "dot") {
    out << "digraph qbg {\n";
    for (const auto& [s, t, l, k] : rows)
      out << "  \"" << s << "\" -> \"" << t << "\" [label=\"" << l << "\""
          << (k == "quantum" ? ", style=dashed" : "") << "];\n";
    out << "}\n";
  } else {
    for (const auto& [s, t, l, k] : rows)
      out << s << " -> " << t << '\t' << l << '\t' << k << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Computations in the double affine Weyl semigroup of a simply-laced root system"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--type", g.type, "Dynkin type: A, D or E")->capture_default_str();
  app.add_option("--rank", g.rank, "Rank of the finite root system")->capture_default_str();
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "dot"}))
      ->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for randomized self-tests")->capture_default_str();
  app.add_option("--cap", g.cap, "Safety cap on enumerated points")->capture_default_str();
  app.add_option("--out", g.out_path, "Write output to this file instead of stdout");
  app.fallthrough();

  std::string e1, e2, root_text, nu_text;
  std::vector<Int> window;
  int radius = 2;

  auto* len = app.add_subcommand("len", "Length of an element");
  len->add_option("element", e1)->required();
  auto* ldset = app.add_subcommand("ldset", "Length difference set of (x, alpha)");
  ldset->add_option("element", e1)->required();
  ldset->add_option("root", root_text)->required();
  auto* cocov = app.add_subcommand("cocovers", "All cocovers s_alpha x of x");
  cocov->add_option("element", e1)->required();
  auto* cov = app.add_subcommand("covers", "All covers s_beta x of x");
  cov->add_option("element", e1)->required();
  auto* leq = app.add_subcommand("leq", "Whether the first element is below the second");
  leq->add_option("lower", e1)->required();
  leq->add_option("upper", e2)->required();
  auto* intv = app.add_subcommand("interval", "Bruhat interval [lower, upper]");
  intv->add_option("lower", e1)->required();
  intv->add_option("upper", e2)->required();
  auto* graph = app.add_subcommand("graph", "Lower graph of x for a finite root");
  graph->add_option("element", e1)->required();
  graph->add_option("--nu", nu_text, "Finite root in simple-root coordinates")->required();
  graph->add_option("--window", window, "R0 R1 J0 J1")->expected(4)->required();
  auto* qbg = app.add_subcommand("qbg", "Quantum Bruhat graph near the identity");
  qbg->add_option("--radius", radius, "Length radius")->capture_default_str();
  auto* selftest = app.add_subcommand("selftest", "Check fast algorithms against brute force");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  std::ostringstream buffer;
  try {
    if (*len) cmd_len(g, buffer, e1);
    if (*ldset) cmd_ldset(g, buffer, e1, root_text);
    if (*cocov) cmd_cocovers(g, buffer, e1);
    if (*cov) cmd_covers(g, buffer, e1);
    if (*leq) cmd_leq(g, buffer, e1, e2);
    if (*intv) cmd_interval(g, buffer, e1, e2);
    if (*graph) cmd_graph(g, buffer, e1, nu_text, window);
    if (*qbg) cmd_qbg(g, buffer, radius);
    if (*selftest) {
      require_format(g, {"text"});
      int bad = daff::cli::run_selftest(g.seed, buffer);
      std::cout << buffer.str();
      return bad ? 3 : 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 1;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }

  if (g.out_path.empty()) {
    std::cout << buffer.str();
  } else {
    std::ofstream file(g.out_path);
    if (!file) {
      std::cerr << "cannot open " << g.out_path << '\n';
      return 1;
    }
    file << buffer.str();
  }
  return 0;
}
