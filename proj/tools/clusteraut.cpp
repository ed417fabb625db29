// clusteraut: command-line front end.
//
// Every command takes one input: a file path, "-" for stdin, or inline JSON.
// Exit status 0 on success, 1 on a domain error, 2 on a usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "clusteraut/cluster_aut.hpp"
#include "clusteraut/errors.hpp"
#include "clusteraut/gluing.hpp"
#include "clusteraut/json_io.hpp"
#include "clusteraut/surface.hpp"

using namespace clusteraut;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& source) {
  if (source == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (source[first] == '{' || source[first] == '[')) return source;
  std::ifstream in(source);
  if (!in) throw UsageError("cannot read input '" + source + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

std::string cycles(const Permutation& p, const std::vector<std::string>& labels) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += "(";
    for (auto j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      if (j != i) out += " ";
      out += labels[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

std::vector<std::string> vertex_labels(std::size_t count) {
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < count; ++v) labels.push_back(std::to_string(v));
  return labels;
}

Json classes_json(const std::vector<std::vector<std::size_t>>& classes) {
  Json out = Json::array();
  for (const auto& cls : classes) {
    Json c = Json::array();
    for (auto v : cls) c.push_back(v + 1);
    out.push_back(std::move(c));
  }
  return out;
}

AdmissibleWord parse_word(const std::string& text) {
  AdmissibleWord word;
  if (text.empty()) return word;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || value < 1) throw UsageError("--at expects 1-based positions like 1,2 (got '" + item + "')");
    word.push_back(static_cast<std::size_t>(value - 1));
  }
  return word;
}

void print_group_summary(const ClusterAutomorphismGroup& g, const ExchangeGraph& e) {
  auto id = identify_group(g.group());
  auto direct = direct_subgroup(g);
  std::cout << "order: " << g.order() << ", name: " << (id.name.empty() ? "unidentified" : id.name) << "\n";
  std::cout << "invariants: " << GroupIdentity{"", id.order, id.abelian, id.element_orders}.describe() << "\n";
  std::cout << "direct: " << direct.order() << ", opposite: " << g.order() - direct.order()
            << ", index: " << g.order() / direct.order() << "\n";
  const auto n = e.rank();
  const auto& b = e.initial_matrix();
  std::cout << "generators:\n";
  for (auto a : g.group().generating_set()) {
    const auto& f = g.element(a);
    std::cout << "  [" << (f.sign() == 1 ? "direct" : "opposite") << ", target " << f.target_vertex << "] vertices "
              << cycles(f.vertex_perm, vertex_labels(e.size())) << "\n";
    for (std::size_t j = 0; j < b.vertices(); ++j) {
      auto image = j < n ? e.variable(e.cluster(f.target_vertex)[f.sigma.map[j]])
                         : LaurentPolynomial::variable(b.vertices(), f.sigma.map[j]);
      std::cout << "    x" << j + 1 << " -> " << image.to_string() << "\n";
    }
  }
}

int run_mutate(const std::string& input, const std::string& at, const std::string& json_path) {
  auto word = parse_word(at);
  auto seed = apply_word(Seed::initial(matrix_from_json(parse_json(read_input(input)))), word);
  auto text = to_json(seed).dump(2);
  if (!json_path.empty()) write_file(json_path, text + "\n");
  std::cout << text << "\n";
  return 0;
}

int run_graph(const std::string& input, std::size_t cap, const std::string& dot_path, const std::string& json_path,
              bool labels) {
  auto e = ExchangeGraph::enumerate(matrix_from_json(parse_json(read_input(input))), cap);
  auto aut = graph_automorphism_group(e);
  std::cout << "vertices: " << e.size() << "\n";
  std::cout << "edges: " << e.edges().size() << "\n";
  std::cout << "cluster variables: " << e.exchangeable_variable_count() << "\n";
  std::cout << "regular: " << (e.check_structure() ? "yes" : "no") << "\n";
  std::cout << "graph automorphisms: " << aut.order() << ", name: " << identify_group(aut).describe() << "\n";
  if (!dot_path.empty()) write_file(dot_path, to_dot(e, {labels, true, {}}));
  if (!json_path.empty()) write_file(json_path, to_json(e).dump(2) + "\n");
  return 0;
}

int run_autgroup(const std::string& input, std::size_t cap, const std::string& dot_path, const std::string& json_path) {
  auto e = ExchangeGraph::enumerate(matrix_from_json(parse_json(read_input(input))), cap);
  auto g = find_cluster_automorphisms(e);
  print_group_summary(g, e);
  auto embed = embed_into_graph_group(g, e);
  std::cout << "graph group: " << embed.graph_order << ", embedding: "
            << (embed.holds() ? (embed.surjective ? "bijective" : "injective") : "fails") << " (" << embed.explanation
            << ")\n";
  if (!dot_path.empty()) write_file(dot_path, to_dot(e, {false, true, vertex_orbits(g, e.size())}));
  if (!json_path.empty()) {
    Json j;
    j["order"] = g.order();
    j["name"] = identify_group(g.group()).name;
    j["elements"] = Json::array();
    for (const auto& f : g.elements()) {
      Json el;
      el["target_vertex"] = f.target_vertex;
      el["direction"] = f.sign() == 1 ? "direct" : "opposite";
      el["sigma"] = f.sigma.map;
      el["vertex_perm"] = f.vertex_perm;
      el["variable_perm"] = f.variable_perm;
      j["elements"].push_back(std::move(el));
    }
    write_file(json_path, j.dump(2) + "\n");
  }
  return 0;
}

int run_gluing(const std::string& input, const std::string& json_path) {
  auto b = matrix_from_json(parse_json(read_input(input)));
  auto analysis = classify(b);
  auto pgf = prime_gluing_free_quiver(b);
  auto gf = gluing_free_quiver(b);
  Json j;
  j["strict_classes"] = classes_json(analysis.strict_classes);
  j["glue_classes"] = classes_json(analysis.glue_classes);
  j["ratios"] = Json::array();
  for (const auto& rs : analysis.ratios) {
    Json row = Json::array();
    for (const auto& r : rs) row.push_back(std::to_string(r.num) + "/" + std::to_string(r.den));
    j["ratios"].push_back(std::move(row));
  }
  j["gcds"] = analysis.gcds;
  j["gluing_free"] = analysis.gluing_free;
  j["strictly_gluing_free"] = analysis.strictly_gluing_free;
  j["prime"] = analysis.prime;
  j["prime_gluing_free"] = analysis.prime_gluing_free;
  j["prime_gluing_free_quiver"] = to_json(pgf.matrix);
  j["pgf_exponents"] = pgf.exponents;
  j["gluing_free_quiver"] = to_json(gf.matrix);
  Json kept = Json::array();
  for (auto v : gf.kept) kept.push_back(v + 1);
  j["gluing_free_kept"] = std::move(kept);
  auto text = j.dump(2);
  if (!json_path.empty()) write_file(json_path, text + "\n");
  std::cout << text << "\n";
  return 0;
}

int run_specialize(const std::string& from, const std::string& to, const std::string& matrix,
                   std::optional<std::size_t> depth, std::size_t cap) {
  auto b1 = matrix_from_json(parse_json(read_input(from)));
  auto b2 = matrix_from_json(parse_json(read_input(to)));
  auto a = integer_matrix_from_json(parse_json(read_input(matrix)));
  auto r = check_specialization(b1, b2, a, {depth, cap});
  std::cout << "specialization: " << (r.holds ? "holds" : "fails") << "\n";
  std::cout << (depth ? "words checked: " : "seeds checked: ") << r.checked << "\n";
  if (r.counterexample) {
    std::cout << "counterexample word:";
    for (auto i : *r.counterexample) std::cout << " " << i + 1;
    std::cout << (r.counterexample->empty() ? " (initial seed)" : "") << "\n";
  }
  std::cout << "coefficient monomials (words of length <= 2): " << (r.monomials_agree ? "agree" : "differ") << "\n";
  if (r.det) std::cout << "det A: " << r.det->get_str() << "\n";
  return r.holds ? 0 : 1;
}

int run_surface(const std::string& input, std::size_t cap, const std::string& json_path) {
  auto t = triangulation_from_json(parse_json(read_input(input)));
  auto q = triangulation_to_ice_quiver(t);
  std::cout << "quiver: " << to_json(q.matrix).dump() << "\n";
  std::cout << "vertex arcs:";
  for (auto id : q.vertex_arcs) std::cout << " " << id;
  std::cout << "\n";
  auto check = surface_gluing_check(t);
  std::cout << "4-gon: " << (check.four_gon ? "yes" : "no") << "\n";
  std::cout << "prime gluing free: " << (check.analysis.prime_gluing_free ? "yes" : "no") << "\n";
  for (const auto& cls : check.glued_arcs) {
    std::cout << "strictly glueable arcs:";
    for (auto id : cls) std::cout << " " << id;
    std::cout << "\n";
  }
  if (!check.four_gon) {
    auto cmp = compare_surface_aut_groups(t, cap);
    std::cout << "Aut with boundary: " << cmp.boundary_order << ", without: " << cmp.order << "\n";
    std::cout << "Aut+ with boundary: " << cmp.boundary_direct_order << ", without: " << cmp.direct_order << "\n";
    std::cout << "specialization map bijective: " << (cmp.map.injective && cmp.map.surjective ? "yes" : "no") << "\n";
  }
  if (!json_path.empty()) write_file(json_path, to_json(q.matrix).dump(2) + "\n");
  return 0;
}

int run_principal(const std::string& input, std::size_t cap) {
  auto b = matrix_from_json(parse_json(read_input(input)));
  auto r = check_principal_coefficients(b, cap);
  std::cout << "seeds: " << r.graph_size << "\n";
  std::cout << "Aut(A^pr): " << r.group_order << ", Aut(Q): " << r.quiver_group_order << "\n";
  std::cout << "seeds isomorphic to Q^pr: " << r.iso_vertices.size() << ", to (Q^pr)^op: " << r.anti_iso_vertices.size()
            << "\n";
  std::cout << "all automorphisms direct at the root: " << (r.all_direct_at_root ? "yes" : "no") << "\n";
  std::cout << "rigid: " << (r.holds() ? "yes" : "no") << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cluster algebra automorphism workbench"};
  app.require_subcommand(1);

  std::string input;
  std::string at;
  std::string dot_path;
  std::string json_path;
  std::size_t cap = ExchangeGraph::default_cap;
  bool labels = false;
  std::string to;
  std::string matrix;
  std::size_t depth = 0;

  auto* mutate = app.add_subcommand("mutate", "Mutate the initial seed along a word");
  mutate->add_option("input", input, "Quiver JSON (path, - or inline)")->required();
  mutate->add_option("--at", at, "Comma-separated 1-based positions")->required();
  mutate->add_option("--json", json_path, "Also write the seed JSON here");

  auto* graph = app.add_subcommand("graph", "Enumerate the exchange graph");
  graph->add_option("input", input, "Quiver JSON")->required();
  graph->add_option("--cap", cap, "Maximum number of seeds")->check(CLI::PositiveNumber);
  graph->add_option("--dot", dot_path, "Write DOT here");
  graph->add_option("--json", json_path, "Write the graph JSON here");
  graph->add_flag("--labels", labels, "Label DOT vertices by cluster");

  auto* autgroup = app.add_subcommand("autgroup", "Cluster automorphism group");
  autgroup->add_option("input", input, "Quiver JSON")->required();
  autgroup->add_option("--cap", cap, "Maximum number of seeds")->check(CLI::PositiveNumber);
  autgroup->add_option("--dot", dot_path, "Write DOT with orbit colouring here");
  autgroup->add_option("--json", json_path, "Write the elements as JSON here");

  auto* gluing = app.add_subcommand("gluing", "Gluing analysis of the frozen vertices");
  gluing->add_option("input", input, "Quiver JSON")->required();
  gluing->add_option("--json", json_path, "Also write the analysis here");

  auto* specialize = app.add_subcommand("specialize", "Check a coefficient specialization");
  specialize->add_option("from", input, "Source quiver JSON")->required();
  specialize->add_option("to", to, "Target quiver JSON")->required();
  specialize->add_option("--matrix", matrix, "Exponent matrix A (JSON rows)")->required();
  auto* depth_opt = specialize->add_option("--depth", depth, "Check words up to this length instead of all seeds");
  specialize->add_option("--cap", cap, "Maximum number of matrix pairs")->check(CLI::PositiveNumber);

  auto* surface = app.add_subcommand("surface", "Quiver and checks for a triangulation");
  surface->add_option("input", input, "Triangulation JSON")->required();
  surface->add_option("--cap", cap, "Maximum number of seeds")->check(CLI::PositiveNumber);
  surface->add_option("--json", json_path, "Write the quiver JSON here");

  auto* principal = app.add_subcommand("principal", "Principal-coefficient rigidity check");
  principal->add_option("input", input, "Square quiver JSON")->required();
  principal->add_option("--cap", cap, "Maximum number of seeds")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*mutate) return run_mutate(input, at, json_path);
    if (*graph) return run_graph(input, cap, dot_path, json_path, labels);
    if (*autgroup) return run_autgroup(input, cap, dot_path, json_path);
    if (*gluing) return run_gluing(input, json_path);
    if (*specialize)
      return run_specialize(input, to, matrix, depth_opt->count() ? std::optional<std::size_t>(depth) : std::nullopt, cap);
    if (*surface) return run_surface(input, cap, json_path);
    if (*principal) return run_principal(input, cap);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.name() << ": " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: InvalidArgument: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
