// Command-line front end: graph inspection, generator listing, presentation
// export and verification, word arithmetic, vertex-conjugacy decisions and
// factorization into partial conjugations.
//
// Exit codes: 0 success / positive verdict; 1 negative verdict or failed
// verification; 2 parse or input error; 3 not vertex-conjugating; 4 search
// budget exhausted.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "raag/raag.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_input = 2;
constexpr int exit_not_vc = 3;
constexpr int exit_budget = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw raag::parse_error("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

raag::Graph load_graph(const std::string& path) {
  return raag::Graph::parse(read_file(path));
}

int cmd_info(const std::string& graph_path) {
  raag::Graph g = load_graph(graph_path);

  std::cout << "vertices:";
  for (const auto& name : g.vertex_names()) std::cout << ' ' << name;
  std::cout << '\n';

  std::cout << "edges:";
  for (auto [u, v] : g.edges())
    std::cout << ' ' << g.vertex_name(u) << '-' << g.vertex_name(v);
  std::cout << '\n';

  for (int v = 0; v < g.vertex_count(); ++v)
    std::cout << "link(" << g.vertex_name(v) << ") = " << g.set_to_string(g.link(v))
              << '\n';
  for (int v = 0; v < g.vertex_count(); ++v)
    std::cout << "star(" << g.vertex_name(v) << ") = " << g.set_to_string(g.star(v))
              << '\n';

  std::cout << "dominations:";
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int w = 0; w < g.vertex_count(); ++w)
      if (v != w && g.dominates(v, w))
        std::cout << ' ' << g.vertex_name(v) << ">=" << g.vertex_name(w);
  std::cout << '\n';

  std::cout << "center = " << g.set_to_string(g.center()) << '\n';

  raag::Graph prime = g.non_central_subgraph();
  std::cout << "non-central subgraph: vertices";
  if (prime.vertex_count() == 0) std::cout << " (none)";
  for (const auto& name : prime.vertex_names()) std::cout << ' ' << name;
  std::cout << "; edges";
  if (prime.edge_count() == 0) std::cout << " (none)";
  for (auto [u, v] : prime.edges())
    std::cout << ' ' << prime.vertex_name(u) << '-' << prime.vertex_name(v);
  std::cout << '\n';

  std::cout << "graph automorphisms: " << g.automorphisms().size() << '\n';
  return exit_ok;
}

int cmd_gens(const std::string& graph_path, bool one_term) {
  raag::Graph g = load_graph(graph_path);
  auto gens = one_term ? raag::one_term_partial_conjugations(g)
                       : raag::all_partial_conjugations(g);
  for (const auto& pc : gens) std::cout << raag::pc_name(g, pc) << '\n';
  return exit_ok;
}

int cmd_present(const std::string& graph_path, const std::string& format, bool verify,
                const std::string& out_path) {
  raag::Graph g = load_graph(graph_path);
  raag::PresentationData p = raag::build_presentation(g);

  std::string rendered;
  if (format == "structured")
    rendered = raag::to_structured(g, p).dump(2) + "\n";
  else
    rendered = raag::to_plain_text(g, p);

  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw raag::parse_error("cannot write file '" + out_path + "'");
    out << rendered;
    std::cout << "wrote " << format << " presentation to " << out_path << '\n';
  } else {
    std::cout << rendered;
  }

  if (!verify) return exit_ok;

  raag::VerificationReport report = raag::verify_presentation(g, p);
  std::cout << "generators: " << report.generator_count << '\n';
  std::cout << "relations: " << report.total() << " (inverse "
            << report.family_counts[0] << ", union " << report.family_counts[1]
            << ", commute " << report.family_counts[2] << ", inner-stabilize "
            << report.family_counts[3] << ")\n";
  std::cout << "verified: " << report.passed << "/" << report.total() << " pass\n";
  for (std::size_t idx : report.failed_indices)
    std::cout << "FAILED: "
              << raag::render_generator_word(g, p.generators,
                                             p.relations[idx].relator())
              << '\n';
  return report.all_passed() ? exit_ok : exit_negative;
}

int cmd_nf(const std::string& graph_path, const std::string& word_text) {
  raag::Graph g = load_graph(graph_path);
  raag::Word w = raag::parse_word(g, word_text);
  std::cout << raag::word_to_string(g, raag::normal_form(g, w)) << '\n';
  return exit_ok;
}

int cmd_conj(const std::string& graph_path, const std::string& lhs_text,
             const std::string& rhs_text) {
  raag::Graph g = load_graph(graph_path);
  raag::CyclicWord lhs = raag::cyclic_normal_form(g, raag::parse_word(g, lhs_text));
  raag::CyclicWord rhs = raag::cyclic_normal_form(g, raag::parse_word(g, rhs_text));
  std::cout << "lhs class: " << lhs.to_string(g) << '\n';
  std::cout << "rhs class: " << rhs.to_string(g) << '\n';
  bool same = lhs == rhs;
  std::cout << "conjugate: " << (same ? "yes" : "no") << '\n';
  return same ? exit_ok : exit_negative;
}

raag::Endo load_endo(const raag::Graph& g, const std::string& path) {
  raag::Endo f = raag::parse_endo(g, read_file(path));
  if (!raag::check_homomorphism(g, f))
    throw raag::parse_error("the map in '" + path +
                            "' does not preserve the defining relations");
  return f;
}

int cmd_check_vc(const std::string& graph_path, const std::string& auto_path) {
  raag::Graph g = load_graph(graph_path);
  raag::Endo f = load_endo(g, auto_path);

  int failing = -1;
  auto witness = raag::vertex_conjugating_witness(g, f, &failing);
  if (!witness) {
    std::cout << "vertex-conjugating: no\n";
    std::cout << "vertex " << g.vertex_name(failing)
              << " maps outside its conjugacy class: "
              << raag::word_to_string(g, f.image(failing)) << '\n';
    return exit_not_vc;
  }
  std::cout << "vertex-conjugating: yes\n";
  for (int v = 0; v < g.vertex_count(); ++v)
    std::cout << "w[" << g.vertex_name(v)
              << "] = " << raag::word_to_string(g, witness->conjugator[v]) << '\n';
  return exit_ok;
}

int cmd_factor(const std::string& graph_path, const std::string& auto_path,
               std::size_t budget, int oracle_depth) {
  raag::Graph g = load_graph(graph_path);
  raag::Endo f = load_endo(g, auto_path);
  auto gens = raag::all_partial_conjugations(g);

  raag::FactorConfig cfg;
  cfg.state_budget = budget;
  raag::GeneratorWord word = raag::factor(g, gens, f, cfg);

  std::cout << "factorization: " << raag::render_generator_word(g, gens, word, " * ")
            << '\n';
  std::cout << "length: " << word.size() << '\n';

  if (oracle_depth >= 0) {
    auto oracle = raag::exhaustive_factor_search(g, gens, f, oracle_depth);
    if (oracle) {
      bool agree = raag::evaluate(g, gens, *oracle) == raag::evaluate(g, gens, word);
      std::cout << "oracle: " << (agree ? "agrees" : "DISAGREES") << " (word of length "
                << oracle->size() << " at depth " << oracle_depth << ")\n";
      if (!agree) return exit_negative;
    } else {
      std::cout << "oracle: no word of length <= " << oracle_depth << '\n';
    }
  }
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"partial-conjugation toolkit for right-angled Artin groups"};
  app.require_subcommand(1);

  std::string graph_path, auto_path, word_a, word_b, out_path;
  std::string format = "plain";
  bool one_term = false, verify = false;
  std::size_t budget = raag::FactorConfig{}.state_budget;
  int oracle_depth = -1;

  auto* info = app.add_subcommand("info", "graph structure summary");
  info->add_option("graph", graph_path, "graph file")->required();

  auto* gens = app.add_subcommand("gens", "list the partial conjugations");
  gens->add_option("graph", graph_path, "graph file")->required();
  gens->add_flag("--one-term", one_term, "only generators with a singleton domain");

  auto* present = app.add_subcommand("present", "export the presentation");
  present->add_option("graph", graph_path, "graph file")->required();
  present->add_option("--format", format, "plain or structured")
      ->check(CLI::IsMember({"plain", "structured"}));
  present->add_flag("--verify", verify, "check every relation; nonzero exit on failure");
  present->add_option("--out", out_path, "write the export to this path");

  auto* nf = app.add_subcommand("nf", "normal form of a word");
  nf->add_option("graph", graph_path, "graph file")->required();
  nf->add_option("word", word_a, "word, e.g. 'a b^-1'")->required();

  auto* conj = app.add_subcommand("conj", "decide conjugacy of two words");
  conj->add_option("graph", graph_path, "graph file")->required();
  conj->add_option("lhs", word_a, "first word")->required();
  conj->add_option("rhs", word_b, "second word")->required();

  auto* check_vc = app.add_subcommand("check-vc", "decide the vertex-conjugating property");
  check_vc->add_option("graph", graph_path, "graph file")->required();
  check_vc->add_option("map", auto_path, "automorphism file")->required();

  auto* factor = app.add_subcommand("factor", "factor into partial conjugations");
  factor->add_option("graph", graph_path, "graph file")->required();
  factor->add_option("map", auto_path, "automorphism file")->required();
  factor->add_option("--budget", budget, "fallback search state budget");
  factor->add_option("--oracle-depth", oracle_depth,
                     "cross-check with exhaustive search up to this length");

  CLI11_PARSE(app, argc, argv);

  try {
    if (info->parsed()) return cmd_info(graph_path);
    if (gens->parsed()) return cmd_gens(graph_path, one_term);
    if (present->parsed()) return cmd_present(graph_path, format, verify, out_path);
    if (nf->parsed()) return cmd_nf(graph_path, word_a);
    if (conj->parsed()) return cmd_conj(graph_path, word_a, word_b);
    if (check_vc->parsed()) return cmd_check_vc(graph_path, auto_path);
    if (factor->parsed()) return cmd_factor(graph_path, auto_path, budget, oracle_depth);
  } catch (const raag::not_vertex_conjugating& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_not_vc;
  } catch (const raag::budget_exceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_budget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input;
  }
  return exit_input;
}
