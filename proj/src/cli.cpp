#include "latmod/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "latmod/errors.hpp"
#include "latmod/io.hpp"
#include "latmod/parallel.hpp"

namespace latmod::cli {

namespace {

using io::json;

// Reported as a failed expectation, not as an error.
struct ExpectationFailed {
  std::string message;
};

struct Options {
  std::size_t jobs = 1;
  std::string out_path;
  std::string lattice;
  std::string format = "json";
  std::string graph_format = "dot";
  std::string arrows;
  std::string weq;
  std::string model;
  std::string side = "left";
  std::string at;
  std::optional<std::size_t> expect;
  bool count_only = false;
  bool expect_all = false;
  bool paper_checks = false;
};

// Splits "src,tgt" on the comma outside parentheses, so "(1,0),(1,1)" works.
Arrow parse_at(const FiniteLattice& lattice, const std::string& text) {
  int depth = 0;
  std::optional<std::size_t> split;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == ',' && depth == 0) {
      if (split) throw ValidationError("--at expects <src>,<tgt>: " + text);
      split = i;
    }
  }
  if (!split) throw ValidationError("--at expects <src>,<tgt>: " + text);
  const Arrow f{lattice.element(text.substr(0, *split)),
                lattice.element(text.substr(*split + 1))};
  lattice.require_arrow_id(f);
  return f;
}

ArrowSet load_arrows(const FiniteLattice& lattice, const std::string& source) {
  return io::arrows_from_json(lattice, io::load_json(source));
}

ArrowSet require_weak_equivalences(const FiniteLattice& lattice,
                                   const std::string& source) {
  ArrowSet w = load_arrows(lattice, source);
  if (!is_weak_equivalence_set(w)) {
    throw NotAdmissible(w.signature() + " is not a weak equivalence set");
  }
  return w;
}

EnumerationOptions enumeration(const Options& opts) {
  return {SearchStrategy::kAuto, opts.jobs};
}

void check_expect(const Options& opts, std::size_t actual, const char* what) {
  if (opts.expect && *opts.expect != actual) {
    throw ExpectationFailed{std::string("expected ") +
                            std::to_string(*opts.expect) + " " + what +
                            ", found " + std::to_string(actual)};
  }
}

void lattice_check(const Options& opts, std::ostream& out) {
  const FiniteLattice lattice = io::load_lattice(opts.lattice);
  out << "OK: lattice, " << (is_modular(lattice) ? "modular" : "nonmodular")
      << '\n';
}

void lattice_info(const Options& opts, std::ostream& out) {
  const FiniteLattice lattice = io::load_lattice(opts.lattice);
  out << "elements: " << lattice.size() << '\n';
  out << "order:";
  for (const auto& label : lattice.labels()) out << ' ' << label;
  out << '\n';
  out << "bottom: " << lattice.label(lattice.bottom()) << '\n';
  out << "top: " << lattice.label(lattice.top()) << '\n';
  out << "arrows: " << lattice.arrow_count() << '\n';
  out << "covers:";
  for (const Arrow& a : lattice.covers()) out << ' ' << lattice.arrow_label(a);
  out << '\n';
  out << "modular: " << (is_modular(lattice) ? "yes" : "no") << '\n';
  out << "pushouts preserve covers: "
      << (pushouts_preserve_covers(lattice) ? "yes" : "no") << '\n';
}

void transfers_enumerate(const Options& opts, std::ostream& out) {
  const FiniteLattice lattice = io::load_lattice(opts.lattice);
  const TransferCatalog catalog =
      enumerate_transfer_systems(lattice, enumeration(opts));
  if (opts.format == "count") {
    out << catalog.size() << '\n';
  } else if (opts.format == "dot") {
    out << io::catalog_to_dot(catalog);
  } else {
    json systems = json::array();
    for (const ArrowSet& t : catalog.systems()) {
      systems.push_back(io::arrows_to_json(t)["arrows"]);
    }
    json hasse = json::array();
    for (const auto& [i, j] : catalog.hasse_edges()) hasse.push_back({i, j});
    out << json{{"count", catalog.size()}, {"systems", systems}, {"hasse", hasse}}
               .dump(2)
        << '\n';
  }
  check_expect(opts, catalog.size(), "transfer systems");
}

void transfers_dual(const Options& opts, std::ostream& out) {
  const FiniteLattice lattice = io::load_lattice(opts.lattice);
  const ArrowSet set = load_arrows(lattice, opts.arrows);
  const ArrowSet dual = opts.side == "left" ? llp_dual(set) : rlp_dual(set);
  out << io::arrows_to_json(dual).dump(2) << '\n';
}

void transfers_generate(const Options& opts, std::ostream& out) {
  const FiniteLattice lattice = io::load_lattice(opts.lattice);
  out << io::arrows_to_json(generate_transfer(load_arrows(lattice, opts.arrows)))
             .dump(2)
      << '\n';
}

void models_enumerate(const Options& opts, std::ostream& out) {
  const FiniteLattice lattice = io::load_lattice(opts.lattice);
  const ModelAnalyzer analyzer(lattice, enumeration(opts));
  const std::size_t count = analyzer.model_structures().size();
  if (opts.count_only) {
    out << count << '\n';
  } else if (opts.format == "dot") {
    out << io::models_to_dot(analyzer);
  } else if (opts.format == "csv") {
    out << io::models_to_csv(analyzer);
  } else {
    out << io::models_to_json(analyzer).dump(2) << '\n';
  }
  check_expect(opts, count, "model structures");
}

void models_verify(const Options& opts, std::ostream& out) {
  const FiniteLattice lattice = io::load_lattice(opts.lattice);
  const ModelStructure model =
      io::model_from_json(lattice, io::load_json(opts.model));
  if (!verify_model_axioms(model)) {
    throw ExpectationFailed{"model axioms fail for W = " +
                            model.weak_equivalences.signature() +
                            ", AF = " + model.acyclic_fibrations.signature()};
  }
  out << "OK: model structure\n";
}

void models_interval(const Options& opts, std::ostream& out) {
  const FiniteLattice lattice = io::load_lattice(opts.lattice);
  const ArrowSet w = require_weak_equivalences(lattice, opts.weq);
  const ModelAnalyzer analyzer(lattice, enumeration(opts));
  json interval = json::array();
  for (const ArrowSet& t : analyzer.af_interval(w)) {
    interval.push_back(io::arrows_to_json(t)["arrows"]);
  }
  out << json{{"W", io::arrows_to_json(w)["arrows"]},
              {"k_max", io::arrows_to_json(analyzer.k_max(w))["arrows"]},
              {"t_min", io::arrows_to_json(analyzer.t_min(w))["arrows"]},
              {"t_max", io::arrows_to_json(analyzer.t_max(w))["arrows"]},
              {"count", interval.size()},
              {"interval", interval}}
             .dump(2)
      << '\n';
}

void localize_command(const Options& opts, std::ostream& out) {
  const FiniteLattice lattice = io::load_lattice(opts.lattice);
  const ModelAnalyzer analyzer(lattice, enumeration(opts));
  const ModelStructure given =
      io::model_from_json(lattice, io::load_json(opts.model));
  const ModelStructure model = analyzer.derive_classes(
      given.weak_equivalences, given.acyclic_fibrations);
  const Arrow f = parse_at(lattice, opts.at);
  const Side side = opts.side == "left" ? Side::kLeft : Side::kRight;
  json doc = {{"side", side_name(side)},
              {"at", {lattice.label(f.source), lattice.label(f.target)}},
              {"model", io::model_to_json(localize(analyzer, model, side, f))}};
  if (side == Side::kRight && lattice.is_cover(f)) {
    doc["golden_arrows"] =
        io::golden_arrows_to_json(lattice, golden_arrows(model, f));
  }
  out << doc.dump(2) << '\n';
}

void graph_localizations(const Options& opts, std::ostream& out) {
  const FiniteLattice lattice = io::load_lattice(opts.lattice);
  const ModelAnalyzer analyzer(lattice, enumeration(opts));
  const LocalizationGraph graph = localization_graph(analyzer);
  if (opts.graph_format == "json") {
    out << io::localization_graph_to_json(analyzer, graph).dump(2) << '\n';
  } else {
    out << io::localization_graph_to_dot(analyzer, graph);
  }
}

void graph_reach(const Options& opts, std::ostream& out) {
  const FiniteLattice lattice = io::load_lattice(opts.lattice);
  const ModelAnalyzer analyzer(lattice, enumeration(opts));
  const LocalizationGraph graph = localization_graph(analyzer);
  const std::size_t reached = reachable_from_trivial(graph).size();
  out << "reachable: " << reached << '/' << graph.node_count << '\n';
  out << "edges: " << graph.edges.size() << '\n';
  out << "weak components: " << weak_component_count(graph) << '\n';
  if (opts.expect_all && reached != graph.node_count) {
    throw ExpectationFailed{std::to_string(graph.node_count - reached) +
                            " model structures are not reachable"};
  }
}

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
};

void reproduce(const Options& opts, std::ostream& out) {
  const EnumerationOptions options = enumeration(opts);
  const FiniteLattice pentagon = n5();
  const FiniteLattice square = grid(1, 1);
  const ModelAnalyzer a5(pentagon, options);
  const ModelAnalyzer a4(square, options);
  const LocalizationGraph graph = localization_graph(a5);

  const std::vector<Check> checks = {
      {"Tr(N5)", "26", std::to_string(a5.transfers().size())},
      {"WeqSets(N5)", "22", std::to_string(a5.weak_equivalence_sets().size())},
      {"Models(N5)", "70", std::to_string(a5.model_structures().size())},
      {"Models(square)", "23", std::to_string(a4.model_structures().size())},
      {"Reachable(N5)", "70/70",
       std::to_string(reachable_from_trivial(graph).size()) + "/" +
           std::to_string(graph.node_count)},
      {"SinglyGenerated(N5)", "8",
       std::to_string(distinct_singly_generated(pentagon).size())},
  };
  std::size_t failures = 0;
  out << std::left << std::setw(22) << "check" << std::setw(10) << "expected"
      << std::setw(10) << "actual" << "status\n";
  for (const Check& c : checks) {
    const bool ok = c.expected == c.actual;
    if (!ok) ++failures;
    out << std::setw(22) << (c.name + "=" + c.expected) << std::setw(10)
        << c.expected << std::setw(10) << c.actual << (ok ? "PASS" : "FAIL")
        << '\n';
  }
  if (failures > 0) {
    throw ExpectationFailed{std::to_string(failures) + " reference checks failed"};
  }
}

CLI::Option* add_lattice(CLI::App* cmd, Options& opts) {
  return cmd
      ->add_option("--lattice,-l", opts.lattice,
                   "lattice JSON file, inline JSON, or builtin:<name>")
      ->required();
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out,
        std::ostream& err) {
  Options opts;
  opts.jobs = default_jobs();

  CLI::App app{"Model structures on finite lattices", "latmod"};
  app.require_subcommand(1);
  app.add_option("--jobs,-j", opts.jobs, "worker threads (env LATMOD_JOBS)")
      ->check(CLI::PositiveNumber);
  app.add_option("--out,-o", opts.out_path, "write output to this file");

  auto* lattice_cmd = app.add_subcommand("lattice", "validate and describe a lattice");
  lattice_cmd->require_subcommand(1);
  auto* lattice_check_cmd = lattice_cmd->add_subcommand("check", "validate");
  add_lattice(lattice_check_cmd, opts);
  auto* lattice_info_cmd = lattice_cmd->add_subcommand("info", "summary");
  add_lattice(lattice_info_cmd, opts);

  auto* transfers_cmd = app.add_subcommand("transfers", "transfer systems");
  transfers_cmd->require_subcommand(1);
  auto* tr_enum = transfers_cmd->add_subcommand("enumerate", "list all");
  add_lattice(tr_enum, opts);
  tr_enum->add_option("--format", opts.format)
      ->check(CLI::IsMember({"json", "dot", "count"}));
  tr_enum->add_option("--expect", opts.expect, "required count");
  auto* tr_dual = transfers_cmd->add_subcommand("dual", "lifting dual");
  add_lattice(tr_dual, opts);
  tr_dual->add_option("--arrows", opts.arrows, "arrow-set JSON")->required();
  tr_dual->add_option("--side", opts.side, "left: llp, right: rlp")
      ->check(CLI::IsMember({"left", "right"}));
  auto* tr_gen = transfers_cmd->add_subcommand("generate", "generated system");
  add_lattice(tr_gen, opts);
  tr_gen->add_option("--arrows", opts.arrows, "arrow-set JSON")->required();

  auto* models_cmd = app.add_subcommand("models", "model structures");
  models_cmd->require_subcommand(1);
  auto* m_enum = models_cmd->add_subcommand("enumerate", "list all");
  add_lattice(m_enum, opts);
  m_enum->add_flag("--count-only", opts.count_only);
  m_enum->add_option("--format", opts.format)
      ->check(CLI::IsMember({"json", "dot", "csv"}));
  m_enum->add_option("--expect", opts.expect, "required count");
  auto* m_verify = models_cmd->add_subcommand("verify", "check the axioms");
  add_lattice(m_verify, opts);
  m_verify->add_option("--model", opts.model, "model JSON")->required();
  auto* m_interval = models_cmd->add_subcommand("interval", "AF interval of W");
  add_lattice(m_interval, opts);
  m_interval->add_option("--weq", opts.weq, "arrow-set JSON")->required();

  auto* localize_cmd_app = app.add_subcommand("localize", "Bousfield localization");
  add_lattice(localize_cmd_app, opts);
  localize_cmd_app->add_option("--model", opts.model, "model JSON")->required();
  localize_cmd_app->add_option("--side", opts.side)
      ->required()
      ->check(CLI::IsMember({"left", "right"}));
  localize_cmd_app->add_option("--at", opts.at, "<src>,<tgt>")->required();

  auto* graph_cmd = app.add_subcommand("graph", "localization graph");
  graph_cmd->require_subcommand(1);
  auto* g_loc = graph_cmd->add_subcommand("localizations", "export the graph");
  add_lattice(g_loc, opts);
  g_loc->add_option("--format", opts.graph_format)
      ->check(CLI::IsMember({"dot", "json"}));
  auto* g_reach = graph_cmd->add_subcommand("reach", "reachability from trivial");
  add_lattice(g_reach, opts);
  g_reach->add_flag("--expect-all", opts.expect_all);

  auto* reproduce_cmd = app.add_subcommand("reproduce", "reference counts");
  reproduce_cmd->add_flag("--paper-checks", opts.paper_checks)->required();

  try {
    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  std::ostringstream buffer;
  int status = 0;
  try {
    if (lattice_check_cmd->parsed()) lattice_check(opts, buffer);
    else if (lattice_info_cmd->parsed()) lattice_info(opts, buffer);
    else if (tr_enum->parsed()) transfers_enumerate(opts, buffer);
    else if (tr_dual->parsed()) transfers_dual(opts, buffer);
    else if (tr_gen->parsed()) transfers_generate(opts, buffer);
    else if (m_enum->parsed()) models_enumerate(opts, buffer);
    else if (m_verify->parsed()) models_verify(opts, buffer);
    else if (m_interval->parsed()) models_interval(opts, buffer);
    else if (localize_cmd_app->parsed()) localize_command(opts, buffer);
    else if (g_loc->parsed()) graph_localizations(opts, buffer);
    else if (g_reach->parsed()) graph_reach(opts, buffer);
    else if (reproduce_cmd->parsed()) reproduce(opts, buffer);
  } catch (const ExpectationFailed& e) {
    err << "FAILED: " << e.message << '\n';
    status = 1;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const io::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return 4;
  }

  if (opts.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(opts.out_path, std::ios::binary);
    if (!file || !(file << buffer.str())) {
      err << "error: cannot write '" << opts.out_path << "'\n";
      return 3;
    }
  }
  return status;
}

}  // namespace latmod::cli
