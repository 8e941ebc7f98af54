// medq: invariants, medial quandles and comparisons of link diagrams.
//
// Exit codes: 0 success, 1 input error, 2 size cap exceeded, 3 selftest failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "acceptance_suite.hpp"
#include "medq/corpus.hpp"
#include "medq/error.hpp"
#include "medq/linkinv.hpp"
#include "medq/report.hpp"

namespace {

using namespace medq;

constexpr int kInputError = 1;
constexpr int kCapExceeded = 2;
constexpr int kSelftestFailed = 3;

// A path, "-" for standard input, or the name of a built-in example.
Diagram load(const std::string& source) {
  std::string text;
  if (source == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else if (std::filesystem::exists(source)) {
    std::ifstream in(source);
    if (!in) throw ParseError("cannot read " + source);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else {
    for (const auto& e : corpus())
      if (e.name == source) return e.diagram();
    throw ParseError("no such file or example: " + source);
  }
  return read_diagram(text);
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_examples(const std::string& name, const std::string& dump) {
  if (!name.empty()) {
    std::cout << diagram_to_json(corpus_entry(name).diagram()) << "\n";
    return 0;
  }
  if (!dump.empty()) {
    std::filesystem::create_directories(dump);
    for (const auto& e : corpus()) {
      const auto path = std::filesystem::path(dump) / (e.name + ".json");
      std::ofstream out(path);
      if (!out) throw ParseError("cannot write " + path.string());
      out << diagram_to_json(e.diagram()) << "\n";
      std::cout << path.string() << "\n";
    }
    return 0;
  }
  for (const auto& e : corpus())
    std::cout << e.name << "  " << e.description << " (det " << e.determinant << ", |IMQ| " << e.imq_size << ")\n";
  return 0;
}

int cmd_mq(const Diagram& d, const ScalarRing& ring, std::uint64_t cap) {
  try {
    print(quandle_json(mq_specialized(d, ring, cap)));
  } catch (const InfiniteUnsupported& e) {
    print(infinite_json(ring.label(), e.what()));
  }
  return 0;
}

int cmd_selftest(std::uint64_t seed) {
  bool ok = true;
  acceptance::run_all(seed, [&](const acceptance::CriterionResult& r) {
    std::cout << acceptance::format_line(r) << std::endl;
    ok = ok && r.pass;
  });
  return ok ? 0 : kSelftestFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Medial quandles and reduced Alexander invariants of link diagrams"};
  app.require_subcommand(1);

  std::string file, file_b, rings_text, ring_text, name, dump;
  bool json = false;
  std::uint64_t cap = kDefaultQuandleCap, seed = 20261016;

  auto* inv = app.add_subcommand("invariants", "fingerprint panel, determinant and longitudes");
  inv->add_option("file", file, "diagram file, '-' for stdin, or example name")->default_val("-");
  inv->add_option("--rings", rings_text, "comma-separated rings m:u");
  inv->add_flag("--json", json, "JSON output");

  auto* imq_cmd = app.add_subcommand("imq", "involutory medial quandle as JSON");
  imq_cmd->add_option("file", file, "diagram file, '-' for stdin, or example name")->default_val("-");
  imq_cmd->add_option("--cap", cap, "largest quandle to tabulate");

  auto* mq_cmd = app.add_subcommand("mq", "medial quandle over Z/m with t = u, as JSON");
  mq_cmd->add_option("file", file, "diagram file, '-' for stdin, or example name")->default_val("-");
  mq_cmd->add_option("--ring", ring_text, "ring m:u")->required();
  mq_cmd->add_option("--cap", cap, "largest quandle to tabulate");

  auto* cmp = app.add_subcommand("compare", "layered comparison of two diagrams");
  cmp->add_option("a", file, "first diagram")->required();
  cmp->add_option("b", file_b, "second diagram")->required();
  cmp->add_option("--rings", rings_text, "comma-separated rings m:u");
  cmp->add_option("--cap", cap, "largest quandle to tabulate");
  cmp->add_flag("--json", json, "JSON output");

  auto* st = app.add_subcommand("selftest", "run the acceptance suite");
  st->add_option("--seed", seed, "seed for the randomized suites");

  auto* ex = app.add_subcommand("examples", "built-in example diagrams");
  ex->add_flag("--list", "list names (default)");
  ex->add_option("--name", name, "print one example as JSON");
  ex->add_option("--dump", dump, "write every example to a directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    const std::vector<ScalarRing> panel = rings_text.empty() ? default_ring_panel() : parse_ring_list(rings_text);
    if (*inv) {
      Diagram d = load(file);
      if (json)
        print(invariants_json(d, panel));
      else
        std::cout << invariants_text(d, panel);
      return 0;
    }
    if (*imq_cmd) {
      print(imq_json(imq(load(file), cap)));
      return 0;
    }
    if (*mq_cmd) return cmd_mq(load(file), ScalarRing::parse(ring_text), cap);
    if (*cmp) {
      CompareResult c = compare_links(load(file), load(file_b), panel, cap);
      if (json)
        print(compare_json(c));
      else
        std::cout << compare_text(c);
      return 0;
    }
    if (*st) return cmd_selftest(seed);
    if (*ex) return cmd_examples(name, dump);
  } catch (const SizeCap& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return 0;
}
