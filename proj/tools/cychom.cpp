#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cychom.h"
#include "json.hpp"

namespace {

using Json = nlohmann::json;

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

struct Options {
  std::string file, idempotent, mode = "full", cotrace = "e", lemma = "kill", comodule, report;
  std::size_t D = 4, n = 1, seeds = 100, max_degree = 4, seed = 0, prime = 0;
  bool non_unital = false, json = false, timings = false;
};

int run(const std::string& command, const Options& o, CLI::App& sub) {
  Json cfg = {{"max_degree", o.max_degree}, {"seed", o.seed}};
  if (o.prime) cfg["field"] = {{"Fp", o.prime}};
  Json args = Json::object();
  if (!o.file.empty()) {
    std::string text;
    if (!read_file(o.file, text)) {
      std::cerr << "cychom: cannot read " << o.file << "\n";
      return 2;
    }
    args["input"] = text;
    args["input_name"] = o.file;
  }
  if (command == "homology") {
    args["mode"] = o.mode;
    if (sub.count("-D")) args["D"] = o.D;
  }
  if (command == "es-coring" && sub.count("-D")) args["D"] = o.D;
  if (command == "strong-connection") args["non_unital"] = o.non_unital;
  if (command == "chern") {
    std::string text;
    if (!read_file(o.idempotent, text)) {
      std::cerr << "cychom: cannot read " << o.idempotent << "\n";
      return 2;
    }
    args["idempotent"] = text;
  }
  if (command == "chern" || command == "chern-weil" || command == "diagram") args["n"] = o.n;
  if (command == "chern-weil") args["cotrace"] = o.cotrace;
  if (command == "diagram" && !o.comodule.empty()) args["comodule"] = o.comodule;
  if (command == "verify") {
    args["lemma"] = o.lemma;
    args["seeds"] = o.seeds;
  }
  if (o.timings) args["timings"] = true;

  cychom_session* s = nullptr;
  if (cychom_session_new(cfg.dump().c_str(), &s) != CYCHOM_OK) {
    std::cerr << "cychom: bad session configuration\n";
    return 2;
  }
  char* report = nullptr;
  cychom_status st = cychom_run(s, command.c_str(), args.dump().c_str(), &report);
  if (st == CYCHOM_BAD_INPUT || st == CYCHOM_INTERNAL) {
    std::cerr << "cychom: " << (st == CYCHOM_BAD_INPUT ? "bad input: " : "internal error: ") << cychom_last_error(s)
              << "\n";
    cychom_session_free(s);
    return st == CYCHOM_BAD_INPUT ? 2 : 3;
  }
  if (!o.report.empty()) {
    std::ofstream out(o.report, std::ios::binary);
    out << report;
    if (!out) std::cerr << "cychom: cannot write " << o.report << "\n";
  }
  if (o.json) {
    std::cout << report;
  } else {
    char* text = nullptr;
    if (cychom_summarize(report, &text) == CYCHOM_OK) std::cout << text;
    cychom_string_free(text);
  }
  cychom_string_free(report);
  cychom_session_free(s);
  return st == CYCHOM_OK ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cyclic homology, Hopf-Galois and Chern character computations"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--prime", o.prime, "Compute homology over F_p instead of Q");
  app.add_option("--max-degree", o.max_degree, "Default top degree");
  app.add_option("--seed", o.seed, "First seed for property runs");
  app.add_option("--report", o.report, "Write the JSON report to this path");
  app.add_flag("--json", o.json, "Print the JSON report instead of the summary");
  app.add_flag("--timings", o.timings, "Include wall-clock timings in the report");

  auto file_cmd = [&](const char* name, const char* help) {
    CLI::App* c = app.add_subcommand(name, help);
    c->add_option("file", o.file, "Problem file (JSON)")->required();
    return c;
  };
  file_cmd("check", "Check algebra, coalgebra, coaction and comodule axioms");
  CLI::App* hom = file_cmd("homology", "Homology of a total complex");
  hom->add_option("--mode", o.mode, "full, cc1, cc2 or bar");
  hom->add_option("-D", o.D, "Top degree");
  file_cmd("cotraces", "Cotrace space and comodule characters");
  file_cmd("strong-connection", "Galois data and a strong connection")
      ->add_flag("--non-unital", o.non_unital, "Drop the condition l(e) = 1⊗1");
  file_cmd("es-coring", "Ehresmann-Schauenburg coring and its row extension")->add_option("-D", o.D, "Top degree");
  CLI::App* ch = file_cmd("chern", "Chern character of a matrix idempotent");
  ch->add_option("--idempotent", o.idempotent, "Idempotent file (JSON)")->required();
  ch->add_option("-n", o.n, "Half degree");
  CLI::App* cw = file_cmd("chern-weil", "Chern-Weil character of a cotrace");
  cw->add_option("--cotrace", o.cotrace, "e, a comodule name, chi:<comodule> or a named cotrace");
  cw->add_option("-n", o.n, "Half degree");
  CLI::App* ver = app.add_subcommand("verify", "Seeded property runs of the homotopy lemmas");
  ver->add_option("--lemma", o.lemma, "kill, bar, matrix, conj or rowext");
  ver->add_option("--seeds", o.seeds, "Number of seeds");
  CLI::App* dia = file_cmd("diagram", "Chern-Weil / Chern-Galois / idempotent factorization");
  dia->add_option("-n", o.n, "Half degree");
  dia->add_option("--comodule", o.comodule, "Comodule name (default: first non-trivial)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  CLI::App* sub = app.get_subcommands().front();
  return run(sub->get_name(), o, *sub);
}
