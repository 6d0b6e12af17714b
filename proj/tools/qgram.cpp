/*
 * Command line front end.  Subcommands: derive, count, eval, series, oracle,
 * verify, catalog.  A grammar comes from --catalog <id> or --file <path>
 * (DSL text, or JSON when the file starts with '{' or ends in .json); --seed
 * overrides the default seed expression.  Exit codes: 0 success, 1 failed
 * verification, 2 usage or parse errors.
 */

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qgram/catalog.hpp"
#include "qgram/error.hpp"
#include "qgram/evalmap.hpp"
#include "qgram/freealg.hpp"
#include "qgram/grammar.hpp"
#include "qgram/jsonio.hpp"
#include "qgram/oracle.hpp"
#include "qgram/qpoly.hpp"
#include "qgram/qseries.hpp"
#include "qgram/textio.hpp"
#include "qgram/verify.hpp"

namespace {

using namespace qgram;

struct Source {
  Grammar grammar;
  std::optional<EvalMap> eval;
  std::optional<Expr> seed;
};

Source load_source(const std::string& catalog_id, const std::string& file) {
  if (!catalog_id.empty() && !file.empty())
    fail(Err::SemanticError, "give exactly one of --catalog or --file");
  if (!catalog_id.empty()) {
    const CatalogEntry& e = get_entry(catalog_id);
    return {e.grammar, e.eval, e.seed};
  }
  if (file.empty())
    fail(Err::SemanticError, "give exactly one of --catalog or --file");
  std::ifstream in(file);
  if (!in) fail(Err::UnknownName, "cannot open file: " + file);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  std::size_t p = text.find_first_not_of(" \t\r\n");
  bool is_json =
      (p != std::string::npos && text[p] == '{') ||
      (file.size() >= 5 && file.compare(file.size() - 5, 5, ".json") == 0);
  ParsedGrammar pg = is_json ? grammar_from_json(text) : parse_grammar(text);
  return {pg.grammar, pg.eval, pg.seed};
}

Expr resolve_seed(const Source& s, const std::string& seed_text) {
  if (!seed_text.empty()) return parse_expr(seed_text);
  if (s.seed) return *s.seed;
  fail(Err::SemanticError, "no seed: pass --seed or add a seed clause");
}

const EvalMap& resolve_eval(const Source& s) {
  if (s.eval && !s.eval->empty()) return *s.eval;
  fail(Err::SemanticError, "no evaluation map: add eval clauses");
}

AndreKind parse_kind(const std::string& k) {
  if (k == "I" || k == "1") return AndreKind::I;
  if (k == "II" || k == "2") return AndreKind::II;
  fail(Err::UnknownName, "kind must be I or II");
}

Perm parse_perm(std::string text) {
  for (char& c : text)
    if (c == ',') c = ' ';
  std::istringstream in(text);
  Perm p;
  int v;
  while (in >> v) p.push_back(v);
  if (p.empty()) fail(Err::SemanticError, "empty permutation");
  return p;
}

void print_block(const std::string& t) {
  std::cout << t;
  if (t.empty() || t.back() != '\n') std::cout << '\n';
}

int run_verify(const std::string& suite, const VerifyOptions& opt) {
  std::vector<CheckResult> rs = run_suite(suite, opt);
  bool all_ok = true;
  for (const CheckResult& r : rs) {
    if (r.pass) {
      std::cout << "pass " << r.name << "\n";
    } else {
      all_ok = false;
      std::cout << "FAIL " << r.name;
      if (!r.notes.empty()) std::cout << ": " << r.notes;
      std::cout << "\n";
    }
  }
  std::cout << (all_ok ? "pass" : "fail") << "\n";
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for q-derivative grammars"};
  app.require_subcommand(1);

  std::string catalog_id, file, seed_text;
  int steps = 1, order = 8, cases = 200;
  bool json = false;

  auto add_source = [&](CLI::App* c) {
    c->add_option("--catalog", catalog_id, "catalog grammar id or alias");
    c->add_option("--file", file, "grammar file, DSL text or JSON");
    c->add_option("--seed", seed_text, "seed expression");
  };

  CLI::App* derive_cmd =
      app.add_subcommand("derive", "print the n-th derivative of the seed");
  add_source(derive_cmd);
  derive_cmd->add_option("-n,--steps", steps, "derivative steps");
  derive_cmd->add_flag("--json", json, "JSON output");

  CLI::App* count_cmd =
      app.add_subcommand("count", "print word counts of steps 1..n");
  add_source(count_cmd);
  count_cmd->add_option("-n,--steps", steps, "last step");

  CLI::App* eval_cmd = app.add_subcommand(
      "eval", "print the evaluation image of the n-th derivative");
  add_source(eval_cmd);
  eval_cmd->add_option("-n,--steps", steps, "derivative steps");
  eval_cmd->add_flag("--json", json, "JSON output");

  CLI::App* series_cmd = app.add_subcommand(
      "series", "print the generating series of the seed image");
  add_source(series_cmd);
  series_cmd->add_option("-N,--order", order, "truncation order");
  series_cmd->add_flag("--json", json, "JSON output");

  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "brute-force reference polynomials");
  std::string family, stat = "maj", kind = "I", seq_name, perm_text;
  oracle_cmd
      ->add_option("family", family,
                   "eulerian|roselle|andre|tree|stats|sequence")
      ->required();
  oracle_cmd->add_option("-n,--steps", steps, "size");
  oracle_cmd->add_option("--stat", stat, "maj or inv");
  oracle_cmd->add_option("--kind", kind, "I or II");
  oracle_cmd->add_option("--name", seq_name,
                         "sequence name: motzkin|fibonacci|euler");
  oracle_cmd->add_option("--perm", perm_text,
                         "permutation, space or comma separated");

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run a named verification suite");
  std::string suite = "all";
  verify_cmd->add_option("suite", suite, "suite name, or all");
  verify_cmd->add_option("-N,--order", order, "series truncation order");
  verify_cmd->add_option("-n,--steps", steps, "derivative depth knob");
  verify_cmd->add_option("--cases", cases, "randomized cases per law");

  CLI::App* catalog_cmd =
      app.add_subcommand("catalog", "list or show built-in grammars");
  catalog_cmd->require_subcommand(1);
  CLI::App* list_cmd = catalog_cmd->add_subcommand("list", "print all ids");
  std::string show_id;
  CLI::App* show_cmd =
      catalog_cmd->add_subcommand("show", "emit one entry in DSL form");
  show_cmd->add_option("id", show_id, "catalog id or alias")->required();
  show_cmd->add_flag("--json", json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (derive_cmd->parsed()) {
      Source s = load_source(catalog_id, file);
      Expr d = derive_n(s.grammar, resolve_seed(s, seed_text), steps);
      print_block(json ? to_json(d) : to_text(d));
    } else if (count_cmd->parsed()) {
      Source s = load_source(catalog_id, file);
      Expr cur = resolve_seed(s, seed_text);
      std::string sep;
      for (int k = 1; k <= steps; ++k) {
        cur = derive(s.grammar, cur);
        std::cout << sep << omega(cur);
        sep = " ";
      }
      std::cout << "\n";
    } else if (eval_cmd->parsed()) {
      Source s = load_source(catalog_id, file);
      QPoly v = evaluate(resolve_eval(s),
                         derive_n(s.grammar, resolve_seed(s, seed_text), steps));
      print_block(json ? to_json(v) : to_text(v));
    } else if (series_cmd->parsed()) {
      Source s = load_source(catalog_id, file);
      ESeries es =
          gen(s.grammar, resolve_eval(s), resolve_seed(s, seed_text), order);
      print_block(json ? to_json(es) : to_text(es));
    } else if (oracle_cmd->parsed()) {
      if (family == "eulerian") {
        print_block(to_text(eulerian_poly(steps, stat)));
      } else if (family == "roselle") {
        print_block(to_text(roselle_poly(steps)));
      } else if (family == "andre") {
        print_block(to_text(andre_perm_poly(steps, parse_kind(kind))));
      } else if (family == "tree") {
        print_block(to_text(andre_tree_poly(steps, parse_kind(kind))));
      } else if (family == "stats") {
        Perm p = parse_perm(perm_text);
        PermStats st = perm_stats(p);
        std::cout << "asc " << st.asc << "\ndes " << st.des << "\nmaj "
                  << st.maj << "\ninv " << st.inv << "\nexc " << st.exc
                  << "\ndrop " << st.drop << "\nfix " << st.fix << "\niasc "
                  << st.iasc << "\nisol " << st.isol << "\nrlmin " << st.rlmin
                  << "\n";
        Perm sorted = p;
        std::sort(sorted.begin(), sorted.end());
        bool full = true;
        for (std::size_t i = 0; i < sorted.size(); ++i)
          if (sorted[i] != static_cast<int>(i) + 1) full = false;
        if (full) std::cout << "cyc " << cycle_count(p) << "\n";
      } else if (family == "sequence") {
        if (seq_name.empty()) fail(Err::UnknownName, "give --name");
        std::cout << sequence_term(seq_name, steps) << "\n";
      } else {
        fail(Err::UnknownName, "unknown oracle family: " + family);
      }
    } else if (verify_cmd->parsed()) {
      VerifyOptions opt;
      opt.order = order;
      opt.steps = steps;
      opt.cases = cases;
      return run_verify(suite, opt);
    } else if (catalog_cmd->parsed()) {
      if (list_cmd->parsed()) {
        for (const std::string& id : catalog_ids()) std::cout << id << "\n";
      } else if (show_cmd->parsed()) {
        const CatalogEntry& e = get_entry(show_id);
        print_block(json ? to_json(e.grammar, &e.eval, &e.seed)
                         : to_dsl(e.grammar, &e.eval, &e.seed));
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
