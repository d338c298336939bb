// pvtool: command line front end to the malcev library.
// Exit codes: 0 success, 1 counterexample found, 2 usage error, 3 budget.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "malcev/catalog.hpp"
#include "malcev/corpus.hpp"
#include "malcev/error.hpp"
#include "malcev/evaluate.hpp"
#include "malcev/factorization.hpp"
#include "malcev/json_io.hpp"
#include "malcev/languages.hpp"
#include "malcev/semilocal.hpp"
#include "malcev/suites.hpp"
#include "malcev/window.hpp"

using namespace malcev;

namespace {

  enum Exit { Ok = 0, Counterexample_ = 1, Usage = 2, Budget = 3 };

  struct Global {
    int           jobs   = 1;
    std::uint64_t seed   = 1;
    double        budget = 0;
  };

  void emit(Json const& j) {
    std::cout << j.dump(2) << '\n';
  }

  FiniteSemigroup load_semigroup(std::string const& input,
                                 std::string const& name) {
    if (!name.empty()) {
      return catalog(name);
    }
    if (input.empty()) {
      throw PreconditionViolated("give --input or --catalog");
    }
    return semigroup_from_json(read_json_file(input));
  }

  PseudovarietyDef load_pv(std::string const& name, std::string const& file) {
    if (!file.empty()) {
      return pseudovariety_from_json(read_json_file(file));
    }
    return pseudovariety(name);
  }

  // a file's contents when the path exists, otherwise the text itself
  std::string text_or_file(std::string const& s) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(s, ec)) {
      std::ifstream     in(s);
      std::stringstream ss;
      ss << in.rdbuf();
      std::string t = ss.str();
      while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) {
        t.pop_back();
      }
      return t;
    }
    return s;
  }

  Json green_json(FiniteSemigroup const& S) {
    auto const& g   = S.green();
    auto        lab = [&](std::vector<int> const& xs) {
      Json a = Json::array();
      for (int x : xs) {
        a.push_back(S.label(x));
      }
      return a;
    };
    Json j;
    j["order"]       = S.order();
    j["idempotents"] = lab(idempotents(S));
    j["j_classes"]   = Json::array();
    for (std::size_t c = 0; c < g.j_classes.size(); ++c) {
      j["j_classes"].push_back({{"elements", lab(g.j_classes[c])},
                                {"regular", static_cast<bool>(g.j_regular[c])}});
    }
    for (auto [key, classes] : {std::pair{"r_classes", &g.r_classes},
                                std::pair{"l_classes", &g.l_classes},
                                std::pair{"h_classes", &g.h_classes}}) {
      j[key] = Json::array();
      for (auto const& c : *classes) {
        j[key].push_back(lab(c));
      }
    }
    j["monoid"]      = is_monoid(S);
    j["commutative"] = is_commutative(S);
    j["group"]       = is_group(S);
    return j;
  }

  Json ilbf_json(IlbfTerm const& f) {
    auto opt = [](std::optional<Term> const& t) {
      return t ? to_string(*t) : std::string("1");
    };
    Json j{{"outcome", to_string(f.outcome)}, {"length", f.length()}};
    j["factors"] = Json::array();
    for (auto const& [x, a] : f.factors) {
      j["factors"].push_back({opt(x), a});
    }
    if (f.outcome == IlbfOutcome::Finite) {
      j["remainder"] = opt(f.remainder);
    } else {
      j["remainder"] = nullptr;
      if (!f.cycle.empty()) {
        j["cycle"] = f.cycle;
      }
    }
    return j;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pseudovariety and semigroup toolkit"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "random seed");
  app.add_option("--budget", g.budget, "time budget in milliseconds");

  std::string input, cat, vname = "", vfile, zname, id, regex, suite = "all",
                          out_file;
  int         k = 1, ilbf_k = 0, order = 0, max_order = 4;
  std::size_t cap = 1000;
  bool        upto = false;

  auto* green = app.add_subcommand("green", "Green's relations of a semigroup");
  green->add_option("--input", input, "semigroup JSON");
  green->add_option("--catalog", cat, "named semigroup, e.g. B2");

  auto* ident = app.add_subcommand("ident-check", "check a pseudoidentity");
  ident->add_option("--input", input, "semigroup JSON");
  ident->add_option("--catalog", cat, "named semigroup");
  ident->add_option("--id", id, "identity u = v")->required();

  auto* mem = app.add_subcommand("member", "pseudovariety membership");
  mem->add_option("--input", input, "semigroup JSON");
  mem->add_option("--catalog", cat, "named semigroup");
  mem->add_option("--v", vname, "pseudovariety name");
  mem->add_option("--v-file", vfile, "pseudovariety JSON");

  auto* mal = app.add_subcommand("malcev", "membership in Z m V");
  mal->add_option("--z", zname, "LI K D N LG KvG DvG NvG")->required();
  mal->add_option("--v", vname, "pseudovariety name");
  mal->add_option("--v-file", vfile, "pseudovariety JSON");
  mal->add_option("--input", input, "semigroup JSON");
  mal->add_option("--catalog", cat, "named semigroup");

  auto* phi = app.add_subcommand("phi", "Phi_k image of a word or term");
  phi->add_option("--input", input, "word, term or file")->required();
  phi->add_option("--k", k, "window size")->capture_default_str();

  auto* il = app.add_subcommand("ilbf", "iterated left basic factorization");
  il->add_option("--input", input, "word, term or file")->required();
  il->add_option("--k", ilbf_k, "factorize Phi_k of the input when k > 0");
  il->add_option("--cap", cap, "iteration cap");

  auto* syn = app.add_subcommand("syn", "syntactic semigroup of a language");
  syn->add_option("--regex", regex, "regular expression");
  syn->add_option("--input", input, "DFA JSON");
  syn->add_option("--v", vname, "also test membership in V");

  auto* en = app.add_subcommand("enumerate", "semigroups up to isomorphism");
  en->add_option("--order", order, "order n <= 4")->required();
  en->add_flag("--upto", upto, "all orders 1..n");
  en->add_option("--output", out_file, "JSONL file, default stdout");

  auto* vp = app.add_subcommand("verify-paper", "run the acceptance suites");
  vp->add_option("--suite", suite, "suite name or all");
  vp->add_option("--max-order", max_order, "corpus order")->default_val(4);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? Ok : Usage;
  }

  try {
    if (green->parsed()) {
      emit(green_json(load_semigroup(input, cat)));
      return Ok;
    }
    if (ident->parsed()) {
      auto S  = load_semigroup(input, cat);
      auto pi = parse_identity(id);
      auto a  = find_counterexample(S, pi);
      Json j{{"satisfies", !a}};
      if (a) {
        j["counterexample"] = to_json(Counterexample{S, *a, pi});
      }
      emit(j);
      return a ? Counterexample_ : Ok;
    }
    if (mem->parsed()) {
      auto S = load_semigroup(input, cat);
      auto V = load_pv(vname.empty() ? "I" : vname, vfile);
      if (vname.empty() && vfile.empty()) {
        throw PreconditionViolated("give --v or --v-file");
      }
      auto w = member_witness(S, V);
      Json j{{"member", !w}};
      if (w) {
        j["witness"] = to_json(*w);
      }
      emit(j);
      return w ? Counterexample_ : Ok;
    }
    if (mal->parsed()) {
      auto S = load_semigroup(input, cat);
      auto z = zclass_from_string(zname);
      if (!z) {
        throw UnknownName("unknown Z '" + zname + "'");
      }
      auto V  = load_pv(vname.empty() ? "Sl" : vname, vfile);
      bool in = malcev_member(S, *z, V);
      Json j{{"member", in}};
      if (*z != ZClass::N && *z != ZClass::NvG) {
        j["mu_quotient_order"] = mu_quotient(S, *z).order();
      }
      if (!in) {
        if (auto pw = pinweil_refute(S, zclass_def(*z).basis, V)) {
          Json a = Json::object();
          for (auto const& [x, v] : pw->assignment) {
            a[x] = v;
          }
          j["witness"] = {{"identity", pw->identity.to_string()},
                          {"x1", to_string(pw->phi_x1)},
                          {"x2", to_string(pw->phi_x2)},
                          {"assignment", a}};
        }
      }
      emit(j);
      return in ? Ok : Counterexample_;
    }
    if (phi->parsed()) {
      Term t = parse_term(text_or_file(input));
      auto p = phi_k_term(t, k);
      auto sk = static_cast<std::size_t>(k);
      Json j{{"k", k},
             {"phi", p ? to_string(*p) : std::string("1")}};
      if (t.is_finite() && expand(t).size() >= sk) {
        j["beta"] = to_string(beta_k(t, sk));
        j["tau"]  = to_string(tau_k(t, sk));
      }
      emit(j);
      return Ok;
    }
    if (il->parsed()) {
      Term t = parse_term(text_or_file(input));
      if (ilbf_k > 0) {
        auto p = phi_k_term(t, ilbf_k);
        if (!p) {
          throw PreconditionViolated("input not longer than k");
        }
        t = *p;
      }
      auto f = ilbf_term(t, cap);
      emit(ilbf_json(f));
      return f.outcome == IlbfOutcome::Unknown ? Budget : Ok;
    }
    if (syn->parsed()) {
      Dfa d;
      if (!regex.empty()) {
        d = parse_regex(regex);
      } else if (!input.empty()) {
        d = dfa_from_json(read_json_file(input));
      } else {
        throw PreconditionViolated("give --regex or --input");
      }
      auto s = syntactic_semigroup(d);
      Json j{{"minimal_dfa", to_json(minimize(d))},
             {"semigroup", to_json(s.semigroup)}};
      int code = Ok;
      if (!vname.empty()) {
        bool in     = member(s.semigroup, pseudovariety(vname));
        j["member"] = in;
        code        = in ? Ok : Counterexample_;
      }
      emit(j);
      return code;
    }
    if (en->parsed()) {
      if (order < 1 || order > 4) {
        throw BudgetExceeded("exhaustive enumeration is limited to n <= 4");
      }
      std::vector<CorpusEntry> entries;
      for (int n = upto ? 1 : order; n <= order; ++n) {
        auto c = corpus_of_order(n);
        entries.insert(entries.end(), c.begin(), c.end());
      }
      if (out_file.empty()) {
        write_corpus_jsonl(std::cout, entries);
      } else {
        std::ofstream out(out_file);
        write_corpus_jsonl(out, entries);
      }
      return Ok;
    }
    if (vp->parsed()) {
      SuiteConfig cfg;
      cfg.max_order = max_order;
      cfg.seed      = g.seed;
      cfg.jobs      = g.jobs;
      cfg.budget_ms = g.budget;
      std::vector<std::string> names =
          suite == "all" ? suite_names() : std::vector<std::string>{suite};
      Json all = Json::array();
      bool ok = true, over = false;
      for (auto const& s : names) {
        auto r = run_suite(s, cfg);
        ok &= r.passed();
        over |= r.budget_exceeded;
        all.push_back(to_json(r));
      }
      emit({{"passed", ok}, {"suites", all}});
      return over ? Budget : ok ? Ok : Counterexample_;
    }
  } catch (BudgetExceeded const& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return Budget;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return Usage;
  }
  return Usage;
}
