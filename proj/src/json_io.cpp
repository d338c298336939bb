#include "malcev/json_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "malcev/error.hpp"

namespace malcev {

  namespace {

    template <typename F>
    auto guarded(char const* what, F&& f) {
      try {
        return f();
      } catch (Json::exception const& e) {
        throw FormatError(std::string(what) + ": " + e.what());
      }
    }

  }  // namespace

  Json to_json(FiniteSemigroup const& S) {
    Json j;
    j["order"] = S.order();
    j["table"] = S.table();
    if (!S.labels().empty()) {
      j["labels"] = S.labels();
    }
    if (!S.generators().empty()) {
      j["generators"] = S.generators();
    }
    return j;
  }

  FiniteSemigroup semigroup_from_json(Json const& j) {
    return guarded("semigroup", [&] {
      auto table = j.at("table").get<Table>();
      if (j.contains("order") && j.at("order").get<int>()
                                     != static_cast<int>(table.size())) {
        throw FormatError("semigroup: order does not match table");
      }
      std::vector<std::string> labels;
      std::vector<int>         gens;
      if (j.contains("labels")) {
        labels = j.at("labels").get<std::vector<std::string>>();
      }
      if (j.contains("generators")) {
        gens = j.at("generators").get<std::vector<int>>();
      }
      return FiniteSemigroup::from_table(table, labels, gens);
    });
  }

  Json to_json(Dfa const& d) {
    Json j;
    j["states"]   = d.states;
    j["alphabet"] = d.alphabet;
    j["delta"]    = d.delta;
    j["initial"]  = d.initial;
    std::vector<int> finals;
    for (int q = 0; q < d.states; ++q) {
      if (d.finals[q]) {
        finals.push_back(q);
      }
    }
    j["finals"] = finals;
    return j;
  }

  Dfa dfa_from_json(Json const& j) {
    return guarded("dfa", [&] {
      Dfa d;
      d.states   = j.at("states").get<int>();
      d.alphabet = j.at("alphabet").get<std::vector<Symbol>>();
      d.delta    = j.at("delta").get<std::vector<std::vector<int>>>();
      d.initial  = j.at("initial").get<int>();
      d.finals.assign(d.states, false);
      for (int q : j.at("finals").get<std::vector<int>>()) {
        if (q < 0 || q >= d.states) {
          throw FormatError("dfa: final state out of range");
        }
        d.finals[q] = true;
      }
      d.validate();
      return d;
    });
  }

  Json to_json(PseudovarietyDef const& V) {
    Json j;
    j["name"]  = V.name;
    j["basis"] = Json::array();
    for (auto const& pi : V.basis) {
      j["basis"].push_back({{"lhs", to_string(pi.lhs)}, {"rhs", to_string(pi.rhs)}});
    }
    if (V.dual_of) {
      j["dual_of"] = *V.dual_of;
    }
    if (V.word_problem != WordProblem::None) {
      j["word_problem"] = to_string(V.word_problem);
      if (V.wp_param) {
        j["wp_param"] = V.wp_param;
      }
    }
    j["monoidal"]              = V.monoidal;
    j["has_nontrivial_monoid"] = V.has_nontrivial_monoid;
    j["locally_finite"]        = V.locally_finite;
    return j;
  }

  PseudovarietyDef pseudovariety_from_json(Json const& j) {
    return guarded("pseudovariety", [&] {
      PseudovarietyDef V;
      V.name = j.at("name").get<std::string>();
      for (auto const& b : j.at("basis")) {
        V.basis.emplace_back(parse_term(b.at("lhs").get<std::string>()),
                             parse_term(b.at("rhs").get<std::string>()));
      }
      if (j.contains("dual_of") && !j.at("dual_of").is_null()) {
        V.dual_of = j.at("dual_of").get<std::string>();
      }
      if (j.contains("word_problem")) {
        auto wp = word_problem_from_string(j.at("word_problem").get<std::string>());
        if (!wp) {
          throw FormatError("pseudovariety: unknown word problem");
        }
        V.word_problem = *wp;
      }
      V.wp_param              = j.value("wp_param", 0);
      V.monoidal              = j.value("monoidal", false);
      V.has_nontrivial_monoid = j.value("has_nontrivial_monoid", true);
      V.locally_finite        = j.value("locally_finite", false);
      return V;
    });
  }

  Json to_json(Counterexample const& c) {
    Json j;
    j["semigroup"]  = to_json(c.semigroup);
    j["identity"]   = c.identity.to_string();
    j["assignment"] = Json::object();
    for (auto const& [k, v] : c.assignment) {
      j["assignment"][k] = v;
    }
    return j;
  }

  Counterexample counterexample_from_json(Json const& j) {
    return guarded("counterexample", [&] {
      Assignment a;
      for (auto const& [k, v] : j.at("assignment").items()) {
        a[k] = v.get<int>();
      }
      return Counterexample{semigroup_from_json(j.at("semigroup")),
                            a,
                            parse_identity(j.at("identity").get<std::string>())};
    });
  }

  Json to_json(ThreeValued const& t) {
    Json j;
    j["verdict"] = to_string(t.verdict);
    if (t.witness) {
      j["witness"] = to_json(*t.witness);
    }
    if (!t.note.empty()) {
      j["note"] = t.note;
    }
    return j;
  }

  Json to_json(CorpusEntry const& e) {
    Json j;
    j["id"]         = e.id;
    j["order"]      = e.order;
    j["table"]      = e.semigroup.table();
    j["flags"]      = {{"monoid", e.monoid},
                       {"regular", e.regular},
                       {"aperiodic", e.aperiodic}};
    j["provenance"] = e.provenance;
    return j;
  }

  CorpusEntry corpus_entry_from_json(Json const& j) {
    return guarded("corpus entry", [&] {
      CorpusEntry e;
      e.id         = j.at("id").get<std::string>();
      e.semigroup  = FiniteSemigroup::from_table(j.at("table").get<Table>());
      e.order      = e.semigroup.order();
      auto const& f = j.at("flags");
      e.monoid     = f.at("monoid").get<bool>();
      e.regular    = f.at("regular").get<bool>();
      e.aperiodic  = f.at("aperiodic").get<bool>();
      e.provenance = j.value("provenance", std::string("imported"));
      return e;
    });
  }

  void write_corpus_jsonl(std::ostream& out, std::vector<CorpusEntry> const& c) {
    for (auto const& e : c) {
      out << to_json(e).dump() << '\n';
    }
  }

  std::vector<CorpusEntry> read_corpus_jsonl(std::istream& in) {
    std::vector<CorpusEntry> out;
    std::string              line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) {
        continue;
      }
      out.push_back(corpus_entry_from_json(
          guarded("jsonl", [&] { return Json::parse(line); })));
    }
    return out;
  }

  Json read_json_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw FormatError("cannot open " + path);
    }
    return guarded("json", [&] { return Json::parse(in); });
  }

}  // namespace malcev
