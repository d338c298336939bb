#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "malcev/corpus.hpp"
#include "malcev/languages.hpp"
#include "malcev/pseudovariety.hpp"
#include "malcev/semigroup.hpp"
#include "malcev/verdict.hpp"

namespace malcev {

  using Json = nlohmann::ordered_json;

  // {"order", "table", "labels"?, "generators"?}
  Json            to_json(FiniteSemigroup const& S);
  FiniteSemigroup semigroup_from_json(Json const& j);

  // {"states", "alphabet", "delta", "initial", "finals"}
  Json to_json(Dfa const& d);
  Dfa  dfa_from_json(Json const& j);

  // {"name", "basis": [{"lhs", "rhs"}], "dual_of"?, "word_problem"?, ...}
  Json             to_json(PseudovarietyDef const& V);
  PseudovarietyDef pseudovariety_from_json(Json const& j);

  Json           to_json(Counterexample const& c);
  Counterexample counterexample_from_json(Json const& j);

  Json to_json(ThreeValued const& t);

  Json        to_json(CorpusEntry const& e);
  CorpusEntry corpus_entry_from_json(Json const& j);

  void write_corpus_jsonl(std::ostream& out, std::vector<CorpusEntry> const& c);
  std::vector<CorpusEntry> read_corpus_jsonl(std::istream& in);

  // throws FormatError on unreadable files or malformed JSON
  Json read_json_file(std::string const& path);

}  // namespace malcev
