#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "malcev/semigroup.hpp"

namespace malcev {

  struct CorpusEntry {
    std::string     id;
    int             order = 0;
    FiniteSemigroup semigroup;  // canonical table
    bool            monoid    = false;
    bool            regular   = false;
    bool            aperiodic = false;
    std::string     provenance = "enumerated";
  };

  struct EnumerateOptions {
    std::uint64_t max_nodes = 20'000'000;
  };

  // all semigroups of order n up to isomorphism, canonical tables, sorted
  std::vector<FiniteSemigroup> enumerate_semigroups(int n,
                                                    EnumerateOptions opt = {});
  // random distinct isomorphism classes of order n
  std::vector<FiniteSemigroup> sample_semigroups(int           n,
                                                 int           count,
                                                 std::uint64_t seed);

  CorpusEntry make_entry(FiniteSemigroup const& S,
                         std::string const&     id,
                         std::string const&     provenance);

  // cached; orders 1..max_order (max_order <= 4)
  std::vector<CorpusEntry> const& corpus(int max_order = 4);
  std::vector<CorpusEntry>        corpus_of_order(int n);

}  // namespace malcev
