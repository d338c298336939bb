#include "malcev/corpus.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <set>

#include "malcev/catalog.hpp"
#include "malcev/error.hpp"

namespace malcev {

  namespace {
    constexpr int kUnset = -1;

    struct Search {
      int                n;
      std::vector<int>   t;
      std::uint64_t      nodes = 0, max_nodes;
      std::mt19937_64*   rng   = nullptr;

      int at(int x, int y) const {
        return t[x * n + y];
      }

      // every fully-defined triple must associate
      bool consistent() const {
        for (int x = 0; x < n; ++x) {
          for (int y = 0; y < n; ++y) {
            int xy = at(x, y);
            if (xy == kUnset) {
              continue;
            }
            for (int z = 0; z < n; ++z) {
              int yz = at(y, z);
              if (yz == kUnset) {
                continue;
              }
              int l = at(xy, z), r = at(x, yz);
              if (l != kUnset && r != kUnset && l != r) {
                return false;
              }
            }
          }
        }
        return true;
      }

      template <typename Emit>
      bool run(int cell, Emit&& emit) {
        if (++nodes > max_nodes) {
          throw BudgetExceeded("enumeration node budget exceeded");
        }
        if (cell == n * n) {
          return emit(t);
        }
        std::vector<int> vals(n);
        for (int v = 0; v < n; ++v) {
          vals[v] = v;
        }
        if (rng != nullptr) {
          std::shuffle(vals.begin(), vals.end(), *rng);
        }
        for (int v : vals) {
          t[cell] = v;
          if (consistent() && !run(cell + 1, emit)) {
            t[cell] = kUnset;
            return false;
          }
        }
        t[cell] = kUnset;
        return true;
      }
    };
  }  // namespace

  std::vector<FiniteSemigroup> enumerate_semigroups(int n, EnumerateOptions opt) {
    if (n < 1 || n > 5) {
      throw BudgetExceeded("enumeration supported for orders 1..5");
    }
    Search s{n, std::vector<int>(n * n, kUnset), 0, opt.max_nodes};
    std::set<std::vector<int>> seen;
    s.run(0, [&](std::vector<int> const& t) {
      seen.insert(canonical_key(FiniteSemigroup::trusted(n, t)));
      return true;
    });
    std::vector<FiniteSemigroup> out;
    for (auto const& k : seen) {
      out.push_back(FiniteSemigroup::trusted(n, k));
    }
    return out;
  }

  std::vector<FiniteSemigroup> sample_semigroups(int           n,
                                                 int           count,
                                                 std::uint64_t seed) {
    if (n < 1 || n > 6) {
      throw BudgetExceeded("sampling supported for orders 1..6");
    }
    std::mt19937_64            rng(seed);
    std::set<std::vector<int>> seen;
    std::vector<FiniteSemigroup> out;
    int                          attempts = 0;
    while (static_cast<int>(out.size()) < count && attempts++ < count * 50) {
      Search s{n, std::vector<int>(n * n, kUnset), 0, 2'000'000, &rng};
      s.run(0, [&](std::vector<int> const& t) {
        auto k = canonical_key(FiniteSemigroup::trusted(n, t));
        if (seen.insert(k).second) {
          out.push_back(FiniteSemigroup::trusted(n, k));
        }
        return false;  // one table per restart
      });
    }
    return out;
  }

  CorpusEntry make_entry(FiniteSemigroup const& S,
                         std::string const&     id,
                         std::string const&     provenance) {
    CorpusEntry e;
    e.id         = id;
    e.order      = S.order();
    e.semigroup  = S;
    e.monoid     = is_monoid(S);
    e.provenance = provenance;
    auto const& g = green(S);
    e.regular     = g.regular_j.size() == g.j_classes.size();
    e.aperiodic   = g.h_classes.size() == static_cast<size_t>(S.order());
    return e;
  }

  std::vector<CorpusEntry> corpus_of_order(int n) {
    std::vector<CorpusEntry> out;
    int                      i = 0;
    for (auto const& S : enumerate_semigroups(n)) {
      out.push_back(make_entry(
          S, "n" + std::to_string(n) + "_" + std::to_string(i++), "enumerated"));
    }
    return out;
  }

  std::vector<CorpusEntry> const& corpus(int max_order) {
    static std::once_flag                      once;
    static std::vector<std::vector<CorpusEntry>> by_order;
    static std::map<int, std::vector<CorpusEntry>> prefix;
    static std::mutex                            mu;
    if (max_order < 1 || max_order > 4) {
      throw BudgetExceeded("cached corpus covers orders 1..4");
    }
    std::call_once(once, [] {
      for (int n = 1; n <= 4; ++n) {
        by_order.push_back(corpus_of_order(n));
      }
    });
    std::lock_guard<std::mutex> lock(mu);
    auto                        it = prefix.find(max_order);
    if (it == prefix.end()) {
      std::vector<CorpusEntry> all;
      for (int n = 1; n <= max_order; ++n) {
        all.insert(all.end(), by_order[n - 1].begin(), by_order[n - 1].end());
      }
      it = prefix.emplace(max_order, std::move(all)).first;
    }
    return it->second;
  }

}  // namespace malcev
