#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "malcev/json_io.hpp"

namespace malcev {

  struct SuiteConfig {
    int           max_order = 4;
    std::uint64_t seed      = 1;
    int           jobs      = 1;
    double        budget_ms = 0;  // 0 is unlimited
  };

  struct SuiteReport {
    std::string       suite;
    std::size_t       checked    = 0;
    std::size_t       agreements = 0;
    std::size_t       failed     = 0;
    std::size_t       unknown    = 0;
    std::vector<Json> examples;  // failures and unknowns, replayable
    Json              details = Json::object();
    double            wall_ms = 0;
    bool              budget_exceeded = false;

    bool passed() const noexcept {
      return failed == 0 && !budget_exceeded;
    }
  };

  // without wall time the report is a function of the config
  Json to_json(SuiteReport const& r, bool with_time = true);

  std::vector<std::string> suite_names();

  // throws UnknownName
  SuiteReport run_suite(std::string const& name, SuiteConfig const& cfg = {});

  // lazily evaluated element of T^{D^1} x| D
  struct WreathElement {
    std::vector<int> f;  // index D.order() stands for the adjoined identity
    int              d = 0;
  };
  WreathElement wreath_mul(FiniteSemigroup const& T,
                           FiniteSemigroup const& D,
                           WreathElement const&   x,
                           WreathElement const&   y);

  // orders 1..n through all n^(n*n) tables and permutation checks; n <= 3
  int naive_semigroup_count(int n);

}  // namespace malcev
