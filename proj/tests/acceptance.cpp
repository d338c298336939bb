// Acceptance criteria 1-11, one PASS/FAIL line each.
// usage: acceptance [--criterion N] [--jobs N] [--seed N]

#include <CLI11.hpp>

#include <cstdio>
#include <functional>
#include <string>
#include <thread>

#include "malcev/suites.hpp"

using namespace malcev;

namespace {

  struct Criterion {
    int                                                     id;
    std::string                                             suite;
    double                                                  limit_s;  // 0: none
    std::function<bool(SuiteReport const&, std::string&)> check;
  };

  std::size_t count(Json const& d, std::string const& field) {
    std::size_t n = 0;
    for (auto const& [k, v] : d.items()) {
      if (v.is_object() && v.contains(field)) {
        n += v.at(field).get<std::size_t>();
      }
    }
    return n;
  }

  std::string fmt(char const* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
  }

  std::vector<Criterion> criteria() {
    return {
        {1, "permanence", 10,
         [](SuiteReport const& r, std::string& m) {
           m = fmt("%zu/%zu Proved, %zu Refuted, %zu Unknown", r.agreements,
                   r.checked, r.failed, r.unknown);
           return r.checked == 12 && r.agreements == 12;
         }},
        {2, "malcev_equalities", 300,
         [](SuiteReport const& r, std::string& m) {
           auto low = r.details.at("lower_orders");
           m = fmt("order 4: %zu/%zu agree (need 1128); orders 1-3: %zu checked",
                   r.agreements, r.checked,
                   low.at("checked").get<std::size_t>());
           return r.checked == 1128 && r.agreements == 1128 && r.failed == 0;
         }},
        {3, "locality_commutation", 600,
         [](SuiteReport const& r, std::string& m) {
           m = fmt("%zu/%zu agree", r.agreements, r.checked);
           return r.checked == 218 * 8 * 3 && r.failed == 0;
         }},
        {4, "idempotency", 0,
         [](SuiteReport const& r, std::string& m) {
           m = fmt("%zu/%zu stable", r.agreements, r.checked);
           return r.checked == 218 * 8 && r.failed == 0;
         }},
        {5, "dk_words", 0,
         [](SuiteReport const& r, std::string& m) {
           auto const& cfgs = r.details.at("by_config");
           std::size_t wreath = 0, exact_unknown = 0;
           for (auto const& [k, v] : cfgs.items()) {
             wreath += v.value("wreath_checks", std::size_t{0});
             if (k.rfind("Sl", 0) == 0) {
               exact_unknown += v.value("unknown", std::size_t{0});
             }
           }
           m = fmt("%zu pairs, %zu mismatches, %zu Unknown (sufficient-only V), "
                   "%zu wreath evaluations",
                   r.checked, r.failed, r.unknown, wreath);
           return r.checked >= 10000 && r.failed == 0 && exact_unknown == 0
                  && wreath > 0;
         }},
        {6, "local_monoid_shadow", 0,
         [](SuiteReport const& r, std::string& m) {
           m = fmt("%zu/%zu agree", r.agreements, r.checked);
           return r.checked == 218 * 3 && r.failed == 0;
         }},
        {7, "ilbf2_terms", 0,
         [](SuiteReport const& r, std::string& m) {
           auto const& terms = r.details.at("terms");
           std::size_t cert  = r.details.at("certified_pairs").get<std::size_t>();
           std::size_t unk   = count(terms, "unknown");
           std::size_t words = count(r.details.at("words"), "agree");
           double      frac  = cert ? double(unk) / double(cert) : 1.0;
           m = fmt("%zu certified pairs, %zu Unknown (%.1f%%), %zu failures, "
                   "%zu words clean",
                   cert, unk, 100 * frac, r.failed, words);
           return cert >= 500 && frac < 0.10 && words >= 10000 && r.failed == 0;
         }},
        {8, "ds_dk_regularity", 0,
         [](SuiteReport const& r, std::string& m) {
           auto const& t = r.details.at("terms");
           std::size_t undecided = count(t, "not_applicable");
           m = fmt("%zu terms decided by the oracle, %zu agree, %zu Unknown, "
                   "%zu oracle-undecided",
                   r.checked - r.unknown, r.agreements, r.unknown, undecided);
           return r.checked + undecided == 30 && r.unknown <= 2 && r.failed == 0;
         }},
        {9, "languages_closure", 0,
         [](SuiteReport const& r, std::string& m) {
           bool b2 = r.details.at("ab_plus_is_B2").get<bool>();
           m = fmt("(ab)+ %s B2; %zu products checked, %zu failures",
                   b2 ? "is" : "is not", r.checked - 1, r.failed);
           return b2 && r.checked - 1 >= 50 && r.failed == 0;
         }},
        {10, "duality", 0,
         [](SuiteReport const& r, std::string& m) {
           std::size_t tr = count(r.details.at("transport"), "agree");
           std::size_t mu = count(r.details.at("mu_dual"), "agree");
           m = fmt("%zu transports, %zu mu samples agree, %zu failures", tr, mu,
                   r.failed);
           return tr >= 10000 && mu >= 100 && r.failed == 0;
         }},
        {11, "enumeration_counts", 0,
         [](SuiteReport const& r, std::string& m) {
           auto c = r.details.at("counts").dump();
           m = "counts " + c + ", naive cross-check at orders <= 3";
           return c == "[1,5,24,188]" && r.failed == 0;
         }},
    };
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App    app{"acceptance criteria"};
  int         which = 0;
  SuiteConfig cfg;
  cfg.jobs = std::max(1u, std::thread::hardware_concurrency());
  app.add_option("--criterion", which, "1..11, default all");
  app.add_option("--jobs", cfg.jobs);
  app.add_option("--seed", cfg.seed);
  CLI11_PARSE(app, argc, argv);

  bool all_ok = true;
  for (auto const& c : criteria()) {
    if (which != 0 && c.id != which) {
      continue;
    }
    std::string msg;
    bool        ok;
    double      secs = 0;
    try {
      auto r = run_suite(c.suite, cfg);
      secs   = r.wall_ms / 1000;
      ok     = c.check(r, msg) && !r.budget_exceeded;
      if (c.limit_s > 0 && secs >= c.limit_s) {
        ok = false;
      }
      if (!ok) {
        for (auto const& ex : r.examples) {
          std::printf("  example: %s\n", ex.dump().substr(0, 600).c_str());
        }
      }
    } catch (std::exception const& e) {
      ok  = false;
      msg = std::string("error: ") + e.what();
    }
    std::string limit = c.limit_s > 0 ? fmt(" (limit %.0f s)", c.limit_s) : "";
    std::printf("%s criterion %d [%s]: %s; %.2f s%s\n", ok ? "PASS" : "FAIL",
                c.id, c.suite.c_str(), msg.c_str(), secs, limit.c_str());
    all_ok &= ok;
  }
  return all_ok ? 0 : 1;
}
