#include "malcev/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "malcev/catalog.hpp"
#include "malcev/certifier.hpp"
#include "malcev/corpus.hpp"
#include "malcev/error.hpp"
#include "malcev/factorization.hpp"
#include "malcev/languages.hpp"
#include "malcev/semilocal.hpp"
#include "malcev/window.hpp"

namespace malcev {

  namespace {

    using Clock = std::chrono::steady_clock;

    struct Outcome {
      enum Status { Skipped, Agree, Fail, Unknown, NotApplicable };
      Status status = Skipped;
      Json   example;
      Json   tag;  // optional grouping key for details
    };

    Outcome agree(Json tag = {}) {
      return {Outcome::Agree, {}, std::move(tag)};
    }
    Outcome fail(Json ex, Json tag = {}) {
      return {Outcome::Fail, std::move(ex), std::move(tag)};
    }
    Outcome unknown(Json ex, Json tag = {}) {
      return {Outcome::Unknown, std::move(ex), std::move(tag)};
    }
    Outcome not_applicable(Json tag = {}) {
      return {Outcome::NotApplicable, {}, std::move(tag)};
    }

    constexpr std::size_t max_examples = 10;

    class Runner {
     public:
      Runner(std::string name, SuiteConfig const& cfg)
          : cfg_(cfg), start_(Clock::now()) {
        report_.suite = std::move(name);
      }

      // evaluates f(0..n-1) in parallel, reduces in index order
      template <typename F>
      std::vector<Outcome> run(std::size_t n, F&& f) {
        std::vector<Outcome>     out(n);
        std::atomic<std::size_t> next{0};
        auto                     worker = [&] {
          while (true) {
            std::size_t i = next++;
            if (i >= n || over_budget()) {
              return;
            }
            try {
              out[i] = f(i);
            } catch (std::exception const& e) {
              out[i] = fail(Json{{"case", i}, {"error", e.what()}});
            }
          }
        };
        int                      jobs = std::max(1, cfg_.jobs);
        std::vector<std::thread> pool;
        for (int j = 1; j < jobs; ++j) {
          pool.emplace_back(worker);
        }
        worker();
        for (auto& t : pool) {
          t.join();
        }
        for (auto const& o : out) {
          add(o);
        }
        return out;
      }

      void add(Outcome const& o) {
        switch (o.status) {
          case Outcome::Skipped:
            report_.budget_exceeded = true;
            return;
          case Outcome::NotApplicable:
            return;
          case Outcome::Agree:
            ++report_.checked;
            ++report_.agreements;
            return;
          case Outcome::Fail:
            ++report_.checked;
            ++report_.failed;
            break;
          case Outcome::Unknown:
            ++report_.checked;
            ++report_.unknown;
            break;
        }
        if (report_.examples.size() < max_examples) {
          Json ex        = o.example;
          ex["verdict"] = o.status == Outcome::Fail ? "fail" : "unknown";
          report_.examples.push_back(ex);
        }
      }

      SuiteReport& report() {
        return report_;
      }

      SuiteReport finish() {
        report_.wall_ms = std::chrono::duration<double, std::milli>(
                              Clock::now() - start_)
                              .count();
        return report_;
      }

      SuiteConfig const& cfg() const {
        return cfg_;
      }

      std::mt19937_64 rng(std::uint64_t salt) const {
        std::seed_seq s{cfg_.seed, salt};
        return std::mt19937_64(s);
      }

     private:
      bool over_budget() const {
        return cfg_.budget_ms > 0
               && std::chrono::duration<double, std::milli>(Clock::now()
                                                            - start_)
                          .count()
                      > cfg_.budget_ms;
      }

      SuiteConfig cfg_;
      Clock::time_point start_;
      SuiteReport report_;
    };

    // counts outcomes per tag into details[key]
    void tally(Json& details, std::string const& key,
               std::vector<Outcome> const& out) {
      Json& d = details[key];
      for (auto const& o : out) {
        if (o.tag.is_null()) {
          continue;
        }
        std::string t = o.tag.is_string() ? o.tag.get<std::string>()
                                          : o.tag.dump();
        char const* field = "not_applicable";
        switch (o.status) {
          case Outcome::Agree:
            field = "agree";
            break;
          case Outcome::Fail:
            field = "fail";
            break;
          case Outcome::Unknown:
            field = "unknown";
            break;
          case Outcome::Skipped:
            field = "skipped";
            break;
          default:
            break;
        }
        Json& cell = d[t][field];
        cell       = cell.is_null() ? 1 : cell.get<int>() + 1;
      }
    }

    std::vector<CorpusEntry> corpus_upto(int max_order) {
      std::vector<CorpusEntry> c;
      for (auto const& e : corpus(std::min(max_order, 4))) {
        if (e.order <= max_order) {
          c.push_back(e);
        }
      }
      return c;
    }

    Json entry_json(CorpusEntry const& e) {
      return {{"id", e.id}, {"semigroup", to_json(e.semigroup)}};
    }

    Word random_word(std::mt19937_64& rng, Word const& A, int lo, int hi) {
      Word w(std::uniform_int_distribution<int>(lo, hi)(rng));
      for (auto& s : w) {
        s = A[std::uniform_int_distribution<std::size_t>(0, A.size() - 1)(rng)];
      }
      return w;
    }

    Exponent random_exponent(std::mt19937_64& rng, bool primes) {
      switch (std::uniform_int_distribution<int>(0, primes ? 6 : 4)(rng)) {
        case 0:
          return Exponent::finite(2);
        case 1:
          return Exponent::finite(3);
        case 2:
        case 3:
          return Exponent::omega();
        case 4:
          return Exponent::omega(std::uniform_int_distribution<int>(-1, 1)(rng));
        case 5:
          return Exponent::prime_omega(2);
        default:
          return Exponent::prime_omega(3, 1);
      }
    }

    Term random_term(std::mt19937_64& rng, Word const& A, int depth,
                     bool primes) {
      int               n = std::uniform_int_distribution<int>(1, 3)(rng);
      std::vector<Term> f;
      for (int i = 0; i < n; ++i) {
        if (depth <= 0 || std::uniform_int_distribution<int>(0, 2)(rng) != 0) {
          f.push_back(Term::letter(
              A[std::uniform_int_distribution<std::size_t>(0, A.size() - 1)(
                  rng)]));
        } else {
          f.push_back(Term::power(random_term(rng, A, depth - 1, primes),
                                  random_exponent(rng, primes)));
        }
      }
      return Term::concat(f);
    }

    // rewrites valid in every finite semigroup, applied at a random power
    Term mutate(std::mt19937_64& rng, Term const& t, bool& changed) {
      if (t.kind() == Term::Kind::Letter) {
        return t;
      }
      if (t.kind() == Term::Kind::Concat) {
        auto f = t.factors();
        std::vector<std::size_t> powers;
        for (std::size_t i = 0; i < f.size(); ++i) {
          if (f[i].kind() != Term::Kind::Letter) {
            powers.push_back(i);
          }
        }
        if (powers.empty()) {
          return t;
        }
        auto i = powers[std::uniform_int_distribution<std::size_t>(
            0, powers.size() - 1)(rng)];
        f[i] = mutate(rng, f[i], changed);
        return Term::concat(f);
      }
      Term const&     b = t.base();
      Exponent const& e = t.exponent();
      if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) {
        Term nb = mutate(rng, b, changed);
        if (changed) {
          return Term::power(nb, e);
        }
      }
      int choice = std::uniform_int_distribution<int>(0, 4)(rng);
      if (e.infinite() || e.q > 1) {
        changed = true;
        switch (choice) {
          case 0:
            return Term::concat({b, Term::power(b, e.plus(-1))});
          case 1:
            return Term::concat({Term::power(b, e.plus(-1)), b});
          default:
            break;
        }
      }
      if (e.kind == Exponent::Kind::Omega && e.q == 0) {
        changed = true;
        switch (choice) {
          case 2:
            return Term::concat({t, t});
          case 3:
            return Term::power(t, Exponent::omega());
          default:
            return Term::power(Term::power(b, Exponent::finite(2)),
                               Exponent::omega());
        }
      }
      return t;
    }

    // identity in T wr D
    WreathElement wreath_letter(std::mt19937_64& rng, FiniteSemigroup const& T,
                                int d, int dsize) {
      WreathElement x;
      x.f.resize(dsize + 1);
      for (auto& v : x.f) {
        v = std::uniform_int_distribution<int>(0, T.order() - 1)(rng);
      }
      x.d = d;
      return x;
    }

    Word concat_words(std::vector<Word> const& parts) {
      Word w;
      for (auto const& p : parts) {
        w.insert(w.end(), p.begin(), p.end());
      }
      return w;
    }

    std::vector<std::string> lsl_regexes() {
      return {"a",         "b",          "ab",         "a|b",
              "(a|b)+",    "a(a|b)*",    "(a|b)*b",    "a(a|b)*b",
              "b(a|b)*a",  "(a|b)*ab(a|b)*", "(a|b)*aa(a|b)*",
              "a+",        "b+",         "a(a|b)*|b",  "(a|b)*a(a|b)*",
              "ab(a|b)*",  "(a|b)*ba",   "a+b(a|b)*"};
    }

    // --------------------------------------------------------------------

    SuiteReport permanence(SuiteConfig const& cfg) {
      Runner r("permanence", cfg);
      struct Case {
        std::string    label;
        PseudoIdentity pi;
        bool           left;
      };
      std::vector<Case> cases;
      std::vector<std::string> five = {"x1^w = x1^w x2",
                                       "x1^w = x1^w x2^w",
                                       "x1^w = x1^w x2 x1^w",
                                       "x1^w = (x1^w x2 x1^w)^w",
                                       "x2^w = x2^(w+1)"};
      for (auto const& s : five) {
        auto pi = parse_identity(s);
        pi.alphabet = {"x1", "x2"};
        cases.push_back({"left", pi, true});
        cases.push_back({"right (dual)", reverse_chi(pi), false});
      }
      for (int p : {2, 3}) {
        for (auto const& pi : pseudovariety("LG_" + std::to_string(p)).basis) {
          cases.push_back({"left LG_" + std::to_string(p), pi, true});
        }
      }
      auto out = r.run(cases.size(), [&](std::size_t i) {
        auto const& c = cases[i];
        ThreeValued v = c.left ? is_left_permanent(c.pi) : is_right_permanent(c.pi);
        Json ex{{"identity", c.pi.to_string()},
                {"side", c.label},
                {"result", to_json(v)}};
        if (v.is_proved()) {
          return agree(c.label);
        }
        return v.is_refuted() ? fail(ex, c.label) : unknown(ex, c.label);
      });
      tally(r.report().details, "by_side", out);
      return r.finish();
    }

    SuiteReport malcev_equalities(SuiteConfig const& cfg) {
      Runner r("malcev_equalities", cfg);
      struct Pair {
        char const* target;
        ZClass      z;
      };
      std::vector<Pair> pairs = {{"R", ZClass::K},  {"L", ZClass::D},
                                 {"DA", ZClass::LI}, {"DS", ZClass::LG},
                                 {"J", ZClass::N},  {"DG", ZClass::NvG}};
      auto const& Sl = pseudovariety("Sl");
      auto        c  = corpus_upto(cfg.max_order);
      auto        eval = [&](CorpusEntry const& e, Pair const& p) {
        bool a = member(e.semigroup, pseudovariety(p.target));
        bool b = malcev_member(e.semigroup, p.z, Sl);
        std::string tag = std::string(p.target) + " = " + to_string(p.z) + " m Sl";
        if (a == b) {
          return agree(tag);
        }
        Json ex = entry_json(e);
        ex["pair"]        = tag;
        ex["omega_basis"] = a;
        ex["malcev"]      = b;
        return fail(ex, tag);
      };
      std::vector<CorpusEntry> top, lower;
      for (auto const& e : c) {
        (e.order == cfg.max_order ? top : lower).push_back(e);
      }
      auto out = r.run(top.size() * pairs.size(), [&](std::size_t i) {
        return eval(top[i / pairs.size()], pairs[i % pairs.size()]);
      });
      tally(r.report().details, "by_pair", out);
      r.report().details["order"] = cfg.max_order;
      // smaller orders are reported apart from the headline count
      Runner low("lower", cfg);
      low.run(lower.size() * pairs.size(), [&](std::size_t i) {
        return eval(lower[i / pairs.size()], pairs[i % pairs.size()]);
      });
      auto const& lr = low.report();
      r.report().details["lower_orders"] = {{"checked", lr.checked},
                                            {"failed", lr.failed}};
      r.report().failed += lr.failed;
      for (auto const& ex : lr.examples) {
        if (r.report().examples.size() < max_examples) {
          r.report().examples.push_back(ex);
        }
      }
      r.report().budget_exceeded |= lr.budget_exceeded;
      return r.finish();
    }

    template <typename Sides>
    SuiteReport corpus_zv(std::string const&                   name,
                          SuiteConfig const&                   cfg,
                          std::vector<std::string> const&      vs,
                          Sides&&                              sides) {
      Runner r(name, cfg);
      auto   c  = corpus_upto(cfg.max_order);
      auto   zs = all_zclasses();
      std::size_t per = zs.size() * vs.size();
      auto out = r.run(c.size() * per, [&](std::size_t i) {
        auto const& e = c[i / per];
        ZClass      z = zs[(i % per) / vs.size()];
        auto const& V = pseudovariety(vs[i % vs.size()]);
        auto [a, b]   = sides(e.semigroup, z, V);
        std::string tag = to_string(z) + "/" + V.name;
        if (a == b) {
          return agree(tag);
        }
        Json ex = entry_json(e);
        ex["z"] = to_string(z);
        ex["v"] = V.name;
        ex["sides"] = {a, b};
        return fail(ex, tag);
      });
      tally(r.report().details, "by_z_v", out);
      return r.finish();
    }

    SuiteReport dk_words(SuiteConfig const& cfg) {
      Runner r("dk_words", cfg);
      struct Config {
        std::string V;
        int         k;
        Word        A;
      };
      std::vector<Config> configs = {
          {"Sl", 1, {"a", "b", "c"}},  {"Sl", 2, {"a", "b"}},
          {"K_2", 1, {"a", "b", "c"}}, {"K_2", 2, {"a", "b", "c"}},
          {"D_2", 1, {"a", "b", "c"}}, {"D_2", 2, {"a", "b", "c"}},
          {"N_2", 1, {"a", "b", "c"}}, {"N_2", 2, {"a", "b", "c"}}};
      constexpr std::size_t pairs_per_config = 1300;
      constexpr int         wreath_T = 2, wreath_assignments = 3;

      for (std::size_t ci = 0; ci < configs.size(); ++ci) {
        auto const& cf = configs[ci];
        auto const& V  = pseudovariety(cf.V);
        auto        F  = free_object_vdk(V, cf.A, cf.k);
        auto        D  = free_dk(cf.k, static_cast<int>(cf.A.size()));
        std::vector<FiniteSemigroup> Ts;
        for (auto const& e : corpus_upto(cfg.max_order)) {
          if (e.order > 1 && member(e.semigroup, V)) {
            Ts.push_back(e.semigroup);
          }
        }
        std::vector<int> dgen;
        for (auto const& a : cf.A) {
          dgen.push_back(D.find_label(a));
        }
        // pairs: half from equal-image buckets, half uniform
        auto rng = r.rng(ci);
        std::vector<Word>                    pool;
        std::map<int, std::vector<std::size_t>> bucket;
        for (int i = 0; i < 800; ++i) {
          pool.push_back(random_word(rng, cf.A, 1, 8));
          bucket[F.image(pool.back())].push_back(pool.size() - 1);
        }
        std::vector<std::pair<Word, Word>> pairs;
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        for (std::size_t i = 0; i < pairs_per_config; ++i) {
          auto const& u = pool[pick(rng)];
          if (i % 2 == 0) {
            auto const& b = bucket[F.image(u)];
            pairs.push_back(
                {u, pool[b[std::uniform_int_distribution<std::size_t>(
                    0, b.size() - 1)(rng)]]});
          } else {
            pairs.push_back({u, pool[pick(rng)]});
          }
        }
        VdkPolicy policy = V.has_nontrivial_monoid ? VdkPolicy::Strict
                                                   : VdkPolicy::SufficientOnly;
        std::string tag = cf.V + " k=" + std::to_string(cf.k);
        std::atomic<std::size_t> wreath_checks{0};
        auto out = r.run(pairs.size(), [&](std::size_t i) {
          auto const& [u, v] = pairs[i];
          ThreeValued t  = vdk_satisfies(V, cf.k, u, v, policy);
          bool        eq = F.image(u) == F.image(v);
          Json ex{{"v", cf.V}, {"k", cf.k}, {"u", to_string(u)},
                  {"w", to_string(v)}, {"result", to_json(t)},
                  {"equal_images", eq}};
          if (t.is_unknown()) {
            return eq ? fail(ex, tag) : unknown(ex, tag);
          }
          if (t.is_proved() != eq) {
            return fail(ex, tag);
          }
          if (!t.is_proved() || Ts.empty()) {
            return agree(tag);
          }
          auto wr = r.rng(1000 * (ci + 1) + i);
          for (int j = 0; j < wreath_T; ++j) {
            auto const& T = Ts[std::uniform_int_distribution<std::size_t>(
                0, Ts.size() - 1)(wr)];
            for (int s = 0; s < wreath_assignments; ++s) {
              std::map<Symbol, WreathElement> a;
              for (std::size_t l = 0; l < cf.A.size(); ++l) {
                a[cf.A[l]] = wreath_letter(wr, T, dgen[l], D.order());
              }
              auto eval = [&](Word const& w) {
                WreathElement x = a.at(w[0]);
                for (std::size_t p = 1; p < w.size(); ++p) {
                  x = wreath_mul(T, D, x, a.at(w[p]));
                }
                return x;
              };
              auto x = eval(u), y = eval(v);
              ++wreath_checks;
              if (x.f != y.f || x.d != y.d) {
                ex["wreath_refutes"] = to_json(T);
                return fail(ex, tag);
              }
            }
          }
          return agree(tag);
        });
        tally(r.report().details, "by_config", out);
        r.report().details["by_config"][tag]["free_object_order"]
            = F.semigroup.order();
        r.report().details["by_config"][tag]["wreath_checks"]
            = wreath_checks.load();
      }
      return r.finish();
    }

    SuiteReport local_monoid_shadow(SuiteConfig const& cfg) {
      Runner r("local_monoid_shadow", cfg);
      std::vector<std::pair<ZClass, std::string>> pairs = {
          {ZClass::K, "R"}, {ZClass::LI, "DA"}, {ZClass::D, "L"}};
      auto const& Sl = pseudovariety("Sl");
      auto        c  = corpus_upto(cfg.max_order);
      auto out = r.run(c.size() * pairs.size(), [&](std::size_t i) {
        auto const& e      = c[i / pairs.size()];
        auto const& [z, t] = pairs[i % pairs.size()];
        bool a = lv_member(mu_quotient(e.semigroup, z), Sl);
        bool b = lv_member(e.semigroup, pseudovariety(t));
        std::string tag = "mu_" + to_string(z) + " / " + t;
        if (a == b) {
          return agree(tag);
        }
        Json ex = entry_json(e);
        ex["pair"]  = tag;
        ex["sides"] = {a, b};
        return fail(ex, tag);
      });
      tally(r.report().details, "by_pair", out);
      return r.finish();
    }

    Json ilbf2_json(Ilbf2Term const& f) {
      Json j{{"outcome", to_string(f.outcome)}, {"factors", Json::array()}};
      for (auto const& t : f.factors) {
        j["factors"].push_back(to_string(t));
      }
      if (f.q) {
        j["q"] = to_string(*f.q);
      }
      return j;
    }

    Outcome word_checks(Word const& u) {
      Json ex{{"word", to_string(u)}};
      // lbf against every split
      auto             c = content(u);
      std::vector<int> valid;
      for (std::size_t i = 0; i < u.size(); ++i) {
        Word x(u.begin(), u.begin() + i);
        auto cx = content(x);
        auto cxa = cx;
        cxa.insert(u[i]);
        if (!cx.count(u[i]) && cxa == c) {
          valid.push_back(static_cast<int>(i));
        }
      }
      auto l = lbf(u);
      if (valid.size() != 1 || l.x.size() != static_cast<std::size_t>(valid[0])
          || l.a != u[valid[0]]
          || concat_words({l.x, {l.a}, l.y}) != u) {
        ex["check"] = "lbf";
        return fail(ex);
      }
      // ilbf recombination
      auto f = ilbf(u);
      std::vector<Word> parts;
      for (auto const& [x, a] : f.factors) {
        Word xa = x;
        xa.push_back(a);
        if (content(xa) != c) {
          ex["check"] = "ilbf factor content";
          return fail(ex);
        }
        parts.push_back(xa);
      }
      parts.push_back(f.remainder);
      auto cr = content(f.remainder);
      if (concat_words(parts) != u || cr.size() >= c.size()
          || f.outcome != IlbfOutcome::Finite) {
        ex["check"] = "ilbf recombination";
        return fail(ex);
      }
      if (u.size() < 2) {
        return agree();
      }
      // ilbf2: factors concatenate to u; Phi_1 with bridging blocks
      auto g     = ilbf2(u);
      auto whole = g.factors;
      whole.push_back(g.q);
      if (concat_words(whole) != u) {
        ex["check"] = "ilbf2 recombination";
        return fail(ex);
      }
      Word blocks;
      for (std::size_t i = 0; i < whole.size(); ++i) {
        if (whole[i].empty()) {
          ex["check"] = "ilbf2 empty factor";
          return fail(ex);
        }
        auto p = phi_k(whole[i], 1).blocks;
        blocks.insert(blocks.end(), p.begin(), p.end());
        if (i + 1 < whole.size()) {
          blocks.push_back(make_block({whole[i].back(), whole[i + 1].front()}));
        }
      }
      if (blocks != phi_k(u, 1).blocks) {
        ex["check"] = "ilbf2 Phi_1 bridging";
        return fail(ex);
      }
      return agree();
    }

    SuiteReport ilbf2_terms(SuiteConfig const& cfg) {
      Runner r("ilbf2_terms", cfg);
      Word   A{"a", "b"};
      auto   R = pseudovariety("R");

      // constructed pairs equal over S
      constexpr std::size_t candidates = 800;
      std::vector<std::pair<Term, Term>> pairs;
      auto rng = r.rng(1);
      while (pairs.size() < candidates) {
        Term u = random_term(rng, A, 2, false);
        if (u.is_finite() || finite_length(u).value_or(2) < 2) {
          continue;
        }
        bool changed = false;
        Term v       = u;
        int  steps   = std::uniform_int_distribution<int>(1, 3)(rng);
        for (int s = 0; s < steps; ++s) {
          v = mutate(rng, v, changed);
        }
        if (changed && v != u) {
          pairs.push_back({u, v});
        }
      }
      std::atomic<std::size_t> certified{0};
      auto out = r.run(pairs.size(), [&](std::size_t i) {
        auto const& [u, v] = pairs[i];
        if (!proves_equal_over_S(u, v).is_proved()) {
          return not_applicable(std::string("uncertified"));
        }
        ++certified;
        Json ex{{"u", to_string(u)}, {"v", to_string(v)}};
        auto fu = ilbf2(u), fv = ilbf2(v);
        ex["ilbf2_u"] = ilbf2_json(fu);
        ex["ilbf2_v"] = ilbf2_json(fv);
        if (fu.outcome == IlbfOutcome::Unknown
            || fv.outcome == IlbfOutcome::Unknown) {
          return unknown(ex, std::string("pairs"));
        }
        if (fu.outcome != fv.outcome
            || (fu.outcome == IlbfOutcome::Finite
                && fu.factors.size() != fv.factors.size())) {
          ex["check"] = "lengths";
          return fail(ex, std::string("pairs"));
        }
        std::vector<std::pair<Term, Term>> comp;
        std::size_t n = std::min(fu.factors.size(), fv.factors.size());
        for (std::size_t j = 0; j < n; ++j) {
          comp.push_back({fu.factors[j], fv.factors[j]});
        }
        if (fu.q && fv.q) {
          comp.push_back({*fu.q, *fv.q});
        }
        bool undecided = false;
        for (auto const& [x, y] : comp) {
          auto t = vdk_satisfies(R, 1, x, y);
          if (t.is_refuted()) {
            ex["check"]     = "component";
            ex["component"] = {to_string(x), to_string(y)};
            return fail(ex, std::string("pairs"));
          }
          undecided |= t.is_unknown();
        }
        std::string tag = to_string(fu.outcome) + " length "
                          + std::to_string(fu.factors.size());
        return undecided ? unknown(ex, tag) : agree(tag);
      });
      tally(r.report().details, "terms", out);
      r.report().details["certified_pairs"] = certified.load();

      // random words
      constexpr std::size_t words = 10000;
      std::vector<Word>     ws;
      auto                  wr = r.rng(2);
      for (std::size_t i = 0; i < words; ++i) {
        ws.push_back(random_word(wr, {"a", "b", "c"}, 1, 10));
      }
      auto wout = r.run(ws.size(), [&](std::size_t i) {
        auto o = word_checks(ws[i]);
        o.tag  = "words";
        return o;
      });
      tally(r.report().details, "words", wout);

      // degenerate single-block cases
      struct Degenerate {
        char const*       u;
        std::vector<Word> factors;
        Word              q;
      };
      std::vector<Degenerate> deg = {{"aa", {{"a"}}, {"a"}},
                                     {"ab", {{"a"}}, {"b"}},
                                     {"aaa", {{"a"}, {"a"}}, {"a"}},
                                     {"abab", {{"a", "b"}}, {"a", "b"}}};
      for (auto const& d : deg) {
        auto g = ilbf2(parse_word(d.u));
        Json ex{{"word", d.u}, {"check", "degenerate convention"}};
        r.add(g.factors == d.factors && g.q == d.q ? agree() : fail(ex));
      }
      return r.finish();
    }

    SuiteReport ds_dk_regularity(SuiteConfig const& cfg) {
      Runner r("ds_dk_regularity", cfg);
      std::vector<std::pair<std::string, int>> terms = {
          {"(a b)^w", 1},           {"a b a b", 1},
          {"a^w b a^w", 1},         {"(a b c)^w", 1},
          {"(a b c)^w a", 1},       {"((a b)^w c)^w", 1},
          {"a^w", 1},               {"(a^w b)^w", 1},
          {"a b", 1},               {"a a b", 1},
          {"(a b)^w c", 1},         {"c (a b)^w", 1},
          {"(a b)^w (b a)^w", 1},   {"(a a b)^w", 1},
          {"a^w b^w", 1},           {"(a^w b^w)^w", 1},
          {"(a b)^(w+1)", 1},       {"(a b)^(w-1) a", 1},
          {"a b c a b c", 1},       {"(a b a)^w", 1},
          {"(a b)^w c (a b)^w", 1}, {"(a (b c)^w)^w", 1},
          {"(a b c b)^w", 1},       {"b (a^w b)^w a", 1},
          {"(a b)^3", 1},           {"((a b)^w (b a)^w)^w", 1},
          {"(a^w b a^w)^w", 1},     {"(a b)^w", 2},
          {"(a b c)^w", 2},         {"a b a b a b", 2}};
      auto out = r.run(terms.size(), [&](std::size_t i) {
        auto const& [s, k] = terms[i];
        Term        t      = parse_term(s);
        auto        v      = ds_dk_regular(t, k);
        std::vector<std::size_t> lens;
        for (std::int64_t M : {4, 6, 8}) {
          Word w = expand(unfold(t, M));
          lens.push_back(ilbf(phi_k(w, k).blocks).length());
        }
        Json ex{{"term", s}, {"k", k}, {"result", to_json(v)},
                {"oracle_lengths", lens}};
        bool grows  = lens[0] < lens[1] && lens[1] < lens[2];
        bool stable = lens[0] == lens[1] && lens[1] == lens[2];
        if (v.is_unknown()) {
          return unknown(ex, std::string("unknown"));
        }
        if (!grows && !stable) {
          return not_applicable(std::string("oracle undecided"));
        }
        return v.is_proved() == grows ? agree(std::string("decided"))
                                      : fail(ex, std::string("decided"));
      });
      tally(r.report().details, "terms", out);
      return r.finish();
    }

    SuiteReport languages_closure(SuiteConfig const& cfg) {
      Runner r("languages_closure", cfg);
      {
        auto syn = syntactic_semigroup(parse_regex("(ab)+"));
        bool iso = canonical_form(syn.semigroup).same_table(
            canonical_form(brandt_b2()));
        Json ex{{"regex", "(ab)+"}, {"semigroup", to_json(syn.semigroup)}};
        r.add(iso ? agree() : fail(ex));
        r.report().details["ab_plus_is_B2"] = iso;
      }
      std::vector<Symbol> A{"a", "b"};
      auto const&         Sl = pseudovariety("Sl");
      std::vector<Dfa>    pool;
      std::vector<std::string> names;
      auto keep = [&](Dfa const& d, std::string const& name) {
        Dfa p = plus_part(d);
        if (is_empty(p) || !lv_member(syntactic_semigroup(p).semigroup, Sl)) {
          return;
        }
        for (auto const& q : pool) {
          if (q == p) {
            return;
          }
        }
        pool.push_back(p);
        names.push_back(name);
      };
      for (auto const& s : lsl_regexes()) {
        keep(parse_regex(s, A), s);
      }
      auto rng = r.rng(3);
      for (int i = 0; i < 400 && pool.size() < 30; ++i) {
        Dfa d;
        d.states   = std::uniform_int_distribution<int>(1, 4)(rng);
        d.alphabet = A;
        d.initial  = 0;
        d.delta.assign(d.states, std::vector<int>(2));
        for (auto& row : d.delta) {
          for (auto& x : row) {
            x = std::uniform_int_distribution<int>(0, d.states - 1)(rng);
          }
        }
        for (int q = 0; q < d.states; ++q) {
          d.finals.push_back(std::uniform_int_distribution<int>(0, 1)(rng));
        }
        keep(d, "random dfa " + std::to_string(i));
      }
      r.report().details["lsl_languages"] = pool.size();
      std::size_t n = pool.size();
      auto out = r.run(n * n * A.size(), [&](std::size_t i) {
        std::size_t a = i % A.size(), j2 = (i / A.size()) % n,
                    j1 = i / (A.size() * n);
        auto const& L1 = pool[j1];
        auto const& L2 = pool[j2];
        bool ld = is_left_deterministic(L1, A[a], L2);
        bool rd = is_right_deterministic(L1, A[a], L2);
        bool un = is_unambiguous(L1, A[a], L2);
        if (!ld && !rd && !un) {
          return not_applicable(std::string("ambiguous"));
        }
        auto S = syntactic_semigroup(marked_product(L1, A[a], L2)).semigroup;
        bool okl = !ld || lv_member(S, pseudovariety("R"));
        bool okr = !rd || lv_member(S, pseudovariety("L"));
        bool oku = !un || lv_member(S, pseudovariety("DA"));
        std::string tag = std::string(ld ? "L" : "-") + (rd ? "R" : "-")
                          + (un ? "U" : "-");
        if (okl && okr && oku) {
          return agree(tag);
        }
        Json ex{{"L1", names[j1]}, {"a", A[a]}, {"L2", names[j2]},
                {"left_deterministic", ld}, {"right_deterministic", rd},
                {"unambiguous", un}, {"syntactic_order", S.order()},
                {"in_LR", lv_member(S, pseudovariety("R"))},
                {"in_LL", lv_member(S, pseudovariety("L"))},
                {"in_LDA", lv_member(S, pseudovariety("DA"))}};
        return fail(ex, tag);
      });
      tally(r.report().details, "products", out);
      return r.finish();
    }

    SuiteReport duality(SuiteConfig const& cfg) {
      Runner r("duality", cfg);
      auto   c = corpus_upto(cfg.max_order);
      constexpr std::size_t transports = 12000;
      struct Inst {
        std::size_t    s;
        PseudoIdentity pi;
      };
      std::vector<Inst> inst;
      auto              rng = r.rng(4);
      Word              X{"x1", "x2"};
      for (std::size_t i = 0; i < transports; ++i) {
        Term u = random_term(rng, X, 2, true);
        Term v = i % 2 ? random_term(rng, X, 2, true) : u;
        if (i % 2 == 0) {
          bool changed = false;
          v = mutate(rng, u, changed);
          if (!changed) {
            v = Term::concat({u, u});
          }
        }
        inst.push_back(
            {std::uniform_int_distribution<std::size_t>(0, c.size() - 1)(rng),
             PseudoIdentity(u, v, X)});
      }
      auto out = r.run(inst.size(), [&](std::size_t i) {
        auto const& S  = c[inst[i].s].semigroup;
        auto const& pi = inst[i].pi;
        bool a = satisfies(S, pi);
        bool b = satisfies(dual(S), reverse_chi(pi));
        if (a == b) {
          return agree(std::string(a ? "holds" : "fails"));
        }
        Json ex = entry_json(c[inst[i].s]);
        ex["identity"] = pi.to_string();
        return fail(ex, std::string("transport"));
      });
      tally(r.report().details, "transport", out);
      auto mout = r.run(c.size(), [&](std::size_t i) {
        auto const& S = c[i].semigroup;
        auto a = canonical_form(mu_quotient(dual(S), ZClass::D));
        auto b = canonical_form(dual(mu_quotient(S, ZClass::K)));
        return a.same_table(b) ? agree(std::string("mu"))
                               : fail(entry_json(c[i]), std::string("mu"));
      });
      tally(r.report().details, "mu_dual", mout);
      return r.finish();
    }

    SuiteReport enumeration_counts(SuiteConfig const& cfg) {
      Runner           r("enumeration_counts", cfg);
      std::vector<int> expected = {1, 5, 24, 188};
      int              top      = std::min(cfg.max_order, 4);
      Json             counts   = Json::array();
      for (int n = 1; n <= top; ++n) {
        int got = static_cast<int>(enumerate_semigroups(n).size());
        counts.push_back(got);
        Json ex{{"order", n}, {"count", got}, {"expected", expected[n - 1]}};
        r.add(got == expected[n - 1] ? agree() : fail(ex));
        if (n <= 3) {
          int naive = naive_semigroup_count(n);
          ex["naive"] = naive;
          r.add(naive == got ? agree() : fail(ex));
        }
      }
      r.report().details["counts"] = counts;
      return r.finish();
    }

  }  // namespace

  WreathElement wreath_mul(FiniteSemigroup const& T,
                           FiniteSemigroup const& D,
                           WreathElement const&   x,
                           WreathElement const&   y) {
    int           n = D.order();
    WreathElement z;
    z.f.resize(n + 1);
    for (int p = 0; p <= n; ++p) {
      int pd = p == n ? x.d : D.mul(p, x.d);
      z.f[p] = T.mul(x.f[p], y.f[pd]);
    }
    z.d = D.mul(x.d, y.d);
    return z;
  }

  int naive_semigroup_count(int n) {
    if (n < 1 || n > 3) {
      throw PreconditionViolated("naive enumeration is limited to n <= 3");
    }
    int              cells = n * n;
    std::vector<int> t(cells, 0);
    std::vector<int> perm(n);
    std::set<std::vector<int>> classes;
    while (true) {
      bool assoc = true;
      for (int x = 0; x < n && assoc; ++x) {
        for (int y = 0; y < n && assoc; ++y) {
          for (int z = 0; z < n && assoc; ++z) {
            assoc = t[t[x * n + y] * n + z] == t[x * n + t[y * n + z]];
          }
        }
      }
      if (assoc) {
        std::vector<int> best;
        std::iota(perm.begin(), perm.end(), 0);
        do {
          std::vector<int> img(cells);
          for (int x = 0; x < n; ++x) {
            for (int y = 0; y < n; ++y) {
              img[perm[x] * n + perm[y]] = perm[t[x * n + y]];
            }
          }
          if (best.empty() || img < best) {
            best = img;
          }
        } while (std::next_permutation(perm.begin(), perm.end()));
        classes.insert(best);
      }
      int i = 0;
      while (i < cells && ++t[i] == n) {
        t[i++] = 0;
      }
      if (i == cells) {
        break;
      }
    }
    return static_cast<int>(classes.size());
  }

  Json to_json(SuiteReport const& r, bool with_time) {
    Json j;
    j["suite"]      = r.suite;
    j["passed"]     = r.passed();
    j["checked"]    = r.checked;
    j["agreements"] = r.agreements;
    j["failed"]     = r.failed;
    j["unknown"]    = r.unknown;
    j["examples"]   = r.examples;
    j["details"]    = r.details;
    j["budget_exceeded"] = r.budget_exceeded;
    if (with_time) {
      j["wall_ms"] = r.wall_ms;
    }
    return j;
  }

  std::vector<std::string> suite_names() {
    return {"permanence",          "malcev_equalities", "locality_commutation",
            "idempotency",         "dk_words",          "local_monoid_shadow",
            "ilbf2_terms",         "ds_dk_regularity",  "languages_closure",
            "duality",             "enumeration_counts"};
  }

  SuiteReport run_suite(std::string const& name, SuiteConfig const& cfg) {
    if (cfg.max_order < 1 || cfg.max_order > 4) {
      throw PreconditionViolated("suites run on orders 1..4");
    }
    if (name == "permanence") {
      return permanence(cfg);
    }
    if (name == "malcev_equalities") {
      return malcev_equalities(cfg);
    }
    if (name == "locality_commutation") {
      return corpus_zv(name, cfg, {"Sl", "G", "A"}, locality_sides);
    }
    if (name == "idempotency") {
      return corpus_zv(name, cfg, {"Sl"}, idempotency_sides);
    }
    if (name == "dk_words") {
      return dk_words(cfg);
    }
    if (name == "local_monoid_shadow") {
      return local_monoid_shadow(cfg);
    }
    if (name == "ilbf2_terms") {
      return ilbf2_terms(cfg);
    }
    if (name == "ds_dk_regularity") {
      return ds_dk_regularity(cfg);
    }
    if (name == "languages_closure") {
      return languages_closure(cfg);
    }
    if (name == "duality") {
      return duality(cfg);
    }
    if (name == "enumeration_counts") {
      return enumeration_counts(cfg);
    }
    throw UnknownName("unknown suite '" + name + "'");
  }

}  // namespace malcev
