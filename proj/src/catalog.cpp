#include "malcev/catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <regex>
#include <set>

#include "malcev/error.hpp"

namespace malcev {

  namespace {
    template <typename F>
    FiniteSemigroup build(int n, F&& f, std::vector<std::string> labels = {}) {
      std::vector<int> flat(static_cast<size_t>(n) * n);
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          flat[static_cast<size_t>(x) * n + y] = f(x, y);
        }
      }
      return FiniteSemigroup::from_flat(n, std::move(flat), labels);
    }

    std::vector<std::string> numbered(std::string const& p, int n) {
      std::vector<std::string> out;
      for (int i = 0; i < n; ++i) {
        out.push_back(p + std::to_string(i));
      }
      return out;
    }

    // semigroup of words closed under f, starting from the letters
    template <typename Reduce>
    FiniteSemigroup word_semigroup(int letters, Reduce&& reduce) {
      std::vector<std::string>   elems;
      std::map<std::string, int> index;
      for (int i = 0; i < letters; ++i) {
        std::string w(1, static_cast<char>('a' + i));
        w = reduce(w);
        if (index.emplace(w, static_cast<int>(elems.size())).second) {
          elems.push_back(w);
        }
      }
      std::vector<std::vector<int>> right;
      for (size_t i = 0; i < elems.size(); ++i) {
        for (int g = 0; g < letters; ++g) {
          std::string w = reduce(elems[i] + std::string(1, 'a' + g));
          if (index.emplace(w, static_cast<int>(elems.size())).second) {
            elems.push_back(w);
          }
        }
      }
      int n = static_cast<int>(elems.size());
      if (n > 4000) {
        throw BudgetExceeded("free object too large");
      }
      return build(
          n,
          [&](int x, int y) { return index.at(reduce(elems[x] + elems[y])); },
          elems);
    }

    std::string band_key(std::string const& w) {
      std::set<char> c(w.begin(), w.end());
      if (c.size() <= 1) {
        return w.substr(0, 1);
      }
      std::set<char> seen;
      size_t         i = 0;
      for (; i < w.size(); ++i) {
        seen.insert(w[i]);
        if (seen.size() == c.size()) {
          break;
        }
      }
      std::string pre = w.substr(0, i);
      char        a   = w[i];
      seen.clear();
      size_t j = w.size();
      while (j-- > 0) {
        seen.insert(w[j]);
        if (seen.size() == c.size()) {
          break;
        }
      }
      std::string suf = w.substr(j + 1);
      char        b   = w[j];
      return "(" + band_key(pre) + a + "|" + b + band_key(suf) + ")";
    }
  }  // namespace

  FiniteSemigroup brandt_b2() {
    // a=0 b=1 ab=2 ba=3 0=4
    int const z = 4;
    Table     t = {{z, 2, z, 0, z},
                   {3, z, 1, z, z},
                   {0, z, 2, z, z},
                   {z, 1, z, 3, z},
                   {z, z, z, z, z}};
    return FiniteSemigroup::from_table(t, {"a", "b", "ab", "ba", "0"}, {0, 1});
  }

  FiniteSemigroup u1() {
    return FiniteSemigroup::from_table({{0, 1}, {1, 1}}, {"1", "0"});
  }

  FiniteSemigroup cyclic_group(int n) {
    if (n < 1) {
      throw UnknownName("cyclic group order must be positive");
    }
    auto S = build(n, [n](int x, int y) { return (x + y) % n; },
                   numbered("g", n));
    return S;
  }

  FiniteSemigroup monogenic(int m, int r) {
    if (m < 1 || r < 1) {
      throw UnknownName("monogenic parameters must be positive");
    }
    int  n   = m + r - 1;
    auto red = [m, r](int e) { return e < m ? e : m + (e - m) % r; };
    // element i stands for x^{i+1}
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) {
      labels.push_back("x^" + std::to_string(i + 1));
    }
    return build(
        n, [&](int x, int y) { return red(x + y + 2) - 1; }, labels);
  }

  FiniteSemigroup left_zero(int n) {
    return build(n, [](int x, int) { return x; }, numbered("e", n));
  }

  FiniteSemigroup right_zero(int n) {
    return build(n, [](int, int y) { return y; }, numbered("e", n));
  }

  FiniteSemigroup null_semigroup(int n) {
    auto labels = numbered("n", n);
    labels[0]   = "0";
    return build(n, [](int, int) { return 0; }, labels);
  }

  FiniteSemigroup rectangular_band(int rows, int cols) {
    std::vector<std::string> labels;
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) {
        labels.push_back("(" + std::to_string(i) + "," + std::to_string(j)
                         + ")");
      }
    }
    return build(
        rows * cols,
        [cols](int x, int y) { return (x / cols) * cols + y % cols; },
        labels);
  }

  FiniteSemigroup free_band(int letters) {
    if (letters < 1 || letters > 3) {
      throw BudgetExceeded("free band supported on at most 3 letters");
    }
    // representatives are kept as shortest words reached first
    std::vector<std::string>   reps;
    std::map<std::string, int> index;
    for (int i = 0; i < letters; ++i) {
      std::string w(1, 'a' + i);
      index.emplace(band_key(w), i);
      reps.push_back(w);
    }
    for (size_t i = 0; i < reps.size(); ++i) {
      for (int g = 0; g < letters; ++g) {
        std::string w = reps[i] + std::string(1, 'a' + g);
        if (index.emplace(band_key(w), static_cast<int>(reps.size())).second) {
          reps.push_back(w);
        }
      }
    }
    int n = static_cast<int>(reps.size());
    return build(
        n,
        [&](int x, int y) { return index.at(band_key(reps[x] + reps[y])); },
        reps);
  }

  FiniteSemigroup free_dk(int k, int letters) {
    return word_semigroup(letters, [k](std::string const& w) {
      return w.size() > static_cast<size_t>(k) ? w.substr(w.size() - k) : w;
    });
  }

  FiniteSemigroup free_kk(int k, int letters) {
    return word_semigroup(letters, [k](std::string const& w) {
      return w.size() > static_cast<size_t>(k) ? w.substr(0, k) : w;
    });
  }

  FiniteSemigroup free_nk(int k, int letters) {
    return word_semigroup(letters, [k](std::string const& w) {
      bool zero = w.find('0') != std::string::npos
                  || w.size() >= static_cast<size_t>(k);
      return zero ? std::string("0") : w;
    });
  }

  FiniteSemigroup free_semilattice(int letters) {
    return word_semigroup(letters, [](std::string const& w) {
      std::set<char> c(w.begin(), w.end());
      return std::string(c.begin(), c.end());
    });
  }

  FiniteSemigroup catalog(std::string const& name) {
    std::smatch m;
    auto        num = [&](int i) { return std::stoi(m[i].str()); };
    auto guard = [](int v, int lo, int hi) {
      if (v < lo || v > hi) {
        throw UnknownName("catalog parameter out of bounds");
      }
      return v;
    };
    if (name == "B2") {
      return brandt_b2();
    }
    if (name == "B2^1" || name == "B21") {
      return adjoin_identity(brandt_b2());
    }
    if (name == "U1") {
      return u1();
    }
    if (name == "trivial") {
      return FiniteSemigroup();
    }
    if (std::regex_match(name, m, std::regex(R"(C(\d+))"))
        || std::regex_match(name, m, std::regex(R"(cyclic\((\d+)\))"))) {
      return cyclic_group(guard(num(1), 1, 64));
    }
    if (std::regex_match(name, m, std::regex(R"(mono\((\d+),\s*(\d+)\))"))) {
      return monogenic(guard(num(1), 1, 32), guard(num(2), 1, 32));
    }
    if (std::regex_match(name, m, std::regex(R"(left_zero\((\d+)\))"))
        || std::regex_match(name, m, std::regex(R"(lz(\d+))"))) {
      return left_zero(guard(num(1), 1, 64));
    }
    if (std::regex_match(name, m, std::regex(R"(right_zero\((\d+)\))"))
        || std::regex_match(name, m, std::regex(R"(rz(\d+))"))) {
      return right_zero(guard(num(1), 1, 64));
    }
    if (std::regex_match(name, m, std::regex(R"(null\((\d+)\))"))) {
      return null_semigroup(guard(num(1), 1, 64));
    }
    if (std::regex_match(name, m, std::regex(R"(rect\((\d+),\s*(\d+)\))"))) {
      return rectangular_band(guard(num(1), 1, 8), guard(num(2), 1, 8));
    }
    if (std::regex_match(name, m, std::regex(R"(free_band\((\d+)\))"))) {
      return free_band(guard(num(1), 1, 3));
    }
    if (std::regex_match(name, m, std::regex(R"(free_Sl\((\d+)\))"))) {
      return free_semilattice(guard(num(1), 1, 6));
    }
    if (std::regex_match(name,
                         m,
                         std::regex(R"(free_([DKN])\((\d+),\s*(\d+)\))"))) {
      int k = guard(num(2), 1, 4), a = guard(num(3), 1, 3);
      switch (m[1].str()[0]) {
        case 'D':
          return free_dk(k, a);
        case 'K':
          return free_kk(k, a);
        default:
          return free_nk(k, a);
      }
    }
    throw UnknownName("unknown catalog semigroup '" + name + "'");
  }

  std::vector<std::string> catalog_examples() {
    return {"trivial",       "B2",         "B2^1",         "U1",
            "C2",            "C3",         "mono(2,1)",    "mono(1,2)",
            "left_zero(2)",  "right_zero(2)", "null(2)",   "rect(2,2)",
            "free_band(2)",  "free_D(1,2)",  "free_K(1,2)", "free_N(2,2)",
            "free_Sl(2)"};
  }

  // ---------------------------------------------------------------------

  std::vector<int> canonical_key(FiniteSemigroup const& S) {
    int n = S.order();
    if (n > 7) {
      throw BudgetExceeded("canonical form limited to order 7");
    }
    std::vector<int> perm(n);  // perm[new] = old
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best, inv(n), cur(static_cast<size_t>(n) * n);
    do {
      for (int i = 0; i < n; ++i) {
        inv[perm[i]] = i;
      }
      // early exit comparison against best
      bool better = best.empty(), worse = false;
      for (int i = 0; i < n && !worse; ++i) {
        for (int j = 0; j < n; ++j) {
          int v = inv[S.mul(perm[i], perm[j])];
          size_t p = static_cast<size_t>(i) * n + j;
          cur[p]   = v;
          if (!better) {
            if (v < best[p]) {
              better = true;
            } else if (v > best[p]) {
              worse = true;
              break;
            }
          }
        }
      }
      if (!worse && better) {
        best = cur;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  }

  FiniteSemigroup canonical_form(FiniteSemigroup const& S) {
    return FiniteSemigroup::trusted(S.order(), canonical_key(S));
  }

  bool is_isomorphic(FiniteSemigroup const& S, FiniteSemigroup const& T) {
    return S.order() == T.order() && canonical_key(S) == canonical_key(T);
  }

  bool is_anti_isomorphic(FiniteSemigroup const& S, FiniteSemigroup const& T) {
    return is_isomorphic(S, dual(T));
  }

  std::optional<std::vector<int>> find_isomorphism(FiniteSemigroup const& S,
                                                   FiniteSemigroup const& T) {
    if (S.order() != T.order()) {
      return std::nullopt;
    }
    int              n = S.order();
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      if (is_homomorphism(S, T, p)) {
        return p;
      }
    } while (std::next_permutation(p.begin(), p.end()));
    return std::nullopt;
  }

}  // namespace malcev
