#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace malcev {

  using Table = std::vector<std::vector<int>>;

  struct GreenData {
    // class id of every element
    std::vector<int> r_of, l_of, j_of, h_of;
    std::vector<std::vector<int>> r_classes, l_classes, j_classes, h_classes;
    // j_leq[a][b] iff J_a <= J_b, i.e. a lies in S^1 b S^1
    std::vector<std::vector<bool>> j_leq;
    std::vector<bool>              j_regular;
    std::vector<int>               regular_j;
  };

  class FiniteSemigroup {
   public:
    FiniteSemigroup();  // the trivial semigroup

    static FiniteSemigroup from_table(Table const&                    table,
                                      std::vector<std::string> const& labels
                                      = {},
                                      std::vector<int> const& gens = {});
    // flat row-major table, validated
    static FiniteSemigroup from_flat(int                             n,
                                     std::vector<int>                flat,
                                     std::vector<std::string> const& labels
                                     = {},
                                     std::vector<int> const& gens = {});
    // for constructions that are associative by design
    static FiniteSemigroup trusted(int                      n,
                                   std::vector<int>         flat,
                                   std::vector<std::string> labels = {},
                                   std::vector<int>         gens   = {});

    int order() const noexcept {
      return n_;
    }
    int mul(int x, int y) const noexcept {
      return t_[static_cast<size_t>(x) * n_ + y];
    }
    std::vector<int> const& flat() const noexcept {
      return t_;
    }
    Table                           table() const;
    std::vector<std::string> const& labels() const noexcept {
      return labels_;
    }
    std::string             label(int x) const;
    std::vector<int> const& generators() const noexcept {
      return gens_;
    }
    // -1 if no label matches
    int find_label(std::string const& name) const;

    GreenData const& green() const;

    bool same_table(FiniteSemigroup const& o) const noexcept {
      return n_ == o.n_ && t_ == o.t_;
    }

   private:
    struct Cache;
    int                      n_;
    std::vector<int>         t_;
    std::vector<std::string> labels_;
    std::vector<int>         gens_;
    std::shared_ptr<Cache>   cache_;
  };

  // optional witness (x,y,z) of failure
  std::optional<std::array<int, 3>> associativity_witness(int n,
                                                          std::vector<int> const&);

  GreenData const& green(FiniteSemigroup const& S);

  std::vector<int>   idempotents(FiniteSemigroup const& S);
  bool               is_idempotent(FiniteSemigroup const& S, int e);
  std::optional<int> identity_element(FiniteSemigroup const& S);
  bool               is_monoid(FiniteSemigroup const& S);
  bool               is_commutative(FiniteSemigroup const& S);
  bool               is_group(FiniteSemigroup const& S);
  // smallest m, r with x^{m+r} = x^m
  std::pair<int, int> index_period(FiniteSemigroup const& S, int x);
  int                 power(FiniteSemigroup const& S, int x, std::int64_t n);
  int                 omega_power(FiniteSemigroup const& S, int x);

  FiniteSemigroup local_monoid(FiniteSemigroup const& S, int e);
  FiniteSemigroup dual(FiniteSemigroup const& S);
  FiniteSemigroup direct_product(FiniteSemigroup const& S,
                                 FiniteSemigroup const& T);
  // S^I: always adjoins a fresh identity
  FiniteSemigroup adjoin_identity(FiniteSemigroup const& S);
  // S^1: adjoins an identity only if S is not a monoid
  FiniteSemigroup adjoin_one(FiniteSemigroup const& S);
  // adjoins a fresh zero
  FiniteSemigroup adjoin_zero(FiniteSemigroup const& S);

  // sorted closure of subset; throws PreconditionViolated if empty
  std::vector<int> closure(FiniteSemigroup const& S,
                           std::vector<int> const& subset);
  FiniteSemigroup  generate(FiniteSemigroup const& S,
                            std::vector<int> const& subset);
  // subset must be closed; elements keep their relative order
  FiniteSemigroup  subsemigroup(FiniteSemigroup const& S,
                                std::vector<int> const& closed);
  std::vector<int> minimal_generating_set(FiniteSemigroup const& S);

  struct SearchBudget {
    std::uint64_t max_steps = 50'000'000;
  };

  // S divides T: some subsemigroup of T maps onto S
  bool divides(FiniteSemigroup const& S,
               FiniteSemigroup const& T,
               SearchBudget           budget = {});

  // T^{D^1} x| D with (f,d)(g,e) = (x -> f(x) g(xd), de)
  FiniteSemigroup wreath_product(FiniteSemigroup const& T,
                                 FiniteSemigroup const& D,
                                 std::uint64_t          max_order = 200'000);

  class Congruence {
   public:
    Congruence() = default;
    // labels need not be normalized
    explicit Congruence(std::vector<int> const& labels);
    static Congruence identity(int n);
    static Congruence universal(int n);

    int order() const noexcept {
      return static_cast<int>(cls_.size());
    }
    int class_of(int x) const noexcept {
      return cls_[x];
    }
    int num_classes() const noexcept {
      return k_;
    }
    std::vector<int> const& labels() const noexcept {
      return cls_;
    }
    std::vector<std::vector<int>> classes() const;
    bool                          is_identity() const noexcept {
      return k_ == order();
    }
    bool is_universal() const noexcept {
      return k_ == 1;
    }
    bool refines(Congruence const& o) const;
    bool is_compatible(FiniteSemigroup const& S) const;
    bool operator==(Congruence const& o) const noexcept {
      return cls_ == o.cls_;
    }
    bool operator<(Congruence const& o) const noexcept {
      return cls_ < o.cls_;
    }

   private:
    std::vector<int> cls_;
    int              k_ = 0;
  };

  Congruence meet(Congruence const& a, Congruence const& b);
  // join as equivalences; a congruence when both are
  Congruence join(Congruence const& a, Congruence const& b);
  Congruence principal_congruence(FiniteSemigroup const& S, int a, int b);
  // smallest congruence containing the given partition
  Congruence congruence_closure(FiniteSemigroup const& S,
                                std::vector<int> const& labels);

  FiniteSemigroup quotient(FiniteSemigroup const& S, Congruence const& c);

  // calls f on each congruence exactly once; stop early by returning false
  void for_each_congruence(FiniteSemigroup const&                  S,
                           std::function<bool(Congruence const&)> f,
                           std::uint64_t max_count = 1'000'000);
  std::vector<Congruence> congruences(FiniteSemigroup const& S,
                                      std::uint64_t max_count = 1'000'000);

  // true if f is a homomorphism S -> T
  bool is_homomorphism(FiniteSemigroup const&  S,
                       FiniteSemigroup const&  T,
                       std::vector<int> const& f);

}  // namespace malcev
