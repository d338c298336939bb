#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "malcev/evaluate.hpp"
#include "malcev/pseudovariety.hpp"
#include "malcev/semigroup.hpp"

namespace malcev {

  // the set of pseudovarieties Z handled by the mu route
  enum class ZClass { LI, K, D, N, LG, KvG, DvG, NvG };

  std::string           to_string(ZClass z);
  std::optional<ZClass> zclass_from_string(std::string const& s);
  std::vector<ZClass>   all_zclasses();
  PseudovarietyDef const& zclass_def(ZClass z);

  enum class MuKind { RM, RLM, GGM, AGGM, LM, LLM };
  std::string to_string(MuKind m);
  // UnsupportedZ for N and NvG
  MuKind mu_kind(ZClass z);

  struct RegularJClassView {
    int              j = 0;  // index into green(S).j_classes
    std::vector<int> elements;
    std::vector<int> r_classes;
    std::vector<int> l_classes;
  };

  std::vector<RegularJClassView> regular_j_classes(FiniteSemigroup const& S);
  // NotRegular if the J-class has no idempotent
  RegularJClassView regular_j_class(FiniteSemigroup const& S, int j);

  // kernel of the action of S on J^0 selected by mu_kind(Z)
  Congruence mu_zj(FiniteSemigroup const&    S,
                   RegularJClassView const&  J,
                   ZClass                    Z);
  Congruence mu_z(FiniteSemigroup const& S, ZClass Z);
  FiniteSemigroup mu_quotient(FiniteSemigroup const& S, ZClass Z);

  using Membership = std::function<bool(FiniteSemigroup const&)>;
  Membership membership(PseudovarietyDef const& V);

  // S in Z ⓜ V; N and NvG through intersections
  bool malcev_member(FiniteSemigroup const& S, ZClass Z, Membership const& V);
  bool malcev_member(FiniteSemigroup const&  S,
                     ZClass                  Z,
                     PseudovarietyDef const& V);

  // all local monoids eSe in V
  bool lv_member(FiniteSemigroup const& S, Membership const& V);
  bool lv_member(FiniteSemigroup const& S, PseudovarietyDef const& V);

  // (S in L(Z ⓜ V), S in Z ⓜ LV), computed independently
  std::pair<bool, bool> locality_sides(FiniteSemigroup const&  S,
                                       ZClass                  Z,
                                       PseudovarietyDef const& V);
  bool locality_commutation_check(FiniteSemigroup const&  S,
                                  ZClass                  Z,
                                  PseudovarietyDef const& V);

  // membership through the mu route applied once and twice
  std::pair<bool, bool> idempotency_sides(FiniteSemigroup const&  S,
                                          ZClass                  Z,
                                          PseudovarietyDef const& V);

  struct PinWeilWitness {
    PseudoIdentity identity;  // the basis identity, x1 and x2 substituted
    Term           phi_x1;
    Term           phi_x2;
    Assignment     assignment;
  };

  // substitutions with V ⊨ phi(x1) = phi(x2) = phi(x2)^2 certified by
  // V's word problem, refuting a basis identity in S
  std::optional<PinWeilWitness> pinweil_refute(
      FiniteSemigroup const&             S,
      std::vector<PseudoIdentity> const& z_basis,
      PseudovarietyDef const&            V,
      std::size_t                        budget = 5000);

  struct HomWitness {
    Congruence      congruence;
    FiniteSemigroup image;
  };

  // congruence with quotient in V and idempotent preimages in Z
  std::optional<HomWitness> witness_homomorphism(FiniteSemigroup const& S,
                                                 ZClass                 Z,
                                                 Membership const&      V,
                                                 std::uint64_t max_congruences
                                                 = 200'000);

  // R_1 = L_1 = Sl, R_{m+1} = K ⓜ L_m, L_{m+1} = D ⓜ R_m
  bool ladder_member(FiniteSemigroup const& S, char family, int m);

}  // namespace malcev
