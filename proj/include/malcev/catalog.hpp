#pragma once

#include <optional>
#include <string>
#include <vector>

#include "malcev/semigroup.hpp"

namespace malcev {

  FiniteSemigroup brandt_b2();  // labels a, b, ab, ba, 0
  FiniteSemigroup u1();         // labels 1, 0
  FiniteSemigroup cyclic_group(int n);
  // <x | x^{m+r} = x^m>
  FiniteSemigroup monogenic(int index, int period);
  FiniteSemigroup left_zero(int n);
  FiniteSemigroup right_zero(int n);
  // order n, every product equals 0
  FiniteSemigroup null_semigroup(int n);
  FiniteSemigroup rectangular_band(int rows, int cols);
  FiniteSemigroup free_band(int letters);
  // relatively free objects on `letters` generators, labelled by words
  FiniteSemigroup free_dk(int k, int letters);
  FiniteSemigroup free_kk(int k, int letters);
  FiniteSemigroup free_nk(int k, int letters);
  FiniteSemigroup free_semilattice(int letters);

  // B2, B2^1, U1, C<n>, cyclic(n), mono(m,r), left_zero(n), right_zero(n),
  // null(n), rect(m,n), free_band(n), free_D(k,n), free_K(k,n), free_N(k,n),
  // free_Sl(n), trivial
  FiniteSemigroup          catalog(std::string const& name);
  std::vector<std::string> catalog_examples();

  // lexicographically least row-major table over all relabellings
  FiniteSemigroup  canonical_form(FiniteSemigroup const& S);
  std::vector<int> canonical_key(FiniteSemigroup const& S);
  bool             is_isomorphic(FiniteSemigroup const& S,
                                 FiniteSemigroup const& T);
  bool             is_anti_isomorphic(FiniteSemigroup const& S,
                                      FiniteSemigroup const& T);
  // p with p[S.mul(x,y)] = T.mul(p[x],p[y])
  std::optional<std::vector<int>> find_isomorphism(FiniteSemigroup const& S,
                                                   FiniteSemigroup const& T);

}  // namespace malcev
