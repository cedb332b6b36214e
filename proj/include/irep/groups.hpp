// Copyright 2026 the irep authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "irep/common.hpp"

namespace irep {

/// Default cap on group order.  Orbit expansions are O(N * d) in memory,
/// and the Cayley table is O(N^2); the cap keeps both bounded.
inline constexpr int kMaxGroupOrder = 65536;

/// A finite Abelian group given by dense element indices 0..N-1, an explicit
/// composition table and an inverse table.  Elements carry uniform weight
/// 1/N (normalized counting measure), which is the invariant measure used by
/// every averaging operation in the library.
struct FiniteGroup {
  int order = 0;
  int identity = 0;
  std::vector<int> cayley;   // order x order, row-major: cayley[a*order+b] = a*b
  std::vector<int> inverse;  // inverse[a]

  int compose(int a, int b) const { return cayley[static_cast<std::size_t>(a) * order + b]; }
  int inv(int a) const { return inverse[static_cast<std::size_t>(a)]; }
};

enum class GroupKind { cyclic, torus };

/// A unitary permutation action of a FiniteGroup on R^dim.  perms stores
/// source indices: act(g, I)[i] = I[perm_g[i]].  Permutations are exactly
/// unitary in floating point, so norms and inner products transform without
/// rounding error.
struct GroupAction {
  FiniteGroup group;
  int dim = 0;
  std::vector<int> perms;  // order x dim, row-major source-index maps
  GroupKind kind = GroupKind::cyclic;
  int p = 0;  // generator parameter: Z_p or Z_p x Z_p
  std::string descriptor;

  std::span<const int> perm(int g) const {
    return {perms.data() + static_cast<std::size_t>(g) * dim, static_cast<std::size_t>(dim)};
  }
  int order() const { return group.order; }
};

/// Z_p acting on R^p by circular shifts: (g.I)(x) = I(x - g mod p).
inline GroupAction make_cyclic_group(int p, int max_order = kMaxGroupOrder) {
  if (p < 1) throw std::invalid_argument("make_cyclic_group: order must be >= 1");
  if (p > max_order) throw std::invalid_argument("make_cyclic_group: order exceeds capacity");
  GroupAction a;
  a.kind = GroupKind::cyclic;
  a.p = p;
  a.dim = p;
  a.descriptor = "cyclic(" + std::to_string(p) + ")";
  a.group.order = p;
  a.group.identity = 0;
  a.group.cayley.resize(static_cast<std::size_t>(p) * p);
  a.group.inverse.resize(p);
  for (int g = 0; g < p; ++g) {
    a.group.inverse[g] = (p - g) % p;
    for (int h = 0; h < p; ++h) a.group.cayley[static_cast<std::size_t>(g) * p + h] = (g + h) % p;
  }
  a.perms.resize(static_cast<std::size_t>(p) * p);
  for (int g = 0; g < p; ++g)
    for (int i = 0; i < p; ++i) a.perms[static_cast<std::size_t>(g) * p + i] = (i - g + p) % p;
  return a;
}

/// Z_p x Z_p acting on R^{p*p} (row-major images) by 2D circular shifts.
/// Element (u, v) has index u*p + v and maps pixel (x, y) to (x+u, y+v).
inline GroupAction make_torus_group(int p, int max_order = kMaxGroupOrder) {
  if (p < 1) throw std::invalid_argument("make_torus_group: order must be >= 1");
  const std::int64_t n64 = static_cast<std::int64_t>(p) * p;
  if (n64 > max_order) throw std::invalid_argument("make_torus_group: p*p exceeds capacity");
  const int n = static_cast<int>(n64);
  GroupAction a;
  a.kind = GroupKind::torus;
  a.p = p;
  a.dim = n;
  a.descriptor = "torus(" + std::to_string(p) + ")";
  a.group.order = n;
  a.group.identity = 0;
  a.group.cayley.resize(static_cast<std::size_t>(n) * n);
  a.group.inverse.resize(n);
  auto idx = [p](int u, int v) { return u * p + v; };
  for (int gu = 0; gu < p; ++gu)
    for (int gv = 0; gv < p; ++gv) {
      const int g = idx(gu, gv);
      a.group.inverse[g] = idx((p - gu) % p, (p - gv) % p);
      for (int hu = 0; hu < p; ++hu)
        for (int hv = 0; hv < p; ++hv)
          a.group.cayley[static_cast<std::size_t>(g) * n + idx(hu, hv)] =
              idx((gu + hu) % p, (gv + hv) % p);
    }
  a.perms.resize(static_cast<std::size_t>(n) * n);
  for (int gu = 0; gu < p; ++gu)
    for (int gv = 0; gv < p; ++gv) {
      const int g = idx(gu, gv);
      int* row = a.perms.data() + static_cast<std::size_t>(g) * n;
      for (int x = 0; x < p; ++x)
        for (int y = 0; y < p; ++y)
          row[idx(x, y)] = idx((x - gu + p) % p, (y - gv + p) % p);
    }
  return a;
}

inline void act_into(const GroupAction& a, int g, const Signal& in, Signal& out) {
  if (g < 0 || g >= a.order()) throw std::out_of_range("act: element index out of range");
  if (static_cast<int>(in.size()) != a.dim) throw std::invalid_argument("act: dimension mismatch");
  out.resize(in.size());
  const auto perm = a.perm(g);
  for (int i = 0; i < a.dim; ++i) out[i] = in[perm[i]];
}

/// Applies the permutation action of element g.  Exact: entries are moved,
/// never recomputed.
inline Signal act(const GroupAction& a, int g, const Signal& in) {
  Signal out;
  act_into(a, g, in, out);
  return out;
}

/// All transformed copies [g.I for g in G], in element-index order.
inline std::vector<Signal> orbit(const GroupAction& a, const Signal& in) {
  std::vector<Signal> out(static_cast<std::size_t>(a.order()));
  for (int g = 0; g < a.order(); ++g) act_into(a, g, in, out[g]);
  return out;
}

/// Exhaustive scan of the group axioms on the explicit tables: closure,
/// associativity, identity, invertibility, commutativity.  Intended for
/// orders up to a few hundred (associativity is O(N^3)).
inline bool check_group_axioms(const FiniteGroup& g) {
  const int n = g.order;
  if (n < 1 || g.identity < 0 || g.identity >= n) return false;
  if (static_cast<int>(g.inverse.size()) != n) return false;
  if (g.cayley.size() != static_cast<std::size_t>(n) * n) return false;
  for (int x : g.cayley)
    if (x < 0 || x >= n) return false;  // closure
  for (int a = 0; a < n; ++a) {
    if (g.compose(g.identity, a) != a || g.compose(a, g.identity) != a) return false;
    const int ia = g.inv(a);
    if (ia < 0 || ia >= n) return false;
    if (g.compose(a, ia) != g.identity || g.compose(ia, a) != g.identity) return false;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.compose(a, b) != g.compose(b, a)) return false;  // Abelian assumption
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.compose(g.compose(a, b), c) != g.compose(a, g.compose(b, c))) return false;
  return true;
}

/// Checks that perms is a unitary permutation representation: each row a
/// bijection, identity maps to the identity permutation, and
/// perm(g*h) = perm(h) o perm(g) in source-index composition.
inline bool check_action_homomorphism(const GroupAction& a) {
  const int n = a.order(), d = a.dim;
  if (a.perms.size() != static_cast<std::size_t>(n) * d) return false;
  std::vector<char> seen(static_cast<std::size_t>(d));
  for (int g = 0; g < n; ++g) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int i = 0; i < d; ++i) {
      const int s = a.perm(g)[i];
      if (s < 0 || s >= d || seen[s]) return false;
      seen[s] = 1;
    }
  }
  for (int i = 0; i < d; ++i)
    if (a.perm(a.group.identity)[i] != i) return false;
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      const auto pg = a.perm(g), ph = a.perm(h);
      const auto pc = a.perm(a.group.compose(g, h));
      for (int i = 0; i < d; ++i)
        if (pc[i] != ph[pg[i]]) return false;
    }
  return true;
}

}  // namespace irep
