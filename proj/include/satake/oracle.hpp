#pragma once

// Independent brute-force verification: Chevalley structure constants with the
// extraspecial-pair sign convention (Jacobi-certified over Z), weight-blocked
// Chevalley-Eilenberg cohomology of the nilradical over F_p with trivial
// coefficients, and an explicit rank-1 module oracle.

#include <algorithm>
#include <map>
#include <vector>

#include "satake/levi.hpp"

namespace satake {

struct ChevalleyTable {
  // n_pos[a][b] = N_{alpha_a, alpha_b} over positive-root table indices;
  // zero when the sum is not a root.  Antisymmetric.
  Mat n_pos;
  std::vector<Int> string_down;  // per special pair, r+1 magnitudes live here implicitly
};

namespace detail {

// r = max m >= 0 with (b - m a) a root; the magnitude of N_{a,b} is r+1.
inline Int string_down_length(const PositiveRootTable& t, const Vec& a, const Vec& b) {
  Int r = 0;
  Vec cur = vec_sub(b, a);
  while (t.is_root(cur)) {
    ++r;
    cur = vec_sub(cur, a);
  }
  return r;
}

}  // namespace detail

// Structure constants for the full positive part, signs fixed by giving every
// extraspecial pair the positive sign and propagating with the Jacobi
// identity.  The construction aborts with JacobiFailure if the resulting
// table fails the exhaustive Jacobi check over Z.
inline ChevalleyTable chevalley_constants(const RootDatum& rd, const PositiveRootTable& t) {
  (void)rd;
  int np = t.count();
  ChevalleyTable tab;
  tab.n_pos.assign(np, Vec(np, 0));

  // squared lengths from the Weyl-invariant coroot-pairing form
  std::vector<Int> len2(np, 0);
  for (int i = 0; i < np; ++i) {
    Int s = 0;
    for (int r = 0; r < np; ++r) {
      Int pr = dot(t.roots[i].root, t.roots[r].coroot);
      s += pr * pr;
    }
    len2[i] = s;
  }

  auto set_pair = [&](int a, int b, Int val) {
    tab.n_pos[a][b] = val;
    tab.n_pos[b][a] = -val;
  };
  // N(-a, b) for positive roots a != b whose difference b - a is a root.
  auto n_negpos = [&](int a, int b) -> Rat {
    Vec w = vec_sub(t.roots[b].root, t.roots[a].root);
    if (t.is_positive_root(w)) {
      int s = t.idx(w);
      return Rat(-tab.n_pos[s][a]) * Rat(len2[s], len2[b]);
    }
    Vec u = vec_neg(w);
    require(t.is_positive_root(u), ErrorCode::Internal, "difference is not a root");
    int ui = t.idx(u);
    return Rat(-tab.n_pos[ui][b]) * Rat(len2[ui], len2[a]);
  };

  for (int g = 0; g < np; ++g) {
    const Vec& gamma = t.roots[g].root;
    std::vector<std::pair<int, int>> special;
    for (int a = 0; a < np; ++a) {
      Vec rest = vec_sub(gamma, t.roots[a].root);
      if (!t.is_positive_root(rest)) continue;
      int b = t.idx(rest);
      if (a < b) special.push_back({a, b});
    }
    if (special.empty()) continue;
    std::sort(special.begin(), special.end());
    auto [a1, b1] = special.front();
    Int r1 = detail::string_down_length(t, t.roots[a1].root, t.roots[b1].root);
    set_pair(a1, b1, r1 + 1);  // extraspecial pair: positive sign
    for (std::size_t sp = 1; sp < special.size(); ++sp) {
      auto [a, b] = special[sp];
      Rat A(0), C(0);
      Vec d1 = vec_sub(t.roots[a].root, t.roots[a1].root);
      if (t.is_root(d1)) {
        require(t.is_positive_root(d1), ErrorCode::Internal, "negative-height difference");
        int u = t.idx(d1);
        A = n_negpos(a1, a) * Rat(tab.n_pos[u][b]);
      }
      Vec d2 = vec_sub(t.roots[b].root, t.roots[a1].root);
      if (t.is_root(d2)) {
        require(t.is_positive_root(d2), ErrorCode::Internal, "negative-height difference");
        int v = t.idx(d2);
        C = (Rat(0) - n_negpos(a1, b)) * Rat(tab.n_pos[v][a]);
      }
      // N(gamma, -a1) = -N(a1, b1) |b1|^2 / |gamma|^2
      Rat ng = Rat(-tab.n_pos[a1][b1]) * Rat(len2[b1], len2[g]);
      Rat val = (Rat(0) - (A + C)) / ng;
      require(val.is_integer(), ErrorCode::JacobiFailure, "non-integral propagated constant");
      Int r = detail::string_down_length(t, t.roots[a].root, t.roots[b].root);
      require(std::llabs(val.num) == r + 1, ErrorCode::JacobiFailure,
              "propagated constant has wrong magnitude");
      set_pair(a, b, val.num);
    }
  }

  // exhaustive Jacobi check on the positive part over Z
  auto npp = [&](int a, int b) -> Int { return tab.n_pos[a][b]; };
  auto sum_idx = [&](int a, int b) -> int {
    Vec s = vec_add(t.roots[a].root, t.roots[b].root);
    return t.is_positive_root(s) ? t.idx(s) : -1;
  };
  for (int i = 0; i < np; ++i)
    for (int j = i + 1; j < np; ++j)
      for (int k = j + 1; k < np; ++k) {
        Int acc = 0;
        int ij = sum_idx(i, j), jk = sum_idx(j, k), ki = sum_idx(k, i);
        if (ij >= 0) acc += npp(i, j) * npp(ij, k);
        if (jk >= 0) acc += npp(j, k) * npp(jk, i);
        if (ki >= 0) acc += npp(k, i) * npp(ki, j);
        require(acc == 0, ErrorCode::JacobiFailure, "Jacobi identity fails over Z");
      }
  return tab;
}

// The F_p Lie algebra underlying N_0: one basis vector per (positive root
// outside Phi_J^+, embedding copy), with brackets vanishing across copies.
struct NilpotentAlgebraFp {
  Int p = 0;
  int f = 1;
  std::vector<std::pair<int, int>> basis;  // (positive-root table index, embedding)
  std::map<int, int> gen_of_root;          // table index -> position within one copy
  Mat bracket_coeff;                       // per copy: coeff mod p over root positions
  std::vector<std::vector<int>> bracket_target;  // per copy: target position or -1

  int size() const { return static_cast<int>(basis.size()); }
};

inline NilpotentAlgebraFp nilpotent_algebra_fp(const RootDatum& rd, const PositiveRootTable& t,
                                               const std::vector<int>& J, Int p, int f) {
  require(is_prime(p), ErrorCode::ConfigError, "p must be prime");
  LeviDatum lv = build_levi(rd, t, J, f);
  ChevalleyTable chev = chevalley_constants(rd, t);
  NilpotentAlgebraFp alg;
  alg.p = p;
  alg.f = f;
  int m = static_cast<int>(lv.phi_minus_J.size());
  for (int j = 0; j < f; ++j)
    for (int a = 0; a < m; ++a) alg.basis.push_back({lv.phi_minus_J[a], j});
  for (int a = 0; a < m; ++a) alg.gen_of_root[lv.phi_minus_J[a]] = a;
  alg.bracket_coeff.assign(m, Vec(m, 0));
  alg.bracket_target.assign(m, std::vector<int>(m, -1));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (a == b) continue;
      int ra = lv.phi_minus_J[a], rb = lv.phi_minus_J[b];
      Vec s = vec_add(t.roots[ra].root, t.roots[rb].root);
      if (!t.is_positive_root(s)) continue;
      int si = t.idx(s);
      auto it = alg.gen_of_root.find(si);
      require(it != alg.gen_of_root.end(), ErrorCode::Internal,
              "bracket escapes the nilradical");
      Int c = ((chev.n_pos[ra][rb] % p) + p) % p;
      if (c == 0) continue;
      alg.bracket_coeff[a][b] = c;
      alg.bracket_target[a][b] = it->second;
    }
  // antisymmetry and Jacobi over F_p, exhaustively
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      require(alg.bracket_target[a][b] == alg.bracket_target[b][a], ErrorCode::JacobiFailure,
              "bracket target asymmetry");
      if (alg.bracket_target[a][b] >= 0)
        require((alg.bracket_coeff[a][b] + alg.bracket_coeff[b][a]) % p == 0,
                ErrorCode::JacobiFailure, "bracket not antisymmetric mod p");
    }
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      for (int c = b + 1; c < m; ++c) {
        std::map<int, Int> acc;
        auto add_term = [&](int x, int y, int z) {
          int t1 = alg.bracket_target[x][y];
          if (t1 < 0) return;
          int t2 = alg.bracket_target[t1][z];
          if (t2 < 0) return;
          acc[t2] = (acc[t2] + alg.bracket_coeff[x][y] * alg.bracket_coeff[t1][z]) % p;
        };
        add_term(a, b, c);
        add_term(b, c, a);
        add_term(c, a, b);
        for (const auto& [tgt, v] : acc)
          require(v % p == 0, ErrorCode::JacobiFailure, "Jacobi identity fails mod p");
      }
  return alg;
}

// Exact per-degree, per-T-weight cohomology dimensions of the CE complex of
// the nilradical with trivial coefficients over F_p.  Weights are reported on
// the cochain side (the dual basis carries weight minus the subset sum).
struct CEResult {
  // degree -> (underline weight -> dimension), only nonzero entries
  std::map<int, std::map<UnderlineWeight, Int>> blocks;

  std::map<int, Int> degree_totals() const {
    std::map<int, Int> tot;
    for (const auto& [deg, mp] : blocks)
      for (const auto& [w, dim] : mp) tot[deg] += dim;
    return tot;
  }
};

inline CEResult ce_cohomology_trivial(const RootDatum& rd, const PositiveRootTable& t,
                                      const std::vector<int>& J, Int p, int f, int size_cap = 12) {
  NilpotentAlgebraFp alg = nilpotent_algebra_fp(rd, t, J, p, f);
  int m = alg.size();
  require(m <= size_cap, ErrorCode::SizeCap, "exterior algebra size cap exceeded");
  int per_copy = m / std::max(1, f);

  // weight key per subset: concatenated embedding components
  auto weight_of_mask = [&](unsigned mask) {
    UnderlineWeight w = UnderlineWeight::zero(f, rd.d);
    for (int g = 0; g < m; ++g)
      if (mask & (1u << g)) {
        auto [ri, j] = alg.basis[g];
        w.comps[j] = vec_add(w.comps[j], t.roots[ri].root);
      }
    return w;
  };
  // boundary of a basis wedge: map target-mask -> coefficient mod p
  auto boundary = [&](unsigned mask) {
    std::map<unsigned, Int> out;
    std::vector<int> gens;
    for (int g = 0; g < m; ++g)
      if (mask & (1u << g)) gens.push_back(g);
    int k = static_cast<int>(gens.size());
    for (int r = 0; r < k; ++r)
      for (int s = r + 1; s < k; ++s) {
        int gr = gens[r], gs = gens[s];
        auto [rootr, jr] = alg.basis[gr];
        auto [roots_, js] = alg.basis[gs];
        if (jr != js) continue;  // brackets vanish across embedding copies
        int pr = alg.gen_of_root.at(rootr), ps = alg.gen_of_root.at(roots_);
        if (alg.bracket_target[pr][ps] < 0) continue;
        int tgt_gen = js * per_copy + alg.bracket_target[pr][ps];
        Int c = alg.bracket_coeff[pr][ps];
        unsigned rest = mask & ~(1u << gr) & ~(1u << gs);
        if (rest & (1u << tgt_gen)) continue;  // wedge with a repeat
        int below = 0;
        for (int g2 = 0; g2 < tgt_gen; ++g2)
          if (rest & (1u << g2)) ++below;
        Int sign = ((r + s) % 2 == 0) ? 1 : -1;
        if (below % 2 == 1) sign = -sign;
        unsigned tmask = rest | (1u << tgt_gen);
        Int val = ((sign * c) % p + p) % p;
        out[tmask] = (out[tmask] + val) % p;
      }
    for (auto it = out.begin(); it != out.end();) {
      if (it->second % p == 0)
        it = out.erase(it);
      else
        ++it;
    }
    return out;
  };

  // d o d = 0 on every wedge (asserted, not assumed)
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::map<unsigned, Int> dd;
    for (const auto& [t1, c1] : boundary(mask))
      for (const auto& [t2, c2] : boundary(t1)) dd[t2] = (dd[t2] + c1 * c2) % p;
    for (const auto& [tgt, v] : dd)
      require(v % p == 0, ErrorCode::Internal, "boundary does not square to zero");
  }

  // group masks by (degree, weight)
  std::map<std::pair<int, UnderlineWeight>, std::vector<unsigned>> block_masks;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    int deg = __builtin_popcount(mask);
    block_masks[{deg, weight_of_mask(mask)}].push_back(mask);
  }
  // rank of the boundary restricted to each block, mod p
  std::map<std::pair<int, UnderlineWeight>, Int> rank_from;  // rank of d_i on block (i, mu)
  for (const auto& [key, masks] : block_masks) {
    auto [deg, mu] = key;
    if (deg == 0) continue;
    auto tgt_it = block_masks.find({deg - 1, mu});
    std::vector<unsigned> tgt =
        tgt_it == block_masks.end() ? std::vector<unsigned>{} : tgt_it->second;
    std::map<unsigned, int> tgt_pos;
    for (std::size_t i = 0; i < tgt.size(); ++i) tgt_pos[tgt[i]] = static_cast<int>(i);
    std::vector<Vec> rows;
    for (unsigned mask : masks) {
      Vec row(tgt.size(), 0);
      for (const auto& [tm, c] : boundary(mask)) {
        auto it = tgt_pos.find(tm);
        require(it != tgt_pos.end(), ErrorCode::Internal, "boundary leaves its weight block");
        row[it->second] = c;
      }
      rows.push_back(std::move(row));
    }
    // Gaussian elimination mod p
    Int rank = 0;
    std::size_t cols = tgt.size();
    std::size_t rpos = 0;
    for (std::size_t c = 0; c < cols && rpos < rows.size(); ++c) {
      std::size_t piv = rows.size();
      for (std::size_t r = rpos; r < rows.size(); ++r)
        if (rows[r][c] % p != 0) {
          piv = r;
          break;
        }
      if (piv == rows.size()) continue;
      std::swap(rows[rpos], rows[piv]);
      Int inv = 1, base = ((rows[rpos][c] % p) + p) % p, e = p - 2;
      while (e > 0) {  // Fermat inverse
        if (e & 1) inv = (inv * base) % p;
        base = (base * base) % p;
        e >>= 1;
      }
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r == rpos) continue;
        Int factor = (((rows[r][c] * inv) % p) + p) % p;
        if (factor == 0) continue;
        for (std::size_t cc = 0; cc < cols; ++cc)
          rows[r][cc] = ((rows[r][cc] - factor * rows[rpos][cc]) % p + p) % p;
      }
      ++rpos;
      ++rank;
    }
    rank_from[key] = rank;
  }

  CEResult res;
  for (const auto& [key, masks] : block_masks) {
    auto [deg, mu] = key;
    Int dim = static_cast<Int>(masks.size());
    auto it_down = rank_from.find(key);  // rank of d_deg on this block
    if (it_down != rank_from.end()) dim -= it_down->second;
    auto it_up = rank_from.find({deg + 1, mu});
    if (it_up != rank_from.end()) dim -= it_up->second;
    if (dim > 0) {
      UnderlineWeight dual = mu;
      for (Vec& c : dual.comps) c = vec_neg(c);
      res.blocks[deg][dual] += dim;
    }
  }
  return res;
}

// Explicit (lambda+1)-dimensional F_p module for the rank-1 nilpotent algebra:
// cohomology weights computed from the raising matrix by honest kernel and
// cokernel calculations.
struct Sl2OracleResult {
  std::vector<Int> h0_weights;
  std::vector<Int> h1_weights;
};

inline Sl2OracleResult sl2_module_oracle(Int lambda, Int p) {
  require(is_prime(p), ErrorCode::ConfigError, "p must be prime");
  require(lambda >= 0 && lambda <= p - 1, ErrorCode::WeightOutOfRange,
          "sl2 oracle needs 0 <= lambda <= p-1");
  int n = static_cast<int>(lambda) + 1;
  // raising operator: E v_i = i (lambda + 1 - i) v_{i-1}; v_i has weight lambda - 2i
  std::vector<Int> coeff(n, 0);
  for (int i = 1; i < n; ++i) coeff[i] = ((i % p) * ((lambda + 1 - i) % p)) % p;
  Sl2OracleResult out;
  // kernel: v_i with all paths annihilated <=> coeff[i] == 0 (diagonal-by-shift matrix)
  for (int i = 0; i < n; ++i) {
    bool in_kernel = (i == 0) ? true : (coeff[i] == 0);
    if (in_kernel) out.h0_weights.push_back(lambda - 2 * i);
  }
  // cokernel: v_{i-1} is hit iff coeff[i] != 0; twist by the dual of the root (-2)
  std::vector<bool> hit(n, false);
  for (int i = 1; i < n; ++i)
    if (coeff[i] != 0) hit[i - 1] = true;
  for (int i = 0; i < n; ++i)
    if (!hit[i]) out.h1_weights.push_back(lambda - 2 * i - 2);
  std::sort(out.h0_weights.begin(), out.h0_weights.end());
  std::sort(out.h1_weights.begin(), out.h1_weights.end());
  return out;
}

}  // namespace satake
