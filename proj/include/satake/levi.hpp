#pragma once

// Data attached to a standard parabolic: Phi_J^+, rho_M, dim N, the central
// cocharacter lattice of C_M, the xi_j minimizers with h_M, the abelian
// nilradical test, and the delta twist character.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "satake/weights.hpp"

namespace satake {

struct LeviDatum {
  std::vector<int> J;            // sorted 0-based simple indices
  std::vector<int> phiJ;         // indices into the positive root table
  std::vector<int> phi_minus_J;  // complement, table order
  Vec two_rho;
  Vec two_rho_M;
  int dim_N_alg = 0;
  int dim_N0 = 0;  // f * dim_N_alg
  Mat cm_basis;    // rows span { xi : <alpha,xi> = 0 for alpha in J }, HNF-canonical
  std::string cm_tag;
};

inline std::string subset_tag(const std::vector<int>& J) {
  if (J.empty()) return "T";
  std::string s = "C_M[J={";
  for (std::size_t i = 0; i < J.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(J[i] + 1);
  }
  s += "}]";
  return s;
}

inline LeviDatum build_levi(const RootDatum& rd, const PositiveRootTable& t,
                            std::vector<int> J, int f) {
  std::sort(J.begin(), J.end());
  J.erase(std::unique(J.begin(), J.end()), J.end());
  for (int i : J)
    require(i >= 0 && i < rd.n(), ErrorCode::ConfigError, "J index out of range");
  LeviDatum lv;
  lv.J = J;
  lv.two_rho = t.two_rho;
  lv.two_rho_M.assign(rd.d, 0);
  for (int r = 0; r < t.count(); ++r) {
    bool inJ = true;
    for (int i = 0; i < rd.n(); ++i)
      if (t.roots[r].coeffs[i] != 0 && std::find(J.begin(), J.end(), i) == J.end()) inJ = false;
    if (inJ) {
      lv.phiJ.push_back(r);
      lv.two_rho_M = vec_add(lv.two_rho_M, t.roots[r].root);
    } else {
      lv.phi_minus_J.push_back(r);
    }
  }
  lv.dim_N_alg = static_cast<int>(lv.phi_minus_J.size());
  lv.dim_N0 = f * lv.dim_N_alg;
  Mat constraints;
  for (int i : J) constraints.push_back(rd.simple_roots[i]);
  lv.cm_basis = row_hnf(kernel_basis(constraints, rd.d));
  lv.cm_tag = subset_tag(J);
  // the kernel of an integer matrix is saturated; certify via Smith form
  if (!lv.cm_basis.empty()) {
    for (Int x : smith_diagonal(lv.cm_basis))
      require(x == 1, ErrorCode::Internal, "central cocharacter lattice is not saturated");
  }
  return lv;
}

// true iff no two roots of Phi^+ - Phi_J^+ sum to a root
inline bool is_abelian_nilradical(const RootDatum& rd, const PositiveRootTable& t,
                                  const std::vector<int>& J) {
  LeviDatum lv = build_levi(rd, t, J, 1);
  for (std::size_t a = 0; a < lv.phi_minus_J.size(); ++a)
    for (std::size_t b = a; b < lv.phi_minus_J.size(); ++b) {
      Vec s = vec_add(t.roots[lv.phi_minus_J[a]].root, t.roots[lv.phi_minus_J[b]].root);
      if (t.is_root(s)) return false;
    }
  return true;
}

// The character N_{k_F/F_p}(2rho * 2rho_M^{-1}): every embedding component is
// the integral weight 2rho - 2rho_M.
inline UnderlineWeight delta_character(const RootDatum& rd, const PositiveRootTable& t,
                                       const std::vector<int>& J, int f) {
  LeviDatum lv = build_levi(rd, t, J, f);
  Vec comp = vec_sub(lv.two_rho, lv.two_rho_M);
  UnderlineWeight w;
  w.comps.assign(f, comp);
  return w;
}

struct XiComponent {
  int component = 0;
  bool skipped = false;  // component entirely inside J: no xi exists
  Vec xi;
  Int pairing_with_highest = 0;
};

struct XiData {
  std::vector<XiComponent> per_component;
  Int h_M = 0;     // max over non-skipped components; 0 when all are skipped
  bool any = false;
};

namespace detail {

// Among vectors xi0 + (integer combinations of rows of k0), pick the canonical
// representative minimizing (#negative entries, L1 norm, lexicographic).
inline Vec canonical_coset_rep(Vec xi0, const Mat& k0) {
  if (k0.empty()) return xi0;
  auto score = [](const Vec& v) {
    Int neg = 0, l1 = 0;
    for (Int x : v) {
      if (x < 0) ++neg;
      l1 += std::llabs(x);
    }
    return std::pair<Int, Int>(neg, l1);
  };
  int k = static_cast<int>(k0.size());
  Vec best = xi0;
  auto best_score = score(best);
  Int radius = best_score.second + 1;
  std::vector<Int> coef(k, 0);
  // bounded exhaustive walk; any improvement re-centers, so termination is
  // guaranteed by the strictly decreasing (neg, L1) score
  bool improved = true;
  while (improved) {
    improved = false;
    std::vector<Int> stack(k, -radius);
    while (true) {
      Vec cand = best;
      for (int i = 0; i < k; ++i) cand = vec_add(cand, vec_scale(stack[i], k0[i]));
      auto sc = score(cand);
      if (sc < best_score || (sc == best_score && cand < best)) {
        if (sc < best_score) improved = true;
        best = cand;
        best_score = sc;
      }
      int pos = k - 1;
      while (pos >= 0 && stack[pos] == radius) {
        stack[pos] = -radius;
        --pos;
      }
      if (pos < 0) break;
      ++stack[pos];
    }
    radius = std::min<Int>(best_score.second + 1, radius);
  }
  return best;
}

}  // namespace detail

// For each irreducible component meeting Delta - J, an integral cocharacter
// xi_j vanishing on the other components and on J, strictly positive on the
// remaining simple roots of the component, minimizing the pairing with the
// component's highest root.  The minimum is certified by exact enumeration of
// the pairing-value lattice.
inline XiData xi_and_hM(const RootDatum& rd, const PositiveRootTable& t, const std::vector<int>& J) {
  XiData out;
  int n = rd.n();
  auto inJ = [&](int i) { return std::find(J.begin(), J.end(), i) != J.end(); };
  for (int comp = 0; comp < rd.num_components; ++comp) {
    XiComponent xc;
    xc.component = comp;
    std::vector<int> freeS;  // simples of this component outside J
    std::vector<int> zeroS;  // everything else
    for (int i = 0; i < n; ++i) {
      if (rd.component_of[i] == comp && !inJ(i))
        freeS.push_back(i);
      else
        zeroS.push_back(i);
    }
    if (freeS.empty()) {
      xc.skipped = true;
      out.per_component.push_back(xc);
      continue;
    }
    Mat zero_rows;
    for (int i : zeroS) zero_rows.push_back(rd.simple_roots[i]);
    Mat K = kernel_basis(zero_rows, rd.d);  // rows
    require(!K.empty(), ErrorCode::SearchBoxExhausted, "empty constraint kernel");
    int k = static_cast<int>(K.size());
    int s = static_cast<int>(freeS.size());
    // pairing map on the kernel: y -> ( <alpha_i, sum y_m K_m> )_{i in freeS}
    Mat P(s, Vec(k, 0));
    for (int a = 0; a < s; ++a)
      for (int m = 0; m < k; ++m) P[a][m] = dot(rd.simple_roots[freeS[a]], K[m]);
    // image lattice of P as rows of an HNF basis
    Mat Pt(k, Vec(s, 0));
    for (int a = 0; a < s; ++a)
      for (int m = 0; m < k; ++m) Pt[m][a] = P[a][m];
    Mat L = row_hnf(Pt);
    require(static_cast<int>(L.size()) == s, ErrorCode::Internal,
            "pairing-value lattice has unexpected rank");
    // objective coefficients: highest-root expansion over the free simples
    const Vec& theta_coeffs = t.roots[t.idx(t.highest_roots[comp])].coeffs;
    Vec obj(s, 0);
    for (int a = 0; a < s; ++a) obj[a] = theta_coeffs[freeS[a]];
    // a feasible value: D*(1,...,1) with D = product of HNF pivots
    Int D = 1;
    for (int a = 0; a < s; ++a) D = checked_mul(D, L[a][a]);
    Int bound = 0;
    for (int a = 0; a < s; ++a) bound += checked_mul(obj[a], D);
    // exhaustive enumeration over the triangular basis: coefficients chosen
    // column by column so that every coordinate is >= 1 and the objective
    // stays within the current best
    Int best_val = bound + 1;
    std::vector<Vec> best_ts;
    Vec coord(s, 0);
    std::vector<Int> coefs(s, 0);
    std::vector<Int> tail_min(s + 1, 0);  // coords below are all >= 1
    for (int a = s - 1; a >= 0; --a) tail_min[a] = tail_min[a + 1] + obj[a];
    auto rec = [&](auto&& self, int a, Int partial) -> void {
      if (a == s) {
        if (partial < best_val) {
          best_val = partial;
          best_ts.clear();
        }
        if (partial == best_val) best_ts.push_back(coord);
        return;
      }
      // coordinate a receives contributions from basis rows 0..a
      Int fixed = 0;
      for (int r = 0; r < a; ++r) fixed += checked_mul(coefs[r], L[r][a]);
      Int g = L[a][a];
      // smallest coefficient making coord[a] >= 1
      Int lo = 0;
      while (fixed + lo * g < 1) ++lo;
      while (fixed + (lo - 1) * g >= 1) --lo;
      for (Int c = lo;; ++c) {
        Int ta = fixed + checked_mul(c, g);
        Int np = partial + checked_mul(obj[a], ta);
        if (np + tail_min[a + 1] > best_val) break;
        coefs[a] = c;
        coord[a] = ta;
        self(self, a + 1, np);
      }
    };
    rec(rec, 0, 0);
    require(best_val <= bound, ErrorCode::SearchBoxExhausted, "no feasible pairing vector found");
    // reconstruct xi for each optimal pairing vector; canonicalize modulo the
    // fully-central sublattice and pick the overall canonical representative
    Mat all_rows;
    for (int i = 0; i < n; ++i) all_rows.push_back(rd.simple_roots[i]);
    Mat K0 = kernel_basis(all_rows, rd.d);
    std::optional<Vec> chosen;
    auto better = [](const Vec& a, const Vec& b) {
      auto score = [](const Vec& v) {
        Int neg = 0, l1 = 0;
        for (Int x : v) {
          if (x < 0) ++neg;
          l1 += std::llabs(x);
        }
        return std::pair<Int, Int>(neg, l1);
      };
      auto sa = score(a), sb = score(b);
      if (sa != sb) return sa < sb;
      return a < b;
    };
    for (const Vec& tvec : best_ts) {
      auto y = solve_integer(P, tvec);
      require(y.has_value(), ErrorCode::Internal, "pairing vector not realizable");
      Vec xi(rd.d, 0);
      for (int m = 0; m < k; ++m) xi = vec_add(xi, vec_scale((*y)[m], K[m]));
      xi = detail::canonical_coset_rep(xi, K0);
      if (!chosen || better(xi, *chosen)) chosen = xi;
    }
    xc.xi = *chosen;
    xc.pairing_with_highest = best_val;
    // verify the three sign constraints exactly as stated
    for (int r = 0; r < t.count(); ++r) {
      const PosRoot& pr = t.roots[r];
      Int pairing = dot(pr.root, xc.xi);
      bool in_comp = pr.component == comp;
      bool in_phiJ = true;
      for (int i = 0; i < n; ++i)
        if (pr.coeffs[i] != 0 && !inJ(i)) in_phiJ = false;
      if (!in_comp || in_phiJ)
        require(pairing == 0, ErrorCode::Internal, "xi sign constraint (zero) violated");
      else
        require(pairing > 0, ErrorCode::Internal, "xi sign constraint (positive) violated");
    }
    require(dot(t.highest_roots[comp], xc.xi) == best_val, ErrorCode::Internal,
            "xi objective mismatch");
    out.per_component.push_back(xc);
    out.any = true;
    out.h_M = std::max(out.h_M, best_val);
  }
  return out;
}

}  // namespace satake
