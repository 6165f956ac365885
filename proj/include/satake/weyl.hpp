#pragma once

// Weyl group enumeration with reduced words and lattice actions, inversion
// sets, minimal parabolic coset representatives, dot actions, and the weak
// Bruhat order.

#include <algorithm>
#include <map>
#include <vector>

#include "satake/weights.hpp"

namespace satake {

struct WeylElement {
  std::vector<int> word;  // simple reflection indices; action = S_{w[0]} ... S_{w[k-1]}
  Mat action;             // d x d matrix on X*
  Mat inv_action;
  int length = 0;
};

namespace detail {

inline Mat simple_reflection_matrix(const RootDatum& rd, int i) {
  Mat s = identity(rd.d);
  // s_i(x) = x - <x, alpha_i^vee> alpha_i, columnwise
  for (int c = 0; c < rd.d; ++c) {
    Int pair = rd.simple_coroots[i][c];
    for (int r = 0; r < rd.d; ++r) s[r][c] -= pair * rd.simple_roots[i][r];
  }
  return s;
}

}  // namespace detail

// BFS enumeration by right multiplication, deduplicated by the image of 2rho
// (strictly dominant, trivial stabilizer); discovery order is deterministic.
inline std::vector<WeylElement> enumerate_weyl(const RootDatum& rd, const PositiveRootTable& t,
                                               Int cap = 1000000) {
  std::vector<Mat> gens(rd.n());
  for (int i = 0; i < rd.n(); ++i) gens[i] = detail::simple_reflection_matrix(rd, i);

  std::vector<WeylElement> out;
  std::map<Vec, int> seen;
  WeylElement e;
  e.word = {};
  e.action = identity(rd.d);
  e.inv_action = identity(rd.d);
  e.length = 0;
  seen[t.two_rho] = 0;
  out.push_back(e);
  for (std::size_t qi = 0; qi < out.size(); ++qi) {
    for (int i = 0; i < rd.n(); ++i) {
      Mat act = mat_mul(out[qi].action, gens[i]);
      Vec img = mat_vec(act, t.two_rho);
      if (seen.count(img)) continue;
      WeylElement w;
      w.word = out[qi].word;
      w.word.push_back(i);
      w.action = std::move(act);
      w.inv_action = mat_mul(gens[i], out[qi].inv_action);
      w.length = out[qi].length + 1;
      seen[img] = static_cast<int>(out.size());
      out.push_back(std::move(w));
      require(static_cast<Int>(out.size()) <= cap, ErrorCode::GroupTooLarge,
              "Weyl group order exceeds cap");
    }
  }
  return out;
}

// Inversion set Phi_w = Phi^+ cap w(Phi^-), as sorted positive-root indices.
inline std::vector<int> inversion_set(const PositiveRootTable& t, const WeylElement& w) {
  std::vector<int> inv;
  for (int r = 0; r < t.count(); ++r) {
    Vec pre = mat_vec(w.inv_action, t.roots[r].root);
    if (!t.is_positive_root(pre)) inv.push_back(r);
  }
  return inv;
}

// v <= w in the right weak Bruhat order iff Phi_v is contained in Phi_w.
inline bool weak_order_leq(const PositiveRootTable& t, const WeylElement& v, const WeylElement& w) {
  std::vector<int> iv = inversion_set(t, v), iw = inversion_set(t, w);
  return std::includes(iw.begin(), iw.end(), iv.begin(), iv.end());
}

struct CosetReps {
  std::vector<int> J;
  std::vector<WeylElement> elements;  // enumeration order (by length, then discovery)
  std::map<int, Int> by_length;
};

// ^JW = { w : w^{-1}(Phi_J^+) in Phi^+ }, the minimal length representatives
// of W_J \ W.
inline CosetReps minimal_coset_reps(const RootDatum& rd, const PositiveRootTable& t,
                                    const std::vector<WeylElement>& weyl,
                                    const std::vector<int>& J) {
  CosetReps reps;
  reps.J = J;
  for (const WeylElement& w : weyl) {
    bool ok = true;
    for (int i : J) {
      Vec pre = mat_vec(w.inv_action, rd.simple_roots[i]);
      if (!t.is_positive_root(pre)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      reps.elements.push_back(w);
      reps.by_length[w.length] += 1;
    }
  }
  return reps;
}

// Dot action w . lambda = w(lambda + rho) - rho for a single component,
// carried out on the doubled lattice.
inline Vec dot_action_single(const PositiveRootTable& t, const WeylElement& w, const Vec& lambda) {
  Vec doubled = vec_add(vec_scale(2, lambda), t.two_rho);
  Vec moved = vec_sub(mat_vec(w.action, doubled), t.two_rho);
  for (Int& x : moved) {
    require(x % 2 == 0, ErrorCode::Internal, "dot action produced a non-integral weight");
    x /= 2;
  }
  return moved;
}

struct UnderlineWeylElement {
  std::vector<WeylElement> comps;  // one per embedding index j = 0..f-1

  int f() const { return static_cast<int>(comps.size()); }
  int total_length() const {
    int s = 0;
    for (const WeylElement& w : comps) s += w.length;
    return s;
  }
  std::vector<std::vector<int>> words() const {
    std::vector<std::vector<int>> ws;
    for (const WeylElement& w : comps) ws.push_back(w.word);
    return ws;
  }
};

inline UnderlineWeight dot_action(const PositiveRootTable& t, const UnderlineWeylElement& w,
                                  const UnderlineWeight& lam) {
  require(w.f() == lam.f(), ErrorCode::ShapeMismatch,
          "underline element and weight have different numbers of components");
  UnderlineWeight out;
  out.comps.reserve(lam.f());
  for (int j = 0; j < lam.f(); ++j) out.comps.push_back(dot_action_single(t, w.comps[j], lam.comps[j]));
  return out;
}

// The unique element of ^JW of maximal length |Phi^+ - Phi_J^+|,
// namely w_{M,o} w_o.
inline WeylElement longest_relative_element(const RootDatum& rd, const PositiveRootTable& t,
                                            const std::vector<WeylElement>& weyl,
                                            const std::vector<int>& J) {
  CosetReps reps = minimal_coset_reps(rd, t, weyl, J);
  int maxlen = 0;
  for (const WeylElement& w : reps.elements) maxlen = std::max(maxlen, w.length);
  const WeylElement* found = nullptr;
  for (const WeylElement& w : reps.elements)
    if (w.length == maxlen) {
      require(found == nullptr, ErrorCode::Internal, "top-degree coset representative not unique");
      found = &w;
    }
  // the top representative must send 0 to 2 rho_M - 2 rho under the dot action
  Vec two_rho_M(rd.d, 0);
  for (int r = 0; r < t.count(); ++r) {
    bool inJ = true;
    for (int i = 0; i < rd.n(); ++i)
      if (t.roots[r].coeffs[i] != 0 && std::find(J.begin(), J.end(), i) == J.end()) inJ = false;
    if (inJ) two_rho_M = vec_add(two_rho_M, t.roots[r].root);
  }
  Vec zero(rd.d, 0);
  Vec dz = dot_action_single(t, *found, zero);
  require(dz == vec_sub(two_rho_M, t.two_rho), ErrorCode::Internal,
          "longest relative element failed the 2rho_M - 2rho identity");
  return *found;
}

}  // namespace satake
