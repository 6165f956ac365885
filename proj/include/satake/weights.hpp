#pragma once

// Weight-level predicates and quantities: dominance, p-smallness, the Weyl
// dimension formula, Freudenthal multiplicities, weight-string bounds, and
// restriction of algebraic characters to mod-p characters of integral tori.

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "satake/root_datum.hpp"

namespace satake {

// An f-tuple of integral weights; component j is read through Frobenius^j.
struct UnderlineWeight {
  std::vector<Vec> comps;

  int f() const { return static_cast<int>(comps.size()); }

  static UnderlineWeight zero(int f, int d) { return UnderlineWeight{std::vector<Vec>(f, Vec(d, 0))}; }

  friend bool operator==(const UnderlineWeight& a, const UnderlineWeight& b) {
    return a.comps == b.comps;
  }
  friend bool operator<(const UnderlineWeight& a, const UnderlineWeight& b) {
    return a.comps < b.comps;
  }
  friend UnderlineWeight operator+(const UnderlineWeight& a, const UnderlineWeight& b) {
    require(a.comps.size() == b.comps.size(), ErrorCode::ShapeMismatch, "underline weight shape");
    UnderlineWeight r = a;
    for (std::size_t j = 0; j < r.comps.size(); ++j) r.comps[j] = vec_add(r.comps[j], b.comps[j]);
    return r;
  }
  bool is_zero() const {
    for (const Vec& c : comps)
      if (!satake::is_zero(c)) return false;
    return true;
  }
};

// Smooth character of the residue-field points of a split torus, canonicalized
// as an exponent vector mod q-1 = p^f - 1 against a named cocharacter basis.
struct ModPCharacter {
  Int modulus = 0;  // q - 1
  std::string basis_tag;
  std::vector<Int> exps;  // canonical representatives in [0, q-2]

  friend bool operator==(const ModPCharacter& a, const ModPCharacter& b) {
    return a.modulus == b.modulus && a.basis_tag == b.basis_tag && a.exps == b.exps;
  }
  friend bool operator<(const ModPCharacter& a, const ModPCharacter& b) {
    if (a.modulus != b.modulus) return a.modulus < b.modulus;
    if (a.basis_tag != b.basis_tag) return a.basis_tag < b.basis_tag;
    return a.exps < b.exps;
  }
};

inline Int pf_minus_one(Int p, int f) {
  Int q = 1;
  for (int i = 0; i < f; ++i) q = checked_mul(q, p);
  return q - 1;
}

// exponent_b = sum_j p^j <lambda_j, xi_b>  mod (q-1)
inline ModPCharacter restrict_mod_p(const UnderlineWeight& lam, const Mat& basis,
                                    const std::string& basis_tag, Int p, int f) {
  require(lam.f() == f, ErrorCode::BasisShapeMismatch, "underline weight has wrong number of components");
  Int m = pf_minus_one(p, f);
  ModPCharacter chi;
  chi.modulus = m;
  chi.basis_tag = basis_tag;
  chi.exps.reserve(basis.size());
  for (const Vec& xi : basis) {
    Int e = 0;
    Int pj = 1;
    for (int j = 0; j < f; ++j) {
      require(lam.comps[j].size() == xi.size(), ErrorCode::BasisShapeMismatch,
              "cocharacter basis vector has wrong length");
      e += checked_mul(pj % m, ((dot(lam.comps[j], xi) % m) + m) % m);
      e %= m;
      pj = checked_mul(pj, p);
    }
    chi.exps.push_back(((e % m) + m) % m);
  }
  return chi;
}

inline bool is_dominant_for(const RootDatum& rd, const std::vector<int>& J, const Vec& mu) {
  for (int i : J)
    if (dot(mu, rd.simple_coroots[i]) < 0) return false;
  return true;
}

inline std::vector<int> all_simple_indices(const RootDatum& rd) {
  std::vector<int> J(rd.n());
  for (int i = 0; i < rd.n(); ++i) J[i] = i;
  return J;
}

// W_J-translate of mu into the J-dominant chamber.
inline Vec dominant_rep(const RootDatum& rd, const std::vector<int>& J, Vec mu) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i : J) {
      Int c = dot(mu, rd.simple_coroots[i]);
      if (c < 0) {
        mu = vec_sub(mu, vec_scale(c, rd.simple_roots[i]));
        changed = true;
      }
    }
  }
  return mu;
}

struct PSmallWitness {
  int root_index = -1;
  int embedding = -1;
};

struct PSmallResult {
  bool ok = true;
  std::optional<PSmallWitness> witness;
};

// p-small: <lambda_j + rho, alpha^vee> <= p for all positive alpha and all j.
// Internally doubled (2 lambda + 2 rho) to keep rho integral.
inline PSmallResult is_p_small(const RootDatum& rd, const PositiveRootTable& t,
                               const UnderlineWeight& lam, Int p) {
  std::vector<int> all = all_simple_indices(rd);
  for (int j = 0; j < lam.f(); ++j)
    require(is_dominant_for(rd, all, lam.comps[j]), ErrorCode::NotDominant,
            "is_p_small requires a dominant weight");
  for (int j = 0; j < lam.f(); ++j) {
    Vec doubled = vec_add(vec_scale(2, lam.comps[j]), t.two_rho);
    for (int r = 0; r < t.count(); ++r) {
      if (dot(doubled, t.roots[r].coroot) > 2 * p)
        return PSmallResult{false, PSmallWitness{r, j}};
    }
  }
  return PSmallResult{true, std::nullopt};
}

// Characteristic-zero Weyl dimension formula over the subsystem Phi_J.
inline Int weyl_dim(const RootDatum& rd, const PositiveRootTable& t, const std::vector<int>& J,
                    const UnderlineWeight& mu) {
  // 2 rho_J = sum of the positive roots supported on J
  Vec two_rho_J(rd.d, 0);
  std::vector<int> phiJ;
  for (int r = 0; r < t.count(); ++r) {
    bool inJ = true;
    for (int i = 0; i < rd.n(); ++i)
      if (t.roots[r].coeffs[i] != 0 && std::find(J.begin(), J.end(), i) == J.end()) inJ = false;
    if (inJ) {
      phiJ.push_back(r);
      two_rho_J = vec_add(two_rho_J, t.roots[r].root);
    }
  }
  Int num = 1, den = 1;
  for (int j = 0; j < mu.f(); ++j) {
    require(is_dominant_for(rd, J, mu.comps[j]), ErrorCode::NotDominantForJ,
            "weyl_dim requires a Phi_J^+-dominant weight");
    Vec doubled = vec_add(vec_scale(2, mu.comps[j]), two_rho_J);
    for (int r : phiJ) {
      Int a = dot(doubled, t.roots[r].coroot);
      Int b = dot(two_rho_J, t.roots[r].coroot);
      Int g1 = gcd_int(a, den);
      a /= g1;
      den /= g1;
      Int g2 = gcd_int(num, b);
      num /= g2;
      b /= g2;
      num = checked_mul(num, a);
      den = checked_mul(den, b);
    }
  }
  require(den != 0 && num % den == 0, ErrorCode::Internal, "weyl_dim: non-integral result");
  return num / den;
}

// Exact characteristic-zero weight multiplicities of the irreducible module
// with highest weight lambda over the subsystem Phi_J.
struct MultiplicityTable {
  std::map<Vec, Int> mult;  // weight -> multiplicity (> 0 entries only)
  Int total = 0;
};

inline MultiplicityTable freudenthal(const RootDatum& rd, const PositiveRootTable& t,
                                     const std::vector<int>& J, const Vec& lambda,
                                     Int dim_cap = 100000) {
  require(is_dominant_for(rd, J, lambda), ErrorCode::NotDominant,
          "freudenthal requires a Phi_J^+-dominant weight");
  std::vector<int> phiJ;
  Vec two_rho_J(rd.d, 0);
  for (int r = 0; r < t.count(); ++r) {
    bool inJ = true;
    for (int i = 0; i < rd.n(); ++i)
      if (t.roots[r].coeffs[i] != 0 && std::find(J.begin(), J.end(), i) == J.end()) inJ = false;
    if (inJ) {
      phiJ.push_back(r);
      two_rho_J = vec_add(two_rho_J, t.roots[r].root);
    }
  }
  // W_J-invariant form from coroot pairings
  auto form = [&](const Vec& x, const Vec& y) {
    Int s = 0;
    for (int r : phiJ) s += checked_mul(dot(x, t.roots[r].coroot), dot(y, t.roots[r].coroot));
    return s;
  };
  Int lam_norm = form(lambda, lambda);
  Vec P = vec_add(vec_scale(2, lambda), two_rho_J);
  Int p_norm = form(P, P);

  // BFS over mu = lambda - (nonneg. combination of J-simples) with
  // |mu|^2 <= |lambda|^2; this visits every weight of the module.
  std::map<Vec, int> depth;
  std::deque<Vec> queue;
  depth[lambda] = 0;
  queue.push_back(lambda);
  std::vector<Vec> order{lambda};
  const std::size_t candidate_cap = 4000000;
  while (!queue.empty()) {
    Vec mu = queue.front();
    queue.pop_front();
    int dmu = depth[mu];
    for (int i : J) {
      Vec nu = vec_sub(mu, rd.simple_roots[i]);
      if (depth.count(nu)) continue;
      if (form(nu, nu) > lam_norm) continue;
      depth[nu] = dmu + 1;
      queue.push_back(nu);
      order.push_back(nu);
      require(order.size() <= candidate_cap, ErrorCode::DimensionCap,
              "freudenthal candidate set exceeds cap");
    }
  }
  std::sort(order.begin(), order.end(), [&](const Vec& a, const Vec& b) {
    int da = depth[a], db = depth[b];
    if (da != db) return da < db;
    return a < b;
  });

  std::map<Vec, Int> dominant_mult;
  auto mult_of = [&](const Vec& nu) -> Int {
    Vec rep = dominant_rep(rd, J, nu);
    auto it = dominant_mult.find(rep);
    return it == dominant_mult.end() ? 0 : it->second;
  };
  Int total = 0;
  MultiplicityTable out;
  for (const Vec& mu : order) {
    if (!is_dominant_for(rd, J, mu)) continue;
    Int m;
    if (mu == lambda) {
      m = 1;
    } else {
      Int rhs = 0;
      for (int r : phiJ) {
        const Vec& alpha = t.roots[r].root;
        Vec nu = mu;
        while (true) {
          nu = vec_add(nu, alpha);
          Int mn = mult_of(nu);
          if (form(nu, nu) > lam_norm) break;
          if (mn > 0) rhs += checked_mul(mn, form(nu, alpha));
        }
      }
      Vec Q = vec_add(vec_scale(2, mu), two_rho_J);
      Int denom = p_norm - form(Q, Q);
      require(denom > 0, ErrorCode::Internal, "freudenthal: nonpositive denominator");
      Int num = checked_mul(8, rhs);
      require(num % denom == 0, ErrorCode::Internal, "freudenthal: non-integral multiplicity");
      m = num / denom;
    }
    if (m > 0) dominant_mult[mu] = m;
  }
  for (const Vec& mu : order) {
    Int m = mult_of(mu);
    if (m > 0) {
      out.mult[mu] = m;
      total += m;
      require(total <= dim_cap, ErrorCode::DimensionCap, "freudenthal total exceeds dimension cap");
    }
  }
  out.total = total;
  UnderlineWeight single{std::vector<Vec>{lambda}};
  require(total == weyl_dim(rd, t, J, single), ErrorCode::Internal,
          "freudenthal total disagrees with the Weyl dimension formula");
  return out;
}

// Longest weight string (over all positive roots) in the module of highest
// weight lambda, computed from the actual weight diagram.
inline Int weight_string_max(const RootDatum& rd, const PositiveRootTable& t, const Vec& lambda,
                             Int dim_cap = 100000) {
  std::vector<int> all = all_simple_indices(rd);
  MultiplicityTable tab = freudenthal(rd, t, all, lambda, dim_cap);
  Int best = 1;
  for (const auto& [mu, m] : tab.mult) {
    (void)m;
    for (int r = 0; r < t.count(); ++r) {
      const Vec& alpha = t.roots[r].root;
      if (tab.mult.count(vec_add(mu, alpha))) continue;  // not the top of the string
      Int len = 1;
      Vec nu = vec_sub(mu, alpha);
      while (tab.mult.count(nu)) {
        ++len;
        nu = vec_sub(nu, alpha);
      }
      best = std::max(best, len);
    }
  }
  return best;
}

}  // namespace satake
