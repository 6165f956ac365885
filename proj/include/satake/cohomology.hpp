#pragma once

// Cohomological outputs at the level of constituents and dimensions: Kostant
// decompositions, N_0-cohomology semisimplifications, the shifted/twisted left
// adjoint, Satake target reports, principal-series cohomology, and semisimple
// parameter supports.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "satake/checkers.hpp"

namespace satake {

struct Constituent {
  UnderlineWeight weight;  // the J-dominant w . lambda, possibly twisted by delta
  std::vector<std::vector<int>> witness_words;
  int witness_length = 0;
  Int dim = 1;
  ModPCharacter central_char;
};

enum class ReportKind { LieAlgebra, GroupSemisimplified, LeftAdjoint };

inline const char* to_string(ReportKind k) {
  switch (k) {
    case ReportKind::LieAlgebra: return "LieAlgebra";
    case ReportKind::GroupSemisimplified: return "GroupSemisimplified";
    case ReportKind::LeftAdjoint: return "LeftAdjoint";
  }
  return "?";
}

struct CohomologyReport {
  ReportKind kind = ReportKind::LieAlgebra;
  bool caveat = false;  // graded pieces of an M_0-stable filtration, not a direct sum
  int dim_N0 = 0;
  std::map<int, std::vector<Constituent>> degrees;

  Int constituent_count() const {
    Int c = 0;
    for (const auto& [deg, v] : degrees) c += static_cast<Int>(v.size());
    return c;
  }
};

struct Caps {
  Int weyl = 1000000;
  Int underline = 1000000;
  Int freudenthal = 100000;
  int ce = 12;
};

namespace detail {

inline void gate_assumptions(const RootDatum& rd, const PositiveRootTable& t,
                             const UnderlineWeight& lam, Int p) {
  require(check_p_bound(t, p).verdict == Verdict::Pass, ErrorCode::AssumptionViolated,
          "p-bound p > h + 1 fails");
  PSmallResult ps = is_p_small(rd, t, lam, p);
  require(ps.ok, ErrorCode::AssumptionViolated, "weight is not p-small");
  (void)rd;
}

}  // namespace detail

// Degree i carries one constituent per underline element of ^JW of total
// length i, with weight w . lambda, characteristic-zero dimension, and central
// character on C_M.
inline CohomologyReport kostant_report(const RootDatum& rd, const PositiveRootTable& t,
                                       const std::vector<WeylElement>& weyl, const LeviDatum& lv,
                                       const UnderlineWeight& lam, Int p, int f,
                                       const Caps& caps = Caps{}) {
  detail::gate_assumptions(rd, t, lam, p);
  require(lam.f() == f, ErrorCode::ShapeMismatch, "lambda must have f components");
  CosetReps reps = minimal_coset_reps(rd, t, weyl, lv.J);
  std::size_t R = reps.elements.size();
  Int tuples = 1;
  for (int j = 0; j < f; ++j) {
    tuples = checked_mul(tuples, static_cast<Int>(R));
    require(tuples <= caps.underline, ErrorCode::EnumerationCap,
            "underline coset enumeration exceeds cap");
  }
  CohomologyReport rep;
  rep.kind = ReportKind::LieAlgebra;
  rep.caveat = false;
  rep.dim_N0 = f * lv.dim_N_alg;
  detail::for_each_tuple(R, f, [&](const std::vector<int>& idx) {
    Constituent c;
    c.weight.comps.reserve(f);
    int len = 0;
    for (int j = 0; j < f; ++j) {
      const WeylElement& w = reps.elements[idx[j]];
      c.weight.comps.push_back(dot_action_single(t, w, lam.comps[j]));
      c.witness_words.push_back(w.word);
      len += w.length;
    }
    c.witness_length = len;
    c.dim = weyl_dim(rd, t, lv.J, c.weight);
    c.central_char = restrict_mod_p(c.weight, lv.cm_basis, lv.cm_tag, p, f);
    rep.degrees[len].push_back(std::move(c));
  });
  return rep;
}

// Identical constituent data; the caveat records that the group-cohomology
// statement gives graded pieces of an M_0-stable filtration.
inline CohomologyReport group_cohomology_report(const RootDatum& rd, const PositiveRootTable& t,
                                                const std::vector<WeylElement>& weyl,
                                                const LeviDatum& lv, const UnderlineWeight& lam,
                                                Int p, int f, const Caps& caps = Caps{}) {
  CohomologyReport rep = kostant_report(rd, t, weyl, lv, lam, p, f, caps);
  rep.kind = ReportKind::GroupSemisimplified;
  rep.caveat = true;
  return rep;
}

// Degree n in [-dim N_0, 0] carries the degree-(n + dim N_0) group
// constituents twisted by delta.
inline CohomologyReport left_adjoint_report(const RootDatum& rd, const PositiveRootTable& t,
                                            const std::vector<WeylElement>& weyl,
                                            const LeviDatum& lv, const UnderlineWeight& lam, Int p,
                                            int f, const Caps& caps = Caps{}) {
  CohomologyReport grp = group_cohomology_report(rd, t, weyl, lv, lam, p, f, caps);
  CohomologyReport rep;
  rep.kind = ReportKind::LeftAdjoint;
  rep.caveat = grp.caveat;
  rep.dim_N0 = grp.dim_N0;
  UnderlineWeight delta = delta_character(rd, t, lv.J, f);
  for (auto& [deg, cs] : grp.degrees) {
    for (Constituent& c : cs) {
      Constituent shifted = c;
      shifted.weight = c.weight + delta;
      shifted.central_char = restrict_mod_p(shifted.weight, lv.cm_basis, lv.cm_tag, p, f);
      rep.degrees[deg - grp.dim_N0].push_back(std::move(shifted));
    }
  }
  return rep;
}

struct SatakeTargetReport {
  Verdict orthogonality = Verdict::Pass;
  std::vector<Witness> witnesses;
  int dim_N0 = 0;
  std::map<int, std::vector<Constituent>> targets;  // present iff orthogonality passes
  bool has_torus_ext = false;                       // J empty only
  std::vector<Int> torus_ext_ranks;                 // degree i -> C(f rk(G), i)
};

inline SatakeTargetReport satake_target_report(const RootDatum& rd, const PositiveRootTable& t,
                                               const std::vector<WeylElement>& weyl,
                                               const LeviDatum& lv, const UnderlineWeight& lam,
                                               Int p, int f, const Caps& caps = Caps{}) {
  detail::gate_assumptions(rd, t, lam, p);
  SatakeTargetReport rep;
  rep.dim_N0 = f * lv.dim_N_alg;
  CheckReport orth = check_orthogonality_direct(rd, t, weyl, lv, lam, p, f, caps.underline);
  rep.orthogonality = orth.verdict;
  rep.witnesses = orth.witnesses;
  if (orth.verdict != Verdict::Pass) return rep;
  CohomologyReport la = left_adjoint_report(rd, t, weyl, lv, lam, p, f, caps);
  rep.targets = la.degrees;
  if (lv.J.empty()) {
    rep.has_torus_ext = true;
    int n = f * rd.d;
    rep.torus_ext_ranks.resize(n + 1);
    for (int i = 0; i <= n; ++i) rep.torus_ext_ranks[i] = binomial(n, i);
  }
  return rep;
}

struct PrincipalSeriesReport {
  bool matched = false;
  std::vector<std::vector<int>> matched_words;  // underline reduced words
  int matched_length = 0;
  std::map<int, Int> dims;  // zero entries omitted
};

// chi0 is a character of T_0 given by exponents against the standard
// cocharacter basis of X_*.  The report matches it against the characters
// -(w . 0) for underline w in W and fills in the binomial window.
inline PrincipalSeriesReport principal_series_report(const RootDatum& rd,
                                                     const PositiveRootTable& t,
                                                     const std::vector<WeylElement>& weyl,
                                                     const ModPCharacter& chi0, Int p, int f,
                                                     const Caps& caps = Caps{}) {
  require(check_p_bound(t, p).verdict == Verdict::Pass, ErrorCode::AssumptionViolated,
          "p-bound p > h + 1 fails");
  Int m = pf_minus_one(p, f);
  require(chi0.modulus == m, ErrorCode::BasisShapeMismatch, "chi0 modulus must be p^f - 1");
  require(chi0.exps.size() == static_cast<std::size_t>(rd.d), ErrorCode::BasisShapeMismatch,
          "chi0 must have one exponent per cocharacter basis vector");
  Mat basis = identity(rd.d);
  std::size_t R = weyl.size();
  Int tuples = 1;
  for (int j = 0; j < f; ++j) {
    tuples = checked_mul(tuples, static_cast<Int>(R));
    require(tuples <= caps.underline, ErrorCode::EnumerationCap,
            "underline Weyl enumeration exceeds cap");
  }
  PrincipalSeriesReport rep;
  UnderlineWeight zero = UnderlineWeight::zero(f, rd.d);
  std::optional<std::vector<int>> match;
  detail::for_each_tuple(R, f, [&](const std::vector<int>& idx) {
    UnderlineWeight w0;
    for (int j = 0; j < f; ++j)
      w0.comps.push_back(vec_neg(dot_action_single(t, weyl[idx[j]], zero.comps[j])));
    ModPCharacter cand = restrict_mod_p(w0, basis, chi0.basis_tag, p, f);
    if (cand.exps == chi0.exps) {
      require(!match.has_value(), ErrorCode::Internal,
              "multiple Weyl matches contradict multiplicity-freeness");
      match = idx;
    }
  });
  if (!match) return rep;
  rep.matched = true;
  int len = 0;
  for (int j = 0; j < f; ++j) {
    rep.matched_words.push_back(weyl[(*match)[j]].word);
    len += weyl[(*match)[j]].length;
  }
  rep.matched_length = len;
  int n = f * rd.d;
  for (int i = len; i <= len + n; ++i) rep.dims[i] = binomial(n, i - len);
  return rep;
}

struct SupportPoint {
  ModPCharacter character;
  std::vector<int> degrees;  // sorted, in [-dim N_0, 0]
};

struct ParameterSupportEntry {
  std::vector<int> J;
  Verdict orthogonality = Verdict::Pass;
  int dim_N0 = 0;
  std::vector<SupportPoint> points;  // sorted by character; empty unless Pass
};

// For each subset J, the support points zeta = central character of
// (w . lambda) + delta with the degrees n = l(w) - dim N_0 realizing them.
inline ParameterSupportEntry parameter_support_for(const RootDatum& rd,
                                                   const PositiveRootTable& t,
                                                   const std::vector<WeylElement>& weyl,
                                                   const std::vector<int>& J,
                                                   const UnderlineWeight& lam, Int p, int f,
                                                   const Caps& caps = Caps{}) {
  LeviDatum lv = build_levi(rd, t, J, f);
  ParameterSupportEntry entry;
  entry.J = lv.J;
  entry.dim_N0 = lv.dim_N0;
  CheckReport orth = check_orthogonality_direct(rd, t, weyl, lv, lam, p, f, caps.underline);
  entry.orthogonality = orth.verdict;
  if (orth.verdict != Verdict::Pass) return entry;
  CohomologyReport la = left_adjoint_report(rd, t, weyl, lv, lam, p, f, caps);
  std::map<ModPCharacter, std::set<int>> by_char;
  for (const auto& [deg, cs] : la.degrees)
    for (const Constituent& c : cs) by_char[c.central_char].insert(deg);
  for (const auto& [chi, degs] : by_char) {
    SupportPoint pt;
    pt.character = chi;
    pt.degrees.assign(degs.begin(), degs.end());
    entry.points.push_back(std::move(pt));
  }
  return entry;
}

inline std::vector<ParameterSupportEntry> parameter_support(
    const RootDatum& rd, const PositiveRootTable& t, const std::vector<WeylElement>& weyl,
    const UnderlineWeight& lam, Int p, int f,
    const std::optional<std::vector<std::vector<int>>>& restrict_to = std::nullopt,
    const Caps& caps = Caps{}) {
  std::vector<std::vector<int>> subsets;
  if (restrict_to) {
    subsets = *restrict_to;
    for (auto& J : subsets) {
      std::sort(J.begin(), J.end());
      J.erase(std::unique(J.begin(), J.end()), J.end());
    }
  } else {
    int n = rd.n();
    require(n <= 20, ErrorCode::EnumerationCap, "too many subsets; restrict J explicitly");
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> J;
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) J.push_back(i);
      subsets.push_back(std::move(J));
    }
  }
  std::vector<ParameterSupportEntry> out(subsets.size());
  for (std::size_t s = 0; s < subsets.size(); ++s)
    out[s] = parameter_support_for(rd, t, weyl, subsets[s], lam, p, f, caps);
  return out;
}

}  // namespace satake
