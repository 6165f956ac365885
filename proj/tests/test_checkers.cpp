#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "satake/checkers.hpp"

using namespace satake;

namespace {

struct Ctx {
  RootDatum rd;
  PositiveRootTable t;
  std::vector<WeylElement> w;
};

Ctx make(Family f, int rank, LatticePreset preset = LatticePreset::SimplyConnected) {
  Ctx c;
  c.rd = build_root_datum({f, rank}, preset);
  c.t = positive_root_table(c.rd);
  c.w = enumerate_weyl(c.rd, c.t);
  return c;
}

}  // namespace

TEST_CASE("p-bound check") {
  Ctx a2 = make(Family::A, 2);
  CHECK(check_p_bound(a2.t, 5).verdict == Verdict::Pass);
  CHECK(check_p_bound(a2.t, 3).verdict == Verdict::Fail);
  Ctx g2 = make(Family::G, 2);
  CHECK(check_p_bound(g2.t, 7).verdict == Verdict::Fail);  // 7 > 7 fails
  CHECK(check_p_bound(g2.t, 11).verdict == Verdict::Pass);
}

TEST_CASE("direct orthogonality for GL2") {
  Ctx gl2 = make(Family::A, 1, LatticePreset::GLStyle);
  for (Int p : {5, 7, 11}) {
    LeviDatum lv = build_levi(gl2.rd, gl2.t, {}, 1);
    // the counterexample weight (p-2, 0)
    CheckReport bad = check_orthogonality_direct(gl2.rd, gl2.t, gl2.w, lv,
                                                 UnderlineWeight{{Vec{p - 2, 0}}}, p, 1);
    REQUIRE(bad.verdict == Verdict::Fail);
    REQUIRE(bad.witnesses.size() == 1);
    CHECK(bad.witnesses[0].words_a == std::vector<std::vector<int>>{{}});
    CHECK(bad.witnesses[0].words_b == std::vector<std::vector<int>>{{0}});
    // every other p-small (a, 0) passes
    for (Int a = 0; a <= p - 1; ++a) {
      if (a == p - 2) continue;
      CheckReport good = check_orthogonality_direct(gl2.rd, gl2.t, gl2.w, lv,
                                                    UnderlineWeight{{Vec{a, 0}}}, p, 1);
      CHECK(good.verdict == Verdict::Pass);
    }
  }
}

TEST_CASE("direct orthogonality edge cases") {
  Ctx gl2 = make(Family::A, 1, LatticePreset::GLStyle);
  LeviDatum lv_full = build_levi(gl2.rd, gl2.t, {0}, 1);
  // J = Delta: ^JW = {e}, vacuously Pass
  CheckReport r = check_orthogonality_direct(gl2.rd, gl2.t, gl2.w, lv_full,
                                             UnderlineWeight::zero(1, 2), 5, 1);
  CHECK(r.verdict == Verdict::Pass);
  // not p-small rejets
  LeviDatum lv = build_levi(gl2.rd, gl2.t, {}, 1);
  CHECK_THROWS_AS(check_orthogonality_direct(gl2.rd, gl2.t, gl2.w, lv,
                                             UnderlineWeight{{Vec{9, 0}}}, 5, 1),
                  Error);
  // enumeration cap
  CHECK_THROWS_AS(check_orthogonality_direct(gl2.rd, gl2.t, gl2.w, lv,
                                             UnderlineWeight::zero(3, 2), 5, 3, 0),
                  Error);
}

TEST_CASE("Fail witnesses verify by recomputation") {
  Ctx gl2 = make(Family::A, 1, LatticePreset::GLStyle);
  Int p = 7;
  LeviDatum lv = build_levi(gl2.rd, gl2.t, {}, 1);
  CheckReport bad = check_orthogonality_direct(gl2.rd, gl2.t, gl2.w, lv,
                                               UnderlineWeight{{Vec{p - 2, 0}}}, p, 1);
  REQUIRE(bad.verdict == Verdict::Fail);
  const Witness& w = bad.witnesses[0];
  REQUIRE(w.length_a != w.length_b);
  auto find_by_word = [&](const std::vector<int>& word) -> const WeylElement& {
    for (const WeylElement& x : gl2.w)
      if (x.word == word) return x;
    FAIL("witness word not found");
    return gl2.w[0];
  };
  UnderlineWeight lam{{Vec{p - 2, 0}}};
  const WeylElement &va = find_by_word(w.words_a[0]), &vb = find_by_word(w.words_b[0]);
  ModPCharacter ca = restrict_mod_p(
      UnderlineWeight{{dot_action_single(gl2.t, va, lam.comps[0])}}, lv.cm_basis, lv.cm_tag, p, 1);
  ModPCharacter cb = restrict_mod_p(
      UnderlineWeight{{dot_action_single(gl2.t, vb, lam.comps[0])}}, lv.cm_basis, lv.cm_tag, p, 1);
  CHECK(ca == cb);
  CHECK(ca.exps == w.character);
  CHECK(va.length != vb.length);
}

TEST_CASE("multiplicity-freeness at lambda = 0 over the full torus") {
  for (auto [fam, rank, preset] :
       std::vector<std::tuple<Family, int, LatticePreset>>{
           {Family::A, 2, LatticePreset::SimplyConnected},
           {Family::B, 2, LatticePreset::SimplyConnected},
           {Family::A, 2, LatticePreset::GLStyle},
           {Family::G, 2, LatticePreset::SimplyConnected}}) {
    Ctx c = make(fam, rank, preset);
    Int h = c.t.max_coxeter();
    Int p = h + 2;
    while (!is_prime(p)) ++p;
    for (int f = 1; f <= 2; ++f) {
      LeviDatum lv = build_levi(c.rd, c.t, {}, f);
      CheckReport r = check_orthogonality_direct(c.rd, c.t, c.w, lv,
                                                 UnderlineWeight::zero(f, c.rd.d), p, f);
      CHECK(r.verdict == Verdict::Pass);
    }
  }
}

TEST_CASE("criterion MT and the GL2 counterexample") {
  Ctx gl2 = make(Family::A, 1, LatticePreset::GLStyle);
  Int p = 7;
  CheckReport bad = check_sufficient_criterion(gl2.rd, gl2.t, {}, UnderlineWeight{{Vec{p - 2, 0}}},
                                               p, 1, Criterion::MT);
  REQUIRE(bad.verdict == Verdict::Fail);
  CHECK(bad.witnesses[0].kind == "pairing-eq-p-minus-1");
  CheckReport good = check_sufficient_criterion(gl2.rd, gl2.t, {}, UnderlineWeight{{Vec{1, 0}}},
                                                p, 1, Criterion::MT);
  CHECK(good.verdict == Verdict::Pass);
  // SL2 has disconnected center
  Ctx a1 = make(Family::A, 1);
  CheckReport sc = check_sufficient_criterion(a1.rd, a1.t, {}, UnderlineWeight{{Vec{1}}}, p, 1,
                                              Criterion::MT);
  CHECK(sc.verdict == Verdict::Fail);
  CHECK(sc.witnesses[0].kind == "center-not-connected");
  // refined and unrefined variants agree on GL2 and GL3
  Ctx gl3 = make(Family::A, 2, LatticePreset::GLStyle);
  for (Int a = 0; a <= p - 1; ++a) {
    UnderlineWeight lam{{Vec{a, 0, 0}}};
    if (!is_p_small(gl3.rd, gl3.t, lam, p).ok) continue;
    CheckReport plain =
        check_sufficient_criterion(gl3.rd, gl3.t, {}, lam, p, 1, Criterion::MT, false);
    CheckReport refined =
        check_sufficient_criterion(gl3.rd, gl3.t, {}, lam, p, 1, Criterion::MT, true);
    CHECK(plain.verdict == refined.verdict);
  }
}

TEST_CASE("criterion preconditions") {
  Ctx gl3 = make(Family::A, 2, LatticePreset::GLStyle);
  UnderlineWeight zero = UnderlineWeight::zero(1, 3);
  CHECK_THROWS_AS(
      check_sufficient_criterion(gl3.rd, gl3.t, {0}, zero, 11, 1, Criterion::MT), Error);
  CHECK_THROWS_AS(check_sufficient_criterion(gl3.rd, gl3.t, {}, UnderlineWeight{{Vec{1, 0, 0}}},
                                             11, 1, Criterion::Bruhat),
                  Error);
}

TEST_CASE("Bruhat and abelian criteria on the listed families") {
  Ctx gl3 = make(Family::A, 2, LatticePreset::GLStyle);
  UnderlineWeight zero = UnderlineWeight::zero(1, 3);
  CheckReport bruhat =
      check_sufficient_criterion(gl3.rd, gl3.t, {0}, zero, 11, 1, Criterion::Bruhat);
  CHECK(bruhat.verdict == Verdict::Pass);
  CheckReport abelian =
      check_sufficient_criterion(gl3.rd, gl3.t, {0}, zero, 11, 1, Criterion::Abelian);
  CHECK(abelian.verdict == Verdict::Pass);

  // G2 with singleton J: comparable chains (the coset poset is a chain)
  Ctx g2 = make(Family::G, 2);
  UnderlineWeight zero2 = UnderlineWeight::zero(1, 2);
  for (int j : {0, 1}) {
    CheckReport r = check_sufficient_criterion(g2.rd, g2.t, {j}, zero2, 13, 1, Criterion::Bruhat);
    INFO("G2 singleton " << j);
    CHECK(r.notes.at("h_M") != "");
    if (r.verdict == Verdict::Fail) CHECK(r.witnesses[0].kind == "p-bound-strict");
  }

  // A2 with J empty: s1 and the opposite-length elements are incomparable
  Ctx a2 = make(Family::A, 2);
  CheckReport inc =
      check_sufficient_criterion(a2.rd, a2.t, {}, UnderlineWeight::zero(1, 2), 11, 1,
                                 Criterion::Bruhat);
  CHECK(inc.verdict == Verdict::Fail);
  CHECK(inc.witnesses[0].kind == "incomparable-pair");
}

TEST_CASE("criterion MT implies the direct check, refined or not") {
  for (auto [preset, d] : std::vector<std::pair<LatticePreset, int>>{
           {LatticePreset::GLStyle, 3}}) {
    Ctx gl3 = make(Family::A, 2, preset);
    Int p = 7;
    LeviDatum lv = build_levi(gl3.rd, gl3.t, {}, 1);
    for (Int a = 0; a <= p; ++a)
      for (Int b = 0; b <= a; ++b) {
        UnderlineWeight lam{{Vec{a, b, 0}}};
        if (!is_p_small(gl3.rd, gl3.t, lam, p).ok) continue;
        CheckReport plain =
            check_sufficient_criterion(gl3.rd, gl3.t, {}, lam, p, 1, Criterion::MT, false);
        CheckReport refined =
            check_sufficient_criterion(gl3.rd, gl3.t, {}, lam, p, 1, Criterion::MT, true);
        CHECK(plain.verdict == refined.verdict);
        if (plain.verdict != Verdict::Pass) continue;
        CheckReport direct = check_orthogonality_direct(gl3.rd, gl3.t, gl3.w, lv, lam, p, 1);
        INFO("lambda (" << a << "," << b << ",0)");
        CHECK(direct.verdict == Verdict::Pass);
      }
  }
}

TEST_CASE("soundness: criteria imply the direct check") {
  std::mt19937 rng(5050);
  std::vector<std::tuple<Family, int, LatticePreset>> shapes{
      {Family::A, 1, LatticePreset::SimplyConnected},
      {Family::A, 2, LatticePreset::GLStyle},
      {Family::A, 2, LatticePreset::SimplyConnected},
      {Family::B, 2, LatticePreset::SimplyConnected},
      {Family::G, 2, LatticePreset::SimplyConnected}};
  std::vector<Int> primes{5, 7, 11, 13, 17, 19};
  for (int trial = 0; trial < 60; ++trial) {
    auto [fam, rank, preset] = shapes[rng() % shapes.size()];
    Ctx c = make(fam, rank, preset);
    int mask = static_cast<int>(rng() % (1 << c.rd.n()));
    std::vector<int> J;
    for (int i = 0; i < c.rd.n(); ++i)
      if (mask & (1 << i)) J.push_back(i);
    Int p = primes[rng() % primes.size()];
    int f = 1 + static_cast<int>(rng() % 2);
    UnderlineWeight zero = UnderlineWeight::zero(f, c.rd.d);
    for (Criterion which : {Criterion::Bruhat, Criterion::Abelian}) {
      CheckReport crit = check_sufficient_criterion(c.rd, c.t, J, zero, p, f, which);
      if (crit.verdict != Verdict::Pass) continue;
      LeviDatum lv = build_levi(c.rd, c.t, J, f);
      CheckReport direct = check_orthogonality_direct(c.rd, c.t, c.w, lv, zero, p, f);
      INFO("criterion " << to_string(which) << " on " << c.rd.label << " p=" << p << " f=" << f);
      CHECK(direct.verdict == Verdict::Pass);
    }
  }
}

TEST_CASE("p-valuation tables") {
  Ctx a2 = make(Family::A, 2);
  PValuationTable tab = p_valuation_table(a2.rd, a2.t, {}, 5);
  REQUIRE(tab.rows.size() == 3);
  CHECK(tab.verdict == Verdict::Pass);
  std::multiset<std::pair<int, int>> vals;
  for (const PValuationRow& r : tab.rows) vals.insert({r.height, r.coxeter});
  CHECK(vals == std::multiset<std::pair<int, int>>{{1, 3}, {1, 3}, {2, 3}});

  Ctx g2 = make(Family::G, 2);
  PValuationTable tg = p_valuation_table(g2.rd, g2.t, {}, 11);
  CHECK(tg.verdict == Verdict::Pass);
  int max_h = 0;
  for (const PValuationRow& r : tg.rows) max_h = std::max(max_h, r.height);
  CHECK(max_h == 5);  // hgt(theta) = h - 1 = 5, so the largest value is 5/6

  PValuationTable empty = p_valuation_table(a2.rd, a2.t, {0, 1}, 5);
  CHECK(empty.rows.empty());
  CHECK(empty.verdict == Verdict::Pass);

  // small p violates the lower bound 1/(p-1) < ht/h
  PValuationTable low = p_valuation_table(a2.rd, a2.t, {}, 2);
  CHECK(low.verdict == Verdict::Fail);
}
