#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "satake/weights.hpp"

using namespace satake;

namespace {

struct Ctx {
  RootDatum rd;
  PositiveRootTable t;
};

Ctx make(Family f, int rank, LatticePreset preset = LatticePreset::SimplyConnected) {
  Ctx c;
  c.rd = build_root_datum({f, rank}, preset);
  c.t = positive_root_table(c.rd);
  return c;
}

}  // namespace

TEST_CASE("p-smallness boundary cases") {
  Ctx a1 = make(Family::A, 1);
  Int p = 7;
  CHECK(is_p_small(a1.rd, a1.t, UnderlineWeight{{Vec{p - 1}}}, p).ok);  // <lam+rho,a^vee> = p
  PSmallResult res = is_p_small(a1.rd, a1.t, UnderlineWeight{{Vec{p}}}, p);
  CHECK_FALSE(res.ok);
  REQUIRE(res.witness.has_value());
  CHECK(res.witness->root_index == 0);
  CHECK_THROWS_AS(is_p_small(a1.rd, a1.t, UnderlineWeight{{Vec{-1}}}, p), Error);

  Ctx gl2 = make(Family::A, 1, LatticePreset::GLStyle);
  CHECK(is_p_small(gl2.rd, gl2.t, UnderlineWeight{{Vec{p - 2, 0}}}, p).ok);

  // f = 2: the second component violates
  PSmallResult res2 =
      is_p_small(a1.rd, a1.t, UnderlineWeight{{Vec{0}, Vec{p + 2}}}, p);
  CHECK_FALSE(res2.ok);
  CHECK(res2.witness->embedding == 1);
}

TEST_CASE("Weyl dimension formula") {
  Ctx a1 = make(Family::A, 1);
  std::vector<int> all{0};
  for (Int m = 0; m <= 6; ++m)
    CHECK(weyl_dim(a1.rd, a1.t, all, UnderlineWeight{{Vec{m}}}) == m + 1);

  Ctx gl3 = make(Family::A, 2, LatticePreset::GLStyle);
  std::vector<int> full{0, 1};
  CHECK(weyl_dim(gl3.rd, gl3.t, full, UnderlineWeight{{Vec{1, 0, -1}}}) == 8);
  CHECK(weyl_dim(gl3.rd, gl3.t, full, UnderlineWeight{{Vec{0, 0, 0}}}) == 1);
  // J-dominance is enforced
  CHECK_THROWS_AS(weyl_dim(gl3.rd, gl3.t, full, UnderlineWeight{{Vec{-1, 0, 0}}}), Error);
  // f = 2 multiplies the per-embedding dimensions
  CHECK(weyl_dim(gl3.rd, gl3.t, full, UnderlineWeight{{Vec{1, 0, -1}, Vec{1, 0, -1}}}) == 64);
  // empty J: every character is one-dimensional
  CHECK(weyl_dim(gl3.rd, gl3.t, {}, UnderlineWeight{{Vec{4, -7, 2}}}) == 1);
}

TEST_CASE("Freudenthal tables") {
  Ctx a1 = make(Family::A, 1);
  std::vector<int> all{0};
  MultiplicityTable trivial = freudenthal(a1.rd, a1.t, all, Vec{0});
  CHECK(trivial.mult == std::map<Vec, Int>{{Vec{0}, 1}});

  MultiplicityTable cube = freudenthal(a1.rd, a1.t, all, Vec{3});
  CHECK(cube.total == 4);
  CHECK(cube.mult == std::map<Vec, Int>{{Vec{-3}, 1}, {Vec{-1}, 1}, {Vec{1}, 1}, {Vec{3}, 1}});

  Ctx gl3 = make(Family::A, 2, LatticePreset::GLStyle);
  std::vector<int> full{0, 1};
  MultiplicityTable adj = freudenthal(gl3.rd, gl3.t, full, Vec{1, 0, -1});
  CHECK(adj.total == 8);
  CHECK(adj.mult.at(Vec{0, 0, 0}) == 2);
  CHECK(adj.mult.at(Vec{1, 0, -1}) == 1);
  CHECK(adj.mult.at(Vec{-1, 0, 1}) == 1);

  // B2 adjoint representation: highest weight = highest root, dim 10
  Ctx b2 = make(Family::B, 2);
  std::vector<int> b2all{0, 1};
  Vec theta = b2.t.highest_roots[0];
  MultiplicityTable b2adj = freudenthal(b2.rd, b2.t, b2all, theta);
  CHECK(b2adj.total == 10);
  CHECK(b2adj.mult.at(Vec{0, 0}) == 2);
}

TEST_CASE("Freudenthal respects the dimension cap") {
  Ctx a2 = make(Family::A, 2);
  std::vector<int> all{0, 1};
  CHECK_THROWS_AS(freudenthal(a2.rd, a2.t, all, Vec{3, 3}, 10), Error);
}

TEST_CASE("Freudenthal totals equal weyl_dim and are W-invariant") {
  Ctx b2 = make(Family::B, 2);
  std::vector<int> all{0, 1};
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 8; ++trial) {
    Vec lam{static_cast<Int>(rng() % 4), static_cast<Int>(rng() % 4)};
    MultiplicityTable tab = freudenthal(b2.rd, b2.t, all, lam);
    CHECK(tab.total == weyl_dim(b2.rd, b2.t, all, UnderlineWeight{{lam}}));
    for (const auto& [mu, m] : tab.mult) {
      Vec rep = dominant_rep(b2.rd, all, mu);
      CHECK(tab.mult.at(rep) == m);
    }
  }
}

TEST_CASE("weight string lengths") {
  Ctx a1 = make(Family::A, 1);
  CHECK(weight_string_max(a1.rd, a1.t, Vec{0}) == 1);
  for (Int m = 1; m <= 5; ++m) CHECK(weight_string_max(a1.rd, a1.t, Vec{m}) == m + 1);

  Ctx gl3 = make(Family::A, 2, LatticePreset::GLStyle);
  CHECK(weight_string_max(gl3.rd, gl3.t, Vec{1, 0, -1}) == 3);
}

TEST_CASE("p-small weights have strings of length at most p") {
  for (auto [fam, rank] : std::vector<std::pair<Family, int>>{
           {Family::A, 1}, {Family::A, 2}, {Family::B, 2}, {Family::G, 2}}) {
    Ctx c = make(fam, rank);
    std::vector<int> all;
    for (int i = 0; i < c.rd.n(); ++i) all.push_back(i);
    Int p = 7;
    // enumerate dominant weights in fundamental coordinates with small entries
    int n = c.rd.n();
    for (Int a = 0; a <= 4; ++a)
      for (Int b = 0; b <= (n > 1 ? 4 : 0); ++b) {
        Vec lam = n == 1 ? Vec{a} : Vec{a, b};
        UnderlineWeight ul{{lam}};
        if (!is_p_small(c.rd, c.t, ul, p).ok) continue;
        if (weyl_dim(c.rd, c.t, all, ul) > 500) continue;
        CHECK(weight_string_max(c.rd, c.t, lam) <= p);
      }
  }
}

TEST_CASE("Lemma on J-dominant weights of p-small modules") {
  // every Phi_J^+-dominant weight of a p-small module is p-small for Phi_J^+
  Ctx b2 = make(Family::B, 2);
  std::vector<int> all{0, 1};
  Int p = 7;
  for (Vec lam : {Vec{1, 1}, Vec{2, 1}, Vec{0, 3}}) {
    if (!is_p_small(b2.rd, b2.t, UnderlineWeight{{lam}}, p).ok) continue;
    MultiplicityTable tab = freudenthal(b2.rd, b2.t, all, lam);
    for (const std::vector<int>& J : std::vector<std::vector<int>>{{}, {0}, {1}, {0, 1}}) {
      Vec two_rho_J(b2.rd.d, 0);
      std::vector<int> phiJ;
      for (int r = 0; r < b2.t.count(); ++r) {
        bool inJ = true;
        for (int i = 0; i < b2.rd.n(); ++i)
          if (b2.t.roots[r].coeffs[i] != 0 && std::find(J.begin(), J.end(), i) == J.end())
            inJ = false;
        if (inJ) {
          phiJ.push_back(r);
          two_rho_J = vec_add(two_rho_J, b2.t.roots[r].root);
        }
      }
      for (const auto& [mu, m] : tab.mult) {
        if (!is_dominant_for(b2.rd, J, mu)) continue;
        for (int r : phiJ)
          CHECK(dot(vec_add(vec_scale(2, mu), two_rho_J), b2.t.roots[r].coroot) <= 2 * p);
      }
    }
  }
}

TEST_CASE("restriction to mod-p characters") {
  Ctx gl2 = make(Family::A, 1, LatticePreset::GLStyle);
  Mat basis = identity(2);
  Int p = 7;

  ModPCharacter zero = restrict_mod_p(UnderlineWeight::zero(1, 2), basis, "T", p, 1);
  CHECK(zero.exps == std::vector<Int>{0, 0});
  CHECK(zero.modulus == 6);

  // lambda = (p-2, 0) and s.lambda = (-1, p-1) restrict identically
  ModPCharacter a = restrict_mod_p(UnderlineWeight{{Vec{p - 2, 0}}}, basis, "T", p, 1);
  ModPCharacter b = restrict_mod_p(UnderlineWeight{{Vec{-1, p - 1}}}, basis, "T", p, 1);
  CHECK(a.exps == std::vector<Int>{p - 2, 0});
  CHECK(a == b);

  // f = 2 over A1 simply connected: exponent a + p b mod p^2 - 1
  Ctx a1 = make(Family::A, 1);
  Mat basis1 = identity(1);
  ModPCharacter two = restrict_mod_p(UnderlineWeight{{Vec{3}, Vec{4}}}, basis1, "T", p, 2);
  CHECK(two.modulus == 48);
  CHECK(two.exps == std::vector<Int>{3 + 7 * 4});

  // additivity
  std::mt19937 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    auto rnd = [&] {
      return Vec{static_cast<Int>(rng() % 19) - 9, static_cast<Int>(rng() % 19) - 9};
    };
    UnderlineWeight x{{rnd()}}, y{{rnd()}};
    ModPCharacter cx = restrict_mod_p(x, basis, "T", p, 1);
    ModPCharacter cy = restrict_mod_p(y, basis, "T", p, 1);
    ModPCharacter cxy = restrict_mod_p(x + y, basis, "T", p, 1);
    for (std::size_t i = 0; i < cx.exps.size(); ++i)
      CHECK(cxy.exps[i] == (cx.exps[i] + cy.exps[i]) % cx.modulus);
  }

  // shape mismatch
  CHECK_THROWS_AS(restrict_mod_p(UnderlineWeight::zero(2, 2), basis, "T", p, 1), Error);
}

TEST_CASE("rotating the embeddings multiplies exponents by p") {
  Ctx gl2 = make(Family::A, 1, LatticePreset::GLStyle);
  Mat basis = identity(2);
  Int p = 7;
  Int m = pf_minus_one(p, 2);
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 25; ++trial) {
    auto rnd = [&] {
      return Vec{static_cast<Int>(rng() % 15) - 7, static_cast<Int>(rng() % 15) - 7};
    };
    UnderlineWeight lam{{rnd(), rnd()}};
    UnderlineWeight rot{{lam.comps[1], lam.comps[0]}};
    ModPCharacter a = restrict_mod_p(lam, basis, "T", p, 2);
    ModPCharacter b = restrict_mod_p(rot, basis, "T", p, 2);
    for (std::size_t i = 0; i < a.exps.size(); ++i)
      CHECK(b.exps[i] == (a.exps[i] * p) % m);
  }
}
