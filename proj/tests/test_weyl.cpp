#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "satake/weyl.hpp"

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

Int factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("Weyl group orders and length distributions") {
  Ctx a2 = make(Family::A, 2);
  REQUIRE(a2.w.size() == 6);
  std::map<int, int> by_len;
  for (const WeylElement& w : a2.w) by_len[w.length]++;
  CHECK(by_len == std::map<int, int>{{0, 1}, {1, 2}, {2, 2}, {3, 1}});

  Ctx b2 = make(Family::B, 2);
  CHECK(b2.w.size() == 8);
  int maxlen = 0;
  for (const WeylElement& w : b2.w) maxlen = std::max(maxlen, w.length);
  CHECK(maxlen == 4);

  Ctx g2 = make(Family::G, 2);
  CHECK(g2.w.size() == 12);
  maxlen = 0;
  for (const WeylElement& w : g2.w) maxlen = std::max(maxlen, w.length);
  CHECK(maxlen == 6);

  // |W(B_n)| = 2^n n!
  Ctx b3 = make(Family::B, 3);
  CHECK(static_cast<Int>(b3.w.size()) == 8 * factorial(3));
}

TEST_CASE("group cap raises GroupTooLarge") {
  RootDatum rd = build_root_datum({Family::A, 3}, LatticePreset::SimplyConnected);
  PositiveRootTable t = positive_root_table(rd);
  CHECK_THROWS_AS(enumerate_weyl(rd, t, 10), Error);
}

TEST_CASE("reduced word length equals inversion count") {
  for (Family f : {Family::A, Family::B, Family::G}) {
    Ctx c = make(f, 2);
    for (const WeylElement& w : c.w)
      CHECK(static_cast<int>(inversion_set(c.t, w).size()) == w.length);
  }
}

TEST_CASE("coset representatives, sizes, and the Poincare identity") {
  Ctx a2 = make(Family::A, 2);
  CosetReps reps = minimal_coset_reps(a2.rd, a2.t, a2.w, {0});
  REQUIRE(reps.elements.size() == 3);  // |S3| / |S2|
  CHECK(reps.by_length == std::map<int, Int>{{0, 1}, {1, 1}, {2, 1}});
  for (const WeylElement& w : reps.elements)
    for (int r = 0; r < a2.t.count(); ++r) {
      // w^{-1}(Phi_J^+) subset Phi^+ for every root of Phi_J^+
      bool inJ = a2.t.roots[r].coeffs[1] == 0;
      if (inJ) CHECK(a2.t.is_positive_root(mat_vec(w.inv_action, a2.t.roots[r].root)));
    }

  Ctx b2 = make(Family::B, 2);
  CosetReps reps_b = minimal_coset_reps(b2.rd, b2.t, b2.w, {0});
  CHECK(reps_b.elements.size() == 4);
  CHECK(reps_b.by_length == std::map<int, Int>{{0, 1}, {1, 1}, {2, 1}, {3, 1}});

  // J = empty set: every element is a representative
  Ctx a1 = make(Family::A, 1);
  CosetReps reps_all = minimal_coset_reps(a1.rd, a1.t, a1.w, {});
  CHECK(reps_all.elements.size() == 2);
}

TEST_CASE("Poincare identity P_W = P_{W_J} * P_{^JW}") {
  for (auto [f, rank, J] : std::vector<std::tuple<Family, int, std::vector<int>>>{
           {Family::A, 3, {0, 1}}, {Family::B, 3, {0, 2}}, {Family::G, 2, {1}}}) {
    Ctx c = make(f, rank);
    CosetReps reps = minimal_coset_reps(c.rd, c.t, c.w, J);
    // coefficient vectors of the length generating polynomials
    auto poly_of = [](const std::vector<const WeylElement*>& els) {
      std::vector<Int> p;
      for (const WeylElement* w : els) {
        if (static_cast<int>(p.size()) <= w->length) p.resize(w->length + 1, 0);
        p[w->length] += 1;
      }
      return p;
    };
    std::vector<const WeylElement*> all, wj, jw;
    for (const WeylElement& w : c.w) {
      all.push_back(&w);
      bool in = true;
      for (int r : inversion_set(c.t, w))
        for (int i = 0; i < c.rd.n(); ++i)
          if (c.t.roots[r].coeffs[i] != 0 && std::find(J.begin(), J.end(), i) == J.end())
            in = false;
      if (in) wj.push_back(&w);
    }
    for (const WeylElement& w : reps.elements) jw.push_back(&w);
    std::vector<Int> pw = poly_of(all), pj = poly_of(wj), pq = poly_of(jw);
    std::vector<Int> prod(pj.size() + pq.size() - 1, 0);
    for (std::size_t i = 0; i < pj.size(); ++i)
      for (std::size_t k = 0; k < pq.size(); ++k) prod[i + k] += pj[i] * pq[k];
    CHECK(prod == pw);
    // by_length agrees with the quotient polynomial
    for (std::size_t i = 0; i < pq.size(); ++i)
      if (pq[i] != 0) CHECK(reps.by_length.at(static_cast<int>(i)) == pq[i]);
  }
}

TEST_CASE("unique factorization w = u v with u in W_J and v in ^JW") {
  for (auto [f, rank, J] : std::vector<std::tuple<Family, int, std::vector<int>>>{
           {Family::A, 2, {0}}, {Family::B, 2, {1}}, {Family::G, 2, {0}}, {Family::A, 3, {0, 2}}}) {
    Ctx c = make(f, rank);
    CosetReps reps = minimal_coset_reps(c.rd, c.t, c.w, J);
    // W_J inside W: elements whose inversion set lies in Phi_J^+
    std::vector<const WeylElement*> wj;
    for (const WeylElement& u : c.w) {
      bool in = true;
      for (int r : inversion_set(c.t, u)) {
        for (int i = 0; i < c.rd.n(); ++i)
          if (c.t.roots[r].coeffs[i] != 0 && std::find(J.begin(), J.end(), i) == J.end()) in = false;
      }
      if (in) wj.push_back(&u);
    }
    CHECK(wj.size() * reps.elements.size() == c.w.size());
    std::set<Vec> seen;
    int count = 0;
    for (const WeylElement* u : wj)
      for (const WeylElement& v : reps.elements) {
        Mat prod = mat_mul(u->action, v.action);
        Vec img = mat_vec(prod, c.t.two_rho);
        CHECK(seen.insert(img).second);
        ++count;
        // lengths add
        int len_uv = 0;
        Mat inv = mat_mul(v.inv_action, u->inv_action);
        for (int r = 0; r < c.t.count(); ++r)
          if (!c.t.is_positive_root(mat_vec(inv, c.t.roots[r].root))) ++len_uv;
        CHECK(len_uv == u->length + v.length);
      }
    CHECK(count == static_cast<int>(c.w.size()));
  }
}

TEST_CASE("dot action worked examples") {
  Ctx gl2 = make(Family::A, 1, LatticePreset::GLStyle);
  const WeylElement& s = gl2.w[1];
  CHECK(dot_action_single(gl2.t, s, Vec{0, 0}) == Vec{-1, 1});
  CHECK(dot_action_single(gl2.t, gl2.w[0], Vec{3, 1}) == Vec{3, 1});

  Ctx gl3 = make(Family::A, 2, LatticePreset::GLStyle);
  // w = s2 s1 acting as matrices, s1 applied first
  const WeylElement* w21 = nullptr;
  for (const WeylElement& w : gl3.w)
    if (w.word == std::vector<int>{1, 0}) w21 = &w;
  REQUIRE(w21 != nullptr);
  CHECK(dot_action_single(gl3.t, *w21, Vec{0, 0, 0}) == Vec{-1, -1, 2});
}

TEST_CASE("dot action is a twisted group action") {
  Ctx b2 = make(Family::B, 2);
  UnderlineWeight lam{{Vec{1, 0}}};
  for (const WeylElement& v : b2.w)
    for (const WeylElement& w : b2.w) {
      Mat prod = mat_mul(v.action, w.action);
      // locate vw among the enumerated elements
      const WeylElement* vw = nullptr;
      for (const WeylElement& x : b2.w)
        if (x.action == prod) vw = &x;
      REQUIRE(vw != nullptr);
      CHECK(dot_action_single(b2.t, *vw, lam.comps[0]) ==
            dot_action_single(b2.t, v, dot_action_single(b2.t, w, lam.comps[0])));
    }
}

TEST_CASE("underline dot action shape checking") {
  Ctx a1 = make(Family::A, 1);
  UnderlineWeylElement w{{a1.w[0], a1.w[1]}};
  UnderlineWeight lam = UnderlineWeight::zero(2, 1);
  UnderlineWeight out = dot_action(a1.t, w, lam);
  CHECK(out.comps[0] == Vec{0});
  CHECK(out.comps[1] == Vec{-2});
  UnderlineWeight bad = UnderlineWeight::zero(1, 1);
  CHECK_THROWS_AS(dot_action(a1.t, w, bad), Error);
}

TEST_CASE("weak order via inversion sets") {
  Ctx a2 = make(Family::A, 2);
  const WeylElement& e = a2.w[0];
  const WeylElement *s1 = nullptr, *s2 = nullptr, *w01 = nullptr, *w10 = nullptr;
  for (const WeylElement& w : a2.w) {
    if (w.word == std::vector<int>{0}) s1 = &w;
    if (w.word == std::vector<int>{1}) s2 = &w;
    if (w.word == std::vector<int>{0, 1}) w01 = &w;
    if (w.word == std::vector<int>{1, 0}) w10 = &w;
  }
  REQUIRE((s1 && s2 && w01 && w10));
  CHECK(weak_order_leq(a2.t, e, *w01));
  CHECK_FALSE(weak_order_leq(a2.t, *s1, *s2));
  // s1 precedes exactly the length-2 element whose inversion set is
  // {alpha_1, alpha_1 + alpha_2}
  std::vector<int> inv01 = inversion_set(a2.t, *w01);
  CHECK(inv01 == std::vector<int>{a2.t.idx(a2.rd.simple_roots[0]),
                                  a2.t.idx(vec_add(a2.rd.simple_roots[0], a2.rd.simple_roots[1]))});
  CHECK(weak_order_leq(a2.t, *s1, *w01));
  CHECK_FALSE(weak_order_leq(a2.t, *s1, *w10));
  // l(v) <= l(w) whenever v <= w, equality only for v = w
  for (const WeylElement& v : a2.w)
    for (const WeylElement& w : a2.w)
      if (weak_order_leq(a2.t, v, w)) {
        CHECK(v.length <= w.length);
        if (v.length == w.length) CHECK(v.action == w.action);
      }
}

TEST_CASE("longest relative element") {
  Ctx a1 = make(Family::A, 1);
  WeylElement top = longest_relative_element(a1.rd, a1.t, a1.w, {});
  CHECK(top.length == 1);
  CHECK(dot_action_single(a1.t, top, Vec{0}) == Vec{-2});  // -2 rho = -alpha

  Ctx gl3 = make(Family::A, 2, LatticePreset::GLStyle);
  WeylElement top3 = longest_relative_element(gl3.rd, gl3.t, gl3.w, {0});
  CHECK(top3.length == 2);
  CHECK(dot_action_single(gl3.t, top3, Vec{0, 0, 0}) == Vec{-1, -1, 2});

  // J = Delta: M = G, the representative is the identity
  WeylElement id = longest_relative_element(gl3.rd, gl3.t, gl3.w, {0, 1});
  CHECK(id.length == 0);
}
