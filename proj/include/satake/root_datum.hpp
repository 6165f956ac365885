#pragma once

// Split root data: Cartan types, lattice presets, positive-root enumeration
// with heights/components/Coxeter numbers, and the connected-center test.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "satake/linalg.hpp"

namespace satake {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct CartanType {
  Family family = Family::A;
  int rank = 1;

  std::string label() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }
};

inline Family family_from_char(char c) {
  switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
  }
  fail(ErrorCode::InvalidType, std::string("unknown family '") + c + "'");
}

inline void validate_type(const CartanType& t) {
  int n = t.rank;
  bool ok = false;
  switch (t.family) {
    case Family::A: ok = n >= 1; break;
    case Family::B: ok = n >= 2; break;
    case Family::C: ok = n >= 2; break;
    case Family::D: ok = n >= 3; break;
    case Family::E: ok = n == 6 || n == 7 || n == 8; break;
    case Family::F: ok = n == 4; break;
    case Family::G: ok = n == 2; break;
  }
  require(ok, ErrorCode::InvalidType, "inadmissible rank for family " + t.label());
}

// Cartan matrix in the convention m[i][j] = <alpha_i, alpha_j^vee>,
// Bourbaki plate numbering of the simple roots.
inline Mat cartan_matrix(const CartanType& t) {
  validate_type(t);
  int n = t.rank;
  Mat m(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 2;
  auto link = [&](int i, int j) { m[i][j] = m[j][i] = -1; };  // 1-based below
  auto chain = [&](int upto) {
    for (int i = 1; i < upto; ++i) link(i - 1, i);
  };
  switch (t.family) {
    case Family::A: chain(n); break;
    case Family::B:
      chain(n - 1);
      m[n - 2][n - 1] = -2;  // <alpha_{n-1}, alpha_n^vee>, alpha_n short
      m[n - 1][n - 2] = -1;
      break;
    case Family::C:
      chain(n - 1);
      m[n - 2][n - 1] = -1;
      m[n - 1][n - 2] = -2;  // alpha_n long
      break;
    case Family::D:
      chain(n - 1);
      link(n - 3, n - 1);
      break;
    case Family::E:
      // nodes: 1-3-4-5-6(-7-8), with 2 attached to 4
      link(0, 2);
      link(2, 3);
      link(3, 4);
      link(4, 5);
      link(1, 3);
      if (n >= 7) link(5, 6);
      if (n >= 8) link(6, 7);
      break;
    case Family::F:
      link(0, 1);
      m[1][2] = -2;  // alpha_2 long, alpha_3 short
      m[2][1] = -1;
      link(2, 3);
      break;
    case Family::G:
      m[0][1] = -1;  // alpha_1 short, alpha_2 long
      m[1][0] = -3;
      break;
  }
  return m;
}

enum class LatticePreset { SimplyConnected, Adjoint, GLStyle, Raw };

inline std::string to_string(LatticePreset p) {
  switch (p) {
    case LatticePreset::SimplyConnected: return "SimplyConnected";
    case LatticePreset::Adjoint: return "Adjoint";
    case LatticePreset::GLStyle: return "GLStyle";
    case LatticePreset::Raw: return "Raw";
  }
  return "?";
}

struct RootDatum {
  std::string label;
  LatticePreset preset = LatticePreset::SimplyConnected;
  int d = 0;           // lattice rank
  Mat simple_roots;    // n x d
  Mat simple_coroots;  // n x d
  Mat cartan;          // cartan[i][j] = <alpha_i, alpha_j^vee>
  std::vector<int> component_of;  // simple index -> component id
  int num_components = 0;

  int n() const { return static_cast<int>(simple_roots.size()); }
};

namespace detail {

inline void finish_datum(RootDatum& rd) {
  int n = rd.n();
  rd.cartan.assign(n, Vec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rd.cartan[i][j] = dot(rd.simple_roots[i], rd.simple_coroots[j]);
  for (int i = 0; i < n; ++i)
    require(rd.cartan[i][i] == 2, ErrorCode::InvalidType, "diagonal pairing <alpha,alpha^vee> != 2");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      require(rd.cartan[i][j] <= 0, ErrorCode::InvalidType, "positive off-diagonal Cartan entry");
      require((rd.cartan[i][j] == 0) == (rd.cartan[j][i] == 0), ErrorCode::InvalidType,
              "asymmetric Cartan zero pattern");
    }
  // linear independence of roots and of coroots
  require(static_cast<int>(smith_diagonal(rd.simple_roots).size()) == n, ErrorCode::InvalidType,
          "simple roots linearly dependent");
  require(static_cast<int>(smith_diagonal(rd.simple_coroots).size()) == n, ErrorCode::InvalidType,
          "simple coroots linearly dependent");
  // components of the Dynkin diagram
  rd.component_of.assign(n, -1);
  int comp = 0;
  for (int s = 0; s < n; ++s) {
    if (rd.component_of[s] >= 0) continue;
    std::vector<int> stack{s};
    rd.component_of[s] = comp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < n; ++w)
        if (rd.component_of[w] < 0 && rd.cartan[v][w] != 0) {
          rd.component_of[w] = comp;
          stack.push_back(w);
        }
    }
    ++comp;
  }
  rd.num_components = comp;
}

}  // namespace detail

inline RootDatum build_root_datum(const CartanType& type, LatticePreset preset) {
  validate_type(type);
  Mat m = cartan_matrix(type);
  int n = type.rank;
  RootDatum rd;
  rd.label = type.label();
  rd.preset = preset;
  switch (preset) {
    case LatticePreset::SimplyConnected:
      // X* = weight lattice in fundamental-weight coordinates
      rd.d = n;
      rd.simple_roots = m;
      rd.simple_coroots = identity(n);
      break;
    case LatticePreset::Adjoint:
      // X* = root lattice in simple-root coordinates
      rd.d = n;
      rd.simple_roots = identity(n);
      rd.simple_coroots.assign(n, Vec(n, 0));
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) rd.simple_coroots[j][i] = m[i][j];
      break;
    case LatticePreset::GLStyle: {
      require(type.family == Family::A, ErrorCode::UnsupportedPreset,
              "GLStyle preset applies to family A only");
      rd.d = n + 1;
      rd.simple_roots.assign(n, Vec(n + 1, 0));
      for (int i = 0; i < n; ++i) {
        rd.simple_roots[i][i] = 1;
        rd.simple_roots[i][i + 1] = -1;
      }
      rd.simple_coroots = rd.simple_roots;
      rd.label = "GL" + std::to_string(n + 1);
      break;
    }
    case LatticePreset::Raw:
      fail(ErrorCode::UnsupportedPreset, "Raw preset requires explicit vectors");
  }
  detail::finish_datum(rd);
  return rd;
}

inline RootDatum build_root_datum_raw(const Mat& simple_roots, const Mat& simple_coroots) {
  require(!simple_roots.empty(), ErrorCode::InvalidType, "raw datum needs at least one simple root");
  require(simple_roots.size() == simple_coroots.size(), ErrorCode::InvalidType,
          "raw datum: root/coroot count mismatch");
  std::size_t d = simple_roots[0].size();
  for (const Vec& v : simple_roots)
    require(v.size() == d, ErrorCode::InvalidType, "raw datum: ragged simple roots");
  for (const Vec& v : simple_coroots)
    require(v.size() == d, ErrorCode::InvalidType, "raw datum: ragged simple coroots");
  RootDatum rd;
  rd.label = "raw";
  rd.preset = LatticePreset::Raw;
  rd.d = static_cast<int>(d);
  rd.simple_roots = simple_roots;
  rd.simple_coroots = simple_coroots;
  detail::finish_datum(rd);
  // finite type: the symmetrized Cartan matrix must be positive definite,
  // which for a generalized Cartan matrix is equivalent to all leading
  // principal minors of the Cartan matrix itself being positive.
  int n = rd.n();
  for (int k = 1; k <= n; ++k) {
    Mat sub(k, Vec(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sub[i][j] = rd.cartan[i][j];
    // integer determinant by fraction-free elimination
    std::vector<Int> diag = smith_diagonal(sub);
    Int det_abs = 1;
    for (Int x : diag) det_abs = checked_mul(det_abs, x);
    require(static_cast<int>(diag.size()) == k && det_abs > 0, ErrorCode::InvalidType,
            "raw datum: Cartan matrix is not of finite type");
  }
  return rd;
}

struct PosRoot {
  Vec root;      // in X*
  Vec coroot;    // in X_*
  Vec coeffs;    // expansion of root over the simple roots
  Vec cocoeffs;  // expansion of coroot over the simple coroots
  int height = 0;
  int coheight = 0;
  int component = 0;
};

struct PositiveRootTable {
  std::vector<PosRoot> roots;  // sorted by (height, lex on root vector)
  std::map<Vec, int> index_of;
  std::set<Vec> all_roots;  // positive and negative
  std::vector<Vec> highest_roots;
  std::vector<int> coxeter_numbers;  // per component
  Vec two_rho;
  int num_components = 0;

  bool is_root(const Vec& v) const { return all_roots.count(v) > 0; }
  bool is_positive_root(const Vec& v) const { return index_of.count(v) > 0; }
  int idx(const Vec& v) const {
    auto it = index_of.find(v);
    require(it != index_of.end(), ErrorCode::Internal, "root lookup failed");
    return it->second;
  }
  int count() const { return static_cast<int>(roots.size()); }
  int max_coxeter() const {
    int h = 0;
    for (int c : coxeter_numbers) h = std::max(h, c);
    return h;
  }
};

// Enumerate all roots as the Weyl orbit of the simple roots, tracking coroots
// and both expansion coefficient vectors; sort positives by (height, lex).
inline PositiveRootTable positive_root_table(const RootDatum& rd) {
  int n = rd.n();
  struct Item {
    Vec root, coroot, coeffs, cocoeffs;
  };
  std::map<Vec, Item> seen;
  std::vector<Vec> queue;
  for (int i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    Item it{rd.simple_roots[i], rd.simple_coroots[i], e, e};
    seen.emplace(it.root, it);
    queue.push_back(it.root);
  }
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Item cur = seen.at(queue[qi]);
    for (int j = 0; j < n; ++j) {
      Int a = dot(cur.root, rd.simple_coroots[j]);
      Int b = dot(rd.simple_roots[j], cur.coroot);
      Item nx;
      nx.root = vec_sub(cur.root, vec_scale(a, rd.simple_roots[j]));
      nx.coroot = vec_sub(cur.coroot, vec_scale(b, rd.simple_coroots[j]));
      nx.coeffs = cur.coeffs;
      nx.coeffs[j] -= a;
      nx.cocoeffs = cur.cocoeffs;
      nx.cocoeffs[j] -= b;
      if (seen.emplace(nx.root, nx).second) queue.push_back(nx.root);
    }
  }

  PositiveRootTable t;
  t.num_components = rd.num_components;
  std::vector<std::pair<std::pair<int, Vec>, Item>> pos;
  for (const auto& [rv, item] : seen) {
    t.all_roots.insert(rv);
    Int hsum = 0;
    for (Int c : item.coeffs) hsum += c;
    if (hsum > 0) {
      for (Int c : item.coeffs)
        require(c >= 0, ErrorCode::Internal, "positive root with negative coefficient");
      pos.push_back({{static_cast<int>(hsum), rv}, item});
    }
  }
  std::sort(pos.begin(), pos.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  t.two_rho.assign(rd.d, 0);
  for (const auto& [key, item] : pos) {
    PosRoot pr;
    pr.root = item.root;
    pr.coroot = item.coroot;
    pr.coeffs = item.coeffs;
    pr.cocoeffs = item.cocoeffs;
    pr.height = key.first;
    Int ch = 0;
    for (Int c : item.cocoeffs) ch += c;
    pr.coheight = static_cast<int>(ch);
    int comp = -1;
    for (int i = 0; i < n; ++i)
      if (item.coeffs[i] != 0) {
        comp = rd.component_of[i];
        break;
      }
    pr.component = comp;
    t.index_of[pr.root] = static_cast<int>(t.roots.size());
    t.two_rho = vec_add(t.two_rho, pr.root);
    t.roots.push_back(std::move(pr));
  }
  t.highest_roots.assign(rd.num_components, Vec{});
  t.coxeter_numbers.assign(rd.num_components, 0);
  std::vector<int> best_height(rd.num_components, -1);
  for (const PosRoot& pr : t.roots)
    if (pr.height > best_height[pr.component]) {
      best_height[pr.component] = pr.height;
      t.highest_roots[pr.component] = pr.root;
    }
  for (int c = 0; c < rd.num_components; ++c) t.coxeter_numbers[c] = best_height[c] + 1;
  return t;
}

// X*(T)/Z.Phi is torsion-free iff every Smith diagonal entry of the matrix of
// simple roots equals 1.
inline bool center_is_connected(const RootDatum& rd) {
  std::vector<Int> diag = smith_diagonal(rd.simple_roots);
  for (Int x : diag)
    if (x != 1) return false;
  return true;
}

}  // namespace satake
