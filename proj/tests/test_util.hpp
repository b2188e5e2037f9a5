#pragma once

#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "straightknot/diagram.hpp"
#include "straightknot/invariants.hpp"
#include "straightknot/straight.hpp"
#include "straightknot/table.hpp"

#ifndef SK_TABLE_PATH
#define SK_TABLE_PATH "data/knots.jsonl"
#endif
#ifndef SK_ORACLE_PATH
#define SK_ORACLE_PATH "tests/data/knotinfo_invariants.jsonl"
#endif

namespace sktest {

inline const sk::Table& table() {
  static const sk::Table t = sk::load_table(SK_TABLE_PATH);
  return t;
}

inline sk::Diagram pd(const std::string& text) { return sk::validate_pd(sk::parse_pd(text)); }

inline sk::Diagram trefoil() { return pd("[[1,5,2,4],[3,1,4,6],[5,3,6,2]]"); }

inline const sk::Diagram& knot(const std::string& name) { return table().find(name)->diagram; }

// every raw shadow with every over assignment
inline std::vector<sk::StraightCode> all_codes(int n) {
  std::vector<sk::StraightCode> out;
  sk::for_each_raw_shadow(n, [&](const sk::ShadowCode& s) {
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<char> b(n);
      for (int i = 0; i < n; ++i) b[i] = (mask >> i) & 1;
      out.push_back({n, s.visits, s.sides, b});
    }
  });
  return out;
}

inline std::vector<sk::StraightCode> sample_codes(int n, int count, unsigned seed) {
  std::vector<sk::ShadowCode> shadows;
  sk::for_each_raw_shadow(n, [&](const sk::ShadowCode& s) { shadows.push_back(s); });
  std::mt19937 rng(seed);
  std::vector<sk::StraightCode> out;
  for (int k = 0; k < count; ++k) {
    const auto& s = shadows[rng() % shadows.size()];
    std::vector<char> b(n);
    for (auto& x : b) x = rng() & 1;
    out.push_back({n, s.visits, s.sides, b});
  }
  return out;
}

// Faces of a PD code as orbits of (slot -> partner slot -> next slot ccw).
// Returns face id of corner (c, k), the corner between slots k and k+1.
struct OracleFaces {
  int count = 0;
  std::vector<std::array<int, 4>> corner;
};

inline OracleFaces oracle_faces(const sk::PdCode& p) {
  const int n = static_cast<int>(p.size());
  std::map<int, std::vector<std::pair<int, int>>> where;
  for (int c = 0; c < n; ++c)
    for (int i = 0; i < 4; ++i) where[p[c][i]].push_back({c, i});
  auto other = [&](int c, int i) {
    const auto& w = where[p[c][i]];
    if (w[0] == std::make_pair(c, i)) return w[1];
    return w[0];
  };
  OracleFaces f;
  f.corner.assign(n, {-1, -1, -1, -1});
  // dart (c, i) stands for corner (c, i - 1)
  std::vector<std::array<int, 4>> seen(n, {-1, -1, -1, -1});
  for (int c = 0; c < n; ++c)
    for (int i = 0; i < 4; ++i) {
      if (seen[c][i] >= 0) continue;
      int id = f.count++;
      int cc = c, ii = i;
      while (seen[cc][ii] < 0) {
        seen[cc][ii] = id;
        f.corner[cc][(ii + 3) % 4] = id;
        auto [c2, j] = other(cc, ii);
        cc = c2;
        ii = (j + 1) % 4;
      }
    }
  if (n == 0) f.count = 2;
  return f;
}

// longest run of passages that meets no crossing twice
inline int oracle_simple_arc(const sk::Diagram& d) {
  const int m = d.edges();
  int best = 0;
  for (int start = 0; start < m; ++start) {
    std::vector<char> seen(d.crossings(), 0);
    int len = 0;
    for (int k = 0; k < m; ++k) {
      int c = d.pass_crossing[(start + k) % m];
      if (seen[c]) break;
      seen[c] = 1;
      ++len;
    }
    best = std::max(best, len);
  }
  return best;
}

// same knot diagram with edge labels permuted
inline sk::PdCode relabel(const sk::PdCode& p, unsigned seed) {
  int m = 2 * static_cast<int>(p.size());
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 1);
  std::mt19937 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  sk::PdCode out = p;
  for (auto& x : out)
    for (auto& e : x) e = perm[e - 1];
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

}  // namespace sktest
