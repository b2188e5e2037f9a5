#include "straightknot/flype.hpp"

#include <algorithm>
#include <map>
#include <nlohmann/json.hpp>
#include <numeric>
#include <set>

#include "straightknot/error.hpp"

namespace sk {

const char* cut_kind_name(CutKind k) {
  switch (k) {
    case CutKind::Trivial: return "trivial";
    case CutKind::SingleCrossing: return "single-crossing";
    case CutKind::TangleTangle: return "tangle-tangle";
  }
  return "?";
}

namespace {

struct Shadow {
  int n = 0;
  std::vector<std::array<int, 2>> ends;   // edge label - 1 -> crossings
  std::vector<std::array<int, 2>> sides;  // edge label - 1 -> faces
  int faces = 0;
};

Shadow shadow_of(const Diagram& d) {
  Shadow s;
  s.n = d.crossings();
  const int m = d.edges();
  auto f = faces(d);
  s.faces = f.count;
  s.ends.resize(m);
  s.sides.resize(m);
  for (int l = 1; l <= m; ++l) {
    int in_pass = l - 1, out_pass = (l - 2 + m) % m;
    int c = d.pass_crossing[in_pass];
    int slot = d.pass_slot[in_pass];
    s.ends[l - 1] = {d.pass_crossing[out_pass], c};
    s.sides[l - 1] = {f.corner_face[c][(slot + 3) % 4], f.corner_face[c][slot]};
  }
  return s;
}

std::vector<int> components(const Shadow& s, const std::vector<char>& removed, const std::vector<char>& skip_vertex, int& count) {
  std::vector<int> p(s.n);
  std::iota(p.begin(), p.end(), 0);
  auto find = [&](int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  };
  for (size_t e = 0; e < s.ends.size(); ++e) {
    if (removed[e]) continue;
    auto [a, b] = s.ends[e];
    if (skip_vertex[a] || skip_vertex[b]) continue;
    p[find(a)] = find(b);
  }
  std::map<int, int> id;
  std::vector<int> comp(s.n, -1);
  for (int v = 0; v < s.n; ++v) {
    if (skip_vertex[v]) continue;
    auto [it, fresh] = id.emplace(find(v), static_cast<int>(id.size()));
    comp[v] = it->second;
  }
  count = static_cast<int>(id.size());
  return comp;
}

}  // namespace

bool disconnects(const Diagram& d, const std::array<int, 4>& edges) {
  auto s = shadow_of(d);
  std::vector<char> removed(s.ends.size(), 0), none(s.n, 0);
  for (int l : edges) removed.at(l - 1) = 1;
  int k = 0;
  components(s, removed, none, k);
  return k >= 2;
}

std::vector<FourCut> four_cuts(const Diagram& d) {
  std::vector<FourCut> out;
  if (d.crossings() < 2) return out;
  auto s = shadow_of(d);
  const int m = static_cast<int>(s.ends.size());
  // adjacency of the dual multigraph, loops dropped
  std::vector<std::vector<std::pair<int, int>>> adj(s.faces);
  for (int e = 0; e < m; ++e) {
    auto [a, b] = s.sides[e];
    if (a == b) continue;
    adj[a].push_back({e, b});
    adj[b].push_back({e, a});
  }
  std::map<std::pair<int, int>, int> shared;
  for (int e = 0; e < m; ++e) {
    auto [a, b] = s.sides[e];
    if (a == b) continue;
    if (++shared[{std::min(a, b), std::max(a, b)}] >= 2)
      throw Error(ErrorKind::NonPrime, "a circle meets the diagram twice with crossings on both sides");
  }

  std::set<std::array<int, 4>> seen;
  std::vector<char> none(s.n, 0);
  for (int f0 = 0; f0 < s.faces; ++f0)
    for (auto [e0, f1] : adj[f0])
      for (auto [e1, f2] : adj[f1]) {
        if (e1 == e0 || f2 == f0) continue;
        for (auto [e2, f3] : adj[f2]) {
          if (e2 == e1 || e2 == e0 || f3 == f0 || f3 == f1) continue;
          for (auto [e3, f4] : adj[f3]) {
            if (f4 != f0 || e3 == e0 || e3 == e1 || e3 == e2) continue;
            std::array<int, 4> key{e0 + 1, e1 + 1, e2 + 1, e3 + 1};
            std::sort(key.begin(), key.end());
            if (!seen.insert(key).second) continue;
            std::vector<char> removed(m, 0);
            for (int l : key) removed[l - 1] = 1;
            int k = 0;
            auto comp = components(s, removed, none, k);
            if (k != 2) continue;
            FourCut c;
            c.edges = key;
            std::vector<int> side[2];
            for (int v = 0; v < s.n; ++v) side[comp[v]].push_back(v);
            int small = side[0].size() < side[1].size() || (side[0].size() == side[1].size() && side[1][0] == 0) ? 0 : 1;
            c.inside = side[small];
            c.outside = side[1 - small];
            size_t lo = c.inside.size();
            c.kind = lo == 0 ? CutKind::Trivial : lo == 1 ? CutKind::SingleCrossing : CutKind::TangleTangle;
            out.push_back(std::move(c));
          }
        }
      }
  std::sort(out.begin(), out.end(), [](const FourCut& a, const FourCut& b) { return a.edges < b.edges; });
  return out;
}

std::vector<FlypeCandidate> flype_candidates(const Diagram& d) {
  std::vector<FlypeCandidate> out;
  auto cuts = four_cuts(d);
  if (cuts.empty()) return out;
  auto s = shadow_of(d);
  const int m = static_cast<int>(s.ends.size());
  for (const auto& cut : cuts) {
    for (int orient = 0; orient < 2; ++orient) {
      const auto& tangle = orient == 0 ? cut.inside : cut.outside;
      const auto& other = orient == 0 ? cut.outside : cut.inside;
      std::vector<char> in_t(s.n, 0);
      for (int v : tangle) in_t[v] = 1;
      for (int x : other) {
        // slots of x whose edge lands in the tangle
        std::vector<int> slots;
        bool loop = false;
        for (int k = 0; k < 4; ++k) {
          int l = d.pd[x][k];
          auto [a, b] = s.ends[l - 1];
          int y = a == x ? b : a;
          if (y == x) loop = true;
          if (in_t[y]) slots.push_back(k);
        }
        if (loop || slots.size() != 2) continue;
        if ((slots[1] - slots[0]) % 2 == 0) continue;
        FlypeCandidate fc;
        fc.flyper = x;
        fc.cut = cut;
        fc.tangle = tangle;
        for (int v : other)
          if (v != x) fc.rest.push_back(v);
        if (fc.rest.empty()) continue;
        fc.nontrivial = fc.tangle.size() >= 2 && fc.rest.size() >= 2;

        // tangles around the flyper: pieces of the shadow minus x split by its 2-edge cuts
        std::vector<char> skip(s.n, 0), removed(m, 0);
        skip[x] = 1;
        std::vector<int> live;
        for (int e = 0; e < m; ++e)
          if (s.ends[e][0] != x && s.ends[e][1] != x) live.push_back(e);
        int base = 0;
        components(s, removed, skip, base);
        std::vector<char> cut_edge(m, 0);
        for (size_t i = 0; i < live.size(); ++i)
          for (size_t j = i + 1; j < live.size(); ++j) {
            removed[live[i]] = removed[live[j]] = 1;
            int k = 0;
            components(s, removed, skip, k);
            if (k > base) cut_edge[live[i]] = cut_edge[live[j]] = 1;
            removed[live[i]] = removed[live[j]] = 0;
          }
        int k = 0;
        auto comp = components(s, cut_edge, skip, k);
        std::vector<std::vector<int>> pieces(k);
        for (int v = 0; v < s.n; ++v)
          if (v != x) pieces[comp[v]].push_back(v);
        // walk the ring starting from the piece holding the tangle's first crossing
        std::vector<std::set<int>> nbr(k);
        for (int e = 0; e < m; ++e)
          if (cut_edge[e]) {
            int a = comp[s.ends[e][0]], b = comp[s.ends[e][1]];
            if (a != b) nbr[a].insert(b), nbr[b].insert(a);
          }
        std::vector<char> used(k, 0);
        int cur = comp[tangle.front()];
        while (cur != -1 && !used[cur]) {
          used[cur] = 1;
          fc.cycle.push_back(pieces[cur]);
          int nxt = -1;
          for (int w : nbr[cur])
            if (!used[w]) {
              nxt = w;
              break;
            }
          cur = nxt;
        }
        for (int i = 0; i < k; ++i)
          if (!used[i]) fc.cycle.push_back(pieces[i]);
        out.push_back(std::move(fc));
      }
    }
  }
  return out;
}

std::string flype_report_json(const Diagram& d) {
  nlohmann::json j;
  j["crossings"] = d.crossings();
  nlohmann::json cuts = nlohmann::json::array();
  for (const auto& c : four_cuts(d))
    cuts.push_back({{"edges", c.edges}, {"inside", c.inside.size()}, {"outside", c.outside.size()}, {"kind", cut_kind_name(c.kind)}});
  j["cuts"] = cuts;
  nlohmann::json fl = nlohmann::json::array();
  for (const auto& f : flype_candidates(d))
    fl.push_back({{"flyper", f.flyper},
                  {"edges", f.cut.edges},
                  {"tangle", f.tangle},
                  {"rest", f.rest},
                  {"cycle", f.cycle},
                  {"nontrivial", f.nontrivial}});
  j["flype_candidates"] = fl;
  return j.dump(2);
}

}  // namespace sk
