#include "straightknot/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "straightknot/error.hpp"

namespace sk {

int Diagram::writhe() const { return std::accumulate(sign.begin(), sign.end(), 0); }

namespace {

struct Occ {
  int c, s;
  bool operator==(const Occ&) const = default;
};

// twin dart of every (crossing, slot)
std::vector<Occ> twin_table(const PdCode& pd) {
  std::map<int, std::vector<Occ>> at;
  for (int c = 0; c < static_cast<int>(pd.size()); ++c)
    for (int s = 0; s < 4; ++s) at[pd[c][s]].push_back({c, s});
  std::vector<Occ> tw(4 * pd.size());
  for (auto& [lab, v] : at) {
    tw[4 * v[0].c + v[0].s] = v[1];
    tw[4 * v[1].c + v[1].s] = v[0];
  }
  return tw;
}

}  // namespace

Diagram validate_pd(const PdCode& raw) {
  Diagram d;
  const int n = static_cast<int>(raw.size());
  if (n == 0) return d;

  std::map<int, int> count;
  for (auto& x : raw)
    for (int l : x) ++count[l];
  std::string bad;
  for (auto& [l, k] : count)
    if (k != 2) bad += (bad.empty() ? "" : ",") + std::to_string(l);
  if (!bad.empty()) throw Error(ErrorKind::EdgeDegree, "labels not appearing exactly twice: " + bad);

  auto tw = twin_table(raw);
  std::vector<Occ> walk;
  Occ cur{0, 0};
  do {
    walk.push_back(cur);
    if (static_cast<int>(walk.size()) > 2 * n) break;
    cur = tw[4 * cur.c + (cur.s + 2) % 4];
  } while (!(cur == Occ{0, 0}));
  if (static_cast<int>(walk.size()) != 2 * n) throw Error(ErrorKind::MultiComponent, "closure has more than one component");

  std::vector<std::array<int, 2>> seen(n, {-1, -1});
  for (int j = 0; j < 2 * n; ++j) {
    auto [c, s] = walk[j];
    if (s == 2) throw Error(ErrorKind::BadOrientation, "under strand of crossing " + std::to_string(c) + " runs against the orientation");
    int k = s % 2;
    if (seen[c][k] != -1) throw Error(ErrorKind::BadOrientation, "crossing " + std::to_string(c) + " traversed twice on one strand");
    seen[c][k] = j;
  }

  int start = 0;
  for (int j = 1; j < 2 * n; ++j)
    if (raw[walk[j].c][walk[j].s] < raw[walk[start].c][walk[start].s]) start = j;

  d.pd.assign(n, {0, 0, 0, 0});
  d.sign.assign(n, 0);
  d.crossing_pass.assign(n, {0, 0});
  d.pass_crossing.assign(2 * n, 0);
  d.pass_over.assign(2 * n, 0);
  d.pass_slot.assign(2 * n, 0);
  for (int k = 0; k < 2 * n; ++k) {
    auto [c, s] = walk[(start + k) % (2 * n)];
    d.pd[c][s] = k + 1;
    d.pd[c][(s + 2) % 4] = (k + 1) % (2 * n) + 1;
    d.pass_crossing[k] = c;
    d.pass_over[k] = s % 2;
    d.pass_slot[k] = static_cast<char>(s);
    d.crossing_pass[c][s % 2] = k;
    if (s % 2) d.sign[c] = s == 3 ? 1 : -1;
  }

  std::vector<int> word(d.pass_crossing);
  if (faces(d).count != n + 2) throw Error(ErrorKind::NonPlanar, "face count violates V-E+F=2");
  if (!gauss_word_realizable(word)) throw Error(ErrorKind::NonPlanar, "Gauss word fails the interlacement criterion");
  return d;
}

Faces faces(const Diagram& d) {
  Faces f;
  const int n = d.crossings();
  if (n == 0) {
    f.count = 2;
    f.corners.resize(2);
    return f;
  }
  auto tw = twin_table(d.pd);
  std::vector<int> orbit(4 * n, -1);
  f.corner_face.assign(n, {-1, -1, -1, -1});
  for (int h = 0; h < 4 * n; ++h) {
    if (orbit[h] != -1) continue;
    int id = f.count++;
    f.corners.emplace_back();
    int x = h;
    while (orbit[x] == -1) {
      orbit[x] = id;
      int c = x / 4, s = x % 4;
      f.corner_face[c][(s + 3) % 4] = id;
      f.corners[id].push_back({c, (s + 3) % 4});
      Occ t = tw[x];
      x = 4 * t.c + (t.s + 1) % 4;
    }
  }
  return f;
}

bool gauss_word_realizable(const std::vector<int>& word) {
  if (word.empty()) return true;
  int n = 0;
  for (int x : word) n = std::max(n, x + 1);
  std::vector<int> first(n, -1), second(n, -1);
  for (int i = 0; i < static_cast<int>(word.size()); ++i) (first[word[i]] == -1 ? first : second)[word[i]] = i;
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v || first[u] < 0 || first[v] < 0) continue;
      bool a = first[u] < first[v] && first[v] < second[u];
      bool b = first[u] < second[v] && second[v] < second[u];
      adj[u][v] = a != b;
    }
  std::vector<int> deg(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) deg[u] += adj[u][v];
  for (int u = 0; u < n; ++u)
    if (deg[u] % 2) return false;
  auto common = [&](int u, int v) {
    int k = 0;
    for (int w = 0; w < n; ++w) k += adj[u][w] && adj[v][w];
    return k;
  };
  std::vector<std::vector<char>> cut(n, std::vector<char>(n, 0));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      int k = common(u, v);
      if (!adj[u][v] && k % 2) return false;
      if (adj[u][v]) cut[u][v] = cut[v][u] = (k % 2 == 0);
    }
  // the "even" interlaced pairs must form a cocycle of the interlacement graph
  std::vector<int> col(n, -1);
  for (int s = 0; s < n; ++s) {
    if (col[s] != -1) continue;
    col[s] = 0;
    std::vector<int> st{s};
    while (!st.empty()) {
      int u = st.back();
      st.pop_back();
      for (int v = 0; v < n; ++v) {
        if (!adj[u][v]) continue;
        int want = col[u] ^ cut[u][v];
        if (col[v] == -1) {
          col[v] = want;
          st.push_back(v);
        } else if (col[v] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

GaussCode to_gauss(const Diagram& d) {
  GaussCode g;
  for (int p = 0; p < 2 * d.crossings(); ++p) {
    int c = d.pass_crossing[p];
    g.push_back({c + 1, d.pass_over[p] != 0, d.sign[c]});
  }
  return g;
}

Diagram from_gauss(const GaussCode& g) {
  const int len = static_cast<int>(g.size());
  if (len % 2) throw Error(ErrorKind::InvalidGauss, "odd length");
  std::map<int, std::vector<int>> at;
  std::vector<int> order;
  for (int i = 0; i < len; ++i) {
    if (!at.count(g[i].crossing)) order.push_back(g[i].crossing);
    at[g[i].crossing].push_back(i);
  }
  PdCode pd;
  const int m = len;
  auto in = [&](int p) { return p + 1; };
  auto out = [&](int p) { return (p + 1) % m + 1; };
  for (int id : order) {
    auto& v = at[id];
    if (v.size() != 2) throw Error(ErrorKind::InvalidGauss, "crossing " + std::to_string(id) + " not visited exactly twice");
    const auto& e0 = g[v[0]];
    const auto& e1 = g[v[1]];
    if (e0.over == e1.over) throw Error(ErrorKind::InvalidGauss, "crossing " + std::to_string(id) + " needs one over and one under pass");
    if (e0.sign != e1.sign || (e0.sign != 1 && e0.sign != -1))
      throw Error(ErrorKind::InvalidGauss, "crossing " + std::to_string(id) + " has inconsistent sign");
    int pu = e0.over ? v[1] : v[0];
    int po = e0.over ? v[0] : v[1];
    if (e0.sign > 0)
      pd.push_back({in(pu), out(po), out(pu), in(po)});
    else
      pd.push_back({in(pu), in(po), out(pu), out(po)});
  }
  return validate_pd(pd);
}

Diagram mirror(const Diagram& d) {
  PdCode pd;
  for (int c = 0; c < d.crossings(); ++c) {
    auto x = d.pd[c];
    if (d.sign[c] > 0)
      pd.push_back({x[3], x[0], x[1], x[2]});
    else
      pd.push_back({x[1], x[2], x[3], x[0]});
  }
  return validate_pd(pd);
}

bool is_alternating(const Diagram& d) {
  const int m = d.edges();
  for (int p = 0; p < m; ++p)
    if (d.pass_over[p] == d.pass_over[(p + 1) % m]) return false;
  return true;
}

bool is_nugatory(const Diagram& d, int c) {
  auto f = faces(d);
  return f.corner_face[c][0] == f.corner_face[c][2] || f.corner_face[c][1] == f.corner_face[c][3];
}

bool is_reduced(const Diagram& d) {
  auto f = faces(d);
  for (int c = 0; c < d.crossings(); ++c)
    if (f.corner_face[c][0] == f.corner_face[c][2] || f.corner_face[c][1] == f.corner_face[c][3]) return false;
  return true;
}

TwistRegion singleton_region(const Diagram& d, int c, int axis) {
  TwistRegion r;
  r.crossings = {c};
  int k = axis % 2;
  r.first_pair = {d.pd[c][k], d.pd[c][k + 1]};
  r.last_pair = {d.pd[c][k + 2], d.pd[c][(k + 3) % 4]};
  return r;
}

std::vector<TwistRegion> twist_regions(const Diagram& d) {
  const int n = d.crossings();
  std::vector<TwistRegion> out;
  if (n == 0) return out;
  auto f = faces(d);
  // bigon corners at each crossing: corner -> neighbour crossing
  std::vector<std::array<int, 4>> nb(n, {-1, -1, -1, -1});
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto& cs : f.corners) {
    if (cs.size() != 2 || cs[0].first == cs[1].first) continue;
    nb[cs[0].first][cs[0].second] = cs[1].first;
    nb[cs[1].first][cs[1].second] = cs[0].first;
    parent[find(cs[0].first)] = find(cs[1].first);
  }
  std::map<int, std::vector<int>> comp;
  for (int c = 0; c < n; ++c) comp[find(c)].push_back(c);
  std::vector<std::vector<int>> groups;
  for (auto& [r, v] : comp) groups.push_back(v);
  std::sort(groups.begin(), groups.end());

  auto degree = [&](int c) {
    int k = 0;
    for (int j = 0; j < 4; ++j) k += nb[c][j] != -1;
    return k;
  };
  for (auto& g : groups) {
    if (g.size() == 1) {
      out.push_back(singleton_region(d, g[0], 0));
      continue;
    }
    TwistRegion r;
    int start = -1;
    for (int c : g)
      if (degree(c) == 1) {
        start = c;
        break;
      }
    r.cyclic = start == -1;
    if (start == -1) start = g[0];
    // corner at start that leads into the chain
    int k0 = -1;
    for (int j = 0; j < 4 && k0 == -1; ++j)
      if (nb[start][j] != -1) k0 = j;
    r.first_pair = {d.pd[start][(k0 + 2) % 4], d.pd[start][(k0 + 3) % 4]};
    std::vector<char> used(n, 0);
    int cur = start, corner = k0;
    while (true) {
      r.crossings.push_back(cur);
      used[cur] = 1;
      int nxt = nb[cur][corner];
      if (nxt == -1 || used[nxt]) break;
      // the corner at nxt facing cur, then continue through the opposite corner
      int back = -1;
      for (int j = 0; j < 4; ++j)
        if (nb[nxt][j] == cur) back = j;
      cur = nxt;
      corner = (back + 2) % 4;
      if (nb[cur][corner] == -1) {
        r.crossings.push_back(cur);
        used[cur] = 1;
        r.last_pair = {d.pd[cur][(back + 2) % 4], d.pd[cur][(back + 3) % 4]};
        break;
      }
    }
    if (r.cyclic) r.last_pair = {d.pd[r.crossings.back()][(corner + 0) % 4], d.pd[r.crossings.back()][(corner + 1) % 4]};
    // anything the walk missed (degenerate multi-bigon clusters) is appended
    for (int c : g)
      if (!used[c]) r.crossings.push_back(c);
    out.push_back(r);
  }
  return out;
}

std::optional<std::pair<int, int>> straight_decomposable(const Diagram& d) {
  const int n = d.crossings();
  if (n == 0) return std::make_pair(0, 0);
  const int m = 2 * n;
  std::vector<int> mark(n, -1);
  for (int s = 0; s < m; ++s) {
    bool ok = true;
    for (int j = 0; j < n && ok; ++j) {
      int c = d.pass_crossing[(s + j) % m];
      if (mark[c] == s) ok = false;
      mark[c] = s;
    }
    if (ok) return std::make_pair(s + 1, (s + n) % m + 1);
  }
  return std::nullopt;
}

int max_simple_arc(const Diagram& d) {
  const int n = d.crossings();
  const int m = 2 * n;
  int best = 0;
  std::vector<int> mark(n, -1);
  for (int s = 0; s < m; ++s) {
    int len = 0;
    while (len < n) {
      int c = d.pass_crossing[(s + len) % m];
      if (mark[c] == s) break;
      mark[c] = s;
      ++len;
    }
    best = std::max(best, len);
  }
  return best;
}

namespace {

GaussCode relabel(const GaussCode& g) {
  std::map<int, int> id;
  GaussCode r;
  for (auto e : g) {
    auto it = id.find(e.crossing);
    if (it == id.end()) it = id.emplace(e.crossing, static_cast<int>(id.size()) + 1).first;
    e.crossing = it->second;
    r.push_back(e);
  }
  return r;
}

bool gauss_less(const GaussCode& a, const GaussCode& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [](const GaussEntry& x, const GaussEntry& y) {
    return std::tie(x.crossing, x.over, x.sign) < std::tie(y.crossing, y.over, y.sign);
  });
}

}  // namespace

PdCode canonical_pd(const Diagram& d) {
  if (d.crossings() == 0) return {};
  GaussCode g = to_gauss(d);
  GaussCode best;
  bool have = false;
  for (int dir = 0; dir < 2; ++dir) {
    GaussCode h = g;
    if (dir) std::reverse(h.begin(), h.end());
    for (size_t s = 0; s < h.size(); ++s) {
      GaussCode r(h.begin() + s, h.end());
      r.insert(r.end(), h.begin(), h.begin() + s);
      r = relabel(r);
      if (!have || gauss_less(r, best)) {
        best = r;
        have = true;
      }
    }
  }
  return from_gauss(best).pd;
}

bool same_diagram(const Diagram& a, const Diagram& b) { return canonical_pd(a) == canonical_pd(b); }

std::string pd_to_string(const PdCode& pd) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < pd.size(); ++i) {
    os << (i ? "," : "") << "[" << pd[i][0] << "," << pd[i][1] << "," << pd[i][2] << "," << pd[i][3] << "]";
  }
  os << "]";
  return os.str();
}

PdCode parse_pd(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw Error(ErrorKind::Parse, std::string("PD is not valid JSON: ") + e.what());
  }
  if (!j.is_array()) throw Error(ErrorKind::Parse, "PD must be a list of 4-tuples");
  PdCode pd;
  for (auto& x : j) {
    if (!x.is_array() || x.size() != 4) throw Error(ErrorKind::Parse, "crossing is not a 4-tuple: " + x.dump());
    std::array<int, 4> t{};
    for (int k = 0; k < 4; ++k) {
      if (!x[k].is_number_integer()) throw Error(ErrorKind::Parse, "edge label is not an integer: " + x.dump());
      t[k] = x[k].get<int>();
    }
    pd.push_back(t);
  }
  return pd;
}

std::string gauss_to_string(const GaussCode& g) {
  std::ostringstream os;
  for (size_t i = 0; i < g.size(); ++i)
    os << (i ? "," : "") << (g[i].over ? 'O' : 'U') << g[i].crossing << (g[i].sign > 0 ? '+' : '-');
  return os.str();
}

GaussCode parse_gauss(const std::string& text) {
  GaussCode g;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char c) { return std::isspace(c); }), tok.end());
    if (tok.empty() && g.empty() && ss.eof()) break;
    if (tok.size() < 3 || (tok[0] != 'O' && tok[0] != 'U') || (tok.back() != '+' && tok.back() != '-'))
      throw Error(ErrorKind::Parse, "bad Gauss token '" + tok + "'");
    std::string num = tok.substr(1, tok.size() - 2);
    if (num.empty() || !std::all_of(num.begin(), num.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw Error(ErrorKind::Parse, "bad Gauss token '" + tok + "'");
    g.push_back({std::stoi(num), tok[0] == 'O', tok.back() == '+' ? 1 : -1});
  }
  return g;
}

}  // namespace sk
