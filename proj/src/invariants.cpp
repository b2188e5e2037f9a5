#include "straightknot/invariants.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <nlohmann/json.hpp>
#include <numeric>
#include <queue>

#include "straightknot/error.hpp"
#include "straightknot/transfer.hpp"

namespace sk {

namespace {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
};

Laurent loop_value() { return Laurent(-2, {-1, 0, 0, 0, -1}); }

std::vector<Laurent> loop_powers(int k) {
  std::vector<Laurent> out{Laurent::constant(1)};
  Laurent d = loop_value();
  for (int i = 1; i <= k; ++i) out.push_back(out.back() * d);
  return out;
}

}  // namespace

Laurent kauffman_bracket(const Diagram& d, int max_crossings) {
  const int n = d.crossings();
  if (n == 0) return Laurent::constant(1);
  if (n > max_crossings) throw Error(ErrorKind::BudgetExceeded, "state sum limited to " + std::to_string(max_crossings) + " crossings");
  const int e = 2 * n;
  // counts[alpha - beta + n][loops]
  std::vector<std::vector<int64_t>> counts(2 * n + 1, std::vector<int64_t>(e + 1, 0));
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    Dsu u(e);
    int comps = e, alpha = 0;
    for (int c = 0; c < n; ++c) {
      const auto& x = d.pd[c];
      if ((mask >> c) & 1) {
        comps -= u.unite(x[0] - 1, x[3] - 1);
        comps -= u.unite(x[1] - 1, x[2] - 1);
      } else {
        ++alpha;
        comps -= u.unite(x[0] - 1, x[1] - 1);
        comps -= u.unite(x[2] - 1, x[3] - 1);
      }
    }
    ++counts[alpha - (n - alpha) + n][comps];
  }
  auto dp = loop_powers(e);
  Laurent out;
  for (int k = 0; k <= 2 * n; ++k)
    for (int l = 1; l <= e; ++l)
      if (counts[k][l]) out += (dp[l - 1] * Laurent::constant(counts[k][l])).shifted(k - n);
  return out;
}

Laurent bracket(const Diagram& d) {
  const int n = d.crossings();
  if (n == 0) return Laurent::constant(1);
  std::vector<char> done(n, 0), open_flag(2 * n + 1, 0);
  std::vector<int> open;
  // state: partner index of each open edge, in the order of `open`
  std::map<std::vector<uint8_t>, Laurent> states;
  states[{}] = Laurent::constant(1);
  const Laurent dv = loop_value();
  for (int step = 0; step < n; ++step) {
    int best = -1, best_score = -1;
    for (int c = 0; c < n; ++c) {
      if (done[c]) continue;
      int score = 0;
      for (int l : d.pd[c]) score += open_flag[l];
      if (score > best_score) best = c, best_score = score;
    }
    const auto& x = d.pd[best];
    done[best] = 1;
    std::vector<int> next_open;
    for (int l : open)
      if (std::find(x.begin(), x.end(), l) == x.end()) next_open.push_back(l);
    for (int l : x)
      if (!open_flag[l] && std::count(x.begin(), x.end(), l) == 1) next_open.push_back(l);
    std::sort(next_open.begin(), next_open.end());
    if (next_open.size() > 250) throw Error(ErrorKind::BudgetExceeded, "contraction frontier too wide");

    // local nodes: open edges first, then crossing slots
    const int m = static_cast<int>(open.size());
    std::map<std::vector<uint8_t>, Laurent> out;
    const bool last = step == n - 1;
    for (const auto& [key, val] : states) {
      for (int s = 0; s < 2; ++s) {
        Dsu u(m + 4);
        for (int i = 0; i < m; ++i) u.unite(i, key[i]);
        auto node = [&](int slot) {
          int l = x[slot];
          if (open_flag[l]) return static_cast<int>(std::lower_bound(open.begin(), open.end(), l) - open.begin());
          return m + slot;
        };
        // identical labels on one crossing (a kink) are one edge
        for (int a = 0; a < 4; ++a)
          for (int b = a + 1; b < 4; ++b)
            if (x[a] == x[b]) u.unite(node(a), node(b));
        if (s == 0) {
          u.unite(node(0), node(1));
          u.unite(node(2), node(3));
        } else {
          u.unite(node(0), node(3));
          u.unite(node(1), node(2));
        }
        std::vector<int> ends(next_open.size());
        std::vector<char> root_open(m + 4, 0);
        for (int i = 0; i < static_cast<int>(next_open.size()); ++i) {
          int l = next_open[i];
          int nd;
          if (open_flag[l]) {
            nd = static_cast<int>(std::lower_bound(open.begin(), open.end(), l) - open.begin());
          } else {
            int slot = static_cast<int>(std::find(x.begin(), x.end(), l) - x.begin());
            nd = m + slot;
          }
          ends[i] = u.find(nd);
          root_open[ends[i]] = 1;
        }
        std::vector<uint8_t> nk(next_open.size());
        std::map<int, int> first;
        for (int i = 0; i < static_cast<int>(ends.size()); ++i) {
          auto it = first.find(ends[i]);
          if (it == first.end()) {
            first[ends[i]] = i;
          } else {
            nk[i] = static_cast<uint8_t>(it->second);
            nk[it->second] = static_cast<uint8_t>(i);
          }
        }
        int loops = 0;
        std::vector<char> seen(m + 4, 0);
        for (int i = 0; i < m + 4; ++i) {
          if (i >= m && open_flag[x[i - m]]) continue;
          int r = u.find(i);
          if (!root_open[r] && !seen[r]) seen[r] = 1, ++loops;
        }
        if (last) --loops;
        Laurent term = val.shifted(s == 0 ? 1 : -1);
        for (int k = 0; k < loops; ++k) term *= dv;
        auto it = out.find(nk);
        if (it == out.end())
          out.emplace(std::move(nk), std::move(term));
        else
          it->second += term;
      }
    }
    states = std::move(out);
    for (int l : x) open_flag[l] = 0;
    for (int l : next_open) open_flag[l] = 1;
    open = std::move(next_open);
  }
  return states.begin()->second;
}

Laurent bracket_transfer(const StraightCode& code) {
  validate_straight(code);
  if (code.n == 0) return Laurent::constant(1);
  TransferPlan plan = make_plan(code.shadow());
  const Laurent dv = loop_value();
  std::vector<Laurent> cur{Laurent::constant(1)};
  for (int p = 0; p < code.n; ++p) {
    const auto& L = plan.layers[p];
    std::vector<Laurent> nxt(L.targets);
    int ka = a_smoothing(code.overs[p]);
    for (size_t i = 0; i < cur.size(); ++i) {
      if (cur[i].is_zero()) continue;
      for (int k = 0; k < 2; ++k) {
        Laurent x = cur[i].shifted(k == ka ? 1 : -1);
        if (L.loop[k][i]) x *= dv;
        nxt[L.to[k][i]] += x;
      }
    }
    cur = std::move(nxt);
  }
  return cur[0];
}

Laurent jones_from_bracket(const Laurent& br, int writhe) {
  Laurent f = br.shifted(-3 * writhe);
  if (writhe % 2) f = -f;
  Laurent out;
  for (int e = f.min_exp(); e <= f.max_exp(); ++e) {
    int64_t c = f.coeff(e);
    if (!c) continue;
    if (e % 4) throw Error(ErrorKind::DomainError, "bracket exponents not in a single class mod 4");
    out += Laurent::monomial(c, -e / 4);
  }
  return out;
}

Laurent jones(const Diagram& d) { return jones_from_bracket(bracket(d), d.writhe()); }

namespace {

Laurent bareiss_det(std::vector<std::vector<Laurent>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return Laurent::constant(1);
  Laurent prev = Laurent::constant(1);
  int sgn = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k].is_zero()) {
      int r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return Laurent();
      std::swap(m[k], m[r]);
      sgn = -sgn;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_div(prev);
      m[i][k] = Laurent();
    }
    prev = m[k][k];
  }
  return sgn > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace

Laurent normalize_alexander(const Laurent& p) {
  if (p.is_zero()) throw Error(ErrorKind::DomainError, "zero Alexander polynomial");
  int s = p.min_exp() + p.max_exp();
  if (s % 2) throw Error(ErrorKind::DomainError, "Alexander polynomial of odd span");
  Laurent q = p.shifted(-s / 2);
  if (q.eval_pm1(1) < 0) q = -q;
  return q;
}

Laurent alexander(const Diagram& d) {
  const int n = d.crossings();
  if (n <= 1) return Laurent::constant(1);
  const int e = 2 * n;
  int p0 = 0;
  while (d.pass_over[p0]) ++p0;
  p0 = (p0 + 1) % e;
  std::vector<int> over_arc(n), in_arc(n), out_arc(n);
  int cur = 0;
  for (int s = 0; s < e; ++s) {
    int p = (p0 + s) % e;
    int c = d.pass_crossing[p];
    if (d.pass_over[p]) {
      over_arc[c] = cur;
    } else {
      in_arc[c] = cur;
      cur = (cur + 1) % n;
      out_arc[c] = cur;
    }
  }
  const Laurent t = Laurent::monomial(1, 1), one = Laurent::constant(1);
  std::vector<std::vector<Laurent>> m(n, std::vector<Laurent>(n));
  for (int c = 0; c < n; ++c) {
    auto& row = m[c];
    row[over_arc[c]] += one - t;
    if (d.sign[c] > 0) {
      row[in_arc[c]] += t;
      row[out_arc[c]] += -one;
    } else {
      row[in_arc[c]] += -one;
      row[out_arc[c]] += t;
    }
  }
  m.pop_back();
  for (auto& r : m) r.pop_back();
  return normalize_alexander(bareiss_det(std::move(m)));
}

namespace {

struct Checkerboard {
  Faces f;
  std::vector<int> color;
};

Checkerboard checkerboard(const Diagram& d) {
  Checkerboard cb{faces(d), {}};
  cb.color.assign(cb.f.count, -1);
  std::vector<std::vector<int>> adj(cb.f.count);
  for (const auto& cf : cb.f.corner_face)
    for (int k = 0; k < 4; ++k) {
      adj[cf[k]].push_back(cf[(k + 1) % 4]);
      adj[cf[(k + 1) % 4]].push_back(cf[k]);
    }
  std::queue<int> q;
  cb.color[0] = 0;
  q.push(0);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj[u]) {
      if (cb.color[v] == -1) {
        cb.color[v] = 1 - cb.color[u];
        q.push(v);
      } else if (cb.color[v] == cb.color[u]) {
        throw Error(ErrorKind::DomainError, "faces are not two-colorable");
      }
    }
  }
  return cb;
}

// shaded corner parity at c: 0 when corners 0,2 are shaded
int shaded_parity(const Checkerboard& cb, int c, int shade) { return cb.color[cb.f.corner_face[c][0]] == shade ? 0 : 1; }

// +1 when the shaded corners are the B-regions (corners 0, 2)
int eta(int q) { return q == 0 ? 1 : -1; }

std::vector<int> shaded_index(const Checkerboard& cb, int shade) {
  std::vector<int> idx(cb.f.count, -1);
  int m = 0;
  for (int i = 0; i < cb.f.count; ++i)
    if (cb.color[i] == shade) idx[i] = m++;
  return idx;
}

std::vector<std::vector<int64_t>> full_goeritz(const Diagram& d, const Checkerboard& cb, int shade) {
  auto idx = shaded_index(cb, shade);
  int m = *std::max_element(idx.begin(), idx.end()) + 1;
  std::vector<std::vector<int64_t>> g(m, std::vector<int64_t>(m, 0));
  for (int c = 0; c < d.crossings(); ++c) {
    int q = shaded_parity(cb, c, shade);
    int a = idx[cb.f.corner_face[c][q]], b = idx[cb.f.corner_face[c][q + 2]];
    if (a == b) continue;
    g[a][b] -= eta(q);
    g[b][a] -= eta(q);
    g[a][a] += eta(q);
    g[b][b] += eta(q);
  }
  return g;
}

std::vector<std::vector<Rational>> to_rational(const std::vector<std::vector<int64_t>>& m) {
  std::vector<std::vector<Rational>> r(m.size());
  for (size_t i = 0; i < m.size(); ++i)
    for (auto v : m[i]) r[i].emplace_back(v);
  return r;
}

}  // namespace

std::vector<std::vector<int64_t>> goeritz_matrix(const Diagram& d, int shade) {
  if (shade != 0 && shade != 1) throw Error(ErrorKind::DomainError, "shade must be 0 or 1");
  if (d.crossings() == 0) return {};
  auto cb = checkerboard(d);
  auto g = full_goeritz(d, cb, shade);
  g.erase(g.begin());
  for (auto& r : g) r.erase(r.begin());
  return g;
}

int64_t matrix_determinant(const std::vector<std::vector<int64_t>>& m0) {
  auto m = to_rational(m0);
  const int n = static_cast<int>(m.size());
  Rational det = 1;
  for (int k = 0; k < n; ++k) {
    int r = k;
    while (r < n && m[r][k] == 0) ++r;
    if (r == n) return 0;
    if (r != k) std::swap(m[r], m[k]), det = -det;
    det *= m[k][k];
    for (int i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      Rational f = m[i][k] / m[k][k];
      for (int j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  BigInt v = boost::multiprecision::numerator(det);
  if (v > BigInt(std::numeric_limits<int64_t>::max()) || v < BigInt(std::numeric_limits<int64_t>::min()))
    throw Error(ErrorKind::Overflow, "determinant exceeds 64 bits");
  return static_cast<int64_t>(v);
}

int matrix_signature(const std::vector<std::vector<int64_t>>& m0) {
  auto m = to_rational(m0);
  int n = static_cast<int>(m.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m[i][j] != m[j][i]) throw Error(ErrorKind::DomainError, "matrix is not symmetric");
  int sig = 0;
  // congruence diagonalization; rows/cols [k, n) are still active
  for (int k = 0; k < n; ++k) {
    int p = -1;
    for (int i = k; i < n; ++i)
      if (m[i][i] != 0) {
        p = i;
        break;
      }
    if (p == -1) {
      int a = -1, b = -1;
      for (int i = k; i < n && a < 0; ++i)
        for (int j = i + 1; j < n; ++j)
          if (m[i][j] != 0) {
            a = i, b = j;
            break;
          }
      if (a < 0) break;
      // row/col a += row/col b makes m[a][a] = 2 m[a][b] != 0
      for (int j = 0; j < n; ++j) m[a][j] += m[b][j];
      for (int i = 0; i < n; ++i) m[i][a] += m[i][b];
      p = a;
    }
    std::swap(m[p], m[k]);
    for (auto& r : m) std::swap(r[p], r[k]);
    const Rational piv = m[k][k];
    sig += piv > 0 ? 1 : -1;
    for (int i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      Rational f = m[i][k] / piv;
      for (int j = k; j < n; ++j) m[i][j] -= f * m[k][j];
      for (int j = k; j < n; ++j) m[j][i] = m[i][j];
    }
  }
  return sig;
}

int64_t determinant_alexander(const Diagram& d) {
  int64_t v = alexander(d).eval_pm1(-1);
  return v < 0 ? -v : v;
}

int64_t determinant_goeritz(const Diagram& d) {
  int64_t v = matrix_determinant(goeritz_matrix(d, 0));
  return v < 0 ? -v : v;
}

int64_t determinant(const Diagram& d) {
  int64_t a = determinant_alexander(d), g = determinant_goeritz(d);
  if (a != g) throw Error(ErrorKind::DomainError, "determinant mismatch: " + std::to_string(a) + " vs " + std::to_string(g));
  return a;
}

int signature(const Diagram& d, int shade) {
  if (d.crossings() == 0) return 0;
  auto cb = checkerboard(d);
  int mu = 0;
  for (int c = 0; c < d.crossings(); ++c) {
    int q = shaded_parity(cb, c, shade);
    int over_in = d.sign[c] > 0 ? 3 : 1;
    auto incoming = [&](int slot) { return slot == 0 || slot == over_in; };
    if (incoming(q) != incoming(q + 1)) mu += eta(q);
  }
  return matrix_signature(goeritz_matrix(d, shade)) - mu;
}

Laurent jones_canonical(const Laurent& v) {
  Laurent w = v.substitute(-1);
  return std::min(v, w);
}

Fingerprint fingerprint(const Diagram& d) {
  Fingerprint f;
  f.determinant = determinant(d);
  f.alexander = alexander(d);
  f.jones = jones_canonical(jones(d));
  int s = signature(d);
  f.signature_abs = s < 0 ? -s : s;
  return f;
}

std::string Fingerprint::serialize() const {
  nlohmann::json j;
  j["det"] = determinant;
  j["alexander"] = alexander.serialize();
  j["jones"] = jones.serialize();
  j["sig"] = signature_abs;
  return j.dump();
}

Fingerprint Fingerprint::parse(const std::string& s) {
  try {
    auto j = nlohmann::json::parse(s);
    Fingerprint f;
    f.determinant = j.at("det").get<int64_t>();
    f.alexander = Laurent::parse(j.at("alexander").get<std::string>());
    f.jones = Laurent::parse(j.at("jones").get<std::string>());
    f.signature_abs = j.at("sig").get<int>();
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("fingerprint: ") + e.what());
  }
}

std::strong_ordering Fingerprint::operator<=>(const Fingerprint& o) const {
  if (auto c = determinant <=> o.determinant; c != 0) return c;
  if (auto c = alexander <=> o.alexander; c != 0) return c;
  if (auto c = jones <=> o.jones; c != 0) return c;
  return signature_abs <=> o.signature_abs;
}

}  // namespace sk
