#include "straightknot/transfer.hpp"

#include <array>
#include <numeric>
#include <unordered_map>

#include "straightknot/error.hpp"

namespace sk {

namespace {

std::vector<int> decode_state(uint64_t code, int w) {
  std::vector<int> partner(w, -1), st;
  for (int i = 0; i < w; ++i) {
    if ((code >> i) & 1) {
      st.push_back(i);
    } else {
      if (st.empty()) throw Error(ErrorKind::DomainError, "unbalanced transfer state");
      partner[i] = st.back();
      partner[st.back()] = i;
      st.pop_back();
    }
  }
  if (!st.empty()) throw Error(ErrorKind::DomainError, "unbalanced transfer state");
  return partner;
}

uint64_t encode_state(const std::vector<int>& partner) {
  uint64_t code = 0;
  for (int i = 0; i < static_cast<int>(partner.size()); ++i)
    if (partner[i] > i) code |= uint64_t{1} << i;
  return code;
}

struct Dsu {
  std::array<int, 80> p;
  explicit Dsu(int n) { std::iota(p.begin(), p.begin() + n, 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

// apply one smoothing at a crossing whose left ends occupy [j, j+a)
std::pair<uint64_t, int> step(const std::vector<int>& partner, int j, bool nl, bool sl, int smoothing) {
  const int w = static_cast<int>(partner.size());
  const int a = 1 + nl + sl;
  int r = 0;
  int N = nl ? j : w + r++;
  int W = j + nl;
  int E = w + r++;
  int S = sl ? j + nl + 1 : w + r++;
  const int b = r;
  const int total = w + b;
  if (total > 80) throw Error(ErrorKind::BudgetExceeded, "transfer cut too wide");
  Dsu u(total);
  for (int i = 0; i < w; ++i) u.unite(i, partner[i]);
  if (smoothing == 0) {
    u.unite(N, W);
    u.unite(S, E);
  } else {
    u.unite(N, E);
    u.unite(S, W);
  }
  std::vector<int> order;
  order.reserve(w - a + b);
  for (int i = 0; i < j; ++i) order.push_back(i);
  for (int i = 0; i < b; ++i) order.push_back(w + i);
  for (int i = j + a; i < w; ++i) order.push_back(i);
  std::vector<int> first(total, -1), np(order.size(), -1);
  std::vector<char> has_end(total, 0);
  for (int k = 0; k < static_cast<int>(order.size()); ++k) {
    int root = u.find(order[k]);
    has_end[root] = 1;
    if (first[root] == -1) {
      first[root] = k;
    } else {
      np[k] = first[root];
      np[first[root]] = k;
    }
  }
  int loops = 0;
  std::vector<char> counted(total, 0);
  for (int i = j; i < j + a; ++i) {
    int root = u.find(i);
    if (!has_end[root] && !counted[root]) {
      counted[root] = 1;
      ++loops;
    }
  }
  return {encode_state(np), loops};
}

}  // namespace

TransferPlan make_plan(const ShadowCode& s0) {
  const ShadowCode& s = s0;
  validate_shadow(s);
  const int n = s.n;
  TransferPlan plan;
  plan.n = n;
  plan.down.assign(n, 0);
  std::vector<char> from_left_up(n + 1, 0), from_left_lo(n + 1, 0);
  auto mark = [&](Side sd, int p, bool left) { (sd == Side::U ? from_left_up : from_left_lo)[p] = left; };
  mark(s.sides[0], s.visits[0], false);
  mark(s.sides[n], s.visits[n - 1], true);
  int wraps = 0;
  for (int i = 1; i < n; ++i) {
    int a = s.visits[i - 1], b = s.visits[i];
    if (s.sides[i] == s.sides[i + 1]) {
      ++wraps;
      mark(s.sides[i], a, true);
      mark(opp(s.sides[i]), b, true);
    } else {
      mark(s.sides[i], a, b < a);
      mark(s.sides[i], b, a < b);
    }
  }
  for (int i = 1; i <= n; ++i) plan.down[s.visits[i - 1] - 1] = s.sides[i] == Side::D;

  int w = 2 * wraps + 2;
  uint64_t init = 0;
  for (int k = 0; k < wraps; ++k) init |= uint64_t{1} << k;
  init |= uint64_t{1} << wraps;
  int strand = wraps + (s.sides[n] == Side::U ? 1 : 0);
  plan.max_width = w;

  std::vector<uint64_t> states{init};
  for (int p = 1; p <= n; ++p) {
    bool nl = from_left_up[p], sl = from_left_lo[p];
    int j = strand - (nl ? 1 : 0);
    int nw = w - (1 + nl + sl) + (3 - nl - sl);
    if (nw > 63) throw Error(ErrorKind::BudgetExceeded, "transfer cut wider than 63");
    TransferPlan::Layer layer;
    std::unordered_map<uint64_t, uint32_t> index;
    std::vector<uint64_t> next;
    for (int k = 0; k < 2; ++k) {
      layer.to[k].resize(states.size());
      layer.loop[k].resize(states.size());
    }
    for (size_t i = 0; i < states.size(); ++i) {
      auto partner = decode_state(states[i], w);
      for (int k = 0; k < 2; ++k) {
        auto [code, loops] = step(partner, j, nl, sl, k);
        auto it = index.find(code);
        if (it == index.end()) {
          it = index.emplace(code, static_cast<uint32_t>(next.size())).first;
          next.push_back(code);
        }
        layer.to[k][i] = it->second;
        layer.loop[k][i] = static_cast<uint8_t>(loops);
      }
    }
    layer.targets = static_cast<uint32_t>(next.size());
    plan.layers.push_back(std::move(layer));
    states = std::move(next);
    w = nw;
    strand = strand + 1 - 2 * (nl ? 1 : 0);
    plan.max_width = std::max(plan.max_width, w);
  }
  if (w != 2 || states.size() != 1) throw Error(ErrorKind::DomainError, "sweep did not end at the right strand end");
  return plan;
}

uint64_t normalized_bracket_mod(const TransferPlan& plan, const std::vector<char>& overs, uint64_t a) {
  using M = ModP;
  uint64_t ai = M::inv(a);
  uint64_t d = M::neg(M::add(M::mul(a, a), M::mul(ai, ai)));
  std::vector<uint64_t> cur{1}, nxt;
  int writhe = 0;
  for (int p = 0; p < plan.n; ++p) {
    const auto& L = plan.layers[p];
    nxt.assign(L.targets, 0);
    int ka = a_smoothing(overs[p]);
    writhe += crossing_sign(plan.down[p], overs[p]);
    for (size_t i = 0; i < cur.size(); ++i) {
      uint64_t v = cur[i];
      if (!v) continue;
      for (int k = 0; k < 2; ++k) {
        uint64_t x = M::mul(v, k == ka ? a : ai);
        if (L.loop[k][i]) x = M::mul(x, d);
        nxt[L.to[k][i]] = M::add(nxt[L.to[k][i]], x);
      }
    }
    std::swap(cur, nxt);
  }
  uint64_t f = cur[0];
  int w3 = 3 * writhe;
  f = M::mul(f, w3 >= 0 ? M::pow(ai, w3) : M::pow(a, -w3));
  if (writhe % 2) f = M::neg(f);
  return f;
}

}  // namespace sk
