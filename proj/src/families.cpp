#include "straightknot/families.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "straightknot/error.hpp"
#include "straightknot/transfer.hpp"

namespace sk {

Diagram braid_closure(const BraidWord& w) {
  const int n = w.strands;
  if (n < 2) throw Error(ErrorKind::DomainError, "braid needs at least 2 strands");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (auto [i, e] : w.letters) {
    if (i < 1 || i >= n) throw Error(ErrorKind::DomainError, "generator index " + std::to_string(i) + " out of range");
    if (e == 0) throw Error(ErrorKind::DomainError, "zero exponent");
    if (e % 2) std::swap(perm[i - 1], perm[i]);
  }
  int len = 1;
  for (int j = perm[0]; j != 0; j = perm[j]) ++len;
  if (len != n) throw Error(ErrorKind::NotAKnot, "braid permutation is not an n-cycle");

  int next = 1;
  std::vector<int> init(n), cur(n);
  for (int j = 0; j < n; ++j) init[j] = cur[j] = next++;
  PdCode pd;
  for (auto [i, e] : w.letters) {
    for (int k = 0; k < std::abs(e); ++k) {
      int sw = cur[i - 1], se = cur[i];
      int nw = next++, ne = next++;
      if (e > 0)
        pd.push_back({se, ne, nw, sw});
      else
        pd.push_back({sw, se, ne, nw});
      cur[i - 1] = nw;
      cur[i] = ne;
    }
  }
  std::map<int, int> close;
  for (int j = 0; j < n; ++j) close[cur[j]] = init[j];
  for (auto& x : pd)
    for (int& l : x)
      if (auto it = close.find(l); it != close.end()) l = it->second;
  return validate_pd(pd);
}

BraidWord spiral_word(int n, int m, const std::vector<int>& eps) {
  if (n < 2 || m < 1) throw Error(ErrorKind::DomainError, "spiral needs n >= 2 and m >= 1");
  if (static_cast<int>(eps.size()) != n - 1) throw Error(ErrorKind::DomainError, "eps must have n-1 entries");
  BraidWord w{n, {}};
  for (int j = 0; j < m; ++j)
    for (int i = 1; i < n; ++i) w.letters.push_back({i, eps[i - 1]});
  return w;
}

Diagram spiral(int n, int m, const std::vector<int>& eps) {
  for (int e : eps)
    if (e != 1 && e != -1) throw Error(ErrorKind::DomainError, "spiral exponents must be +1 or -1");
  return braid_closure(spiral_word(n, m, eps));
}

Diagram weaving(int n, int m) {
  std::vector<int> eps(std::max(n - 1, 0));
  for (int i = 0; i < n - 1; ++i) eps[i] = i % 2 ? -1 : 1;
  return spiral(n, m, eps);
}

namespace {

std::pair<int, int> weaving_split(int n, int m) {
  if (n < 3 || m < n + 1 || std::gcd(n, m) != 1)
    throw Error(ErrorKind::DomainError, "needs n >= 3, m >= n+1 and gcd(n,m) = 1");
  return {m / n, m % n};
}

}  // namespace

int weaving_bound(int n, int m) {
  auto [b, r] = weaving_split(n, m);
  (void)r;
  return 2 * m + n - 2 * (b + 1);
}

int weaving_traversal_count(int n, int m) {
  auto [b, r] = weaving_split(n, m);
  return 2 * b * (n - 1) + (n - 1) + 2 * (r - 1);
}

Diagram generalized_spiral(int n, int m, const std::vector<std::vector<int>>& exps) {
  if (n < 2 || m < 1 || static_cast<int>(exps.size()) != m) throw Error(ErrorKind::DomainError, "need m blocks of n-1 exponents");
  BraidWord w{n, {}};
  for (const auto& row : exps) {
    if (static_cast<int>(row.size()) != n - 1) throw Error(ErrorKind::DomainError, "need m blocks of n-1 exponents");
    for (int i = 1; i < n; ++i) {
      if (row[i - 1] % 2 == 0) throw Error(ErrorKind::DomainError, "exponents must be odd");
      w.letters.push_back({i, row[i - 1]});
    }
  }
  Diagram d = braid_closure(w);
  if (!is_alternating(d)) throw Error(ErrorKind::NotAlternating, "closure diagram is not alternating");
  return d;
}

Diagram insert_full_twists(const Diagram& d, const TwistRegion& region, int k) {
  if (k < 1) throw Error(ErrorKind::DomainError, "k must be positive");
  bool known = false;
  for (const auto& r : twist_regions(d)) known = known || r == region;
  if (!known && region.crossings.size() == 1 && region.crossings[0] >= 0 && region.crossings[0] < d.crossings())
    known = region == singleton_region(d, region.crossings[0], 1);
  if (!known) throw Error(ErrorKind::RegionInvalid, "region does not belong to this diagram");

  const int x = region.crossings.front();
  const int n = d.crossings(), m = 2 * n;
  GaussCode g = to_gauss(d);
  // inserts[p]: entries placed right after passage p
  std::vector<GaussCode> inserts(m);
  for (int strand = 0; strand < 2; ++strand) {
    int label = region.first_pair[strand];
    int slot = static_cast<int>(std::find(d.pd[x].begin(), d.pd[x].end(), label) - d.pd[x].begin());
    int over_in = d.sign[x] > 0 ? 3 : 1;
    bool incoming = slot == 0 || slot == over_in;
    bool over_at_x = slot % 2 == 1;
    GaussCode run;
    for (int t = 1; t <= 2 * k; ++t) {
      bool over = over_at_x != (t % 2 == 1);
      run.push_back({n + t, over, d.sign[x]});
    }
    // edge `label` runs from passage label-2 to passage label-1
    int before = (label - 2 + m) % m;
    if (incoming) std::reverse(run.begin(), run.end());
    inserts[before].insert(inserts[before].end(), run.begin(), run.end());
  }
  GaussCode out;
  for (int p = 0; p < m; ++p) {
    out.push_back(g[p]);
    out.insert(out.end(), inserts[p].begin(), inserts[p].end());
  }
  return from_gauss(out);
}

int TemplateSpec::sum() const { return std::accumulate(t.begin(), t.end(), 0); }

void validate_template(const TemplateSpec& spec) {
  for (int i = 0; i < 6; ++i) {
    int v = spec.t[i];
    bool want_even = i == 2 || i == 3;
    if (v < 1 || (v % 2 == 0) != want_even)
      throw Error(ErrorKind::SpecInvalid, "t" + std::to_string(i + 1) + " = " + std::to_string(v) + (want_even ? " must be even" : " must be odd"));
  }
}

namespace {

// The template in straight position. Along the strand the boxes sit in the
// order t1 t2 t3 a t4 b t5 t6; a and b are where the gray arc passes under
// in the witness and are not crossings of K_t.
struct Layout {
  int n = 0, s = 0, pos_a = 0, pos_b = 0;
  std::vector<int> visits;
  std::vector<Side> arrive;
  int gray_after = 0;   // visit index of the last t2 crossing
  int black_after = 0;  // visit index of the last t4 crossing
};

Layout layout(const TemplateSpec& spec) {
  validate_template(spec);
  const auto& t = spec.t;
  Layout L;
  L.s = spec.sum();
  L.n = L.s + 2;
  int p1 = 1, p2 = p1 + t[0], p3 = p2 + t[1];
  L.pos_a = p3 + t[2];
  int p4 = L.pos_a + 1;
  L.pos_b = p4 + t[3];
  int p5 = L.pos_b + 1, p6 = p5 + t[4];
  auto box = [&](int first, int len, bool rightward, Side side) {
    for (int j = 0; j < len; ++j) {
      L.visits.push_back(rightward ? first + j : first + len - 1 - j);
      L.arrive.push_back(side);
      side = opp(side);
    }
  };
  box(p2, t[1], true, Side::U);
  L.gray_after = static_cast<int>(L.visits.size()) - 1;
  box(L.pos_a, 1, true, Side::D);
  box(L.pos_b, 1, true, Side::U);
  box(p4, t[3], false, Side::D);
  L.black_after = static_cast<int>(L.visits.size()) - 1;
  box(p1, t[0], false, Side::D);
  box(p6, t[5], false, Side::D);
  box(p3, t[2], true, Side::U);
  box(p5, t[4], true, Side::U);
  return L;
}

struct TemplateGauss {
  GaussCode gauss;
  std::vector<char> strand_over;  // indexed by witness position - 1
};

TemplateGauss template_gauss(const Layout& L) {
  const int n = L.n;
  std::vector<int> id(n + 1, 0);
  int next = 1;
  for (int p = 1; p <= n; ++p)
    if (p != L.pos_a && p != L.pos_b) id[p] = next++;
  const int xid = next;
  // passage sequence: (crossing id, witness position or 0 for X, arc visit index or -1)
  struct Pass {
    int cid, pos, visit;
    bool black;
  };
  std::vector<Pass> seq;
  for (int p = 1; p <= n; ++p)
    if (id[p]) seq.push_back({id[p], p, -1, false});
  for (int i = 0; i < n; ++i) {
    int p = L.visits[i];
    if (id[p]) seq.push_back({id[p], p, i, false});
    if (i == L.gray_after) seq.push_back({xid, 0, -1, false});
    if (i == L.black_after) seq.push_back({xid, 0, -1, true});
  }
  int kb = 0;
  while (!(seq[kb].cid == xid && seq[kb].black)) ++kb;
  TemplateGauss tg;
  tg.strand_over.assign(n, 1);
  std::vector<char> over(seq.size());
  for (size_t k = 0; k < seq.size(); ++k) over[k] = (static_cast<int>(k) - kb) % 2 == 0;
  for (size_t k = 0; k < seq.size(); ++k)
    if (seq[k].visit < 0 && seq[k].pos) tg.strand_over[seq[k].pos - 1] = over[k];
  for (size_t k = 0; k < seq.size(); ++k) {
    int sign = 1;
    if (seq[k].pos) {
      int p = seq[k].pos;
      int vi = static_cast<int>(std::find(L.visits.begin(), L.visits.end(), p) - L.visits.begin());
      bool down = L.arrive[vi] == Side::U;
      sign = crossing_sign(down, tg.strand_over[p - 1]);
    }
    tg.gauss.push_back({seq[k].cid, over[k] != 0, sign});
  }
  return tg;
}

}  // namespace

Diagram template_knot(const TemplateSpec& spec) { return from_gauss(template_gauss(layout(spec)).gauss); }

StraightCode template_straight_witness(const TemplateSpec& spec) {
  Layout L = layout(spec);
  auto tg = template_gauss(L);
  std::vector<char> overs = tg.strand_over;
  overs[L.pos_a - 1] = 1;
  overs[L.pos_b - 1] = 1;
  return code_from_arrivals(L.n, L.visits, L.arrive, overs);
}

}  // namespace sk
