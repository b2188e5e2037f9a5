#include "straightknot/straight.hpp"

#include <algorithm>
#include <sstream>

#include "straightknot/error.hpp"

namespace sk {

namespace {

std::vector<std::string> split_fields(const std::string& text) {
  std::vector<std::string> f;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ';')) {
    auto a = tok.find_first_not_of(" \t\r\n");
    auto b = tok.find_last_not_of(" \t\r\n");
    f.push_back(a == std::string::npos ? "" : tok.substr(a, b - a + 1));
  }
  if (!text.empty() && text.back() == ';') f.push_back("");
  return f;
}

void parse_common(const std::vector<std::string>& f, int& n, std::vector<int>& visits, std::vector<Side>& sides) {
  try {
    size_t used = 0;
    n = std::stoi(f[0], &used);
    if (used != f[0].size()) throw 0;
  } catch (...) {
    throw Error(ErrorKind::Parse, "bad crossing count '" + f[0] + "'");
  }
  std::stringstream vs(f[1]);
  std::string tok;
  while (vs >> tok) {
    try {
      size_t used = 0;
      visits.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw 0;
    } catch (...) {
      throw Error(ErrorKind::Parse, "bad visit '" + tok + "'");
    }
  }
  for (char c : f[2]) {
    if (c == 'U') sides.push_back(Side::U);
    else if (c == 'D') sides.push_back(Side::D);
    else throw Error(ErrorKind::Parse, std::string("bad side letter '") + c + "'");
  }
  if (n < 0 || static_cast<int>(visits.size()) != n || static_cast<int>(sides.size()) != n + 1)
    throw Error(ErrorKind::MalformedCode, "field lengths do not match n = " + f[0]);
}

std::string join_common(int n, const std::vector<int>& visits, const std::vector<Side>& sides) {
  std::ostringstream os;
  os << n << ";";
  for (size_t i = 0; i < visits.size(); ++i) os << (i ? " " : " ") << visits[i];
  os << "; ";
  for (auto s : sides) os << (s == Side::U ? 'U' : 'D');
  return os.str();
}

Side side_of(int n, int q) { return q <= n + 1 ? Side::U : Side::D; }
int pos_of(int n, int q) { return q <= n + 1 ? q : 2 * n + 2 - q; }

}  // namespace

bool ShadowCode::operator<(const ShadowCode& o) const {
  return std::tie(n, visits, sides) < std::tie(o.n, o.visits, o.sides);
}

bool StraightCode::operator<(const StraightCode& o) const {
  return std::tie(n, visits, sides, overs) < std::tie(o.n, o.visits, o.sides, o.overs);
}

std::string ShadowCode::to_string() const { return join_common(n, visits, sides); }

std::string StraightCode::to_string() const {
  std::string s = join_common(n, visits, sides) + "; ";
  for (char b : overs) s += b ? '1' : '0';
  return s;
}

ShadowCode ShadowCode::parse(const std::string& text) {
  auto f = split_fields(text);
  if (f.size() != 3) throw Error(ErrorKind::Parse, "shadow code needs 3 fields");
  ShadowCode s;
  parse_common(f, s.n, s.visits, s.sides);
  return s;
}

StraightCode StraightCode::parse(const std::string& text) {
  auto f = split_fields(text);
  if (f.size() != 4) throw Error(ErrorKind::Parse, "straight code needs 4 fields");
  StraightCode c;
  parse_common(f, c.n, c.visits, c.sides);
  for (char ch : f[3]) {
    if (ch != '0' && ch != '1') throw Error(ErrorKind::Parse, std::string("bad over bit '") + ch + "'");
    c.overs.push_back(ch == '1');
  }
  if (static_cast<int>(c.overs.size()) != c.n) throw Error(ErrorKind::MalformedCode, "need one over bit per crossing");
  return c;
}

std::vector<std::pair<int, int>> chords(const ShadowCode& s) {
  const int n = s.n;
  std::vector<std::pair<int, int>> c;
  c.reserve(n + 1);
  c.push_back({n + 1, circle_point(n, s.sides[0], s.visits[0])});
  for (int i = 1; i < n; ++i)
    c.push_back({circle_point(n, s.sides[i], s.visits[i - 1]), circle_point(n, opp(s.sides[i + 1]), s.visits[i])});
  c.push_back({circle_point(n, s.sides[n], s.visits[n - 1]), 0});
  return c;
}

bool chords_cross(std::pair<int, int> a, std::pair<int, int> b) {
  int lo = std::min(a.first, a.second), hi = std::max(a.first, a.second);
  bool x = lo < b.first && b.first < hi;
  bool y = lo < b.second && b.second < hi;
  return x != y;
}

ShadowCode validate_shadow(const ShadowCode& s) {
  if (s.n < 1) throw Error(ErrorKind::MalformedCode, "need at least one crossing");
  if (static_cast<int>(s.visits.size()) != s.n || static_cast<int>(s.sides.size()) != s.n + 1)
    throw Error(ErrorKind::MalformedCode, "field lengths do not match n");
  std::vector<char> seen(s.n + 1, 0);
  for (int v : s.visits) {
    if (v < 1 || v > s.n || seen[v]) throw Error(ErrorKind::NotPermutation, "visits are not a permutation of 1.." + std::to_string(s.n));
    seen[v] = 1;
  }
  if (s.sides[0] == s.sides[1]) throw Error(ErrorKind::MalformedCode, "s0 must be opposite to s1");
  auto c = chords(s);
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = i + 1; j < c.size(); ++j)
      if (chords_cross(c[i], c[j]))
        throw Error(ErrorKind::CrossingArches, "connectors c" + std::to_string(i) + " and c" + std::to_string(j) + " interleave");
  return s;
}

StraightCode validate_straight(const StraightCode& code) {
  validate_shadow(code.shadow());
  if (static_cast<int>(code.overs.size()) != code.n) throw Error(ErrorKind::MalformedCode, "over bits do not match n");
  return code;
}

Diagram straight_to_diagram(const StraightCode& code) {
  validate_straight(code);
  const int n = code.n;
  const int m = 2 * n;
  std::vector<int> visit_index(n + 1, 0);
  for (int i = 0; i < n; ++i) visit_index[code.visits[i]] = i + 1;
  PdCode pd;
  for (int p = 1; p <= n; ++p) {
    int i = visit_index[p];
    int in_w = n + i, out_w = (n + i) % m + 1;
    bool down = code.sides[i] == Side::D;
    int nrt = down ? in_w : out_w, sth = down ? out_w : in_w;
    int east = p % m + 1;
    if (code.overs[p - 1]) {
      if (down) pd.push_back({in_w, p, out_w, east});
      else pd.push_back({in_w, east, out_w, p});
    } else {
      pd.push_back({p, sth, east, nrt});
    }
  }
  return validate_pd(pd);
}

std::optional<StraightCode> diagram_to_straight(const Diagram& d) {
  const int n = d.crossings();
  if (n == 0) return std::nullopt;
  auto cut = straight_decomposable(d);
  if (!cut) return std::nullopt;
  const int m = 2 * n;
  int s = cut->first - 1;
  std::vector<int> pos(n, 0);
  StraightCode code;
  code.n = n;
  code.overs.assign(n, 0);
  for (int j = 0; j < n; ++j) {
    int p = (s + j) % m;
    pos[d.pass_crossing[p]] = j + 1;
    code.overs[j] = d.pass_over[p];
  }
  code.sides.push_back(Side::U);
  for (int j = 0; j < n; ++j) {
    int p = (s + n + j) % m;
    int c = d.pass_crossing[p];
    code.visits.push_back(pos[c]);
    int sp = d.crossing_pass[c][0] == p ? d.crossing_pass[c][1] : d.crossing_pass[c][0];
    int east = d.out_slot(sp);
    code.sides.push_back(d.out_slot(p) == (east + 1) % 4 ? Side::U : Side::D);
  }
  code.sides[0] = opp(code.sides[1]);
  return validate_straight(code);
}

namespace {

ShadowCode decode(int n, const std::vector<int>& partner) {
  ShadowCode s;
  s.n = n;
  int q = partner[n + 1];
  s.sides.push_back(side_of(n, q));
  while (true) {
    int p = pos_of(n, q);
    s.visits.push_back(p);
    Side dep = opp(side_of(n, q));
    s.sides.push_back(dep);
    q = partner[circle_point(n, dep, p)];
    if (q == 0) break;
    if (q == n + 1 || static_cast<int>(s.visits.size()) > n) throw Error(ErrorKind::MalformedCode, "image is not a single arc");
  }
  return s;
}

}  // namespace

std::array<ShadowImage, 4> shadow_images(const ShadowCode& s) {
  const int n = s.n, M = 2 * n + 2;
  auto c = chords(s);
  std::array<ShadowImage, 4> out;
  for (int g = 0; g < 4; ++g) {
    auto f = [&](int q) {
      switch (g) {
        case 1: return (M - q) % M;
        case 2: return ((n + 1 - q) % M + M) % M;
        case 3: return (q + n + 1) % M;
        default: return q;
      }
    };
    std::vector<int> partner(M, -1);
    for (auto [a, b] : c) {
      partner[f(a)] = f(b);
      partner[f(b)] = f(a);
    }
    out[g].shadow = decode(n, partner);
    out[g].perm.resize(n);
    for (int p = 1; p <= n; ++p) out[g].perm[p - 1] = g >= 2 ? n + 1 - p : p;
  }
  return out;
}

ShadowCode canonicalize(const ShadowCode& s) {
  auto im = shadow_images(s);
  ShadowCode best = im[0].shadow;
  for (int g = 1; g < 4; ++g)
    if (im[g].shadow < best) best = im[g].shadow;
  return best;
}

namespace {
StraightCode image_code(const StraightCode& code, const ShadowImage& im) {
  StraightCode r;
  r.n = code.n;
  r.visits = im.shadow.visits;
  r.sides = im.shadow.sides;
  r.overs.assign(code.n, 0);
  for (int p = 1; p <= code.n; ++p) r.overs[im.perm[p - 1] - 1] = code.overs[p - 1];
  return r;
}
}  // namespace

StraightCode apply_image(const StraightCode& code, int g) { return image_code(code, shadow_images(code.shadow())[g]); }

StraightCode canonicalize(const StraightCode& code) {
  auto im = shadow_images(code.shadow());
  StraightCode best = image_code(code, im[0]);
  for (int g = 1; g < 4; ++g) {
    auto c = image_code(code, im[g]);
    if (c < best) best = c;
  }
  return best;
}

void for_each_raw_shadow(int n, const std::function<void(const ShadowCode&)>& fn) {
  if (n < 1) return;
  ShadowCode s;
  s.n = n;
  s.visits.reserve(n);
  s.sides.assign(1, Side::U);
  std::vector<std::pair<int, int>> ch;
  std::vector<char> used(n + 1, 0);
  auto ok = [&](std::pair<int, int> c) {
    for (auto& o : ch)
      if (chords_cross(o, c)) return false;
    return true;
  };
  std::function<void()> rec = [&]() {
    int i = static_cast<int>(s.visits.size());
    if (i == n) {
      std::pair<int, int> last{circle_point(n, s.sides[n], s.visits[n - 1]), 0};
      if (ok(last)) {
        s.sides[0] = opp(s.sides[1]);
        fn(s);
      }
      return;
    }
    for (int p = 1; p <= n; ++p) {
      if (used[p]) continue;
      for (Side sd : {Side::U, Side::D}) {
        std::pair<int, int> c = i == 0 ? std::make_pair(n + 1, circle_point(n, opp(sd), p))
                                       : std::make_pair(circle_point(n, s.sides[i], s.visits[i - 1]), circle_point(n, opp(sd), p));
        if (!ok(c)) continue;
        ch.push_back(c);
        used[p] = 1;
        s.visits.push_back(p);
        s.sides.push_back(sd);
        rec();
        s.sides.pop_back();
        s.visits.pop_back();
        used[p] = 0;
        ch.pop_back();
      }
    }
  };
  rec();
}

std::vector<ShadowCode> enumerate_shadows(int n) {
  std::vector<ShadowCode> out;
  for_each_raw_shadow(n, [&](const ShadowCode& s) {
    if (canonicalize(s) == s) out.push_back(s);
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool has_end_kink(const ShadowCode& s) { return s.visits.front() == s.n || s.visits.back() == 1; }

std::vector<std::pair<int, int>> empty_bigons(const ShadowCode& s) {
  std::vector<std::pair<int, int>> r;
  for (int i = 1; i < s.n; ++i) {
    int a = s.visits[i - 1], b = s.visits[i];
    if (s.sides[i] != s.sides[i + 1] && (a - b == 1 || b - a == 1)) r.push_back({a, b});
  }
  return r;
}

bool r2_reducible(const StraightCode& code) {
  for (auto [a, b] : empty_bigons(code.shadow()))
    if (code.overs[a - 1] == code.overs[b - 1]) return true;
  return false;
}

std::vector<std::vector<char>> shadow_overs(const ShadowCode& s, const PruneFlags& f) {
  std::vector<std::vector<char>> out;
  const int n = s.n;
  if (f.r1 && has_end_kink(s)) return out;
  auto im = shadow_images(s);
  std::vector<std::vector<int>> stab;
  for (int g = 1; g < 4; ++g)
    if (im[g].shadow == s) stab.push_back(im[g].perm);
  auto bigons = empty_bigons(s);
  std::vector<char> b(n), t(n);
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    for (int p = 0; p < n; ++p) b[p] = (mask >> (n - 1 - p)) & 1;
    if (f.mirror && b[0]) break;
    if (f.r2) {
      bool red = false;
      for (auto [x, y] : bigons) red = red || b[x - 1] == b[y - 1];
      if (red) continue;
    }
    bool minimal = true;
    for (auto& perm : stab) {
      for (int p = 0; p < n; ++p) t[perm[p] - 1] = b[p];
      if (t < b) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(b);
  }
  return out;
}

std::vector<StraightCode> enumerate_straight(int n, const PruneFlags& f) {
  std::vector<StraightCode> out;
  for (auto& s : enumerate_shadows(n))
    for (auto& b : shadow_overs(s, f)) out.push_back({n, s.visits, s.sides, b});
  return out;
}

StraightCode code_from_arrivals(int n, const std::vector<int>& visits, const std::vector<Side>& arrive,
                                const std::vector<char>& overs) {
  StraightCode c;
  c.n = n;
  c.visits = visits;
  c.overs = overs;
  c.sides.push_back(arrive.at(0));
  for (int i = 0; i < n; ++i) c.sides.push_back(opp(arrive.at(i)));
  return validate_straight(c);
}

}  // namespace sk
