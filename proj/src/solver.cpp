#include "straightknot/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <mutex>
#include <nlohmann/json.hpp>
#include <sstream>
#include <thread>

#include "straightknot/error.hpp"
#include "straightknot/flype.hpp"
#include "straightknot/transfer.hpp"

namespace sk {

const char* status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Found: return "Found";
    case SolveStatus::LowerBoundOnly: return "LowerBoundOnly";
    case SolveStatus::Ambiguous: return "Ambiguous";
  }
  return "?";
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("STRAIGHTKNOT_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int straight_lower_bound(const Diagram& target, std::string* reason) {
  if (target.crossings() >= 3 && is_alternating(target) && is_reduced(target)) {
    if (reason) *reason = "reduced alternating diagram: crossing number = " + std::to_string(target.crossings()) + " (assumed minimal for reduced alternating diagrams)";
    return target.crossings();
  }
  if (reason) *reason = "no alternating reduced diagram given: nontrivial knots need 3 crossings";
  return 3;
}

namespace {

using Clock = std::chrono::steady_clock;

constexpr uint64_t kEvalPoint = 0x2545F4914F6CDD1Dull % ModP::P;

struct Target {
  Fingerprint fp;
  uint64_t jones_t = 0, jones_mirror = 0;
};

Target make_target(const Diagram& d) {
  Target t;
  t.fp = fingerprint(d);
  Laurent v = jones(d);
  uint64_t a = kEvalPoint, ai = ModP::inv(a);
  uint64_t x = ModP::pow(ai, 4), xi = ModP::pow(a, 4);
  t.jones_t = v.eval_mod(x, xi, ModP::P);
  t.jones_mirror = v.eval_mod(xi, x, ModP::P);
  return t;
}

struct ShadowJob {
  const ShadowCode* shadow;
  PruneFlags flags;
  const Target* target;
  long codes = 0, candidates = 0;
  std::optional<std::vector<char>> hit;
};

// depth-first over the over bits, sharing sweep prefixes
void search_shadow(ShadowJob& job) {
  const ShadowCode& s = *job.shadow;
  const int n = s.n;
  const PruneFlags& f = job.flags;
  if (f.r1 && has_end_kink(s)) return;
  auto im = shadow_images(s);
  std::vector<std::vector<int>> stab;
  for (int g = 1; g < 4; ++g)
    if (im[g].shadow == s) stab.push_back(im[g].perm);
  // bigon partner check when position p (1-based) is assigned
  std::vector<std::vector<int>> bigon_back(n + 1);
  if (f.r2)
    for (auto [x, y] : empty_bigons(s)) bigon_back[std::max(x, y)].push_back(std::min(x, y));

  TransferPlan plan = make_plan(s);
  const uint64_t a = kEvalPoint, ai = ModP::inv(a);
  const uint64_t d = ModP::neg(ModP::add(ModP::mul(a, a), ModP::mul(ai, ai)));
  std::vector<std::vector<uint64_t>> buf(n + 1);
  buf[0] = {1};
  std::vector<char> bits(n, 0), t(n);
  std::vector<int> writhe(n + 1, 0);

  std::function<bool(int)> rec = [&](int p) -> bool {
    if (p == n) {
      for (auto& perm : stab) {
        for (int q = 0; q < n; ++q) t[perm[q] - 1] = bits[q];
        if (t < bits) return false;
      }
      ++job.codes;
      uint64_t val = buf[n][0];
      int w3 = 3 * writhe[n];
      val = ModP::mul(val, w3 >= 0 ? ModP::pow(ai, w3) : ModP::pow(a, -w3));
      if (writhe[n] % 2) val = ModP::neg(val);
      if (val != job.target->jones_t && val != job.target->jones_mirror) return false;
      ++job.candidates;
      StraightCode code{n, s.visits, s.sides, bits};
      if (fingerprint(straight_to_diagram(code)) == job.target->fp) {
        job.hit = bits;
        return true;
      }
      return false;
    }
    const auto& L = plan.layers[p];
    for (int b = 0; b < 2; ++b) {
      if (p == 0 && f.mirror && b == 1) continue;
      bits[p] = static_cast<char>(b);
      bool red = false;
      for (int q : bigon_back[p + 1]) red = red || bits[q - 1] == bits[p];
      if (red) continue;
      const int ka = a_smoothing(b);
      auto& cur = buf[p];
      auto& nxt = buf[p + 1];
      nxt.assign(L.targets, 0);
      for (size_t i = 0; i < cur.size(); ++i) {
        uint64_t v = cur[i];
        if (!v) continue;
        for (int k = 0; k < 2; ++k) {
          uint64_t x = ModP::mul(v, k == ka ? a : ai);
          if (L.loop[k][i]) x = ModP::mul(x, d);
          nxt[L.to[k][i]] = ModP::add(nxt[L.to[k][i]], x);
        }
      }
      writhe[p + 1] = writhe[p] + crossing_sign(plan.down[p], b);
      if (rec(p + 1)) return true;
    }
    return false;
  };
  rec(0);
}

struct LevelResult {
  LevelCertificate cert;
  std::optional<StraightCode> witness;
  bool timed_out = false;
};

LevelResult search_level(int n, const Target& target, const PruneFlags& flags, int threads, Clock::time_point deadline,
                         bool has_deadline) {
  LevelResult res;
  res.cert.level = n;
  res.cert.flags = flags;
  auto shadows = enumerate_shadows(n);
  const long total = static_cast<long>(shadows.size());
  std::atomic<long> next{0};
  std::atomic<long> best{total};  // smallest shadow index with a hit
  std::atomic<bool> timed_out{false};
  std::mutex mu;
  std::vector<std::optional<std::vector<char>>> hits(total);
  long codes = 0, cands = 0, visited = 0;

  auto worker = [&] {
    long my_codes = 0, my_cands = 0, my_visited = 0;
    while (true) {
      long i = next.fetch_add(1);
      if (i >= total || i > best.load()) break;
      if (has_deadline && Clock::now() > deadline) {
        timed_out = true;
        break;
      }
      ShadowJob job{&shadows[i], flags, &target};
      search_shadow(job);
      my_codes += job.codes;
      my_cands += job.candidates;
      ++my_visited;
      if (job.hit) {
        hits[i] = job.hit;
        long cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
    std::lock_guard<std::mutex> lock(mu);
    codes += my_codes;
    cands += my_cands;
    visited += my_visited;
  };
  std::vector<std::thread> pool;
  for (int k = 0; k < std::max(1, threads); ++k) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  res.cert.codes = codes;
  res.cert.candidates = cands;
  res.cert.shadows = visited;
  long b = best.load();
  if (b < total) {
    const auto& s = shadows[b];
    res.witness = StraightCode{n, s.visits, s.sides, *hits[b]};
    res.cert.found = true;
  } else {
    res.cert.exhausted = !timed_out.load();
  }
  res.timed_out = timed_out.load();
  return res;
}

}  // namespace

SolveResult straight_number(const Diagram& target, const Table* table, const SolveOptions& opt) {
  auto t0 = Clock::now();
  SolveResult r;
  if (target.crossings() == 0) throw Error(ErrorKind::DomainError, "target is the trivial diagram");
  int lo = straight_lower_bound(target, &r.lower_bound_reason);
  if (opt.n_min > 0) {
    lo = opt.n_min;
    r.lower_bound_reason = "start level supplied by caller";
  }
  if (opt.n_max < lo) throw Error(ErrorKind::DomainError, "n_max " + std::to_string(opt.n_max) + " is below the lower bound " + std::to_string(lo));
  Target tg = make_target(target);
  PruneFlags flags = opt.prune ? PruneFlags{true, true, true} : PruneFlags{false, false, false};
  const int threads = resolve_threads(opt.threads);
  const bool has_deadline = opt.time_limit > 0;
  auto deadline = t0 + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(opt.time_limit));

  r.value = lo;
  for (int n = lo; n <= opt.n_max; ++n) {
    auto lr = search_level(n, tg, flags, threads, deadline, has_deadline);
    r.levels.push_back(lr.cert);
    r.shadows += lr.cert.shadows;
    r.codes += lr.cert.codes;
    if (lr.witness) {
      r.witness = lr.witness;
      r.value = n;
      r.status = SolveStatus::Found;
      if (table) {
        r.candidates = table->matching(tg.fp, n);
        if (r.candidates.size() > 1) r.status = SolveStatus::Ambiguous;
      }
      break;
    }
    if (lr.timed_out) {
      r.value = n;
      break;
    }
    r.value = n + 1;
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

namespace {

nlohmann::json cert_json(const LevelCertificate& c) {
  return {{"level", c.level},
          {"prune", {{"r1", c.flags.r1}, {"r2", c.flags.r2}, {"mirror", c.flags.mirror}}},
          {"shadows", c.shadows},
          {"codes", c.codes},
          {"jones_candidates", c.candidates},
          {"exhausted", c.exhausted},
          {"found", c.found}};
}

}  // namespace

std::string solve_report_json(const SolveResult& r) {
  nlohmann::json j;
  j["status"] = status_name(r.status);
  j["value"] = r.value;
  j["witness"] = r.witness ? nlohmann::json(r.witness->to_string()) : nlohmann::json(nullptr);
  j["candidates"] = r.candidates;
  j["lower_bound"] = r.lower_bound_reason;
  nlohmann::json lv = nlohmann::json::array();
  for (const auto& c : r.levels) lv.push_back(cert_json(c));
  j["levels"] = lv;
  j["shadows"] = r.shadows;
  j["codes"] = r.codes;
  j["seconds"] = r.seconds;
  return j.dump(2);
}

PerfectlyStraight is_perfectly_straight(const Diagram& target, const Table* table, int c, int threads) {
  if (c == 0) {
    if (!is_alternating(target) || !is_reduced(target))
      throw Error(ErrorKind::DomainError, "crossing number unknown for a non-alternating or unreduced diagram");
    c = target.crossings();
  }
  SolveOptions opt;
  opt.n_min = c;
  opt.n_max = c;
  opt.threads = threads;
  PerfectlyStraight ps;
  ps.evidence = straight_number(target, table, opt);
  ps.value = ps.evidence.status != SolveStatus::LowerBoundOnly && ps.evidence.value == c;
  return ps;
}

std::string WeavingReport::json() const {
  nlohmann::json j{{"n", n},
                   {"m", m},
                   {"crossings", crossings},
                   {"max_simple_arc", max_simple_arc},
                   {"weaving_bound", bound},
                   {"traversal_count", traversal_count},
                   {"flype_candidates", flype_candidates},
                   {"alternating", alternating},
                   {"reduced", reduced},
                   {"straight_decomposable", decomposable},
                   {"not_perfectly_straight", not_perfectly_straight},
                   {"mismatches", mismatches}};
  return j.dump(2);
}

WeavingReport verify_weaving(int n, int m) {
  WeavingReport r;
  r.n = n;
  r.m = m;
  r.bound = weaving_bound(n, m);
  r.traversal_count = weaving_traversal_count(n, m);
  Diagram d = weaving(n, m);
  r.crossings = d.crossings();
  r.max_simple_arc = max_simple_arc(d);
  r.alternating = is_alternating(d);
  r.reduced = is_reduced(d);
  r.decomposable = straight_decomposable(d).has_value();
  r.flype_candidates = static_cast<int>(flype_candidates(d).size());
  if (r.crossings != m * (n - 1)) r.mismatches.push_back("crossing count is not m(n-1)");
  if (r.max_simple_arc != r.bound)
    r.mismatches.push_back("max_simple_arc " + std::to_string(r.max_simple_arc) + " != closed form " + std::to_string(r.bound));
  if (r.bound >= r.crossings) r.mismatches.push_back("closed form is not below the crossing count");
  if (!r.alternating || !r.reduced) r.mismatches.push_back("diagram is not reduced alternating");
  if (r.flype_candidates) r.mismatches.push_back("flype candidates present");
  r.not_perfectly_straight = r.alternating && r.reduced && r.flype_candidates == 0 && !r.decomposable && r.max_simple_arc < r.crossings;
  return r;
}

std::string TemplateReport::json() const {
  nlohmann::json j{{"t", spec.t},
                   {"crossings", crossings},
                   {"witness_crossings", witness_crossings},
                   {"witness_matches", witness_matches},
                   {"level_below", cert_json(lower_level)},
                   {"straight_number", straight_number ? nlohmann::json(*straight_number) : nlohmann::json(nullptr)}};
  return j.dump(2);
}

TemplateReport verify_template(const TemplateSpec& spec, const Table* table, int threads, double time_limit) {
  (void)table;
  TemplateReport r;
  r.spec = spec;
  Diagram k = template_knot(spec);
  StraightCode w = template_straight_witness(spec);
  r.crossings = k.crossings();
  r.witness_crossings = w.n;
  r.witness_matches = fingerprint(straight_to_diagram(w)) == fingerprint(k);
  const int level = spec.sum() + 1;
  Target tg = make_target(k);
  auto t0 = Clock::now();
  auto deadline = t0 + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(time_limit));
  auto lr = search_level(level, tg, PruneFlags{true, true, true}, resolve_threads(threads), deadline, time_limit > 0);
  r.lower_level = lr.cert;
  if (lr.cert.exhausted && r.witness_matches) r.straight_number = w.n;
  return r;
}

std::string render_svg(const StraightCode& code0) {
  const StraightCode code = validate_straight(code0);
  const int n = code.n;
  const double u = 40, gap = 7;
  // wraps turn left of the strand; inner ones first
  std::vector<std::pair<int, int>> conn;  // (from position or n+1, to position or 0)
  std::vector<int> wrap_rank(n + 1, 0);
  std::vector<int> wraps;
  for (int i = 1; i < n; ++i)
    if (code.sides[i] == code.sides[i + 1]) wraps.push_back(i);
  std::sort(wraps.begin(), wraps.end(), [&](int x, int y) {
    int ax = code.sides[x] == Side::U ? code.visits[x - 1] : code.visits[x];
    int ay = code.sides[y] == Side::U ? code.visits[y - 1] : code.visits[y];
    return ax < ay;
  });
  for (size_t k = 0; k < wraps.size(); ++k) wrap_rank[wraps[k]] = static_cast<int>(k) + 1;
  const int depth = static_cast<int>(wraps.size());
  double rmax = 0.5 * (n + 1);
  for (int i = 1; i < n; ++i) rmax = std::max(rmax, 0.5 * (std::abs(code.visits[i] - code.visits[i - 1]) + 2 * depth + n));
  const double x0 = (depth + 1) * u, y0 = (rmax + 1) * u;
  const double width = x0 + (n + 2) * u, height = 2 * y0;
  auto X = [&](double p) { return x0 + p * u; };

  std::ostringstream os;
  os << std::fixed << std::setprecision(2);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
     << height << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  auto semi = [&](double a, double b, Side side) {
    double lo = std::min(a, b), hi = std::max(a, b), r = (hi - lo) * u / 2;
    std::ostringstream p;
    p << std::fixed << std::setprecision(2) << "M " << X(lo) << " " << y0 << " A " << r << " " << r << " 0 0 " << (side == Side::U ? 1 : 0)
      << " " << X(hi) << " " << y0;
    return p.str();
  };
  auto arc = [&](const std::string& d) { os << "<path class=\"arc\" d=\"" << d << "\" fill=\"none\" stroke=\"black\" stroke-width=\"3\"/>\n"; };
  arc(semi(n + 1, code.visits[0], code.sides[0]));
  for (int i = 1; i < n; ++i) {
    int a = code.visits[i - 1], b = code.visits[i];
    if (wrap_rank[i]) {
      double turn = -wrap_rank[i];
      Side leave = code.sides[i];
      std::string first = semi(a, turn, leave), second = semi(turn, b, opp(leave));
      arc(first + " " + second.substr(second.find('A')));
    } else {
      arc(semi(a, b, code.sides[i]));
    }
  }
  arc(semi(code.visits[n - 1], 0, code.sides[n]));
  // gaps: white over the arc where the strand is over, a break in the strand otherwise
  for (int p = 1; p <= n; ++p) {
    if (code.overs[p - 1])
      os << "<line class=\"gap\" x1=\"" << X(p) << "\" y1=\"" << y0 - gap << "\" x2=\"" << X(p) << "\" y2=\"" << y0 + gap
         << "\" stroke=\"white\" stroke-width=\"9\"/>\n";
    else
      os << "<line class=\"gap\" x1=\"" << X(p) - gap << "\" y1=\"" << y0 << "\" x2=\"" << X(p) + gap << "\" y2=\"" << y0
         << "\" stroke=\"none\"/>\n";
  }
  double from = 0;
  for (int p = 1; p <= n + 1; ++p) {
    if (p <= n && code.overs[p - 1]) continue;
    double to = p <= n ? p - gap / u : n + 1;
    os << "<line class=\"strand\" x1=\"" << X(from) << "\" y1=\"" << y0 << "\" x2=\"" << X(to) << "\" y2=\"" << y0
       << "\" stroke=\"black\" stroke-width=\"3\"/>\n";
    from = p + gap / u;
  }
  os << "<circle cx=\"" << X(0) << "\" cy=\"" << y0 << "\" r=\"3\"/>\n";
  os << "<circle cx=\"" << X(n + 1) << "\" cy=\"" << y0 << "\" r=\"3\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace sk
