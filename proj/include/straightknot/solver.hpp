#pragma once

#include <optional>
#include <string>
#include <vector>

#include "straightknot/diagram.hpp"
#include "straightknot/families.hpp"
#include "straightknot/invariants.hpp"
#include "straightknot/straight.hpp"
#include "straightknot/table.hpp"

namespace sk {

enum class SolveStatus { Found, LowerBoundOnly, Ambiguous };
const char* status_name(SolveStatus s);

struct LevelCertificate {
  int level = 0;
  PruneFlags flags;
  long shadows = 0;    // canonical shadows visited
  long codes = 0;      // over assignments evaluated
  long candidates = 0; // passed the modular Jones filter
  bool exhausted = false;
  bool found = false;
};

struct SolveOptions {
  int n_max = 10;
  int n_min = 0;        // 0: use the automatic lower bound
  int threads = 0;      // 0: STRAIGHTKNOT_THREADS, else hardware concurrency
  bool prune = true;
  double time_limit = 0;  // seconds, 0 = none
};

struct SolveResult {
  SolveStatus status = SolveStatus::LowerBoundOnly;
  int value = 0;
  std::optional<StraightCode> witness;
  std::vector<std::string> candidates;  // table names sharing the target fingerprint
  std::vector<LevelCertificate> levels;
  std::string lower_bound_reason;
  long shadows = 0, codes = 0;
  double seconds = 0;
};

int resolve_threads(int requested);
int straight_lower_bound(const Diagram& target, std::string* reason = nullptr);

SolveResult straight_number(const Diagram& target, const Table* table, const SolveOptions& opt);
std::string solve_report_json(const SolveResult& r);

struct PerfectlyStraight {
  bool value = false;
  SolveResult evidence;
};
// c is the crossing number; 0 means take it from the (alternating, reduced) diagram
PerfectlyStraight is_perfectly_straight(const Diagram& target, const Table* table, int c = 0, int threads = 0);

struct WeavingReport {
  int n = 0, m = 0, crossings = 0;
  int max_simple_arc = 0, bound = 0, traversal_count = 0;
  int flype_candidates = 0;
  bool alternating = false, reduced = false, decomposable = true;
  bool not_perfectly_straight = false;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
  std::string json() const;
};
WeavingReport verify_weaving(int n, int m);

struct TemplateReport {
  TemplateSpec spec;
  int crossings = 0;          // c(K_t) = s + 1
  int witness_crossings = 0;  // s + 2
  bool witness_matches = false;
  LevelCertificate lower_level;  // exhaustive search at level s + 1
  std::optional<int> straight_number;
  std::string json() const;
};
TemplateReport verify_template(const TemplateSpec& spec, const Table* table, int threads = 0, double time_limit = 0);

std::string render_svg(const StraightCode& code);

}  // namespace sk
