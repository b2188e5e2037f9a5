#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "straightknot/diagram.hpp"

namespace sk {

enum class Side : uint8_t { U = 0, D = 1 };
inline Side opp(Side s) { return s == Side::U ? Side::D : Side::U; }

// Straight strand from 0 (left end) to n+1 (right end) with crossings at
// positions 1..n. The wandering arc runs from the right end through
// visits[0..n-1] to the left end. sides[i] (i >= 1) is the side on which the
// arc leaves visits[i-1]; sides[0] is the side on which it reaches visits[0]
// and always equals opp(sides[1]). A connector whose two departure sides
// agree passes around the left end of the strand.
struct ShadowCode {
  int n = 0;
  std::vector<int> visits;
  std::vector<Side> sides;

  std::string to_string() const;
  static ShadowCode parse(const std::string& text);
  bool operator==(const ShadowCode&) const = default;
  bool operator<(const ShadowCode& o) const;
};

struct StraightCode {
  int n = 0;
  std::vector<int> visits;
  std::vector<Side> sides;
  std::vector<char> overs;  // overs[p-1]: strand passes over at position p

  ShadowCode shadow() const { return {n, visits, sides}; }
  std::string to_string() const;
  static StraightCode parse(const std::string& text);
  bool operator==(const StraightCode&) const = default;
  bool operator<(const StraightCode& o) const;
};

// boundary points of the disk left when the strand is cut out of S^2:
// 0 = left end, p = upper side of position p, n+1 = right end, 2n+2-p = lower side
inline int circle_point(int n, Side s, int p) { return s == Side::U ? p : 2 * n + 2 - p; }

// connectors c_0..c_n as chords of that disk
std::vector<std::pair<int, int>> chords(const ShadowCode& s);
bool chords_cross(std::pair<int, int> a, std::pair<int, int> b);

ShadowCode validate_shadow(const ShadowCode& s);
StraightCode validate_straight(const StraightCode& code);

Diagram straight_to_diagram(const StraightCode& code);
std::optional<StraightCode> diagram_to_straight(const Diagram& d);

// Klein four-group acting on the disk: identity, vertical flip, horizontal
// flip, half-turn. perm[p-1] is the image of position p.
struct ShadowImage {
  ShadowCode shadow;
  std::vector<int> perm;
};
std::array<ShadowImage, 4> shadow_images(const ShadowCode& s);
ShadowCode canonicalize(const ShadowCode& s);
StraightCode canonicalize(const StraightCode& code);
StraightCode apply_image(const StraightCode& code, int g);

// every valid shadow with n crossings in DFS order (no quotient)
void for_each_raw_shadow(int n, const std::function<void(const ShadowCode&)>& fn);
// one orbit representative per class, sorted
std::vector<ShadowCode> enumerate_shadows(int n);

struct PruneFlags {
  bool r1 = false;
  bool r2 = false;
  bool mirror = false;  // fix overs[0] = 0; only sound when mirrors are identified
};

// kink at either end of the strand
bool has_end_kink(const ShadowCode& s);
// position pairs joined by an empty one-sided connector
std::vector<std::pair<int, int>> empty_bigons(const ShadowCode& s);
bool r2_reducible(const StraightCode& code);

// over assignments of one canonical shadow that survive the prunes and are
// minimal under the shadow's stabilizer
std::vector<std::vector<char>> shadow_overs(const ShadowCode& s, const PruneFlags& f);
std::vector<StraightCode> enumerate_straight(int n, const PruneFlags& f);

// build a code from the arrival side at each visit
StraightCode code_from_arrivals(int n, const std::vector<int>& visits, const std::vector<Side>& arrive,
                                const std::vector<char>& overs);

}  // namespace sk
