#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sk {

using PdCode = std::vector<std::array<int, 4>>;

// A validated knot diagram. Tuples list edge labels counterclockwise starting
// at the incoming under-edge. After validation edges are labeled 1..2n along
// the orientation: edge k enters passage k, passage k leaves on edge k+1.
struct Diagram {
  PdCode pd;
  std::vector<int> sign;            // per crossing, +1 or -1
  std::vector<int> pass_crossing;   // passage (0-based) -> crossing index
  std::vector<char> pass_over;      // passage (0-based) -> over?
  std::vector<std::array<int, 2>> crossing_pass;  // crossing -> {under passage, over passage}

  int crossings() const { return static_cast<int>(pd.size()); }
  int edges() const { return 2 * crossings(); }
  std::vector<char> pass_slot;      // passage (0-based) -> slot it enters by

  int writhe() const;
  int in_slot(int p) const { return pass_slot[p]; }
  int out_slot(int p) const { return (pass_slot[p] + 2) % 4; }
  bool operator==(const Diagram& o) const { return pd == o.pd; }
};

struct GaussEntry {
  int crossing;
  bool over;
  int sign;
  bool operator==(const GaussEntry&) const = default;
};
using GaussCode = std::vector<GaussEntry>;

struct TwistRegion {
  std::vector<int> crossings;        // chain order
  std::array<int, 2> first_pair{};   // edges bounding the open corner at crossings.front()
  std::array<int, 2> last_pair{};    // edges bounding the open corner at crossings.back()
  bool cyclic = false;
  bool operator==(const TwistRegion&) const = default;
};

// Face structure of the shadow on S^2.
struct Faces {
  int count = 0;
  std::vector<std::array<int, 4>> corner_face;  // crossing x corner k (between slots k, k+1)
  std::vector<std::vector<std::pair<int, int>>> corners;  // face -> (crossing, corner)
};

Diagram validate_pd(const PdCode& raw);
GaussCode to_gauss(const Diagram& d);
Diagram from_gauss(const GaussCode& g);
Diagram mirror(const Diagram& d);

Faces faces(const Diagram& d);
bool gauss_word_realizable(const std::vector<int>& word);

bool is_alternating(const Diagram& d);
bool is_nugatory(const Diagram& d, int crossing);
bool is_reduced(const Diagram& d);
std::vector<TwistRegion> twist_regions(const Diagram& d);
// the singleton region at c twisted along the other axis
TwistRegion singleton_region(const Diagram& d, int c, int axis);

// cut pair (edge labels) such that each crossing has one pass on either side
std::optional<std::pair<int, int>> straight_decomposable(const Diagram& d);
int max_simple_arc(const Diagram& d);

// canonical label-independent form: minimal PD over all starting edges
PdCode canonical_pd(const Diagram& d);
bool same_diagram(const Diagram& a, const Diagram& b);

std::string pd_to_string(const PdCode& pd);
PdCode parse_pd(const std::string& text);
std::string gauss_to_string(const GaussCode& g);
GaussCode parse_gauss(const std::string& text);

}  // namespace sk
