#pragma once

#include <array>
#include <string>
#include <vector>

#include "straightknot/diagram.hpp"

namespace sk {

enum class CutKind { Trivial, SingleCrossing, TangleTangle };
const char* cut_kind_name(CutKind k);

// A Conway circle, as the 4 shadow edges it meets. `inside` is the smaller side.
struct FourCut {
  std::array<int, 4> edges{};
  std::vector<int> inside, outside;
  CutKind kind = CutKind::Trivial;
  bool operator==(const FourCut&) const = default;
};

// every simple 4-cycle of the dual graph; NonPrime if a dual 2-cycle exists
std::vector<FourCut> four_cuts(const Diagram& d);

struct FlypeCandidate {
  int flyper = -1;
  FourCut cut;
  std::vector<int> tangle;              // side joined to the flyper by two strands
  std::vector<int> rest;                // crossings beyond, flyper excluded
  std::vector<std::vector<int>> cycle;  // tangles met going around from the flyper
  bool nontrivial = false;              // tangle and rest each hold 2+ crossings
};

std::vector<FlypeCandidate> flype_candidates(const Diagram& d);
bool disconnects(const Diagram& d, const std::array<int, 4>& edges);
std::string flype_report_json(const Diagram& d);

}  // namespace sk
