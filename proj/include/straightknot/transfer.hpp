#pragma once

#include <cstdint>
#include <vector>

#include "straightknot/straight.hpp"

namespace sk {

// Sweep of a straight shadow, left to right. The cut meets the upper arcs
// (outermost first), the strand, then the lower arcs; a state is a
// noncrossing matching of the cut, stored as balanced parentheses. Each
// crossing maps every state under both smoothings; which of the two gets
// the A weight depends only on the over bit there.
struct TransferPlan {
  struct Layer {
    uint32_t targets = 0;
    std::vector<uint32_t> to[2];    // [0]: NW+SE smoothing, [1]: NE+SW
    std::vector<uint8_t> loop[2];
  };
  int n = 0;
  std::vector<Layer> layers;
  std::vector<char> down;  // wandering arc runs north to south at position p (index p-1)
  int max_width = 0;
};

TransferPlan make_plan(const ShadowCode& s);

inline int crossing_sign(bool down, bool over) { return over ? (down ? -1 : 1) : (down ? 1 : -1); }

// smoothing index carrying the A weight when the strand is over / under
inline int a_smoothing(bool over) { return over ? 0 : 1; }

// arithmetic mod the Mersenne prime 2^61-1
struct ModP {
  static constexpr uint64_t P = (uint64_t{1} << 61) - 1;
  static uint64_t add(uint64_t a, uint64_t b) {
    uint64_t s = a + b;
    return s >= P ? s - P : s;
  }
  static uint64_t mul(uint64_t a, uint64_t b) {
    unsigned __int128 z = static_cast<unsigned __int128>(a) * b;
    uint64_t lo = static_cast<uint64_t>(z & P), hi = static_cast<uint64_t>(z >> 61);
    uint64_t s = lo + hi;
    return s >= P ? s - P : s;
  }
  static uint64_t pow(uint64_t b, uint64_t e) {
    uint64_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }
  static uint64_t inv(uint64_t a) { return pow(a, P - 2); }
  static uint64_t neg(uint64_t a) { return a == 0 ? 0 : P - a; }
};

// (-A^3)^(-w) <D> evaluated at A = a mod P
uint64_t normalized_bracket_mod(const TransferPlan& plan, const std::vector<char>& overs, uint64_t a);

}  // namespace sk
