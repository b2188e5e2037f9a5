#pragma once

#include <array>
#include <utility>
#include <vector>

#include "straightknot/diagram.hpp"
#include "straightknot/straight.hpp"

namespace sk {

struct BraidWord {
  int strands = 2;
  std::vector<std::pair<int, int>> letters;  // (generator 1..strands-1, nonzero exponent)
};

// sigma_i with positive exponent is a positive crossing; the braid runs upward
Diagram braid_closure(const BraidWord& w);
BraidWord spiral_word(int n, int m, const std::vector<int>& eps);
Diagram spiral(int n, int m, const std::vector<int>& eps);
Diagram weaving(int n, int m);

// closed form 2m + n - 2(b+1) for m = bn + r, 1 <= r <= n-1
int weaving_bound(int n, int m);
// the termwise count 2b(n-1) + (n-1) + 2(r-1)
int weaving_traversal_count(int n, int m);

// exps[j][i] is the exponent of sigma_{i+1} in the j-th block
Diagram generalized_spiral(int n, int m, const std::vector<std::vector<int>>& exps);

// 2k alternating crossings added at the region's first open corner
Diagram insert_full_twists(const Diagram& d, const TwistRegion& region, int k);

struct TemplateSpec {
  std::array<int, 6> t{1, 1, 2, 2, 1, 1};
  int sum() const;
};
void validate_template(const TemplateSpec& spec);
// crossings 0..s-1 are the boxes in strand order, crossing s is the fixed one
Diagram template_knot(const TemplateSpec& spec);
StraightCode template_straight_witness(const TemplateSpec& spec);

}  // namespace sk
