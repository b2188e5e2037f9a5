#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "straightknot/diagram.hpp"
#include "straightknot/laurent.hpp"
#include "straightknot/straight.hpp"

namespace sk {

// Kauffman bracket in A by the full state sum; d = -A^2 - A^-2, <O> = 1.
// A-smoothing of X[a,b,c,d] joins (a,b) and (c,d).
Laurent kauffman_bracket(const Diagram& d, int max_crossings = 20);
// same polynomial by contracting crossings one at a time; no size cap
Laurent bracket(const Diagram& d);
// equals kauffman_bracket(straight_to_diagram(code)), by a left-to-right sweep
Laurent bracket_transfer(const StraightCode& code);

// (-A^3)^(-w) <D> with A = t^(-1/4)
Laurent jones_from_bracket(const Laurent& br, int writhe);
Laurent jones(const Diagram& d);

// normalized so that Delta(t) = Delta(1/t) and Delta(1) = 1
Laurent alexander(const Diagram& d);
Laurent normalize_alexander(const Laurent& p);

std::vector<std::vector<int64_t>> goeritz_matrix(const Diagram& d, int shade = 0);
int64_t determinant_alexander(const Diagram& d);
int64_t determinant_goeritz(const Diagram& d);
// both routes; throws if they disagree
int64_t determinant(const Diagram& d);
int signature(const Diagram& d, int shade = 0);
int matrix_signature(const std::vector<std::vector<int64_t>>& m);
int64_t matrix_determinant(const std::vector<std::vector<int64_t>>& m);

struct Fingerprint {
  int64_t determinant = 1;
  Laurent alexander = Laurent::constant(1);
  Laurent jones = Laurent::constant(1);  // lexicographically smaller of V(t), V(1/t)
  int signature_abs = 0;

  std::string serialize() const;
  static Fingerprint parse(const std::string& s);
  bool operator==(const Fingerprint&) const = default;
  std::strong_ordering operator<=>(const Fingerprint& o) const;
};

Fingerprint fingerprint(const Diagram& d);
Laurent jones_canonical(const Laurent& v);

}  // namespace sk
