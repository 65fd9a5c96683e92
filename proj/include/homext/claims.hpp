#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "homext/engine.hpp"
#include "homext/execution.hpp"

namespace homext {

/// One line of a claims file: "kind lhs rhs [params...]", '#' starts a comment.
///
/// Finite claims range over every graph on 1..N vertices:
///   equality XY XY' N, inclusion XY XY' N, y-collapse * * N, monotone * * N,
///   only-complete XY * N, only-complete-or-empty XY * N,
///   disconnected-cliques XY * N.
/// Separation claims name a generator: the left class must survive the
/// bounded search and the right class must fail with a certified witness:
///   separation XY XY' rs n | comp m n | h3prime order seed | radoplus order | rado
struct PosetClaim {
  enum class Kind { Equality, Inclusion, YCollapse, Monotone, OnlyComplete, OnlyCompleteOrEmpty, DisconnectedCliques,
                    Separation };
  Kind kind = Kind::Equality;
  std::size_t line = 0;
  std::string text;
  MorphismKind lhs_x = MorphismKind::Homomorphism, rhs_x = MorphismKind::Homomorphism;
  EndoKind lhs_y = EndoKind::H, rhs_y = EndoKind::H;
  std::size_t max_order = 0;
  std::vector<std::string> generator;  // name then parameters
};

/// Throws ParseError with the line number on malformed input.
std::vector<PosetClaim> parse_claims(std::istream& is);

struct ClaimResult {
  PosetClaim claim;
  bool passed = false;
  std::vector<std::string> details;
};

std::vector<ClaimResult> verify_claims(const std::vector<PosetClaim>& claims, const BoundedParams& bounds,
                                       Execution exec = Execution::Parallel);

}  // namespace homext
