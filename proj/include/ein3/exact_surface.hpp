#pragma once

#include <array>
#include <string>
#include <vector>

#include "ein3/crooked.hpp"
#include "ein3/group.hpp"

namespace ein {

// Closed semialgebraic piece {X null : lin . X = 0, X^T quad X >= 0}.
struct ExactPiece {
  std::string name;
  Vec5Q lin;
  Mat5Q quad;
};

struct ExactSurfaceSpec {
  Iso32Q motion = Iso32Q::identity();
  Vec3Q vertex{0, 0, 0};
  Vec3Q director{1, 0, 0};
  Extension extension = Extension::Positive;
};

// Stem, wing of x+, wing of x-, in world coordinates. Throws IrrationalFrame
// when the director's null frame is not rational.
std::array<ExactPiece, 3> exact_pieces(const ExactSurfaceSpec& s);

enum class PairVerdict { Empty, Intersects, Undecided };
std::string to_string(PairVerdict v);

struct PairResult {
  PairVerdict verdict;
  std::string reason;
};

PairResult exact_piece_pair(const ExactPiece& a, const ExactPiece& b);

struct ExactDisjointReport {
  bool disjoint = false;
  int undecided = 0;
  struct Entry {
    std::string piece1, piece2;
    PairResult result;
  };
  std::vector<Entry> pairs;
};

ExactDisjointReport exact_disjoint(const ExactSurfaceSpec& s1, const ExactSurfaceSpec& s2);

}  // namespace ein
