#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nervelab/complex.hpp"
#include "nervelab/homology.hpp"

namespace nervelab {

/// A letter is +(i+1) for generator i and -(i+1) for its inverse.
using Letter = int;
using Word = std::vector<Letter>;

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  /// Every relator mentions only declared generators.
  bool well_formed() const;
  std::string to_string() const;
};

/// Edge-path group of a connected complex. Generators are the edges outside
/// a BFS spanning tree rooted at the least vertex; each triangle [a<b<c]
/// contributes the relator ab * bc * (ac)^-1 with tree edges erased.
GroupPresentation edge_path_presentation(const SimplicialComplex& k);

/// Cokernel of the relator exponent-sum matrix.
HomologyGroup abelianization(const GroupPresentation& p);

enum class TietzeStatus { trivialized, simplified, exhausted };
std::string to_string(TietzeStatus s);

struct TietzeResult {
  GroupPresentation presentation;
  TietzeStatus status = TietzeStatus::simplified;
  std::size_t moves = 0;
};

inline constexpr std::size_t kDefaultTietzeBudget = 10'000;

/// Greedy Tietze simplification: free and cyclic reduction, deletion of
/// empty and repeated relators, and elimination of a generator that occurs
/// exactly once in some relator. Every move preserves the group.
///
/// "exhausted" means the budget ran out with moves still available; it says
/// nothing about whether the group is trivial.
TietzeResult tietze_simplify(GroupPresentation p, std::size_t budget = kDefaultTietzeBudget);

}  // namespace nervelab
