#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nervelab/complex.hpp"
#include "nervelab/homology.hpp"

namespace nervelab {

/// Cells s x t with s a face of `left` and t a face of `right`.
/// dim(s x t) = dim s + dim t and
///   d(s x t) = ds x t + (-1)^{dim s} s x dt.
/// Cells are kept sorted by (dimension, left index, right index).
class ProductCellComplex {
 public:
  struct Cell {
    std::size_t left;
    std::size_t right;
    auto operator<=>(const Cell&) const = default;
  };

  ProductCellComplex() = default;
  ProductCellComplex(SimplicialComplex left, SimplicialComplex right, std::vector<Cell> cells);

  const SimplicialComplex& left() const { return left_; }
  const SimplicialComplex& right() const { return right_; }
  const std::vector<Cell>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }

  int dimension(const Cell& c) const;
  int dimension() const;
  std::vector<std::size_t> cell_counts() const;
  std::optional<std::size_t> index_of(const Cell& c) const;

  /// Every boundary cell with nonzero coefficient is present.
  bool is_closed() const;

  /// Requires is_closed().
  ChainComplex chain_complex() const;

 private:
  SimplicialComplex left_;
  SimplicialComplex right_;
  std::vector<Cell> cells_;
};

}  // namespace nervelab
