#include "nervelab/product_cells.hpp"

#include <algorithm>

namespace nervelab {

namespace {

// (face index, sign) for each codimension-one face.
std::vector<std::pair<std::size_t, int>> signed_facets(const SimplicialComplex& k,
                                                       std::size_t index) {
  const Face& f = k.face(index);
  std::vector<std::pair<std::size_t, int>> out;
  if (f.size() < 2) return out;
  for (std::size_t drop = 0; drop < f.size(); ++drop) {
    Face g;
    g.reserve(f.size() - 1);
    for (std::size_t i = 0; i < f.size(); ++i)
      if (i != drop) g.push_back(f[i]);
    out.emplace_back(*k.index_of(g), drop % 2 == 0 ? 1 : -1);
  }
  return out;
}

}  // namespace

ProductCellComplex::ProductCellComplex(SimplicialComplex left, SimplicialComplex right,
                                       std::vector<Cell> cells)
    : left_(std::move(left)), right_(std::move(right)), cells_(std::move(cells)) {
  for (const Cell& c : cells_)
    if (c.left >= left_.num_faces() || c.right >= right_.num_faces())
      throw Error("product cell refers to a missing face");
  std::sort(cells_.begin(), cells_.end(), [&](const Cell& a, const Cell& b) {
    const int da = dimension(a), db = dimension(b);
    return da != db ? da < db : a < b;
  });
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

int ProductCellComplex::dimension(const Cell& c) const {
  return static_cast<int>(left_.face(c.left).size() + right_.face(c.right).size()) - 2;
}

int ProductCellComplex::dimension() const {
  return cells_.empty() ? -1 : dimension(cells_.back());
}

std::vector<std::size_t> ProductCellComplex::cell_counts() const {
  std::vector<std::size_t> counts(static_cast<std::size_t>(dimension() + 1), 0);
  for (const Cell& c : cells_) ++counts[static_cast<std::size_t>(dimension(c))];
  return counts;
}

std::optional<std::size_t> ProductCellComplex::index_of(const Cell& c) const {
  const int d = dimension(c);
  auto it = std::lower_bound(cells_.begin(), cells_.end(), c, [&](const Cell& a, const Cell& b) {
    const int da = dimension(a);
    return da != d ? da < d : a < b;
  });
  if (it == cells_.end() || !(*it == c)) return std::nullopt;
  return static_cast<std::size_t>(it - cells_.begin());
}

bool ProductCellComplex::is_closed() const {
  for (const Cell& c : cells_) {
    for (auto [l, s] : signed_facets(left_, c.left))
      if (!index_of({l, c.right})) return false;
    for (auto [r, s] : signed_facets(right_, c.right))
      if (!index_of({c.left, r})) return false;
  }
  return true;
}

ChainComplex ProductCellComplex::chain_complex() const {
  if (!is_closed()) throw Error("product cell complex is not closed under boundary");
  ChainComplex out;
  const auto counts = cell_counts();
  // First global index of each dimension.
  std::vector<std::size_t> offset(counts.size() + 1, 0);
  for (std::size_t d = 0; d < counts.size(); ++d) offset[d + 1] = offset[d] + counts[d];

  for (std::size_t d = 0; d < counts.size(); ++d) {
    out.cells.push_back(counts[d]);
    SparseMatrix m(d == 0 ? 0 : counts[d - 1], counts[d]);
    if (d > 0) {
      for (std::size_t j = 0; j < counts[d]; ++j) {
        const Cell& c = cells_[offset[d] + j];
        const int left_dim = static_cast<int>(left_.face(c.left).size()) - 1;
        auto& col = m.columns[j];
        for (auto [l, s] : signed_facets(left_, c.left))
          col.emplace_back(static_cast<std::uint32_t>(*index_of({l, c.right}) - offset[d - 1]), s);
        const int twist = left_dim % 2 == 0 ? 1 : -1;
        for (auto [r, s] : signed_facets(right_, c.right))
          col.emplace_back(static_cast<std::uint32_t>(*index_of({c.left, r}) - offset[d - 1]),
                           twist * s);
        std::sort(col.begin(), col.end());
      }
    }
    out.boundary.push_back(std::move(m));
  }
  return out;
}

}  // namespace nervelab
