#include "nervelab/snf.hpp"

#include <algorithm>
#include <stdexcept>

#include "nervelab/complex.hpp"

namespace nervelab {

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<std::int64_t>>& dense) {
  SparseMatrix m(dense.size(), dense.empty() ? 0 : dense.front().size());
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i].size() != m.cols) throw Error("ragged matrix");
    for (std::size_t j = 0; j < m.cols; ++j)
      if (dense[i][j] != 0) m.columns[j].emplace_back(static_cast<std::uint32_t>(i), dense[i][j]);
  }
  return m;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns) n += c.size();
  return n;
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols != b.rows) throw Error("matrix dimension mismatch in product");
  SparseMatrix out(a.rows, b.cols);
  std::vector<std::int64_t> acc(a.rows, 0);
  std::vector<std::uint32_t> touched;
  for (std::size_t j = 0; j < b.cols; ++j) {
    touched.clear();
    for (auto [k, bv] : b.columns[j]) {
      for (auto [i, av] : a.columns[k]) {
        if (acc[i] == 0) touched.push_back(i);
        acc[i] += av * bv;
      }
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (std::uint32_t i : touched) {
      if (acc[i] != 0) out.columns[j].emplace_back(i, acc[i]);
      acc[i] = 0;
    }
  }
  return out;
}

bool is_zero(const SparseMatrix& m) {
  return std::all_of(m.columns.begin(), m.columns.end(),
                     [](const auto& c) { return c.empty(); });
}

namespace {

struct IntegerRing {
  using value_type = BigInt;
  static bool is_zero(const BigInt& x) { return x.is_zero(); }
  static bool is_unit(const BigInt& x) { return x == 1 || x == -1; }
  // a / u for a unit u.
  static BigInt quotient(const BigInt& a, const BigInt& u) { return u == 1 ? a : BigInt(-a); }
  static BigInt sub_mul(const BigInt& a, const BigInt& f, const BigInt& b) { return a - f * b; }
  static BigInt negate(const BigInt& b) { return -b; }
  static BigInt mul(const BigInt& f, const BigInt& b) { return f * b; }
};

struct PrimeField {
  using value_type = std::uint32_t;
  std::uint64_t p;

  static bool is_zero(std::uint32_t x) { return x == 0; }
  static bool is_unit(std::uint32_t x) { return x != 0; }
  std::uint32_t inverse(std::uint32_t u) const {
    std::uint64_t result = 1, base = u, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
  }
  std::uint32_t quotient(std::uint32_t a, std::uint32_t u) const {
    return static_cast<std::uint32_t>(a * std::uint64_t{inverse(u)} % p);
  }
  std::uint32_t sub_mul(std::uint32_t a, std::uint32_t f, std::uint32_t b) const {
    return static_cast<std::uint32_t>((a + p - f * std::uint64_t{b} % p) % p);
  }
  std::uint32_t mul(std::uint32_t f, std::uint32_t b) const {
    return static_cast<std::uint32_t>(f * std::uint64_t{b} % p);
  }
  std::uint32_t negate(std::uint32_t b) const {
    return static_cast<std::uint32_t>((p - b) % p);
  }
};

// Eliminates unit pivots from a set of sparse lines. Each pivot removes one
// line and one position and contributes an invariant factor of 1.
template <class Ring>
class UnitEliminator {
 public:
  using T = typename Ring::value_type;
  struct Entry {
    std::uint32_t pos;
    T val;
  };
  using Line = std::vector<Entry>;

  UnitEliminator(Ring ring, std::vector<Line> lines, std::size_t positions)
      : ring_(std::move(ring)), lines_(std::move(lines)), dead_(lines_.size(), 0),
        occ_(positions) {
    for (std::uint32_t r = 0; r < lines_.size(); ++r)
      for (const Entry& e : lines_[r]) occ_[e.pos].push_back(r);
  }

  std::size_t run() {
    std::vector<std::uint32_t> pending(occ_.size());
    for (std::uint32_t i = 0; i < pending.size(); ++i) pending[i] = i;
    std::size_t pivots = 0;
    bool progress = true;
    std::vector<std::uint32_t> candidates;
    while (progress && !pending.empty()) {
      progress = false;
      std::vector<std::uint32_t> deferred;
      for (std::uint32_t pos : pending) {
        live_lines_at(pos, candidates);
        if (candidates.empty()) continue;
        std::optional<std::uint32_t> pivot;
        for (std::uint32_t r : candidates) {
          if (!ring_.is_unit(value_at(r, pos))) continue;
          if (!pivot || lines_[r].size() < lines_[*pivot].size()) pivot = r;
        }
        if (!pivot) {
          deferred.push_back(pos);
          continue;
        }
        const T pv = value_at(*pivot, pos);
        for (std::uint32_t r : candidates) {
          if (r == *pivot) continue;
          eliminate(r, *pivot, ring_.quotient(value_at(r, pos), pv));
        }
        dead_[*pivot] = 1;
        Line().swap(lines_[*pivot]);
        ++pivots;
        progress = true;
      }
      pending.swap(deferred);
    }
    return pivots;
  }

  std::vector<Line> remaining() const {
    std::vector<Line> out;
    for (std::size_t r = 0; r < lines_.size(); ++r)
      if (!dead_[r] && !lines_[r].empty()) out.push_back(lines_[r]);
    return out;
  }

 private:
  const Entry* find(std::uint32_t r, std::uint32_t pos) const {
    const Line& line = lines_[r];
    auto it = std::lower_bound(line.begin(), line.end(), pos,
                               [](const Entry& e, std::uint32_t p) { return e.pos < p; });
    return it != line.end() && it->pos == pos ? &*it : nullptr;
  }

  const T& value_at(std::uint32_t r, std::uint32_t pos) const { return find(r, pos)->val; }

  void live_lines_at(std::uint32_t pos, std::vector<std::uint32_t>& out) {
    auto& occ = occ_[pos];
    std::sort(occ.begin(), occ.end());
    occ.erase(std::unique(occ.begin(), occ.end()), occ.end());
    occ.erase(std::remove_if(occ.begin(), occ.end(),
                             [&](std::uint32_t r) { return dead_[r] || !find(r, pos); }),
              occ.end());
    out = occ;
  }

  // line[r] -= f * line[p]
  void eliminate(std::uint32_t r, std::uint32_t p, const T& f) {
    const Line& src = lines_[p];
    Line& dst = lines_[r];
    Line merged;
    merged.reserve(dst.size() + src.size());
    std::size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
      if (j == src.size() || (i < dst.size() && dst[i].pos < src[j].pos)) {
        merged.push_back(std::move(dst[i++]));
      } else if (i == dst.size() || src[j].pos < dst[i].pos) {
        T v = ring_.negate(ring_.mul(f, src[j].val));
        if (!ring_.is_zero(v)) {
          occ_[src[j].pos].push_back(r);
          merged.push_back({src[j].pos, std::move(v)});
        }
        ++j;
      } else {
        T v = ring_.sub_mul(dst[i].val, f, src[j].val);
        if (!ring_.is_zero(v)) merged.push_back({dst[i].pos, std::move(v)});
        ++i;
        ++j;
      }
    }
    dst.swap(merged);
  }

  Ring ring_;
  std::vector<Line> lines_;
  std::vector<char> dead_;
  std::vector<std::vector<std::uint32_t>> occ_;
};

using IntLine = UnitEliminator<IntegerRing>::Line;

std::vector<BigInt> dense_invariant_factors(std::vector<std::vector<BigInt>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a.front().size() : 0;
  std::vector<BigInt> factors;

  auto find_min = [&](std::size_t t) -> std::optional<std::pair<std::size_t, std::size_t>> {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    BigInt best_abs;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (a[i][j].is_zero()) continue;
        BigInt v = abs(a[i][j]);
        if (!best || v < best_abs) {
          best = {i, j};
          best_abs = std::move(v);
        }
      }
    return best;
  };

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    auto where = find_min(t);
    if (!where) break;
    while (true) {
      auto [pi, pj] = *where;
      std::swap(a[t], a[pi]);
      for (auto& row : a) std::swap(row[t], row[pj]);
      const BigInt pivot = a[t][t];

      bool leftover = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t].is_zero()) continue;
        BigInt q = a[i][t] / pivot;
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        leftover = leftover || !a[i][t].is_zero();
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j].is_zero()) continue;
        BigInt q = a[t][j] / pivot;
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        leftover = leftover || !a[t][j].is_zero();
      }
      if (!leftover) {
        // Row and column are clear; enforce divisibility of the rest.
        for (std::size_t i = t + 1; i < rows && !leftover; ++i)
          for (std::size_t j = t + 1; j < cols; ++j)
            if (BigInt(a[i][j] % pivot) != 0) {
              for (std::size_t c = t; c < cols; ++c) a[t][c] += a[i][c];
              leftover = true;
              break;
            }
        if (!leftover) break;
      }
      where = find_min(t);
    }
    factors.push_back(abs(a[t][t]));
  }
  return factors;
}

}  // namespace

SNFResult smith_normal_form(const SparseMatrix& m) {
  // Columns act as the eliminated lines; SNF is invariant under transposition.
  std::vector<IntLine> lines(m.cols);
  for (std::size_t j = 0; j < m.cols; ++j) {
    lines[j].reserve(m.columns[j].size());
    for (auto [i, v] : m.columns[j]) lines[j].push_back({i, BigInt(v)});
  }
  UnitEliminator<IntegerRing> elim(IntegerRing{}, std::move(lines), m.rows);
  const std::size_t units = elim.run();
  auto rest = elim.remaining();

  std::vector<std::uint32_t> positions;
  for (const auto& line : rest)
    for (const auto& e : line) positions.push_back(e.pos);
  std::sort(positions.begin(), positions.end());
  positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
  std::vector<std::vector<BigInt>> dense(rest.size(), std::vector<BigInt>(positions.size()));
  for (std::size_t r = 0; r < rest.size(); ++r)
    for (const auto& e : rest[r]) {
      auto c = std::lower_bound(positions.begin(), positions.end(), e.pos) - positions.begin();
      dense[r][static_cast<std::size_t>(c)] = e.val;
    }

  SNFResult out;
  out.invariant_factors.assign(units, BigInt(1));
  for (auto& f : dense_invariant_factors(std::move(dense)))
    out.invariant_factors.push_back(std::move(f));
  out.rank = out.invariant_factors.size();
  return out;
}

SNFResult smith_normal_form(const std::vector<std::vector<BigInt>>& dense) {
  SNFResult out;
  out.invariant_factors = dense_invariant_factors(dense);
  out.rank = out.invariant_factors.size();
  return out;
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::size_t rank_mod_p(const SparseMatrix& m, std::uint32_t p) {
  if (!is_prime(p)) throw Error("modulus " + std::to_string(p) + " is not prime");
  using Line = UnitEliminator<PrimeField>::Line;
  std::vector<Line> lines(m.cols);
  for (std::size_t j = 0; j < m.cols; ++j)
    for (auto [i, v] : m.columns[j]) {
      auto r = static_cast<std::uint32_t>(((v % static_cast<std::int64_t>(p)) + p) % p);
      if (r != 0) lines[j].push_back({i, r});
    }
  UnitEliminator<PrimeField> elim(PrimeField{p}, std::move(lines), m.rows);
  return elim.run();
}

}  // namespace nervelab
