#include "germinv/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "germinv/errors.hpp"

namespace germinv {

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(ring_)) {}

PolyMatrix PolyMatrix::identity(RingPtr ring, std::size_t n) {
  PolyMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Polynomial::constant(ring, 1));
  return m;
}

PolyMatrix PolyMatrix::from_rows(std::vector<std::vector<Polynomial>> rows) {
  if (rows.empty() || rows[0].empty()) throw InvalidArgument("matrix needs at least one entry");
  PolyMatrix m(rows[0][0].ring(), rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw InvalidArgument("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m.set(i, j, std::move(rows[i][j]));
  }
  return m;
}

void PolyMatrix::set(std::size_t i, std::size_t j, Polynomial p) {
  if (i >= rows_ || j >= cols_) throw InvalidArgument("matrix index out of range");
  if (!p.ring()->same_as(*ring_)) throw RingMismatch("matrix entry from another ring");
  entries_[i * cols_ + j] = std::move(p);
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.entries_[j * rows_ + i] = at(i, j);
  return t;
}

PolyMatrix PolyMatrix::map_entries(const std::function<Polynomial(const Polynomial&)>& fn) const {
  std::vector<std::vector<Polynomial>> rows(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) rows[i].push_back(fn(at(i, j)));
  return from_rows(std::move(rows));
}

std::string PolyMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).to_string();
    os << "]\n";
  }
  return os.str();
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

Polynomial determinant(const PolyMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::kShapeMismatch, "determinant of a non-square matrix");
  std::size_t n = m.rows();
  std::vector<std::vector<Polynomial>> a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i].push_back(m.at(i, j));

  BigRational sign = 1;
  Polynomial prev = Polynomial::constant(m.ring(), 1);
  for (std::size_t k = 0; k < n; ++k) {
    // Pivot: the nonzero entry in column k with the fewest terms.
    std::size_t best = n;
    for (std::size_t i = k; i < n; ++i) {
      if (a[i][k].is_zero()) continue;
      if (best == n || a[i][k].size() < a[best][k].size()) best = i;
    }
    if (best == n) return Polynomial(m.ring());
    if (best != k) {
      std::swap(a[best], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial v = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        a[i][j] = prev.is_constant() ? v * (1 / prev.constant_term()) : exact_div(v, prev);
      }
      a[i][k] = Polynomial(m.ring());
    }
    prev = a[k][k];
  }
  return a[n - 1][n - 1] * sign;
}

namespace {

struct MaskPairHash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& p) const {
    return std::hash<std::uint64_t>()(p.first * 0x9E3779B97F4A7C15ULL ^ p.second);
  }
};

class MinorTable {
 public:
  MinorTable(const PolyMatrix& m, std::size_t cap) : m_(m), cap_(cap) {}

  // Minor on the rows in `rows` and the columns in `cols` (equal popcount),
  // expanded along the lowest column.
  const Polynomial& get(std::uint64_t rows, std::uint64_t cols) {
    auto key = std::make_pair(rows, cols);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    if (memo_.size() >= cap_) throw ResourceCapExceeded("minor enumeration exceeded its memo budget");
    Polynomial value(m_.ring());
    int col = __builtin_ctzll(cols);
    std::uint64_t rest = cols & (cols - 1);
    if (rest == 0) {
      value = m_.at(static_cast<std::size_t>(__builtin_ctzll(rows)), static_cast<std::size_t>(col));
    } else {
      int parity = 0;
      for (std::uint64_t r = rows; r; r &= r - 1) {
        int row = __builtin_ctzll(r);
        const Polynomial& e = m_.at(static_cast<std::size_t>(row), static_cast<std::size_t>(col));
        if (!e.is_zero()) {
          const Polynomial& sub = get(rows & ~(1ULL << row), rest);
          if (!sub.is_zero()) {
            if (parity) value -= e * sub;
            else value += e * sub;
          }
        }
        parity ^= 1;
      }
    }
    return memo_.emplace(key, std::move(value)).first->second;
  }

 private:
  const PolyMatrix& m_;
  std::size_t cap_;
  std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, Polynomial, MaskPairHash> memo_;
};

void subsets(std::size_t n, std::size_t k, std::vector<std::uint64_t>& out) {
  if (k == 0) {
    out.push_back(0);
    return;
  }
  std::uint64_t limit = 1ULL << n;
  for (std::uint64_t s = (1ULL << k) - 1; s < limit;) {
    out.push_back(s);
    std::uint64_t c = s & -s, r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
}

}  // namespace

std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t s, std::size_t max_entries) {
  if (m.rows() > 63 || m.cols() > 63) throw InvalidArgument("matrix too large for minor enumeration");
  std::vector<Polynomial> out;
  if (s == 0) {
    out.push_back(Polynomial::constant(m.ring(), 1));
    return out;
  }
  if (s > m.rows() || s > m.cols()) return out;
  std::vector<std::uint64_t> row_sets, col_sets;
  subsets(m.rows(), s, row_sets);
  subsets(m.cols(), s, col_sets);
  MinorTable table(m, max_entries);
  std::unordered_set<std::string> seen;
  for (auto cs : col_sets) {
    for (auto rs : row_sets) {
      const Polynomial& p = table.get(rs, cs);
      if (p.is_zero()) continue;
      Polynomial n = p.normalized();
      if (seen.insert(n.to_string()).second) out.push_back(std::move(n));
    }
  }
  return out;
}

PolyMatrix prune_constant_pivots(const PolyMatrix& m, std::size_t* removed) {
  std::vector<std::vector<Polynomial>> a(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i].push_back(m.at(i, j));
  std::size_t count = 0;
  while (true) {
    std::size_t pi = a.size(), pj = 0;
    for (std::size_t i = 0; i < a.size() && pi == a.size(); ++i) {
      for (std::size_t j = 0; j < a[i].size(); ++j) {
        if (!a[i][j].is_zero() && a[i][j].is_constant()) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi == a.size() || a.size() == 1 || a[0].size() == 1) break;
    BigRational inv = 1 / a[pi][pj].constant_term();
    std::vector<std::vector<Polynomial>> b;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == pi) continue;
      std::vector<Polynomial> row;
      for (std::size_t j = 0; j < a[i].size(); ++j) {
        if (j == pj) continue;
        if (a[i][pj].is_zero()) row.push_back(a[i][j]);
        else row.push_back(a[i][j] - a[i][pj] * a[pi][j] * inv);
      }
      b.push_back(std::move(row));
    }
    a = std::move(b);
    ++count;
  }
  if (removed) *removed += count;
  if (a.empty() || a[0].empty()) return PolyMatrix(m.ring(), 0, 0);
  return PolyMatrix::from_rows(std::move(a));
}

}  // namespace germinv
