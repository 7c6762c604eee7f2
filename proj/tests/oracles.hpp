// Independent reference computations used to check the engine. None of them
// calls the standard-basis code.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "germinv/polynomial.hpp"

namespace oracle {

using germinv::BigRational;
using germinv::Monomial;
using germinv::Polynomial;

inline constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

inline std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mul_mod(a, a))
    if (e & 1) r = mul_mod(r, a);
  return r;
}

inline std::uint64_t inv_mod(std::uint64_t a) { return pow_mod(a, kPrime - 2); }

inline std::uint64_t reduce(const germinv::BigInt& z) {
  germinv::BigInt r = z % germinv::BigInt(std::to_string(kPrime));
  if (r < 0) r += germinv::BigInt(std::to_string(kPrime));
  return std::stoull(r.get_str());
}

inline std::uint64_t reduce(const BigRational& q) { return mul_mod(reduce(q.get_num()), inv_mod(reduce(q.get_den()))); }

// Exponent vectors of total degree < n in `vars` variables.
inline std::vector<std::vector<unsigned>> monomials_below(std::size_t vars, unsigned n) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> e(vars, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == vars) {
      for (unsigned k = 0; k <= left; ++k) {
        e[i] = k;
        out.push_back(e);
      }
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  if (n > 0) rec(rec, 0, n - 1);
  return out;
}

// dim of Q[v] / (I + m^n) by rank of the truncated multiples m * g, modulo a
// 61-bit prime.
inline std::size_t truncated_quotient_dim(const std::vector<Polynomial>& gens, unsigned n) {
  if (gens.empty()) return 0;
  const std::size_t vars = gens.front().ring()->size();
  auto monos = monomials_below(vars, n);
  auto index = [&](const std::vector<unsigned>& e) -> std::size_t {
    for (std::size_t i = 0; i < monos.size(); ++i)
      if (monos[i] == e) return i;
    return monos.size();
  };
  const std::size_t cols = monos.size();
  std::vector<std::vector<std::uint64_t>> pivots(cols);
  std::size_t rank = 0;
  for (const auto& g : gens) {
    for (const auto& m : monos) {
      std::vector<std::uint64_t> row(cols, 0);
      bool any = false;
      for (const auto& t : g.terms()) {
        std::vector<unsigned> e(vars);
        unsigned deg = 0;
        for (std::size_t v = 0; v < vars; ++v) {
          e[v] = m[v] + t.mono[v];
          deg += e[v];
        }
        if (deg >= n) continue;
        std::size_t c = index(e);
        row[c] = (row[c] + reduce(t.coeff)) % kPrime;
        any = true;
      }
      if (!any) continue;
      for (std::size_t c = 0; c < cols; ++c) {
        if (row[c] == 0) continue;
        if (pivots[c].empty()) {
          std::uint64_t inv = inv_mod(row[c]);
          for (auto& v : row) v = mul_mod(v, inv);
          pivots[c] = std::move(row);
          ++rank;
          break;
        }
        std::uint64_t factor = row[c];
        const auto& p = pivots[c];
        for (std::size_t k = c; k < cols; ++k) {
          if (p[k] == 0) continue;
          row[k] = (row[k] + kPrime - mul_mod(factor, p[k])) % kPrime;
        }
      }
    }
  }
  return cols - rank;
}

// Local quotient dimension: the truncated dimensions increase strictly until
// m^n lies in the ideal, then stay constant. nullopt when they pass `cap`.
inline std::optional<std::size_t> local_dim(const std::vector<Polynomial>& gens, std::size_t cap = 80) {
  std::size_t prev = truncated_quotient_dim(gens, 1);
  for (unsigned n = 2;; ++n) {
    std::size_t cur = truncated_quotient_dim(gens, n);
    if (cur == prev) return cur;
    if (cur > cap) return std::nullopt;
    prev = cur;
  }
}

// Dense univariate polynomials over Q, lowest degree first.
using Dense = std::vector<BigRational>;

inline void trim(Dense& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::pair<Dense, Dense> long_division(Dense a, Dense b) {
  trim(a);
  trim(b);
  Dense q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, BigRational(0));
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    BigRational c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

// Monic gcd by the Euclidean remainder sequence.
inline Dense euclid_gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Dense r = long_division(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    BigRational lc = a.back();
    for (auto& c : a) c /= lc;
  }
  return a;
}

inline Dense to_dense(const Polynomial& p) {
  Dense d;
  for (const auto& t : p.terms()) {
    unsigned e = t.mono[0];
    if (d.size() <= e) d.resize(e + 1, BigRational(0));
    d[e] += t.coeff;
  }
  trim(d);
  return d;
}

}  // namespace oracle
