#include "germinv/germ.hpp"

#include <numeric>

#include "germinv/errors.hpp"
#include "germinv/parse.hpp"

namespace germinv {

MapGerm::MapGerm(Polynomial f1, Polynomial f2, Polynomial f3) : f_{std::move(f1), std::move(f2), std::move(f3)} {
  bool nonzero = false;
  for (auto& p : f_) {
    if (!p.ring()->same_as(*rings::source())) p = change_ring(p, rings::source());
    if (p.constant_term() != 0) throw InvalidArgument("germ component does not vanish at the origin: " + p.to_string());
    nonzero = nonzero || !p.is_zero();
  }
  if (!nonzero) throw InvalidArgument("germ has no nonzero component");
}

MapGerm MapGerm::parse(const std::string& text) {
  auto f = parse_triple(text, rings::source());
  return MapGerm(f[0], f[1], f[2]);
}

std::string MapGerm::to_string() const {
  return "(" + f_[0].to_string() + ", " + f_[1].to_string() + ", " + f_[2].to_string() + ")";
}

Unfolding::Unfolding(Polynomial F1, Polynomial F2, Polynomial F3) : F_{std::move(F1), std::move(F2), std::move(F3)} {
  origin_preserving_ = true;
  for (auto& p : F_) {
    if (!p.ring()->same_as(*rings::source_param())) p = change_ring(p, rings::source_param());
    Polynomial at_origin = substitute(p, {{"x", Polynomial(rings::source_param())}, {"y", Polynomial(rings::source_param())}},
                                      rings::source_param());
    if (!at_origin.is_zero()) origin_preserving_ = false;
  }
}

Unfolding Unfolding::parse(const std::string& text) {
  auto f = parse_triple(text, rings::source_param());
  return Unfolding(f[0], f[1], f[2]);
}

Unfolding Unfolding::constant(const MapGerm& f) {
  return Unfolding(change_ring(f[0], rings::source_param()), change_ring(f[1], rings::source_param()),
                   change_ring(f[2], rings::source_param()));
}

bool Unfolding::depends_on_parameter() const {
  for (const auto& p : F_)
    if (p.involves(2)) return true;
  return false;
}

std::string Unfolding::to_string() const {
  return "(" + F_[0].to_string() + ", " + F_[1].to_string() + ", " + F_[2].to_string() + ")";
}

MapGerm specialize(const Unfolding& F, const BigRational& t0) {
  if (!F.origin_preserving()) throw InvalidArgument("unfolding is not origin preserving");
  std::map<std::string, Polynomial> bind{{"t", Polynomial::constant(rings::source(), t0)}};
  return MapGerm(substitute(F[0], bind, rings::source()), substitute(F[1], bind, rings::source()),
                 substitute(F[2], bind, rings::source()));
}

PolyMatrix jacobian(const MapGerm& f) {
  std::vector<std::vector<Polynomial>> rows;
  for (std::size_t i = 0; i < 3; ++i) rows.push_back({f[i].derivative(0), f[i].derivative(1)});
  return PolyMatrix::from_rows(std::move(rows));
}

int corank(const MapGerm& f) {
  // Rank of the 3x2 matrix of linear coefficients.
  std::vector<std::array<BigRational, 2>> rows;
  for (std::size_t i = 0; i < 3; ++i) {
    rows.push_back({f[i].coefficient(Monomial::variable(0)), f[i].coefficient(Monomial::variable(1))});
  }
  int rank = 0;
  for (std::size_t col = 0; col < 2; ++col) {
    std::size_t piv = rows.size();
    for (std::size_t r = static_cast<std::size_t>(rank); r < rows.size(); ++r) {
      if (rows[r][col] != 0) {
        piv = r;
        break;
      }
    }
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[static_cast<std::size_t>(rank)]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || rows[r][col] == 0) continue;
      BigRational k = rows[r][col] / rows[static_cast<std::size_t>(rank)][col];
      for (std::size_t c = 0; c < 2; ++c) rows[r][c] -= k * rows[static_cast<std::size_t>(rank)][c];
    }
    ++rank;
  }
  return 2 - rank;
}

std::vector<Polynomial> ramification_generators(const MapGerm& f) {
  PolyMatrix j = jacobian(f);
  std::vector<Polynomial> out;
  const std::size_t pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (auto& p : pairs) {
    out.push_back(j.at(p[0], 0) * j.at(p[1], 1) - j.at(p[0], 1) * j.at(p[1], 0));
  }
  return out;
}

QuotientDimension crosscap_count(const MapGerm& f) {
  IdealPresentation rf(rings::source(), ramification_generators(f), TermOrder::local(2));
  if (rf.generators().empty()) return QuotientDimension::infinite();
  return local_quotient_dim(rf);
}

std::optional<WeightData> detect_quasihomogeneous(const MapGerm& f) {
  // Every pair of terms of one component gives (a-a')w1 + (b-b')w2 = 0.
  std::optional<std::pair<long, long>> ratio;  // w1 : w2
  for (std::size_t i = 0; i < 3; ++i) {
    if (f[i].is_zero()) return std::nullopt;
    const auto& terms = f[i].terms();
    for (std::size_t k = 1; k < terms.size(); ++k) {
      long p = static_cast<long>(terms[k].mono[0]) - static_cast<long>(terms[0].mono[0]);
      long q = static_cast<long>(terms[k].mono[1]) - static_cast<long>(terms[0].mono[1]);
      // p*w1 + q*w2 = 0 with positive weights needs p, q of opposite signs.
      if (p == 0 || q == 0 || (p > 0) == (q > 0)) return std::nullopt;
      long w1 = std::abs(q), w2 = std::abs(p), g = std::gcd(w1, w2);
      std::pair<long, long> r{w1 / g, w2 / g};
      if (ratio && *ratio != r) return std::nullopt;
      ratio = r;
    }
  }
  WeightData w;
  if (ratio) {
    w.w1 = static_cast<unsigned>(ratio->first);
    w.w2 = static_cast<unsigned>(ratio->second);
  }
  for (std::size_t i = 0; i < 3; ++i) {
    const Monomial& m = f[i].terms()[0].mono;
    w.d[i] = m[0] * w.w1 + m[1] * w.w2;
  }
  return w;
}

}  // namespace germinv
