#include "germinv/roots.hpp"

#include <algorithm>

namespace germinv {

namespace {

using IntPoly = std::vector<BigInt>;  // ascending coefficients

BigInt eval_mod(const IntPoly& f, const BigInt& r, const BigInt& m) {
  BigInt acc = 0;
  for (std::size_t k = f.size(); k-- > 0;) {
    acc = (acc * r + f[k]) % m;
  }
  if (acc < 0) acc += m;
  return acc;
}

IntPoly derivative(const IntPoly& f) {
  IntPoly d;
  for (std::size_t k = 1; k < f.size(); ++k) d.push_back(f[k] * static_cast<unsigned long>(k));
  return d;
}

long mod_small(const BigInt& v, long p) {
  BigInt r = v % p;
  long x = r.get_si();
  return x < 0 ? x + p : x;
}

long inv_mod(long a, long p) {
  long t = 0, nt = 1, r = p, nr = a % p;
  while (nr) {
    long q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  return t < 0 ? t + p : t;
}

// Degree of gcd(f mod p, g mod p) is zero.
bool coprime_mod(const IntPoly& f, const IntPoly& g, long p) {
  auto reduce = [&](const IntPoly& h) {
    std::vector<long> out;
    for (const auto& c : h) out.push_back(mod_small(c, p));
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
  };
  std::vector<long> a = reduce(f), b = reduce(g);
  while (!b.empty()) {
    while (a.size() >= b.size() && !a.empty()) {
      long k = a.back() * inv_mod(b.back(), p) % p;
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = ((a[i + shift] - k * b[i]) % p + p) % p;
      while (!a.empty() && a.back() == 0) a.pop_back();
    }
    std::swap(a, b);
  }
  return a.size() == 1;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

std::vector<BigRational> rational_roots(const std::vector<BigRational>& c) {
  std::vector<BigRational> roots;
  IntPoly f;
  {
    BigInt den = 1;
    for (const auto& q : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    for (const auto& q : c) f.push_back(BigRational(q * den).get_num());
  }
  while (!f.empty() && f.back() == 0) f.pop_back();
  if (f.size() <= 1) return roots;
  if (f[0] == 0) {
    roots.push_back(0);
    while (f[0] == 0) f.erase(f.begin());
  }
  if (f.size() > 1) {
    // Squarefree part via exact polynomial gcd in one variable.
    static const RingPtr R = Ring::make({"u"});
    std::vector<Polynomial::Term> terms;
    for (std::size_t k = 0; k < f.size(); ++k) terms.push_back({Monomial{static_cast<unsigned>(k)}, BigRational(f[k])});
    Polynomial sq = squarefree_part(Polynomial::from_terms(R, std::move(terms)));
    BigRational nf = sq.normalizing_factor();
    IntPoly g(static_cast<std::size_t>(sq.total_degree()) + 1, BigInt(0));
    for (const auto& t : sq.terms()) g[t.mono[0]] = BigRational(t.coeff * nf).get_num();
    f = std::move(g);
  }
  std::size_t n = f.size() - 1;
  if (n >= 1) {
    const BigInt& lead = f[n];
    BigInt height = 0;
    for (const auto& a : f) height = std::max(height, BigInt(abs(a)));
    BigInt bound = 2 * abs(lead) * (height + 1) + 1;
    IntPoly df = derivative(f);

    long p = 3;
    while (true) {
      if (is_prime(p) && mod_small(lead, p) != 0 && coprime_mod(f, df, p)) break;
      ++p;
    }
    std::vector<long> base;
    BigInt P = p;
    for (long r = 0; r < p; ++r)
      if (eval_mod(f, BigInt(r), P) == 0) base.push_back(r);
    for (long r0 : base) {
      BigInt r = r0, m = P;
      while (m <= bound) {
        BigInt m2 = m * m;
        BigInt fv = eval_mod(f, r, m2);
        BigInt dv = eval_mod(df, r, m2);
        BigInt inv;
        mpz_invert(inv.get_mpz_t(), dv.get_mpz_t(), m2.get_mpz_t());
        r = (r - fv * inv) % m2;
        if (r < 0) r += m2;
        m = m2;
      }
      BigInt N = (lead * r) % m;
      if (N < 0) N += m;
      if (2 * N > m) N -= m;
      BigRational cand(N, lead);
      cand.canonicalize();
      BigRational v = 0;
      for (std::size_t k = f.size(); k-- > 0;) v = v * cand + BigRational(f[k]);
      if (v == 0) roots.push_back(cand);
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace germinv
