#include "spectra/lll.hpp"

#include <stdexcept>

namespace spectra {

namespace {

Rational dot(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  Integer s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return Rational(s);
}

Rational dot_qz(const std::vector<Rational>& a, const std::vector<Integer>& b) {
  Rational s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * Rational(b[i]);
  return s;
}

Integer round_q(const Rational& q) {
  // nearest integer, ties toward zero
  Integer n = q.get_num(), d = q.get_den();
  Integer two_n = 2 * n;
  Integer r;
  if (n >= 0)
    mpz_fdiv_q(r.get_mpz_t(), Integer(two_n + d).get_mpz_t(), Integer(2 * d).get_mpz_t());
  else
    mpz_cdiv_q(r.get_mpz_t(), Integer(two_n - d).get_mpz_t(), Integer(2 * d).get_mpz_t());
  return r;
}

}  // namespace

void lll_reduce(std::vector<std::vector<Integer>>& b) {
  const size_t n = b.size();
  if (n <= 1) return;
  const Rational delta(99, 100);

  std::vector<std::vector<Rational>> mu(n, std::vector<Rational>(n, Rational(0)));
  std::vector<Rational> B(n, Rational(0));
  std::vector<std::vector<Rational>> star(n);

  size_t kmax = 0;
  {
    star[0].assign(b[0].begin(), b[0].end());
    B[0] = dot(b[0], b[0]);
    if (B[0] == 0) throw std::invalid_argument("lll_reduce: dependent rows");
  }

  auto red = [&](size_t k, size_t l) {
    if (2 * rational_abs(mu[k][l]) <= 1) return;
    Integer q = round_q(mu[k][l]);
    for (size_t i = 0; i < b[k].size(); ++i) b[k][i] -= q * b[l][i];
    mu[k][l] -= Rational(q);
    for (size_t j = 0; j < l; ++j) mu[k][j] -= Rational(q) * mu[l][j];
  };

  size_t k = 1;
  while (k < n) {
    if (k > kmax) {
      kmax = k;
      std::vector<Rational> s(b[k].begin(), b[k].end());
      for (size_t j = 0; j < k; ++j) {
        mu[k][j] = dot_qz(star[j], b[k]) / B[j];
        for (size_t i = 0; i < s.size(); ++i) s[i] -= mu[k][j] * star[j][i];
      }
      star[k] = std::move(s);
      B[k] = Rational(0);
      for (const auto& v : star[k]) B[k] += v * v;
      if (B[k] == 0) throw std::invalid_argument("lll_reduce: dependent rows");
    }
    red(k, k - 1);
    if (B[k] < (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
      std::swap(b[k], b[k - 1]);
      // standard swap updates for mu/B; star vectors are refreshed lazily
      Rational m = mu[k][k - 1];
      Rational Bnew = B[k] + m * m * B[k - 1];
      mu[k][k - 1] = m * B[k - 1] / Bnew;
      // update star[k-1], star[k]
      std::vector<Rational> old_star_km1 = star[k - 1];
      for (size_t i = 0; i < star[k].size(); ++i) {
        Rational sk = star[k][i];
        star[k - 1][i] = sk + m * old_star_km1[i];
        star[k][i] = old_star_km1[i] - mu[k][k - 1] * star[k - 1][i];
      }
      B[k] = B[k - 1] * B[k] / Bnew;
      B[k - 1] = Bnew;
      for (size_t j = 0; j + 1 < k; ++j) std::swap(mu[k][j], mu[k - 1][j]);
      for (size_t i = k + 1; i <= kmax; ++i) {
        Rational t = mu[i][k];
        mu[i][k] = mu[i][k - 1] - m * t;
        mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k];
      }
      k = k > 1 ? k - 1 : 1;
    } else {
      for (size_t l = k - 1; l-- > 0;) red(k, l);
      ++k;
    }
  }
}

}  // namespace spectra
