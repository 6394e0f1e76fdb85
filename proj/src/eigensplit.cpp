#include "nlie/eigensplit.hpp"

#include <algorithm>
#include <map>

namespace nlie {

namespace {

// ---- dense univariate polynomials over Q, ascending coefficients ----

using Poly = std::vector<Rat>;

void poly_trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); i++)
    for (std::size_t j = 0; j < b.size(); j++) r[i + j].addmul(a[i], b[j]);
  poly_trim(r);
  return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r = a;
  if (b.size() > r.size()) r.resize(b.size());
  for (std::size_t i = 0; i < b.size(); i++) r[i] -= b[i];
  poly_trim(r);
  return r;
}

// Division with remainder; divisor must be nonzero. The top coefficient of
// rem cancels exactly each round, so rem shrinks and the loop terminates.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  if (b.empty()) throw std::domain_error("poly division by zero");
  Poly rem = a, quot;
  if (rem.size() >= b.size()) quot.resize(rem.size() - b.size() + 1);
  Rat lead_inv = b.back().inverse();
  while (rem.size() >= b.size()) {
    std::size_t shift = rem.size() - b.size();
    Rat f = rem.back() * lead_inv;
    quot[shift] = f;
    for (std::size_t i = 0; i < b.size(); i++) rem[shift + i].submul(f, b[i]);
    poly_trim(rem);
  }
  poly_trim(quot);
  return {quot, rem};
}

// Extended Euclid: returns (u, v) with u*a + v*b = gcd, gcd normalized monic.
// Callers only use it on coprime pairs, where gcd = 1.
std::pair<Poly, Poly> poly_bezout(const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b;
  Poly u0 = {Rat(1)}, u1 = {};
  Poly v0 = {}, v1 = {Rat(1)};
  while (!r1.empty()) {
    auto [q, r2] = poly_divmod(r0, r1);
    Poly u2 = poly_sub(u0, poly_mul(q, u1));
    Poly v2 = poly_sub(v0, poly_mul(q, v1));
    r0 = std::move(r1); r1 = std::move(r2);
    u0 = std::move(u1); u1 = std::move(u2);
    v0 = std::move(v1); v1 = std::move(v2);
  }
  Rat lead_inv = r0.back().inverse();
  for (auto& c : u0) c *= lead_inv;
  for (auto& c : v0) c *= lead_inv;
  return {u0, v0};
}

Matrix poly_eval_matrix(const Poly& p, const Matrix& a) {
  const std::size_t n = a.rows();
  Matrix r(n, n);
  if (p.empty()) return r;
  for (std::size_t i = 0; i < n; i++) r.at(i, i) = p.back();
  for (std::size_t k = p.size() - 1; k-- > 0;) {
    r = r * a;
    for (std::size_t i = 0; i < n; i++) r.at(i, i) += p[k];
  }
  return r;
}

// ---- integer factorization, for root candidates only ----

mpz_class pollard_rho(const mpz_class& n) {
  // Brent's cycle variant; deterministic parameter sweep. n is odd,
  // composite, > 1.
  for (unsigned long c = 1;; c++) {
    mpz_class x = 2, y = 2, d = 1;
    mpz_class diff;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      diff = x - y;
      if (diff < 0) diff = -diff;
      if (diff == 0) break;  // cycle collapsed, retry with next c
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != 1 && d != n) return d;
  }
}

void factor_into(mpz_class n, std::map<mpz_class, unsigned>& out) {
  if (n <= 1) return;
  while (mpz_even_p(n.get_mpz_t())) {
    out[2]++;
    n /= 2;
  }
  // small trial division first, keeps rho off easy prey
  for (unsigned long p = 3; p <= 99991 && n > 1; p += 2) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out[p]++;
      n /= p;
    }
    mpz_class p2 = mpz_class(p) * p;
    if (p2 > n) break;
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
    out[n]++;
    return;
  }
  mpz_class d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

// All positive divisors of |c0| not exceeding `bound`, ascending.
std::vector<mpz_class> bounded_divisors(const mpz_class& c0,
                                        const mpz_class& bound) {
  std::map<mpz_class, unsigned> f;
  mpz_class n = c0 < 0 ? mpz_class(-c0) : c0;
  factor_into(n, f);
  std::vector<mpz_class> divs = {1};
  for (const auto& [p, e] : f) {
    std::size_t base = divs.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; k++) {
      pk *= p;
      if (pk > bound) break;
      for (std::size_t i = 0; i < base; i++) {
        mpz_class d = divs[i] * pk;
        if (d <= bound) divs.push_back(d);
      }
    }
  }
  std::sort(divs.begin(), divs.end());
  divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
  return divs;
}

mpz_class eval_int_poly(const std::vector<mpz_class>& p, const mpz_class& x) {
  mpz_class r = 0;
  for (std::size_t k = p.size(); k-- > 0;) r = r * x + p[k];
  return r;
}

// Integer roots (with multiplicity) of a monic integer polynomial.
std::vector<std::pair<mpz_class, unsigned>> integer_roots(
    std::vector<mpz_class> p) {
  std::vector<std::pair<mpz_class, unsigned>> roots;

  unsigned zero_mult = 0;
  while (p.size() > 1 && p.front() == 0) {
    p.erase(p.begin());
    zero_mult++;
  }
  if (zero_mult) roots.emplace_back(0, zero_mult);
  if (p.size() <= 1) return roots;

  // Fujiwara-style bound: every root z has |z| <= 2*max_k |c_{n-k}|^(1/k).
  const std::size_t deg = p.size() - 1;
  mpz_class bound = 1;
  for (std::size_t k = 1; k <= deg; k++) {
    mpz_class c = p[deg - k];
    if (c < 0) c = -c;
    mpz_class rt;
    mpz_root(rt.get_mpz_t(), c.get_mpz_t(), k);
    rt += 1;
    if (rt > bound) bound = rt;
  }
  bound *= 2;

  std::vector<mpz_class> cands = bounded_divisors(p.front(), bound);
  for (const auto& d : cands) {
    for (int sign = 0; sign < 2; sign++) {
      mpz_class r = sign ? mpz_class(-d) : d;
      unsigned mult = 0;
      while (p.size() > 1 && eval_int_poly(p, r) == 0) {
        // deflate by (x - r)
        std::vector<mpz_class> q(p.size() - 1);
        mpz_class carry = 0;
        for (std::size_t k = p.size() - 1; k >= 1; k--) {
          q[k - 1] = p[k] + carry;
          carry = q[k - 1] * r;
        }
        p = std::move(q);
        mult++;
      }
      if (mult) roots.emplace_back(r, mult);
      if (p.size() <= 1) return roots;
    }
  }
  return roots;
}

}  // namespace

Vec char_poly(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("char_poly of non-square");
  const std::size_t n = a.rows();
  // Faddeev-LeVerrier: exact over Q, no pivoting decisions to make.
  Vec c(n + 1);
  c[n] = Rat(1);
  Matrix m = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; k++) {
    Matrix am = a * m;
    c[n - k] = -(am.trace() / Rat(static_cast<long>(k)));
    m = am;
    for (std::size_t i = 0; i < n; i++) m.at(i, i) += c[n - k];
  }
  return c;
}

EigenSplit rational_eigenprojection(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("eigensplit of non-square");
  const std::size_t n = a.rows();
  Vec p = char_poly(a);

  // Substitute x = y/M with M the lcm of coefficient denominators: the
  // result y^n + sum c_{n-k} M^k y^{n-k} is monic with integer coefficients,
  // and rational roots of p are exactly (integer roots)/M.
  mpz_class m_scale = 1;
  for (const auto& c : p)
    mpz_lcm(m_scale.get_mpz_t(), m_scale.get_mpz_t(), c.den().get_mpz_t());
  std::vector<mpz_class> pz(n + 1);
  mpz_class mk = 1;
  for (std::size_t k = 0; k <= n; k++) {
    // coefficient of y^(n-k) is c[n-k] * M^k, integral by construction
    mpq_class scaled = p[n - k].raw() * mpq_class(mk);
    pz[n - k] = scaled.get_num();
    mk *= m_scale;
  }

  auto roots = integer_roots(pz);
  std::sort(roots.begin(), roots.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });

  EigenSplit out;
  out.residual = Matrix(n, n);
  std::size_t rational_part = 0;
  for (const auto& [rz, mult] : roots) rational_part += mult;
  out.residual_dim = n - rational_part;

  Poly full(p.begin(), p.end());
  Matrix sum(n, n);
  for (const auto& [rz, mult] : roots) {
    Rat r(mpq_class(rz) / mpq_class(m_scale));
    // f = (x - r)^mult, g = charpoly / f; u f + v g = 1; projection = (v g)(a)
    Poly f = {Rat(1)};
    Poly lin = {-r, Rat(1)};
    for (unsigned k = 0; k < mult; k++) f = poly_mul(f, lin);
    auto [g, rem] = poly_divmod(full, f);
    if (!rem.empty()) throw std::logic_error("charpoly factor did not divide");
    auto [u, v] = poly_bezout(f, g);
    Matrix proj = poly_eval_matrix(poly_mul(v, g), a);
    sum = sum + proj;
    out.parts.push_back({r, mult, proj});
  }
  if (out.residual_dim > 0) {
    out.residual = Matrix::identity(n) - sum;
  }
  return out;
}

}  // namespace nlie
