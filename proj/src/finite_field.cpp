#include "endotriv/finite_field.hpp"

#include <numeric>

#include "endotriv/group.hpp"

namespace endotriv {

namespace {

// Multiply the polynomial encoded by `a` by x modulo the monic f of
// degree m (coefficients of x^0..x^{m-1} in `f`).
std::uint32_t times_x(std::uint32_t a, const std::vector<std::uint32_t>& f, std::uint64_t p, unsigned m) {
  std::vector<std::uint32_t> d(m + 1, 0);
  for (unsigned i = 0; i < m; ++i) {
    d[i + 1] = a % p;
    a /= static_cast<std::uint32_t>(p);
  }
  const std::uint32_t top = d[m];
  for (unsigned i = 0; i < m; ++i)
    d[i] = static_cast<std::uint32_t>((d[i] + (p - f[i]) * top) % p);
  std::uint32_t out = 0;
  for (unsigned i = m; i-- > 0;) out = out * static_cast<std::uint32_t>(p) + d[i];
  return out;
}

}  // namespace

FiniteField::FiniteField(std::uint64_t q) : q_(q) {
  std::uint64_t p = 0;
  unsigned m = 0;
  if (!prime_power(q, &p, &m) || q > 65536) throw InputError("field size must be a prime power up to 65536");
  p_ = p;
  m_ = m;
  exp_.assign(q - 1, 0);
  log_.assign(q, 0);
  // Search monic polynomials for one whose root x generates F_q^x.
  std::vector<std::uint32_t> f(m, 0);
  for (std::uint64_t code = 0; code < q; ++code) {
    std::uint64_t c = code;
    for (unsigned i = 0; i < m; ++i) {
      f[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    if (f[0] == 0) continue;
    std::vector<char> seen(q, 0);
    std::uint32_t cur = 1;
    bool ok = true;
    for (std::uint64_t k = 0; k < q - 1; ++k) {
      if (seen[cur]) {
        ok = false;
        break;
      }
      seen[cur] = 1;
      exp_[k] = cur;
      log_[cur] = static_cast<std::uint32_t>(k);
      // For a prime field f[0] is itself the candidate generator.
      cur = m == 1 ? static_cast<std::uint32_t>((static_cast<std::uint64_t>(cur) * f[0]) % p) : times_x(cur, f, p, m);
    }
    if (ok && cur == 1) break;
    if (code + 1 == q) throw InputError("no primitive polynomial found");
  }
  if (q <= 1024) {
    add_table_.resize(q * q);
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b) {
        std::uint32_t x = a, y = b, out = 0, scale = 1;
        for (unsigned i = 0; i < m; ++i) {
          out += static_cast<std::uint32_t>(((x % p) + (y % p)) % p) * scale;
          x /= static_cast<std::uint32_t>(p);
          y /= static_cast<std::uint32_t>(p);
          scale *= static_cast<std::uint32_t>(p);
        }
        add_table_[a * q + b] = static_cast<std::uint16_t>(out);
      }
  }
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const {
  if (!add_table_.empty()) return add_table_[a * q_ + b];
  Elem out = 0, scale = 1;
  for (unsigned i = 0; i < m_; ++i) {
    out += static_cast<Elem>(((a % p_) + (b % p_)) % p_) * scale;
    a /= static_cast<Elem>(p_);
    b /= static_cast<Elem>(p_);
    scale *= static_cast<Elem>(p_);
  }
  return out;
}

FiniteField::Elem FiniteField::neg(Elem a) const {
  Elem out = 0, scale = 1;
  for (unsigned i = 0; i < m_; ++i) {
    out += static_cast<Elem>((p_ - a % p_) % p_) * scale;
    a /= static_cast<Elem>(p_);
    scale *= static_cast<Elem>(p_);
  }
  return out;
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw MathError("division by zero in finite field");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FiniteField::Elem FiniteField::unit(std::int64_t k) const {
  const std::int64_t n = static_cast<std::int64_t>(q_ - 1);
  std::int64_t r = k % n;
  if (r < 0) r += n;
  return exp_[static_cast<std::size_t>(r)];
}

bool Character::is_trivial() const {
  const std::int64_t n = static_cast<std::int64_t>(q - 1);
  for (auto e : exps)
    if (e % n != 0) return false;
  return true;
}

std::int64_t Character::exponent(const IntVec& x) const {
  const std::int64_t n = static_cast<std::int64_t>(q - 1);
  std::int64_t s = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) s = (s + (x[i] % n) * (exps[i] % n)) % n;
  return s < 0 ? s + n : s;
}

std::vector<Character> all_characters(const AbGroup& a, std::uint64_t q) {
  if (!a.is_finite()) throw MathError("characters need a finite group");
  const std::int64_t n = static_cast<std::int64_t>(q - 1);
  std::vector<std::int64_t> g(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) g[i] = std::gcd(a.modulus(i), n);
  std::vector<Character> out;
  std::vector<std::int64_t> idx(a.rank(), 0);
  while (true) {
    Character c;
    c.q = q;
    for (std::size_t i = 0; i < idx.size(); ++i) c.exps.push_back(idx[i] * (n / g[i]));
    out.push_back(std::move(c));
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == g[i]) idx[i++] = 0;
    if (i == idx.size()) break;
  }
  return out;
}

std::uint64_t auto_field(const AbGroup& a, std::uint64_t p) {
  const std::uint64_t e = static_cast<std::uint64_t>(a.is_finite() ? a.exponent() : 1);
  std::uint64_t q = p;
  for (int m = 1; m <= 16; ++m, q *= p)
    if ((q - 1) % e == 0) return q;
  throw MathError("no small field realizes every character");
}

}  // namespace endotriv
