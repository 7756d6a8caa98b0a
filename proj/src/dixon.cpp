#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qslab/characters.hpp"

namespace qslab {

namespace {

using u64 = std::uint64_t;
using Vec = std::vector<u64>;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) {
  if (a % p == 0) throw std::domain_error("inverse of zero mod p");
  return powmod(a, p - 2, p);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Basis of {c : A c = 0} for an rows x cols matrix over F_p.
std::vector<Vec> nullspace(std::vector<Vec> a, std::size_t cols, u64 p) {
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
    std::size_t piv = row;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[row]);
    const u64 s = invmod(a[row][c], p);
    for (auto& x : a[row]) x = mulmod(x, s, p);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][c] == 0) continue;
      const u64 f = a[r][c];
      for (std::size_t k = 0; k < cols; ++k) a[r][k] = (a[r][k] + p - mulmod(f, a[row][k], p)) % p;
    }
    pivot_col.push_back(c);
    ++row;
  }
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end()) continue;
    Vec v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = (p - a[r][free]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

u64 primitive_root_of_order(u64 e, u64 p) {
  for (u64 g = 2; g < p; ++g) {
    const u64 z = powmod(g, (p - 1) / e, p);
    bool primitive = true;
    for (u64 d = 1; d < e && primitive; ++d)
      if (e % d == 0 && powmod(z, d, p) == 1) primitive = false;
    if (primitive) return z;
  }
  throw std::logic_error("no primitive root of the exponent's order");
}

}  // namespace

std::uint64_t dixon_prime(const FiniteGroup& g) {
  const auto n = static_cast<u64>(g.order());
  u64 root = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (root * root < n) ++root;
  while (root > 0 && (root - 1) * (root - 1) >= n) --root;
  const u64 e = g.exponent();
  for (u64 p = 2 * root + 1;; ++p)
    if (p % e == 1 && is_prime(p)) return p;
}

CharacterTable compute_character_table(const GroupPtr& group) {
  const auto& g = *group;
  const std::size_t r = g.class_count();
  const u64 p = dixon_prime(g);
  const auto& classes = g.classes();

  // coeff[(i * r + j) * r + k] = a_{ijk}
  std::vector<u64> coeff(r * r * r, 0);
  for (std::size_t k = 0; k < r; ++k) {
    const auto z = classes[k].representative;
    for (std::size_t x = 0; x < g.order(); ++x) {
      const auto y = g.mul(g.inv(x), z);
      ++coeff[(g.class_of(x) * r + g.class_of(y)) * r + k];
    }
  }

  // Common eigenspaces of M_j, (M_j)_{ik} = a_{ijk}, acting on columns.
  std::vector<std::vector<Vec>> spaces(1);
  for (std::size_t i = 0; i < r; ++i) {
    Vec v(r, 0);
    v[i] = 1;
    spaces[0].push_back(std::move(v));
  }
  for (std::size_t j = 1; j < r; ++j) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const auto& s) { return s.size() == 1; })) break;
    std::vector<std::vector<Vec>> next;
    for (auto& space : spaces) {
      const std::size_t d = space.size();
      if (d == 1) {
        next.push_back(std::move(space));
        continue;
      }
      // MB = M_j applied to each basis vector.
      std::vector<Vec> mb;
      for (const auto& b : space) {
        Vec out(r, 0);
        for (std::size_t i = 0; i < r; ++i) {
          u64 s = 0;
          for (std::size_t k = 0; k < r; ++k) s = (s + coeff[(i * r + j) * r + k] % p * b[k]) % p;
          out[i] = s;
        }
        mb.push_back(std::move(out));
      }
      std::size_t found = 0;
      for (u64 lambda = 0; lambda < p && found < d; ++lambda) {
        std::vector<Vec> a(r, Vec(d, 0));
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t c = 0; c < d; ++c)
            a[i][c] = (mb[c][i] + p - mulmod(lambda, space[c][i], p)) % p;
        const auto kernel = nullspace(std::move(a), d, p);
        if (kernel.empty()) continue;
        std::vector<Vec> sub;
        for (const auto& c : kernel) {
          Vec v(r, 0);
          for (std::size_t t = 0; t < d; ++t)
            for (std::size_t i = 0; i < r; ++i) v[i] = (v[i] + mulmod(c[t], space[t][i], p)) % p;
          sub.push_back(std::move(v));
        }
        found += sub.size();
        next.push_back(std::move(sub));
      }
      if (found != d) throw std::logic_error("class matrix is not diagonalisable mod p");
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r) throw std::logic_error("class matrices do not separate characters");

  const u64 e = g.exponent();
  const u64 z = primitive_root_of_order(e, p);
  const u64 n = g.order();
  u64 max_degree = 1;
  while ((max_degree + 1) * (max_degree + 1) <= n) ++max_degree;

  std::vector<ClassFunction> rows;
  for (const auto& space : spaces) {
    Vec w = space.front();
    if (w[0] == 0) throw std::logic_error("central character vanishes at the identity");
    const u64 s0 = invmod(w[0], p);
    for (auto& x : w) x = mulmod(x, s0, p);

    u64 sum = 0;
    for (std::size_t i = 0; i < r; ++i)
      sum = (sum + mulmod(mulmod(w[i], w[g.inverse_class(i)], p), invmod(classes[i].size() % p, p), p)) % p;
    const u64 deg_sq = mulmod(n % p, invmod(sum, p), p);
    u64 deg = 0;
    for (u64 d = 1; d <= max_degree; ++d)
      if (d * d % p == deg_sq && n % d == 0) {
        deg = d;
        break;
      }
    if (deg == 0) throw std::logic_error("no degree matches mod p");

    Vec chi(r);
    for (std::size_t i = 0; i < r; ++i)
      chi[i] = mulmod(mulmod(w[i], deg, p), invmod(classes[i].size() % p, p), p);

    std::vector<Cyclotomic> values;
    for (std::size_t i = 0; i < r; ++i) {
      const u64 o = classes[i].representative_order;
      const u64 step = e / o;
      const u64 inv_o = invmod(o % p, p);
      std::vector<Rational> powers(e, Rational(0));
      u64 total = 0;
      for (u64 l = 0; l < o; ++l) {
        u64 m = 0;
        for (u64 k = 0; k < o; ++k) {
          const u64 exp = (e - (step * l * k) % e) % e;
          m = (m + mulmod(chi[g.power_class(i, k)], powmod(z, exp, p), p)) % p;
        }
        m = mulmod(m, inv_o, p);
        if (m > deg) throw std::logic_error("eigenvalue multiplicity exceeds the degree");
        powers[step * l] = Rational(static_cast<std::int64_t>(m));
        total += m;
      }
      if (total != deg) throw std::logic_error("eigenvalue multiplicities do not sum to the degree");
      values.push_back(Cyclotomic::from_powers(static_cast<unsigned>(e), std::move(powers)));
    }
    rows.emplace_back(group, std::move(values));
  }

  std::sort(rows.begin(), rows.end(), [](const ClassFunction& a, const ClassFunction& b) {
    const auto da = a[0].to_integer();
    const auto db = b[0].to_integer();
    if (da != db) return da < db;
    return a.values() > b.values();
  });
  CharacterTable table(group, std::move(rows));
  if (auto err = table.check_orthogonality()) throw std::logic_error("character table: " + *err);
  return table;
}

}  // namespace qslab
