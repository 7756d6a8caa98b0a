#pragma once

// Test-only brute-force model of G(32,27) built straight from the published
// semidirect-product description and character table. It shares no code with
// the qslab engine and is used to produce the frozen expected values that the
// engine is checked against.

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace oracle {

struct El {
  std::array<int, 4> n{};
  int q = 0;
  auto operator<=>(const El&) const = default;
};

// Phi_1, rows as printed; acts on column vectors.
inline constexpr int kPhi[4][4] = {
    {1, 0, 0, 0}, {0, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}};

inline std::array<int, 4> apply_phi(const std::array<int, 4>& v) {
  std::array<int, 4> out{};
  for (int r = 0; r < 4; ++r) {
    int s = 0;
    for (int c = 0; c < 4; ++c) s += kPhi[r][c] * v[c];
    out[r] = s % 2;
  }
  return out;
}

inline El mul(const El& a, const El& b) {
  El out;
  const auto bn = a.q ? apply_phi(b.n) : b.n;
  for (int i = 0; i < 4; ++i) out.n[i] = (a.n[i] + bn[i]) % 2;
  out.q = (a.q + b.q) % 2;
  return out;
}

inline El identity() { return El{}; }

inline El gen(int i) {
  El e;
  if (i == 1)
    e.q = 1;
  else
    e.n[i - 2] = 1;
  return e;
}

// "g1g4g5", "g2*g3", or "1".
inline El word(std::string_view w) {
  El e;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 'g') e = mul(e, gen(w[i + 1] - '0'));
  }
  return e;
}

inline std::vector<El> all() {
  std::vector<El> out;
  for (int bits = 0; bits < 32; ++bits) {
    El e;
    for (int i = 0; i < 4; ++i) e.n[i] = (bits >> (4 - i)) & 1;
    e.q = bits & 1;
    out.push_back(e);
  }
  return out;
}

inline El inv(const El& a) {
  for (const auto& b : all())
    if (mul(a, b) == identity()) return b;
  throw std::logic_error("no inverse");
}

inline El power(const El& a, int k) {
  El out;
  for (int i = 0; i < k; ++i) out = mul(out, a);
  return out;
}

inline int order(const El& a) {
  El x = a;
  int d = 1;
  while (!(x == identity())) {
    x = mul(x, a);
    ++d;
  }
  return d;
}

inline std::set<El> closure(const std::vector<El>& gens) {
  std::set<El> s{identity()};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<El> cur(s.begin(), s.end());
    for (const auto& x : cur)
      for (const auto& g : gens)
        if (s.insert(mul(x, g)).second) grew = true;
  }
  return s;
}

inline std::set<El> conj_class(const El& x) {
  std::set<El> s;
  for (const auto& g : all()) s.insert(mul(mul(g, x), inv(g)));
  return s;
}

// Published class list, in the published order.
inline const std::array<std::vector<std::string>, 14> kClasses = {{
    {"1"},
    {"g5"},
    {"g4"},
    {"g4g5"},
    {"g2g3g4", "g2g3g5"},
    {"g2", "g2g4"},
    {"g2g3", "g2g3g4g5"},
    {"g3g4", "g3g4g5"},
    {"g2g5", "g2g4g5"},
    {"g3", "g3g5"},
    {"g1", "g1g4", "g1g5", "g1g4g5"},
    {"g1g2g3", "g1g2g3g4", "g1g2g3g5", "g1g2g3g4g5"},
    {"g1g2", "g1g2g4", "g1g2g5", "g1g2g4g5"},
    {"g1g3", "g1g3g4", "g1g3g5", "g1g3g4g5"},
}};

inline const std::array<std::string, 14> kTableHeaders = {
    "1",    "g5",   "g4",   "g4g5", "g2g3g5", "g2",     "g2g3",
    "g3g4", "g2g5", "g3",   "g1",   "g1g2g3", "g1g2",   "g1g3"};

inline constexpr int kClassSizes[14] = {1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 4, 4, 4, 4};

// Published character table, columns in the published class order.
inline constexpr int kTable[14][14] = {
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    {1, 1, 1, 1, -1, 1, -1, -1, 1, -1, 1, -1, 1, -1},
    {1, 1, 1, 1, 1, -1, 1, -1, -1, -1, 1, 1, -1, -1},
    {1, 1, 1, 1, -1, -1, -1, 1, -1, 1, 1, -1, -1, 1},
    {1, 1, 1, 1, -1, 1, -1, -1, 1, -1, -1, 1, -1, 1},
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, -1, -1, -1, -1},
    {1, 1, 1, 1, -1, -1, -1, 1, -1, 1, -1, 1, 1, -1},
    {1, 1, 1, 1, 1, -1, 1, -1, -1, -1, -1, -1, 1, 1},
    {2, -2, 2, -2, 0, 2, 0, 0, -2, 0, 0, 0, 0, 0},
    {2, 2, -2, -2, 0, 0, 0, -2, 0, 2, 0, 0, 0, 0},
    {2, -2, -2, 2, 2, 0, -2, 0, 0, 0, 0, 0, 0, 0},
    {2, 2, -2, -2, 0, 0, 0, 2, 0, -2, 0, 0, 0, 0},
    {2, -2, 2, -2, 0, -2, 0, 0, 2, 0, 0, 0, 0, 0},
    {2, -2, -2, 2, -2, 0, 2, 0, 0, 0, 0, 0, 0, 0},
};

inline int published_class_of(const El& x) {
  for (int c = 0; c < 14; ++c)
    for (const auto& w : kClasses[c])
      if (word(w) == x) return c;
  throw std::logic_error("element not in any published class");
}

using Vals = std::array<long long, 14>;

// (1/|G|) sum |K| f g, for real-valued class functions on published classes.
// Returns numerator over 32 to stay exact.
inline long long inner32(const Vals& f, const Vals& g) {
  long long s = 0;
  for (int c = 0; c < 14; ++c) s += kClassSizes[c] * f[c] * g[c];
  return s;
}

inline Vals row(int chi /* 1-based */) {
  Vals v{};
  for (int c = 0; c < 14; ++c) v[c] = kTable[chi - 1][c];
  return v;
}

inline Vals times(const Vals& a, const Vals& b) {
  Vals v{};
  for (int c = 0; c < 14; ++c) v[c] = a[c] * b[c];
  return v;
}

inline Vals plus(const Vals& a, const Vals& b) {
  Vals v{};
  for (int c = 0; c < 14; ++c) v[c] = a[c] + b[c];
  return v;
}

inline Vals minus(const Vals& a, const Vals& b) {
  Vals v{};
  for (int c = 0; c < 14; ++c) v[c] = a[c] - b[c];
  return v;
}

inline const std::vector<std::string> kT1 = {"g1g4g5", "g2g3g4g5", "g2g4g5", "g1g3g4"};
inline const std::vector<std::string> kT2 = {"g2g3g4", "g2", "g1g2g3g5", "g1g2"};

// Stabilizer set by direct definition: all g t^j g^-1.
inline std::set<El> sigma(const std::vector<std::string>& t) {
  std::set<El> s;
  for (const auto& w : t) {
    const El x = word(w);
    for (int j = 0; j < order(x); ++j)
      for (const auto& g : all()) s.insert(mul(mul(g, power(x, j)), inv(g)));
  }
  return s;
}

// Fixed points of g: for each entry t, count x in G with x g x^-1 in <t>,
// divided by |<t>| (one right coset <t>x per point of the fibre).
inline int fixed_points(const std::vector<std::string>& t, const El& g) {
  int total = 0;
  for (const auto& w : t) {
    const El x = word(w);
    const auto cyc = closure({x});
    int hits = 0;
    for (const auto& y : all())
      if (cyc.count(mul(mul(y, g), inv(y)))) ++hits;
    total += hits / static_cast<int>(cyc.size());
  }
  return total;
}

}  // namespace oracle
