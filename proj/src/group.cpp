#include "qslab/group.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "qslab/errors.hpp"

namespace qslab {

namespace {

std::uint32_t low_mask(std::size_t bits) {
  return bits == 0 ? 0u : static_cast<std::uint32_t>((std::uint64_t{1} << bits) - 1);
}

bool parity(std::uint32_t v) { return (std::popcount(v) & 1) != 0; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

// ---------------------------------------------------------------- Gf2Matrix

Gf2Matrix::Gf2Matrix(std::vector<std::uint32_t> rows) : rows_(std::move(rows)) {
  const std::uint32_t mask = low_mask(rows_.size());
  for (auto r : rows_) {
    if ((r & ~mask) != 0)
      throw MalformedSpec("matrix row has entries beyond its dimension");
  }
}

Gf2Matrix Gf2Matrix::identity(std::size_t dim) {
  std::vector<std::uint32_t> rows(dim);
  for (std::size_t i = 0; i < dim; ++i) rows[i] = std::uint32_t{1} << i;
  return Gf2Matrix(std::move(rows));
}

bool Gf2Matrix::at(std::size_t row, std::size_t col) const {
  return ((rows_.at(row) >> col) & 1u) != 0;
}

std::uint32_t Gf2Matrix::apply(std::uint32_t v) const {
  std::uint32_t out = 0;
  for (std::size_t r = 0; r < rows_.size(); ++r)
    if (parity(rows_[r] & v)) out |= std::uint32_t{1} << r;
  return out;
}

Gf2Matrix Gf2Matrix::operator*(const Gf2Matrix& rhs) const {
  if (dim() != rhs.dim()) throw std::invalid_argument("matrix dimension mismatch");
  // Row r of A*B is the sum of the rows of B selected by row r of A.
  std::vector<std::uint32_t> out(dim(), 0);
  for (std::size_t r = 0; r < dim(); ++r)
    for (std::size_t c = 0; c < dim(); ++c)
      if (at(r, c)) out[r] ^= rhs.rows_[c];
  return Gf2Matrix(std::move(out));
}

Gf2Matrix Gf2Matrix::transposed() const {
  std::vector<std::uint32_t> out(dim(), 0);
  for (std::size_t r = 0; r < dim(); ++r)
    for (std::size_t c = 0; c < dim(); ++c)
      if (at(r, c)) out[c] |= std::uint32_t{1} << r;
  return Gf2Matrix(std::move(out));
}

bool Gf2Matrix::invertible() const {
  std::vector<std::uint32_t> m = rows_;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < dim() && rank < dim(); ++col) {
    const std::uint32_t bit = std::uint32_t{1} << col;
    auto pivot = std::find_if(m.begin() + static_cast<std::ptrdiff_t>(rank), m.end(),
                              [bit](std::uint32_t r) { return (r & bit) != 0; });
    if (pivot == m.end()) continue;
    std::iter_swap(m.begin() + static_cast<std::ptrdiff_t>(rank), pivot);
    for (std::size_t r = 0; r < m.size(); ++r)
      if (r != rank && (m[r] & bit)) m[r] ^= m[rank];
    ++rank;
  }
  return rank == dim();
}

// ----------------------------------------------------------------- GroupSpec

GroupSpec g32_27_spec() {
  GroupSpec spec;
  spec.n_rank = 4;
  spec.q_rank = 1;
  // Rows 1000 / 0100 / 1010 / 0101; bit c of a row is column c.
  spec.action = {Gf2Matrix({0b0001, 0b0010, 0b0101, 0b1010})};
  spec.generators = {
      {"g1", 0b0000, 1}, {"g2", 0b0001, 0}, {"g3", 0b0010, 0},
      {"g4", 0b0100, 0}, {"g5", 0b1000, 0},
  };
  return spec;
}

void validate_spec(const GroupSpec& spec) {
  if (spec.n_rank + spec.q_rank > kMaxRank)
    throw MalformedSpec("group order exceeds 2^" + std::to_string(kMaxRank));
  if (spec.action.size() != spec.q_rank)
    throw MalformedSpec("expected " + std::to_string(spec.q_rank) +
                        " action matrices, got " + std::to_string(spec.action.size()));
  const auto id = Gf2Matrix::identity(spec.n_rank);
  for (std::size_t i = 0; i < spec.action.size(); ++i) {
    const auto& a = spec.action[i];
    const std::string which = "action matrix q" + std::to_string(i + 1);
    if (a.dim() != spec.n_rank)
      throw MalformedSpec(which + " has dimension " + std::to_string(a.dim()) +
                          ", expected " + std::to_string(spec.n_rank));
    if (!a.invertible()) throw MalformedSpec(which + " is not invertible");
    if (!(a * a == id)) throw MalformedSpec(which + " does not square to the identity");
    for (std::size_t j = 0; j < i; ++j)
      if (!(a * spec.action[j] == spec.action[j] * a))
        throw MalformedSpec(which + " does not commute with q" + std::to_string(j + 1));
  }
  std::unordered_set<std::string> names;
  for (const auto& g : spec.generators) {
    if (g.name.empty() || g.name == "1")
      throw MalformedSpec("invalid generator name '" + g.name + "'");
    if (!names.insert(g.name).second)
      throw MalformedSpec("duplicate generator name '" + g.name + "'");
    if ((g.n & ~low_mask(spec.n_rank)) || (g.q & ~low_mask(spec.q_rank)))
      throw MalformedSpec("generator '" + g.name + "' has coordinates outside N x Q");
  }
}

// ------------------------------------------------------------------ Subgroup

Subgroup::Subgroup(GroupPtr parent, ElementSet elements,
                   std::vector<GroupElement> generators)
    : parent_(std::move(parent)),
      elements_(elements),
      generators_(std::move(generators)) {}

bool Subgroup::contains(const GroupElement& g) const {
  return elements_.test(parent_->index_of(g));
}

std::vector<std::size_t> Subgroup::indices() const {
  std::vector<std::size_t> out;
  out.reserve(order());
  for (std::size_t i = 0; i < parent_->order(); ++i)
    if (elements_.test(i)) out.push_back(i);
  return out;
}

// --------------------------------------------------------------- FiniteGroup

FiniteGroup::FiniteGroup(Token, GroupSpec spec) : spec_(std::move(spec)) {
  const std::size_t k = spec_.n_rank;
  const std::size_t m = spec_.q_rank;
  const std::size_t n = std::size_t{1} << (k + m);

  elements_.resize(n);
  for (std::size_t idx = 0; idx < n; ++idx) {
    GroupElement g;
    for (std::size_t i = 0; i < k; ++i)
      if ((idx >> (k + m - 1 - i)) & 1u) g.n |= std::uint32_t{1} << i;
    for (std::size_t j = 0; j < m; ++j)
      if ((idx >> (m - 1 - j)) & 1u) g.q |= std::uint32_t{1} << j;
    elements_[idx] = g;
  }

  // Phi_q for every q, as a product of the commuting basis images.
  std::vector<Gf2Matrix> phi(std::size_t{1} << m, Gf2Matrix::identity(k));
  for (std::size_t q = 1; q < phi.size(); ++q) {
    const auto low = static_cast<std::size_t>(std::countr_zero(q));
    phi[q] = spec_.action[low] * phi[q & (q - 1)];
  }

  table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto& x = elements_[a];
    for (std::size_t b = 0; b < n; ++b) {
      const auto& y = elements_[b];
      table_[a * n + b] = static_cast<std::uint16_t>(
          index_from_coords(x.n ^ phi[x.q].apply(y.n), x.q ^ y.q));
    }
  }

  inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (mul(a, b) == 0) {
        inverse_[a] = static_cast<std::uint16_t>(b);
        break;
      }

  orders_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t x = a;
    std::size_t d = 1;
    while (x != 0) {
      x = mul(x, a);
      ++d;
    }
    orders_[a] = static_cast<std::uint16_t>(d);
    exponent_ = std::lcm(exponent_, d);
  }

  if (spec_.generators.empty()) {
    // Q basis first, then N basis: g1..gm, g(m+1)..g(m+k).
    std::size_t label = 1;
    for (std::size_t j = 0; j < m; ++j)
      spec_.generators.push_back({"g" + std::to_string(label++), 0, std::uint32_t{1} << j});
    for (std::size_t i = 0; i < k; ++i)
      spec_.generators.push_back({"g" + std::to_string(label++), std::uint32_t{1} << i, 0});
  }
  for (const auto& g : spec_.generators)
    generator_index_.push_back(index_from_coords(g.n, g.q));

  // Normal forms: every subset product of the generators in declared order.
  const std::size_t s = generator_index_.size();
  if (s > kMaxRank || (std::size_t{1} << s) != n)
    throw MalformedSpec("generators must give every element a unique normal form (need " +
                        std::to_string(k + m) + " generators)");
  normal_form_.assign(n, 0);
  std::vector<bool> hit(n, false);
  for (std::uint32_t subset = 0; subset < n; ++subset) {
    std::size_t x = 0;
    for (std::size_t i = 0; i < s; ++i)
      if ((subset >> i) & 1u) x = mul(x, generator_index_[i]);
    if (hit[x])
      throw MalformedSpec("generators do not give unique normal forms");
    hit[x] = true;
    normal_form_[x] = subset;
  }

  build_classes();
}

GroupPtr build_group(GroupSpec spec) {
  validate_spec(spec);
  return std::make_shared<const FiniteGroup>(FiniteGroup::Token{}, std::move(spec));
}

std::size_t FiniteGroup::index_from_coords(std::uint32_t n, std::uint32_t q) const {
  const std::size_t k = spec_.n_rank;
  const std::size_t m = spec_.q_rank;
  std::size_t idx = 0;
  for (std::size_t i = 0; i < k; ++i)
    if ((n >> i) & 1u) idx |= std::size_t{1} << (k + m - 1 - i);
  for (std::size_t j = 0; j < m; ++j)
    if ((q >> j) & 1u) idx |= std::size_t{1} << (m - 1 - j);
  return idx;
}

std::size_t FiniteGroup::index_of(const GroupElement& g) const {
  if ((g.n & ~low_mask(spec_.n_rank)) || (g.q & ~low_mask(spec_.q_rank)))
    throw GroupMismatch("element does not belong to this group");
  return index_from_coords(g.n, g.q);
}

std::size_t FiniteGroup::power(std::size_t a, std::size_t k) const {
  std::size_t x = 0;
  for (std::size_t i = 0; i < k % element_order(a); ++i) x = mul(x, a);
  return x;
}

std::size_t FiniteGroup::conjugate(std::size_t x, std::size_t g) const {
  return mul(mul(g, x), inv(g));
}

GroupElement FiniteGroup::multiply(const GroupElement& a, const GroupElement& b) const {
  return elements_[mul(index_of(a), index_of(b))];
}

GroupElement FiniteGroup::inverse(const GroupElement& a) const {
  return elements_[inv(index_of(a))];
}

std::size_t FiniteGroup::element_order(const GroupElement& g) const {
  return orders_[index_of(g)];
}

std::optional<GroupElement> FiniteGroup::find_generator(std::string_view name) const {
  for (std::size_t i = 0; i < spec_.generators.size(); ++i)
    if (spec_.generators[i].name == name) return elements_[generator_index_[i]];
  return std::nullopt;
}

GroupElement FiniteGroup::generator(std::string_view name) const {
  auto g = find_generator(name);
  if (!g) throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
  return *g;
}

GroupElement FiniteGroup::evaluate(const Word& word) const {
  std::size_t x = 0;
  for (const auto& token : word) {
    if (token == "1") continue;
    x = mul(x, index_of(generator(token)));
  }
  return elements_[x];
}

GroupElement FiniteGroup::evaluate(std::string_view text) const {
  Word word;
  while (true) {
    const auto star = text.find('*');
    auto token = trim(text.substr(0, star));
    if (token.empty()) throw std::invalid_argument("empty factor in word");
    word.emplace_back(token);
    if (star == std::string_view::npos) break;
    text.remove_prefix(star + 1);
  }
  return evaluate(word);
}

Word FiniteGroup::normal_form(const GroupElement& g) const {
  const auto subset = normal_form_[index_of(g)];
  Word out;
  for (std::size_t i = 0; i < spec_.generators.size(); ++i)
    if ((subset >> i) & 1u) out.push_back(spec_.generators[i].name);
  return out;
}

std::string FiniteGroup::format(const GroupElement& g) const {
  const auto word = normal_form(g);
  if (word.empty()) return "1";
  std::string out = word.front();
  for (std::size_t i = 1; i < word.size(); ++i) out += "*" + word[i];
  return out;
}

void FiniteGroup::build_classes() {
  const std::size_t n = order();
  std::vector<bool> done(n, false);
  for (std::size_t x = 0; x < n; ++x) {
    if (done[x]) continue;
    ConjugacyClass cls;
    std::vector<bool> in(n, false);
    for (std::size_t g = 0; g < n; ++g) in[conjugate(x, g)] = true;
    for (std::size_t y = 0; y < n; ++y)
      if (in[y]) {
        cls.members.push_back(y);
        done[y] = true;
      }
    cls.representative = cls.members.front();
    cls.representative_order = orders_[cls.representative];
    classes_.push_back(std::move(cls));
  }
  std::sort(classes_.begin(), classes_.end(), [](const auto& a, const auto& b) {
    return std::tuple(a.representative_order, a.size(), a.representative) <
           std::tuple(b.representative_order, b.size(), b.representative);
  });
  class_of_.assign(n, 0);
  for (std::size_t c = 0; c < classes_.size(); ++c)
    for (auto y : classes_[c].members) class_of_[y] = c;
}

std::size_t FiniteGroup::inverse_class(std::size_t cls) const {
  return class_of_[inv(classes_.at(cls).representative)];
}

std::size_t FiniteGroup::power_class(std::size_t cls, std::size_t k) const {
  return class_of_[power(classes_.at(cls).representative, k)];
}

ElementSet FiniteGroup::close(ElementSet seed, std::span<const std::size_t> gens) const {
  seed.set(0);
  std::deque<std::size_t> queue;
  for (std::size_t i = 0; i < order(); ++i)
    if (seed.test(i)) queue.push_back(i);
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (auto g : gens) {
      const auto y = mul(x, g);
      if (!seed.test(y)) {
        seed.set(y);
        queue.push_back(y);
      }
    }
  }
  return seed;
}

Subgroup FiniteGroup::subgroup_closure(std::span<const GroupElement> gens) const {
  std::vector<std::size_t> idx;
  idx.reserve(gens.size());
  for (const auto& g : gens) idx.push_back(index_of(g));
  return Subgroup(shared_from_this(), close(ElementSet{}, idx),
                  std::vector<GroupElement>(gens.begin(), gens.end()));
}

Subgroup FiniteGroup::subgroup_from_words(std::span<const Word> gens) const {
  std::vector<GroupElement> elems;
  elems.reserve(gens.size());
  for (const auto& w : gens) elems.push_back(evaluate(w));
  return subgroup_closure(elems);
}

Subgroup FiniteGroup::whole() const {
  std::vector<GroupElement> gens;
  for (auto i : generator_index_) gens.push_back(elements_[i]);
  return subgroup_closure(gens);
}

Subgroup FiniteGroup::trivial() const { return subgroup_closure({}); }

Subgroup FiniteGroup::cyclic(const GroupElement& g) const {
  return subgroup_closure(std::span<const GroupElement>(&g, 1));
}

void FiniteGroup::require_same(const Subgroup& h) const {
  if (h.parent_ptr().get() != this)
    throw GroupMismatch("subgroup belongs to a different group");
}

std::vector<GroupElement> FiniteGroup::right_transversal(const Subgroup& h) const {
  require_same(h);
  const auto members = h.indices();
  std::vector<bool> covered(order(), false);
  std::vector<GroupElement> reps;
  for (std::size_t x = 0; x < order(); ++x) {
    if (covered[x]) continue;
    reps.push_back(elements_[x]);
    for (auto y : members) covered[mul(y, x)] = true;
  }
  return reps;
}

bool FiniteGroup::is_normal(const Subgroup& h) const {
  require_same(h);
  for (std::size_t x = 0; x < order(); ++x) {
    if (!h.contains(x)) continue;
    for (std::size_t g = 0; g < order(); ++g)
      if (!h.contains(conjugate(x, g))) return false;
  }
  return true;
}

Subgroup FiniteGroup::center() const {
  ElementSet set;
  std::vector<GroupElement> gens;
  for (const auto& cls : classes_) {
    if (cls.size() != 1) continue;
    const auto x = cls.representative;
    set.set(x);
  }
  // Greedy witness: keep an element only if it is not yet generated.
  std::vector<std::size_t> idx;
  ElementSet span_so_far = close(ElementSet{}, idx);
  for (std::size_t x = 0; x < order(); ++x) {
    if (!set.test(x) || span_so_far.test(x)) continue;
    idx.push_back(x);
    gens.push_back(elements_[x]);
    span_so_far = close(ElementSet{}, idx);
  }
  return Subgroup(shared_from_this(), set, std::move(gens));
}

std::vector<Subgroup> FiniteGroup::enumerate_subgroups(std::size_t bound) const {
  if (order() > bound)
    throw EnumerationBound("subgroup enumeration refused: |G| = " +
                           std::to_string(order()) + " exceeds bound " +
                           std::to_string(bound));
  struct Node {
    ElementSet set;
    std::vector<std::size_t> witness;
  };
  std::unordered_set<ElementSet> seen;
  std::vector<Node> all;
  std::vector<Node> level{{close(ElementSet{}, {}), {}}};
  seen.insert(level.front().set);
  // Breadth-first: a subgroup first met at depth d needs exactly d generators.
  while (!level.empty()) {
    std::vector<Node> next;
    for (const auto& node : level) {
      for (std::size_t x = 0; x < order(); ++x) {
        if (node.set.test(x)) continue;
        auto witness = node.witness;
        witness.push_back(x);
        auto set = close(node.set, witness);
        if (seen.insert(set).second) next.push_back({set, std::move(witness)});
      }
    }
    for (auto& node : level) all.push_back(std::move(node));
    level = std::move(next);
  }
  std::vector<Subgroup> out;
  out.reserve(all.size());
  const auto self = shared_from_this();
  for (const auto& node : all) {
    std::vector<GroupElement> gens;
    for (auto x : node.witness) gens.push_back(elements_[x]);
    out.emplace_back(self, node.set, std::move(gens));
  }
  return out;
}

std::vector<Subgroup> FiniteGroup::enumerate_normal_subgroups(std::size_t bound) const {
  auto all = enumerate_subgroups(bound);
  std::vector<Subgroup> out;
  for (auto& h : all)
    if (is_normal(h)) out.push_back(std::move(h));
  return out;
}

}  // namespace qslab
