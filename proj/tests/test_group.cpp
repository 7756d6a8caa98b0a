#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <tuple>

#include "qslab/errors.hpp"
#include "qslab/fixtures.hpp"
#include "support.hpp"

using namespace qslab;

namespace {

GroupSpec z2_spec() {
  GroupSpec s;
  s.n_rank = 1;
  s.q_rank = 0;
  return s;
}

std::set<oracle::El> oracle_set(const FiniteGroup& g, const std::vector<std::size_t>& idx) {
  std::set<oracle::El> out;
  for (auto i : idx) out.insert(support::to_oracle(g.element(i)));
  return out;
}

}  // namespace

TEST(Group, OrderAndExponent) {
  const auto& g = *support::group();
  EXPECT_EQ(g.order(), 32u);
  EXPECT_EQ(g.exponent(), 4u);
  EXPECT_FALSE(g.is_abelian());
  EXPECT_EQ(g.spec(), g32_27_spec());
}

TEST(Group, TrivialQuotientRank) {
  const auto g = build_group(z2_spec());
  EXPECT_EQ(g->order(), 2u);
  EXPECT_TRUE(g->is_abelian());
  EXPECT_EQ(g->class_count(), 2u);
}

TEST(Group, MalformedSpecs) {
  auto s = g32_27_spec();
  s.action[0] = Gf2Matrix({0b0001, 0b0001, 0b0100, 0b1000});
  EXPECT_THROW(build_group(s), MalformedSpec);

  s = g32_27_spec();
  s.action[0] = Gf2Matrix({0b0010, 0b0100, 0b1000, 0b0001});  // invertible, order 4
  EXPECT_THROW(build_group(s), MalformedSpec);

  s = g32_27_spec();
  s.q_rank = 2;
  s.action.push_back(Gf2Matrix({0b0010, 0b0001, 0b0100, 0b1000}));  // does not commute with q1
  s.generators.clear();
  EXPECT_THROW(build_group(s), MalformedSpec);

  s = g32_27_spec();
  s.generators[1].name = s.generators[0].name;
  EXPECT_THROW(build_group(s), MalformedSpec);
}

TEST(Group, Relations) {
  const auto& g = *support::group();
  const auto g1 = g.generator("g1");
  const auto g1i = g.inverse(g1);
  EXPECT_EQ(g.multiply(g.multiply(g1i, g.generator("g2")), g1), g.evaluate("g2*g4"));
  EXPECT_EQ(g.multiply(g.multiply(g1i, g.generator("g3")), g1), g.evaluate("g3*g5"));
}

TEST(Group, MultiplyMatchesSemidirectRule) {
  const auto& g = *support::group();
  const auto p = g.evaluate("g1*g2");
  EXPECT_EQ(p.n, 0b0101u);  // e1 + e3
  EXPECT_EQ(p.q, 1u);
  const auto c = g.evaluate("g4*g5");
  EXPECT_EQ(c.n, 0b1100u);
  EXPECT_EQ(c.q, 0u);
  for (const auto& x : g.elements()) EXPECT_EQ(g.multiply(c, x), g.multiply(x, c));
  EXPECT_EQ(g.inverse(g.identity()), g.identity());
}

TEST(Group, AgreesWithOracleProductTable) {
  const auto& g = *support::group();
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      ASSERT_EQ(support::to_oracle(g.element(g.mul(a, b))),
                oracle::mul(support::to_oracle(g.element(a)), support::to_oracle(g.element(b))));
}

TEST(Group, ElementOrders) {
  const auto& g = *support::group();
  EXPECT_EQ(g.element_order(g.identity()), 1u);
  EXPECT_EQ(g.element_order(g.evaluate("g1*g2")), 4u);
  EXPECT_EQ(g.element_order(g.evaluate("g1*g4*g5")), 2u);
  for (std::size_t a = 0; a < g.order(); ++a)
    EXPECT_EQ(g.element_order(a), static_cast<std::size_t>(oracle::order(support::to_oracle(g.element(a)))));
}

TEST(Group, WordsAndNormalForm) {
  const auto& g = *support::group();
  EXPECT_EQ(g.evaluate("1"), g.identity());
  EXPECT_EQ(g.evaluate("g1*g2*g2"), g.generator("g1"));
  EXPECT_EQ(g.format(g.evaluate("g2*g4*g1")), "g1*g2");  // g2g4g1 = g1g2
  EXPECT_EQ(g.format(g.identity()), "1");
  EXPECT_THROW(g.generator("g9"), std::invalid_argument);
  for (std::size_t a = 0; a < g.order(); ++a) EXPECT_EQ(g.index_of(g.evaluate(g.format(a))), a);
}

TEST(Group, CanonicalEnumeration) {
  const auto& g = *support::group();
  EXPECT_EQ(g.element(0), g.identity());
  EXPECT_EQ(g.element(1), g.generator("g1"));  // q is the last bit
  EXPECT_EQ(g.element(2), g.generator("g5"));
  EXPECT_EQ(g.element(16), g.generator("g2"));
}

TEST(Group, ConjugacyClassesMatchPublishedList) {
  const auto& g = *support::group();
  ASSERT_EQ(g.class_count(), 14u);
  std::multiset<std::size_t> sizes;
  for (const auto& k : g.classes()) sizes.insert(k.size());
  EXPECT_EQ(sizes, (std::multiset<std::size_t>{1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 4, 4, 4, 4}));
  for (const auto& k : g.classes()) {
    EXPECT_EQ(k.representative, k.members.front());
    const auto expected = oracle::conj_class(support::to_oracle(g.element(k.representative)));
    EXPECT_EQ(oracle_set(g, k.members), expected);
    const auto p = support::published_class(k.representative);
    std::set<oracle::El> published;
    for (const auto& w : oracle::kClasses[p]) published.insert(oracle::word(w));
    EXPECT_EQ(oracle_set(g, k.members), published);
  }
  EXPECT_EQ(g.classes()[0].members, std::vector<std::size_t>{0});
}

TEST(Group, ClassOrderingAndMaps) {
  const auto& g = *support::group();
  for (std::size_t c = 1; c < g.class_count(); ++c) {
    const auto& a = g.classes()[c - 1];
    const auto& b = g.classes()[c];
    EXPECT_LT(std::tuple(a.representative_order, a.size(), a.representative),
              std::tuple(b.representative_order, b.size(), b.representative));
  }
  const auto k2 = g.class_of(g.generator("g2"));
  std::set<std::string> names;
  for (auto m : g.classes()[k2].members) names.insert(g.format(m));
  EXPECT_EQ(names, (std::set<std::string>{"g2", "g2*g4"}));
  EXPECT_EQ(g.class_of(g.evaluate("g1*g4")), g.class_of(g.generator("g1")));
  const auto k12 = g.class_of(g.evaluate("g1*g2"));
  EXPECT_EQ(g.inverse_class(k12), k12);
  EXPECT_EQ(g.power_class(k12, 2), g.class_of(g.generator("g4")));
  EXPECT_EQ(g.power_class(k12, 4), 0u);
}

TEST(Group, Subgroups) {
  const auto& s = support::session();
  const auto& g = *support::group();
  EXPECT_EQ(s.subgroup("H").order(), 4u);
  EXPECT_EQ(s.subgroup("H4").order(), 4u);
  EXPECT_EQ(s.subgroup("H1").order(), 8u);
  EXPECT_EQ(s.subgroup("H2").order(), 8u);
  const std::vector<Word> t1 = {{"g1", "g4", "g5"}, {"g2", "g3", "g4", "g5"}, {"g2", "g4", "g5"}, {"g1", "g3", "g4"}};
  EXPECT_EQ(g.subgroup_from_words(t1).order(), 32u);
  EXPECT_EQ(g.subgroup_closure({}).order(), 1u);
  EXPECT_EQ(g.cyclic(g.evaluate("g1*g2")).order(), 4u);
}

TEST(Group, RightTransversal) {
  const auto& g = *support::group();
  const auto h = support::session().subgroup("H");
  const auto t = g.right_transversal(h);
  ASSERT_EQ(t.size(), 8u);
  EXPECT_EQ(t.front(), g.identity());
  ElementSet covered;
  for (const auto& x : t)
    for (auto i : h.indices()) {
      const auto y = g.mul(i, g.index_of(x));
      EXPECT_FALSE(covered.test(y));
      covered.set(y);
    }
  EXPECT_EQ(covered.count(), 32u);
  const auto whole = g.right_transversal(g.whole());
  ASSERT_EQ(whole.size(), 1u);
  EXPECT_EQ(whole.front(), g.identity());
}

TEST(Group, NormalSubgroupsMatchPublishedList) {
  const auto& g = *support::group();
  const auto normals = g.enumerate_normal_subgroups();
  ASSERT_EQ(normals.size(), 26u);
  const auto published = parse_subgroup_list(builtin::g32_27_normal_subgroups());
  ASSERT_EQ(published.subgroups.size(), 26u);
  std::set<std::string> computed, listed;
  auto key = [](const Subgroup& h) { return h.elements().to_string(); };
  for (const auto& h : normals) computed.insert(key(h));
  for (const auto& words : published.subgroups) listed.insert(key(g.subgroup_from_words(words)));
  EXPECT_EQ(computed, listed);

  const std::vector<Word> h23 = {{"g2", "g3"}, {"g4", "g5"}};
  EXPECT_TRUE(g.is_normal(g.subgroup_from_words(h23)));
  const std::vector<Word> h2 = {{"g2"}};
  const auto not_normal = g.subgroup_from_words(h2);
  EXPECT_FALSE(g.is_normal(not_normal));
  EXPECT_EQ(std::count(normals.begin(), normals.end(), not_normal), 0);
}

TEST(Group, SubgroupCountMatchesOracle) {
  const auto& g = *support::group();
  const auto all = g.enumerate_subgroups();
  // Every subgroup arises from the trivial one by adjoining elements.
  std::set<std::set<oracle::El>> brute{{oracle::identity()}};
  std::vector<std::set<oracle::El>> frontier(brute.begin(), brute.end());
  while (!frontier.empty()) {
    std::vector<std::set<oracle::El>> next;
    for (const auto& h : frontier)
      for (const auto& x : oracle::all()) {
        if (h.count(x)) continue;
        std::vector<oracle::El> gens(h.begin(), h.end());
        gens.push_back(x);
        auto k = oracle::closure(gens);
        if (brute.insert(k).second) next.push_back(std::move(k));
      }
    frontier = std::move(next);
  }
  EXPECT_EQ(all.size(), brute.size());
  for (const auto& h : all) for (const auto& x : h.generators()) EXPECT_TRUE(h.contains(x));
}

TEST(Group, EnumerationBound) {
  const auto& g = *support::group();
  EXPECT_THROW(g.enumerate_subgroups(16), EnumerationBound);
}

TEST(Group, Center) {
  const auto& g = *support::group();
  const auto z = g.center();
  std::set<std::string> names;
  for (auto i : z.indices()) names.insert(g.format(i));
  EXPECT_EQ(names, (std::set<std::string>{"1", "g4", "g5", "g4*g5"}));
  EXPECT_TRUE(g.is_normal(z));
  const auto ab = build_group(z2_spec());
  EXPECT_EQ(ab->center().order(), 2u);
}

TEST(Group, MixedParents) {
  const auto other = build_group(g32_27_spec());
  EXPECT_THROW(support::group()->require_same(other->whole()), GroupMismatch);
}
