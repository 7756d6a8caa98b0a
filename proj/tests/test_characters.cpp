#include <gtest/gtest.h>

#include <algorithm>

#include "qslab/errors.hpp"
#include "support.hpp"

using namespace qslab;

TEST(Cyclotomic, RationalArithmetic) {
  const Cyclotomic a(Rational(1, 2));
  EXPECT_EQ((a + a).to_integer(), 1);
  EXPECT_EQ((a * Cyclotomic(4)).to_integer(), 2);
  EXPECT_EQ((a / Rational(2)).to_rational(), Rational(1, 4));
  EXPECT_FALSE(a.is_integer());
  EXPECT_THROW(a.to_integer(), std::domain_error);
  EXPECT_EQ(Cyclotomic(-3).to_string(), "-3");
  EXPECT_LT(Cyclotomic(-1), Cyclotomic(0));
}

TEST(Cyclotomic, RootsOfUnity) {
  const auto i = Cyclotomic::root_of_unity(4, 1);
  EXPECT_EQ(i * i, Cyclotomic(-1));
  EXPECT_FALSE(i.is_rational());
  EXPECT_EQ(i.conj(), -i);
  EXPECT_EQ(i + i.conj(), Cyclotomic(0));
  const auto w = Cyclotomic::root_of_unity(3, 1);
  EXPECT_EQ(Cyclotomic(1) + w + w * w, Cyclotomic(0));
  EXPECT_EQ(Cyclotomic::root_of_unity(8, 2), Cyclotomic::root_of_unity(4, 1).lifted(8));
  EXPECT_EQ(Cyclotomic::root_of_unity(4, 2), Cyclotomic(-1));
}

TEST(Cyclotomic, Polynomials) {
  EXPECT_EQ(cyclotomic_polynomial(4), (std::vector<std::int64_t>{1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<std::int64_t>{1, -1, 1}));
  EXPECT_EQ(totient(12), 4u);
}

TEST(Characters, ClassMultCoefficients) {
  const auto& g = *support::group();
  const auto k1 = g.class_of(g.identity());
  const auto k5 = g.class_of(g.generator("g5"));
  const auto k2 = g.class_of(g.generator("g2"));
  const auto k4 = g.class_of(g.generator("g4"));
  EXPECT_EQ(class_mult_coefficient(g, k5, k5, k1), 1);
  EXPECT_EQ(class_mult_coefficient(g, k2, k2, k4), 2);
  for (std::size_t i = 0; i < g.class_count(); ++i)
    for (std::size_t k = 0; k < g.class_count(); ++k)
      EXPECT_EQ(class_mult_coefficient(g, i, k1, k), i == k ? 1 : 0);
  EXPECT_THROW(class_mult_coefficient(g, 14, 0, 0), std::out_of_range);
}

TEST(Characters, DixonPrime) {
  EXPECT_EQ(dixon_prime(*support::group()), 13u);
}

TEST(Characters, Z2Table) {
  GroupSpec s;
  s.n_rank = 1;
  const auto t = compute_character_table(build_group(s));
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t[0].integer_values(), (std::vector<std::int64_t>{1, 1}));
  EXPECT_EQ(t[1].integer_values(), (std::vector<std::int64_t>{1, -1}));
}

TEST(Characters, G32Degrees) {
  const auto& t = support::table();
  ASSERT_EQ(t.size(), 14u);
  std::vector<std::int64_t> d = t.degrees();
  EXPECT_EQ(d, (std::vector<std::int64_t>{1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2}));
  EXPECT_EQ(t.trivial_row(), 0u);
  EXPECT_TRUE(t.is_real());
  EXPECT_EQ(t.check_orthogonality(), std::nullopt);
  for (const auto& row : t.rows()) EXPECT_TRUE(row.integer_values().has_value());
}

TEST(Characters, AlignsWithPublishedTable) {
  const auto& v = support::view();
  for (std::size_t r = 0; r < 14; ++r) {
    const auto vals = support::published_values(support::chi(r + 1));
    for (std::size_t c = 0; c < 14; ++c) EXPECT_EQ(vals[c], oracle::kTable[r][c]) << r << "," << c;
  }
  for (std::size_t p = 0; p < 14; ++p) {
    const auto cls = v.columns[p];
    EXPECT_EQ(support::published_class(support::group()->classes()[cls].representative), p);
  }
  EXPECT_EQ(support::chi(11)[support::group()->class_of(support::group()->evaluate("g4*g5"))].to_integer(), 2);
  EXPECT_EQ(support::chi(7)[support::group()->class_of(support::group()->generator("g1"))].to_integer(), -1);
}

TEST(Characters, SelfAlignmentIsIdentity) {
  const auto& t = support::table();
  const auto a = align_to_reference(t, reference_from(t, "g32_27"));
  for (std::size_t i = 0; i < 14; ++i) {
    EXPECT_EQ(a.rows[i], i);
    EXPECT_EQ(a.columns[i], i);
  }
}

TEST(Characters, PerturbedReferenceFailsToAlign) {
  auto ref = support::reference();
  ref.values[8][0] = 3;
  EXPECT_THROW(align_to_reference(support::table(), ref), AlignmentError);
  ref = support::reference();
  ref.columns.pop_back();
  EXPECT_THROW(align_to_reference(support::table(), ref), AlignmentError);
}

TEST(Characters, ReferenceFormatRoundTrip) {
  const auto& ref = support::reference();
  const auto again = parse_reference_table(format_reference_table(ref));
  EXPECT_EQ(again.group, ref.group);
  EXPECT_EQ(again.values, ref.values);
  ASSERT_EQ(again.columns.size(), ref.columns.size());
  for (std::size_t c = 0; c < ref.columns.size(); ++c) {
    EXPECT_EQ(again.columns[c].label, ref.columns[c].label);
    EXPECT_EQ(again.columns[c].members, ref.columns[c].members);
  }
  EXPECT_THROW(parse_reference_table("format qslab-chartable 2\n"), ParseError);
}

TEST(Characters, InnerProducts) {
  using support::chi;
  EXPECT_EQ(inner_product(chi(9), chi(9)), Cyclotomic(1));
  EXPECT_EQ(inner_product(chi(1), chi(2)), Cyclotomic(0));
  for (int a = 1; a <= 14; ++a)
    for (int b = 1; b <= 14; ++b)
      EXPECT_EQ(inner_product(chi(a), chi(b)).to_rational() * 32,
                Rational(oracle::inner32(oracle::row(a), oracle::row(b))));
}

TEST(Characters, Decompose) {
  using support::chi;
  const auto d5 = decompose(chi(5), support::table());
  for (std::size_t r = 0; r < 14; ++r) EXPECT_EQ(d5.multiplicities[r], r == support::view().rows[4] ? 1 : 0);
  const auto virt = chi(3) - chi(9);
  const auto dv = decompose(virt, support::table());
  EXPECT_TRUE(dv.has_negative);
  EXPECT_EQ(recombine(dv.multiplicities, support::table()), virt);
  const auto half = chi(1) * Cyclotomic(Rational(1, 2));
  EXPECT_THROW(decompose(half, support::table()), NotACharacter);
}

TEST(Characters, ClassFunctionArithmetic) {
  using support::chi;
  const auto& g = support::group();
  const auto sq = chi(9) * chi(9);
  const auto d = decompose(sq, support::table());
  EXPECT_FALSE(d.has_negative);
  EXPECT_EQ(sq[0].to_integer(), 4);
  EXPECT_EQ(chi(9).conj(), chi(9));
  EXPECT_EQ(ClassFunction::zero(g) + chi(3), chi(3));
  EXPECT_EQ(ClassFunction::constant(g, Cyclotomic(1)), chi(1));
  const auto other = build_group(g32_27_spec());
  EXPECT_THROW(chi(1) + ClassFunction::zero(other), GroupMismatch);
}

TEST(Characters, LinearCharactersAreMultiplicative) {
  const auto& g = *support::group();
  const auto& t = support::table();
  for (auto r : t.rows_of_degree(1))
    for (std::size_t a = 0; a < g.order(); ++a)
      for (std::size_t b = 0; b < g.order(); ++b)
        ASSERT_EQ(t[r][g.class_of(g.mul(a, b))], t[r][g.class_of(a)] * t[r][g.class_of(b)]);
}
