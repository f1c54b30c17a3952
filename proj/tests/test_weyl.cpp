#include <gtest/gtest.h>

#include "support.hpp"

using namespace schubert;
using namespace schubert::testing;

namespace {

const Permutation kIntro = Permutation::parse("2 4 3 1");
const Permutation kW1 = Permutation::parse("4 2 3 1");
const Permutation kW2 = Permutation::parse("4 6 2 5 1 3");

CellSet cells(std::initializer_list<CellRef> c)
{
    CellSet s(c);
    std::sort(s.begin(), s.end());
    return s;
}

} // namespace

TEST(Permutation, ParseAndInverse)
{
    EXPECT_EQ(kIntro(2), 4);
    EXPECT_EQ(kIntro.inv(1), 4);
    EXPECT_EQ(kIntro.inverse().inverse(), kIntro);
    EXPECT_THROW(Permutation::parse("1 1 2"), ParseError);
    EXPECT_THROW(Permutation::parse("1, 2"), ParseError);
    EXPECT_THROW(Permutation::parse(""), ParseError);
}

TEST(Permutation, AllPermutationsCount)
{
    EXPECT_EQ(all_permutations(4).size(), 24u);
    EXPECT_EQ(all_permutations(1).size(), 1u);
}

TEST(InversionSet, IntroExample)
{
    const std::vector<VarId> expected = {{1, 2}, {1, 3}, {1, 4}, {3, 4}};
    EXPECT_EQ(inversion_set(kIntro), expected);
}

TEST(InversionSet, SizeIsLength)
{
    for (const Permutation &p : all_permutations(5))
        EXPECT_EQ(int(inversion_set(p).size()), p.length());
}

TEST(PatternMatrix, IntroLayout)
{
    PatternMatrix m(kIntro);
    EXPECT_TRUE(m.is_one({1, 2}));
    EXPECT_TRUE(m.is_one({4, 1}));
    EXPECT_TRUE(m.is_var({4, 2}));
    EXPECT_EQ(m.at(4, 2).v, (VarId{1, 2}));
    EXPECT_EQ(m.at(3, 4).v, (VarId{3, 4}));
    EXPECT_FALSE(m.nonzero({2, 3}));
    EXPECT_EQ(m.vars().size(), 4u);
}

TEST(PatternMatrix, IdentityHasNoVariables)
{
    EXPECT_TRUE(PatternMatrix(Permutation::identity(4)).vars().empty());
}

TEST(Selectors, W2OriginsAndDestinations)
{
    PatternMatrix m(kW2);
    SelectorSets s = selector_sets(m, {3, 4});
    // O = {n_{3,6}, n_{5,6}, 1_6}; D = {1_4, 1_5, 1_6}
    EXPECT_EQ(s.O, cells({{6, 6}, {4, 6}, {2, 6}}));
    EXPECT_EQ(s.D, cells({{1, 4}, {4, 5}, {2, 6}}));
}

TEST(Selectors, ReducedW2)
{
    WTilde t = reduce_w_tilde(PatternMatrix(kW2));
    EXPECT_EQ(t.m_tilde.r(), 5);
    SelectorSets s = selector_sets(t.m_tilde, {3, 4});
    // D = {1_4, 1_5}; O = {n_{3,5}, 1_5}
    EXPECT_EQ(s.D.size(), 2u);
    EXPECT_EQ(s.O.size(), 2u);
    for (CellRef c : s.D)
        EXPECT_TRUE(t.m_tilde.is_one(c));
    const CellRef o35 = t.m_tilde.var_pos({3, 5});
    EXPECT_TRUE(set_contains(s.O, o35));
    EXPECT_TRUE(set_contains(s.O, t.m_tilde.one_pos(5)));
    EXPECT_TRUE(set_contains(s.D, t.m_tilde.one_pos(5)));
}

TEST(Selectors, OriginsAndDestinationsHaveEqualSize)
{
    for (int r = 2; r <= 5; ++r)
        for (const Permutation &p : all_permutations(r)) {
            PatternMatrix m(p);
            for (VarId v : m.vars()) {
                SelectorSets s = selector_sets(m, v);
                EXPECT_EQ(s.O.size(), s.D.size());
                for (CellRef d : s.D)
                    EXPECT_TRUE(m.is_one(d));
            }
        }
}

TEST(Gamma, RightmostNonzeroInRow)
{
    PatternMatrix m(kW1);
    EXPECT_EQ(gamma(m, 2), (CellRef{2, 4}));
    EXPECT_EQ(gamma(m, 4), (CellRef{1, 4}));
    EXPECT_EQ(rho(m, 1), Monomial::var({1, 2}) * Monomial::var({1, 3}) * Monomial::var({1, 4}));
}
