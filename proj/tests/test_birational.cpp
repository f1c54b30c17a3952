#include <gtest/gtest.h>

#include "schubert/ladder.hpp"
#include "schubert/lemmas.hpp"
#include "support.hpp"

using namespace schubert;
using namespace schubert::testing;

namespace {

const Permutation kIntro = Permutation::parse("2 4 3 1");
const Permutation kW1 = Permutation::parse("4 2 3 1");
const Permutation kW2 = Permutation::parse("4 6 2 5 1 3");

} // namespace

TEST(RPaths, IntroExample)
{
    BirationalMap u = r_paths(PatternMatrix(kIntro));
    EXPECT_EQ(u.images.at({1, 2}), rf("n.1.2·n.1.3·n.1.4"));
    EXPECT_EQ(u.images.at({1, 3}), rf("(n.1.3·n.1.4 + n.3.4·n.1.4) / n.3.4"));
    EXPECT_EQ(u.images.at({1, 4}), rf("n.1.4·n.3.4"));
    EXPECT_EQ(u.images.at({3, 4}), rf("n.3.4"));
}

TEST(RPaths, W2Variable34)
{
    BirationalMap u = r_paths(PatternMatrix(kW2));
    EXPECT_EQ(u.images.at({3, 4}), rf("n.1.4·n.2.4·n.3.4·n.3.5·n.3.6 + n.1.4·n.1.5·n.2.4·n.3.5·n.3.6 + "
                                      "n.1.4·n.1.5·n.1.6·n.2.4·n.3.6 + n.1.5·n.1.6·n.2.4·n.2.6·n.3.6 + "
                                      "n.1.5·n.2.4·n.2.6·n.3.5·n.3.6"));
}

TEST(RPaths, SimpleTranspositionIsIdentity)
{
    for (int r = 2; r <= 5; ++r)
        for (int k = 1; k < r; ++k) {
            std::vector<int> img(r);
            for (int i = 0; i < r; ++i)
                img[i] = i + 1;
            std::swap(img[k - 1], img[k]);
            BirationalMap u = r_paths(PatternMatrix(Permutation(img)));
            ASSERT_EQ(u.images.size(), 1u);
            EXPECT_EQ(u.images.begin()->second, RatFunc::var(u.images.begin()->first));
        }
}

TEST(RPaths, MatchesFormulaOverBruteForcePaths)
{
    for (int r = 2; r <= 5; ++r)
        for (const Permutation &p : all_permutations(r)) {
            PatternMatrix m(p);
            BirationalMap u = r_paths(m);
            for (VarId v : m.vars()) {
                SelectorSets s = selector_sets(m, v);
                RatFunc expected = RatFunc(brute_force_path_sum(m, s.O, s.D)) / RatFunc::monomial(rho_of(m, s.D));
                if (s.D.size() % 2 == 0)
                    expected = -expected;
                EXPECT_EQ(u.images.at(v), expected) << p.to_string() << " " << to_string(v);
                const Components &c = u.components.at(v);
                EXPECT_EQ(c.RL + c.R1 + c.R2, u.images.at(v));
            }
        }
}

TEST(Substitute, IdentityAndIntro)
{
    PatternMatrix id(Permutation::identity(3));
    EXPECT_TRUE(equal(substitute(id, r_paths(id)), RFMatrix(RFMatrix::Identity(3, 3))));
    PatternMatrix m(kIntro);
    RFMatrix wu = substitute(m, r_paths(m));
    EXPECT_EQ(wu(3, 1), rf("n.1.2·n.1.3·n.1.4"));
    EXPECT_EQ(wu(2, 3), n(3, 4));
    EXPECT_TRUE(wu(1, 3).is_one());
    EXPECT_TRUE(wu(1, 2).is_zero());
}

TEST(Detsimp, W1WorkedExample)
{
    const DetsimpResult d = r_detsimp(PatternMatrix(kW1));
    ASSERT_GE(d.step1.size(), 2u);
    EXPECT_EQ(d.step1[0].shifted, (VarId{1, 2}));
    EXPECT_EQ(d.step1[0].x.at({1, 2}), rf("(n.1.2·n.2.4 + n.1.4 - n.1.3·n.3.4) / n.2.4"));
    EXPECT_EQ(d.step1[1].shifted, (VarId{1, 3}));
    EXPECT_EQ(d.step1[1].x.at({1, 2}), rf("(n.1.2·n.2.4 - n.1.3·n.3.4) / n.2.4"));
    EXPECT_EQ(d.step1[1].x.at({1, 3}), rf("(n.1.3·n.3.4 + n.1.4) / n.3.4"));

    EXPECT_EQ(d.y.at({2, 4}), n(2, 4));
    EXPECT_EQ(d.y.at({3, 4}), rf("n.2.4·n.3.4"));
    EXPECT_EQ(d.y.at({1, 2}), rf("(n.1.2·n.1.3·n.1.4 - n.1.3·n.1.4·n.2.4) / n.2.4"));
    EXPECT_EQ(d.y.at({1, 3}), rf("(n.1.3·n.1.4 + n.1.4·n.3.4) / n.3.4"));
    EXPECT_EQ(d.y.at({1, 4}), rf("n.1.4·n.2.4·n.3.4"));

    EXPECT_EQ(d.u.images.at({1, 2}), rf("(-n.1.2·n.1.3·n.1.4 - n.1.3·n.1.4·n.2.4) / n.2.4"));
    EXPECT_EQ(d.eps.at({1, 2}), -1);
    for (VarId v : std::vector<VarId>{{1, 3}, {1, 4}, {2, 4}, {3, 4}})
        EXPECT_EQ(d.eps.at(v), 1);
}

TEST(Detsimp, AgreesWithPathsExhaustively)
{
    for (int r = 2; r <= 5; ++r)
        for (const Permutation &p : all_permutations(r)) {
            PatternMatrix m(p);
            const DetsimpResult d = r_detsimp(m);
            const BirationalMap u = r_paths(m);
            for (VarId v : m.vars())
                EXPECT_EQ(d.u.images.at(v), u.images.at(v)) << p.to_string() << " " << to_string(v);
        }
}

TEST(Detsimp, SimpleTransposition)
{
    const DetsimpResult d = r_detsimp(PatternMatrix(Permutation::parse("2 1 3")));
    EXPECT_EQ(d.y.at({1, 2}), n(1, 2));
    EXPECT_EQ(d.eps.at({1, 2}), 1);
}

TEST(Ladder, ScopeRule)
{
    PatternMatrix m(kIntro);  // π(4) = 1
    for (int i = 1; i <= 3; ++i)
        EXPECT_TRUE(ladder_in_scope(m, i));
    EXPECT_FALSE(ladder_in_scope(m, 4));
    PatternMatrix fixed(Permutation::parse("2 1 3"));  // π(r) = r
    EXPECT_FALSE(ladder_in_scope(fixed, 1));
    EXPECT_FALSE(ladder_in_scope(fixed, 2));
    Analysis a(Permutation::parse("2 1 3"));
    EXPECT_THROW(block_ladder(a, 1), std::invalid_argument);
}

TEST(Ladder, SmallestBlockUsesEmptyDeterminant)
{
    Analysis a(kIntro);
    BlockLadder l = block_ladder(a, 1);
    EXPECT_EQ(l.T_L.rows(), 0);
    EXPECT_EQ(l.M_col.rows(), 0);
    CheckSink sink(kIntro);
    verify_rowcolop(a, l, sink);
    for (const CheckResult &c : sink.results())
        EXPECT_EQ(c.status, Status::Pass) << c.check_id << " " << c.instance << " " << c.reason;
}

TEST(Ladder, ColumnMatrixIsUnitLower)
{
    for (const Permutation &p : all_permutations(5)) {
        Analysis a(p);
        for (int i = 1; i < 5; ++i) {
            if (!ladder_in_scope(a.m, i))
                continue;
            BlockLadder l = block_ladder(a, i);
            for (Eigen::Index r = 0; r < l.M_col.rows(); ++r) {
                EXPECT_TRUE(l.M_col(r, r).is_one());
                for (Eigen::Index c = r + 1; c < l.M_col.cols(); ++c)
                    EXPECT_TRUE(l.M_col(r, c).is_zero());
            }
            for (const auto &[jl, q] : l.Q)
                if (d0_set(a.m, jl.first, jl.second).empty())
                    EXPECT_TRUE(q.is_zero());
        }
    }
}

TEST(Ladder, AllIdentitiesOnS4)
{
    for (const Permutation &p : all_permutations(4)) {
        Analysis a(p);
        CheckSink sink(p);
        for (int i = 1; i < 4; ++i)
            if (ladder_in_scope(a.m, i))
                verify_rowcolop(a, block_ladder(a, i), sink);
        EXPECT_EQ(count(sink.results(), "", Status::Fail), 0) << p.to_string();
    }
}

TEST(Lemmas, RowOperationAboveAndBelow)
{
    long above = 0, below = 0, r2 = 0;
    for (const Permutation &p : all_permutations(4)) {
        Analysis a(p);
        CheckSink sink(p);
        verify_rowop_lemma(a, sink);
        EXPECT_EQ(count(sink.results(), "", Status::Fail), 0) << p.to_string();
        above += count(sink.results(), "lem.rowop.above", Status::Pass);
        below += count(sink.results(), "lem.rowop.below", Status::Pass);
        r2 += count(sink.results(), "lem.rowop.R2", Status::Pass);
    }
    EXPECT_GT(above, 0);
    EXPECT_GT(below, 0);
    EXPECT_GT(r2, 0);
}

TEST(Lemmas, EmptyOriginSplitGivesZero)
{
    // With no upward origins the split of P_1 is an empty sum.
    for (const Permutation &p : all_permutations(4)) {
        Analysis a(p);
        for (VarId v : a.m.vars())
            if (selector_sets(a.m, v).O1.empty())
                EXPECT_TRUE(a.engine.partition_sums(v).P1.is_zero());
    }
}

TEST(Lemmas, ReducedElementCheckOnW1)
{
    Analysis a(kW1);
    CheckSink sink(kW1);
    r_components_tilde_check(a, sink);
    EXPECT_EQ(count(sink.results(), "cor.RL_tilde", Status::Pass), 2);  // n12, n13
    EXPECT_EQ(count(sink.results(), "", Status::Fail), 0);
}

TEST(Lemmas, AllSuitesOnS4)
{
    for (const Permutation &p : all_permutations(4)) {
        Analysis a(p);
        CheckSink sink(p);
        verify_all_lemmas(a, sink);
        for (const CheckResult &c : sink.results())
            EXPECT_NE(c.status, Status::Fail) << p.to_string() << " " << c.check_id << " " << c.instance << " " << c.reason;
    }
}
