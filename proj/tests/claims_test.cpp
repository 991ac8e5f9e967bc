#include <gtest/gtest.h>

#include "dmagic/claims.hpp"
#include "dmagic/generators.hpp"
#include "dmagic/graph6.hpp"
#include "dmagic/solver.hpp"

using namespace dmagic;

namespace {

SearchOptions budget()
{
    SearchOptions opts;
    opts.node_limit = 50'000'000;
    return opts;
}

}  // namespace

TEST(Predictors, Hnp)
{
    EXPECT_TRUE(predict_hnp_02(2, 2));
    EXPECT_FALSE(predict_hnp_02(3, 2));
    EXPECT_TRUE(predict_hnp_02(3, 3));
    EXPECT_TRUE(solve(h_np(2, 2), {0, 2}).found());
    EXPECT_EQ(solve(h_np(3, 2), {0, 2}).status, SearchStatus::ExhaustedNone);
}

TEST(Predictors, Partite)
{
    const std::vector<std::size_t> k12{1, 2}, k22{2, 2}, k11{1, 1};
    EXPECT_TRUE(predict_partite_02(k12));
    EXPECT_TRUE(predict_partite_02(k22));
    EXPECT_FALSE(predict_partite_02(k11));
    auto a = solve(complete_multipartite(k12), {0, 2});
    ASSERT_TRUE(a.found());
    EXPECT_EQ(a.certificates.front().constant(), 3);
    auto b = solve(complete_multipartite(k22), {0, 2});
    ASSERT_TRUE(b.found());
    EXPECT_EQ(b.certificates.front().constant(), 5);
}

TEST(Predictors, Cycles)
{
    EXPECT_TRUE(predict_cycle_singleton(8, 2));
    EXPECT_FALSE(predict_cycle_singleton(10, 2));
    const std::vector<std::size_t> twice4{4, 4}, mixed{4, 8};
    EXPECT_TRUE(predict_union_c4k(twice4, 1));
    EXPECT_FALSE(predict_union_c4k(mixed, 1));
    EXPECT_THROW(predict_union_c4k(path(4), 1), std::invalid_argument);

    auto out = solve(cycle_union(mixed), {1}, budget());
    EXPECT_EQ(out.status, SearchStatus::ExhaustedNone);
}

TEST(Audit, HardClaimsAgree)
{
    AuditRange range;
    range.max_order = 8;
    for (const auto& id : claim_ids()) {
        if (claim_tier(id) != ClaimTier::Hard) continue;
        auto verdicts = audit(id, range, budget());
        EXPECT_FALSE(verdicts.empty()) << id;
        for (const auto& v : verdicts) {
            ASSERT_TRUE(v.tested()) << id << " " << v.parameter_string();
            EXPECT_TRUE(v.agreement) << id << " " << v.parameter_string() << " " << v.note;
        }
    }
}

TEST(Audit, DetectsRegularDiameter2Disagreement)
{
    auto verdicts = audit("fkk06-regular-diam2", AuditRange{7}, budget());
    bool c5 = false;
    for (const auto& v : verdicts) {
        auto g = parse_graph6(v.graph6);
        if (g.order() != 5 || g.regularity() != 2) continue;
        c5 = true;
        EXPECT_TRUE(v.predicted_exists);
        EXPECT_EQ(v.observed_exists, false);
        EXPECT_FALSE(v.agreement);
        EXPECT_EQ(v.tier, ClaimTier::ReportOnly);
    }
    EXPECT_TRUE(c5);
}

TEST(Audit, ComplementAndParityRemarksHoldUpToSix)
{
    for (const char* id : {"os11b-complement", "os11b-parity"}) {
        auto verdicts = audit(id, AuditRange{6}, budget());
        EXPECT_FALSE(verdicts.empty());
        for (const auto& v : verdicts) {
            ASSERT_TRUE(v.tested());
            EXPECT_TRUE(v.agreement) << id << " " << v.graph6;
        }
    }
}

TEST(Audit, P3BothLabelingsReportedAsDiscrepancy)
{
    auto verdicts = audit("p3-both-labelings", AuditRange{}, budget());
    ASSERT_EQ(verdicts.size(), 1u);
    EXPECT_TRUE(verdicts[0].predicted_exists);
    EXPECT_EQ(verdicts[0].observed_exists, false);
    EXPECT_FALSE(verdicts[0].agreement);
}

TEST(Audit, AbortedSearchesAreUntested)
{
    SearchOptions tiny;
    tiny.node_limit = 1;
    tiny.use_screeners = false;
    auto verdicts = audit("cycle-singleton", AuditRange{12}, tiny);
    bool untested = false;
    for (const auto& v : verdicts)
        if (!v.tested()) {
            untested = true;
            EXPECT_FALSE(v.agreement);
        }
    EXPECT_TRUE(untested);
    EXPECT_THROW(audit("nope", AuditRange{}, budget()), std::invalid_argument);
}
