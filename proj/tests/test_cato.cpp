#include "oblock/cato.hpp"

#include "test_support.hpp"

#include <doctest.h>

using namespace oblock;

namespace {

struct BlockBundle {
    LieDatum datum;
    ParabolicSpec y;
    BlockPoset block;
    KLTable table;
    GradedMatrices gm;

    BlockBundle(LieType t, int m, int n, const Weight* anchor = nullptr)
        : datum(t, m, n),
          y(ParabolicSpec::full_head(datum)),
          block(orbit_block(anchor ? *anchor : zero_weight(datum), datum, y)),
          table(datum, y.members),
          gm(build_graded_matrices(block, datum, y, table))
    {
    }
};

} // namespace

TEST_CASE("rank-1 block: all four matrices")
{
    BlockBundle bb(LieType::a, 1, 1);
    REQUIRE(bb.gm.dec.size() == 2);
    CHECK(bb.gm.dec(0, 1).str() == "q");
    CHECK(bb.gm.ext_dl(1, 0).str() == "q");
    CHECK(bb.gm.ext_dl(0, 1).is_zero());
    // C = dec^T dec: diagonal (1, 1+q^2) in (top, bottom) order
    CHECK(bb.gm.cartan(0, 0).is_one());
    CHECK(bb.gm.cartan(1, 1).str() == "1+q^2");
    CHECK(bb.gm.cartan(0, 1).str() == "q");
    // E: diagonal (1+q^2, 1)
    CHECK(bb.gm.ext_ll(0, 0).str() == "1+q^2");
    CHECK(bb.gm.ext_ll(1, 1).is_one());
    CHECK(bb.gm.ext_ll(0, 1).str() == "q");
    // Koszul Hilbert identity by direct multiplication
    CHECK((bb.gm.cartan * bb.gm.ext_ll.negate_q().transpose()).is_identity());

    // Ext tables
    CHECK(ext_delta_simple(bb.gm, 0, 0) == std::vector<long long>{1});
    CHECK(ext_delta_simple(bb.gm, 1, 0) == std::vector<long long>{0, 1});
    CHECK(ext_delta_simple(bb.gm, 0, 1).empty());
    CHECK(ext_simple_simple(bb.gm, 0, 1) == std::vector<long long>{0, 1});
    CHECK(ext_simple_simple(bb.gm, 0, 0) == std::vector<long long>{1, 0, 1});
}

TEST_CASE("chain block of length 3: inverse picks up the q^2 corner")
{
    BlockBundle bb(LieType::a, 1, 2);
    REQUIRE(bb.gm.dec.size() == 3);
    CHECK(bb.gm.dec(0, 2).is_zero());
    CHECK(bb.gm.ext_dl(2, 0).str() == "q^2"); // Ext^2(Delta(bot), L(top)) = 1
    CHECK(bb.gm.ext_ll(0, 2).str() == "q^2"); // Ext^2(L(top), L(bot)) = 1
    CHECK(bb.gm.cartan(0, 2).is_zero());
    const KoszulReport rep = koszulity_certificate(bb.block, bb.gm, bb.datum, bb.y, bb.table);
    for (const auto& item : rep.items) {
        INFO(item.name, ": ", item.detail);
        CHECK(item.pass);
    }
    CHECK(rep.pass);
}

TEST_CASE("koszulity certificate across small regular blocks")
{
    for (auto [t, m, n] : {std::tuple<LieType, int, int>{LieType::b, 1, 2},
                           std::tuple<LieType, int, int>{LieType::c, 1, 2},
                           std::tuple<LieType, int, int>{LieType::d, 1, 2},
                           std::tuple<LieType, int, int>{LieType::a, 2, 2},
                           std::tuple<LieType, int, int>{LieType::d, 2, 1}}) {
        BlockBundle bb(t, m, n);
        const KoszulReport rep =
            koszulity_certificate(bb.block, bb.gm, bb.datum, bb.y, bb.table);
        INFO("type ", to_char(t), " m=", m, " n=", n);
        for (const auto& item : rep.items) {
            INFO(item.name, ": ", item.detail);
            CHECK(item.pass);
        }
        CHECK(rep.pass);
    }
}

TEST_CASE("character consistency validates the KL convention")
{
    for (auto [t, m, n] : {std::tuple<LieType, int, int>{LieType::a, 1, 2},
                           std::tuple<LieType, int, int>{LieType::b, 1, 1},
                           std::tuple<LieType, int, int>{LieType::b, 1, 2},
                           std::tuple<LieType, int, int>{LieType::c, 1, 2},
                           std::tuple<LieType, int, int>{LieType::d, 1, 2}}) {
        BlockBundle bb(t, m, n);
        const CertificateItem item =
            character_consistency(bb.block, bb.gm, bb.datum, bb.y, /*depth=*/6);
        INFO("type ", to_char(t), " m=", m, " n=", n, ": ", item.detail);
        CHECK(item.pass);
    }
}

TEST_CASE("nonzero KL entry appears somewhere beyond chains")
{
    // B_3 full-head block: 8 labels; decomposition matrix entries stay 0/1 on
    // chains but the Ext side must still be consistent.  This block is the
    // smallest with a genuinely 2-dimensional Hom space candidate; we only
    // assert certificate coherence (values are pinned by the oracles above).
    BlockBundle bb(LieType::b, 1, 2);
    const KoszulReport rep = koszulity_certificate(bb.block, bb.gm, bb.datum, bb.y, bb.table);
    CHECK(rep.pass);
    CHECK(bb.gm.dec.size() == 12);
}

TEST_CASE("tail-only parabolic hits multiplicity-2 entries and stays certified")
{
    // Y = {beta_1} inside D_4: graded decomposition numbers reach
    // coefficient 2; every certificate must still hold, and the
    // depth-truncated character inversion must stay nonnegative.
    LieDatum d(LieType::d, 2, 2);
    const ParabolicSpec y = ParabolicSpec::from_head_subset(d, {});
    const BlockPoset block = orbit_block(zero_weight(d), d, y);
    KLTable table(d, y.members);
    const GradedMatrices gm = build_graded_matrices(block, d, y, table);
    bool saw_two = false;
    for (std::size_t i = 0; i < gm.dec.size(); ++i)
        for (std::size_t j = 0; j < gm.dec.size(); ++j)
            for (const auto& [e, c] : gm.dec(i, j).terms())
                if (c >= 2)
                    saw_two = true;
    CHECK(saw_two);
    const KoszulReport rep = koszulity_certificate(block, gm, d, y, table);
    for (const auto& item : rep.items) {
        INFO(item.name, ": ", item.detail);
        CHECK(item.pass);
    }
    const CertificateItem chars = character_consistency(block, gm, d, y, 4);
    INFO(chars.detail);
    CHECK(chars.pass);
}

TEST_CASE("truncation stability, small ranks")
{
    // k = n degenerates to the identity comparison.
    {
        const StabilityReport rep =
            truncation_stability(zero_weight(LieDatum(LieType::a, 1, 2)), LieType::a, 1, 2, 2, {});
        CHECK(rep.pass);
        CHECK(rep.labels_k == rep.labels_n);
        CHECK(rep.ext_ll_equal_entries == rep.ext_ll_total_entries);
    }
    for (LieType t : {LieType::a, LieType::b}) {
        LieDatum dk(t, 1, 2);
        std::vector<std::size_t> heads;
        for (std::size_t s = 0; s + dk.n() < dk.num_simple(); ++s)
            heads.push_back(s);
        const StabilityReport rep =
            truncation_stability(zero_weight(dk), t, 1, 2, 3, heads);
        INFO("type ", to_char(t), ": ", rep.detail);
        CHECK(rep.pass);
        CHECK(rep.dec_equal);
        CHECK(rep.cartan_equal);
        CHECK(rep.ext_dl_equal);
        CHECK(rep.ext_ll_geq);
        CHECK(rep.ext_ll_deg1_equal);
    }
}

TEST_CASE("k_lambda certificate for the zero weight")
{
    for (LieType t : {LieType::a, LieType::b, LieType::c, LieType::d}) {
        LieDatum d(t, 1, 2);
        std::vector<std::size_t> heads;
        for (std::size_t s = 0; s + d.n() < d.num_simple(); ++s)
            heads.push_back(s);
        const KLambdaReport rep = find_k_lambda(zero_weight(d), t, 1, heads);
        INFO("type ", to_char(t), ": ", rep.detail);
        CHECK(rep.symbolic_certificate);
        CHECK(rep.enumeration_confirms);
        CHECK(rep.k_lambda >= 1);
    }
}

TEST_CASE("k_lambda grows with the tail partition")
{
    LieDatum small(LieType::a, 1, 2);
    Weight lam0 = zero_weight(small);
    const KLambdaReport r0 = find_k_lambda(lam0, LieType::a, 1, {});

    LieDatum big(LieType::a, 1, 6);
    Weight lam;
    lam.coords2.assign(big.rank(), 0);
    lam.coords2[0] = 10; // head value 5 keeps beta_x dominant
    for (int j = 1; j <= 5; ++j)
        lam.coords2[big.pos_of_index(j)] = 2 * (6 - j); // partition (5,4,3,2,1)
    REQUIRE(is_dominant(lam, big));
    const KLambdaReport r1 = find_k_lambda(lam, LieType::a, 1, {});
    CHECK(r1.k_lambda > r0.k_lambda);
    CHECK(r1.symbolic_certificate);
    CHECK(r1.enumeration_confirms);
}

TEST_CASE("dual block labels")
{
    for (LieType t : {LieType::a, LieType::b, LieType::c, LieType::d}) {
        LieDatum d0(t, 1, 2);
        std::vector<std::size_t> heads;
        for (std::size_t s = 0; s + d0.n() < d0.num_simple(); ++s)
            heads.push_back(s);
        const Weight lam = zero_weight(d0);
        const KLambdaReport kr = find_k_lambda(lam, t, 1, heads);
        const int n = std::max(kr.k_lambda, 2) + 1;
        const DualBlockLabels dual = dual_block_labels(lam, t, 1, n, heads);
        INFO("type ", to_char(t), ": ", dual.failure);
        REQUIRE(dual.ok);
        CHECK(dual.a2 < 0);
        CHECK(dual.stabilizer_matches);
        if (dual.lambda_block_size)
            CHECK(dual.size_bijection);

        // tr' keeps exactly the rank-k labels.
        const LieDatum dn(t, 1, n);
        if (n - 1 >= dual.n0) {
            const LieDatum dk(t, 1, n - 1);
            const DualBlockLabels dual_k = dual_block_labels(lam, t, 1, n - 1, heads);
            REQUIRE(dual_k.ok);
            CHECK(dual_k.a2 == dual.a2);
            const std::vector<Weight> kept =
                truncate_dual_labels(dual.labels, dual.phi, dn, dk);
            CHECK(kept == dual_k.labels);
        }
    }
}
