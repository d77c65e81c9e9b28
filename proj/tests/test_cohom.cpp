#include "doctest.h"

#include <random>

#include "bextlab/cohom.hpp"
#include "support.hpp"

using namespace bextlab;

namespace {

Cochain2 random_cochain2(const FinRing& A, const Bimodule& M, std::mt19937& rng)
{
    Cochain2 nu = Cochain2::zero(A.n(), M.M.e());
    for (auto& v : nu.c) v = static_cast<int>(rng() % M.M.order);
    for (auto& v : nu.h) v = static_cast<int>(rng() % M.M.order);
    return nu;
}

Cochain5 plus(const Bimodule& M, const Cochain5& x, const Cochain5& y)
{
    std::vector<int> a = x.slots(), b = y.slots();
    for (size_t i = 0; i < a.size(); ++i) a[i] = M.M.op(a[i], b[i]);
    return Cochain5::from_slots(x.n, a);
}

}  // namespace

TEST_CASE("transcribed blocks agree with the bar differential")
{
    for (int n : {2, 3}) {
        Calibration cal = calibrate_blocks(zmod_ring(n));
        CHECK_MESSAGE(cal.report.ok(), cal.report.str());
        CHECK_FALSE(cal.signs.empty());
    }
    Calibration z = calibrate_blocks(zero_ring(2));
    CHECK(z.report.ok());
}

TEST_CASE("coboundaries are cocycles in every mode")
{
    std::mt19937 rng(7);
    for (int n : {2, 3, 4}) {
        FinRing A = zmod_ring(n);
        Bimodule M = regular_bimodule(A);
        for (int t = 0; t < 10; ++t) {
            Cochain5 d = coboundary(A, M, random_cochain2(A, M, rng));
            for (CocycleMode mode : {CocycleMode::H3_2, CocycleMode::H3_3, CocycleMode::TWISTED})
                CHECK(is_cocycle(A, M, d, mode).ok());
            // g+ of a coboundary vanishes on the diagonal
            auto q = quadratic_invariant(A, M, d, CocycleMode::TWISTED);
            CHECK(q == std::vector<int>(n, 0));
            for (const Defect& def : delta3(A, M, d)) CHECK(def.value == M.M.e());
        }
    }
}

TEST_CASE("coboundary_exprs matches coboundary")
{
    std::mt19937 rng(11);
    FinRing A = zmod_ring(4);
    Bimodule M = cyclic_bimodule(A, 2);
    std::vector<LinExpr> ex = coboundary_exprs(A);
    for (int t = 0; t < 5; ++t) {
        Cochain2 nu = random_cochain2(A, M, rng);
        std::vector<int> d = coboundary(A, M, nu).slots();
        REQUIRE(ex.size() == d.size());
        for (size_t i = 0; i < d.size(); ++i) CHECK(evaluate(A, M, ex[i], nu.slots()) == d[i]);
    }
}

TEST_CASE("frozen cohomology values")
{
    FinRing Z2 = zmod_ring(2), Z4 = zmod_ring(4);
    for (CocycleMode mode : {CocycleMode::H3_2, CocycleMode::H3_3, CocycleMode::TWISTED}) {
        CohomologyGroup H = cohomology_group(Z2, regular_bimodule(Z2), mode);
        CHECK(H.invariants.empty());
        CHECK(H.representatives.empty());
        CHECK(H.solver.cocycle_orders() == std::vector<std::int64_t>{2, 2, 2, 2, 2});
        CohomologyGroup H4 = cohomology_group(Z4, regular_bimodule(Z4), mode);
        CHECK(H4.invariants == std::vector<std::int64_t>{2});
    }
    FinRing N = zero_ring(2);
    CohomologyGroup Hz = cohomology_group(N, zero_action_bimodule(N, cyclic(2)), CocycleMode::TWISTED);
    CHECK(Hz.invariants == std::vector<std::int64_t>{2, 2, 2, 2});
    CHECK(cohomology_group(Z2, zero_action_bimodule(Z2, trivial_group()), CocycleMode::TWISTED).invariants.empty());

    CHECK(em_cohomology(Z2, cyclic(4), 2) == std::vector<std::int64_t>{4});
    CHECK(em_cohomology(Z2, cyclic(4), 3) == std::vector<std::int64_t>{2});
    CHECK(em_cohomology(zmod_ring(3), cyclic(3), 3).empty());
}

TEST_CASE("block and bar equations give the same groups")
{
    for (int n : {2, 3}) {
        FinRing A = zmod_ring(n);
        Bimodule M = regular_bimodule(A);
        for (CocycleMode mode : {CocycleMode::H3_3, CocycleMode::TWISTED}) {
            auto a = cohomology_group(A, M, mode, EquationSource::Blocks, Pivot::MinimalGcd);
            auto b = cohomology_group(A, M, mode, EquationSource::Bar, Pivot::MinimalGcd);
            auto c = cohomology_group(A, M, mode, EquationSource::Blocks, Pivot::FirstNonzero);
            CHECK(a.invariants == b.invariants);
            CHECK(a.invariants == c.invariants);
            CHECK(a.solver.cocycle_orders().size() == b.solver.cocycle_orders().size());
            for (const auto& g : b.solver.cocycle_generators()) CHECK(a.solver.satisfies(g));
        }
    }
}

TEST_CASE("twisted and H3_3 cocycles coincide over unital rings")
{
    for (int n : {2, 4}) {
        FinRing A = zmod_ring(n);
        Bimodule M = regular_bimodule(A);
        auto tw = cohomology_group(A, M, CocycleMode::TWISTED);
        auto h3 = cohomology_group(A, M, CocycleMode::H3_3);
        CHECK(tw.invariants == h3.invariants);
        for (const auto& g : tw.solver.cocycle_generators()) CHECK(h3.solver.satisfies(g));
        for (const auto& g : h3.solver.cocycle_generators()) CHECK(tw.solver.satisfies(g));
    }
}

TEST_CASE("class_of is constant on cohomology classes")
{
    std::mt19937 rng(3);
    FinRing A = zmod_ring(4);
    Bimodule M = regular_bimodule(A);
    CohomologyGroup H = cohomology_group(A, M, CocycleMode::TWISTED);
    REQUIRE(H.representatives.size() == 1);
    Cochain5 r = H.representatives[0];
    CHECK(H.class_of(r) == std::vector<std::int64_t>{1});
    auto q = quadratic_invariant(A, M, r, CocycleMode::TWISTED);
    CHECK(q != std::vector<int>(4, 0));
    for (int t = 0; t < 5; ++t) {
        Cochain5 s = plus(M, r, coboundary(A, M, random_cochain2(A, M, rng)));
        CHECK(H.class_of(s) == std::vector<std::int64_t>{1});
        CHECK(quadratic_invariant(A, M, s, CocycleMode::TWISTED) == q);
    }
    CHECK(H.class_of(Cochain5::zero(4, 0)) == std::vector<std::int64_t>{0});
    Cochain5 bad = Cochain5::zero(4, 0);
    bad.gplus[1 * 4 + 1] = 1;
    CHECK_FALSE(is_cocycle(A, M, bad, CocycleMode::TWISTED).ok());
    CHECK(error_kind([&] { H.class_of(bad); }) == "NotACocycle");
}

TEST_CASE("solve_affine finds coboundary witnesses")
{
    std::mt19937 rng(5);
    FinRing A = zmod_ring(4);
    Bimodule M = regular_bimodule(A);
    std::vector<LinExpr> ex = coboundary_exprs(A);
    const int nslots = 2 * 16;
    Cochain5 d = coboundary(A, M, random_cochain2(A, M, rng));
    auto nu = solve_affine(A, M, nslots, ex, d.slots());
    REQUIRE(nu);
    for (size_t i = 0; i < ex.size(); ++i) CHECK(evaluate(A, M, ex[i], *nu) == d.slots()[i]);
    // the nontrivial class is not a coboundary
    CohomologyGroup H = cohomology_group(A, M, CocycleMode::TWISTED);
    CHECK_FALSE(solve_affine(A, M, nslots, ex, H.representatives[0].slots()));
}

TEST_CASE("modes parse")
{
    CHECK(parse_mode("h3_2") == CocycleMode::H3_2);
    CHECK(mode_name(CocycleMode::TWISTED) == "twisted");
    CHECK(error_kind([] { parse_mode("h4"); }) == "BadMode");
}
