#include "doctest.h"

#include "bextlab/fixtures.hpp"
#include "bextlab/multiext.hpp"
#include "support.hpp"

using namespace bextlab;

namespace {

XMod from_trivial(const FinGroup& H) { return make_xmod(trivial_group(), H, {H.e()}); }

MultiExt over_points(const BiextCocycle& c) { return from_cocycle(butterfly_over(c, from_trivial(c.H), from_trivial(c.K))); }

const BiextCocycle& fixture(const char* name)
{
    static const auto all = biext_fixtures();
    for (const auto& f : all)
        if (f.name == name) return f.c;
    throw Error("UnknownFixture", name);
}

}  // namespace

TEST_CASE("from_cocycle and to_cocycle are inverse")
{
    for (const auto& f : biext_fixtures()) {
        MultiExt m = over_points(f.c);
        Report r = validate_multiext(m);
        CHECK_MESSAGE(r.ok(), f.name << ": " << r.str());
        ButterflyCocycle back = to_cocycle(m, canonical_sections(m));
        CHECK(back.base.g1 == f.c.g1);
        CHECK(back.base.g2 == f.c.g2);
        CHECK(back.base.x == f.c.x);
        CHECK(iso_check(m, from_cocycle(back)));
    }
}

TEST_CASE("identity butterflies")
{
    MultiExt I = identity_multiext(z2_identity());
    CHECK(I.arity == 1);
    CHECK(I.size == 4);
    CHECK(validate_multiext(I).ok());
    // s(h) = (dh, h^-1) at index y*|H1| + g
    CHECK(I.section(0, {1}) == 1 * 2 + 1);
    CHECK(validate_multiext(identity_multiext(trivial_to_z2())).ok());
    CHECK(validate_multiext(trivial_multiext({from_trivial(cyclic(2)), from_trivial(cyclic(2))}, z2_to_trivial())).ok());
}

TEST_CASE("torsor structure")
{
    MultiExt m = over_points(f2_trilinear());
    for (const auto& fib : m.fibers())
        for (int e : fib)
            for (int f : fib) {
                int g = torsor_difference(m, e, f);
                REQUIRE(g >= 0);
                CHECK(m.act(e, g) == f);
            }
    CHECK(torsor_difference(m, m.fibers()[0][0], m.fibers()[1][0]) == -1);
    int u = line_unit(m, 0, {0, 1});
    CHECK(m.prod(0, u, u) == u);
}

TEST_CASE("composition with identities")
{
    MultiExt I = identity_multiext(trivial_to_z2());
    for (const char* name : {"f2_trilinear", "f2_pairing", "trivial_z2"}) {
        MultiExt E = over_points(fixture(name));
        if (!(E.wings[0] == I.coeff.base)) continue;
        Composite C = compose_full(E, {I, I});
        CHECK(validate_multiext(C.Q).ok());
        CHECK(check_choice_independence(C, E, {I, I}).ok());
        auto phi = iso_check(C.Q, E);
        REQUIRE(phi);
        CHECK(check_morphism(C.Q, E, *phi).ok());
        // and on the other side
        MultiExt left = compose(identity_multiext(E.coeff), {E});
        CHECK(iso_check(left, E));
    }
}

TEST_CASE("arity arithmetic and associativity")
{
    MultiExt T = over_points(f2_trilinear());
    MultiExt P = over_points(f2_pairing());
    MultiExt I = identity_multiext(trivial_to_z2());
    MultiExt C = compose(T, {P, I});
    CHECK(C.arity == 3);
    CHECK(C.size == 16);
    CHECK(validate_multiext(C).ok());
    std::vector<int> phi = assoc_witness(T, {P, I}, {I, I, I});
    MultiExt lhs = compose(compose(T, {P, I}), {I, I, I});
    MultiExt rhs = compose(T, {compose(P, {I, I}), compose(I, {I})});
    CHECK(check_morphism(lhs, rhs, phi).ok());
}

TEST_CASE("wing and coefficient mismatches")
{
    MultiExt T = over_points(f2_trilinear());
    MultiExt Z = over_points(z4_bracket_biext());
    MultiExt I2 = identity_multiext(z2_identity());
    CHECK(error_kind([&] { compose(T, {Z, I2}); }) == "WingMismatch");
    CHECK(error_kind([&] { compose(T, {I2}); }) != "");
    MultiExt P = over_points(f2_pairing());
    CHECK_FALSE(iso_check(T, P));
}

TEST_CASE("contracted product")
{
    MultiExt Z = over_points(z4_bracket_biext());
    CHECK(error_kind([&] { contracted_product(Z, Z); }) == "NotSymmetric");
    MultiExt T = over_points(f2_trilinear());
    MultiExt Q = contracted_product(T, T);
    CHECK(validate_multiext(Q).ok());
    // T + T is cohomologically trivial
    CHECK(iso_check(Q, over_points(trivial_biext(cyclic(2), cyclic(2), z2_to_trivial()))));
    CHECK(error_kind([&] { contracted_product(T, over_points(f2_pairing())); }) != "");
}

TEST_CASE("morphism checks catch broken maps")
{
    MultiExt T = over_points(f2_trilinear());
    std::vector<int> id(T.size);
    for (int e = 0; e < T.size; ++e) id[e] = e;
    CHECK(check_morphism(T, T, id).ok());
    std::vector<int> swap = id;
    std::swap(swap[0], swap[1]);  // same fiber, breaks equivariance only at a point
    Report r = check_morphism(T, T, swap);
    CHECK_FALSE(r.ok());
    CHECK(r.ok("base"));
    std::vector<int> cross = id;
    std::swap(cross[0], cross[2]);
    CHECK_FALSE(check_morphism(T, T, cross).ok("base"));
}
