#include "doctest.h"

#include "bextlab/fixtures.hpp"
#include "bextlab/xmod.hpp"
#include "support.hpp"

using namespace bextlab;

TEST_CASE("crossed module axioms")
{
    CHECK(validate_xmod(identity_xmod(cyclic(3))).ok());
    CHECK(validate_xmod(make_xmod(cyclic(4), cyclic(2), {0, 1, 0, 1})).ok());
    CHECK(validate_xmod(zero_xmod(cyclic(2), cyclic(3))).ok());

    XMod bad = make_xmod(cyclic(2), cyclic(2), {0, 1});
    bad.action = {0, 0, 0, 0};  // 1^x = 0: not an automorphism
    CHECK_FALSE(validate_xmod(bad).ok());

    // inversion of Z/3 through Z/2 with d = 0 is fine, with d = "parity" it
    // is not even a homomorphism
    XMod inv = zero_xmod(cyclic(3), cyclic(2));
    inv.action = {0, 0, 1, 2, 2, 1};
    CHECK(validate_xmod(inv).ok());
    inv.boundary = {0, 1, 1};
    CHECK_FALSE(validate_xmod(inv).ok());
}

TEST_CASE("braidings: symmetric and Picard flags")
{
    BraidedXMod z2 = z2_square_bracket();
    BraidedXMod z4 = z4_mult_bracket();
    CHECK(validate_braiding(z2).ok());
    CHECK(validate_braiding(z4).ok());
    CHECK(is_symmetric(z2));
    CHECK_FALSE(is_picard(z2));  // <1,1> = 1
    CHECK_FALSE(is_symmetric(z4));
    BraidedXMod triv = trivially_braided(zero_xmod(cyclic(2), cyclic(2)));
    CHECK(is_picard(triv));
    CHECK(braiding_coordinate(z4, 1, 3) == 1);  // -<1,3> = -3

    // a bracket that is not biadditive
    BraidedXMod skew = with_bracket(zero_xmod(cyclic(2), cyclic(2)), [](int x, int y) { return x | y; });
    CHECK_FALSE(validate_braiding(skew).ok());
}

TEST_CASE("boundary-compatibility of the bracket")
{
    // For the identity crossed module of an abelian group the commutator
    // bracket is trivial and the boundary identities hold.
    BraidedXMod b = trivially_braided(identity_xmod(cyclic(4)));
    Report r = validate_braiding(b);
    CHECK(r.ok("boundary_commutator"));
    CHECK(r.ok("right_boundary"));
    CHECK(r.ok("left_boundary"));
    // A nonzero bracket on id: Z/2 -> Z/2 breaks the boundary condition.
    BraidedXMod wrong = with_bracket(identity_xmod(cyclic(2)), [](int x, int y) { return x * y; });
    CHECK_FALSE(validate_braiding(wrong).ok("boundary_commutator"));
}

TEST_CASE("homotopy groups")
{
    HomotopyData h = homotopy(make_xmod(cyclic(4), cyclic(4), {0, 2, 0, 2}));
    CHECK(h.pi1.order == 2);
    CHECK(h.pi1_incl == std::vector<int>{0, 2});
    CHECK(h.pi0.order == 2);
    CHECK(h.pi0_proj == std::vector<int>{0, 1, 0, 1});

    HomotopyData t = homotopy(z4_mult_bracket().base);
    CHECK(t.pi1.order == 4);
    CHECK(t.pi0.order == 4);
}

TEST_CASE("the braiding square holds exactly for symmetric brackets")
{
    CHECK(braiding_square_holds(z2_square_bracket()));
    CHECK(braiding_square_holds(trivially_braided(zero_xmod(cyclic(3), cyclic(3)))));
    // 2yz != 0 on Z/4
    CHECK_FALSE(braiding_square_holds(z4_mult_bracket()));
    CHECK(error_kind([] { braiding_square_holds(trivially_braided(identity_xmod(cyclic(2)))); }) == "Unsupported");
}
