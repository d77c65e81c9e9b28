#include "doctest.h"

#include "bextlab/fingroup.hpp"
#include "support.hpp"

using namespace bextlab;

TEST_CASE("cyclic arithmetic")
{
    FinGroup Z4 = cyclic(4);
    CHECK(Z4.order == 4);
    CHECK(Z4.inverse(1) == 3);
    CHECK(Z4.op(3, 3) == 2);
    CHECK(Z4.element_order(2) == 2);
    CHECK(Z4.power(1, 7) == 3);
    CHECK(cyclic(1).order == 1);
    CHECK(cyclic(1) == trivial_group());
}

TEST_CASE("direct product indexing and isomorphism with cyclic(6)")
{
    FinGroup P = direct_product(cyclic(2), cyclic(3));
    CHECK(P.order == 6);
    // (1,2) has index 1*3+2 and (1,2)+(1,2) = (0,1)
    CHECK(P.op(5, 5) == 1);
    CHECK(P.is_abelian());
    auto phi = find_isomorphism(P, cyclic(6));
    REQUIRE(phi);
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) CHECK((*phi)[P.op(a, b)] == cyclic(6).op((*phi)[a], (*phi)[b]));
    CHECK_FALSE(find_isomorphism(direct_product(cyclic(2), cyclic(2)), cyclic(4)));
}

TEST_CASE("make_group rejects bad tables")
{
    CHECK(error_kind([] { make_group({{0, 1}, {1, 1}}); }) == "NoInverse");
    CHECK(error_kind([] { make_group({{1, 0}, {0, 0}}); }) != "");
    CHECK(error_kind([] { make_group({{0, 1, 2}, {1, 2, 0}}); }) == "BadTable");
    // x*y = x+y+1 mod 3 has identity 2: accepted, identity found
    FinGroup G = make_group({{1, 2, 0}, {2, 0, 1}, {0, 1, 2}});
    CHECK(G.e() == 2);
}

TEST_CASE("non-associative table")
{
    // a loop of order 5 without associativity
    std::vector<std::vector<int>> t = {
        {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
    CHECK(error_kind([&] { make_group(t); }) == "NotAssociative");
}

TEST_CASE("homomorphisms and actions")
{
    FinGroup Z4 = cyclic(4), Z2 = cyclic(2);
    CHECK(check_hom({Z4, Z2, {0, 1, 0, 1}}).ok());
    CHECK_FALSE(check_hom({Z4, Z2, {0, 1, 1, 0}}).ok());
    CHECK(kernel_elements({Z4, Z2, {0, 1, 0, 1}}) == std::vector<int>{0, 2});
    CHECK(image_elements({Z2, Z4, {0, 2}}) == std::vector<int>{0, 2});
    CHECK(check_action(trivial_action(Z2, Z4)).ok());
    // S3 from permutations: conjugation is an action
    std::vector<std::vector<int>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            std::vector<int> c(3);
            for (int i = 0; i < 3; ++i) c[i] = perms[b][perms[a][i]];
            for (int k = 0; k < 6; ++k)
                if (perms[k] == c) t[a][b] = k;
        }
    FinGroup S3 = make_group(t);
    CHECK_FALSE(S3.is_abelian());
    RightAction conj = conjugation_action(S3);
    CHECK(check_action(conj).ok());
    for (int g = 0; g < 6; ++g)
        for (int x = 0; x < 6; ++x) CHECK(conj(g, x) == S3.op(S3.op(S3.inverse(x), g), x));
}
