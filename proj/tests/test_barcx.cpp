#include "doctest.h"

#include "bextlab/barcx.hpp"

using namespace bextlab;

namespace {

LChain boundary_of(const FinRing& A, const LChain& c)
{
    LChain out;
    for (auto& [k, g] : c)
        for (auto& [k2, h] : L_boundary(A, g)) out.push_back({k * k2, h});
    return normalize(out);
}

LChain product_of(const FinRing& A, const LChain& u, const LChain& v)
{
    LChain out;
    for (auto& [k, g] : u)
        for (auto& [k2, h] : v)
            for (auto& [k3, t] : maclane_product(A, g, h)) out.push_back({k * k2 * k3, t});
    return normalize(out);
}

LChain scaled(LChain c, long long s)
{
    for (auto& t : c) t.first *= s;
    return c;
}

LChain sum(LChain a, const LChain& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return normalize(a);
}

}  // namespace

TEST_CASE("generator census")
{
    FinRing Z3 = zmod_ring(3);
    CHECK(generators(Z3, LShape::P0).size() == 3);
    CHECK(generators(Z3, LShape::P111).size() == 27);
    CHECK(generators(Z3, LShape::P1111).size() == 81);
    ChainComplex L2 = build_L(Z3, 2), L3 = build_L(Z3, 3);
    // [a|3b] only at level 3
    CHECK(L2.basis[3].size() + 9 == L3.basis[3].size());
    CHECK(L3.basis[1].size() == 9);
    CHECK(L3.basis[2].size() == 27 + 9);

    BarComplex B = build_bar(zmod_ring(2), 2);
    CHECK(B.cells[3].size() == 36);
    CHECK(B.cells[0].size() == 1);
    CHECK(B.find(B.cells[3][5]) == 5);
}

TEST_CASE("L is a complex")
{
    for (int n : {2, 3, 4})
        for (int level : {2, 3}) {
            FinRing A = zmod_ring(n);
            CHECK(check_complex(build_L(A, level)).ok());
            for (LShape s : {LShape::P111, LShape::P2, LShape::P1111, LShape::P112, LShape::P211, LShape::P3})
                for (const LGen& g : generators(A, s)) CHECK(boundary_of(A, L_boundary(A, g)).empty());
        }
}

TEST_CASE("Leibniz rule for the product table in low degree")
{
    for (int n : {2, 3, 4}) {
        FinRing A = zmod_ring(n);
        for (const LGen& u : generators(A, LShape::P1))
            for (const LGen& v : generators(A, LShape::P1)) {
                LChain lhs = boundary_of(A, maclane_product(A, u, v));
                LChain rhs = sum(product_of(A, L_boundary(A, u), {{1, v}}), scaled(product_of(A, {{1, u}}, L_boundary(A, v)), -1));
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("homology of the truncated complexes")
{
    // H_2 of L^3 is A/2A, of L^2 is Gamma(A)
    CHECK(homology(build_L(zmod_ring(2), 3), 2) == std::vector<Int>{2});
    CHECK(homology(build_L(zmod_ring(3), 3), 2).empty());
    CHECK(homology(build_L(zmod_ring(4), 3), 2) == std::vector<Int>{2});
    CHECK(homology(build_L(zmod_ring(2), 2), 2) == std::vector<Int>{4});
    CHECK(homology(build_L(zmod_ring(3), 2), 2) == std::vector<Int>{3});
    CHECK(homology(build_L(zmod_ring(4), 2), 2) == std::vector<Int>{8});
    // H_0 = A and H_1 = 0
    CHECK(homology(build_L(zmod_ring(4), 3), 0) == std::vector<Int>{4});
    CHECK(homology(build_L(zmod_ring(4), 3), 1).empty());
    // only the additive group matters
    CHECK(homology(build_L(zero_ring(2), 3), 2) == std::vector<Int>{2});
}

TEST_CASE("bar differential squares to zero")
{
    BarComplex B = build_bar(zmod_ring(2), 3);
    CHECK(check_bar_square(B, 2).ok());
    CHECK(check_bar_square(B, 3).ok());
    CHECK(check_bar_square(B, 4).ok());
    BarComplex N = build_bar(zero_ring(2), 2);
    CHECK(check_bar_square(N, 4).ok());
}
