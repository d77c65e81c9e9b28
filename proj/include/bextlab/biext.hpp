#pragma once

#include <optional>
#include <vector>

#include "bextlab/xmod.hpp"

namespace bextlab {

// Biextension of H, K by a braided crossed module, on the trivialized model
// E = H x K x G1 with j(h,k,a) = x(h,k) d(a).
//   g1(h,h';k)  index (h*|H| + h')*|K| + k
//   g2(h;k,k')  index (h*|K| + k)*|K| + k'
//   x(h,k)      index h*|K| + k
struct BiextCocycle {
    FinGroup H;
    FinGroup K;
    BraidedXMod coeff;
    std::vector<int> g1, g2, x;

    int G1(int h, int h2, int k) const { return g1[(h * H.order + h2) * K.order + k]; }
    int G2(int h, int k, int k2) const { return g2[(h * K.order + k) * K.order + k2]; }
    int X(int h, int k) const { return x[h * K.order + k]; }
};

struct Point {
    int h = 0, k = 0, a = 0;
    bool operator==(const Point&) const = default;
};

BiextCocycle trivial_biext(const FinGroup& H, const FinGroup& K, const BraidedXMod& coeff);

// Report ids eq16 .. eq20 (plus "shape" for malformed tables).
Report verify_biext(const BiextCocycle& c);

int jmap(const BiextCocycle& c, const Point& p);
Point act(const BiextCocycle& c, const Point& p, int g);  // right G1 action
// law 1 needs equal k, law 2 equal h; throws CoordinateMismatch.
Point partial_product(const BiextCocycle& c, int law, const Point& p, const Point& q);

// d with (u x1 u') x2 (v x1 v') = ((u x2 v) x1 (u' x2 v')) . d
// for u, u', v, v' over (h,k), (h',k), (h,k'), (h',k').
int interchange_defect(const BiextCocycle& c, const Point& u, const Point& u2, const Point& v, const Point& v2);
// (<j(u'),j(v)>^{j(v')})^-1
int interchange_bracket(const BiextCocycle& c, const Point& u2, const Point& v, const Point& v2);

// Cocycle of the same model with respect to the fiber points (h,k,w(h,k)).
BiextCocycle change_trivialization(const BiextCocycle& c, const std::vector<int>& w);
// The cocycle defined by u through the coboundary identities.
BiextCocycle coboundary_cocycle(const FinGroup& H, const FinGroup& K, const BraidedXMod& coeff,
                                const std::vector<int>& u);
// Witness u (index h*|K|+k) or nothing; throws SearchSpaceTooLarge when
// |G1|^(|H||K|) exceeds max_search().
std::optional<std::vector<int>> is_coboundary(const BiextCocycle& c);

// Sum of two cocycles over the same H, K and an abelian coefficient with
// trivial action, matching the contracted product: x = x1 x2,
// g1 = g1 g1' <x2(h,k), x1(h',k)>^-1, g2 = g2 g2' <x2(h,k), x1(h,k')>^-1.
// Throws Unsupported for other coefficients, BaseMismatch for other bases.
BiextCocycle biext_sum(const BiextCocycle& c1, const BiextCocycle& c2);

// Butterfly: base biextension over H0, K0 plus trivializations of the
// pullbacks along the wings dH: H1 -> H0, dK: K1 -> K0.
//   u1(h,z)  index h*|K0| + z   (h in H1, z in K0)
//   u2(y,k)  index y*|K1| + k   (y in H0, k in K1)
// The trivializing points are s1(h,z) = (dh, z, u1(h,z)^-1) and
// s2(y,k) = (y, dk, u2(y,k)^-1).
struct ButterflyCocycle {
    BiextCocycle base;
    XMod wingH;  // H1 -> H0
    XMod wingK;  // K1 -> K0
    std::vector<int> u1, u2;

    const FinGroup& H1() const { return wingH.G; }
    const FinGroup& K1() const { return wingK.G; }
    int U1(int h, int z) const { return u1[h * base.K.order + z]; }
    int U2(int y, int k) const { return u2[y * wingK.G.order + k]; }
};

ButterflyCocycle butterfly_over(const BiextCocycle& base, const XMod& wingH, const XMod& wingK);  // u = e
Point s1_point(const ButterflyCocycle& b, int h, int z);
Point s2_point(const ButterflyCocycle& b, int y, int k);

// Retrivialization of the whole butterfly: points (y,z,a) become
// (y,z,w(y,z)^-1 a); the section cocycles follow.
ButterflyCocycle change_trivialization(const ButterflyCocycle& b, const std::vector<int>& w);

// Report ids eq29, restriction, eq30, eq22 (and "base" prefixed base checks).
Report verify_butterfly(const ButterflyCocycle& b);

// Both commutation identities of a braided butterfly; braidH and braidK
// must have base crossed modules equal to the wings. Ids commute1, commute2.
Report braided_butterfly_check(const ButterflyCocycle& b, const BraidedXMod& braidH, const BraidedXMod& braidK);

}  // namespace bextlab
