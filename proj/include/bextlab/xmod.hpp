#pragma once

#include <functional>

#include "bextlab/fingroup.hpp"

namespace bextlab {

// Right crossed module d: G -> Pi.
struct XMod {
    FinGroup G;
    FinGroup Pi;
    std::vector<int> boundary;  // G -> Pi
    std::vector<int> action;    // action[g*|Pi| + x] = g^x

    int d(int g) const { return boundary[g]; }
    int act(int g, int x) const { return action[g * Pi.order + x]; }
    // Left action derived from the right one: x.g = g^{x^-1}.
    int lact(int x, int g) const { return act(g, Pi.inverse(x)); }
    GroupHom boundary_hom() const { return {G, Pi, boundary}; }
    RightAction right_action() const { return {Pi, G, action}; }
    bool operator==(const XMod& o) const
    {
        return G == o.G && Pi == o.Pi && boundary == o.boundary && action == o.action;
    }
};

struct BraidedXMod {
    XMod base;
    std::vector<int> bracket;  // bracket[x*|Pi| + y] = <x,y>

    int br(int x, int y) const { return bracket[x * base.Pi.order + y]; }
    const FinGroup& G() const { return base.G; }
    const FinGroup& Pi() const { return base.Pi; }
    bool operator==(const BraidedXMod& o) const { return base == o.base && bracket == o.bracket; }
};

struct HomotopyData {
    FinGroup pi0;
    FinGroup pi1;
    std::vector<int> pi0_proj;  // Pi -> pi0
    std::vector<int> pi1_incl;  // pi1 -> G
};

Report validate_xmod(const XMod& m);
Report validate_braiding(const BraidedXMod& b);
bool is_symmetric(const BraidedXMod& b);
bool is_picard(const BraidedXMod& b);
HomotopyData homotopy(const XMod& m);
// The coordinate chi_{u,v} = <su,tv>^-1 of the braiding on trivialized torsors.
int braiding_coordinate(const BraidedXMod& b, int su, int tv);

// Builders.
XMod identity_xmod(const FinGroup& G);                 // id: G -> G, conjugation
XMod zero_xmod(const FinGroup& G, const FinGroup& Pi);  // trivial map, trivial action
XMod make_xmod(const FinGroup& G, const FinGroup& Pi, std::vector<int> boundary);  // trivial action
BraidedXMod trivially_braided(const XMod& m);
BraidedXMod with_bracket(const XMod& m, const std::function<int(int, int)>& br);

// Symmetry square of the braiding in the d = 0, trivial-action form: <xz,yw> expands
// bilinearly and the bracket is antisymmetric.
bool braiding_square_holds(const BraidedXMod& b);

}  // namespace bextlab
