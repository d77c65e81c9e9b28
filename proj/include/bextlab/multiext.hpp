#pragma once

#include <map>
#include <optional>
#include <vector>

#include "bextlab/biext.hpp"

namespace bextlab {

// Explicit finite n-extension (n-butterfly) E over H_{1,0} x ... x H_{n,0}
// by a braided crossed module G1 -> G0.
//   base[e]          the tuple p(e)
//   j[e]             structural map to G0
//   rightG[e*|G1|+g] e.g
//   prods[i][e*size+f]  e x_i f, -1 where undefined
//   sections[i][t]   s_i at the mixed-radix tuple t whose i-th digit runs
//                    over H_{i,1} and the others over H_{l,0}
struct MultiExt {
    int arity = 0;
    std::vector<XMod> wings;
    BraidedXMod coeff;
    int size = 0;
    std::vector<std::vector<int>> base;
    std::vector<int> j;
    std::vector<int> rightG;
    std::vector<std::vector<int>> prods;
    std::vector<std::vector<int>> sections;

    int act(int e, int g) const { return rightG[e * coeff.G().order + g]; }
    int prod(int i, int e, int f) const { return prods[i][e * size + f]; }
    // g.e = e.g^{j(e)}
    int lact(int g, int e) const { return act(e, coeff.base.act(g, j[e])); }

    int base_count() const;                       // |H_{1,0}| ... |H_{n,0}|
    int base_index(const std::vector<int>& t) const;
    std::vector<int> base_tuple(int idx) const;
    int section_count(int i) const;
    int section_index(int i, const std::vector<int>& t) const;
    std::vector<int> section_tuple(int i, int idx) const;
    int section(int i, const std::vector<int>& t) const { return sections[i][section_index(i, t)]; }
    // Elements over each base tuple, in increasing index order.
    std::vector<std::vector<int>> fibers() const;
};

// Report ids: shape, torsor, action_compat, product_fiber, homomorphism,
// associativity, unit, interchange, section_base, j_section, restriction,
// eq24 (multiplicative sections), eq25 (central), eq22 (compatibility).
Report validate_multiext(const MultiExt& m);

// g with e.g = f, or -1 when e, f lie in different fibers.
int torsor_difference(const MultiExt& m, int e, int f);
// The x_i unit on the line through the base tuple t (t_i must be the identity).
int line_unit(const MultiExt& m, int i, const std::vector<int>& t);

MultiExt from_cocycle(const ButterflyCocycle& b);
// One point per fiber (indexed by base_index), least element by default.
std::vector<int> canonical_sections(const MultiExt& m);
ButterflyCocycle to_cocycle(const MultiExt& m, const std::vector<int>& section_choice);

// Arity-1 identity butterfly of H1 -> H0: E = H0 x H1, j(y,g) = y dg,
// (y,g)(y',g') = (yy', g^{y'} g'), s(h) = (dh, h^-1).
MultiExt identity_multiext(const BraidedXMod& H);
// E = H_{1,0} x ... x H_{n,0} x G1 with componentwise products.
MultiExt trivial_multiext(const std::vector<XMod>& wings, const BraidedXMod& coeff);

// Juxtaposition composite together with its presentation as classes of
// tuples (v_1, ..., v_n, u).
struct Composite {
    MultiExt Q;
    std::vector<std::vector<int>> tuples;  // points of the fiber product
    std::vector<int> cls;                  // tuple index -> class
    std::vector<int> rep;                  // class -> least tuple index
    std::map<std::vector<int>, int> tuple_index;

    int class_of(const std::vector<int>& tuple) const;
};

// Throws WingMismatch or NonBraidedCoefficient.
Composite compose_full(const MultiExt& E, const std::vector<MultiExt>& F);
MultiExt compose(const MultiExt& E, const std::vector<MultiExt>& F);
// Recomputes every product from every pair of representatives; id
// choice_independence.
Report check_choice_independence(const Composite& C, const MultiExt& E, const std::vector<MultiExt>& F);
// [v_1..v_n,u] -> [g_1(v_1)..g_n(v_n), f(u)] between composites.
std::vector<int> map_compose(const Composite& C, const Composite& D, const std::vector<int>& f,
                             const std::vector<std::vector<int>>& g);

// Bijection phi: m1 -> m2 preserving base, j, G1-action, products and
// sections. Report ids bijection, base, j, equivariant, products, sections.
Report check_morphism(const MultiExt& m1, const MultiExt& m2, const std::vector<int>& phi);
// Fiberwise search; throws SearchSpaceTooLarge past max_search() nodes.
std::optional<std::vector<int>> iso_check(const MultiExt& m1, const MultiExt& m2);

// Isomorphism compose(compose(E,F),G) -> compose(E, compose(F_i,G_i)).
// G holds the second-level butterflies in order; F_i consumes F_i.arity of them.
// Throws AssociatorMissing when none exists.
std::vector<int> assoc_witness(const MultiExt& E, const std::vector<MultiExt>& F, const std::vector<MultiExt>& G);

// Fiberwise contracted product; throws NotSymmetric and BaseMismatch.
MultiExt contracted_product(const MultiExt& m1, const MultiExt& m2);

}  // namespace bextlab
