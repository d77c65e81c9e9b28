#pragma once

#include <string>
#include <vector>

#include "bextlab/abelian.hpp"
#include "bextlab/cohom.hpp"
#include "bextlab/multiext.hpp"

namespace bextlab {

// Finite presentation of a categorical ring: R -> Lambda (both abelian,
// written additively, Lambda acting trivially on R) with pi0 = A, pi1 = M.
//   x[a]             section of q : Lambda -> A
//   sigma[a*n+b]     x_{a+b} = x_a + x_b + d sigma_{a,b}
//   pi1_incl[m]      M -> R onto ker d
struct RingPresentation {
    BraidedXMod rmod;
    FinRing A;
    Bimodule M;
    GroupHom q;
    std::vector<int> x;
    std::vector<int> sigma;
    std::vector<int> pi1_incl;
};

// E2 over Lambda x Lambda with coefficient rmod, the points e_{a,b} with
// j(e_{a,b}) = x_{ab} (index a*n+b), and mu as a total bijection from the
// composite E2(E2,I) to E2(I,E2), both built by compose_full.
struct MonoidData {
    MultiExt E2;
    std::vector<int> e_sections;
    std::vector<int> mu;
};

// Ids: abelian, trivial_action, q, section, sigma, pi1.
Report validate_presentation(const RingPresentation& p);
// Ids: E2.*, wings, e_sections, mu.* (check_morphism ids).
Report validate_monoid(const RingPresentation& p, const MonoidData& m);

// Element of M with pi1_incl = r, or -1 when r is not in ker d.
int pi1_index(const RingPresentation& p, int r);

struct BimoduleActionWitness {
    std::vector<int> left;   // left[a*|M| + m]
    std::vector<int> right;  // right[m*|A| + a]
};
// Reads ry from s1(r,y) = e_y(-ry) and xr from s2(x,r) = e_x(-xr).
// Throws ActionMismatch on disagreement with p.M or between representatives.
BimoduleActionWitness derive_bimodule(const RingPresentation& p, const MonoidData& m);

struct AdditiveCocycle {
    std::vector<int> fplus;  // M, index (a*n+b)*n+c
    std::vector<int> gplus;  // M, index a*n+b
};
// Throws ValueNotInPi1.
AdditiveCocycle extract_additive_cocycle(const RingPresentation& p);

struct AlphaData {
    std::vector<int> alpha1, alpha2;  // M
    std::vector<int> g1, g2;          // R
};
// Throws FiberMismatch, also when the associativity defects of g1, g2 are
// not the ones forced by f+.
AlphaData extract_alphas(const RingPresentation& p, const MonoidData& m);

// Throws MuNotDefinedAtPoint.
std::vector<int> extract_f(const RingPresentation& p, const MonoidData& m);

Cochain5 decompose(const RingPresentation& p, const MonoidData& m);

// A cocycle cohomologous to xi whose (f+, g+) part is the skeleton's and
// whose f, alpha1, alpha2 vanish when an argument is 0. Throws
// InconsistentSkeleton.
Cochain5 align_cocycle(const Cochain5& xi, const RingPresentation& skeleton);
// Throws InconsistentSkeleton (also when the built data fails validation).
MonoidData reconstruct(const Cochain5& xi, const RingPresentation& skeleton);

// a f(b,c,d) - f(ab,c,d) + f(a,bc,d) - f(a,b,cd) + f(a,b,c) d = 0, id
// pentagon, cross-checked against the transcribed cocycle line (id
// pentagon_line).
Report pentagon_report(const FinRing& A, const Bimodule& M, const std::vector<int>& f);
// Decomposes and checks; throws PentagonViolated naming the quadruple.
Report pentagon_check(const RingPresentation& p, const MonoidData& m);

// ---------------------------------------------------------------- builders

// R = M, Lambda = A, d = 0, x = id. bracket[a*n+b] and sigma[a*n+b] are M
// values; the bracket must be biadditive.
RingPresentation split_presentation(const FinRing& A, const Bimodule& M, const std::vector<int>& bracket,
                                    const std::vector<int>& sigma);
// R = Lambda = Z/4, d = 2, A = M = Z/2 with the given bimodule; sigma_{1,1}
// = s (1 or 3), bracket <y,z> = 2yz when `bracket` is set.
RingPresentation doubling_presentation(const Bimodule& M, int s, bool bracket);
// R = Lambda = Z/2 x Z/2, d(r1,r2) = (0,r1), A = M = Z/2.
RingPresentation product_presentation(const Bimodule& M);

// Section change x'_a = x_a + d shift[a] (shift[0] must be 0); e_sections
// are transported along the presentation's sections.
std::pair<RingPresentation, MonoidData> change_section(const RingPresentation& p, const MonoidData& m,
                                                       const std::vector<int>& shift);
// e_{a,b} -> e_{a,b} . pi1_incl(delta[a*n+b]).
MonoidData change_e_sections(const RingPresentation& p, const MonoidData& m, const std::vector<int>& delta);
// E2 retrivialized by w (index y*|Lambda|+z, values in R); e_sections and
// mu are transported along the resulting isomorphism.
MonoidData transport_monoid(const MonoidData& m, const std::vector<int>& w);

struct CatringInstance {
    std::string name;
    RingPresentation p;
    MonoidData m;
};
// Reconstructed instances over all built-in skeletons (groups of order <= 4)
// and a spread of cocycles; deterministic.
std::vector<CatringInstance> generate_instances();

}  // namespace bextlab
