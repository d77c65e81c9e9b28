#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bextlab/abelian.hpp"
#include "bextlab/barcx.hpp"
#include "bextlab/snf.hpp"

namespace bextlab {

// Degree-3 cochain on the bar construction; all tables hold M elements.
//   f(a,b,c)        index (a*n+b)*n+c     on [[ [a],[b],[c] ]]
//   alpha1(a,b;c)   index (a*n+b)*n+c     on [[ [a|1b],[c] ]]
//   alpha2(a;b,c)   index (a*n+b)*n+c     on [[ [a],[b|1c] ]]
//   fplus(a,b,c)    index (a*n+b)*n+c     on [[ [a|1b|1c] ]]
//   gplus(a,b)      index a*n+b           on [[ [a|2b] ]]
struct Cochain5 {
    int n = 0;
    std::vector<int> f, alpha1, alpha2, fplus, gplus;

    static Cochain5 zero(int n, int m_zero);
    std::vector<int> slots() const;
    static Cochain5 from_slots(int n, const std::vector<int>& s);
    bool operator==(const Cochain5& o) const = default;
};

// Degree-2 cochain: c on [[ [a],[b] ]], h on [[ [a|1b] ]].
struct Cochain2 {
    int n = 0;
    std::vector<int> c, h;

    static Cochain2 zero(int n, int m_zero);
    std::vector<int> slots() const;
};

enum class CocycleMode { H3_2, H3_3, TWISTED };
std::string mode_name(CocycleMode m);
CocycleMode parse_mode(const std::string& s);  // h3_2 | h3_3 | twisted

// coeff * (left) x[slot] (right); labels are ring elements or -1.
struct LinTerm {
    long long coeff = 0;
    int slot = 0;
    int left = -1;
    int right = -1;
};
using LinExpr = std::vector<LinTerm>;

// Merges like terms and drops terms killed by a zero label.
LinExpr normalize(const FinRing& A, LinExpr e);
int evaluate(const FinRing& A, const Bimodule& M, const LinExpr& e, const std::vector<int>& values);

// One equation instance: block line id, argument tuple, left minus right side.
struct BlockEquation {
    std::string id;
    std::vector<int> args;
    LinExpr expr;
};

// Hand-transcribed cocycle blocks. `which` selects the lines of the mode.
std::vector<BlockEquation> block_equations(const FinRing& A, CocycleMode mode);
// Every transcribed line (all of 46..50 plus the two twisted lines 52).
std::vector<BlockEquation> all_block_lines(const FinRing& A);
// Cocycle condition read off the bar differential (plus the twist in
// TWISTED mode), one equation per degree-4 cell.
std::vector<BlockEquation> bar_equations(const FinRing& A, CocycleMode mode);
// The 4-cell a block line lives on.
BarCell block_cell(const std::string& id, const std::vector<int>& args);
// Compares each transcribed line with the bar differential on its cell and
// reports the sign relating them (consistent per line) or a mismatch.
struct Calibration {
    Report report;
    std::vector<std::pair<std::string, int>> signs;  // line id -> +1 / -1
};
Calibration calibrate_blocks(const FinRing& A);

struct Defect {
    std::string id;
    std::vector<int> args;
    int value = 0;
};
// Evaluates every transcribed line at every tuple.
std::vector<Defect> delta3(const FinRing& A, const Bimodule& M, const Cochain5& xi);

// Twist values: on [[ [a],[b|2c] ]] (index (a*n+b)*n+c) and [[ [a|2b],[c] ]].
struct Twist {
    std::vector<int> left_cells;
    std::vector<int> right_cells;
};
Twist beta(const FinRing& A, const Bimodule& M, const Cochain5& xi);

Report is_cocycle(const FinRing& A, const Bimodule& M, const Cochain5& xi, CocycleMode mode);

// Coboundary of a degree-2 cochain through the bar differential.
Cochain5 coboundary(const FinRing& A, const Bimodule& M, const Cochain2& nu);
// The same differential as linear expressions: entry t is delta(nu) at
// degree-3 slot t in terms of degree-2 slots.
std::vector<LinExpr> coboundary_exprs(const FinRing& A);

// Generic "cocycles modulo coboundaries" over a finite bimodule: unknowns are
// M-valued slots, cocycle equations and the coboundary map are linear
// expressions with ring labels.
struct LinearCohomology {
    struct Impl;
    std::shared_ptr<const Impl> impl;

    const std::vector<std::int64_t>& invariants() const;
    const std::vector<std::int64_t>& cocycle_orders() const;
    // Representative cocycle (slot values) of the i-th invariant factor.
    std::vector<int> representative(size_t i) const;
    // Coordinates of the class of a cocycle; throws NotACocycle.
    std::vector<std::int64_t> class_of(const std::vector<int>& values) const;
    bool satisfies(const std::vector<int>& values) const;
    // Generators of the cocycle group (as slot values).
    std::vector<std::vector<int>> cocycle_generators() const;
};

LinearCohomology solve_cohomology(const FinRing& A, const Bimodule& M, int nslots, const std::vector<LinExpr>& eqs,
                                  int nlower, const std::vector<LinExpr>& delta, Pivot pivot);

// One solution of the linear system eqs[i](x) = rhs[i] in M-valued slots, or
// nullopt when it has none.
std::optional<std::vector<int>> solve_affine(const FinRing& A, const Bimodule& M, int nslots,
                                             const std::vector<LinExpr>& eqs, const std::vector<int>& rhs);

struct CohomologyGroup {
    CocycleMode mode;
    std::vector<std::int64_t> invariants;
    std::vector<Cochain5> representatives;
    LinearCohomology solver;
    std::vector<std::int64_t> class_of(const Cochain5& xi) const;
};

enum class EquationSource { Blocks, Bar };
CohomologyGroup cohomology_group(const FinRing& A, const Bimodule& M, CocycleMode mode,
                                 EquationSource src = EquationSource::Blocks, Pivot pivot = Pivot::MinimalGcd);

// a -> g+(a,a); checks the law appropriate to the mode (additive for H3_3,
// quadratic for H3_2, central and additive for TWISTED over unital A).
// Throws NotACocycle or QuadraticLawFailed.
std::vector<int> quadratic_invariant(const FinRing& A, const Bimodule& M, const Cochain5& xi, CocycleMode mode);

// H^2 of Hom(L^level(A), M) for an abelian group M (trivial actions): the
// (f+, g+) part alone, i.e. H^4(K(A,2);M) for level 2 and H^5(K(A,3);M) for 3.
std::vector<std::int64_t> em_cohomology(const FinRing& A, const FinGroup& M, int level);

}  // namespace bextlab
