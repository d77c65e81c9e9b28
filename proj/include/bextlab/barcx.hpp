#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "bextlab/abelian.hpp"
#include "bextlab/snf.hpp"

namespace bextlab {

// Generators of the truncated iterated bar complexes L^2, L^3 of the
// additive group of A, in degrees 0..3:
//   P0 [a]          P1 [a|1b]
//   P111 [a|1b|1c]  P2 [a|2b]
//   P1111 [a|1b|1c|1d]  P112 [a|1b|2c]  P211 [a|2b|1c]  P3 [a|3b]
enum class LShape : int { P0, P1, P111, P2, P1111, P112, P211, P3 };

int shape_arity(LShape s);
int shape_degree(LShape s);

struct LGen {
    LShape s = LShape::P0;
    std::array<int, 4> x{};

    auto key() const { return std::make_pair(static_cast<int>(s), x); }
    bool operator<(const LGen& o) const { return key() < o.key(); }
    bool operator==(const LGen& o) const { return key() == o.key(); }
    std::string str() const;
};

LGen gen0(int a);
LGen gen1(int a, int b);
LGen gen111(int a, int b, int c);
LGen gen2(int a, int b);
LGen gen1111(int a, int b, int c, int d);
LGen gen112(int a, int b, int c);
LGen gen211(int a, int b, int c);
LGen gen3(int a, int b);

using LChain = std::vector<std::pair<long long, LGen>>;

// Differential of L (depends only on the additive group).
LChain L_boundary(const FinRing& A, const LGen& g);
// Mac Lane product of two generators; zero when the pair is not listed.
LChain maclane_product(const FinRing& A, const LGen& u, const LGen& v);
// Combines equal generators and drops zero coefficients (sorted output).
LChain normalize(LChain c);

// Generators of a given shape, tuples in lexicographic order.
std::vector<LGen> generators(const FinRing& A, LShape s);

struct ChainComplex {
    std::vector<std::vector<std::string>> basis;  // per degree
    std::vector<IntMatrix> diff;                  // diff[d]: C_d -> C_{d-1}; diff[0] is empty
    int top() const { return static_cast<int>(basis.size()) - 1; }
};

// L^level(A) in degrees 0..3; level 2 omits the [a|3b] generators.
ChainComplex build_L(const FinRing& A, int level);
Report check_complex(const ChainComplex& C);
// Invariant factors of H_n (entries 0 stand for free summands).
std::vector<Int> homology(const ChainComplex& C, int n);

// Cells of the reduced multiplicative bar construction.
using BarCell = std::vector<LGen>;
int cell_degree(const BarCell& c);
std::string cell_str(const BarCell& c);

// A labelled term coeff * (left) [[cell]] (right); labels are elements of A
// coming from the augmentation, -1 when absent.
struct BarTerm {
    long long coeff = 0;
    BarCell cell;
    int left = -1;
    int right = -1;
};

std::vector<BarTerm> bar_boundary(const FinRing& A, const BarCell& c);

struct BarComplex {
    FinRing A;
    int level = 2;
    std::vector<std::vector<BarCell>> cells;  // degrees 0..4
    std::vector<std::map<BarCell, int>> index;
    int find(const BarCell& c) const;
};

// Cells up to total degree 4, shapes in table order, tuples lexicographic.
BarComplex build_bar(const FinRing& A, int level);
// Checks the composite differential vanishes on every cell of the given
// degree. Labelled terms are compared in Z, A (left), A (right) and A (x) A.
Report check_bar_square(const BarComplex& B, int degree);

}  // namespace bextlab
