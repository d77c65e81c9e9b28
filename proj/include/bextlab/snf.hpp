#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace bextlab {

using Int = mpz_class;
using IntMatrix = std::vector<std::vector<Int>>;  // row-major, rows x cols

IntMatrix zero_matrix(int rows, int cols);
IntMatrix identity_matrix(int n);
IntMatrix multiply(const IntMatrix& A, const IntMatrix& B);
int cols_of(const IntMatrix& A);

// Smith normal form U*A*V = D with minimal-|pivot| selection.
// diag holds the nonzero diagonal entries d_1 | d_2 | ... (positive).
struct SNF {
    std::vector<Int> diag;
    int rank = 0;
    int rows = 0, cols = 0;
    // Filled only when transforms are requested.
    IntMatrix U, Uinv, V, Vinv;
};

SNF smith_normal_form(const IntMatrix& A, bool transforms = false);

// Nontrivial invariant factors of Z^rows / (column span of A); free rank
// contributes zeros at the end.
std::vector<Int> cokernel_invariants(const IntMatrix& A, int rows);

// Diagonalization over Z/N: U*A*V = D (mod N) with D diagonal (not
// necessarily a divisibility chain). V and Vinv are always tracked; U only on
// request. Two pivot strategies are available for cross-checking.
enum class Pivot { FirstNonzero, MinimalGcd };

struct ModDiag {
    std::int64_t N = 1;
    int rows = 0, cols = 0;
    std::vector<std::int64_t> diag;  // length min(rows, cols); zeros allowed
    std::vector<std::vector<std::int64_t>> U, V, Vinv;
};

ModDiag diagonalize_mod(std::vector<std::vector<std::int64_t>> A, int cols, std::int64_t N, Pivot pivot,
                        bool want_u = false);

// Generators of {x in (Z/N)^cols : A x = 0 mod N} as a list of vectors
// together with the cyclic order of each generator (the kernel is the direct
// sum of the cyclic groups they span).
struct ModKernel {
    std::int64_t N = 1;
    std::vector<std::vector<std::int64_t>> gens;
    std::vector<std::int64_t> orders;
    // Coordinates of a kernel element in the generators (t_i mod orders[i]).
    std::vector<std::int64_t> coordinates(const std::vector<std::int64_t>& x) const;
    std::vector<std::vector<std::int64_t>> Vinv;
    std::vector<std::int64_t> scale;  // N / orders[i]
};

ModKernel kernel_mod(const std::vector<std::vector<std::int64_t>>& A, int cols, std::int64_t N, Pivot pivot);

// One solution of A x = b (mod N), or empty if none exists.
std::vector<std::int64_t> solve_mod(const std::vector<std::vector<std::int64_t>>& A, int cols,
                                    const std::vector<std::int64_t>& b, std::int64_t N, Pivot pivot,
                                    bool* solvable);

std::int64_t mod(std::int64_t a, std::int64_t n);
std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

}  // namespace bextlab
