#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "bextlab/fingroup.hpp"

namespace bextlab {

// Additive helpers for abelian groups stored as FinGroup.
int add(const FinGroup& G, int a, int b);
int neg(const FinGroup& G, int a);
int sub(const FinGroup& G, int a, int b);
int times(const FinGroup& G, long long n, int a);  // n*a, n may be negative

// A finite abelian group written as a direct sum of cyclic groups Z/orders[i].
struct AbelianDecomp {
    std::vector<std::int64_t> orders;           // invariant factors, all > 1
    std::vector<std::vector<std::int64_t>> coords;  // element -> coordinates
    std::vector<int> gens;                       // element generating factor i
    std::int64_t exponent = 1;                   // lcm of orders
    std::map<std::vector<std::int64_t>, int> lookup;
    // Element with the given coordinates (reduced modulo the orders).
    int element(std::vector<std::int64_t> c) const;
};

// Invariant-factor decomposition via Smith normal form of the presentation
// <e_x | e_x + e_y - e_{x+y}>. Throws Unsupported if G is not abelian.
AbelianDecomp decompose_abelian(const FinGroup& G);

// Possibly non-unital finite ring on an abelian group.
struct FinRing {
    FinGroup add;
    std::vector<int> mul;  // mul[a*n + b]
    std::optional<int> unit;

    int n() const { return add.order; }
    int zero() const { return add.e(); }
    int plus(int a, int b) const { return add.op(a, b); }
    int times(int a, int b) const { return mul[a * add.order + b]; }
};

struct Bimodule {
    FinGroup M;
    std::vector<int> left;   // left[a*|M| + m] = a.m
    std::vector<int> right;  // right[m*|A| + a] = m.a
    int nA = 1;

    int lact(int a, int m) const { return left[a * M.order + m]; }
    int ract(int m, int a) const { return right[m * nA + a]; }
};

Report validate_ring(const FinRing& A);
Report validate_bimodule(const FinRing& A, const Bimodule& M);

// Z/n with its usual multiplication (unital).
FinRing zmod_ring(int n);
// Z/n with identically zero multiplication.
FinRing zero_ring(int n);
// Builds a ring from tables; throws BadRing when validation fails.
FinRing make_ring(const FinGroup& add, std::vector<int> mul, std::optional<int> unit = std::nullopt);

// A acting on itself by multiplication.
Bimodule regular_bimodule(const FinRing& A);
// Z/m over Z/n (m | n) through reduction mod m.
Bimodule cyclic_bimodule(const FinRing& A, int m);
// Any abelian group with zero actions.
Bimodule zero_action_bimodule(const FinRing& A, const FinGroup& M);

}  // namespace bextlab
