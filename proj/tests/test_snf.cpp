#include "doctest.h"

#include <random>

#include "bextlab/snf.hpp"

using namespace bextlab;

namespace {

IntMatrix mat(std::initializer_list<std::initializer_list<long>> rows)
{
    IntMatrix A;
    for (auto& r : rows) {
        A.emplace_back();
        for (long v : r) A.back().push_back(Int(v));
    }
    return A;
}

std::vector<std::int64_t> apply_mod(const std::vector<std::vector<std::int64_t>>& A, const std::vector<std::int64_t>& x,
                                    std::int64_t N)
{
    std::vector<std::int64_t> y(A.size(), 0);
    for (size_t i = 0; i < A.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j) y[i] = mod(y[i] + A[i][j] * x[j], N);
    return y;
}

}  // namespace

TEST_CASE("Smith normal form of small matrices")
{
    SNF s = smith_normal_form(mat({{2, 4}, {6, 8}}));
    CHECK(s.rank == 2);
    CHECK(s.diag == std::vector<Int>{2, 4});

    SNF t = smith_normal_form(mat({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}), true);
    CHECK(t.diag == std::vector<Int>{2, 6, 12});
    IntMatrix D = multiply(multiply(t.U, mat({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}})), t.V);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(D[i][j] == (i == j ? t.diag[i] : Int(0)));
    CHECK(multiply(t.U, t.Uinv) == identity_matrix(3));
    CHECK(multiply(t.V, t.Vinv) == identity_matrix(3));
}

TEST_CASE("cokernel invariants")
{
    // Z^2 / <(2,0),(0,3)> = Z/6
    CHECK(cokernel_invariants(mat({{2, 0}, {0, 3}}), 2) == std::vector<Int>{6});
    // free part reported as 0
    CHECK(cokernel_invariants(mat({{2}, {0}}), 2) == std::vector<Int>{2, 0});
    CHECK(cokernel_invariants(zero_matrix(0, 0), 0).empty());
}

TEST_CASE("entry growth stays exact")
{
    // Hilbert-like integer matrix with big intermediate entries
    IntMatrix A(6, std::vector<Int>(6));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) A[i][j] = Int(1000003) * (i + 1) * (j + 2) + (i == j ? 7 : 0) + i * i * j;
    SNF s = smith_normal_form(A, true);
    IntMatrix D = multiply(multiply(s.U, A), s.V);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            if (i != j) CHECK(D[i][j] == 0);
    for (size_t i = 1; i < s.diag.size(); ++i) CHECK(mpz_divisible_p(s.diag[i].get_mpz_t(), s.diag[i - 1].get_mpz_t()));
}

TEST_CASE("kernels and solutions mod N agree between pivot strategies")
{
    std::mt19937 rng(20261019);
    for (std::int64_t N : {2, 4, 6, 8, 12}) {
        for (int trial = 0; trial < 20; ++trial) {
            int rows = 1 + static_cast<int>(rng() % 5), cols = 1 + static_cast<int>(rng() % 5);
            std::vector<std::vector<std::int64_t>> A(rows, std::vector<std::int64_t>(cols));
            for (auto& r : A)
                for (auto& v : r) v = static_cast<std::int64_t>(rng() % N);
            std::int64_t sizes[2];
            int k = 0;
            for (Pivot p : {Pivot::FirstNonzero, Pivot::MinimalGcd}) {
                ModKernel K = kernel_mod(A, cols, N, p);
                std::int64_t size = 1;
                for (size_t g = 0; g < K.gens.size(); ++g) {
                    CHECK(apply_mod(A, K.gens[g], N) == std::vector<std::int64_t>(rows, 0));
                    size *= K.orders[g];
                }
                sizes[k++] = size;
            }
            // brute-force kernel size
            std::int64_t brute = 0, total = 1;
            for (int c = 0; c < cols; ++c) total *= N;
            for (std::int64_t code = 0; code < total; ++code) {
                std::vector<std::int64_t> x(cols);
                std::int64_t t = code;
                for (int c = 0; c < cols; ++c, t /= N) x[c] = t % N;
                if (apply_mod(A, x, N) == std::vector<std::int64_t>(rows, 0)) ++brute;
            }
            CHECK(sizes[0] == brute);
            CHECK(sizes[1] == brute);

            std::vector<std::int64_t> x0(cols);
            for (auto& v : x0) v = static_cast<std::int64_t>(rng() % N);
            std::vector<std::int64_t> b = apply_mod(A, x0, N);
            for (Pivot p : {Pivot::FirstNonzero, Pivot::MinimalGcd}) {
                bool ok = false;
                auto x = solve_mod(A, cols, b, N, p, &ok);
                REQUIRE(ok);
                CHECK(apply_mod(A, x, N) == b);
            }
        }
    }
}

TEST_CASE("unsolvable system mod N")
{
    bool ok = true;
    solve_mod({{2}}, 1, {1}, 4, Pivot::MinimalGcd, &ok);
    CHECK_FALSE(ok);
    CHECK(gcd64(12, 18) == 6);
    CHECK(lcm64(4, 6) == 12);
    CHECK(mod(-3, 4) == 1);
}
