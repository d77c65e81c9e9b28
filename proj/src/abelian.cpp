#include "bextlab/abelian.hpp"

#include "bextlab/snf.hpp"

namespace bextlab {

int add(const FinGroup& G, int a, int b) { return G.op(a, b); }
int neg(const FinGroup& G, int a) { return G.inverse(a); }
int sub(const FinGroup& G, int a, int b) { return G.op(a, G.inverse(b)); }

int times(const FinGroup& G, long long n, int a)
{
    if (n < 0) {
        n = -n;
        a = G.inverse(a);
    }
    n %= G.element_order(a);
    return G.power(a, n);
}

int AbelianDecomp::element(std::vector<std::int64_t> c) const
{
    for (size_t i = 0; i < c.size(); ++i) c[i] = mod(c[i], orders[i]);
    return lookup.at(c);
}

AbelianDecomp decompose_abelian(const FinGroup& G)
{
    if (!G.is_abelian()) throw Error("Unsupported", "group is not abelian");
    const int n = G.order;
    // generators e_x (rows), relations e_x + e_y - e_{x+y} (columns)
    IntMatrix rel = zero_matrix(n, n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int c = x * n + y;
            rel[x][c] += 1;
            rel[y][c] += 1;
            rel[G.op(x, y)][c] -= 1;
        }
    SNF s = smith_normal_form(rel, true);
    if (s.rank != n) throw Error("Unsupported", "presentation has free part");
    AbelianDecomp d;
    std::vector<int> rows;
    for (int i = 0; i < s.rank; ++i)
        if (s.diag[i] != 1) {
            rows.push_back(i);
            d.orders.push_back(s.diag[i].get_si());
            d.exponent = lcm64(d.exponent, s.diag[i].get_si());
        }
    d.coords.assign(n, {});
    for (int x = 0; x < n; ++x) {
        for (size_t k = 0; k < rows.size(); ++k) {
            Int v = s.U[rows[k]][x];
            Int r;
            mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), s.diag[rows[k]].get_mpz_t());
            d.coords[x].push_back(r.get_si());
        }
        d.lookup[d.coords[x]] = x;
    }
    if (static_cast<int>(d.lookup.size()) != n) throw Error("Unsupported", "decomposition is not injective");
    for (size_t k = 0; k < rows.size(); ++k) {
        std::vector<std::int64_t> e(rows.size(), 0);
        e[k] = 1;
        d.gens.push_back(d.lookup.at(e));
    }
    return d;
}

Report validate_ring(const FinRing& A)
{
    Report r;
    const int n = A.n();
    const FinGroup& G = A.add;
    r.add("additive_abelian", G.is_abelian(), "addition not commutative");
    if (static_cast<int>(A.mul.size()) != n * n) {
        r.fail("table", "multiplication table has wrong length");
        return r;
    }
    for (int v : A.mul)
        if (v < 0 || v >= n) {
            r.fail("table", "value out of range");
            return r;
        }
    r.pass("table");
    r.pass("associative");
    r.pass("distributive");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (A.times(A.times(a, b), c) != A.times(a, A.times(b, c))) r.fail("associative", tuple_str({a, b, c}));
                if (A.times(a, A.plus(b, c)) != A.plus(A.times(a, b), A.times(a, c)) ||
                    A.times(A.plus(a, b), c) != A.plus(A.times(a, c), A.times(b, c)))
                    r.fail("distributive", tuple_str({a, b, c}));
            }
    if (A.unit) {
        bool ok = *A.unit >= 0 && *A.unit < n;
        for (int a = 0; a < n && ok; ++a)
            if (A.times(*A.unit, a) != a || A.times(a, *A.unit) != a) ok = false;
        r.add("unit", ok, "declared unit is not two-sided");
    }
    return r;
}

Report validate_bimodule(const FinRing& A, const Bimodule& B)
{
    Report r;
    const int n = A.n(), m = B.M.order;
    r.add("abelian", B.M.is_abelian(), "module group not commutative");
    if (static_cast<int>(B.left.size()) != n * m || static_cast<int>(B.right.size()) != n * m || B.nA != n) {
        r.fail("table", "action tables have wrong length");
        return r;
    }
    for (int v : B.left)
        if (v < 0 || v >= m) {
            r.fail("table", "left value out of range");
            return r;
        }
    for (int v : B.right)
        if (v < 0 || v >= m) {
            r.fail("table", "right value out of range");
            return r;
        }
    r.pass("table");
    const FinGroup& M = B.M;
    r.pass("additive");
    r.pass("associative");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int x = 0; x < m; ++x) {
                if (B.lact(A.plus(a, b), x) != M.op(B.lact(a, x), B.lact(b, x)) ||
                    B.ract(x, A.plus(a, b)) != M.op(B.ract(x, a), B.ract(x, b)))
                    r.fail("additive", tuple_str({a, b, x}));
                if (B.lact(A.times(a, b), x) != B.lact(a, B.lact(b, x)) ||
                    B.ract(x, A.times(a, b)) != B.ract(B.ract(x, a), b) ||
                    B.ract(B.lact(a, x), b) != B.lact(a, B.ract(x, b)))
                    r.fail("associative", tuple_str({a, b, x}));
            }
    for (int a = 0; a < n; ++a)
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y)
                if (B.lact(a, M.op(x, y)) != M.op(B.lact(a, x), B.lact(a, y)) ||
                    B.ract(M.op(x, y), a) != M.op(B.ract(x, a), B.ract(y, a)))
                    r.fail("additive", tuple_str({a, x, y}));
    if (A.unit) {
        bool ok = true;
        for (int x = 0; x < m; ++x)
            if (B.lact(*A.unit, x) != x || B.ract(x, *A.unit) != x) ok = false;
        r.add("unital", ok, "unit does not act as identity");
    }
    return r;
}

FinRing make_ring(const FinGroup& add, std::vector<int> mul, std::optional<int> unit)
{
    FinRing A{add, std::move(mul), unit};
    Report r = validate_ring(A);
    if (!r.ok()) throw Error("BadRing", r.str());
    return A;
}

FinRing zmod_ring(int n)
{
    std::vector<int> mul(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) mul[a * n + b] = (a * b) % n;
    return FinRing{cyclic(n), mul, n == 1 ? std::optional<int>(0) : std::optional<int>(1)};
}

FinRing zero_ring(int n) { return FinRing{cyclic(n), std::vector<int>(n * n, 0), n == 1 ? std::optional<int>(0) : std::nullopt}; }

Bimodule regular_bimodule(const FinRing& A)
{
    Bimodule B{A.add, A.mul, {}, A.n()};
    const int n = A.n();
    B.right.resize(n * n);
    for (int m = 0; m < n; ++m)
        for (int a = 0; a < n; ++a) B.right[m * n + a] = A.times(m, a);
    return B;
}

Bimodule cyclic_bimodule(const FinRing& A, int m)
{
    const int n = A.n();
    Bimodule B{cyclic(m), std::vector<int>(n * m), std::vector<int>(n * m), n};
    for (int a = 0; a < n; ++a)
        for (int x = 0; x < m; ++x) {
            B.left[a * m + x] = (a % m) * x % m;
            B.right[x * n + a] = x * (a % m) % m;
        }
    return B;
}

Bimodule zero_action_bimodule(const FinRing& A, const FinGroup& M)
{
    const int n = A.n(), m = M.order;
    return Bimodule{M, std::vector<int>(n * m, M.e()), std::vector<int>(n * m, M.e()), n};
}

}  // namespace bextlab
