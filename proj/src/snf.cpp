#include "bextlab/snf.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace bextlab {

IntMatrix zero_matrix(int rows, int cols) { return IntMatrix(rows, std::vector<Int>(cols, 0)); }

IntMatrix identity_matrix(int n)
{
    IntMatrix I = zero_matrix(n, n);
    for (int i = 0; i < n; ++i) I[i][i] = 1;
    return I;
}

int cols_of(const IntMatrix& A) { return A.empty() ? 0 : static_cast<int>(A[0].size()); }

IntMatrix multiply(const IntMatrix& A, const IntMatrix& B)
{
    const int m = static_cast<int>(A.size());
    const int k = static_cast<int>(B.size());
    const int n = cols_of(B);
    IntMatrix C = zero_matrix(m, n);
    for (int i = 0; i < m; ++i)
        for (int l = 0; l < k; ++l) {
            if (A[i][l] == 0) continue;
            for (int j = 0; j < n; ++j)
                if (B[l][j] != 0) C[i][j] += A[i][l] * B[l][j];
        }
    return C;
}

namespace {

struct Smith {
    IntMatrix A;
    int m, n;
    bool tr;
    IntMatrix U, Uinv, V, Vinv;

    void swap_rows(int i, int j)
    {
        if (i == j) return;
        std::swap(A[i], A[j]);
        if (tr) {
            std::swap(U[i], U[j]);
            for (auto& row : Uinv) std::swap(row[i], row[j]);
        }
    }
    void swap_cols(int i, int j)
    {
        if (i == j) return;
        for (auto& row : A) std::swap(row[i], row[j]);
        if (tr) {
            for (auto& row : V) std::swap(row[i], row[j]);
            std::swap(Vinv[i], Vinv[j]);
        }
    }
    // row i += c * row j
    void add_row(int i, int j, const Int& c)
    {
        if (c == 0) return;
        for (int k = 0; k < n; ++k)
            if (A[j][k] != 0) A[i][k] += c * A[j][k];
        if (tr) {
            for (int k = 0; k < m; ++k)
                if (U[j][k] != 0) U[i][k] += c * U[j][k];
            for (int k = 0; k < m; ++k)
                if (Uinv[k][i] != 0) Uinv[k][j] -= c * Uinv[k][i];
        }
    }
    // col i += c * col j
    void add_col(int i, int j, const Int& c)
    {
        if (c == 0) return;
        for (int k = 0; k < m; ++k)
            if (A[k][j] != 0) A[k][i] += c * A[k][j];
        if (tr) {
            for (int k = 0; k < n; ++k)
                if (V[k][j] != 0) V[k][i] += c * V[k][j];
            for (int k = 0; k < n; ++k)
                if (Vinv[i][k] != 0) Vinv[j][k] -= c * Vinv[i][k];
        }
    }
    void negate_row(int i)
    {
        for (auto& x : A[i]) x = -x;
        if (tr) {
            for (auto& x : U[i]) x = -x;
            for (auto& row : Uinv) row[i] = -row[i];
        }
    }
};

}  // namespace

SNF smith_normal_form(const IntMatrix& A0, bool transforms)
{
    Smith s;
    s.A = A0;
    s.m = static_cast<int>(A0.size());
    s.n = cols_of(A0);
    s.tr = transforms;
    if (transforms) {
        s.U = identity_matrix(s.m);
        s.Uinv = identity_matrix(s.m);
        s.V = identity_matrix(s.n);
        s.Vinv = identity_matrix(s.n);
    }
    auto& A = s.A;
    const int m = s.m, n = s.n;
    int t = 0;
    for (; t < std::min(m, n); ++t) {
        // global minimal |entry| in the remaining block
        int pi = -1, pj = -1;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j)
                if (A[i][j] != 0 && (pi < 0 || abs(A[i][j]) < abs(A[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        s.swap_rows(t, pi);
        s.swap_cols(t, pj);
        for (;;) {
            bool clean = true;
            for (int i = t + 1; i < m; ++i) {
                if (A[i][t] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), A[i][t].get_mpz_t(), A[t][t].get_mpz_t());
                s.add_row(i, t, -q);
                if (A[i][t] != 0) clean = false;
            }
            for (int j = t + 1; j < n; ++j) {
                if (A[t][j] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), A[t][j].get_mpz_t(), A[t][t].get_mpz_t());
                s.add_col(j, t, -q);
                if (A[t][j] != 0) clean = false;
            }
            if (!clean) {
                // move the smallest remainder in row/col t into the pivot
                int bi = t, bj = t;
                for (int i = t + 1; i < m; ++i)
                    if (A[i][t] != 0 && abs(A[i][t]) < abs(A[bi][bj])) {
                        bi = i;
                        bj = t;
                    }
                for (int j = t + 1; j < n; ++j)
                    if (A[t][j] != 0 && abs(A[t][j]) < abs(A[bi][bj])) {
                        bi = t;
                        bj = j;
                    }
                s.swap_rows(t, bi);
                s.swap_cols(t, bj);
                continue;
            }
            int bad = -1;
            for (int i = t + 1; i < m && bad < 0; ++i)
                for (int j = t + 1; j < n; ++j)
                    if (A[i][j] != 0 && mpz_divisible_p(A[i][j].get_mpz_t(), A[t][t].get_mpz_t()) == 0) {
                        bad = i;
                        break;
                    }
            if (bad < 0) break;
            s.add_row(t, bad, 1);
        }
        if (A[t][t] < 0) s.negate_row(t);
    }
    SNF r;
    r.rows = m;
    r.cols = n;
    r.rank = t;
    for (int k = 0; k < t; ++k) r.diag.push_back(A[k][k]);
    if (transforms) {
        r.U = std::move(s.U);
        r.Uinv = std::move(s.Uinv);
        r.V = std::move(s.V);
        r.Vinv = std::move(s.Vinv);
    }
    return r;
}

std::vector<Int> cokernel_invariants(const IntMatrix& A, int rows)
{
    std::vector<Int> out;
    if (rows == 0) return out;
    SNF s = smith_normal_form(A.empty() ? zero_matrix(rows, 0) : A);
    for (const Int& d : s.diag)
        if (d != 1) out.push_back(d);
    for (int k = s.rank; k < rows; ++k) out.push_back(0);
    return out;
}

std::int64_t mod(std::int64_t a, std::int64_t n)
{
    std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b)
{
    a = std::llabs(a);
    b = std::llabs(b);
    while (b) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return a / gcd64(a, b) * b; }

namespace {

// s*a + u*b = g = gcd(a,b), a,b >= 0, not both zero.
void xgcd(std::int64_t a, std::int64_t b, std::int64_t& g, std::int64_t& s, std::int64_t& u)
{
    std::int64_t r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = s0 - q * s1;
        s0 = s1;
        s1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    g = r0;
    s = s0;
    u = t0;
}

using Mat64 = std::vector<std::vector<std::int64_t>>;

struct ModElim {
    Mat64 A;
    int m, n;
    std::int64_t N;
    bool want_u;
    Mat64 U, V, Vinv;

    // rows (t,i) <- L * rows, L = [[s,u],[c,d]]
    void row_combo(int t, int i, std::int64_t s, std::int64_t u, std::int64_t c, std::int64_t d)
    {
        auto apply = [&](std::vector<std::int64_t>& rt, std::vector<std::int64_t>& ri) {
            for (size_t k = 0; k < rt.size(); ++k) {
                std::int64_t x = rt[k], y = ri[k];
                if (x == 0 && y == 0) continue;
                rt[k] = mod(s * x + u * y, N);
                ri[k] = mod(c * x + d * y, N);
            }
        };
        apply(A[t], A[i]);
        if (want_u) apply(U[t], U[i]);
    }
    // cols (t,j) <- cols * M, M = [[s,c],[u,d]] i.e. new t = s*t + u*j, new j = c*t + d*j
    void col_combo(int t, int j, std::int64_t s, std::int64_t u, std::int64_t c, std::int64_t d)
    {
        for (int k = 0; k < m; ++k) {
            std::int64_t x = A[k][t], y = A[k][j];
            if (x == 0 && y == 0) continue;
            A[k][t] = mod(s * x + u * y, N);
            A[k][j] = mod(c * x + d * y, N);
        }
        for (int k = 0; k < n; ++k) {
            std::int64_t x = V[k][t], y = V[k][j];
            V[k][t] = mod(s * x + u * y, N);
            V[k][j] = mod(c * x + d * y, N);
        }
        // Vinv <- M^-1 Vinv, M^-1 = [[d,-c],[-u,s]] (det M = 1)
        for (int k = 0; k < n; ++k) {
            std::int64_t x = Vinv[t][k], y = Vinv[j][k];
            Vinv[t][k] = mod(d * x - c * y, N);
            Vinv[j][k] = mod(-u * x + s * y, N);
        }
    }
    void swap_rows(int i, int j)
    {
        if (i == j) return;
        std::swap(A[i], A[j]);
        if (want_u) std::swap(U[i], U[j]);
    }
    void swap_cols(int i, int j)
    {
        if (i == j) return;
        for (auto& r : A) std::swap(r[i], r[j]);
        for (auto& r : V) std::swap(r[i], r[j]);
        std::swap(Vinv[i], Vinv[j]);
    }
};

}  // namespace

ModDiag diagonalize_mod(std::vector<std::vector<std::int64_t>> A, int cols, std::int64_t N, Pivot pivot,
                        bool want_u)
{
    ModElim e;
    e.m = static_cast<int>(A.size());
    e.n = cols;
    e.N = N;
    e.want_u = want_u;
    for (auto& row : A) {
        if (static_cast<int>(row.size()) != cols) throw std::invalid_argument("diagonalize_mod: ragged matrix");
        for (auto& x : row) x = mod(x, N);
    }
    e.A = std::move(A);
    e.V.assign(cols, std::vector<std::int64_t>(cols, 0));
    e.Vinv = e.V;
    for (int i = 0; i < cols; ++i) e.V[i][i] = e.Vinv[i][i] = 1 % N;
    if (want_u) {
        e.U.assign(e.m, std::vector<std::int64_t>(e.m, 0));
        for (int i = 0; i < e.m; ++i) e.U[i][i] = 1 % N;
    }
    auto& M = e.A;
    const int m = e.m, n = e.n;
    const int r = std::min(m, n);
    for (int t = 0; t < r; ++t) {
        int pi = -1, pj = -1;
        if (pivot == Pivot::FirstNonzero) {
            for (int j = t; j < n && pi < 0; ++j)
                for (int i = t; i < m; ++i)
                    if (M[i][j] != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
        } else {
            std::int64_t best = N + 1;
            for (int i = t; i < m && best > 1; ++i)
                for (int j = t; j < n; ++j) {
                    if (M[i][j] == 0) continue;
                    std::int64_t g = gcd64(M[i][j], N);
                    if (g < best) {
                        best = g;
                        pi = i;
                        pj = j;
                        if (g == 1) break;
                    }
                }
        }
        if (pi < 0) break;
        e.swap_rows(t, pi);
        e.swap_cols(t, pj);
        for (;;) {
            bool clean = true;
            for (int i = t + 1; i < m; ++i) {
                std::int64_t a = M[i][t];
                if (a == 0) continue;
                std::int64_t p = M[t][t];
                if (a % p == 0) {
                    e.row_combo(t, i, 1, 0, -(a / p), 1);
                } else {
                    std::int64_t g, s, u;
                    xgcd(p, a, g, s, u);
                    e.row_combo(t, i, s, u, -(a / g), p / g);
                }
            }
            for (int j = t + 1; j < n; ++j) {
                std::int64_t a = M[t][j];
                if (a == 0) continue;
                std::int64_t p = M[t][t];
                if (a % p == 0) {
                    e.col_combo(t, j, 1, 0, -(a / p), 1);
                } else {
                    std::int64_t g, s, u;
                    xgcd(p, a, g, s, u);
                    e.col_combo(t, j, s, u, -(a / g), p / g);
                    clean = false;  // column combination may refill column t
                }
            }
            if (clean) break;
            bool col_zero = true;
            for (int i = t + 1; i < m; ++i)
                if (M[i][t] != 0) col_zero = false;
            if (col_zero) break;
        }
    }
    ModDiag d;
    d.N = N;
    d.rows = m;
    d.cols = n;
    d.diag.assign(r, 0);
    for (int t = 0; t < r; ++t) d.diag[t] = M[t][t];
    d.V = std::move(e.V);
    d.Vinv = std::move(e.Vinv);
    if (want_u) d.U = std::move(e.U);
    return d;
}

std::vector<std::int64_t> ModKernel::coordinates(const std::vector<std::int64_t>& x) const
{
    std::vector<std::int64_t> out;
    out.reserve(gens.size());
    const int n = static_cast<int>(Vinv.size());
    size_t g = 0;
    for (int i = 0; i < n; ++i) {
        std::int64_t y = 0;
        for (int k = 0; k < n; ++k) y = mod(y + Vinv[i][k] * x[k], N);
        if (scale[i] == N) {  // order-1 component
            if (y != 0) throw std::runtime_error("ModKernel::coordinates: vector not in kernel");
            continue;
        }
        if (y % scale[i] != 0) throw std::runtime_error("ModKernel::coordinates: vector not in kernel");
        out.push_back(mod(y / scale[i], orders[g]));
        ++g;
    }
    return out;
}

ModKernel kernel_mod(const std::vector<std::vector<std::int64_t>>& A, int cols, std::int64_t N, Pivot pivot)
{
    ModDiag d = diagonalize_mod(A, cols, N, pivot);
    ModKernel k;
    k.N = N;
    k.Vinv = d.Vinv;
    k.scale.assign(cols, 1);
    for (int i = 0; i < cols; ++i) {
        std::int64_t di = i < static_cast<int>(d.diag.size()) ? d.diag[i] : 0;
        std::int64_t g = gcd64(di, N);  // gcd(0,N) = N
        std::int64_t sc = N / g;
        k.scale[i] = sc;
        if (g == 1) {
            k.scale[i] = N;
            continue;
        }
        std::vector<std::int64_t> v(cols);
        for (int r = 0; r < cols; ++r) v[r] = mod(sc * d.V[r][i], N);
        k.gens.push_back(std::move(v));
        k.orders.push_back(g);
    }
    return k;
}

std::vector<std::int64_t> solve_mod(const std::vector<std::vector<std::int64_t>>& A, int cols,
                                    const std::vector<std::int64_t>& b, std::int64_t N, Pivot pivot,
                                    bool* solvable)
{
    ModDiag d = diagonalize_mod(A, cols, N, pivot, true);
    const int m = static_cast<int>(A.size());
    std::vector<std::int64_t> ub(m, 0);
    for (int i = 0; i < m; ++i) {
        std::int64_t s = 0;
        for (int k = 0; k < m; ++k)
            if (d.U[i][k]) s = mod(s + d.U[i][k] * b[k], N);
        ub[i] = s;
    }
    std::vector<std::int64_t> y(cols, 0);
    bool ok = true;
    for (int i = 0; i < m; ++i) {
        std::int64_t di = i < static_cast<int>(d.diag.size()) ? d.diag[i] : 0;
        if (i >= cols) di = 0;
        std::int64_t g = gcd64(di, N);
        if (ub[i] % g != 0) {
            ok = false;
            break;
        }
        if (di == 0) continue;
        // di*y = ub (mod N): divide by g, invert di/g modulo N/g
        std::int64_t n2 = N / g, a = (di / g) % n2, rhs = (ub[i] / g) % n2;
        std::int64_t gg, s, u;
        xgcd(mod(a, n2), n2, gg, s, u);
        y[i] = mod(s * rhs, n2);
    }
    if (solvable) *solvable = ok;
    if (!ok) return {};
    std::vector<std::int64_t> x(cols, 0);
    for (int r = 0; r < cols; ++r) {
        std::int64_t s = 0;
        for (int i = 0; i < cols; ++i) s = mod(s + d.V[r][i] * y[i], N);
        x[r] = s;
    }
    return x;
}

}  // namespace bextlab
