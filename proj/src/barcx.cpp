#include "bextlab/barcx.hpp"

#include <sstream>

namespace bextlab {

int shape_arity(LShape s)
{
    switch (s) {
    case LShape::P0: return 1;
    case LShape::P1: return 2;
    case LShape::P111: return 3;
    case LShape::P2: return 2;
    case LShape::P1111: return 4;
    case LShape::P112: return 3;
    case LShape::P211: return 3;
    case LShape::P3: return 2;
    }
    return 0;
}

int shape_degree(LShape s)
{
    switch (s) {
    case LShape::P0: return 0;
    case LShape::P1: return 1;
    case LShape::P111:
    case LShape::P2: return 2;
    default: return 3;
    }
}

std::string LGen::str() const
{
    static const char* seps[8][3] = {{"", "", ""},     {"|1", "", ""},   {"|1", "|1", ""}, {"|2", "", ""},
                                     {"|1", "|1", "|1"}, {"|1", "|2", ""}, {"|2", "|1", ""}, {"|3", "", ""}};
    std::ostringstream os;
    os << '[';
    const int k = shape_arity(s);
    for (int i = 0; i < k; ++i) {
        os << x[i];
        if (i + 1 < k) os << seps[static_cast<int>(s)][i];
    }
    os << ']';
    return os.str();
}

LGen gen0(int a) { return {LShape::P0, {a, 0, 0, 0}}; }
LGen gen1(int a, int b) { return {LShape::P1, {a, b, 0, 0}}; }
LGen gen111(int a, int b, int c) { return {LShape::P111, {a, b, c, 0}}; }
LGen gen2(int a, int b) { return {LShape::P2, {a, b, 0, 0}}; }
LGen gen1111(int a, int b, int c, int d) { return {LShape::P1111, {a, b, c, d}}; }
LGen gen112(int a, int b, int c) { return {LShape::P112, {a, b, c, 0}}; }
LGen gen211(int a, int b, int c) { return {LShape::P211, {a, b, c, 0}}; }
LGen gen3(int a, int b) { return {LShape::P3, {a, b, 0, 0}}; }

LChain L_boundary(const FinRing& A, const LGen& g)
{
    auto p = [&](int u, int v) { return A.plus(u, v); };
    const int a = g.x[0], b = g.x[1], c = g.x[2], d = g.x[3];
    switch (g.s) {
    case LShape::P0: return {};
    case LShape::P1: return {{1, gen0(b)}, {-1, gen0(p(a, b))}, {1, gen0(a)}};
    case LShape::P111:
        return {{1, gen1(b, c)}, {-1, gen1(p(a, b), c)}, {1, gen1(a, p(b, c))}, {-1, gen1(a, b)}};
    case LShape::P2: return {{1, gen1(a, b)}, {-1, gen1(b, a)}};
    case LShape::P1111:
        return {{1, gen111(b, c, d)},
                {-1, gen111(p(a, b), c, d)},
                {1, gen111(a, p(b, c), d)},
                {-1, gen111(a, b, p(c, d))},
                {1, gen111(a, b, c)}};
    case LShape::P112:
        return {{1, gen111(a, b, c)}, {-1, gen111(a, c, b)}, {1, gen111(c, a, b)},
                {-1, gen2(b, c)},     {1, gen2(p(a, b), c)}, {-1, gen2(a, c)}};
    case LShape::P211:
        return {{1, gen111(a, b, c)}, {-1, gen111(b, a, c)}, {1, gen111(b, c, a)},
                {1, gen2(a, c)},      {-1, gen2(a, p(b, c))}, {1, gen2(a, b)}};
    case LShape::P3: return {{1, gen2(a, b)}, {1, gen2(b, a)}};
    }
    return {};
}

LChain maclane_product(const FinRing& A, const LGen& u, const LGen& v)
{
    auto m = [&](int x, int y) { return A.times(x, y); };
    const auto& a = u.x;
    const auto& b = v.x;
    if (u.s == LShape::P0) {
        const int x = a[0];
        switch (v.s) {
        case LShape::P0: return {{1, gen0(m(x, b[0]))}};
        case LShape::P1: return {{1, gen1(m(x, b[0]), m(x, b[1]))}};
        case LShape::P111: return {{1, gen111(m(x, b[0]), m(x, b[1]), m(x, b[2]))}};
        case LShape::P2: return {{1, gen2(m(x, b[0]), m(x, b[1]))}};
        default: return {};
        }
    }
    if (v.s == LShape::P0) {
        const int y = b[0];
        switch (u.s) {
        case LShape::P1: return {{1, gen1(m(a[0], y), m(a[1], y))}};
        case LShape::P111: return {{1, gen111(m(a[0], y), m(a[1], y), m(a[2], y))}};
        case LShape::P2: return {{1, gen2(m(a[0], y), m(a[1], y))}};
        default: return {};
        }
    }
    if (u.s == LShape::P1 && v.s == LShape::P1) {
        // [a|b][c|d]
        const int ac = m(a[0], b[0]), bc = m(a[1], b[0]), ad = m(a[0], b[1]), bd = m(a[1], b[1]);
        return {{1, gen111(ac, bc, A.plus(ad, bd))},
                {-1, gen111(ac, ad, A.plus(bc, bd))},
                {1, gen111(ad, bc, bd)},
                {-1, gen111(bc, ad, bd)},
                {-1, gen2(bc, ad)}};
    }
    return {};
}

LChain normalize(LChain c)
{
    std::map<LGen, long long> acc;
    for (auto& [k, g] : c) acc[g] += k;
    LChain out;
    for (auto& [g, k] : acc)
        if (k != 0) out.push_back({k, g});
    return out;
}

std::vector<LGen> generators(const FinRing& A, LShape s)
{
    const int n = A.n();
    const int k = shape_arity(s);
    std::vector<LGen> out;
    int total = 1;
    for (int i = 0; i < k; ++i) total *= n;
    for (int t = 0; t < total; ++t) {
        LGen g{s, {0, 0, 0, 0}};
        int r = t;
        for (int i = k - 1; i >= 0; --i) {
            g.x[i] = r % n;
            r /= n;
        }
        out.push_back(g);
    }
    return out;
}

namespace {

std::vector<std::vector<LShape>> L_shapes(int level)
{
    std::vector<std::vector<LShape>> sh = {{LShape::P0},
                                           {LShape::P1},
                                           {LShape::P111, LShape::P2},
                                           {LShape::P1111, LShape::P112, LShape::P211}};
    if (level >= 3) sh[3].push_back(LShape::P3);
    return sh;
}

}  // namespace

ChainComplex build_L(const FinRing& A, int level)
{
    if (level != 2 && level != 3) throw Error("BadLevel", "level must be 2 or 3");
    auto shapes = L_shapes(level);
    std::vector<std::vector<LGen>> gens(4);
    std::vector<std::map<LGen, int>> idx(4);
    ChainComplex C;
    C.basis.resize(4);
    for (int d = 0; d < 4; ++d)
        for (LShape s : shapes[d])
            for (const LGen& g : generators(A, s)) {
                idx[d][g] = static_cast<int>(gens[d].size());
                gens[d].push_back(g);
                C.basis[d].push_back(g.str());
            }
    C.diff.resize(4);
    for (int d = 1; d < 4; ++d) {
        C.diff[d] = zero_matrix(static_cast<int>(gens[d - 1].size()), static_cast<int>(gens[d].size()));
        for (size_t j = 0; j < gens[d].size(); ++j)
            for (auto& [k, g] : L_boundary(A, gens[d][j])) C.diff[d][idx[d - 1].at(g)][j] += static_cast<long>(k);
    }
    return C;
}

Report check_complex(const ChainComplex& C)
{
    Report r;
    for (int d = 2; d <= C.top(); ++d) {
        IntMatrix p = multiply(C.diff[d - 1], C.diff[d]);
        std::string id = "dd" + std::to_string(d);
        r.pass(id);
        for (size_t i = 0; i < p.size(); ++i)
            for (size_t j = 0; j < p[i].size(); ++j)
                if (p[i][j] != 0) r.fail(id, C.basis[d][j]);
    }
    return r;
}

std::vector<Int> homology(const ChainComplex& C, int n)
{
    if (n < 0 || n > C.top()) throw Error("BadDegree", std::to_string(n));
    const int dim = static_cast<int>(C.basis[n].size());
    int rank_out = 0;
    if (n >= 1 && !C.diff[n].empty() && cols_of(C.diff[n]) > 0) rank_out = smith_normal_form(C.diff[n]).rank;
    std::vector<Int> out;
    int rank_in = 0;
    if (n + 1 <= C.top() && cols_of(C.diff[n + 1]) > 0 && !C.diff[n + 1].empty()) {
        SNF s = smith_normal_form(C.diff[n + 1]);
        rank_in = s.rank;
        for (const Int& d : s.diag)
            if (d != 1) out.push_back(d);
    }
    for (int k = 0; k < dim - rank_out - rank_in; ++k) out.push_back(0);
    return out;
}

int cell_degree(const BarCell& c)
{
    int d = static_cast<int>(c.size());
    for (const LGen& g : c) d += shape_degree(g.s);
    return d;
}

std::string cell_str(const BarCell& c)
{
    std::string s = "[[";
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += c[i].str();
    }
    return s + "]]";
}

std::vector<BarTerm> bar_boundary(const FinRing& A, const BarCell& c)
{
    std::vector<BarTerm> out;
    const int n = static_cast<int>(c.size());
    std::vector<int> eps(n + 1, 0);  // eps[i] = deg [[u_1..u_i]]
    for (int i = 1; i <= n; ++i) eps[i] = eps[i - 1] + 1 + shape_degree(c[i - 1].s);
    auto sgn = [](int e) { return (e % 2 == 0) ? 1LL : -1LL; };

    // d' = - sum (-1)^{eps_{i-1}} [[.., d u_i, ..]]
    for (int i = 0; i < n; ++i)
        for (auto& [k, g] : L_boundary(A, c[i])) {
            BarCell t = c;
            t[i] = g;
            out.push_back({-sgn(eps[i]) * k, t, -1, -1});
        }
    if (n == 0) return out;
    // d'' end terms and inner products
    if (c[0].s == LShape::P0) out.push_back({1, BarCell(c.begin() + 1, c.end()), c[0].x[0], -1});
    for (int i = 0; i + 1 < n; ++i)
        for (auto& [k, g] : maclane_product(A, c[i], c[i + 1])) {
            BarCell t;
            for (int j = 0; j < i; ++j) t.push_back(c[j]);
            t.push_back(g);
            for (int j = i + 2; j < n; ++j) t.push_back(c[j]);
            out.push_back({sgn(eps[i + 1]) * k, t, -1, -1});
        }
    if (c[n - 1].s == LShape::P0)
        out.push_back({sgn(eps[n]), BarCell(c.begin(), c.end() - 1), -1, c[n - 1].x[0]});
    return out;
}

int BarComplex::find(const BarCell& c) const
{
    int d = cell_degree(c);
    if (d < 0 || d >= static_cast<int>(index.size())) return -1;
    auto it = index[d].find(c);
    return it == index[d].end() ? -1 : it->second;
}

namespace {

using Layout = std::vector<LShape>;

std::vector<std::vector<Layout>> bar_layouts(int level)
{
    using S = LShape;
    std::vector<std::vector<Layout>> L(5);
    L[0] = {{}};
    L[1] = {{S::P0}};
    L[2] = {{S::P0, S::P0}, {S::P1}};
    L[3] = {{S::P0, S::P0, S::P0}, {S::P1, S::P0}, {S::P0, S::P1}, {S::P111}, {S::P2}};
    L[4] = {{S::P0, S::P0, S::P0, S::P0},
            {S::P1, S::P0, S::P0},
            {S::P0, S::P1, S::P0},
            {S::P0, S::P0, S::P1},
            {S::P1, S::P1},
            {S::P111, S::P0},
            {S::P2, S::P0},
            {S::P0, S::P111},
            {S::P0, S::P2},
            {S::P1111},
            {S::P112},
            {S::P211}};
    if (level >= 3) L[4].push_back({S::P3});
    return L;
}

void enumerate_cells(const FinRing& A, const Layout& lay, size_t i, BarCell& cur, std::vector<BarCell>& out)
{
    if (i == lay.size()) {
        out.push_back(cur);
        return;
    }
    for (const LGen& g : generators(A, lay[i])) {
        cur.push_back(g);
        enumerate_cells(A, lay, i + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

BarComplex build_bar(const FinRing& A, int level)
{
    if (level != 2 && level != 3) throw Error("BadLevel", "level must be 2 or 3");
    BarComplex B{A, level, {}, {}};
    auto layouts = bar_layouts(level);
    B.cells.resize(5);
    B.index.resize(5);
    for (int d = 0; d <= 4; ++d)
        for (const Layout& lay : layouts[d]) {
            BarCell cur;
            enumerate_cells(A, lay, 0, cur, B.cells[d]);
        }
    for (int d = 0; d <= 4; ++d)
        for (size_t i = 0; i < B.cells[d].size(); ++i) B.index[d][B.cells[d][i]] = static_cast<int>(i);
    return B;
}

Report check_bar_square(const BarComplex& B, int degree)
{
    const FinRing& A = B.A;
    AbelianDecomp dA = decompose_abelian(A.add);
    const size_t k = dA.orders.size();
    struct Acc {
        long long z = 0;
        int l = -1, r = -1;
        std::vector<std::int64_t> t;
    };
    Report rep;
    std::string id = "dd" + std::to_string(degree);
    rep.pass(id);
    auto combine_left = [&](int outer, int inner) {
        if (outer < 0) return inner;
        if (inner < 0) return outer;
        return A.times(outer, inner);
    };
    auto combine_right = [&](int inner, int outer) {
        if (outer < 0) return inner;
        if (inner < 0) return outer;
        return A.times(inner, outer);
    };
    for (const BarCell& c : B.cells[degree]) {
        std::map<std::pair<BarCell, int>, Acc> acc;
        for (const BarTerm& t1 : bar_boundary(A, c)) {
            if (B.find(t1.cell) < 0) {
                rep.fail(id, cell_str(c) + " leaves the cell table via " + cell_str(t1.cell));
                continue;
            }
            for (const BarTerm& t2 : bar_boundary(A, t1.cell)) {
                long long coeff = t1.coeff * t2.coeff;
                int l = combine_left(t1.left, t2.left);
                int r = combine_right(t2.right, t1.right);
                int kind = (l >= 0 ? 1 : 0) + (r >= 0 ? 2 : 0);
                Acc& a = acc[{t2.cell, kind}];
                if (kind == 0) {
                    a.z += coeff;
                } else if (kind == 1) {
                    a.l = A.plus(a.l < 0 ? A.zero() : a.l, times(A.add, coeff, l));
                } else if (kind == 2) {
                    a.r = A.plus(a.r < 0 ? A.zero() : a.r, times(A.add, coeff, r));
                } else {
                    if (a.t.empty()) a.t.assign(k * k, 0);
                    for (size_t i = 0; i < k; ++i)
                        for (size_t j = 0; j < k; ++j) {
                            std::int64_t g = gcd64(dA.orders[i], dA.orders[j]);
                            a.t[i * k + j] = mod(a.t[i * k + j] + coeff * dA.coords[l][i] * dA.coords[r][j], g);
                        }
                }
            }
        }
        for (auto& [key, a] : acc) {
            bool zero = a.z == 0 && (a.l < 0 || a.l == A.zero()) && (a.r < 0 || a.r == A.zero());
            for (auto v : a.t)
                if (v != 0) zero = false;
            if (!zero) {
                rep.fail(id, cell_str(c) + " -> " + cell_str(key.first));
                break;
            }
        }
    }
    return rep;
}

}  // namespace bextlab
