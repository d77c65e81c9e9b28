#include "bextlab/fingroup.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace bextlab {

int FinGroup::power(int a, long long n) const
{
    int r = identity;
    for (long long i = 0; i < n; ++i) r = op(r, a);
    return r;
}

int FinGroup::element_order(int a) const
{
    int k = 1;
    int x = a;
    while (x != identity) {
        x = op(x, a);
        ++k;
    }
    return k;
}

bool FinGroup::is_abelian() const
{
    for (int a = 0; a < order; ++a)
        for (int b = a + 1; b < order; ++b)
            if (op(a, b) != op(b, a)) return false;
    return true;
}

std::string FinGroup::label(int a) const
{
    if (a >= 0 && a < static_cast<int>(labels.size())) return labels[a];
    return std::to_string(a);
}

FinGroup make_group(const std::vector<std::vector<int>>& table, std::optional<int> identity_hint)
{
    const int n = static_cast<int>(table.size());
    if (n == 0) throw Error("BadTable", "empty table");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n) throw Error("BadTable", "table is not square");
        for (int v : row)
            if (v < 0 || v >= n) throw Error("BadTable", "entry out of range");
    }
    FinGroup G;
    G.order = n;
    G.mul.assign(n * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) G.mul[a * n + b] = table[a][b];

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (G.op(G.op(a, b), c) != G.op(a, G.op(b, c)))
                    throw Error("NotAssociative", tuple_str({a, b, c}));

    auto is_unit = [&](int e) {
        for (int a = 0; a < n; ++a)
            if (G.op(e, a) != a || G.op(a, e) != a) return false;
        return true;
    };
    int e = -1;
    if (identity_hint && *identity_hint >= 0 && *identity_hint < n && is_unit(*identity_hint))
        e = *identity_hint;
    for (int c = 0; c < n && e < 0; ++c)
        if (is_unit(c)) e = c;
    if (e < 0) throw Error("NoIdentity", "no two-sided unit");
    G.identity = e;

    G.inv.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (G.op(a, b) == e && G.op(b, a) == e) {
                G.inv[a] = b;
                break;
            }
        if (G.inv[a] < 0) throw Error("NoInverse", std::to_string(a));
    }
    return G;
}

FinGroup cyclic(int n)
{
    if (n < 1) throw Error("BadTable", "cyclic order must be positive");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return make_group(t, 0);
}

FinGroup trivial_group() { return cyclic(1); }

FinGroup direct_product(const FinGroup& G, const FinGroup& H)
{
    const int m = H.order;
    FinGroup P;
    P.order = G.order * m;
    P.mul.assign(P.order * P.order, 0);
    for (int a = 0; a < P.order; ++a)
        for (int b = 0; b < P.order; ++b)
            P.mul[a * P.order + b] = G.op(a / m, b / m) * m + H.op(a % m, b % m);
    P.identity = G.identity * m + H.identity;
    P.inv.resize(P.order);
    for (int a = 0; a < P.order; ++a) P.inv[a] = G.inv[a / m] * m + H.inv[a % m];
    if (!G.labels.empty() || !H.labels.empty())
        for (int a = 0; a < P.order; ++a)
            P.labels.push_back("(" + G.label(a / m) + "," + H.label(a % m) + ")");
    return P;
}

Report check_hom(const GroupHom& f)
{
    Report r;
    const FinGroup& D = f.dom;
    const FinGroup& C = f.cod;
    if (static_cast<int>(f.map.size()) != D.order) {
        r.fail("table", "map has wrong length");
        return r;
    }
    for (int v : f.map)
        if (v < 0 || v >= C.order) {
            r.fail("table", "value out of range");
            return r;
        }
    r.pass("table");
    r.add("unit", f(D.e()) == C.e(), "f(e) != e");
    for (int a = 0; a < D.order; ++a)
        for (int b = 0; b < D.order; ++b)
            if (f(D.op(a, b)) != C.op(f(a), f(b))) {
                r.fail("multiplicative", tuple_str({a, b}));
                return r;
            }
    r.pass("multiplicative");
    return r;
}

Report check_action(const RightAction& a)
{
    Report r;
    const int nx = a.group.order, ng = a.space.order;
    if (static_cast<int>(a.act.size()) != nx * ng) {
        r.fail("table", "action table has wrong length");
        return r;
    }
    for (int v : a.act)
        if (v < 0 || v >= ng) {
            r.fail("table", "value out of range");
            return r;
        }
    r.pass("table");
    r.pass("unit");
    for (int g = 0; g < ng; ++g)
        if (a(g, a.group.e()) != g) r.fail("unit", tuple_str({g}));
    r.pass("composition");
    for (int g = 0; g < ng; ++g)
        for (int x = 0; x < nx; ++x)
            for (int y = 0; y < nx; ++y)
                if (a(g, a.group.op(x, y)) != a(a(g, x), y)) r.fail("composition", tuple_str({g, x, y}));
    r.pass("automorphism");
    for (int x = 0; x < nx; ++x) {
        std::vector<char> hit(ng, 0);
        for (int g = 0; g < ng; ++g) hit[a(g, x)] = 1;
        if (std::find(hit.begin(), hit.end(), 0) != hit.end()) r.fail("automorphism", "not bijective for x=" + std::to_string(x));
        for (int g = 0; g < ng; ++g)
            for (int h = 0; h < ng; ++h)
                if (a(a.space.op(g, h), x) != a.space.op(a(g, x), a(h, x)))
                    r.fail("automorphism", tuple_str({g, h, x}));
    }
    return r;
}

RightAction trivial_action(const FinGroup& group, const FinGroup& space)
{
    RightAction a{group, space, {}};
    a.act.resize(group.order * space.order);
    for (int g = 0; g < space.order; ++g)
        for (int x = 0; x < group.order; ++x) a.act[g * group.order + x] = g;
    return a;
}

RightAction conjugation_action(const FinGroup& G)
{
    RightAction a{G, G, {}};
    a.act.resize(G.order * G.order);
    for (int g = 0; g < G.order; ++g)
        for (int x = 0; x < G.order; ++x) a.act[g * G.order + x] = G.op(G.op(G.inverse(x), g), x);
    return a;
}

std::optional<std::vector<int>> find_isomorphism(const FinGroup& G, const FinGroup& H)
{
    if (G.order != H.order) return std::nullopt;
    const int n = G.order;
    std::vector<int> ordG(n), ordH(n);
    for (int a = 0; a < n; ++a) {
        ordG[a] = G.element_order(a);
        ordH[a] = H.element_order(a);
    }
    std::vector<int> img(n, -1), pre(n, -1);
    std::uint64_t budget = max_search();
    // Assign images in index order; check the multiplication table on the
    // assigned part after each choice.
    std::function<bool(int)> rec = [&](int a) -> bool {
        if (a == n) return true;
        for (int b = 0; b < n; ++b) {
            if (pre[b] >= 0 || ordH[b] != ordG[a]) continue;
            if (budget-- == 0) throw Error("SearchSpaceTooLarge", "isomorphism search");
            img[a] = b;
            pre[b] = a;
            bool ok = true;
            for (int c = 0; c <= a && ok; ++c)
                for (int d = 0; d <= a && ok; ++d) {
                    int p = G.op(c, d);
                    if (p <= a && img[p] != H.op(img[c], img[d])) ok = false;
                }
            if (ok && rec(a + 1)) return true;
            img[a] = -1;
            pre[b] = -1;
        }
        return false;
    };
    if (rec(0)) return img;
    return std::nullopt;
}

std::vector<int> kernel_elements(const GroupHom& f)
{
    std::vector<int> k;
    for (int a = 0; a < f.dom.order; ++a)
        if (f(a) == f.cod.e()) k.push_back(a);
    return k;
}

std::vector<int> image_elements(const GroupHom& f)
{
    std::vector<char> hit(f.cod.order, 0);
    for (int a = 0; a < f.dom.order; ++a) hit[f(a)] = 1;
    std::vector<int> im;
    for (int b = 0; b < f.cod.order; ++b)
        if (hit[b]) im.push_back(b);
    return im;
}

}  // namespace bextlab
