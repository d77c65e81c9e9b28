#include "bextlab/biext.hpp"

#include <cmath>

namespace bextlab {

BiextCocycle trivial_biext(const FinGroup& H, const FinGroup& K, const BraidedXMod& coeff)
{
    BiextCocycle c{H, K, coeff, {}, {}, {}};
    int e = coeff.G().e(), e0 = coeff.Pi().e();
    c.g1.assign(H.order * H.order * K.order, e);
    c.g2.assign(H.order * K.order * K.order, e);
    c.x.assign(H.order * K.order, e0);
    return c;
}

namespace {

bool shape_ok(const BiextCocycle& c, Report& r)
{
    int nh = c.H.order, nk = c.K.order, ng = c.coeff.G().order, np = c.coeff.Pi().order;
    auto in_range = [](const std::vector<int>& v, size_t len, int n) {
        if (v.size() != len) return false;
        for (int a : v)
            if (a < 0 || a >= n) return false;
        return true;
    };
    bool ok = in_range(c.g1, size_t(nh) * nh * nk, ng) && in_range(c.g2, size_t(nh) * nk * nk, ng) &&
              in_range(c.x, size_t(nh) * nk, np);
    r.add("shape", ok, ok ? "" : "table size or value out of range");
    return ok;
}

}  // namespace

Report verify_biext(const BiextCocycle& c)
{
    Report r;
    if (!shape_ok(c, r)) return r;
    const FinGroup &H = c.H, &K = c.K, &G = c.coeff.G(), &P = c.coeff.Pi();
    const XMod& m = c.coeff.base;
    int nh = H.order, nk = K.order;

    r.pass("eq16");
    r.pass("eq17");
    for (int h = 0; h < nh; ++h)
        for (int h2 = 0; h2 < nh; ++h2)
            for (int k = 0; k < nk; ++k) {
                if (P.op(c.X(h, k), c.X(h2, k)) != P.op(c.X(H.op(h, h2), k), m.d(c.G1(h, h2, k))))
                    r.fail("eq17", tuple_str({h, h2, k}));
                for (int h3 = 0; h3 < nh; ++h3) {
                    int lhs = G.op(c.G1(H.op(h, h2), h3, k), m.act(c.G1(h, h2, k), c.X(h3, k)));
                    int rhs = G.op(c.G1(h, H.op(h2, h3), k), c.G1(h2, h3, k));
                    if (lhs != rhs) r.fail("eq16", tuple_str({h, h2, h3, k}));
                }
            }

    r.pass("eq18");
    r.pass("eq19");
    for (int h = 0; h < nh; ++h)
        for (int k = 0; k < nk; ++k)
            for (int k2 = 0; k2 < nk; ++k2) {
                if (P.op(c.X(h, k), c.X(h, k2)) != P.op(c.X(h, K.op(k, k2)), m.d(c.G2(h, k, k2))))
                    r.fail("eq19", tuple_str({h, k, k2}));
                for (int k3 = 0; k3 < nk; ++k3) {
                    int lhs = G.op(c.G2(h, K.op(k, k2), k3), m.act(c.G2(h, k, k2), c.X(h, k3)));
                    int rhs = G.op(c.G2(h, k, K.op(k2, k3)), c.G2(h, k2, k3));
                    if (lhs != rhs) r.fail("eq18", tuple_str({h, k, k2, k3}));
                }
            }

    // g2(hh';k,k') g1(h,h';k)^{x(hh',k')} g1(h,h';k')
    //   = g1(h,h';kk') g2(h;k,k')^{x(h',kk')} g2(h';k,k') (<x(h',k),x(h,k')>^{x(h',k')})^-1
    r.pass("eq20");
    for (int h = 0; h < nh; ++h)
        for (int h2 = 0; h2 < nh; ++h2)
            for (int k = 0; k < nk; ++k)
                for (int k2 = 0; k2 < nk; ++k2) {
                    int hh = H.op(h, h2), kk = K.op(k, k2);
                    int lhs = G.op(G.op(c.G2(hh, k, k2), m.act(c.G1(h, h2, k), c.X(hh, k2))), c.G1(h, h2, k2));
                    int corr = G.inverse(m.act(c.coeff.br(c.X(h2, k), c.X(h, k2)), c.X(h2, k2)));
                    int rhs = G.op(G.op(G.op(c.G1(h, h2, kk), m.act(c.G2(h, k, k2), c.X(h2, kk))), c.G2(h2, k, k2)),
                                   corr);
                    if (lhs != rhs) r.fail("eq20", tuple_str({h, h2, k, k2}));
                }
    return r;
}

int jmap(const BiextCocycle& c, const Point& p) { return c.coeff.Pi().op(c.X(p.h, p.k), c.coeff.base.d(p.a)); }

Point act(const BiextCocycle& c, const Point& p, int g) { return {p.h, p.k, c.coeff.G().op(p.a, g)}; }

Point partial_product(const BiextCocycle& c, int law, const Point& p, const Point& q)
{
    const FinGroup& G = c.coeff.G();
    const XMod& m = c.coeff.base;
    if (law == 1) {
        if (p.k != q.k) throw Error("CoordinateMismatch", "x1 needs equal K coordinates");
        int a = G.op(G.op(c.G1(p.h, q.h, p.k), m.act(p.a, c.X(q.h, q.k))), q.a);
        return {c.H.op(p.h, q.h), p.k, a};
    }
    if (law == 2) {
        if (p.h != q.h) throw Error("CoordinateMismatch", "x2 needs equal H coordinates");
        int a = G.op(G.op(c.G2(p.h, p.k, q.k), m.act(p.a, c.X(q.h, q.k))), q.a);
        return {p.h, c.K.op(p.k, q.k), a};
    }
    throw Error("CoordinateMismatch", "law must be 1 or 2");
}

int interchange_defect(const BiextCocycle& c, const Point& u, const Point& u2, const Point& v, const Point& v2)
{
    if (u.k != u2.k || v.k != v2.k || u.h != v.h || u2.h != v2.h)
        throw Error("CoordinateMismatch", "points must lie over (h,k),(h',k),(h,k'),(h',k')");
    Point lhs = partial_product(c, 2, partial_product(c, 1, u, u2), partial_product(c, 1, v, v2));
    Point rhs = partial_product(c, 1, partial_product(c, 2, u, v), partial_product(c, 2, u2, v2));
    const FinGroup& G = c.coeff.G();
    return G.op(G.inverse(rhs.a), lhs.a);
}

int interchange_bracket(const BiextCocycle& c, const Point& u2, const Point& v, const Point& v2)
{
    int b = c.coeff.br(jmap(c, u2), jmap(c, v));
    return c.coeff.G().inverse(c.coeff.base.act(b, jmap(c, v2)));
}

BiextCocycle change_trivialization(const BiextCocycle& c, const std::vector<int>& w)
{
    const FinGroup &H = c.H, &K = c.K, &G = c.coeff.G(), &P = c.coeff.Pi();
    const XMod& m = c.coeff.base;
    int nh = H.order, nk = K.order;
    auto W = [&](int h, int k) { return w[h * nk + k]; };
    BiextCocycle r = c;
    for (int h = 0; h < nh; ++h)
        for (int k = 0; k < nk; ++k) r.x[h * nk + k] = P.op(c.X(h, k), m.d(W(h, k)));
    for (int h = 0; h < nh; ++h)
        for (int h2 = 0; h2 < nh; ++h2)
            for (int k = 0; k < nk; ++k)
                r.g1[(h * nh + h2) * nk + k] =
                    G.op(G.op(G.op(G.inverse(W(H.op(h, h2), k)), c.G1(h, h2, k)), m.act(W(h, k), c.X(h2, k))),
                         W(h2, k));
    for (int h = 0; h < nh; ++h)
        for (int k = 0; k < nk; ++k)
            for (int k2 = 0; k2 < nk; ++k2)
                r.g2[(h * nk + k) * nk + k2] =
                    G.op(G.op(G.op(G.inverse(W(h, K.op(k, k2))), c.G2(h, k, k2)), m.act(W(h, k), c.X(h, k2))),
                         W(h, k2));
    return r;
}

BiextCocycle biext_sum(const BiextCocycle& c1, const BiextCocycle& c2)
{
    if (!(c1.H == c2.H) || !(c1.K == c2.K) || !(c1.coeff == c2.coeff))
        throw Error("BaseMismatch", "sum needs equal H, K and coefficient");
    const XMod& m = c1.coeff.base;
    const FinGroup &G = m.G, &P = m.Pi;
    if (!G.is_abelian() || !P.is_abelian()) throw Error("Unsupported", "sum needs an abelian coefficient");
    for (int g = 0; g < G.order; ++g)
        for (int y = 0; y < P.order; ++y)
            if (m.act(g, y) != g) throw Error("Unsupported", "sum needs a trivial action");
    const int nh = c1.H.order, nk = c1.K.order;
    BiextCocycle s = c1;
    for (int i = 0; i < nh * nk; ++i) s.x[i] = P.op(c1.x[i], c2.x[i]);
    for (int h = 0; h < nh; ++h)
        for (int h2 = 0; h2 < nh; ++h2)
            for (int k = 0; k < nk; ++k) {
                int i = (h * nh + h2) * nk + k;
                int br = c1.coeff.br(c2.X(h, k), c1.X(h2, k));
                s.g1[i] = G.op(G.op(c1.g1[i], c2.g1[i]), G.inverse(br));
            }
    for (int h = 0; h < nh; ++h)
        for (int k = 0; k < nk; ++k)
            for (int k2 = 0; k2 < nk; ++k2) {
                int i = (h * nk + k) * nk + k2;
                int br = c1.coeff.br(c2.X(h, k), c1.X(h, k2));
                s.g2[i] = G.op(G.op(c1.g2[i], c2.g2[i]), G.inverse(br));
            }
    return s;
}

ButterflyCocycle change_trivialization(const ButterflyCocycle& b, const std::vector<int>& w)
{
    ButterflyCocycle r = b;
    r.base = change_trivialization(b.base, w);
    const FinGroup& G = b.base.coeff.G();
    const int nk = b.base.K.order, nh1 = b.H1().order, nk1 = b.K1().order;
    for (int h = 0; h < nh1; ++h)
        for (int z = 0; z < nk; ++z) r.u1[h * nk + z] = G.op(b.U1(h, z), w[b.wingH.d(h) * nk + z]);
    for (int y = 0; y < b.base.H.order; ++y)
        for (int k = 0; k < nk1; ++k) r.u2[y * nk1 + k] = G.op(b.U2(y, k), w[y * nk + b.wingK.d(k)]);
    return r;
}

BiextCocycle coboundary_cocycle(const FinGroup& H, const FinGroup& K, const BraidedXMod& coeff,
                                const std::vector<int>& u)
{
    BiextCocycle c = trivial_biext(H, K, coeff);
    const FinGroup& G = coeff.G();
    int nh = H.order, nk = K.order;
    auto U = [&](int h, int k) { return u[h * nk + k]; };
    for (int h = 0; h < nh; ++h)
        for (int k = 0; k < nk; ++k) c.x[h * nk + k] = coeff.base.d(U(h, k));
    // u(hh',k) g1(h,h';k) = u(h,k) u(h',k), and likewise for g2
    for (int h = 0; h < nh; ++h)
        for (int h2 = 0; h2 < nh; ++h2)
            for (int k = 0; k < nk; ++k)
                c.g1[(h * nh + h2) * nk + k] = G.op(G.inverse(U(H.op(h, h2), k)), G.op(U(h, k), U(h2, k)));
    for (int h = 0; h < nh; ++h)
        for (int k = 0; k < nk; ++k)
            for (int k2 = 0; k2 < nk; ++k2)
                c.g2[(h * nk + k) * nk + k2] = G.op(G.inverse(U(h, K.op(k, k2))), G.op(U(h, k), U(h, k2)));
    return c;
}

std::optional<std::vector<int>> is_coboundary(const BiextCocycle& c)
{
    const FinGroup &H = c.H, &K = c.K, &G = c.coeff.G();
    int nh = H.order, nk = K.order, ng = G.order, cells = nh * nk;
    double space = cells * std::log2(double(ng));
    if (space > std::log2(double(max_search())))
        throw Error("SearchSpaceTooLarge", "|G1|^(|H||K|) = " + std::to_string(ng) + "^" + std::to_string(cells));

    std::vector<std::vector<int>> cand(cells);
    for (int h = 0; h < nh; ++h)
        for (int k = 0; k < nk; ++k)
            for (int a = 0; a < ng; ++a)
                if (c.coeff.base.d(a) == c.X(h, k)) cand[h * nk + k].push_back(a);

    std::vector<int> u(cells, -1);
    auto U = [&](int h, int k) { return u[h * nk + k]; };
    // Checks every identity whose cells are assigned and one of which is `cell`.
    auto consistent = [&](int cell) {
        int ch = cell / nk, ck = cell % nk;
        for (int h = 0; h < nh; ++h)
            for (int h2 = 0; h2 < nh; ++h2) {
                int hh = H.op(h, h2);
                if (h != ch && h2 != ch && hh != ch) continue;
                if (U(h, ck) < 0 || U(h2, ck) < 0 || U(hh, ck) < 0) continue;
                if (G.op(U(hh, ck), c.G1(h, h2, ck)) != G.op(U(h, ck), U(h2, ck))) return false;
            }
        for (int k = 0; k < nk; ++k)
            for (int k2 = 0; k2 < nk; ++k2) {
                int kk = K.op(k, k2);
                if (k != ck && k2 != ck && kk != ck) continue;
                if (U(ch, k) < 0 || U(ch, k2) < 0 || U(ch, kk) < 0) continue;
                if (G.op(U(ch, kk), c.G2(ch, k, k2)) != G.op(U(ch, k), U(ch, k2))) return false;
            }
        return true;
    };
    std::function<bool(int)> go = [&](int cell) {
        if (cell == cells) return true;
        for (int a : cand[cell]) {
            u[cell] = a;
            if (consistent(cell) && go(cell + 1)) return true;
        }
        u[cell] = -1;
        return false;
    };
    if (go(0)) return u;
    return std::nullopt;
}

ButterflyCocycle butterfly_over(const BiextCocycle& base, const XMod& wingH, const XMod& wingK)
{
    int e = base.coeff.G().e();
    ButterflyCocycle b{base, wingH, wingK, {}, {}};
    b.u1.assign(wingH.G.order * base.K.order, e);
    b.u2.assign(base.H.order * wingK.G.order, e);
    return b;
}

Point s1_point(const ButterflyCocycle& b, int h, int z)
{
    return {b.wingH.d(h), z, b.base.coeff.G().inverse(b.U1(h, z))};
}

Point s2_point(const ButterflyCocycle& b, int y, int k)
{
    return {y, b.wingK.d(k), b.base.coeff.G().inverse(b.U2(y, k))};
}

Report verify_butterfly(const ButterflyCocycle& b)
{
    Report r;
    const BiextCocycle& c = b.base;
    r.merge(verify_biext(c));
    if (!r.ok()) return r;
    const FinGroup &H0 = c.H, &K0 = c.K, &H1 = b.H1(), &K1 = b.K1(), &G = c.coeff.G();
    const XMod& m = c.coeff.base;
    bool wings = b.wingH.Pi == H0 && b.wingK.Pi == K0 && b.u1.size() == size_t(H1.order) * K0.order &&
                 b.u2.size() == size_t(H0.order) * K1.order;
    r.add("wings", wings, wings ? "" : "wing targets or section tables do not match the base");
    if (!wings) return r;

    r.pass("eq29");
    for (int z = 0; z < K0.order; ++z)
        for (int h = 0; h < H1.order; ++h) {
            if (c.X(b.wingH.d(h), z) != m.d(b.U1(h, z))) r.fail("eq29", tuple_str({h, z}));
            for (int h2 = 0; h2 < H1.order; ++h2) {
                int lhs = G.op(b.U1(H1.op(h, h2), z), c.G1(b.wingH.d(h), b.wingH.d(h2), z));
                if (lhs != G.op(b.U1(h, z), b.U1(h2, z))) r.fail("eq29", tuple_str({h, h2, z}));
            }
        }
    for (int y = 0; y < H0.order; ++y)
        for (int k = 0; k < K1.order; ++k) {
            if (c.X(y, b.wingK.d(k)) != m.d(b.U2(y, k))) r.fail("eq29", tuple_str({y, k}));
            for (int k2 = 0; k2 < K1.order; ++k2) {
                int lhs = G.op(b.U2(y, K1.op(k, k2)), c.G2(y, b.wingK.d(k), b.wingK.d(k2)));
                if (lhs != G.op(b.U2(y, k), b.U2(y, k2))) r.fail("eq29", tuple_str({y, k, k2}));
            }
        }

    r.pass("restriction");
    for (int h = 0; h < H1.order; ++h)
        for (int k = 0; k < K1.order; ++k)
            if (b.U1(h, b.wingK.d(k)) != b.U2(b.wingH.d(h), k)) r.fail("restriction", tuple_str({h, k}));

    r.pass("eq30");
    auto U = [&](int h, int k) { return b.U1(h, b.wingK.d(k)); };
    for (int h = 0; h < H1.order; ++h)
        for (int k = 0; k < K1.order; ++k) {
            int dh = b.wingH.d(h), dk = b.wingK.d(k);
            if (c.X(dh, dk) != m.d(U(h, k))) r.fail("eq30", tuple_str({h, k}));
            for (int h2 = 0; h2 < H1.order; ++h2)
                if (G.op(U(H1.op(h, h2), k), c.G1(dh, b.wingH.d(h2), dk)) != G.op(U(h, k), U(h2, k)))
                    r.fail("eq30", tuple_str({h, h2, k}));
            for (int k2 = 0; k2 < K1.order; ++k2)
                if (G.op(U(h, K1.op(k, k2)), c.G2(dh, dk, b.wingK.d(k2))) != G.op(U(h, k), U(h, k2)))
                    r.fail("eq30", tuple_str({h, k, k2}));
        }

    // s1(h,z) x1 e = e x1 s1(h^y,z) and s2(y,k) x2 e = e x2 s2(y,k^z) for e over (y,z)
    r.pass("eq22");
    for (int y = 0; y < H0.order; ++y)
        for (int z = 0; z < K0.order; ++z)
            for (int a = 0; a < G.order; ++a) {
                Point e{y, z, a};
                for (int h = 0; h < H1.order; ++h)
                    if (partial_product(c, 1, s1_point(b, h, z), e) !=
                        partial_product(c, 1, e, s1_point(b, b.wingH.act(h, y), z)))
                        r.fail("eq22", tuple_str({1, h, y, z, a}));
                for (int k = 0; k < K1.order; ++k)
                    if (partial_product(c, 2, s2_point(b, y, k), e) !=
                        partial_product(c, 2, e, s2_point(b, y, b.wingK.act(k, z))))
                        r.fail("eq22", tuple_str({2, y, k, z, a}));
            }
    return r;
}

Report braided_butterfly_check(const ButterflyCocycle& b, const BraidedXMod& braidH, const BraidedXMod& braidK)
{
    Report r;
    if (!(braidH.base == b.wingH) || !(braidK.base == b.wingK)) {
        r.fail("wings", "braidings are not on the wing crossed modules");
        return r;
    }
    const BiextCocycle& c = b.base;
    const FinGroup &H0 = c.H, &K0 = c.K, &G = c.coeff.G();
    auto x1 = [&](const Point& p, const Point& q) { return partial_product(c, 1, p, q); };
    auto x2 = [&](const Point& p, const Point& q) { return partial_product(c, 2, p, q); };

    // e' x1 e = (e x1 e' x1 s1(<y',y>^-1, z)) <j(e), j(e')>
    r.pass("commute1");
    for (int y = 0; y < H0.order; ++y)
        for (int y2 = 0; y2 < H0.order; ++y2)
            for (int z = 0; z < K0.order; ++z) {
                Point s = s1_point(b, b.H1().inverse(braidH.br(y2, y)), z);
                for (int a = 0; a < G.order; ++a)
                    for (int a2 = 0; a2 < G.order; ++a2) {
                        Point e{y, z, a}, e2{y2, z, a2};
                        Point rhs = act(c, x1(x1(e, e2), s), c.coeff.br(jmap(c, e), jmap(c, e2)));
                        if (x1(e2, e) != rhs) r.fail("commute1", tuple_str({y, y2, z, a, a2}));
                    }
            }
    r.pass("commute2");
    for (int y = 0; y < H0.order; ++y)
        for (int z = 0; z < K0.order; ++z)
            for (int z2 = 0; z2 < K0.order; ++z2) {
                Point s = s2_point(b, y, b.K1().inverse(braidK.br(z2, z)));
                for (int a = 0; a < G.order; ++a)
                    for (int a2 = 0; a2 < G.order; ++a2) {
                        Point e{y, z, a}, e2{y, z2, a2};
                        Point rhs = act(c, x2(x2(e, e2), s), c.coeff.br(jmap(c, e), jmap(c, e2)));
                        if (x2(e2, e) != rhs) r.fail("commute2", tuple_str({y, z, z2, a, a2}));
                    }
            }
    return r;
}

}  // namespace bextlab
