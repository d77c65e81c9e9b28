#include "bextlab/multiext.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace bextlab {

namespace {

std::string vec_str(const std::vector<int>& v)
{
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

int mixed_index(const std::vector<int>& radix, const std::vector<int>& t)
{
    int idx = 0;
    for (size_t i = 0; i < radix.size(); ++i) idx = idx * radix[i] + t[i];
    return idx;
}

std::vector<int> mixed_tuple(const std::vector<int>& radix, int idx)
{
    std::vector<int> t(radix.size());
    for (int i = int(radix.size()) - 1; i >= 0; --i) {
        t[i] = idx % radix[i];
        idx /= radix[i];
    }
    return t;
}

int radix_product(const std::vector<int>& radix)
{
    int n = 1;
    for (int r : radix) n *= r;
    return n;
}

std::vector<int> base_radix(const MultiExt& m)
{
    std::vector<int> r;
    for (const XMod& w : m.wings) r.push_back(w.Pi.order);
    return r;
}

std::vector<int> section_radix(const MultiExt& m, int i)
{
    std::vector<int> r = base_radix(m);
    r[i] = m.wings[i].G.order;
    return r;
}

// Elements sharing all base coordinates except i; keyed by the tuple with
// coordinate i set to 0.
std::vector<std::vector<int>> lines(const MultiExt& m, int i, std::vector<int>& line_of)
{
    std::vector<int> radix = base_radix(m);
    std::vector<std::vector<int>> out(radix_product(radix));
    line_of.assign(m.size, 0);
    for (int e = 0; e < m.size; ++e) {
        std::vector<int> t = m.base[e];
        t[i] = 0;
        line_of[e] = mixed_index(radix, t);
        out[line_of[e]].push_back(e);
    }
    return out;
}

}  // namespace

int MultiExt::base_count() const { return radix_product(base_radix(*this)); }
int MultiExt::base_index(const std::vector<int>& t) const { return mixed_index(base_radix(*this), t); }
std::vector<int> MultiExt::base_tuple(int idx) const { return mixed_tuple(base_radix(*this), idx); }
int MultiExt::section_count(int i) const { return radix_product(section_radix(*this, i)); }
int MultiExt::section_index(int i, const std::vector<int>& t) const
{
    return mixed_index(section_radix(*this, i), t);
}
std::vector<int> MultiExt::section_tuple(int i, int idx) const { return mixed_tuple(section_radix(*this, i), idx); }

std::vector<std::vector<int>> MultiExt::fibers() const
{
    std::vector<std::vector<int>> f(base_count());
    for (int e = 0; e < size; ++e) f[base_index(base[e])].push_back(e);
    return f;
}

int torsor_difference(const MultiExt& m, int e, int f)
{
    if (m.base[e] != m.base[f]) return -1;
    for (int g = 0; g < m.coeff.G().order; ++g)
        if (m.act(e, g) == f) return g;
    return -1;
}

int line_unit(const MultiExt& m, int i, const std::vector<int>& t)
{
    for (int e = 0; e < m.size; ++e)
        if (m.base[e] == t && m.prod(i, e, e) == e) return e;
    return -1;
}

namespace {

bool shape_ok(const MultiExt& m, Report& r)
{
    auto bad = [&](const std::string& why) {
        r.fail("shape", why);
        return false;
    };
    int n = m.arity, ng = m.coeff.G().order;
    if (n < 1 || int(m.wings.size()) != n) return bad("arity and wings disagree");
    if (int(m.base.size()) != m.size || int(m.j.size()) != m.size) return bad("base or j table length");
    if (int(m.rightG.size()) != m.size * ng) return bad("action table length");
    if (int(m.prods.size()) != n || int(m.sections.size()) != n) return bad("product or section count");
    for (int e = 0; e < m.size; ++e) {
        if (int(m.base[e].size()) != n) return bad("base tuple length at " + std::to_string(e));
        for (int i = 0; i < n; ++i)
            if (m.base[e][i] < 0 || m.base[e][i] >= m.wings[i].Pi.order) return bad("base value at " + std::to_string(e));
        if (m.j[e] < 0 || m.j[e] >= m.coeff.Pi().order) return bad("j value at " + std::to_string(e));
    }
    for (int v : m.rightG)
        if (v < 0 || v >= m.size) return bad("action value out of range");
    for (int i = 0; i < n; ++i) {
        if (int(m.prods[i].size()) != m.size * m.size) return bad("product table length");
        for (int v : m.prods[i])
            if (v < -1 || v >= m.size) return bad("product value out of range");
        if (int(m.sections[i].size()) != m.section_count(i)) return bad("section table length");
        for (int v : m.sections[i])
            if (v < 0 || v >= m.size) return bad("section value out of range");
    }
    r.pass("shape");
    return true;
}

}  // namespace

Report validate_multiext(const MultiExt& m)
{
    Report r;
    if (!shape_ok(m, r)) return r;
    const FinGroup &G = m.coeff.G(), &P = m.coeff.Pi();
    const XMod& cm = m.coeff.base;
    int n = m.arity, ng = G.order;

    // torsor: free transitive action on fibers, j equivariant
    r.pass("torsor");
    for (int e = 0; e < m.size; ++e) {
        if (m.act(e, G.e()) != e) r.fail("torsor", "unit acts at " + std::to_string(e));
        for (int g = 0; g < ng; ++g) {
            int eg = m.act(e, g);
            if (m.base[eg] != m.base[e]) r.fail("torsor", "action leaves fiber at " + tuple_str({e, g}));
            if (m.j[eg] != P.op(m.j[e], cm.d(g))) r.fail("torsor", "j not equivariant at " + tuple_str({e, g}));
            for (int g2 = 0; g2 < ng; ++g2)
                if (m.act(eg, g2) != m.act(e, G.op(g, g2))) r.fail("torsor", "not an action at " + tuple_str({e, g, g2}));
        }
    }
    for (const auto& fib : m.fibers()) {
        if (int(fib.size()) != ng) {
            r.fail("torsor", "fiber of size " + std::to_string(fib.size()));
            continue;
        }
        std::vector<bool> hit(m.size, false);
        for (int g = 0; g < ng; ++g) hit[m.act(fib[0], g)] = true;
        for (int e : fib)
            if (!hit[e]) r.fail("torsor", "not transitive at " + std::to_string(e));
    }
    if (!r.ok("torsor")) return r;

    std::vector<std::vector<int>> line_of(n);
    std::vector<std::vector<std::vector<int>>> line(n);
    for (int i = 0; i < n; ++i) line[i] = lines(m, i, line_of[i]);

    r.pass("product_fiber");
    r.pass("homomorphism");
    r.pass("action_compat");
    for (int i = 0; i < n; ++i) {
        const FinGroup& Hi = m.wings[i].Pi;
        for (int e = 0; e < m.size; ++e)
            for (int f = 0; f < m.size; ++f) {
                int ef = m.prod(i, e, f);
                bool same = line_of[i][e] == line_of[i][f];
                if (same != (ef >= 0)) {
                    r.fail("product_fiber", "definedness at " + tuple_str({i, e, f}));
                    continue;
                }
                if (!same) continue;
                std::vector<int> t = m.base[e];
                t[i] = Hi.op(t[i], m.base[f][i]);
                if (m.base[ef] != t) r.fail("product_fiber", "base at " + tuple_str({i, e, f}));
                if (m.j[ef] != P.op(m.j[e], m.j[f])) r.fail("homomorphism", tuple_str({i, e, f}));
                for (int g = 0; g < ng; ++g) {
                    if (m.prod(i, e, m.act(f, g)) != m.act(ef, g))
                        r.fail("action_compat", "right at " + tuple_str({i, e, f, g}));
                    if (m.prod(i, m.act(e, g), f) != m.prod(i, e, m.lact(g, f)))
                        r.fail("action_compat", "middle at " + tuple_str({i, e, f, g}));
                }
            }
    }
    if (!r.ok("product_fiber")) return r;

    r.pass("associativity");
    r.pass("unit");
    for (int i = 0; i < n; ++i) {
        for (const auto& L : line[i]) {
            for (int a : L)
                for (int b : L)
                    for (int c : L)
                        if (m.prod(i, m.prod(i, a, b), c) != m.prod(i, a, m.prod(i, b, c)))
                            r.fail("associativity", tuple_str({i, a, b, c}));
            bool found = false;
            for (int u : L) {
                if (m.base[u][i] != m.wings[i].Pi.e()) continue;
                bool is_unit = true;
                for (int f : L)
                    if (m.prod(i, u, f) != f || m.prod(i, f, u) != f) {
                        is_unit = false;
                        break;
                    }
                if (is_unit) {
                    found = true;
                    if (m.j[u] != P.e()) r.fail("unit", "j of unit at " + std::to_string(u));
                }
            }
            if (!found && !L.empty()) r.fail("unit", "no unit on line through " + std::to_string(L[0]));
        }
    }

    // (u xi u') xk (v xi v') = ((u xk v) xi (u' xk v')) . (<j(u'),j(v)>^{j(v')})^-1
    r.pass("interchange");
    for (int i = 0; i < n; ++i)
        for (int k = i + 1; k < n; ++k)
            for (int u = 0; u < m.size; ++u)
                for (int u2 : line[i][line_of[i][u]])
                    for (int v : line[k][line_of[k][u]])
                        for (int v2 : line[k][line_of[k][u2]]) {
                            if (m.base[v2][k] != m.base[v][k]) continue;
                            int lhs = m.prod(k, m.prod(i, u, u2), m.prod(i, v, v2));
                            int corr = G.inverse(cm.act(m.coeff.br(m.j[u2], m.j[v]), m.j[v2]));
                            int rhs = m.act(m.prod(i, m.prod(k, u, v), m.prod(k, u2, v2)), corr);
                            if (lhs != rhs) r.fail("interchange", tuple_str({i, k, u, u2, v, v2}));
                        }

    // sections
    r.pass("section_base");
    r.pass("j_section");
    for (int i = 0; i < n; ++i)
        for (int idx = 0; idx < m.section_count(i); ++idx) {
            std::vector<int> t = m.section_tuple(i, idx);
            int s = m.sections[i][idx];
            std::vector<int> b = t;
            b[i] = m.wings[i].d(t[i]);
            if (m.base[s] != b) r.fail("section_base", std::to_string(i) + vec_str(t));
            if (m.j[s] != P.e()) r.fail("j_section", std::to_string(i) + vec_str(t));
        }
    if (!r.ok("section_base")) return r;

    r.pass("eq24");
    for (int i = 0; i < n; ++i)
        for (int l = 0; l < n; ++l)
            for (int a = 0; a < m.section_count(i); ++a)
                for (int b = 0; b < m.section_count(i); ++b) {
                    std::vector<int> t = m.section_tuple(i, a), t2 = m.section_tuple(i, b);
                    bool agree = true;
                    for (int c = 0; c < n; ++c)
                        if (c != l && t[c] != t2[c]) agree = false;
                    if (!agree) continue;
                    std::vector<int> tt = t;
                    tt[l] = (l == i ? m.wings[l].G : m.wings[l].Pi).op(t[l], t2[l]);
                    if (m.prod(l, m.sections[i][a], m.sections[i][b]) != m.section(i, tt))
                        r.fail("eq24", std::to_string(i) + "," + std::to_string(l) + vec_str(t) + vec_str(t2));
                }

    r.pass("eq25");
    r.pass("eq22");
    for (int i = 0; i < n; ++i)
        for (int idx = 0; idx < m.section_count(i); ++idx) {
            std::vector<int> t = m.section_tuple(i, idx);
            int s = m.sections[i][idx];
            if (m.wings[i].d(t[i]) == m.wings[i].Pi.e()) {
                int u0 = line_unit(m, i, m.base[s]);
                if (u0 < 0) r.fail("eq25", "no unit at " + std::to_string(i) + vec_str(t));
                for (int g = 0; u0 >= 0 && g < ng; ++g) {
                    int iota = m.act(u0, g);
                    if (m.prod(i, s, iota) != m.prod(i, iota, s))
                        r.fail("eq25", std::to_string(i) + vec_str(t) + " g=" + std::to_string(g));
                }
            }
            // s_i(t) xi e = e xi s_i(t with t_i -> t_i^{y_i})
            for (int e : line[i][line_of[i][s]]) {
                std::vector<int> t2 = t;
                t2[i] = m.wings[i].act(t[i], m.base[e][i]);
                if (m.prod(i, s, e) != m.prod(i, e, m.section(i, t2)))
                    r.fail("eq22", std::to_string(i) + vec_str(t) + " e=" + std::to_string(e));
            }
        }

    r.pass("restriction");
    for (int i = 0; i < n; ++i)
        for (int l = i + 1; l < n; ++l) {
            std::vector<int> radix = base_radix(m);
            radix[i] = m.wings[i].G.order;
            radix[l] = m.wings[l].G.order;
            for (int idx = 0; idx < radix_product(radix); ++idx) {
                std::vector<int> t = mixed_tuple(radix, idx);
                std::vector<int> ti = t, tl = t;
                ti[l] = m.wings[l].d(t[l]);
                tl[i] = m.wings[i].d(t[i]);
                if (m.section(i, ti) != m.section(l, tl))
                    r.fail("restriction", std::to_string(i) + "," + std::to_string(l) + vec_str(t));
            }
        }
    return r;
}

MultiExt from_cocycle(const ButterflyCocycle& b)
{
    const BiextCocycle& c = b.base;
    int nh = c.H.order, nk = c.K.order, ng = c.coeff.G().order;
    MultiExt m;
    m.arity = 2;
    m.wings = {b.wingH, b.wingK};
    m.coeff = c.coeff;
    m.size = nh * nk * ng;
    auto idx = [&](const Point& p) { return (p.h * nk + p.k) * ng + p.a; };
    std::vector<Point> pts(m.size);
    for (int h = 0; h < nh; ++h)
        for (int k = 0; k < nk; ++k)
            for (int a = 0; a < ng; ++a) pts[idx({h, k, a})] = {h, k, a};
    m.base.resize(m.size);
    m.j.resize(m.size);
    m.rightG.resize(m.size * ng);
    for (int e = 0; e < m.size; ++e) {
        m.base[e] = {pts[e].h, pts[e].k};
        m.j[e] = jmap(c, pts[e]);
        for (int g = 0; g < ng; ++g) m.rightG[e * ng + g] = idx(act(c, pts[e], g));
    }
    m.prods.assign(2, std::vector<int>(m.size * m.size, -1));
    for (int e = 0; e < m.size; ++e)
        for (int f = 0; f < m.size; ++f) {
            if (pts[e].k == pts[f].k) m.prods[0][e * m.size + f] = idx(partial_product(c, 1, pts[e], pts[f]));
            if (pts[e].h == pts[f].h) m.prods[1][e * m.size + f] = idx(partial_product(c, 2, pts[e], pts[f]));
        }
    m.sections.resize(2);
    for (int h = 0; h < b.H1().order; ++h)
        for (int z = 0; z < nk; ++z) m.sections[0].push_back(idx(s1_point(b, h, z)));
    for (int y = 0; y < nh; ++y)
        for (int k = 0; k < b.K1().order; ++k) m.sections[1].push_back(idx(s2_point(b, y, k)));
    return m;
}

std::vector<int> canonical_sections(const MultiExt& m)
{
    std::vector<int> s;
    for (const auto& f : m.fibers()) s.push_back(f.empty() ? -1 : f[0]);
    return s;
}

ButterflyCocycle to_cocycle(const MultiExt& m, const std::vector<int>& sec)
{
    if (m.arity != 2) throw Error("BadArity", "to_cocycle needs a 2-extension");
    const FinGroup &H = m.wings[0].Pi, &K = m.wings[1].Pi, &G = m.coeff.G();
    int nh = H.order, nk = K.order;
    auto pt = [&](int h, int k) { return sec[m.base_index({h, k})]; };
    auto diff = [&](int e, int f) {
        int g = torsor_difference(m, e, f);
        if (g < 0) throw Error("FiberMismatch", "section point outside its fiber");
        return g;
    };
    BiextCocycle c = trivial_biext(H, K, m.coeff);
    for (int h = 0; h < nh; ++h)
        for (int k = 0; k < nk; ++k) c.x[h * nk + k] = m.j[pt(h, k)];
    for (int h = 0; h < nh; ++h)
        for (int h2 = 0; h2 < nh; ++h2)
            for (int k = 0; k < nk; ++k)
                c.g1[(h * nh + h2) * nk + k] = diff(pt(H.op(h, h2), k), m.prod(0, pt(h, k), pt(h2, k)));
    for (int h = 0; h < nh; ++h)
        for (int k = 0; k < nk; ++k)
            for (int k2 = 0; k2 < nk; ++k2)
                c.g2[(h * nk + k) * nk + k2] = diff(pt(h, K.op(k, k2)), m.prod(1, pt(h, k), pt(h, k2)));
    ButterflyCocycle b = butterfly_over(c, m.wings[0], m.wings[1]);
    for (int h = 0; h < b.H1().order; ++h)
        for (int z = 0; z < nk; ++z)
            b.u1[h * nk + z] = G.inverse(diff(pt(m.wings[0].d(h), z), m.section(0, {h, z})));
    for (int y = 0; y < nh; ++y)
        for (int k = 0; k < b.K1().order; ++k)
            b.u2[y * b.K1().order + k] = G.inverse(diff(pt(y, m.wings[1].d(k)), m.section(1, {y, k})));
    return b;
}

MultiExt identity_multiext(const BraidedXMod& H)
{
    const XMod& w = H.base;
    int n0 = w.Pi.order, n1 = w.G.order;
    MultiExt m;
    m.arity = 1;
    m.wings = {w};
    m.coeff = H;
    m.size = n0 * n1;
    m.base.resize(m.size);
    m.j.resize(m.size);
    m.rightG.resize(m.size * n1);
    m.prods.assign(1, std::vector<int>(m.size * m.size));
    for (int y = 0; y < n0; ++y)
        for (int g = 0; g < n1; ++g) {
            int e = y * n1 + g;
            m.base[e] = {y};
            m.j[e] = w.Pi.op(y, w.d(g));
            for (int g2 = 0; g2 < n1; ++g2) m.rightG[e * n1 + g2] = y * n1 + w.G.op(g, g2);
            for (int y2 = 0; y2 < n0; ++y2)
                for (int g2 = 0; g2 < n1; ++g2)
                    m.prods[0][e * m.size + y2 * n1 + g2] = w.Pi.op(y, y2) * n1 + w.G.op(w.act(g, y2), g2);
        }
    m.sections.resize(1);
    for (int h = 0; h < n1; ++h) m.sections[0].push_back(w.d(h) * n1 + w.G.inverse(h));
    return m;
}

MultiExt trivial_multiext(const std::vector<XMod>& wings, const BraidedXMod& coeff)
{
    MultiExt m;
    m.arity = int(wings.size());
    m.wings = wings;
    m.coeff = coeff;
    const FinGroup& G = coeff.G();
    int ng = G.order, nb = m.base_count();
    m.size = nb * ng;
    m.base.resize(m.size);
    m.j.resize(m.size);
    m.rightG.resize(m.size * ng);
    for (int b = 0; b < nb; ++b)
        for (int a = 0; a < ng; ++a) {
            int e = b * ng + a;
            m.base[e] = m.base_tuple(b);
            m.j[e] = coeff.base.d(a);
            for (int g = 0; g < ng; ++g) m.rightG[e * ng + g] = b * ng + G.op(a, g);
        }
    m.prods.assign(m.arity, std::vector<int>(m.size * m.size, -1));
    for (int i = 0; i < m.arity; ++i)
        for (int e = 0; e < m.size; ++e)
            for (int f = 0; f < m.size; ++f) {
                std::vector<int> t = m.base[e], t2 = m.base[f];
                bool agree = true;
                for (int c = 0; c < m.arity; ++c)
                    if (c != i && t[c] != t2[c]) agree = false;
                if (!agree) continue;
                t[i] = wings[i].Pi.op(t[i], t2[i]);
                m.prods[i][e * m.size + f] = m.base_index(t) * ng + G.op(e % ng, f % ng);
            }
    m.sections.resize(m.arity);
    for (int i = 0; i < m.arity; ++i)
        for (int idx = 0; idx < m.section_count(i); ++idx) {
            std::vector<int> t = m.section_tuple(i, idx);
            t[i] = wings[i].d(t[i]);
            m.sections[i].push_back(m.base_index(t) * ng + G.e());
        }
    return m;
}

int Composite::class_of(const std::vector<int>& tuple) const
{
    auto it = tuple_index.find(tuple);
    if (it == tuple_index.end()) throw Error("NotInFiberProduct", vec_str(tuple));
    return cls[it->second];
}

namespace {

struct ComposeCtx {
    const MultiExt& E;
    const std::vector<MultiExt>& F;
    std::vector<int> offset;  // first composite coordinate of F_i

    // Right action of h = (h_1..h_n) on a fiber-product tuple.
    std::vector<int> act(std::vector<int> t, const std::vector<int>& h) const
    {
        int n = E.arity;
        int& u = t[n];
        for (int l = 0; l < n; ++l) {
            if (h[l] == E.wings[l].G.e()) continue;
            t[l] = F[l].act(t[l], h[l]);
            std::vector<int> y = E.base[u];
            y[l] = h[l];
            u = E.prod(l, u, E.section(l, y));
        }
        return t;
    }

    // eq38 after moving the second tuple onto the first off slot i.
    std::vector<int> product(int i, int jj, const std::vector<int>& t1, const std::vector<int>& t2) const
    {
        int n = E.arity;
        std::vector<int> h(n);
        for (int l = 0; l < n; ++l) {
            h[l] = E.wings[l].G.e();
            if (l == i) continue;
            h[l] = torsor_difference(F[l], t2[l], t1[l]);
            if (h[l] < 0) throw Error("CompositionFailed", "no adjusting element");
        }
        std::vector<int> t2a = act(t2, h);
        std::vector<int> out = t1;
        out[i] = F[i].prod(jj, t1[i], t2a[i]);
        out[n] = E.prod(i, t1[n], t2a[n]);
        if (out[i] < 0 || out[n] < 0) throw Error("CompositionFailed", "undefined product");
        return out;
    }
};

std::vector<std::vector<int>> all_tuples(const std::vector<int>& radix)
{
    std::vector<std::vector<int>> out;
    int total = radix_product(radix);
    for (int idx = 0; idx < total; ++idx) out.push_back(mixed_tuple(radix, idx));
    return out;
}

}  // namespace

Composite compose_full(const MultiExt& E, const std::vector<MultiExt>& F)
{
    int n = E.arity;
    if (int(F.size()) != n) throw Error("WingMismatch", "need one butterfly per wing");
    for (int i = 0; i < n; ++i)
        if (!(F[i].coeff.base == E.wings[i]))
            throw Error("WingMismatch", "coefficient of factor " + std::to_string(i) + " differs from wing");
    if (!validate_braiding(E.coeff).ok()) throw Error("NonBraidedCoefficient", "outer coefficient");
    for (int i = 0; i < n; ++i)
        if (F[i].arity > 1 && !validate_braiding(F[i].coeff).ok())
            throw Error("NonBraidedCoefficient", "wing " + std::to_string(i));

    ComposeCtx ctx{E, F, {}};
    int total = 0;
    for (int i = 0; i < n; ++i) {
        ctx.offset.push_back(total);
        total += F[i].arity;
    }

    Composite C;
    // fiber product, lexicographic in (v_1, ..., v_n, u)
    std::vector<std::vector<int>> Efib = E.fibers();
    std::vector<int> t(n + 1);
    std::function<void(int)> gen = [&](int i) {
        if (i == n) {
            std::vector<int> y(n);
            for (int l = 0; l < n; ++l) y[l] = F[l].j[t[l]];
            for (int u : Efib[E.base_index(y)]) {
                t[n] = u;
                C.tuple_index[t] = int(C.tuples.size());
                C.tuples.push_back(t);
            }
            return;
        }
        for (int v = 0; v < F[i].size; ++v) {
            t[i] = v;
            gen(i + 1);
        }
    };
    gen(0);

    std::vector<int> hradix;
    for (int l = 0; l < n; ++l) hradix.push_back(E.wings[l].G.order);
    std::vector<std::vector<int>> hs = all_tuples(hradix);

    C.cls.assign(C.tuples.size(), -1);
    for (size_t x = 0; x < C.tuples.size(); ++x) {
        if (C.cls[x] >= 0) continue;
        int c = int(C.rep.size());
        C.rep.push_back(int(x));
        int count = 0;
        for (const auto& h : hs) {
            int y = C.tuple_index.at(ctx.act(C.tuples[x], h));
            if (C.cls[y] == c) continue;
            if (C.cls[y] >= 0) throw Error("CompositionFailed", "orbits overlap");
            C.cls[y] = c;
            ++count;
        }
        if (count != int(hs.size())) throw Error("NotFree", "orbit of size " + std::to_string(count));
    }

    MultiExt& Q = C.Q;
    Q.arity = total;
    for (int i = 0; i < n; ++i)
        for (const XMod& w : F[i].wings) Q.wings.push_back(w);
    Q.coeff = E.coeff;
    Q.size = int(C.rep.size());
    int ng = E.coeff.G().order;
    Q.base.resize(Q.size);
    Q.j.resize(Q.size);
    Q.rightG.resize(Q.size * ng);
    for (int c = 0; c < Q.size; ++c) {
        const auto& T = C.tuples[C.rep[c]];
        for (int i = 0; i < n; ++i)
            for (int b : F[i].base[T[i]]) Q.base[c].push_back(b);
        Q.j[c] = E.j[T[n]];
        for (int g = 0; g < ng; ++g) {
            std::vector<int> T2 = T;
            T2[n] = E.act(T[n], g);
            Q.rightG[c * ng + g] = C.class_of(T2);
        }
    }

    Q.prods.assign(total, std::vector<int>(Q.size * Q.size, -1));
    std::vector<std::pair<int, int>> slot;
    for (int i = 0; i < n; ++i)
        for (int jj = 0; jj < F[i].arity; ++jj) slot.push_back({i, jj});
    for (int p = 0; p < total; ++p) {
        auto [i, jj] = slot[p];
        for (int a = 0; a < Q.size; ++a)
            for (int b = 0; b < Q.size; ++b) {
                bool agree = true;
                for (int c = 0; c < total; ++c)
                    if (c != p && Q.base[a][c] != Q.base[b][c]) agree = false;
                if (!agree) continue;
                Q.prods[p][a * Q.size + b] = C.class_of(ctx.product(i, jj, C.tuples[C.rep[a]], C.tuples[C.rep[b]]));
            }
    }

    // hat s_{i,j}(z) = [v_1, .., s_{i,j}(z_i), .., v_n, unit of x_i over (y_1,..,1,..,y_n)]
    std::vector<std::vector<std::vector<int>>> Ffib;
    for (int i = 0; i < n; ++i) Ffib.push_back(F[i].fibers());
    Q.sections.resize(total);
    for (int p = 0; p < total; ++p) {
        auto [i, jj] = slot[p];
        for (int idx = 0; idx < Q.section_count(p); ++idx) {
            std::vector<int> z = Q.section_tuple(p, idx);
            std::vector<int> T(n + 1);
            std::vector<int> y(n);
            for (int l = 0; l < n; ++l) {
                std::vector<int> block(z.begin() + ctx.offset[l], z.begin() + ctx.offset[l] + F[l].arity);
                T[l] = l == i ? F[l].section(jj, block) : Ffib[l][F[l].base_index(block)].at(0);
                y[l] = F[l].j[T[l]];
            }
            T[n] = line_unit(E, i, y);
            if (T[n] < 0) throw Error("CompositionFailed", "no unit on the line");
            Q.sections[p].push_back(C.class_of(T));
        }
    }
    return C;
}

MultiExt compose(const MultiExt& E, const std::vector<MultiExt>& F) { return compose_full(E, F).Q; }

Report check_choice_independence(const Composite& C, const MultiExt& E, const std::vector<MultiExt>& F)
{
    Report r;
    r.pass("choice_independence");
    int n = E.arity;
    ComposeCtx ctx{E, F, {}};
    std::vector<std::vector<int>> members(C.Q.size);
    for (size_t x = 0; x < C.tuples.size(); ++x) members[C.cls[x]].push_back(int(x));
    int p = 0;
    for (int i = 0; i < n; ++i)
        for (int jj = 0; jj < F[i].arity; ++jj, ++p)
            for (int a = 0; a < C.Q.size; ++a)
                for (int b = 0; b < C.Q.size; ++b) {
                    int want = C.Q.prod(p, a, b);
                    if (want < 0) continue;
                    for (int x : members[a])
                        for (int y : members[b])
                            if (C.class_of(ctx.product(i, jj, C.tuples[x], C.tuples[y])) != want)
                                r.fail("choice_independence", tuple_str({p, a, b, x, y}));
                }
    return r;
}

std::vector<int> map_compose(const Composite& C, const Composite& D, const std::vector<int>& f,
                             const std::vector<std::vector<int>>& g)
{
    std::vector<int> out(C.Q.size);
    for (int c = 0; c < C.Q.size; ++c) {
        std::vector<int> T = C.tuples[C.rep[c]];
        int n = int(T.size()) - 1;
        for (int l = 0; l < n; ++l) T[l] = g[l][T[l]];
        T[n] = f[T[n]];
        out[c] = D.class_of(T);
    }
    return out;
}

Report check_morphism(const MultiExt& m1, const MultiExt& m2, const std::vector<int>& phi)
{
    Report r;
    if (m1.arity != m2.arity || m1.size != m2.size || int(phi.size()) != m1.size) {
        r.fail("bijection", "sizes differ");
        return r;
    }
    std::vector<bool> hit(m2.size, false);
    r.pass("bijection");
    for (int e = 0; e < m1.size; ++e) {
        if (phi[e] < 0 || phi[e] >= m2.size || hit[phi[e]]) {
            r.fail("bijection", std::to_string(e));
            return r;
        }
        hit[phi[e]] = true;
    }
    r.pass("base");
    r.pass("j");
    r.pass("equivariant");
    for (int e = 0; e < m1.size; ++e) {
        if (m1.base[e] != m2.base[phi[e]]) r.fail("base", std::to_string(e));
        if (m1.j[e] != m2.j[phi[e]]) r.fail("j", std::to_string(e));
        for (int g = 0; g < m1.coeff.G().order; ++g)
            if (phi[m1.act(e, g)] != m2.act(phi[e], g)) r.fail("equivariant", tuple_str({e, g}));
    }
    r.pass("products");
    for (int i = 0; i < m1.arity; ++i)
        for (int e = 0; e < m1.size; ++e)
            for (int f = 0; f < m1.size; ++f) {
                int ef = m1.prod(i, e, f);
                int img = m2.prod(i, phi[e], phi[f]);
                if ((ef < 0) != (img < 0) || (ef >= 0 && phi[ef] != img)) r.fail("products", tuple_str({i, e, f}));
            }
    r.pass("sections");
    for (int i = 0; i < m1.arity; ++i)
        for (size_t idx = 0; idx < m1.sections[i].size(); ++idx)
            if (phi[m1.sections[i][idx]] != m2.sections[i][idx]) r.fail("sections", tuple_str({i, (long long)idx}));
    return r;
}

std::optional<std::vector<int>> iso_check(const MultiExt& m1, const MultiExt& m2)
{
    if (m1.arity != m2.arity || m1.size != m2.size || !(m1.coeff == m2.coeff)) return std::nullopt;
    for (int i = 0; i < m1.arity; ++i)
        if (!(m1.wings[i] == m2.wings[i])) return std::nullopt;
    const FinGroup& G = m1.coeff.G();
    std::vector<std::vector<int>> fib1 = m1.fibers(), fib2 = m2.fibers();
    int nf = int(fib1.size());
    for (int b = 0; b < nf; ++b)
        if (fib1[b].size() != fib2[b].size() || fib1[b].empty()) return std::nullopt;
    std::vector<int> fiber_of(m1.size);
    for (int b = 0; b < nf; ++b)
        for (int e : fib1[b]) fiber_of[e] = b;
    // image of the least element of each m1 fiber; -1 unassigned
    using State = std::vector<int>;
    std::uint64_t nodes = 0;

    // phi(x) for x = r_C . g
    auto image = [&](const State& s, int x) {
        int b = fiber_of[x];
        return m2.act(s[b], torsor_difference(m1, fib1[b][0], x));
    };
    auto set = [&](State& s, std::vector<int>& queue, int x, int y) {
        // requires phi(x) = y
        int b = fiber_of[x];
        int g = torsor_difference(m1, fib1[b][0], x);
        int img = m2.act(y, G.inverse(g));
        if (m2.base[img] != m1.base[fib1[b][0]] || m2.j[img] != m1.j[fib1[b][0]]) return false;
        if (s[b] >= 0) return s[b] == img;
        s[b] = img;
        queue.push_back(b);
        return true;
    };
    auto propagate = [&](State& s, std::vector<int> queue) {
        std::vector<int> assigned;
        for (int b = 0; b < nf; ++b)
            if (s[b] >= 0) assigned.push_back(b);
        while (!queue.empty()) {
            int a = queue.back();
            queue.pop_back();
            if (std::find(assigned.begin(), assigned.end(), a) == assigned.end()) assigned.push_back(a);
            std::vector<int> snapshot = assigned;
            for (int b : snapshot)
                for (int i = 0; i < m1.arity; ++i)
                    for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
                        int rx = fib1[x][0], ry = fib1[y][0];
                        int p = m1.prod(i, rx, ry);
                        if (p < 0) continue;
                        if (!set(s, queue, p, m2.prod(i, s[x], s[y]))) return false;
                    }
        }
        return true;
    };

    State s0(nf, -1);
    std::vector<int> queue;
    for (int i = 0; i < m1.arity; ++i)
        for (size_t idx = 0; idx < m1.sections[i].size(); ++idx)
            if (!set(s0, queue, m1.sections[i][idx], m2.sections[i][idx])) return std::nullopt;
    if (!propagate(s0, queue)) return std::nullopt;

    std::optional<std::vector<int>> found;
    std::function<void(const State&)> search = [&](const State& s) {
        if (found) return;
        if (++nodes > max_search()) throw Error("SearchSpaceTooLarge", "isomorphism search nodes exceed the bound");
        int b = -1;
        for (int c = 0; c < nf; ++c)
            if (s[c] < 0) {
                b = c;
                break;
            }
        if (b < 0) {
            std::vector<int> phi(m1.size);
            for (int e = 0; e < m1.size; ++e) phi[e] = image(s, e);
            if (check_morphism(m1, m2, phi).ok()) found = phi;
            return;
        }
        for (int cand : fib2[b]) {
            State t = s;
            std::vector<int> q;
            if (set(t, q, fib1[b][0], cand) && propagate(t, q)) search(t);
            if (found) return;
        }
    };
    search(s0);
    return found;
}

std::vector<int> assoc_witness(const MultiExt& E, const std::vector<MultiExt>& F, const std::vector<MultiExt>& G)
{
    MultiExt left = compose(compose(E, F), G);
    std::vector<MultiExt> inner;
    size_t pos = 0;
    for (const MultiExt& f : F) {
        if (pos + f.arity > G.size()) throw Error("WingMismatch", "not enough second-level butterflies");
        std::vector<MultiExt> part(G.begin() + pos, G.begin() + pos + f.arity);
        inner.push_back(compose(f, part));
        pos += f.arity;
    }
    MultiExt right = compose(E, inner);
    auto phi = iso_check(left, right);
    if (!phi) throw Error("AssociatorMissing", "no isomorphism between the two bracketings");
    return *phi;
}

MultiExt contracted_product(const MultiExt& m1, const MultiExt& m2)
{
    if (m1.arity != m2.arity || !(m1.coeff == m2.coeff) || m1.base_count() != m2.base_count())
        throw Error("BaseMismatch", "contracted product needs equal wings and coefficient");
    for (int i = 0; i < m1.arity; ++i)
        if (!(m1.wings[i] == m2.wings[i])) throw Error("BaseMismatch", "wing " + std::to_string(i));
    if (!is_symmetric(m1.coeff)) throw Error("NotSymmetric", "the coefficient braiding is not symmetric");

    const FinGroup &G = m1.coeff.G(), &P = m1.coeff.Pi();
    const XMod& cm = m1.coeff.base;
    std::vector<std::vector<int>> fib1 = m1.fibers();
    auto ref = [&](int f) { return fib1[m1.base_index(m2.base[f])].at(0); };
    // [x, y] with x = ref.g  ->  [ref, g.y]
    auto norm = [&](int x, int y) {
        int g = torsor_difference(m1, fib1[m1.base_index(m1.base[x])].at(0), x);
        return m2.lact(g, y);
    };

    MultiExt m;
    m.arity = m1.arity;
    m.wings = m1.wings;
    m.coeff = m1.coeff;
    m.size = m2.size;
    m.base = m2.base;
    m.j.resize(m.size);
    m.rightG = m2.rightG;
    for (int f = 0; f < m.size; ++f) m.j[f] = P.op(m1.j[ref(f)], m2.j[f]);
    m.prods.assign(m.arity, std::vector<int>(m.size * m.size, -1));
    // [e,f] x [e',f'] = [e x e', (f x f') . (<j(f),j(e')>^-1)^{j(f')}]
    for (int i = 0; i < m.arity; ++i)
        for (int f = 0; f < m.size; ++f)
            for (int f2 = 0; f2 < m.size; ++f2) {
                int ff = m2.prod(i, f, f2);
                if (ff < 0) continue;
                int e = ref(f), e2 = ref(f2);
                int chi = G.inverse(m1.coeff.br(m2.j[f], m1.j[e2]));
                m.prods[i][f * m.size + f2] = norm(m1.prod(i, e, e2), m2.act(ff, cm.act(chi, m2.j[f2])));
            }
    m.sections.resize(m.arity);
    for (int i = 0; i < m.arity; ++i)
        for (size_t idx = 0; idx < m1.sections[i].size(); ++idx)
            m.sections[i].push_back(norm(m1.sections[i][idx], m2.sections[i][idx]));
    return m;
}

}  // namespace bextlab
