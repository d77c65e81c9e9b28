#include "bextlab/cohom.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace bextlab {

// ---------------------------------------------------------------- cochains

Cochain5 Cochain5::zero(int n, int m_zero)
{
    const int n3 = n * n * n;
    return Cochain5{n, std::vector<int>(n3, m_zero), std::vector<int>(n3, m_zero), std::vector<int>(n3, m_zero),
                    std::vector<int>(n3, m_zero), std::vector<int>(n * n, m_zero)};
}

std::vector<int> Cochain5::slots() const
{
    std::vector<int> s;
    for (const auto* v : {&f, &alpha1, &alpha2, &fplus, &gplus}) s.insert(s.end(), v->begin(), v->end());
    return s;
}

Cochain5 Cochain5::from_slots(int n, const std::vector<int>& s)
{
    const int n3 = n * n * n;
    if (static_cast<int>(s.size()) != 4 * n3 + n * n) throw Error("BadCochain", "wrong slot count");
    Cochain5 c;
    c.n = n;
    c.f.assign(s.begin(), s.begin() + n3);
    c.alpha1.assign(s.begin() + n3, s.begin() + 2 * n3);
    c.alpha2.assign(s.begin() + 2 * n3, s.begin() + 3 * n3);
    c.fplus.assign(s.begin() + 3 * n3, s.begin() + 4 * n3);
    c.gplus.assign(s.begin() + 4 * n3, s.end());
    return c;
}

Cochain2 Cochain2::zero(int n, int m_zero)
{
    return Cochain2{n, std::vector<int>(n * n, m_zero), std::vector<int>(n * n, m_zero)};
}

std::vector<int> Cochain2::slots() const
{
    std::vector<int> s = c;
    s.insert(s.end(), h.begin(), h.end());
    return s;
}

std::string mode_name(CocycleMode m)
{
    switch (m) {
    case CocycleMode::H3_2: return "h3_2";
    case CocycleMode::H3_3: return "h3_3";
    case CocycleMode::TWISTED: return "twisted";
    }
    return "?";
}

CocycleMode parse_mode(const std::string& s)
{
    if (s == "h3_2" || s == "H3_2") return CocycleMode::H3_2;
    if (s == "h3_3" || s == "H3_3") return CocycleMode::H3_3;
    if (s == "twisted" || s == "TWISTED") return CocycleMode::TWISTED;
    throw Error("BadMode", s);
}

// ---------------------------------------------------------------- linear expressions

LinExpr normalize(const FinRing& A, LinExpr e)
{
    std::map<std::tuple<int, int, int>, long long> acc;
    for (const LinTerm& t : e) {
        if (t.left == A.zero() || t.right == A.zero()) continue;
        acc[{t.slot, t.left, t.right}] += t.coeff;
    }
    LinExpr out;
    for (auto& [k, c] : acc)
        if (c != 0) out.push_back({c, std::get<0>(k), std::get<1>(k), std::get<2>(k)});
    return out;
}

int evaluate(const FinRing&, const Bimodule& M, const LinExpr& e, const std::vector<int>& values)
{
    int acc = M.M.e();
    for (const LinTerm& t : e) {
        int v = values[t.slot];
        if (t.left >= 0) v = M.lact(t.left, v);
        if (t.right >= 0) v = M.ract(v, t.right);
        acc = M.M.op(acc, times(M.M, t.coeff, v));
    }
    return acc;
}

namespace {

struct Slots {
    int n;
    int f(int a, int b, int c) const { return (a * n + b) * n + c; }
    int a1(int a, int b, int c) const { return n * n * n + (a * n + b) * n + c; }
    int a2(int a, int b, int c) const { return 2 * n * n * n + (a * n + b) * n + c; }
    int fp(int a, int b, int c) const { return 3 * n * n * n + (a * n + b) * n + c; }
    int g(int a, int b) const { return 4 * n * n * n + a * n + b; }
    int total() const { return 4 * n * n * n + n * n; }
};

struct Builder {
    LinExpr e;
    void add(long long c, int slot, int l = -1, int r = -1) { e.push_back({c, slot, l, r}); }
};

std::vector<std::vector<int>> tuples(int n, int k)
{
    std::vector<std::vector<int>> out;
    int total = 1;
    for (int i = 0; i < k; ++i) total *= n;
    for (int t = 0; t < total; ++t) {
        std::vector<int> v(k);
        int r = t;
        for (int i = k - 1; i >= 0; --i) {
            v[i] = r % n;
            r /= n;
        }
        out.push_back(v);
    }
    return out;
}

// Left side minus right side of one transcribed line.
LinExpr block_line(const FinRing& A, const std::string& id, const std::vector<int>& x)
{
    const Slots S{A.n()};
    auto m = [&](int u, int v) { return A.times(u, v); };
    auto p = [&](int u, int v) { return A.plus(u, v); };
    Builder B;
    const int a = x[0], b = x.size() > 1 ? x[1] : 0, c = x.size() > 2 ? x[2] : 0, d = x.size() > 3 ? x[3] : 0;
    if (id == "eq46") {
        B.add(1, S.f(b, c, d), a);
        B.add(-1, S.f(m(a, b), c, d));
        B.add(1, S.f(a, m(b, c), d));
        B.add(-1, S.f(a, b, m(c, d)));
        B.add(1, S.f(a, b, c), -1, d);
    } else if (id == "eq47.1") {
        B.add(1, S.f(b, c, d));
        B.add(-1, S.f(p(a, b), c, d));
        B.add(1, S.f(a, c, d));
        B.add(-1, S.a1(m(a, c), m(b, c), d));
        B.add(1, S.a1(a, b, m(c, d)));
        B.add(-1, S.a1(a, b, c), -1, d);
    } else if (id == "eq47.2") {
        B.add(-1, S.f(a, c, d));
        B.add(1, S.f(a, p(b, c), d));
        B.add(-1, S.f(a, b, d));
        B.add(-1, S.a1(b, c, d), a);
        B.add(1, S.a1(m(a, b), m(a, c), d));
        B.add(1, S.a2(a, m(b, d), m(c, d)));
        B.add(-1, S.a2(a, b, c), -1, d);
    } else if (id == "eq47.3") {
        B.add(1, S.f(a, b, d));
        B.add(-1, S.f(a, b, p(c, d)));
        B.add(1, S.f(a, b, c));
        B.add(-1, S.a2(b, c, d), a);
        B.add(1, S.a2(m(a, b), c, d));
        B.add(-1, S.a2(a, m(b, c), m(b, d)));
    } else if (id == "eq48") {
        const int ac = m(a, c), bc = m(b, c), ad = m(a, d), bd = m(b, d);
        B.add(1, S.fp(ac, bc, p(ad, bd)));
        B.add(-1, S.fp(ac, ad, p(bc, bd)));
        B.add(1, S.fp(ad, bc, bd));
        B.add(-1, S.fp(bc, ad, bd));
        B.add(-1, S.g(bc, ad));
        B.add(-1, S.a1(a, b, d));
        B.add(1, S.a1(a, b, p(c, d)));
        B.add(-1, S.a1(a, b, c));
        B.add(-1, S.a2(b, c, d));
        B.add(1, S.a2(p(a, b), c, d));
        B.add(-1, S.a2(a, c, d));
    } else if (id == "eq49.1") {
        B.add(1, S.fp(m(a, d), m(b, d), m(c, d)));
        B.add(-1, S.fp(a, b, c), -1, d);
        B.add(1, S.a1(b, c, d));
        B.add(-1, S.a1(p(a, b), c, d));
        B.add(1, S.a1(a, p(b, c), d));
        B.add(-1, S.a1(a, b, d));
    } else if (id == "eq49.2") {
        // the last term is alpha2(a;b,c); alpha1 does not fit the arguments
        B.add(1, S.fp(m(a, b), m(a, c), m(a, d)));
        B.add(-1, S.fp(b, c, d), a);
        B.add(-1, S.a2(a, c, d));
        B.add(1, S.a2(a, p(b, c), d));
        B.add(-1, S.a2(a, b, p(c, d)));
        B.add(1, S.a2(a, b, c));
    } else if (id == "eq49.3") {
        B.add(1, S.g(m(a, c), m(b, c)));
        B.add(-1, S.g(a, b), -1, c);
        B.add(1, S.a1(a, b, c));
        B.add(-1, S.a1(b, a, c));
    } else if (id == "eq49.4") {
        B.add(1, S.g(m(a, b), m(a, c)));
        B.add(-1, S.g(b, c), a);
        B.add(-1, S.a2(a, b, c));
        B.add(1, S.a2(a, c, b));
    } else if (id == "eq50.1") {
        B.add(1, S.fp(b, c, d));
        B.add(-1, S.fp(p(a, b), c, d));
        B.add(1, S.fp(a, p(b, c), d));
        B.add(-1, S.fp(a, b, p(c, d)));
        B.add(1, S.fp(a, b, c));
    } else if (id == "eq50.2") {
        B.add(1, S.fp(a, b, c));
        B.add(-1, S.fp(a, c, b));
        B.add(1, S.fp(c, a, b));
        B.add(-1, S.g(b, c));
        B.add(1, S.g(p(a, b), c));
        B.add(-1, S.g(a, c));
    } else if (id == "eq50.3") {
        B.add(1, S.fp(a, b, c));
        B.add(-1, S.fp(b, a, c));
        B.add(1, S.fp(b, c, a));
        B.add(1, S.g(a, c));
        B.add(-1, S.g(a, p(b, c)));
        B.add(1, S.g(a, b));
    } else if (id == "eq50.4") {
        B.add(1, S.g(a, b));
        B.add(1, S.g(b, a));
    } else if (id == "eq52.1") {
        B.add(-1, S.g(m(b, c), m(a, c)));
        B.add(-1, S.g(a, b), -1, c);
        B.add(1, S.a1(a, b, c));
        B.add(-1, S.a1(b, a, c));
    } else if (id == "eq52.2") {
        B.add(-1, S.g(m(a, c), m(a, b)));
        B.add(-1, S.g(b, c), a);
        B.add(-1, S.a2(a, b, c));
        B.add(1, S.a2(a, c, b));
    } else {
        throw Error("BadBlock", id);
    }
    return B.e;
}

int line_arity(const std::string& id)
{
    if (id == "eq50.4") return 2;
    if (id == "eq49.3" || id == "eq49.4" || id == "eq50.2" || id == "eq50.3" || id == "eq52.1" || id == "eq52.2")
        return 3;
    return 4;
}

std::vector<std::string> mode_lines(CocycleMode mode)
{
    std::vector<std::string> L = {"eq46", "eq47.1", "eq47.2", "eq47.3", "eq48", "eq49.1", "eq49.2"};
    if (mode == CocycleMode::TWISTED) {
        L.push_back("eq52.1");
        L.push_back("eq52.2");
    } else {
        L.push_back("eq49.3");
        L.push_back("eq49.4");
    }
    for (const char* s : {"eq50.1", "eq50.2", "eq50.3"}) L.push_back(s);
    if (mode == CocycleMode::H3_3) L.push_back("eq50.4");
    return L;
}

std::vector<BlockEquation> lines_to_equations(const FinRing& A, const std::vector<std::string>& ids)
{
    std::vector<BlockEquation> out;
    for (const auto& id : ids)
        for (const auto& t : tuples(A.n(), line_arity(id))) out.push_back({id, t, block_line(A, id, t)});
    return out;
}

int slot3_of(const BarCell& c, int n)
{
    const Slots S{n};
    auto sh = [&](size_t i) { return c[i].s; };
    if (c.size() == 3) return S.f(c[0].x[0], c[1].x[0], c[2].x[0]);
    if (c.size() == 2 && sh(0) == LShape::P1) return S.a1(c[0].x[0], c[0].x[1], c[1].x[0]);
    if (c.size() == 2 && sh(1) == LShape::P1) return S.a2(c[0].x[0], c[1].x[0], c[1].x[1]);
    if (c.size() == 1 && sh(0) == LShape::P111) return S.fp(c[0].x[0], c[0].x[1], c[0].x[2]);
    if (c.size() == 1 && sh(0) == LShape::P2) return S.g(c[0].x[0], c[0].x[1]);
    throw Error("BadCell", cell_str(c));
}

int slot2_of(const BarCell& c, int n)
{
    if (c.size() == 2) return c[0].x[0] * n + c[1].x[0];
    if (c.size() == 1 && c[0].s == LShape::P1) return n * n + c[0].x[0] * n + c[0].x[1];
    throw Error("BadCell", cell_str(c));
}

// delta(xi) on a 4-cell, plus the twist when asked.
LinExpr bar_expr(const FinRing& A, const BarCell& cell, bool twisted)
{
    const int n = A.n();
    LinExpr e;
    for (const BarTerm& t : bar_boundary(A, cell)) e.push_back({t.coeff, slot3_of(t.cell, n), t.left, t.right});
    if (twisted && cell.size() == 2) {
        const Slots S{n};
        if (cell[0].s == LShape::P0 && cell[1].s == LShape::P2) {
            const int a = cell[0].x[0], b = cell[1].x[0], c = cell[1].x[1];
            e.push_back({1, S.g(A.times(a, b), A.times(a, c))});
            e.push_back({1, S.g(A.times(a, c), A.times(a, b))});
        } else if (cell[0].s == LShape::P2 && cell[1].s == LShape::P0) {
            const int a = cell[0].x[0], b = cell[0].x[1], c = cell[1].x[0];
            e.push_back({1, S.g(A.times(a, c), A.times(b, c))});
            e.push_back({1, S.g(A.times(b, c), A.times(a, c))});
        }
    }
    return e;
}

std::vector<int> cell_args(const BarCell& c)
{
    std::vector<int> v;
    for (const LGen& g : c)
        for (int i = 0; i < shape_arity(g.s); ++i) v.push_back(g.x[i]);
    return v;
}

}  // namespace

std::vector<BlockEquation> block_equations(const FinRing& A, CocycleMode mode)
{
    return lines_to_equations(A, mode_lines(mode));
}

std::vector<BlockEquation> all_block_lines(const FinRing& A)
{
    return lines_to_equations(A, {"eq46", "eq47.1", "eq47.2", "eq47.3", "eq48", "eq49.1", "eq49.2", "eq49.3",
                                  "eq49.4", "eq50.1", "eq50.2", "eq50.3", "eq50.4", "eq52.1", "eq52.2"});
}

std::vector<BlockEquation> bar_equations(const FinRing& A, CocycleMode mode)
{
    BarComplex B = build_bar(A, mode == CocycleMode::H3_3 ? 3 : 2);
    std::vector<BlockEquation> out;
    for (const BarCell& c : B.cells[4])
        out.push_back({cell_str(c), cell_args(c), bar_expr(A, c, mode == CocycleMode::TWISTED)});
    return out;
}

BarCell block_cell(const std::string& id, const std::vector<int>& x)
{
    const int a = x[0], b = x.size() > 1 ? x[1] : 0, c = x.size() > 2 ? x[2] : 0, d = x.size() > 3 ? x[3] : 0;
    if (id == "eq46") return {gen0(a), gen0(b), gen0(c), gen0(d)};
    if (id == "eq47.1") return {gen1(a, b), gen0(c), gen0(d)};
    if (id == "eq47.2") return {gen0(a), gen1(b, c), gen0(d)};
    if (id == "eq47.3") return {gen0(a), gen0(b), gen1(c, d)};
    if (id == "eq48") return {gen1(a, b), gen1(c, d)};
    if (id == "eq49.1") return {gen111(a, b, c), gen0(d)};
    if (id == "eq49.2") return {gen0(a), gen111(b, c, d)};
    if (id == "eq49.3" || id == "eq52.1") return {gen2(a, b), gen0(c)};
    if (id == "eq49.4" || id == "eq52.2") return {gen0(a), gen2(b, c)};
    if (id == "eq50.1") return {gen1111(a, b, c, d)};
    if (id == "eq50.2") return {gen112(a, b, c)};
    if (id == "eq50.3") return {gen211(a, b, c)};
    if (id == "eq50.4") return {gen3(a, b)};
    throw Error("BadBlock", id);
}

Calibration calibrate_blocks(const FinRing& A)
{
    Calibration cal;
    std::map<std::string, int> sign;
    for (const BlockEquation& eq : all_block_lines(A)) {
        const bool tw = eq.id.rfind("eq52", 0) == 0;
        LinExpr blk = normalize(A, eq.expr);
        LinExpr bar = normalize(A, bar_expr(A, block_cell(eq.id, eq.args), tw));
        LinExpr negbar = bar;
        for (auto& t : negbar) t.coeff = -t.coeff;
        auto same = [](const LinExpr& u, const LinExpr& v) {
            if (u.size() != v.size()) return false;
            for (size_t i = 0; i < u.size(); ++i)
                if (u[i].coeff != v[i].coeff || u[i].slot != v[i].slot || u[i].left != v[i].left ||
                    u[i].right != v[i].right)
                    return false;
            return true;
        };
        int s = 0;
        const bool pos = same(blk, bar), negs = same(blk, negbar);
        if (pos && negs) s = 0;  // both sides vanish identically
        else if (pos) s = 1;
        else if (negs) s = -1;
        else {
            cal.report.fail(eq.id, "args " + cell_str(block_cell(eq.id, eq.args)));
            continue;
        }
        if (s != 0) {
            auto it = sign.find(eq.id);
            if (it == sign.end()) sign[eq.id] = s;
            else if (it->second != s) cal.report.fail(eq.id, "sign flips at " + cell_str(block_cell(eq.id, eq.args)));
        }
        cal.report.pass(eq.id);
    }
    for (auto& [id, s] : sign) cal.signs.push_back({id, s});
    return cal;
}

std::vector<Defect> delta3(const FinRing& A, const Bimodule& M, const Cochain5& xi)
{
    std::vector<int> v = xi.slots();
    std::vector<Defect> out;
    for (const BlockEquation& eq : all_block_lines(A)) out.push_back({eq.id, eq.args, evaluate(A, M, eq.expr, v)});
    return out;
}

Twist beta(const FinRing& A, const Bimodule& M, const Cochain5& xi)
{
    const int n = A.n();
    Twist t;
    t.left_cells.assign(n * n * n, M.M.e());
    t.right_cells.assign(n * n * n, M.M.e());
    auto g = [&](int u, int v) { return xi.gplus[u * n + v]; };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                const int ab = A.times(a, b), ac = A.times(a, c), bc = A.times(b, c);
                t.left_cells[(a * n + b) * n + c] = M.M.op(g(ab, ac), g(ac, ab));
                t.right_cells[(a * n + b) * n + c] = M.M.op(g(ac, bc), g(bc, ac));
            }
    return t;
}

Report is_cocycle(const FinRing& A, const Bimodule& M, const Cochain5& xi, CocycleMode mode)
{
    Report r;
    std::vector<int> v = xi.slots();
    const int n = A.n();
    if (xi.n != n || static_cast<int>(v.size()) != 4 * n * n * n + n * n)
        throw Error("BadCochain", "cochain is not over a ring of order " + std::to_string(n));
    for (int x : v)
        if (x < 0 || x >= M.M.order) throw Error("BadCochain", "value outside M");
    for (const BlockEquation& eq : block_equations(A, mode)) {
        r.add(eq.id, true);
        if (evaluate(A, M, eq.expr, v) != M.M.e()) {
            std::string t = "(";
            for (size_t i = 0; i < eq.args.size(); ++i) t += (i ? "," : "") + std::to_string(eq.args[i]);
            r.fail(eq.id, t + ")");
        }
    }
    return r;
}

std::vector<LinExpr> coboundary_exprs(const FinRing& A)
{
    const int n = A.n();
    BarComplex B = build_bar(A, 2);
    std::vector<LinExpr> out(Slots{n}.total());
    for (const BarCell& c : B.cells[3]) {
        LinExpr e;
        for (const BarTerm& t : bar_boundary(A, c)) e.push_back({t.coeff, slot2_of(t.cell, n), t.left, t.right});
        out[slot3_of(c, n)] = e;
    }
    return out;
}

Cochain5 coboundary(const FinRing& A, const Bimodule& M, const Cochain2& nu)
{
    std::vector<int> v = nu.slots();
    std::vector<LinExpr> ex = coboundary_exprs(A);
    std::vector<int> out(ex.size());
    for (size_t t = 0; t < ex.size(); ++t) out[t] = evaluate(A, M, ex[t], v);
    return Cochain5::from_slots(A.n(), out);
}

// ---------------------------------------------------------------- solver

struct LinearCohomology::Impl {
    FinRing A;
    Bimodule M;
    AbelianDecomp dec;
    std::int64_t N = 1;
    int k = 0;
    int nslots = 0;
    std::vector<std::vector<std::int64_t>> eqm;  // scaled equation matrix mod N
    ModKernel kernel;
    IntMatrix U, Uinv;
    std::vector<int> inv_rows;
    std::vector<std::int64_t> invariants;
    std::vector<std::int64_t> cocycle_orders;

    std::map<std::pair<int, int>, std::vector<std::vector<std::int64_t>>> act_cache;
    const std::vector<std::vector<std::int64_t>>& act(int l, int r)
    {
        auto key = std::make_pair(l, r);
        auto it = act_cache.find(key);
        if (it != act_cache.end()) return it->second;
        std::vector<std::vector<std::int64_t>> m(k, std::vector<std::int64_t>(k, 0));
        for (int jp = 0; jp < k; ++jp) {
            int v = dec.gens[jp];
            if (l >= 0) v = M.lact(l, v);
            if (r >= 0) v = M.ract(v, r);
            for (int j = 0; j < k; ++j) m[j][jp] = dec.coords[v][j];
        }
        return act_cache[key] = m;
    }

    std::vector<std::int64_t> to_coords(const std::vector<int>& values) const
    {
        std::vector<std::int64_t> x(static_cast<size_t>(nslots) * k);
        for (int s = 0; s < nslots; ++s)
            for (int j = 0; j < k; ++j) x[s * k + j] = dec.coords[values[s]][j];
        return x;
    }
    std::vector<int> from_coords(const std::vector<std::int64_t>& x) const
    {
        std::vector<int> v(nslots);
        for (int s = 0; s < nslots; ++s) {
            std::vector<std::int64_t> c(x.begin() + s * k, x.begin() + (s + 1) * k);
            v[s] = dec.element(c);
        }
        return v;
    }
    bool in_kernel(const std::vector<std::int64_t>& x) const
    {
        for (const auto& row : eqm) {
            std::int64_t s = 0;
            for (size_t c = 0; c < row.size(); ++c)
                if (row[c]) s = mod(s + row[c] * x[c], N);
            if (s != 0) return false;
        }
        return true;
    }
};

const std::vector<std::int64_t>& LinearCohomology::invariants() const { return impl->invariants; }
const std::vector<std::int64_t>& LinearCohomology::cocycle_orders() const { return impl->cocycle_orders; }

std::vector<int> LinearCohomology::representative(size_t i) const
{
    const Impl& I = *impl;
    const int r = static_cast<int>(I.kernel.gens.size());
    std::vector<std::int64_t> x(static_cast<size_t>(I.nslots) * I.k, 0);
    for (int l = 0; l < r; ++l) {
        Int q;
        mpz_fdiv_r_ui(q.get_mpz_t(), I.Uinv[l][I.inv_rows[i]].get_mpz_t(), static_cast<unsigned long>(I.N));
        std::int64_t t = q.get_si();
        if (t == 0) continue;
        for (size_t c = 0; c < x.size(); ++c) x[c] = mod(x[c] + t * I.kernel.gens[l][c], I.N);
    }
    return I.from_coords(x);
}

bool LinearCohomology::satisfies(const std::vector<int>& values) const
{
    if (impl->k == 0) return true;
    return impl->in_kernel(impl->to_coords(values));
}

std::vector<std::int64_t> LinearCohomology::class_of(const std::vector<int>& values) const
{
    const Impl& I = *impl;
    if (I.k == 0) return {};
    std::vector<std::int64_t> x = I.to_coords(values);
    if (!I.in_kernel(x)) throw Error("NotACocycle", "cocycle equations fail");
    std::vector<std::int64_t> t = I.kernel.coordinates(x);
    std::vector<std::int64_t> out;
    for (size_t i = 0; i < I.inv_rows.size(); ++i) {
        Int y = 0;
        const int row = I.inv_rows[i];
        for (size_t l = 0; l < t.size(); ++l) y += I.U[row][l] * Int(static_cast<long>(t[l]));
        Int q;
        mpz_fdiv_r(q.get_mpz_t(), y.get_mpz_t(), Int(static_cast<long>(I.invariants[i])).get_mpz_t());
        out.push_back(q.get_si());
    }
    return out;
}

std::vector<std::vector<int>> LinearCohomology::cocycle_generators() const
{
    std::vector<std::vector<int>> out;
    for (const auto& g : impl->kernel.gens) out.push_back(impl->from_coords(g));
    return out;
}

LinearCohomology solve_cohomology(const FinRing& A, const Bimodule& M, int nslots, const std::vector<LinExpr>& eqs,
                                  int nlower, const std::vector<LinExpr>& delta, Pivot pivot)
{
    auto I = std::make_shared<LinearCohomology::Impl>();
    I->A = A;
    I->M = M;
    I->dec = decompose_abelian(M.M);
    I->k = static_cast<int>(I->dec.orders.size());
    I->N = I->dec.exponent;
    I->nslots = nslots;
    const int k = I->k;
    const std::int64_t N = I->N;
    if (k == 0) return LinearCohomology{I};
    const auto& ord = I->dec.orders;
    const int cols = nslots * k;

    for (const LinExpr& e : eqs) {
        std::vector<std::vector<std::int64_t>> rows(k, std::vector<std::int64_t>(cols, 0));
        for (const LinTerm& t : e) {
            const auto& m = I->act(t.left, t.right);
            for (int j = 0; j < k; ++j)
                for (int jp = 0; jp < k; ++jp)
                    if (m[j][jp]) {
                        auto& cell = rows[j][t.slot * k + jp];
                        cell = mod(cell + (N / ord[j]) * mod(t.coeff * m[j][jp], N), N);
                    }
        }
        for (auto& r : rows) {
            bool nz = false;
            for (auto v : r)
                if (v) {
                    nz = true;
                    break;
                }
            if (nz) I->eqm.push_back(std::move(r));
        }
    }
    I->kernel = kernel_mod(I->eqm, cols, N, pivot);
    I->cocycle_orders = I->kernel.orders;
    const int r = static_cast<int>(I->kernel.gens.size());

    // relations inside Z: coboundaries and m_j e_{s,j}
    std::vector<std::vector<std::int64_t>> relcols;
    for (int sl = 0; sl < nlower; ++sl)
        for (int jp = 0; jp < k; ++jp) {
            std::vector<std::int64_t> v(cols, 0);
            for (int t = 0; t < nslots; ++t)
                for (const LinTerm& term : delta[t]) {
                    if (term.slot != sl) continue;
                    const auto& m = I->act(term.left, term.right);
                    for (int j = 0; j < k; ++j) v[t * k + j] = mod(v[t * k + j] + term.coeff * m[j][jp], N);
                }
            relcols.push_back(I->kernel.coordinates(v));
        }
    for (int s = 0; s < nslots; ++s)
        for (int j = 0; j < k; ++j) {
            std::vector<std::int64_t> v(cols, 0);
            v[s * k + j] = ord[j];
            relcols.push_back(I->kernel.coordinates(v));
        }
    IntMatrix T = zero_matrix(r, static_cast<int>(relcols.size()) + r);
    for (size_t c = 0; c < relcols.size(); ++c)
        for (int l = 0; l < r; ++l) T[l][c] = static_cast<long>(relcols[c][l]);
    for (int l = 0; l < r; ++l) T[l][relcols.size() + l] = static_cast<long>(I->kernel.orders[l]);
    SNF s = smith_normal_form(T, true);
    if (s.rank != r) throw Error("Internal", "cohomology quotient has a free part");
    for (int i = 0; i < s.rank; ++i)
        if (s.diag[i] != 1) {
            I->inv_rows.push_back(i);
            I->invariants.push_back(s.diag[i].get_si());
        }
    I->U = std::move(s.U);
    I->Uinv = std::move(s.Uinv);
    return LinearCohomology{I};
}

std::optional<std::vector<int>> solve_affine(const FinRing& A, const Bimodule& M, int nslots,
                                             const std::vector<LinExpr>& eqs, const std::vector<int>& rhs)
{
    LinearCohomology::Impl I;
    I.A = A;
    I.M = M;
    I.dec = decompose_abelian(M.M);
    I.k = static_cast<int>(I.dec.orders.size());
    I.N = I.dec.exponent;
    I.nslots = nslots;
    const int k = I.k;
    const std::int64_t N = I.N;
    if (k == 0) return std::vector<int>(nslots, M.M.e());
    const int cols = nslots * k;
    std::vector<std::vector<std::int64_t>> rows;
    std::vector<std::int64_t> b;
    for (size_t q = 0; q < eqs.size(); ++q) {
        std::vector<std::vector<std::int64_t>> r(k, std::vector<std::int64_t>(cols, 0));
        for (const LinTerm& t : eqs[q]) {
            const auto& m = I.act(t.left, t.right);
            for (int j = 0; j < k; ++j)
                for (int jp = 0; jp < k; ++jp)
                    if (m[j][jp]) {
                        auto& cell = r[j][t.slot * k + jp];
                        cell = mod(cell + (N / I.dec.orders[j]) * mod(t.coeff * m[j][jp], N), N);
                    }
        }
        for (int j = 0; j < k; ++j) {
            rows.push_back(std::move(r[j]));
            b.push_back(mod((N / I.dec.orders[j]) * I.dec.coords[rhs[q]][j], N));
        }
    }
    bool ok = false;
    std::vector<std::int64_t> x = solve_mod(rows, cols, b, N, Pivot::MinimalGcd, &ok);
    if (!ok) return std::nullopt;
    return I.from_coords(x);
}

std::vector<std::int64_t> CohomologyGroup::class_of(const Cochain5& xi) const { return solver.class_of(xi.slots()); }

CohomologyGroup cohomology_group(const FinRing& A, const Bimodule& M, CocycleMode mode, EquationSource src, Pivot pivot)
{
    const int n = A.n();
    std::vector<BlockEquation> eqs = src == EquationSource::Blocks ? block_equations(A, mode) : bar_equations(A, mode);
    std::vector<LinExpr> ex;
    ex.reserve(eqs.size());
    for (auto& e : eqs) ex.push_back(std::move(e.expr));
    CohomologyGroup G{mode, {}, {}, solve_cohomology(A, M, Slots{n}.total(), ex, 2 * n * n, coboundary_exprs(A), pivot)};
    G.invariants = G.solver.invariants();
    for (size_t i = 0; i < G.invariants.size(); ++i)
        G.representatives.push_back(Cochain5::from_slots(n, G.solver.representative(i)));
    return G;
}

std::vector<int> quadratic_invariant(const FinRing& A, const Bimodule& M, const Cochain5& xi, CocycleMode mode)
{
    Report r = is_cocycle(A, M, xi, mode);
    if (!r.ok()) throw Error("NotACocycle", r.str());
    const int n = A.n();
    const FinGroup& G = M.M;
    std::vector<int> q(n);
    for (int a = 0; a < n; ++a) q[a] = xi.gplus[a * n + a];
    auto fail = [](const std::string& what, std::initializer_list<long long> t) {
        throw Error("QuadraticLawFailed", what + " at " + tuple_str(t));
    };
    auto delta = [&](int a, int b) { return sub(G, sub(G, q[A.plus(a, b)], q[a]), q[b]); };
    // quadratic laws hold in every mode
    for (int a = 0; a < n; ++a) {
        const int ord = A.add.element_order(a);
        for (int t = 0; t <= ord; ++t)
            if (q[times(A.add, t, a)] != times(G, static_cast<long long>(t) * t, q[a])) fail("q(na) = n^2 q(a)", {a, t});
        if (q[A.add.inverse(a)] != q[a]) fail("q(-a) = q(a)", {a});
    }
    for (int a = 0; a < n; ++a)
        for (int ap = 0; ap < n; ++ap)
            for (int b = 0; b < n; ++b)
                if (delta(A.plus(a, ap), b) != G.op(delta(a, b), delta(ap, b))) fail("bilinear defect", {a, ap, b});
    const bool additive = mode == CocycleMode::H3_3 || (mode == CocycleMode::TWISTED && A.unit.has_value());
    if (additive) {
        for (int a = 0; a < n; ++a) {
            if (G.op(q[a], q[a]) != G.e()) fail("2 q(a) = 0", {a});
            for (int b = 0; b < n; ++b)
                if (delta(a, b) != G.e()) fail("additive", {a, b});
        }
    }
    if (mode == CocycleMode::TWISTED && A.unit) {
        for (int a = 0; a < n; ++a)
            for (int x = 0; x < n; ++x)
                if (M.lact(x, q[a]) != M.ract(q[a], x)) fail("central", {a, x});
    }
    return q;
}

std::vector<std::int64_t> em_cohomology(const FinRing& A, const FinGroup& Mg, int level)
{
    ChainComplex C = build_L(A, level);
    Bimodule M = zero_action_bimodule(A, Mg);
    const int n2 = static_cast<int>(C.basis[2].size());
    const int n1 = static_cast<int>(C.basis[1].size());
    std::vector<LinExpr> eqs;
    for (int j = 0; j < static_cast<int>(C.basis[3].size()); ++j) {
        LinExpr e;
        for (int i = 0; i < n2; ++i)
            if (C.diff[3][i][j] != 0) e.push_back({C.diff[3][i][j].get_si(), i});
        eqs.push_back(e);
    }
    std::vector<LinExpr> delta(n2);
    for (int j = 0; j < n2; ++j)
        for (int i = 0; i < n1; ++i)
            if (C.diff[2][i][j] != 0) delta[j].push_back({C.diff[2][i][j].get_si(), i});
    return solve_cohomology(A, M, n2, eqs, n1, delta, Pivot::MinimalGcd).invariants();
}

}  // namespace bextlab
