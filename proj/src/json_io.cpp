#include "bextlab/json_io.hpp"

#include <fstream>
#include <sstream>

namespace bextlab {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error("ParseError", what); }

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing key \"") + key + "\"");
    return j.at(key);
}

int as_int(const Json& j, const std::string& what)
{
    if (!j.is_number_integer()) bad(what + ": expected an integer");
    return j.get<int>();
}

std::vector<int> int_list(const Json& j, const std::string& what, size_t size, int bound)
{
    if (!j.is_array()) bad(what + ": expected an array");
    if (j.size() != size) bad(what + ": expected " + std::to_string(size) + " entries, got " + std::to_string(j.size()));
    std::vector<int> out;
    out.reserve(size);
    for (const Json& v : j) {
        int x = as_int(v, what);
        if (x < 0 || x >= bound) bad(what + ": entry " + std::to_string(x) + " out of range");
        out.push_back(x);
    }
    return out;
}

// Square table given as rows, flattened row-major.
std::vector<int> table(const Json& j, const std::string& what, int rows, int cols, int bound)
{
    if (!j.is_array() || static_cast<int>(j.size()) != rows) bad(what + ": expected " + std::to_string(rows) + " rows");
    std::vector<int> out;
    for (const Json& r : j) {
        std::vector<int> row = int_list(r, what, cols, bound);
        out.insert(out.end(), row.begin(), row.end());
    }
    return out;
}

Json rows(const std::vector<int>& flat, int cols)
{
    Json out = Json::array();
    for (size_t i = 0; i < flat.size(); i += cols)
        out.push_back(std::vector<int>(flat.begin() + i, flat.begin() + i + cols));
    return out;
}

std::vector<int> flat_from(const Json& j, const char* key, const std::string& what, size_t size, int bound)
{
    return int_list(field(j, key), what, size, bound);
}

constexpr int kMaxOrder = 4096;

}  // namespace

Json to_json(const FinGroup& G) { return {{"order", G.order}, {"mul", rows(G.mul, G.order)}}; }

FinGroup group_from_json(const Json& j)
{
    if (!j.is_object()) bad("group: expected an object");
    if (j.contains("cyclic")) {
        int n = as_int(j.at("cyclic"), "cyclic");
        if (n < 1 || n > kMaxOrder) bad("cyclic: order out of range");
        return cyclic(n);
    }
    if (j.contains("trivial")) return trivial_group();
    if (j.contains("product")) {
        const Json& p = j.at("product");
        if (!p.is_array() || p.size() != 2) bad("product: expected two groups");
        return direct_product(group_from_json(p[0]), group_from_json(p[1]));
    }
    const Json& m = field(j, "mul");
    if (!m.is_array() || m.empty() || m.size() > static_cast<size_t>(kMaxOrder)) bad("group: bad table size");
    const int n = static_cast<int>(m.size());
    std::vector<int> flat = table(m, "group table", n, n, n);
    std::vector<std::vector<int>> t(n);
    for (int a = 0; a < n; ++a) t[a].assign(flat.begin() + a * n, flat.begin() + (a + 1) * n);
    return make_group(t);
}

Json to_json(const XMod& m)
{
    return {{"G", to_json(m.G)}, {"Pi", to_json(m.Pi)}, {"boundary", m.boundary}, {"action", rows(m.action, m.Pi.order)}};
}

XMod xmod_from_json(const Json& j)
{
    FinGroup G = group_from_json(field(j, "G"));
    FinGroup P = group_from_json(field(j, "Pi"));
    XMod m = make_xmod(G, P, int_list(field(j, "boundary"), "boundary", G.order, P.order));
    if (j.contains("action")) m.action = table(j.at("action"), "action", G.order, P.order, G.order);
    return m;
}

Json to_json(const BraidedXMod& b) { return {{"xmod", to_json(b.base)}, {"bracket", rows(b.bracket, b.Pi().order)}}; }

BraidedXMod braided_from_json(const Json& j)
{
    XMod m = xmod_from_json(field(j, "xmod"));
    BraidedXMod b = trivially_braided(m);
    if (j.contains("bracket")) b.bracket = table(j.at("bracket"), "bracket", m.Pi.order, m.Pi.order, m.G.order);
    return b;
}

Json to_json(const BiextCocycle& c)
{
    return {{"H", to_json(c.H)}, {"K", to_json(c.K)}, {"coeff", to_json(c.coeff)},
            {"g1", c.g1},        {"g2", c.g2},        {"x", c.x}};
}

BiextCocycle biext_from_json(const Json& j)
{
    BiextCocycle c = trivial_biext(group_from_json(field(j, "H")), group_from_json(field(j, "K")),
                                   braided_from_json(field(j, "coeff")));
    const int nh = c.H.order, nk = c.K.order, ng = c.coeff.G().order;
    if (j.contains("g1")) c.g1 = flat_from(j, "g1", "g1", static_cast<size_t>(nh) * nh * nk, ng);
    if (j.contains("g2")) c.g2 = flat_from(j, "g2", "g2", static_cast<size_t>(nh) * nk * nk, ng);
    if (j.contains("x")) c.x = flat_from(j, "x", "x", static_cast<size_t>(nh) * nk, c.coeff.Pi().order);
    return c;
}

Json to_json(const ButterflyCocycle& b)
{
    return {{"base", to_json(b.base)}, {"wingH", to_json(b.wingH)}, {"wingK", to_json(b.wingK)},
            {"u1", b.u1},              {"u2", b.u2}};
}

ButterflyCocycle butterfly_from_json(const Json& j)
{
    BiextCocycle c = biext_from_json(field(j, "base"));
    XMod wh = j.contains("wingH") ? xmod_from_json(j.at("wingH")) : make_xmod(trivial_group(), c.H, {c.H.e()});
    XMod wk = j.contains("wingK") ? xmod_from_json(j.at("wingK")) : make_xmod(trivial_group(), c.K, {c.K.e()});
    if (!(wh.Pi == c.H) || !(wk.Pi == c.K)) bad("butterfly: wing targets differ from H, K");
    ButterflyCocycle b = butterfly_over(c, wh, wk);
    const int ng = c.coeff.G().order;
    if (j.contains("u1")) b.u1 = flat_from(j, "u1", "u1", b.u1.size(), ng);
    if (j.contains("u2")) b.u2 = flat_from(j, "u2", "u2", b.u2.size(), ng);
    return b;
}

Json to_json(const MultiExt& m)
{
    Json wings = Json::array();
    for (const XMod& w : m.wings) wings.push_back(to_json(w));
    return {{"arity", m.arity}, {"wings", wings},   {"coeff", to_json(m.coeff)},   {"size", m.size},
            {"base", m.base},   {"j", m.j},         {"rightG", m.rightG},          {"prods", m.prods},
            {"sections", m.sections}};
}

MultiExt multiext_from_json(const Json& j)
{
    if (!j.is_object()) bad("multiext: expected an object");
    if (j.contains("butterfly")) return from_cocycle(butterfly_from_json(j.at("butterfly")));
    if (j.contains("identity")) return identity_multiext(braided_from_json(j.at("identity")));
    MultiExt m;
    m.arity = as_int(field(j, "arity"), "arity");
    const Json& w = field(j, "wings");
    if (m.arity < 1 || !w.is_array() || static_cast<int>(w.size()) != m.arity) bad("multiext: wings/arity");
    for (const Json& x : w) m.wings.push_back(xmod_from_json(x));
    m.coeff = braided_from_json(field(j, "coeff"));
    m.size = as_int(field(j, "size"), "size");
    if (m.size < 1 || m.size > 1 << 16) bad("multiext: size out of range");
    const int ng = m.coeff.G().order;
    const Json& base = field(j, "base");
    if (!base.is_array() || static_cast<int>(base.size()) != m.size) bad("multiext: base size");
    for (const Json& t : base) {
        if (!t.is_array() || static_cast<int>(t.size()) != m.arity) bad("multiext: base tuple length");
        std::vector<int> tup;
        for (int i = 0; i < m.arity; ++i) {
            int v = as_int(t[i], "base");
            if (v < 0 || v >= m.wings[i].Pi.order) bad("multiext: base entry out of range");
            tup.push_back(v);
        }
        m.base.push_back(tup);
    }
    m.j = flat_from(j, "j", "j", m.size, m.coeff.Pi().order);
    m.rightG = flat_from(j, "rightG", "rightG", static_cast<size_t>(m.size) * ng, m.size);
    const Json& pr = field(j, "prods");
    if (!pr.is_array() || static_cast<int>(pr.size()) != m.arity) bad("multiext: prods");
    for (const Json& p : pr) {
        if (!p.is_array() || p.size() != static_cast<size_t>(m.size) * m.size) bad("multiext: product table size");
        std::vector<int> t;
        for (const Json& v : p) {
            int x = as_int(v, "prods");
            if (x < -1 || x >= m.size) bad("multiext: product entry out of range");
            t.push_back(x);
        }
        m.prods.push_back(std::move(t));
    }
    const Json& se = field(j, "sections");
    if (!se.is_array() || static_cast<int>(se.size()) != m.arity) bad("multiext: sections");
    for (int i = 0; i < m.arity; ++i) m.sections.push_back(int_list(se[i], "sections", m.section_count(i), m.size));
    return m;
}

Json to_json(const FinRing& A)
{
    Json u = A.unit ? Json(*A.unit) : Json(nullptr);
    return {{"add", to_json(A.add)}, {"mul", rows(A.mul, A.n())}, {"unit", u}};
}

FinRing ring_from_json(const Json& j)
{
    if (!j.is_object()) bad("ring: expected an object");
    if (j.contains("zmod") || j.contains("zero_ring")) {
        int n = as_int(j.contains("zmod") ? j.at("zmod") : j.at("zero_ring"), "ring order");
        if (n < 1 || n > kMaxOrder) bad("ring: order out of range");
        return j.contains("zmod") ? zmod_ring(n) : zero_ring(n);
    }
    FinGroup add = group_from_json(field(j, "add"));
    std::vector<int> mul = table(field(j, "mul"), "ring mul", add.order, add.order, add.order);
    std::optional<int> unit;
    if (j.contains("unit") && !j.at("unit").is_null()) {
        unit = as_int(j.at("unit"), "unit");
        if (*unit < 0 || *unit >= add.order) bad("ring: unit out of range");
    }
    return make_ring(add, mul, unit);
}

Json to_json(const Bimodule& M)
{
    return {{"M", to_json(M.M)}, {"left", rows(M.left, M.M.order)}, {"right", rows(M.right, M.nA)}};
}

Bimodule bimodule_from_json(const Json& j, const FinRing& A)
{
    if (!j.is_object()) bad("bimodule: expected an object");
    if (j.contains("regular")) return regular_bimodule(A);
    if (j.contains("cyclic")) {
        int m = as_int(j.at("cyclic"), "cyclic");
        if (m < 1 || A.n() % m != 0) bad("bimodule: cyclic order must divide |A|");
        return cyclic_bimodule(A, m);
    }
    if (j.contains("zero_action")) return zero_action_bimodule(A, group_from_json(j.at("zero_action")));
    Bimodule M;
    M.M = group_from_json(field(j, "M"));
    M.nA = A.n();
    M.left = table(field(j, "left"), "left action", A.n(), M.M.order, M.M.order);
    M.right = table(field(j, "right"), "right action", M.M.order, A.n(), M.M.order);
    return M;
}

Json to_json(const Cochain5& xi)
{
    return {{"n", xi.n},           {"f", xi.f},         {"alpha1", xi.alpha1},
            {"alpha2", xi.alpha2}, {"fplus", xi.fplus}, {"gplus", xi.gplus}};
}

Cochain5 cochain_from_json(const Json& j)
{
    Cochain5 xi;
    xi.n = as_int(field(j, "n"), "n");
    if (xi.n < 1 || xi.n > 64) bad("cochain: n out of range");
    const size_t n3 = static_cast<size_t>(xi.n) * xi.n * xi.n;
    xi.f = flat_from(j, "f", "f", n3, kMaxOrder);
    xi.alpha1 = flat_from(j, "alpha1", "alpha1", n3, kMaxOrder);
    xi.alpha2 = flat_from(j, "alpha2", "alpha2", n3, kMaxOrder);
    xi.fplus = flat_from(j, "fplus", "fplus", n3, kMaxOrder);
    xi.gplus = flat_from(j, "gplus", "gplus", static_cast<size_t>(xi.n) * xi.n, kMaxOrder);
    return xi;
}

Json to_json(const RingPresentation& p)
{
    return {{"rmod", to_json(p.rmod)}, {"A", to_json(p.A)},         {"M", to_json(p.M)},
            {"q", p.q.map},            {"x", p.x},                  {"sigma", p.sigma},
            {"pi1_incl", p.pi1_incl}};
}

RingPresentation presentation_from_json(const Json& j)
{
    RingPresentation p;
    p.rmod = braided_from_json(field(j, "rmod"));
    p.A = ring_from_json(field(j, "A"));
    p.M = bimodule_from_json(field(j, "M"), p.A);
    const int nl = p.rmod.Pi().order, nr = p.rmod.G().order, n = p.A.n();
    p.q = GroupHom{p.rmod.Pi(), p.A.add, flat_from(j, "q", "q", nl, n)};
    p.x = flat_from(j, "x", "x", n, nl);
    p.sigma = flat_from(j, "sigma", "sigma", static_cast<size_t>(n) * n, nr);
    p.pi1_incl = flat_from(j, "pi1_incl", "pi1_incl", p.M.M.order, nr);
    return p;
}

Json to_json(const MonoidData& m) { return {{"E2", to_json(m.E2)}, {"e_sections", m.e_sections}, {"mu", m.mu}}; }

MonoidData monoid_from_json(const Json& j)
{
    MonoidData m;
    m.E2 = multiext_from_json(field(j, "E2"));
    const Json& es = field(j, "e_sections");
    if (!es.is_array()) bad("e_sections: expected an array");
    m.e_sections = int_list(es, "e_sections", es.size(), m.E2.size);
    const Json& mu = field(j, "mu");
    if (!mu.is_array()) bad("mu: expected an array");
    for (const Json& v : mu) {
        int x = as_int(v, "mu");
        if (x < -1) bad("mu: entry out of range");
        m.mu.push_back(x);
    }
    return m;
}

Json to_json(const Report& r)
{
    Json checks = Json::array();
    for (const Check& c : r.checks) {
        Json e = {{"id", c.id}, {"pass", c.pass}};
        if (!c.counterexample.empty()) e["counterexample"] = c.counterexample;
        checks.push_back(e);
    }
    return {{"ok", r.ok()}, {"checks", checks}};
}

Json make_document(const std::string& kind, Json data) { return {{"format", 1}, {"kind", kind}, {"data", std::move(data)}}; }

Json open_document(const Json& doc, const std::string& kind)
{
    if (!doc.is_object()) bad("document: expected an object");
    if (!doc.contains("format") || doc.at("format") != 1) bad("document: unsupported or missing format (expected 1)");
    if (!kind.empty() && (!doc.contains("kind") || doc.at("kind") != kind))
        bad("document: expected kind \"" + kind + "\"");
    return field(doc, "data");
}

Json parse_json_text(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        bad(std::string("malformed JSON: ") + e.what());
    }
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) bad("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str());
}

void write_json_file(const std::string& path, const Json& j)
{
    std::ofstream out(path);
    if (!out) throw Error("IOError", "cannot write " + path);
    out << dump(j);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace bextlab
