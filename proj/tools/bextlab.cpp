// bextlab: command-line front end. Exit codes: 0 pass, 1 mathematical
// failure, 2 parse error, 3 resource bound.

#include <iostream>
#include <map>

#include "CLI11.hpp"

#include "bextlab/fixtures.hpp"
#include "bextlab/json_io.hpp"

using namespace bextlab;

namespace {

constexpr int kMaxRingCohomology = 8;
constexpr int kMaxModule = 16;
constexpr int kMaxRingHomology = 16;
constexpr long long kMaxFiberProduct = 1LL << 22;

// Inline JSON when the argument starts with '{' (a bare payload or a whole
// document), otherwise a document file.
Json load(const std::string& arg, const std::string& kind)
{
    if (!arg.empty() && arg.front() == '{') {
        Json j = parse_json_text(arg);
        return j.contains("format") ? open_document(j, kind) : j;
    }
    return open_document(read_json_file(arg), kind);
}

void emit(const Json& j) { std::cout << dump(j); }

int report_exit(const Report& r, Json extra = Json::object())
{
    extra["report"] = to_json(r);
    emit(extra);
    return r.ok() ? 0 : 1;
}

void size_bound(const std::string& what, long long value, long long limit)
{
    if (value > limit)
        throw Error("SizeBound", what + " = " + std::to_string(value) + " exceeds " + std::to_string(limit));
}

std::vector<std::string> fixture_names()
{
    std::vector<std::string> out;
    for (const auto& b : biext_fixtures()) {
        out.push_back("biext:" + b.name);
        out.push_back("multiext:" + b.name);
    }
    out.push_back("biext:corrupt_eq20");
    out.push_back("multiext:identity_z2");
    out.push_back("multiext:identity_z2_to_trivial");
    out.push_back("multiext:identity_1_to_z2");
    for (const char* s : {"split_z2", "split_z2_zero_action", "split_zero_ring", "doubling_z4", "product_v4"}) {
        out.push_back(std::string("presentation:") + s);
        out.push_back(std::string("monoid:") + s);
    }
    out.push_back("ring:z2");
    out.push_back("bimodule:z2_regular");
    return out;
}

RingPresentation named_presentation(const std::string& name)
{
    FinRing Z2 = zmod_ring(2);
    Bimodule M2 = regular_bimodule(Z2);
    std::vector<int> z4(4, 0);
    if (name == "split_z2") return split_presentation(Z2, M2, z4, z4);
    if (name == "split_z2_zero_action") return split_presentation(Z2, zero_action_bimodule(Z2, cyclic(2)), z4, z4);
    if (name == "split_zero_ring") {
        FinRing N = zero_ring(2);
        return split_presentation(N, zero_action_bimodule(N, cyclic(2)), z4, z4);
    }
    if (name == "doubling_z4") return doubling_presentation(M2, 1, false);
    if (name == "product_v4") return product_presentation(M2);
    throw Error("UnknownFixture", name);
}

Json fixture(const std::string& name)
{
    auto colon = name.find(':');
    if (colon == std::string::npos) throw Error("UnknownFixture", name);
    std::string kind = name.substr(0, colon), what = name.substr(colon + 1);
    if (kind == "biext" && what == "corrupt_eq20") {
        BiextCocycle c = f2_trilinear();
        c.g2[(0 * 2 + 1) * 2 + 1] ^= 1;  // g2(0;1,1): only eq20 fails
        return make_document("biext", to_json(c));
    }
    if (kind == "biext" || kind == "multiext") {
        for (const auto& b : biext_fixtures())
            if (b.name == what) {
                if (kind == "biext") return make_document("biext", to_json(b.c));
                XMod wh = make_xmod(trivial_group(), b.c.H, {b.c.H.e()});
                XMod wk = make_xmod(trivial_group(), b.c.K, {b.c.K.e()});
                return make_document("multiext", to_json(from_cocycle(butterfly_over(b.c, wh, wk))));
            }
        if (what == "identity_z2") return make_document("multiext", to_json(identity_multiext(z2_identity())));
        if (what == "identity_z2_to_trivial")
            return make_document("multiext", to_json(identity_multiext(z2_to_trivial())));
        if (what == "identity_1_to_z2") return make_document("multiext", to_json(identity_multiext(trivial_to_z2())));
    }
    if (kind == "presentation") return make_document("presentation", to_json(named_presentation(what)));
    if (kind == "monoid") {
        RingPresentation p = named_presentation(what);
        return make_document("monoid", to_json(reconstruct(Cochain5::zero(p.A.n(), p.M.M.e()), p)));
    }
    if (kind == "ring" && what == "z2") return make_document("ring", to_json(zmod_ring(2)));
    if (kind == "bimodule" && what == "z2_regular") return make_document("bimodule", to_json(regular_bimodule(zmod_ring(2))));
    throw Error("UnknownFixture", name);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"bextlab: braided crossed modules, multi-extensions and ring cohomology"};
    app.require_subcommand(1);

    // validate
    std::string v_kind, v_file, v_ring, v_module, v_mode = "twisted", v_pres;
    auto* validate = app.add_subcommand("validate", "Run the validator for one object");
    validate->add_option("--kind", v_kind, "group|xmod|braided|biext|butterfly|multiext|ring|bimodule|cocycle|presentation|monoid")
        ->required();
    validate->add_option("file", v_file, "Document path or inline JSON")->required();
    validate->add_option("--ring", v_ring, "Ring (bimodule, cocycle)");
    validate->add_option("--module", v_module, "Bimodule (cocycle)");
    validate->add_option("--mode", v_mode, "h3_2|h3_3|twisted (cocycle)");
    validate->add_option("--presentation", v_pres, "Presentation (monoid)");

    // compose
    std::string c_e, c_out;
    std::vector<std::string> c_f;
    auto* compose_cmd = app.add_subcommand("compose", "Juxtaposition composite E(F_1, ..., F_n)");
    compose_cmd->add_option("E", c_e)->required();
    compose_cmd->add_option("F", c_f)->required();
    compose_cmd->add_option("--out", c_out)->required();

    // iso
    std::string i_a, i_b;
    auto* iso = app.add_subcommand("iso", "Isomorphism test between multi-extensions");
    iso->add_option("first", i_a)->required();
    iso->add_option("second", i_b)->required();

    // cohomology / homology
    std::string h_ring, h_module, h_mode = "twisted", h_source = "blocks";
    int h_level = 3, h_degree = 2;
    auto* coh = app.add_subcommand("cohomology", "Invariant factors and representatives");
    coh->add_option("--ring", h_ring)->required();
    coh->add_option("--module", h_module)->required();
    coh->add_option("--mode", h_mode);
    coh->add_option("--source", h_source, "blocks|bar");
    auto* hom = app.add_subcommand("homology", "Homology of the truncated complex L^level(A)");
    hom->add_option("--ring", h_ring)->required();
    hom->add_option("--level", h_level)->check(CLI::IsMember({2, 3}));
    hom->add_option("--degree", h_degree);

    // catring
    std::string k_pres, k_monoid, k_out, k_cocycle, k_skel, k_ring, k_module;
    auto* dec = app.add_subcommand("decompose", "Twisted cocycle of a presentation with monoid data");
    dec->add_option("--presentation", k_pres)->required();
    dec->add_option("--monoid", k_monoid)->required();
    dec->add_option("--out", k_out);
    auto* rec = app.add_subcommand("reconstruct", "Monoid data realizing a twisted cocycle");
    rec->add_option("--cocycle", k_cocycle)->required();
    rec->add_option("--skeleton", k_skel)->required();
    rec->add_option("--out", k_out);
    auto* pent = app.add_subcommand("pentagon", "Pentagon identity of the extracted f");
    pent->add_option("--presentation", k_pres)->required();
    pent->add_option("--monoid", k_monoid)->required();
    auto* cls = app.add_subcommand("class", "Invariant-factor coordinates of a twisted class");
    cls->add_option("--presentation", k_pres);
    cls->add_option("--monoid", k_monoid);
    cls->add_option("--cocycle", k_cocycle);
    cls->add_option("--ring", k_ring);
    cls->add_option("--module", k_module);

    // fixtures
    std::string f_name, f_out;
    bool f_list = false;
    auto* fix = app.add_subcommand("fixture", "Write a built-in example object");
    fix->add_option("name", f_name);
    fix->add_option("--out", f_out);
    fix->add_flag("--list", f_list);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*validate) {
            if (v_kind == "group") {
                group_from_json(load(v_file, "group"));
                return report_exit(Report{{{"group", true, ""}}});
            }
            if (v_kind == "xmod") return report_exit(validate_xmod(xmod_from_json(load(v_file, "xmod"))));
            if (v_kind == "braided") return report_exit(validate_braiding(braided_from_json(load(v_file, "braided"))));
            if (v_kind == "biext") return report_exit(verify_biext(biext_from_json(load(v_file, "biext"))));
            if (v_kind == "butterfly") return report_exit(verify_butterfly(butterfly_from_json(load(v_file, "butterfly"))));
            if (v_kind == "multiext") return report_exit(validate_multiext(multiext_from_json(load(v_file, "multiext"))));
            if (v_kind == "ring") return report_exit(validate_ring(ring_from_json(load(v_file, "ring"))));
            if (v_kind == "bimodule") {
                if (v_ring.empty()) throw Error("ParseError", "--ring is required for a bimodule");
                FinRing A = ring_from_json(load(v_ring, "ring"));
                return report_exit(validate_bimodule(A, bimodule_from_json(load(v_file, "bimodule"), A)));
            }
            if (v_kind == "cocycle") {
                if (v_ring.empty() || v_module.empty()) throw Error("ParseError", "--ring and --module are required");
                FinRing A = ring_from_json(load(v_ring, "ring"));
                Bimodule M = bimodule_from_json(load(v_module, "bimodule"), A);
                return report_exit(is_cocycle(A, M, cochain_from_json(load(v_file, "cocycle")), parse_mode(v_mode)));
            }
            if (v_kind == "presentation")
                return report_exit(validate_presentation(presentation_from_json(load(v_file, "presentation"))));
            if (v_kind == "monoid") {
                if (v_pres.empty()) throw Error("ParseError", "--presentation is required for monoid data");
                RingPresentation p = presentation_from_json(load(v_pres, "presentation"));
                return report_exit(validate_monoid(p, monoid_from_json(load(v_file, "monoid"))));
            }
            throw Error("ParseError", "unknown kind " + v_kind);
        }
        if (*compose_cmd) {
            MultiExt E = multiext_from_json(load(c_e, "multiext"));
            std::vector<MultiExt> F;
            long long est = E.size;
            for (const auto& f : c_f) {
                F.push_back(multiext_from_json(load(f, "multiext")));
                est *= F.back().size;
            }
            size_bound("fiber product bound", est, kMaxFiberProduct);
            MultiExt C = compose(E, F);
            write_json_file(c_out, make_document("multiext", to_json(C)));
            emit({{"arity", C.arity}, {"size", C.size}});
            return 0;
        }
        if (*iso) {
            auto w = iso_check(multiext_from_json(load(i_a, "multiext")), multiext_from_json(load(i_b, "multiext")));
            Json out = {{"isomorphic", w.has_value()}};
            if (w) out["witness"] = *w;
            emit(out);
            return w ? 0 : 1;
        }
        if (*coh) {
            FinRing A = ring_from_json(load(h_ring, "ring"));
            size_bound("|A|", A.n(), kMaxRingCohomology);
            Bimodule M = bimodule_from_json(load(h_module, "bimodule"), A);
            size_bound("|M|", M.M.order, kMaxModule);
            if (h_source != "blocks" && h_source != "bar") throw Error("ParseError", "source must be blocks or bar");
            CohomologyGroup H = cohomology_group(A, M, parse_mode(h_mode),
                                                 h_source == "bar" ? EquationSource::Bar : EquationSource::Blocks);
            Json reps = Json::array();
            for (const auto& r : H.representatives) reps.push_back(to_json(r));
            emit({{"mode", mode_name(H.mode)}, {"invariants", H.invariants}, {"representatives", reps}});
            return 0;
        }
        if (*hom) {
            FinRing A = ring_from_json(load(h_ring, "ring"));
            size_bound("|A|", A.n(), kMaxRingHomology);
            ChainComplex C = build_L(A, h_level);
            if (h_degree < 0 || h_degree > C.top()) throw Error("SizeBound", "degree out of the truncated range");
            std::vector<long> inv;
            for (const Int& v : homology(C, h_degree)) inv.push_back(v.get_si());
            std::cout << Json(inv).dump() << "\n";
            return 0;
        }
        if (*dec) {
            RingPresentation p = presentation_from_json(load(k_pres, "presentation"));
            MonoidData m = monoid_from_json(load(k_monoid, "monoid"));
            Cochain5 xi = decompose(p, m);
            if (!k_out.empty()) write_json_file(k_out, make_document("cocycle", to_json(xi)));
            return report_exit(is_cocycle(p.A, p.M, xi, CocycleMode::TWISTED), {{"cocycle", to_json(xi)}});
        }
        if (*rec) {
            RingPresentation p = presentation_from_json(load(k_skel, "presentation"));
            MonoidData m = reconstruct(cochain_from_json(load(k_cocycle, "cocycle")), p);
            if (!k_out.empty()) write_json_file(k_out, make_document("monoid", to_json(m)));
            return report_exit(validate_monoid(p, m), {{"size", m.E2.size}});
        }
        if (*pent) {
            RingPresentation p = presentation_from_json(load(k_pres, "presentation"));
            return report_exit(pentagon_check(p, monoid_from_json(load(k_monoid, "monoid"))));
        }
        if (*cls) {
            Cochain5 xi;
            FinRing A;
            Bimodule M;
            if (!k_pres.empty()) {
                if (k_monoid.empty()) throw Error("ParseError", "--monoid is required with --presentation");
                RingPresentation p = presentation_from_json(load(k_pres, "presentation"));
                xi = decompose(p, monoid_from_json(load(k_monoid, "monoid")));
                A = p.A;
                M = p.M;
            } else {
                if (k_cocycle.empty() || k_ring.empty() || k_module.empty())
                    throw Error("ParseError", "give --presentation/--monoid or --cocycle/--ring/--module");
                A = ring_from_json(load(k_ring, "ring"));
                M = bimodule_from_json(load(k_module, "bimodule"), A);
                xi = cochain_from_json(load(k_cocycle, "cocycle"));
            }
            size_bound("|A|", A.n(), kMaxRingCohomology);
            CohomologyGroup H = cohomology_group(A, M, CocycleMode::TWISTED);
            emit({{"invariants", H.invariants}, {"class", H.class_of(xi)}});
            return 0;
        }
        if (*fix) {
            if (f_list) {
                for (const auto& n : fixture_names()) std::cout << n << "\n";
                return 0;
            }
            Json doc = fixture(f_name);
            if (f_out.empty()) emit(doc);
            else write_json_file(f_out, doc);
            return 0;
        }
    } catch (const Error& e) {
        emit({{"error", e.kind()}, {"detail", e.what()}});
        if (e.kind() == "ParseError") return 2;
        if (e.kind() == "SizeBound" || e.kind() == "SearchSpaceTooLarge") return 3;
        return 1;
    } catch (const Json::exception& e) {
        emit({{"error", "ParseError"}, {"detail", e.what()}});
        return 2;
    }
    return 0;
}
