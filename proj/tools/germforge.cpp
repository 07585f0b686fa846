// Command-line front end: basis computations, germ invariants, table
// reproduction, and the transcribed-basis check.
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include <germforge/workbench.hpp>

using namespace germforge;
using nlohmann::json;

namespace {

struct GlobalOpts {
    std::string ordering = "global";
    std::string weights;
    double budget = 0;
    long seed = 0;
    bool local_only = false;
    bool json_out = false;
    std::string catalog;
    std::string cache;
};

std::vector<std::string> split_names(const std::string& s)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',' || c == ' ' || c == '\t') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

Ring ring_from(const GlobalOpts& g, const std::string& vars)
{
    std::vector<long> w;
    for (const auto& t : split_names(g.weights)) w.push_back(std::stol(t));
    return make_ring(split_names(vars), w);
}

std::vector<Polynomial> polys_from(const Ring& r, const std::vector<std::string>& texts)
{
    std::vector<Polynomial> out;
    for (const auto& t : texts) out.push_back(parse_poly(t, r));
    return out;
}

ModuleOrder order_from(const GlobalOpts& g, const Ring& r)
{
    if (g.ordering == "global") return ModuleOrder::global(r);
    if (g.ordering == "local") return ModuleOrder::local(r);
    if (g.ordering.rfind("elim:", 0) == 0)
        return ModuleOrder::elim(r, split_names(g.ordering.substr(5)));
    throw error("unknown ordering: " + g.ordering + " (use global, local, or elim:<vars>)");
}

// An input name is a catalog label unless it looks like a path.
GermFile resolve_germ(const GlobalOpts& g, const std::string& name)
{
    if (name.find('/') != std::string::npos || name.find(".germ") != std::string::npos)
        return load_germ_file(name);
    Catalog cat = load_catalog(g.catalog);
    return catalog_get(cat, name);
}

std::optional<Budget> make_budget(const GlobalOpts& g)
{
    if (g.budget > 0) return Budget(g.budget);
    return std::nullopt;
}

void print_polys(const GlobalOpts& g, const std::string& key,
                 const std::vector<Polynomial>& ps)
{
    if (g.json_out) {
        json out;
        out[key] = json::array();
        for (const auto& p : ps) out[key].push_back(to_string(p));
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& p : ps) std::cout << to_string(p) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact invariants of finitely determined map-germs"};
    app.require_subcommand(1);
    app.fallthrough();
    GlobalOpts g;
    app.add_option("--ordering", g.ordering, "global | local | elim:<vars>");
    app.add_option("--weights", g.weights, "variable weights, comma separated");
    app.add_option("--budget", g.budget, "time limit in seconds");
    app.add_option("--seed", g.seed, "seed for randomized sampling");
    app.add_flag("--local-only", g.local_only, "germ-level semantics for curve tests");
    app.add_flag("--json", g.json_out, "JSON output");
    app.add_option("--catalog", g.catalog, "catalog directory override");
    app.add_option("--cache", g.cache, "cache directory override");

    // gb / nf / colength share the explicit-ideal input style
    std::string vars, gamma_text, gamma_var = "w", alpha_text, cm_param, table;
    std::vector<std::string> gens, filter;
    std::string target_poly, germ_name;
    long level = 1;
    int jobs = 1;

    auto* gb = app.add_subcommand("gb", "standard basis of an ideal");
    gb->add_option("--ring", vars, "ring variables")->required();
    gb->add_option("gens", gens, "ideal generators")->required();

    auto* nf = app.add_subcommand("nf", "normal form against an ideal basis");
    nf->add_option("--ring", vars)->required();
    nf->add_option("--ideal", gens, "ideal generators")->required();
    nf->add_option("poly", target_poly, "polynomial to reduce")->required();

    auto* co = app.add_subcommand("colength", "colength of an ideal");
    co->add_option("--ring", vars)->required();
    co->add_option("gens", gens)->required();

    auto* im = app.add_subcommand("image", "image hypersurface equation of a germ");
    im->add_option("germ", germ_name, "catalog label or germ file")->required();

    auto* dl = app.add_subcommand("derlog", "logarithmic vector fields of a hypersurface");
    dl->add_option("--ring", vars)->required();
    dl->add_option("equation", target_poly)->required();
    bool mode_h = false;
    dl->add_flag("--annihilating", mode_h, "require xi(H) = 0 instead of xi(H) in (H)");

    auto* di = app.add_subcommand("discriminant", "K_V discriminant of a stable unfolding");
    di->add_option("unfolding", germ_name)->required();

    auto* cd = app.add_subcommand("codim", "Ae-codimension of the base of an unfolding");
    cd->add_option("unfolding", germ_name)->required();

    auto* ac = app.add_subcommand("aug-codim", "Ae-codimension of an augmentation");
    ac->add_option("unfolding", germ_name)->required();
    ac->add_option("--gamma", gamma_text, "curve, e.g. (0,w^l,0)")->required();
    ac->add_option("--level", level, "series exponent substituted for l");
    ac->add_option("--var", gamma_var, "curve variable");

    auto* af = app.add_subcommand("aug-finite", "finite determinacy of an augmentation");
    af->add_option("unfolding", germ_name)->required();
    af->add_option("--gamma", gamma_text)->required();
    af->add_option("--level", level);
    af->add_option("--var", gamma_var);

    auto* cm = app.add_subcommand("cm-test", "dimension-one Cohen-Macaulay check");
    cm->add_option("unfolding", germ_name, "unfolding label (germ route)");
    cm->add_option("--gamma", gamma_text, "curve for the germ route");
    cm->add_option("--var", gamma_var);
    cm->add_option("--alpha", alpha_text, "deformation terms, e.g. (v,0,v)");
    std::string defvar = "v";
    cm->add_option("--defvar", defvar, "deformation variable");
    cm->add_option("--ring", vars, "explicit route: ring variables");
    cm->add_option("--relations", gens, "explicit route: relation generators");
    cm->add_option("--param", cm_param, "parameter direction")->required();

    auto* d2 = app.add_subcommand("d2", "double-point ideal and 2-to-3 determinacy");
    d2->add_option("germ", germ_name)->required();

    auto* ql = app.add_subcommand("quadline", "quadruple-line witness for (1,2,2,2d) germs");
    ql->add_option("germ", germ_name, "germ whose fourth component is tested");
    std::string ql_poly;
    ql->add_option("--poly", ql_poly, "explicit homogeneous polynomial in x,y,z");

    auto* rp = app.add_subcommand("reproduce", "recompute table values and compare");
    rp->add_option("table", table, "table1 | table2 | props | all");
    rp->add_option("--filter", filter, "labels to include")->delimiter(',');
    rp->add_option("--jobs", jobs, "concurrent entries");

    auto* vb = app.add_subcommand("verify-basis", "check the transcribed module basis");

    for (auto* s : app.get_subcommands(nullptr)) s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        auto budget = make_budget(g);
        const Budget* bp = budget ? &*budget : nullptr;

        if (gb->parsed()) {
            Ring r = ring_from(g, vars);
            auto B = buchberger_ideal(polys_from(r, gens), order_from(g, r), bp);
            std::vector<Polynomial> out;
            for (const auto& v : B.generators()) out.push_back(v[0]);
            print_polys(g, "basis", out);
        } else if (nf->parsed()) {
            Ring r = ring_from(g, vars);
            auto B = buchberger_ideal(polys_from(r, gens), order_from(g, r), bp);
            print_polys(g, "normal_form", {normal_form(parse_poly(target_poly, r), B, bp)});
        } else if (co->parsed()) {
            Ring r = ring_from(g, vars);
            auto B = buchberger_ideal(polys_from(r, gens), order_from(g, r), bp);
            auto len = colength(B);
            if (g.json_out)
                std::cout << json{{"colength", len ? json(*len) : json()}}.dump() << "\n";
            else
                std::cout << (len ? std::to_string(*len) : "infinite") << "\n";
        } else if (im->parsed()) {
            GermFile gf = resolve_germ(g, germ_name);
            MapGerm f = gf.is_unfolding() ? unfolding_full_map(gf.as_unfolding())
                                          : gf.as_map_germ();
            Hypersurface V = image_equation(f, {}, bp);
            print_polys(g, "image_equation", {V.equation});
        } else if (dl->parsed()) {
            Ring r = ring_from(g, vars);
            Hypersurface V{r, parse_poly(target_poly, r)};
            auto M = derlog(V, mode_h ? DerlogMode::H : DerlogMode::V, bp);
            if (g.json_out) {
                json out = json::array();
                for (const auto& v : M.generators) {
                    json row = json::array();
                    for (const auto& c : v.components()) row.push_back(to_string(c));
                    out.push_back(row);
                }
                std::cout << json{{"derlog", out}}.dump(2) << "\n";
            } else {
                for (const auto& v : M.generators) {
                    for (int i = 0; i < v.rank(); ++i)
                        std::cout << (i ? " | " : "") << to_string(v[i]);
                    std::cout << "\n";
                }
            }
        } else if (di->parsed()) {
            KvContext ctx = kv_context(resolve_germ(g, germ_name).as_unfolding(), bp);
            print_polys(g, "discriminant", kv_discriminant(ctx, bp));
        } else if (cd->parsed()) {
            KvContext ctx = kv_context(resolve_germ(g, germ_name).as_unfolding(), bp);
            auto c = ae_codim(ctx, bp);
            if (g.json_out)
                std::cout << json{{"codim", c ? json(*c) : json()}}.dump() << "\n";
            else
                std::cout << (c ? std::to_string(*c) : "infinite") << "\n";
        } else if (ac->parsed()) {
            KvContext ctx = kv_context(resolve_germ(g, germ_name).as_unfolding(), bp);
            CurveGerm gamma = parse_curve(gamma_text, level, gamma_var);
            auto c = ae_codim_augmentation(ctx, gamma, bp);
            if (g.json_out)
                std::cout << json{{"codim", c ? json(*c) : json()}}.dump() << "\n";
            else
                std::cout << (c ? std::to_string(*c) : "infinite") << "\n";
        } else if (af->parsed()) {
            KvContext ctx = kv_context(resolve_germ(g, germ_name).as_unfolding(), bp);
            CurveGerm gamma = parse_curve(gamma_text, level, gamma_var);
            bool fin = augmentation_finite(ctx, gamma, g.local_only, bp);
            if (g.json_out)
                std::cout << json{{"finite", fin}}.dump() << "\n";
            else
                std::cout << (fin ? "true" : "false") << "\n";
        } else if (cm->parsed()) {
            CmReport rep;
            if (!germ_name.empty()) {
                KvContext ctx = kv_context(resolve_germ(g, germ_name).as_unfolding(), bp);
                CurveGerm gamma = parse_curve(gamma_text, level, gamma_var);
                CurveGerm acurve = parse_curve(alpha_text, level, defvar);
                Ring rr = relative_ring(ctx, gamma, defvar, curve_variable_weight(ctx, acurve));
                std::vector<Polynomial> alpha;
                for (const auto& a : acurve.components)
                    alpha.push_back(a.substitute({}, rr));
                auto P = relative_normal_space(ctx, gamma, alpha, rr);
                rep = is_cm_dim1(P, cm_param, {}, bp);
            } else {
                Ring r = ring_from(g, vars);
                QuotientPresentation P;
                P.ring = r;
                P.rank = 1;
                for (const auto& t : gens) P.relations.push_back(PolyVector(parse_poly(t, r)));
                rep = is_cm_dim1(P, cm_param, {}, bp);
            }
            if (g.json_out) {
                json lens = json::array();
                for (const auto& l : rep.fiber_lengths) lens.push_back(l ? json(*l) : json());
                std::cout << json{{"cm", rep.cm}, {"dim", rep.dim}, {"fiber_lengths", lens}}
                                 .dump()
                          << "\n";
            } else {
                std::cout << (rep.cm ? "true" : "false") << " (dim " << rep.dim
                          << ", fiber lengths";
                for (const auto& l : rep.fiber_lengths)
                    std::cout << " " << (l ? std::to_string(*l) : "inf");
                std::cout << ")\n";
            }
        } else if (d2->parsed()) {
            MapGerm f = resolve_germ(g, germ_name).as_map_germ();
            auto D = double_point_ideal(f, bp);
            auto rep = is_finitely_determined_2_3(f, bp);
            if (g.json_out) {
                json out{{"finite", rep.finite},
                         {"d2_dim", rep.d2_dim},
                         {"singular_colength", rep.singular_colength
                                                   ? json(*rep.singular_colength)
                                                   : json()}};
                out["d2_ideal"] = json::array();
                for (const auto& p : D) out["d2_ideal"].push_back(to_string(p));
                std::cout << out.dump(2) << "\n";
            } else {
                for (const auto& p : D) std::cout << to_string(p) << "\n";
                std::cout << (rep.finite ? "finitely determined" : "not finitely determined")
                          << " (D2 dim " << rep.d2_dim << ")\n";
            }
        } else if (ql->parsed()) {
            QuadrupleLineReport rep;
            if (!ql_poly.empty()) {
                Ring r3 = make_ring({"x", "y", "z"});
                rep = quadruple_line_witness(parse_poly(ql_poly, r3), "x", "y", "z");
            } else if (!germ_name.empty()) {
                MapGerm f = resolve_germ(g, germ_name).as_map_germ();
                if (f.components.size() < 4) throw error("quadline needs four components");
                auto r = f.source;
                rep = quadruple_line_witness(f.components[3], r->vars.at(0), r->vars.at(1),
                                             r->vars.at(2));
            } else {
                throw error("quadline needs a germ or --poly");
            }
            std::string kind;
            switch (rep.kind) {
                case QuadrupleLineReport::Kind::AllAlpha: kind = "all-alpha"; break;
                case QuadrupleLineReport::Kind::RationalWitness: kind = "rational"; break;
                case QuadrupleLineReport::Kind::ComplexWitness: kind = "complex"; break;
                case QuadrupleLineReport::Kind::None: kind = "none"; break;
            }
            if (g.json_out)
                std::cout << json{{"kind", kind}, {"alpha", to_string(rep.alpha)}}.dump()
                          << "\n";
            else
                std::cout << kind
                          << (rep.kind == QuadrupleLineReport::Kind::RationalWitness
                                  ? " alpha=" + to_string(rep.alpha)
                                  : "")
                          << "\n";
        } else if (rp->parsed()) {
            Catalog cat = load_catalog(g.catalog);
            std::string tbl = (table == "all" || table.empty()) ? "" : table;
            Report rep = run_reproduction(cat, tbl, filter, g.budget, jobs, g.cache);
            std::cout << to_string(rep);
            return rep.all_pass() ? 0 : 1;
        } else if (vb->parsed()) {
            Catalog cat = load_catalog(g.catalog);
            Report rep = verify_paper_basis(cat, bp);
            std::cout << to_string(rep);
            return rep.all_pass() ? 0 : 1;
        }
        return 0;
    } catch (const budget_exceeded&) {
        std::cerr << "budget exceeded\n";
        return 1;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
