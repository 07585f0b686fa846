// Germ catalog: file index and the reproduction targets.
#pragma once

#include <cstdlib>
#include <filesystem>

#include "invariants.hpp"
#include "poly_io.hpp"

namespace germforge {

// Catalog directory: explicit argument, GERMFORGE_CATALOG, or ./catalog.
inline std::string catalog_dir(const std::string& override_dir = "")
{
    if (!override_dir.empty()) return override_dir;
    if (const char* env = std::getenv("GERMFORGE_CATALOG")) return env;
    return "catalog";
}

struct Catalog {
    std::string dir;
    std::map<std::string, GermFile> entries;  // keyed by label
};

inline Catalog load_catalog(const std::string& dir = "")
{
    Catalog cat;
    cat.dir = catalog_dir(dir);
    if (!std::filesystem::is_directory(cat.dir))
        throw error("catalog directory not found: " + cat.dir);
    for (const auto& e : std::filesystem::directory_iterator(cat.dir)) {
        if (e.path().extension() != ".germ") continue;
        GermFile g = load_germ_file(e.path().string());
        if (cat.entries.count(g.label)) throw error("duplicate catalog label: " + g.label);
        cat.entries.emplace(g.label, std::move(g));
    }
    return cat;
}

inline const GermFile& catalog_get(const Catalog& cat, const std::string& label)
{
    auto it = cat.entries.find(label);
    if (it == cat.entries.end()) throw error("missing catalog entry: " + label);
    return it->second;
}

// Expands the series exponent in curve and basis templates: "w^2l" with
// level 3 becomes "w^6".  Supported multiples are l, 2l, 3l, 4l and the
// braced forms {l} (level) and {l1} (level - 1).
inline std::string expand_level(std::string text, long level)
{
    auto replace_all = [&text](const std::string& from, const std::string& to) {
        size_t pos = 0;
        while ((pos = text.find(from, pos)) != std::string::npos) {
            text.replace(pos, from.size(), to);
            pos += to.size();
        }
    };
    replace_all("{l1}", std::to_string(level - 1));
    replace_all("{l}", std::to_string(level));
    for (long m : {4, 3, 2})
        replace_all("^" + std::to_string(m) + "l", "^" + std::to_string(m * level));
    replace_all("^l", "^" + std::to_string(level));
    return text;
}

// Parses "(0,w^l,0)" into a curve germ over the ring of its variable,
// after expanding the series exponent.
inline CurveGerm parse_curve(const std::string& text, long level, const std::string& var)
{
    std::string body = expand_level(text, level);
    if (!body.empty() && body.front() == '(' && body.back() == ')')
        body = body.substr(1, body.size() - 2);
    Ring r = make_ring({var});
    std::vector<Polynomial> comps;
    size_t start = 0;
    int depth = 0;
    for (size_t i = 0; i <= body.size(); ++i) {
        if (i < body.size() && body[i] == '(') ++depth;
        if (i < body.size() && body[i] == ')') --depth;
        if (i == body.size() || (body[i] == ',' && depth == 0)) {
            comps.push_back(parse_poly(body.substr(start, i - start), r));
            start = i + 1;
        }
    }
    return make_curve_germ(r, std::move(comps));
}

// One reproduction row: a germ, the route that computes its
// codimension, and the expected value codim_a * level + codim_b.
struct ReproTarget {
    std::string label;      // catalog label of the germ the row is about
    std::string table;      // table1 | table2 | props
    std::string paper_ref;  // citation printed with each PASS/FAIL line
    std::string unfolding;  // catalog label of the stable unfolding; empty = no route
    std::string gamma;      // curve template; empty = inclusion (the germ is the base)
    std::string gamma_var;  // augmentation variable of the curve
    long codim_a = 0;
    long codim_b = 0;
    long level = 1;
    double cost_hint = 1;  // rough seconds at desk scale, for budget pre-skips
};

inline long expected_codim(const ReproTarget& t) { return t.codim_a * t.level + t.codim_b; }

inline std::vector<ReproTarget> reproduction_targets()
{
    const std::string t1 = "Table 1, the first set of examples";
    const std::string t2 = "Table 2, A-finite map-germs in E0_{4,5} and E0_{5,6}";
    std::vector<ReproTarget> v;
    // Table 1: codimension of the base germ of its stable unfolding.
    v.push_back({"A2hat", "table1", t1, "F_A2hat", "", "", 0, 18, 1, 2});
    v.push_back({"A3hat", "table1", t1, "F_A3hat", "", "", 0, 186, 1, 4000});
    v.push_back({"A4hat", "table1", t1, "F_A4hat", "", "", 0, 844, 1, 100000});
    v.push_back({"B3hat", "table1", t1, "F_B3hat", "", "", 0, 33, 1, 5});
    v.push_back({"B5hat", "table1", t1, "F_B5hat", "", "", 0, 252, 1, 10000});
    v.push_back({"B7hat", "table1", t1, "", "", "", 0, 837, 1, 0});
    v.push_back({"B9hat", "table1", t1, "", "", "", 0, 1968, 1, 0});
    v.push_back({"B11hat", "table1", t1, "", "", "", 0, 3825, 1, 0});
    v.push_back({"B13hat", "table1", t1, "", "", "", 0, 6588, 1, 0});
    v.push_back({"B15hat", "table1", t1, "", "", "", 0, 10437, 1, 0});
    // Table 2 and the C-series proposition: augmentation codimensions.
    for (long l : {1L, 2L, 3L})
        v.push_back({"C" + std::to_string(l), "table2", "Prop. on the C-series, 30l-18",
                     "F_A2hat", "(0,w^l,0)", "w", 30, -18, l, 5});
    v.push_back({"D1", "table2", t2, "F_A2hat", "(w^l,0,w^2l)", "w", 45, -18, 1, 60});
    v.push_back({"E1", "table2", t2, "F_A3hat", "(w^l,0,0,w^2l,0)", "w", 536, -186, 1, 10000});
    v.push_back({"K1", "table2", t2, "F_B3hat", "(0,0,0,w^l)", "w", 51, -33, 1, 60});
    v.push_back({"L1", "table2", t2, "F_B5hat", "(0,w^l,-w^l,0)", "w", 372, -252, 1, 10000});
    v.push_back({"M11", "table2", t2 + "; series (70k-30)l-45k+18", "F_C1", "(v^l,0,v^2l)", "v",
                 25, -12, 1, 120});
    v.push_back({"M21", "table2", t2 + "; series (70k-30)l-45k+18", "F_C2", "(v^l,0,v^2l)", "v",
                 95, -42, 1, 600});
    v.push_back({"M31", "table2", t2 + "; series (70k-30)l-45k+18", "F_C3", "(v^l,0,v^2l)", "v",
                 165, -72, 1, 2000});
    v.push_back({"N1", "table2", t2, "F_E1", "(0,v^l,v^4l,v^3l)", "v", 1750, -350, 1, 100000});
    v.push_back({"P1", "table2", t2, "F_K1", "(v^l,0,v^2l)", "v", 42, -18, 1, 600});
    // Propositions on the f-series, 45l-12.
    for (long l : {1L, 2L})
        v.push_back({"f" + std::to_string(l), "props", "Prop. on the f-series, 45l-12",
                     "F_hhat1", "(x^l,-x^l,0,0,0)", "x", 45, -12, l, 600});
    return v;
}

inline std::vector<ReproTarget> select_targets(const std::string& table,
                                               const std::vector<std::string>& filter)
{
    std::vector<ReproTarget> out;
    for (const auto& t : reproduction_targets()) {
        if (!table.empty() && t.table != table) continue;
        if (!filter.empty() &&
            std::find(filter.begin(), filter.end(), t.label) == filter.end())
            continue;
        out.push_back(t);
    }
    return out;
}

}  // namespace germforge
