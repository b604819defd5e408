#include <cstdlib>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "tiltfan/brauer.hpp"
#include "tiltfan/cluster.hpp"
#include "tiltfan/combinatorics.hpp"
#include "tiltfan/io.hpp"
#include "tiltfan/kase.hpp"
#include "tiltfan/polytope.hpp"
#include "tiltfan/weyl.hpp"

using namespace tiltfan;

namespace {

struct Outputs {
    std::string fan_path;
    bool analyze = false;
    long ell_max = 4;
    bool paranoid = false;
};

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void finish_fan(const Fan& fan, const Outputs& o, json& report) {
    if (!o.fan_path.empty()) write_text_file(o.fan_path, fan_to_json(fan).dump(2) + "\n");
    if (o.paranoid) {
        auto bad = paranoid_check(fan);
        if (bad) throw Error(ErrorKind::InvalidInput, "chambers " + std::to_string(bad->first) + " and " +
                                                          std::to_string(bad->second) + " overlap badly");
        report["paranoid"] = "ok";
    }
    if (o.analyze) report["analysis"] = analysis_to_json(analyze(fan, o.ell_max));
}

std::size_t default_budget() {
    if (const char* env = std::getenv("TILTFAN_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || v == 0)
            throw Error(ErrorKind::InvalidInput, std::string("TILTFAN_BUDGET must be a positive integer, got ") + env);
        return static_cast<std::size_t>(v);
    }
    return kDefaultBudget;
}

void add_common(CLI::App* sub, Outputs& o) {
    sub->add_option("--fan", o.fan_path, "write the fan as JSON");
    sub->add_flag("--analyze", o.analyze, "print f, h, gamma and Ehrhart data");
    sub->add_option("--ehrhart", o.ell_max, "Ehrhart depth")->check(CLI::Range(0, 8));
    sub->add_flag("--paranoid", o.paranoid, "pairwise chamber intersection check (rank <= 3)");
}

json rows_json(const IntMatrix& m) {
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (const auto& x : m.row(i)) r.push_back(int_to_json(x));
        a.push_back(r);
    }
    return a;
}

json vecs_json(const std::vector<IntVector>& vs) {
    json a = json::array();
    for (const auto& v : vs) {
        json r = json::array();
        for (const auto& x : v) r.push_back(int_to_json(x));
        a.push_back(r);
    }
    return a;
}

json classify_json(const Fan& fan) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["rank"] = fan.rank;
    j["chambers"] = fan.chambers.size();
    j["complete"] = completeness_name(fan.complete);
    ConvexityReport cr = convexity_report(fan);
    j["convex"] = cr.convex;
    json walls = json::array();
    for (const auto& w : cr.walls) {
        if (w.kind == WallKind::SingleRay || w.kind == WallKind::RaySum || w.kind == WallKind::Zero) continue;
        walls.push_back(json{{"wall", w.wall}, {"kind", wall_kind_name(w.kind)}});
    }
    j["bad_walls"] = walls;
    if (cr.convex) {
        DualPolytope d = dual_polytope(fan);
        j["reflexive"] = d.reflexive;
        Polytope p = g_polytope(fan);
        j["smooth_fano"] = smooth_fano(p);
        j["polytope"] = polytope_to_json(p);
    }
    if (fan.rank == 2) {
        Rank2Class c = rank2_classify(fan);
        j["rank2_class"] = c.convex ? json(c.cls) : json(nullptr);
    }
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tiltfan: g-fans, g-polytopes and their combinatorics"};
    app.require_subcommand(1);
    int schema = kSchemaVersion;
    app.add_option("--schema-version", schema, "JSON schema version (only 1 exists)");

    Outputs o;
    std::size_t budget = 0;

    auto* cluster = app.add_subcommand("cluster", "g-fan of a skew-symmetric exchange matrix");
    std::string matrix_path;
    cluster->add_option("--matrix", matrix_path, "B-matrix JSON")->required();
    cluster->add_option("--budget", budget, "chamber budget")->check(CLI::PositiveNumber);
    add_common(cluster, o);

    auto* brauer = app.add_subcommand("brauer", "g-fan of a Brauer tree or odd-cycle");
    std::string graph_path;
    bool roots = false;
    brauer->add_option("--graph", graph_path, "Brauer graph JSON")->required();
    brauer->add_flag("--roots", roots, "print the root map image of each walk");
    add_common(brauer, o);

    auto* weyl = app.add_subcommand("weyl", "Coxeter fan of a finite Cartan matrix");
    std::string type, cartan_path;
    int rank_n = 0;
    bool eulerian = false;
    weyl->add_option("--type", type, "A B C D E F G");
    weyl->add_option("--n", rank_n, "rank");
    weyl->add_option("--cartan", cartan_path, "Cartan JSON");
    weyl->add_flag("--eulerian", eulerian, "print the descent histogram");
    weyl->add_flag("--roots", roots, "print roots and short roots");
    weyl->add_option("--budget", budget, "group element budget")->check(CLI::PositiveNumber);
    add_common(weyl, o);

    auto* fancmd = app.add_subcommand("fan", "validate and canonicalize a fan");
    std::string input_path;
    std::vector<int> kase;
    fancmd->add_option("--input", input_path, "fan JSON");
    fancmd->add_option("--kase", kase, "built-in rank-2 family with parameters L M")->expected(2);
    add_common(fancmd, o);

    auto* analyzecmd = app.add_subcommand("analyze", "f, h, gamma, Dehn-Sommerville and Ehrhart data");
    std::string out_path;
    analyzecmd->add_option("--fan", input_path, "fan JSON")->required();
    analyzecmd->add_option("--ehrhart", o.ell_max, "Ehrhart depth")->check(CLI::Range(0, 8));
    analyzecmd->add_option("--out", out_path, "write the analysis here");

    auto* classify = app.add_subcommand("classify", "convexity, reflexivity and the rank-2 class");
    std::string polytope_path;
    classify->add_option("--fan", input_path, "fan JSON")->required();
    classify->add_option("--polytope", polytope_path, "write the g-polytope JSON");

    auto* plot = app.add_subcommand("plot", "SVG of a rank-2 fan");
    std::string svg_path;
    plot->add_option("--fan", input_path, "fan JSON")->required();
    plot->add_option("--svg", svg_path, "output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (schema != kSchemaVersion)
            throw Error(ErrorKind::SchemaMismatch, "schema version " + std::to_string(schema) + " is not supported");
        if (budget == 0) budget = default_budget();
        FanOptions fopt;
        fopt.paranoid = o.paranoid;

        if (*cluster) {
            IntMatrix b = bmatrix_from_json(read_json_file(matrix_path));
            GfanResult r = enumerate_gfan(b, budget);
            json report;
            report["schema_version"] = kSchemaVersion;
            report["chambers"] = r.fan.chambers.size();
            report["rays"] = r.fan.rays.size();
            report["complete"] = completeness_name(r.fan.complete);
            if (r.exhausted) {
                report["budget_exhausted"] = true;
                report["explored"] = r.explored;
                report["frontier"] = r.frontier;
                if (!o.fan_path.empty()) write_text_file(o.fan_path, fan_to_json(r.fan).dump(2) + "\n");
                emit(report);
                std::cerr << "error: BudgetExhausted: " << r.explored << " chambers explored, " << r.frontier
                          << " seeds pending\n";
                return 2;
            }
            finish_fan(r.fan, o, report);
            emit(o.analyze ? report["analysis"] : report);
            return 0;
        }
        if (*brauer) {
            BrauerGraph g = brauer_from_json(read_json_file(graph_path));
            BrauerFan bf = brauer_fan(g);
            json report;
            report["schema_version"] = kSchemaVersion;
            report["graph_type"] = graph_type_name(classify_graph(g));
            json walks = json::array();
            std::optional<RootMap> rm;
            if (roots) rm = root_map(g);
            for (const auto& w : bf.walks) {
                json x{{"walk", walk_string(g, w)}, {"class", vecs_json({w.cls})[0]}};
                if (rm) x["root"] = vecs_json({rm->apply(w.cls)})[0];
                walks.push_back(x);
            }
            report["walks"] = walks;
            report["chambers"] = bf.fan.chambers.size();
            finish_fan(bf.fan, o, report);
            emit(o.analyze && !roots ? report["analysis"] : report);
            return 0;
        }
        if (*weyl) {
            CartanData cd;
            if (!cartan_path.empty()) cd = cartan_from_json(read_json_file(cartan_path));
            else if (!type.empty() && rank_n > 0) cd = cartan_preset(type, rank_n);
            else throw Error(ErrorKind::InvalidInput, "weyl needs --type and --n, or --cartan");
            WeylResult wr = weyl_enumerate_budget(cd, budget);
            if (wr.exhausted) {
                std::cerr << "error: BudgetExhausted: " << wr.elements.size() << " group elements enumerated\n";
                return 2;
            }
            json report;
            report["schema_version"] = kSchemaVersion;
            report["order"] = wr.elements.size();
            if (eulerian) {
                json e = json::array();
                for (const auto& x : descent_histogram(cd)) e.push_back(int_to_json(x));
                if (!roots && !o.analyze && o.fan_path.empty()) {
                    emit(e);
                    return 0;
                }
                report["eulerian"] = e;
            }
            if (roots) {
                RootSystem rs = root_system(cd);
                report["roots"] = vecs_json(rs.roots);
                report["short_roots"] = vecs_json(rs.short_roots);
            }
            if (!o.fan_path.empty() || o.analyze || o.paranoid) finish_fan(coxeter_fan(cd), o, report);
            emit(report);
            return 0;
        }
        if (*fancmd) {
            Fan fan;
            if (!kase.empty()) fan = kase_family_fan(kase[0], kase[1]);
            else if (!input_path.empty()) fan = fan_from_json(read_json_file(input_path), fopt);
            else throw Error(ErrorKind::InvalidInput, "fan needs --input or --kase");
            json report = fan_to_json(fan);
            finish_fan(fan, o, report);
            emit(report);
            return 0;
        }
        if (*analyzecmd) {
            Fan fan = fan_from_json(read_json_file(input_path));
            json a = analysis_to_json(analyze(fan, o.ell_max));
            if (!out_path.empty()) write_text_file(out_path, a.dump(2) + "\n");
            emit(a);
            return 0;
        }
        if (*classify) {
            Fan fan = fan_from_json(read_json_file(input_path));
            json j = classify_json(fan);
            if (!polytope_path.empty() && j.contains("polytope")) write_text_file(polytope_path, j["polytope"].dump(2) + "\n");
            j.erase("polytope");
            emit(j);
            return 0;
        }
        if (*plot) {
            Fan fan = fan_from_json(read_json_file(input_path));
            write_text_file(svg_path, fan_svg(fan));
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::BudgetExhausted ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
