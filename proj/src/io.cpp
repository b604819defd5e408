#include "tiltfan/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace tiltfan {

namespace {

void check_schema(const json& j, const std::string& what) {
    if (!j.is_object()) throw Error(ErrorKind::ParseError, what + ": expected an object");
    if (j.contains("schema_version")) {
        const auto& v = j["schema_version"];
        if (!v.is_number_integer() || v.get<long>() != kSchemaVersion)
            throw Error(ErrorKind::SchemaMismatch, what + ": schema_version " + v.dump() + ", expected " +
                                                       std::to_string(kSchemaVersion));
    }
}

const json& field(const json& j, const char* key, const std::string& what) {
    if (!j.contains(key)) throw Error(ErrorKind::ParseError, what + ": missing key \"" + key + "\"");
    return j[key];
}

void expect_array(const json& j, const std::string& where) {
    if (!j.is_array()) throw Error(ErrorKind::ParseError, where + ": expected an array");
}

IntVector ivec_from_json(const json& j, const std::string& where) {
    expect_array(j, where);
    IntVector v;
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(int_from_json(j[i], where + "/" + std::to_string(i)));
    return v;
}

std::vector<IntVector> rows_from_json(const json& j, const std::string& where) {
    expect_array(j, where);
    std::vector<IntVector> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(ivec_from_json(j[i], where + "/" + std::to_string(i)));
    return out;
}

IntMatrix square_from_json(const json& j, const std::string& where) {
    auto rows = rows_from_json(j, where);
    for (const auto& r : rows)
        if (r.size() != rows.size()) throw Error(ErrorKind::ParseError, where + ": matrix is not square");
    if (rows.empty()) throw Error(ErrorKind::ParseError, where + ": empty matrix");
    return IntMatrix::from_rows(rows, rows.size());
}

json ivec_to_json(const IntVector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(int_to_json(x));
    return a;
}

std::string str_of(const json& j, const std::string& where) {
    if (!j.is_string()) throw Error(ErrorKind::ParseError, where + ": expected a string");
    return j.get<std::string>();
}

}  // namespace

json int_to_json(const Int& x) {
    if (x.fits_slong_p()) return json(x.get_si());
    return json(x.get_str());
}

Int int_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Int(j.get<long>());
    if (j.is_number_unsigned()) return Int(j.get<unsigned long>());
    if (j.is_string()) {
        Int x;
        if (x.set_str(j.get<std::string>(), 10) == 0) return x;
    }
    throw Error(ErrorKind::ParseError, where + ": expected an integer, got " + j.dump());
}

json rat_to_json(const Rat& q) { return json(rat_string(q)); }

json fan_to_json(const Fan& fan) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["rank"] = fan.rank;
    json rays = json::array();
    for (const auto& r : fan.rays) rays.push_back(ivec_to_json(r));
    j["rays"] = rays;
    j["chambers"] = fan.chambers;
    j["base"] = fan.base;
    j["complete"] = completeness_name(fan.complete);
    return j;
}

Fan fan_from_json(const json& j, const FanOptions& opt) {
    check_schema(j, "fan");
    const json& rank = field(j, "rank", "fan");
    if (!rank.is_number_integer() || rank.get<long>() < 1) throw Error(ErrorKind::ParseError, "fan/rank: expected a positive integer");
    auto rays = rows_from_json(field(j, "rays", "fan"), "fan/rays");
    for (std::size_t i = 0; i < rays.size(); ++i)
        if (rays[i].size() != rank.get<std::size_t>())
            throw Error(ErrorKind::ParseError, "fan/rays/" + std::to_string(i) + ": length differs from rank");
    const json& ch = field(j, "chambers", "fan");
    expect_array(ch, "fan/chambers");
    std::vector<Cone> chambers;
    for (std::size_t i = 0; i < ch.size(); ++i) {
        const std::string where = "fan/chambers/" + std::to_string(i);
        expect_array(ch[i], where);
        Cone c;
        for (const auto& x : ch[i]) {
            if (!x.is_number_integer()) throw Error(ErrorKind::ParseError, where + ": expected ray indices");
            c.push_back(x.get<int>());
        }
        chambers.push_back(c);
    }
    const json& base = field(j, "base", "fan");
    if (!base.is_number_integer()) throw Error(ErrorKind::ParseError, "fan/base: expected an integer");
    return build_fan(rays, chambers, base.get<int>(), opt);
}

IntMatrix bmatrix_from_json(const json& j) {
    check_schema(j, "matrix");
    IntMatrix b = square_from_json(field(j, "B", "matrix"), "matrix/B");
    if (j.contains("n")) {
        const json& n = j["n"];
        if (!n.is_number_integer() || n.get<std::size_t>() != b.rows())
            throw Error(ErrorKind::ParseError, "matrix/n: does not match the size of B");
    }
    return b;
}

json bmatrix_to_json(const IntMatrix& b) {
    json rows = json::array();
    for (std::size_t i = 0; i < b.rows(); ++i) rows.push_back(ivec_to_json(b.row(i)));
    return json{{"schema_version", kSchemaVersion}, {"n", b.rows()}, {"B", rows}};
}

BrauerGraph brauer_from_json(const json& j) {
    check_schema(j, "graph");
    const json& he = field(j, "half_edges", "graph");
    expect_array(he, "graph/half_edges");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < he.size(); ++i) names.push_back(str_of(he[i], "graph/half_edges/" + std::to_string(i)));
    const json& sg = field(j, "sigma", "graph");
    expect_array(sg, "graph/sigma");
    std::vector<std::vector<std::string>> cycles;
    for (std::size_t i = 0; i < sg.size(); ++i) {
        const std::string where = "graph/sigma/" + std::to_string(i);
        expect_array(sg[i], where);
        std::vector<std::string> c;
        for (const auto& x : sg[i]) c.push_back(str_of(x, where));
        cycles.push_back(c);
    }
    const json& br = field(j, "bar", "graph");
    expect_array(br, "graph/bar");
    std::vector<std::pair<std::string, std::string>> bars;
    for (std::size_t i = 0; i < br.size(); ++i) {
        const std::string where = "graph/bar/" + std::to_string(i);
        if (!br[i].is_array() || br[i].size() != 2) throw Error(ErrorKind::ParseError, where + ": expected a pair");
        bars.emplace_back(str_of(br[i][0], where), str_of(br[i][1], where));
    }
    return make_brauer(names, cycles, bars);
}

json brauer_to_json(const BrauerGraph& g) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["half_edges"] = g.names;
    json sg = json::array();
    for (const auto& orb : g.orbits) {
        json c = json::array();
        for (int h : orb) c.push_back(g.names[h]);
        sg.push_back(c);
    }
    j["sigma"] = sg;
    json br = json::array();
    for (auto [a, b] : g.edges) br.push_back({g.names[a], g.names[b]});
    j["bar"] = br;
    return j;
}

CartanData cartan_from_json(const json& j) {
    check_schema(j, "cartan");
    if (j.contains("type")) {
        const json& n = field(j, "n", "cartan");
        if (!n.is_number_integer()) throw Error(ErrorKind::ParseError, "cartan/n: expected an integer");
        return cartan_preset(str_of(j["type"], "cartan/type"), n.get<int>());
    }
    IntMatrix c = square_from_json(field(j, "C", "cartan"), "cartan/C");
    if (!j.contains("D")) return make_cartan(c);
    IntVector d = ivec_from_json(j["D"], "cartan/D");
    if (d.size() != c.rows()) throw Error(ErrorKind::ParseError, "cartan/D: length differs from C");
    return make_cartan(c, d);
}

json polytope_to_json(const Polytope& p) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["dim"] = p.dim;
    json vs = json::array();
    for (const auto& v : p.vertices) {
        json row = json::array();
        for (const auto& x : v) {
            if (x.get_den() == 1) row.push_back(int_to_json(x.get_num()));
            else row.push_back(rat_to_json(x));
        }
        vs.push_back(row);
    }
    j["vertices"] = vs;
    json fs = json::array();
    for (const auto& f : p.facets) {
        json n = json::array();
        for (const auto& x : f.normal) n.push_back(rat_to_json(x));
        fs.push_back(json{{"normal", n}, {"offset", rat_to_json(f.offset)}});
    }
    j["facets"] = fs;
    return j;
}

Analysis analyze(const Fan& fan, long ell_max) {
    if (ell_max < 0 || ell_max > 8) throw Error(ErrorKind::InvalidInput, "ehrhart depth must be between 0 and 8");
    Analysis a;
    a.f = f_vector(fan);
    a.h = h_vector(a.f);
    a.dehn_sommerville = dehn_sommerville(a.h);
    if (a.dehn_sommerville) a.gamma = gamma_vector(a.h);
    for (long l = 1; l <= ell_max; ++l) a.ehrhart[l] = ehrhart_count(a.h, l);
    return a;
}

json analysis_to_json(const Analysis& a) {
    auto arr = [](const std::vector<Int>& v) {
        json x = json::array();
        for (const auto& e : v) x.push_back(int_to_json(e));
        return x;
    };
    json j;
    j["schema_version"] = kSchemaVersion;
    j["f"] = arr(a.f);
    j["h"] = arr(a.h);
    j["gamma"] = a.dehn_sommerville ? arr(a.gamma) : json(nullptr);
    j["dehn_sommerville"] = a.dehn_sommerville;
    json e = json::object();
    for (const auto& [l, c] : a.ehrhart) e[std::to_string(l)] = int_to_json(c);
    j["ehrhart"] = e;
    return j;
}

json parse_json(const std::string& text, const std::string& source) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::ParseError, source + ": byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, path + ": cannot open");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str(), path);
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::InvalidInput, path + ": cannot write");
    out << text;
}

namespace {

std::string fmt(double x) {
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(2);
    s << (std::fabs(x) < 0.005 ? 0.0 : x);
    return s.str();
}

}  // namespace

std::string fan_svg(const Fan& fan) {
    if (fan.rank != 2) throw Error(ErrorKind::NotRank2, "SVG output is for rank-2 fans");
    double extent = 1;
    for (const auto& r : fan.rays)
        for (const auto& x : r) extent = std::max(extent, std::fabs(x.get_d()));
    const double size = 400, scale = (size / 2 - 20) / extent;
    auto px = [&](const Int& x) { return fmt(size / 2 + x.get_d() * scale); };
    auto py = [&](const Int& y) { return fmt(size / 2 - y.get_d() * scale); };
    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\" viewBox=\"0 0 "
      << size << " " << size << "\">\n";
    for (std::size_t c = 0; c < fan.chambers.size(); ++c) {
        const auto& a = fan.rays[fan.chambers[c][0]];
        const auto& b = fan.rays[fan.chambers[c][1]];
        s << "  <polygon points=\"" << fmt(size / 2) << "," << fmt(size / 2) << " " << px(a[0]) << "," << py(a[1]) << " "
          << px(b[0]) << "," << py(b[1]) << "\" fill=\"" << (static_cast<int>(c) == fan.base ? "#f4c27a" : "#dde6f0")
          << "\" stroke=\"#8899aa\" stroke-width=\"0.5\"/>\n";
    }
    Polytope p = convex_hull(to_rational(fan.rays));
    s << "  <polygon points=\"";
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        const auto& v = p.vertices[i];
        s << (i ? " " : "") << fmt(size / 2 + v[0].get_d() * scale) << "," << fmt(size / 2 - v[1].get_d() * scale);
    }
    s << "\" fill=\"none\" stroke=\"#203040\" stroke-width=\"1.5\"/>\n";
    for (const auto& r : fan.rays) {
        s << "  <line x1=\"" << fmt(size / 2) << "\" y1=\"" << fmt(size / 2) << "\" x2=\"" << px(r[0]) << "\" y2=\""
          << py(r[1]) << "\" stroke=\"#203040\"/>\n";
        s << "  <circle cx=\"" << px(r[0]) << "\" cy=\"" << py(r[1]) << "\" r=\"3\" fill=\"#203040\"/>\n";
    }
    s << "</svg>\n";
    return s.str();
}

}  // namespace tiltfan
