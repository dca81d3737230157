#include "torus/partition_io.hpp"

#include <fstream>
#include <sstream>
#include <iomanip>

#include <json.hpp>

#include "torus/errors.hpp"

namespace torus {

using nlohmann::json;

namespace {

std::string decimal(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

json region_to_json(const Region& r) {
    json j;
    if (const auto* poly = std::get_if<LiftedPolygon>(&r.shape)) {
        j["kind"] = "polygon";
        json verts = json::array();
        for (const Vec2& v : poly->vertices) verts.push_back({v.x, v.y});
        j["vertices"] = std::move(verts);
    } else if (const auto* vs = std::get_if<VerticalStrip>(&r.shape)) {
        j["kind"] = "vstrip";
        j["lo"] = vs->x0;
        j["hi"] = vs->x1;
    } else if (const auto* hs = std::get_if<HorizontalStrip>(&r.shape)) {
        j["kind"] = "hstrip";
        j["lo"] = hs->y0;
        j["hi"] = hs->y1;
    } else {
        const auto& ps = std::get<PixelSet>(r.shape);
        j["kind"] = "pixels";
        j["s"] = ps.s;
        json cells = json::array();
        for (auto [a, b] : ps.cells) cells.push_back({a, b});
        j["cells"] = std::move(cells);
    }
    return j;
}

Region region_from_json(const json& j) {
    Region r;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "polygon") {
        LiftedPolygon poly;
        for (const auto& v : j.at("vertices"))
            poly.vertices.push_back({v.at(0).get<double>(), v.at(1).get<double>()});
        r.shape = std::move(poly);
    } else if (kind == "vstrip") {
        r.shape = VerticalStrip{j.at("lo").get<double>(), j.at("hi").get<double>()};
    } else if (kind == "hstrip") {
        r.shape = HorizontalStrip{j.at("lo").get<double>(), j.at("hi").get<double>()};
    } else if (kind == "pixels") {
        PixelSet ps;
        ps.s = j.at("s").get<int>();
        for (const auto& c : j.at("cells"))
            ps.cells.push_back({c.at(0).get<int>(), c.at(1).get<int>()});
        r.shape = std::move(ps);
    } else {
        throw InvalidRegion("unknown region kind: " + kind);
    }
    return r;
}

} // namespace

std::string partition_to_json(const Partition& p) {
    json j;
    j["m"] = p.m;
    j["tau"] = decimal(p.tau);
    j["provenance"] = p.provenance;
    json regions = json::array();
    for (const Region& r : p.regions) regions.push_back(region_to_json(r));
    j["regions"] = std::move(regions);
    return j.dump(2) + "\n";
}

Partition partition_from_json(const std::string& text) {
    json j = json::parse(text);
    Partition p;
    p.m = j.at("m").get<int>();
    p.tau = std::stod(j.at("tau").get<std::string>());
    p.provenance = j.value("provenance", "");
    for (const auto& rj : j.at("regions")) p.regions.push_back(region_from_json(rj));
    return p;
}

void save_partition(const Partition& p, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << partition_to_json(p);
}

Partition load_partition(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return partition_from_json(ss.str());
}

} // namespace torus
