#include "locgpd/json_io.hpp"

#include <fstream>

#include <json.hpp>

namespace locgpd {

using nlohmann::ordered_json;

std::string to_json(const FiniteLocalGroupoid& g) {
    ordered_json j;
    j["objects"] = g.objects;
    j["arrows"] = ordered_json::array();
    for (const Arrow& a : g.arrows)
        j["arrows"].push_back({{"id", a.id}, {"src", g.objects[a.src]}, {"tgt", g.objects[a.tgt]}});
    ordered_json units = ordered_json::object();
    for (std::size_t x = 0; x < g.objects.size(); ++x)
        units[g.objects[x]] = g.arrows[g.unit_of[x]].id;
    j["units"] = units;
    j["mult"] = ordered_json::array();
    for (const auto& [p, prod] : g.mult)
        j["mult"].push_back({g.arrows[p.first].id, g.arrows[p.second].id, g.arrows[prod].id});
    j["inv"] = ordered_json::array();
    for (const auto& [a, ai] : g.inv)
        j["inv"].push_back({g.arrows[a].id, g.arrows[ai].id});
    return j.dump(2) + "\n";
}

FiniteLocalGroupoid from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw MalformedTable(std::string("json parse error: ") + e.what());
    }
    FiniteLocalGroupoid g;
    try {
        for (const auto& o : j.at("objects")) g.objects.push_back(o.get<std::string>());
        std::map<std::string, int> oidx, aidx;
        for (std::size_t i = 0; i < g.objects.size(); ++i) {
            if (oidx.count(g.objects[i])) throw MalformedTable("duplicate object id");
            oidx[g.objects[i]] = static_cast<int>(i);
        }
        auto obj = [&](const std::string& name) {
            auto it = oidx.find(name);
            if (it == oidx.end()) throw MalformedTable("dangling object id: " + name);
            return it->second;
        };
        for (const auto& a : j.at("arrows")) {
            Arrow arr;
            arr.id = a.at("id").get<std::string>();
            arr.src = obj(a.at("src").get<std::string>());
            arr.tgt = obj(a.at("tgt").get<std::string>());
            if (aidx.count(arr.id)) throw MalformedTable("duplicate arrow id");
            aidx[arr.id] = static_cast<int>(g.arrows.size());
            g.arrows.push_back(arr);
        }
        auto arrow = [&](const std::string& id) {
            auto it = aidx.find(id);
            if (it == aidx.end()) throw MalformedTable("dangling arrow id: " + id);
            return it->second;
        };
        g.unit_of.assign(g.objects.size(), -1);
        for (const auto& [name, id] : j.at("units").items())
            g.unit_of[obj(name)] = arrow(id.get<std::string>());
        for (int u : g.unit_of)
            if (u < 0) throw MalformedTable("object without unit");
        for (const auto& t : j.at("mult")) {
            if (t.size() != 3) throw MalformedTable("mult rows must be [g,h,gh]");
            g.mult[{arrow(t[0].get<std::string>()), arrow(t[1].get<std::string>())}] =
                arrow(t[2].get<std::string>());
        }
        for (const auto& t : j.at("inv")) {
            if (t.size() != 2) throw MalformedTable("inv rows must be [g,ginv]");
            g.inv[arrow(t[0].get<std::string>())] = arrow(t[1].get<std::string>());
        }
    } catch (const ordered_json::exception& e) {
        throw MalformedTable(std::string("bad groupoid file: ") + e.what());
    }
    g.check_well_formed();
    return g;
}

FiniteLocalGroupoid load_groupoid(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return from_json(text);
}

void save_groupoid(const FiniteLocalGroupoid& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << to_json(g);
}

} // namespace locgpd
