#include "cyfeyn/manifest.hpp"

#include <json.hpp>

#include "cyfeyn/errors.hpp"

namespace cyfeyn {

namespace {

using nlohmann::json; // std::map-backed: object keys serialize sorted

json rat_array(const std::vector<Rat>& v) {
    json a = json::array();
    for (const Rat& r : v) a.push_back(rat_str(r));
    return a;
}

std::vector<Rat> rats_from(const json& a) {
    std::vector<Rat> v;
    for (const auto& s : a) v.push_back(rat_parse(s.get<std::string>()));
    return v;
}

json gauge_to_json(const Gauge& g) {
    return json{{"c11", poly_str(g.c11)},
                {"c12", poly_str(g.c12)},
                {"c2", poly_str(g.c2)},
                {"c3", poly_str(g.c3)}};
}

Gauge gauge_from_json(const json& j) {
    Gauge g;
    g.c11 = poly_parse(j.at("c11").get<std::string>());
    g.c12 = poly_parse(j.at("c12").get<std::string>());
    g.c2 = poly_parse(j.at("c2").get<std::string>());
    g.c3 = poly_parse(j.at("c3").get<std::string>());
    return g;
}

json ambiguity_to_json(const AmbiguitySpec& a) {
    return json{{"symbolic", a.symbolic}, {"values", rat_array(a.values)}};
}

AmbiguitySpec ambiguity_from_json(int g, const json& j) {
    AmbiguitySpec a;
    a.g = g;
    a.symbolic = j.at("symbolic").get<bool>();
    a.values = rats_from(j.at("values"));
    return a;
}

json invariants_to_json_obj(const InvariantReport& r) {
    json j{{"genus", r.genus}, {"N", rat_array(r.N)}};
    if (!r.bps.empty()) j["bps"] = rat_array(r.bps);
    return j;
}

InvariantReport invariants_from_json_obj(const json& j) {
    InvariantReport r;
    r.genus = j.at("genus").get<int>();
    r.N = rats_from(j.at("N"));
    if (j.contains("bps")) r.bps = rats_from(j.at("bps"));
    return r;
}

} // namespace

bool operator==(const Manifest& a, const Manifest& b) {
    return a.target == b.target && a.order == b.order && a.maxGenus == b.maxGenus &&
           a.gauge.c11 == b.gauge.c11 && a.gauge.c12 == b.gauge.c12 &&
           a.gauge.c2 == b.gauge.c2 && a.gauge.c3 == b.gauge.c3 &&
           a.ambiguity == b.ambiguity && a.correlators == b.correlators &&
           a.invariants == b.invariants;
}

std::string manifest_to_json(const Manifest& m) {
    json j;
    j["target"] = m.target;
    j["order"] = m.order;
    j["maxGenus"] = m.maxGenus;
    j["gauge"] = gauge_to_json(m.gauge);
    json amb = json::object();
    for (const auto& [g, a] : m.ambiguity) amb[std::to_string(g)] = ambiguity_to_json(a);
    j["ambiguity"] = amb;
    json cor = json::object();
    for (const auto& [gm, text] : m.correlators)
        cor[std::to_string(gm.first) + "," + std::to_string(gm.second)] = text;
    j["correlators"] = cor;
    json inv = json::object();
    for (const auto& [g, r] : m.invariants)
        inv[std::to_string(g)] = invariants_to_json_obj(r);
    j["invariants"] = inv;
    return j.dump(2) + "\n";
}

Manifest manifest_from_json(const std::string& text) {
    try {
        const json j = json::parse(text);
        Manifest m;
        m.target = j.at("target").get<int>();
        m.order = j.at("order").get<int>();
        m.maxGenus = j.at("maxGenus").get<int>();
        m.gauge = gauge_from_json(j.at("gauge"));
        for (const auto& [key, val] : j.at("ambiguity").items())
            m.ambiguity.emplace(std::stoi(key), ambiguity_from_json(std::stoi(key), val));
        for (const auto& [key, val] : j.at("correlators").items()) {
            const auto comma = key.find(',');
            if (comma == std::string::npos)
                throw ParseError("correlator key without a comma: " + key);
            m.correlators.emplace(
                std::make_pair(std::stoi(key.substr(0, comma)),
                               std::stoi(key.substr(comma + 1))),
                val.get<std::string>());
        }
        for (const auto& [key, val] : j.at("invariants").items())
            m.invariants.emplace(std::stoi(key), invariants_from_json_obj(val));
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("manifest: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw ParseError("manifest: non-numeric key");
    }
}

std::string invariants_csv(const InvariantReport& r) {
    const bool bps = !r.bps.empty();
    std::string out = bps ? "d,N,n\n" : "d,N\n";
    for (size_t d = 0; d < r.N.size(); ++d) {
        out += std::to_string(d) + "," + rat_str(r.N[d]);
        if (bps) out += "," + rat_str(r.bps[d]);
        out += "\n";
    }
    return out;
}

std::string invariants_json(const InvariantReport& r) {
    return invariants_to_json_obj(r).dump(2) + "\n";
}

} // namespace cyfeyn
