#pragma once

#include <cctype>
#include <climits>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "tldp/classify.hpp"
#include "tldp/graph.hpp"

namespace tldp {

using nlohmann::json;

inline long long to_ll(const Int& v) {
    if (v > (std::numeric_limits<long long>::max)() || v < (std::numeric_limits<long long>::min)())
        throw std::invalid_argument("integer too large for JSON emission");
    return v.convert_to<long long>();
}

inline std::string rat_to_string(const Rat& r) {
    std::ostringstream os;
    if (denominator(r) == 1) os << numerator(r);
    else os << numerator(r) << "/" << denominator(r);
    return os.str();
}

inline Int int_from_string(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    if (i == s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("not an integer: '" + s + "'");
    return Int(s);
}

/// Parses the compact generator syntax "x1,y1;x2,y2;...".  Whitespace around
/// numbers and separators is ignored.
inline std::vector<Vec> parse_generators(const std::string& text) {
    auto trim = [](std::string s) {
        std::size_t a = s.find_first_not_of(" \t");
        std::size_t b = s.find_last_not_of(" \t");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    std::vector<Vec> out;
    std::istringstream stream(text);
    std::string chunk;
    while (std::getline(stream, chunk, ';')) {
        std::size_t comma = chunk.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("generator '" + chunk + "' is not of the form x,y");
        if (chunk.find(',', comma + 1) != std::string::npos)
            throw std::invalid_argument("generator '" + chunk + "' has too many components");
        out.push_back(Vec{int_from_string(trim(chunk.substr(0, comma))),
                          int_from_string(trim(chunk.substr(comma + 1)))});
    }
    if (out.empty()) throw std::invalid_argument("empty generator list");
    return out;
}

inline std::string generators_to_text(const std::vector<Vec>& gen) {
    std::ostringstream os;
    for (std::size_t i = 0; i < gen.size(); ++i) {
        if (i) os << ";";
        os << gen[i].x << "," << gen[i].y;
    }
    return os.str();
}

inline json vec_to_json(const Vec& v) { return json::array({to_ll(v.x), to_ll(v.y)}); }

inline Vec vec_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw std::invalid_argument("expected a [x,y] integer pair");
    return Vec{Int(j[0].get<long long>()), Int(j[1].get<long long>())};
}

inline json fan_to_json(const CompleteFan& fan) {
    json gens = json::array();
    for (const Vec& v : fan.gen) gens.push_back(vec_to_json(v));
    return json{{"generators", gens}};
}

inline std::vector<Vec> generators_from_json(const json& j) {
    if (!j.contains("generators") || !j["generators"].is_array())
        throw std::invalid_argument("fan JSON must contain a \"generators\" array");
    std::vector<Vec> gen;
    for (const json& v : j["generators"]) gen.push_back(vec_from_json(v));
    return gen;
}

inline CompleteFan fan_from_json(const json& j) { return build_fan(generators_from_json(j)); }

inline json graph_to_json(const Wve2cGraph& g) {
    json vw = json::array(), ew = json::array();
    for (const Int& w : g.vertex_weights) vw.push_back(to_ll(w));
    for (const ConePQ& e : g.edge_weights) ew.push_back(json::array({to_ll(e.p), to_ll(e.q)}));
    return json{{"n", g.size()}, {"vertex_weights", vw}, {"edge_weights", ew}};
}

inline json record_to_json(const SurfaceRecord& rec) {
    json triple = json::array();
    for (const ConePQ& c : rec.triple.pq)
        triple.push_back(json::array({to_ll(c.p), to_ll(c.q)}));
    json n = json::array();
    for (const Vec& v : rec.fan.gen) n.push_back(vec_to_json(v));
    json r = json::array();
    for (const Int& ri : rec.r) r.push_back(to_ll(ri));
    json weights = json::array();
    for (const Int& w : rec.weights) weights.push_back(to_ll(w));
    json factors = json::array();
    for (const Int& f : rec.group_factors) factors.push_back(to_ll(f));
    return json{{"index", to_ll(rec.index)}, {"triple", triple},      {"n", n},
                {"r", r},                    {"weights", weights},    {"group_order", to_ll(rec.group_order)},
                {"group_factors", factors}};
}

/// Rebuilds a record from its JSON form and cross-checks every derived
/// field stored in the JSON against the recomputation.
inline SurfaceRecord record_from_json(const json& j) {
    AdmissibleTriple t;
    const json& triple = j.at("triple");
    if (!triple.is_array() || triple.size() != 3)
        throw std::invalid_argument("record JSON: \"triple\" must hold three pairs");
    for (int i = 0; i < 3; ++i)
        t.pq[i] = ConePQ{Int(triple[i].at(0).get<long long>()),
                         Int(triple[i].at(1).get<long long>())};
    SurfaceRecord rec = make_record(t);
    if (record_to_json(rec) != j)
        throw std::invalid_argument("record JSON: stored fields disagree with the triple");
    return rec;
}

/// Human-readable identification P^2(w1,w2,w3)/H.
inline std::string weight_label(const std::array<Int, 3>& weights,
                                const std::vector<Int>& group_factors) {
    std::ostringstream os;
    os << "P^2";
    if (!(weights[0] == 1 && weights[1] == 1 && weights[2] == 1))
        os << "(" << weights[0] << "," << weights[1] << "," << weights[2] << ")";
    if (!group_factors.empty()) {
        os << "/(";
        for (std::size_t i = 0; i < group_factors.size(); ++i) {
            if (i) os << " x ";
            os << "Z/" << group_factors[i];
        }
        os << ")";
    }
    return os.str();
}

inline std::string weight_label(const SurfaceRecord& rec) {
    return weight_label(rec.weights, rec.group_factors);
}

}  // namespace tldp
