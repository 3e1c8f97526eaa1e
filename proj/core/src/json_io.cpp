#include "vfilt/json_io.hpp"

#include <fstream>

namespace vfilt {

using nlohmann::json;

json to_json(const Rational& q) { return rational_to_string(q); }

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return rational_from_string(j.get<std::string>());
    throw std::invalid_argument("expected a rational as \"p/q\" string or integer, got " + j.dump());
}

json to_json(const RootPoly& p) {
    json out = json::array();
    for (const auto& [root, mult] : p.roots()) out.push_back({rational_to_string(root), mult});
    return out;
}

RootPoly root_poly_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("root polynomial must be an array of pairs");
    RootPoly p;
    for (const auto& entry : j) {
        if (!entry.is_array() || entry.size() != 2)
            throw std::invalid_argument("root polynomial entries are [root, multiplicity] pairs");
        p *= RootPoly::linear_root(rational_from_json(entry[0]), entry[1].get<long>());
    }
    return p;
}

json to_json(const DensePoly& p) {
    json out = json::array();
    for (const auto& c : p.coeffs()) out.push_back(rational_to_string(c));
    return out;
}

json to_json(const Mat& m) {
    json out = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& x : row) r.push_back(rational_to_string(x));
        out.push_back(std::move(r));
    }
    return out;
}

json to_json(const AffineBFamily& fam) {
    json out;
    out["name"] = fam.name;
    out["dim"] = fam.dimension;
    out["d"] = fam.d;
    out["generators"] = fam.generators;
    out["degrees"] = fam.degrees;
    out["sigma_index"] = fam.sigma_index + 1;  // 1-based on the wire
    json r = json::array();
    for (const auto& x : fam.r) r.push_back(rational_to_string(x));
    out["r"] = std::move(r);
    json c = json::array();
    for (const auto& row : fam.c) {
        json jrow = json::array();
        for (const auto& x : row) jrow.push_back(rational_to_string(x));
        c.push_back(std::move(jrow));
    }
    out["c"] = std::move(c);
    return out;
}

AffineBFamily affine_family_from_json(const json& j) {
    AffineBFamily fam;
    try {
        fam.name = j.value("name", "custom");
        fam.dimension = j.at("dim").get<long>();
        fam.d = j.at("d").get<long>();
        fam.sigma_index = j.at("sigma_index").get<long>() - 1;
        for (const auto& deg : j.at("degrees")) fam.degrees.push_back(deg.get<long>());
        fam.generators = j.contains("generators") ? j.at("generators").get<long>()
                                                  : static_cast<long>(fam.degrees.size());
        for (const auto& x : j.at("r")) fam.r.push_back(rational_from_json(x));
        for (const auto& row : j.at("c")) {
            std::vector<Rational> crow;
            for (const auto& x : row) crow.push_back(rational_from_json(x));
            fam.c.push_back(std::move(crow));
        }
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("bad family document: ") + e.what());
    }
    fam.validate();
    return fam;
}

AffineBFamily load_affine_family(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open family file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::invalid_argument("cannot parse '" + path + "': " + e.what());
    }
    return affine_family_from_json(j);
}

json to_json(const PiSets& pi) {
    json out;
    out["r_lambda"] = pi.r_lambda;
    json sets = json::object();
    for (const auto& [k, set] : pi.pi) sets[std::to_string(k)] = set;
    out["pi"] = std::move(sets);
    return out;
}

PiSets pi_sets_from_json(const json& j) {
    PiSets out;
    try {
        out.r_lambda = j.at("r_lambda").get<long>();
        for (const auto& [key, value] : j.at("pi").items()) {
            std::set<long> set;
            for (const auto& ell : value) set.insert(ell.get<long>());
            out.pi[std::stol(key)] = std::move(set);
        }
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("bad Pi-sets document: ") + e.what());
    } catch (const std::logic_error&) {
        throw std::invalid_argument("Pi-sets keys must be integers");
    }
    return out;
}

PiSets load_pi_sets(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open Pi-sets file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::invalid_argument("cannot parse '" + path + "': " + e.what());
    }
    return pi_sets_from_json(j);
}

json to_json(const WeightSet& set) {
    json out;
    out["constraints"] = set.constraints;
    out["weights"] = set.weights;
    json primary = json::array();
    for (const auto& comp : set.primary)
        primary.push_back({{"t", comp.t}, {"exponent", comp.exponent}});
    out["primary_decomposition"] = std::move(primary);
    return out;
}

}  // namespace vfilt
