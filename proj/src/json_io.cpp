#include "gsat/json_io.hpp"

namespace gsat {

json to_json(const KType& t) {
    json j;
    j["blocks"] = std::vector<int>(t.block.begin(), t.block.begin() + t.k);
    json edges = json::array();
    for (int i = 0; i < t.m; ++i)
        for (int k = i + 1; k < t.m; ++k)
            if (t.adjacent(i, k)) edges.push_back({i, k});
    j["edges"] = edges;
    return j;
}

json to_json(const TypeTable& T) {
    json j;
    j["arity"] = T.arity();
    json types = json::array();
    for (auto& t : T.types()) types.push_back(to_json(t));
    j["types"] = types;
    return j;
}

json to_json(const Model& m) {
    json j;
    j["classes"] = m.classes;
    json edges = json::array();
    for (auto& [a, b] : m.edges) edges.push_back({a, b});
    j["edges"] = edges;
    return j;
}

json to_json(const SolveResult& r) {
    json j;
    j["status"] = r.sat ? "sat" : "unsat";
    if (r.sat) j["model"] = to_json(*r.model);
    j["method"] = r.method;
    if (r.warning) j["warning"] = *r.warning;
    return j;
}

json to_json(const Classification& c) {
    json j;
    j["verdict"] = c.tractable ? "tractable" : "np-complete";
    j["clone"] = c.tractable ? json(c.clone_id) : json(nullptr);
    j["variant"] = c.tractable ? json(c.variant_index) : json(nullptr);
    return j;
}

json to_json(const BehaviorTable& b) {
    json j;
    j["arity"] = int(b.arity);
    j["flavor"] = b.constant ? "constant" : "injective";
    json map = json::object();
    int n = 1;
    for (int i = 0; i < b.arity; ++i) n *= 3;
    for (int i = 0; i < n; ++i) {
        std::string key;
        int v = i;
        std::vector<int> digits(b.arity);
        for (int p = b.arity - 1; p >= 0; --p) {
            digits[p] = v % 3;
            v /= 3;
        }
        for (int p = 0; p < b.arity; ++p) {
            if (p) key += ".";
            key += lab_name(Lab(digits[p]));
        }
        map[key] = lab_name(b.out[i]);
    }
    j["map"] = map;
    return j;
}

json to_json(const EdgeAffineClause& c) {
    json j;
    json ds = json::array();
    for (auto& [a, b] : c.diseq) ds.push_back({a, b});
    j["diseq"] = ds;
    if (c.has_xor) {
        json xs = json::array();
        for (auto& [a, b] : c.xor_pairs) xs.push_back({a, b});
        j["xor"] = xs;
        j["parity"] = c.parity;
    }
    return j;
}

json to_json(const BijunctiveClause& c) {
    json j;
    json ds = json::array();
    for (auto& [a, b] : c.diseq) ds.push_back({a, b});
    j["diseq"] = ds;
    json lits = json::array();
    for (int i = 0; i < c.npayload; ++i) {
        json l;
        l["pair"] = {c.payload[i].pos.first, c.payload[i].pos.second};
        l["label"] = c.payload[i].is_edge ? "E" : "N";
        lits.push_back(l);
    }
    j["literals"] = lits;
    return j;
}

Instance instance_from_json(const json& j) {
    Instance inst;
    if (!j.is_object() || !j.contains("variables") || !j.contains("constraints"))
        throw parse_error("instance JSON must have 'variables' and 'constraints'");
    for (auto& v : j.at("variables")) inst.variables.push_back(v.get<std::string>());
    for (auto& c : j.at("constraints")) {
        Instance::Constraint con;
        con.rel = c.at("rel").get<std::string>();
        for (auto& a : c.at("args")) con.args.push_back(a.get<std::string>());
        inst.constraints.push_back(std::move(con));
    }
    return inst;
}

Model model_from_json(const json& j) {
    Model m;
    for (auto& cls : j.at("classes"))
        m.classes.push_back(cls.get<std::vector<std::string>>());
    for (auto& e : j.at("edges")) m.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return m;
}

} // namespace gsat
