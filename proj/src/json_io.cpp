#include "qembed/json_io.hpp"

#include <fstream>
#include <sstream>

namespace qembed {

namespace {

std::vector<std::vector<int>> table_of(const FiniteGroup& g) {
    std::vector<std::vector<int>> t(g.order(), std::vector<int>(g.order()));
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b) t[a][b] = g.mul(a, b);
    return t;
}

} // namespace

json group_to_json(const GroupPtr& g) {
    json j;
    j["kind"] = "cayley";
    j["order"] = g->order();
    j["table"] = table_of(*g);
    if (g->has_labels()) j["labels"] = g->labels();
    return j;
}

GroupPtr group_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind")) fail(Err::BadInput, "group json needs a \"kind\"");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "cayley") {
        auto table = j.at("table").get<std::vector<std::vector<int>>>();
        std::vector<std::string> labels;
        if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
        if (j.contains("order") && j.at("order").get<int>() != static_cast<int>(table.size()))
            fail(Err::BadInput, "declared order does not match the table");
        return FiniteGroup::from_cayley(table, std::nullopt, std::move(labels));
    }
    if (kind == "perm") {
        int degree = j.at("degree").get<int>();
        auto gens = j.at("generators").get<std::vector<Perm>>();
        return FiniteGroup::from_permutations(degree, gens);
    }
    fail(Err::BadInput, "unknown group kind \"" + kind + "\"");
}

json quandle_to_json(const FiniteQuandle& q) {
    json j;
    j["order"] = q.order();
    std::vector<std::vector<int>> t(q.order(), std::vector<int>(q.order()));
    for (int x = 0; x < q.order(); ++x)
        for (int y = 0; y < q.order(); ++y) t[x][y] = q.op(x, y);
    j["table"] = t;
    if (q.has_labels()) j["labels"] = q.labels();
    return j;
}

QuandlePtr quandle_from_json(const json& j) {
    auto table = j.at("table").get<std::vector<std::vector<int>>>();
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return FiniteQuandle::from_table(table, std::move(labels));
}

json subgroup_to_json(const Subgroup& h) { return json{{"members", h.members}}; }

Subgroup subgroup_from_json(const json& j, const GroupPtr& g) {
    Subgroup h{g, j.at("members").get<std::vector<int>>()};
    std::sort(h.members.begin(), h.members.end());
    h.validate();
    return h;
}

json automorphism_to_json(const GroupAutomorphism& a) { return json{{"image", a.image}}; }

GroupAutomorphism automorphism_from_json(const json& j, const GroupPtr& g) {
    GroupAutomorphism a{g, j.at("image").get<std::vector<int>>()};
    a.validate();
    return a;
}

json triplet_to_json(const QuandleTriplet& t) {
    json j;
    j["group"] = group_to_json(t.group);
    j["subgroup"] = subgroup_to_json(t.subgroup);
    j["automorphism"] = automorphism_to_json(t.aut);
    return j;
}

QuandleTriplet triplet_from_json(const json& j) {
    GroupPtr g = group_from_json(j.at("group"));
    QuandleTriplet t{g, subgroup_from_json(j.at("subgroup"), g),
                     automorphism_from_json(j.at("automorphism"), g)};
    t.validate();
    return t;
}

json map_to_json(const QuandleMap& m) { return json{{"image", m.image}}; }

json clifford_to_json(const CliffordElement& e) {
    json coeffs = json::object();
    for (uint32_t mask = 0; mask < (uint32_t{1} << e.dim()); ++mask)
        if (e.coeff(mask) != 0.0) coeffs[std::to_string(mask)] = e.coeff(mask);
    return json{{"n", e.dim()}, {"coeffs", coeffs}};
}

CliffordElement clifford_from_json(const json& j) {
    CliffordElement e(j.at("n").get<int>());
    for (const auto& [key, value] : j.at("coeffs").items()) {
        uint32_t mask = static_cast<uint32_t>(std::stoul(key));
        if (mask >= e.size()) fail(Err::BadInput, "blade mask out of range: " + key);
        e.set_coeff(mask, value.get<double>());
    }
    return e;
}

json report_to_json(const EmbeddingReport& r) {
    json j;
    j["verdict"] = verdict_name(r.verdict);
    j["modulus"] = r.modulus ? json(*r.modulus) : json(nullptr);
    j["witness_q"] = r.witness_q ? json(*r.witness_q) : json(nullptr);
    j["collision"] =
        r.collision ? json{r.collision->first, r.collision->second} : json(nullptr);
    j["target_group"] = group_to_json(r.target_group);
    j["map"] = r.map.image;
    return j;
}

json bergman_to_json(const BergmanReport& r) {
    json j;
    j["embedding"] = report_to_json(r.embedding);
    j["fix_equals_diagonal"] = r.fix_equals_diagonal;
    j["core_isomorphism"] = r.core_iso_ok;
    j["coincides_with_bergman_map"] = r.coincides_with_fb;
    j["bergman_image"] = r.fb_image;
    return j;
}

json axiom_report_to_json(const AxiomReport& r) {
    json idem = json::array();
    for (const auto& v : r.idempotence) idem.push_back(json{{"x", v.x}});
    json bij = json::array();
    for (const auto& v : r.bijectivity)
        bij.push_back(json{{"y", v.y}, {"x1", v.x1}, {"x2", v.x2}});
    json dist = json::array();
    for (const auto& v : r.distributivity)
        dist.push_back(json{{"x", v.x}, {"y", v.y}, {"z", v.z}});
    return json{{"valid", r.valid()},
                {"idempotence_violations", idem},
                {"bijectivity_violations", bij},
                {"distributivity_violations", dist}};
}

json geom_report_to_json(const GeomReport& r) {
    json checks = json::array();
    for (const CheckLine& c : r.checks)
        checks.push_back(json{{"name", c.name},
                              {"value", c.max_residual},
                              {"bound", c.tolerance},
                              {"pass", c.pass}});
    return json{{"family", r.family}, {"checks", checks}, {"pass", r.pass()}};
}

namespace {

void render(const json& j, std::ostringstream& os, int indent) {
    std::string pad(static_cast<size_t>(indent) * 2, ' ');
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            os << pad << it.key() << ":";
            if (it.value().is_object() || it.value().is_array()) {
                os << "\n";
                render(it.value(), os, indent + 1);
            } else {
                os << " " << it.value().dump() << "\n";
            }
        }
    } else if (j.is_array()) {
        bool scalars = true;
        for (const auto& v : j)
            if (v.is_object() || v.is_array()) scalars = false;
        if (scalars) {
            os << pad << j.dump() << "\n";
        } else {
            for (const auto& v : j) {
                os << pad << "-\n";
                render(v, os, indent + 1);
            }
        }
    } else {
        os << pad << j.dump() << "\n";
    }
}

} // namespace

std::string render_text(const json& j) {
    std::ostringstream os;
    render(j, os, 0);
    return os.str();
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Err::BadInput, "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        fail(Err::BadInput, std::string("json parse error: ") + e.what());
    }
    return j;
}

} // namespace qembed
