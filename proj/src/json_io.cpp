#include "poshom/json_io.hpp"

#include <fstream>
#include <sstream>

#include "poshom/errors.hpp"

namespace poshom {

using nlohmann::json;

namespace {

json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::InputError, "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        fail(Errc::InputError, "bad JSON in " + path + ": " + e.what());
    }
    return j;
}

}  // namespace

GradedPoset poset_from_json(const json& j) {
    if (!j.contains("dims") || !j["dims"].is_array())
        fail(Errc::InputError, "poset file needs a dims array");
    std::vector<int> dims = j["dims"].get<std::vector<int>>();
    std::vector<std::pair<int, int>> covers;
    if (j.contains("covers"))
        for (const auto& c : j["covers"]) {
            if (!c.is_array() || c.size() != 2)
                fail(Errc::InputError, "covers entries must be [child,parent]");
            covers.push_back({c[0].get<int>(), c[1].get<int>()});
        }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
    return GradedPoset::build(std::move(dims), covers, std::move(labels));
}

SimplicialComplex complex_from_json(const json& j) {
    if (!j.contains("vertices") || !j["vertices"].is_array())
        fail(Errc::InputError, "complex file needs a vertices array");
    std::vector<std::string> vertices;
    for (const auto& v : j["vertices"])
        vertices.push_back(v.is_string() ? v.get<std::string>() : v.dump());

    auto vertex_index = [&](const json& v) -> int {
        if (v.is_number_integer()) return v.get<int>();
        const std::string label = v.get<std::string>();
        for (size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i] == label) return static_cast<int>(i);
        fail(Errc::InputError, "unknown vertex label " + label);
    };

    std::vector<std::vector<int>> facets;
    if (j.contains("facets"))
        for (const auto& f : j["facets"]) {
            std::vector<int> facet;
            for (const auto& v : f) facet.push_back(vertex_index(v));
            facets.push_back(std::move(facet));
        }
    return SimplicialComplex::from_facets(std::move(vertices), facets);
}

json family_to_json(const GradedPoset& poset, const LocalCoveringFamily& family) {
    auto name = [&](ElementId x) { return x == kBottom ? std::string("0hat") : poset.label(x); };
    json out = json::object();
    for (int p = 0; p < poset.size(); ++p) {
        json k = json::array();
        json eta = json::object();
        for (ElementId q : family.members(p)) {
            k.push_back(name(q));
            eta[name(q)] = name(family.eta(p, q));
        }
        out[poset.label(p)] = {{"K", k}, {"eta", eta}};
    }
    return out;
}

LocalCoveringFamily family_from_json(const GradedPoset& poset, const json& j) {
    auto id_of = [&](const std::string& label) -> ElementId {
        if (label == "0hat") return kBottom;
        auto id = poset.element_by_label(label);
        if (!id) fail(Errc::InputError, "unknown element label " + label);
        return *id;
    };
    LocalCoveringFamily family(poset.size());
    for (int p = 0; p < poset.size(); ++p) {
        const std::string& label = poset.label(p);
        if (!j.contains(label))
            fail(Errc::InputError, "family file missing element " + label);
        const json& entry = j.at(label);
        std::vector<ElementId> members, eta;
        for (const auto& m : entry.at("K")) {
            const std::string mlabel = m.get<std::string>();
            members.push_back(id_of(mlabel));
            if (!entry.at("eta").contains(mlabel))
                fail(Errc::InputError, "family eta missing for " + mlabel);
            eta.push_back(id_of(entry.at("eta").at(mlabel).get<std::string>()));
        }
        family.set(p, std::move(members), std::move(eta));
    }
    return family;
}

LoadedInput load_input(const std::string& path, const std::string& atom_order_text,
                       long element_cap) {
    const json j = read_file(path);
    if (!j.contains("kind") || !j["kind"].is_string())
        fail(Errc::InputError, "input needs a top-level kind: poset | complex | group");
    const std::string kind = j["kind"].get<std::string>();

    LoadedInput out;
    if (kind == "poset") {
        out.kind = InputKind::Poset;
        out.poset = poset_from_json(j);
        if (j.contains("family")) out.embedded_family = family_from_json(out.poset, j["family"]);
        return out;
    }
    if (kind == "complex") {
        out.kind = InputKind::Complex;
        out.complex = complex_from_json(j);
        auto positions = parse_order_positions(atom_order_text);
        FacePosetResult built =
            positions ? face_poset(*out.complex, *positions) : face_poset(*out.complex);
        if (!positions && atom_order_text != "default") {
            // random:<seed> permutes the vertices deterministically
            GradedPoset tmp = built.poset;
            AtomOrder order = parse_atom_order(tmp, atom_order_text);
            std::vector<int> vertex_order(out.complex->vertex_count());
            const auto& rank0 = tmp.rank(0);
            for (ElementId a : rank0) vertex_order[order.pos[a]] = built.simplex_of[a][0];
            built = face_poset(*out.complex, vertex_order);
        }
        out.poset = std::move(built.poset);
        out.embedded_family = std::move(built.family);
        out.simplex_of = std::move(built.simplex_of);
        return out;
    }
    if (kind == "group") {
        out.kind = InputKind::Group;
        if (!j.contains("degree") || !j.contains("generators"))
            fail(Errc::InputError, "group file needs degree and generators");
        std::vector<Perm> generators;
        for (const auto& g : j["generators"]) generators.push_back(g.get<Perm>());
        out.group = PermutationGroup::from_generators(j["degree"].get<int>(), generators,
                                                      element_cap);
        if (!j.contains("prime")) fail(Errc::InputError, "group file needs a prime");
        out.prime = j["prime"].get<long>();
        QuillenPosetResult built = quillen_poset(*out.group, *out.prime);
        if (atom_order_text != "default") {
            AtomOrder order = parse_atom_order(built.poset, atom_order_text);
            std::vector<ElementId> atoms(built.poset.rank(0).size());
            for (ElementId a : built.poset.rank(0)) atoms[order.pos[a]] = a;
            built = quillen_poset(*out.group, *out.prime, atoms);
        }
        out.poset = std::move(built.poset);
        out.embedded_family = std::move(built.family);
        out.subgroup_of = std::move(built.subgroup_of);
        return out;
    }
    fail(Errc::InputError, "unknown kind: " + kind);
}

json homology_to_json(const HomologyResult& result) {
    json degrees = json::object();
    for (int d = result.lowest; d <= result.top(); ++d) {
        const auto& g = result.at(d);
        json torsion = json::array();
        for (const auto& t : g.torsion) torsion.push_back(t.get_str());
        degrees[std::to_string(d)] = {{"rank", g.rank}, {"torsion", torsion}};
    }
    return degrees;
}

json free_report_to_json(const GradedPoset& poset, const FreeObjectReport& report) {
    json out;
    out["N"] = report.top_dim;
    json free_list = json::array();
    for (ElementId p : report.free_elements) free_list.push_back(poset.label(p));
    out["free_objects"] = free_list;
    out["free_count"] = report.free_elements.size();
    out["p_double_prime"] = report.p_double_prime;
    json counts = json::object();
    for (auto [k, v] : report.n_counts) counts[std::to_string(k)] = v;
    out["n_counts"] = counts;
    out["definitions_agree"] = report.definitions_agree;
    if (report.ratio_defined) out["ratio"] = report.ratio.get_str();
    out["applicable"] = report.applicable;
    if (!report.applicable && !report.not_applicable_reason.empty())
        out["not_applicable_reason"] = report.not_applicable_reason;
    if (report.applicable) {
        out["prime"] = report.prime;
        out["bound"] = report.bound.get_str();
        out["top_homology_zero"] = report.top_homology_zero;
        out["bound_holds"] = report.bound_holds;
    }
    return out;
}

json size_report_to_json(const SizeReport& report) {
    json out;
    out["reduced_ranks"] = report.reduced_ranks;
    out["oracle_counts"] = report.oracle_counts;
    out["reduced_total"] = report.reduced_total;
    out["oracle_total"] = report.oracle_total;
    return out;
}

std::optional<std::vector<int>> parse_order_positions(const std::string& text) {
    if (text == "default" || text.rfind("random:", 0) == 0) return std::nullopt;
    std::vector<int> ids;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            fail(Errc::InputError, "bad atom order: " + text);
        ids.push_back(std::stoi(item));
    }
    if (ids.empty()) fail(Errc::InputError, "bad atom order: " + text);
    return ids;
}

AtomOrder parse_atom_order(const GradedPoset& poset, const std::string& text) {
    if (text == "default") return AtomOrder::default_order(poset);
    if (text.rfind("random:", 0) == 0) {
        const std::string seed_text = text.substr(7);
        if (seed_text.empty() || seed_text.find_first_not_of("0123456789") != std::string::npos)
            fail(Errc::InputError, "bad atom order seed: " + text);
        return AtomOrder::shuffled(poset, std::stoull(seed_text));
    }
    auto ids = parse_order_positions(text);
    std::vector<ElementId> atoms(ids->begin(), ids->end());
    return AtomOrder::from_sequence(poset, atoms);
}

}  // namespace poshom
