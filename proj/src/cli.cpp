#include "poshom/cli.hpp"

#include <fstream>
#include <sstream>

#include "poshom/analysis.hpp"
#include "poshom/covering.hpp"
#include "poshom/cycles.hpp"
#include "poshom/errors.hpp"
#include "poshom/homology.hpp"
#include "poshom/json_io.hpp"

namespace poshom {

using nlohmann::json;

namespace {

int exit_code_for(Errc code) {
    switch (code) {
        case Errc::InputError:
            return kExitInput;
        default:
            return kExitValidation;
    }
}

struct Prepared {
    LoadedInput input;
    LocalCoveringFamily family;
};

Prepared prepare(const RunConfig& config) {
    Prepared out;
    out.input = load_input(config.input_path, config.atom_order, config.element_cap);
    if (out.input.embedded_family) {
        out.family = *out.input.embedded_family;
    } else {
        AtomOrder order = parse_atom_order(out.input.poset, config.atom_order);
        out.family = build_atom_modular_lcf(out.input.poset, order);
    }
    return out;
}

json sizes_json(const GradedPoset& poset, const LocalCoveringFamily& family) {
    SizeReport sizes = size_report(poset, family);
    json complex_sizes = json::object(), oracle_sizes = json::object();
    for (size_t d = 0; d < sizes.reduced_ranks.size(); ++d) {
        complex_sizes[std::to_string(d)] = sizes.reduced_ranks[d];
        oracle_sizes[std::to_string(d)] = sizes.oracle_counts[d];
    }
    complex_sizes["total"] = sizes.reduced_total;
    oracle_sizes["total"] = sizes.oracle_total;
    return json{{"complex_sizes", complex_sizes}, {"oracle_sizes", oracle_sizes}};
}

std::string render_homology_table(const json& degrees) {
    std::ostringstream os;
    os << "degree  rank  torsion\n";
    for (auto it = degrees.begin(); it != degrees.end(); ++it) {
        os << "  " << it.key() << "     " << it.value()["rank"] << "    [";
        const auto& torsion = it.value()["torsion"];
        for (size_t i = 0; i < torsion.size(); ++i)
            os << (i ? "," : "") << torsion[i].get<std::string>();
        os << "]\n";
    }
    return os.str();
}

RunResult finish(const RunConfig& config, json body, int exit_code,
                 const std::string& table_text) {
    RunResult out;
    out.exit_code = exit_code;
    out.output = config.table ? table_text : body.dump(2) + "\n";
    return out;
}

RunResult cmd_homology(const RunConfig& config) {
    Prepared prep = prepare(config);
    auto report = validate_lcf(prep.input.poset, prep.family);
    if (!report.ok())
        return {kExitValidation, "", "covering family invalid:\n" + report.describe(prep.input.poset)};

    auto complex = reduced_complex(prep.input.poset, prep.family, config.ring, config.augmented);
    auto result = homology(complex, config.ring);

    json body;
    body["command"] = "homology";
    body["input"] = config.input_path;
    body["ring"] = config.ring.name();
    body["augmented"] = config.augmented;
    body["degrees"] = homology_to_json(result);
    body.update(sizes_json(prep.input.poset, prep.family));

    std::ostringstream table;
    table << "homology over " << config.ring.name() << "\n"
          << render_homology_table(body["degrees"]);
    return finish(config, body, kExitOk, table.str());
}

RunResult cmd_compare(const RunConfig& config) {
    Prepared prep = prepare(config);
    auto report = validate_lcf(prep.input.poset, prep.family);
    if (!report.ok())
        return {kExitValidation, "", "covering family invalid:\n" + report.describe(prep.input.poset)};

    auto small = reduced_complex(prep.input.poset, prep.family, config.ring, config.augmented);
    if (config.corrupt_differential && small.top() >= std::max(1, small.lowest() + 1)) {
        IntMat& d = small.mutable_differential(small.top());
        for (long c = 0; c < d.cols(); ++c) {
            bool nonzero = false;
            for (long r = 0; r < d.rows(); ++r) nonzero = nonzero || d.at(r, c) != 0;
            if (nonzero) {
                for (long r = 0; r < d.rows(); ++r) d.at(r, c) = 0;
                break;
            }
        }
    }
    auto oracle = order_complex_chain(prep.input.poset, config.ring, config.augmented);

    auto small_h = homology(small, config.ring);
    auto oracle_h = homology(oracle, config.ring);
    const bool equal = homology_equal(small_h, oracle_h);

    json body;
    body["command"] = "compare";
    body["input"] = config.input_path;
    body["ring"] = config.ring.name();
    body["augmented"] = config.augmented;
    body["reduced_complex"] = homology_to_json(small_h);
    body["oracle"] = homology_to_json(oracle_h);
    body["equal"] = equal;
    body.update(sizes_json(prep.input.poset, prep.family));

    std::ostringstream table;
    table << "reduced complex:\n"
          << render_homology_table(body["reduced_complex"]) << "oracle:\n"
          << render_homology_table(body["oracle"]);
    table << "sizes (reduced vs oracle): " << body["complex_sizes"]["total"] << " vs "
          << body["oracle_sizes"]["total"] << "\n";
    table << "verdict: " << (equal ? "equal" : "UNEQUAL") << "\n";
    return finish(config, body, equal ? kExitOk : kExitMismatch, table.str());
}

RunResult cmd_euler(const RunConfig& config) {
    Prepared prep = prepare(config);
    if (prep.input.kind != InputKind::Group)
        fail(Errc::InputError, "euler needs a group input");

    EulerReport report = quillen_euler(prep.input.poset, *prep.input.prime);
    json body;
    body["command"] = "euler";
    body["input"] = config.input_path;
    body["prime"] = *prep.input.prime;
    body["formula"] = report.formula;
    body["oracle"] = report.oracle;
    body["agree"] = report.agree;

    std::ostringstream table;
    table << "chi formula: " << report.formula << "\nchi oracle:  " << report.oracle
          << "\nagree: " << (report.agree ? "yes" : "NO") << "\n";
    return finish(config, body, report.agree ? kExitOk : kExitMismatch, table.str());
}

RunResult cmd_free_objects(const RunConfig& config) {
    Prepared prep = prepare(config);

    FreeObjectReport report;
    std::optional<long> prime = prep.input.prime;
    if (!prime) {
        auto type = classify_local_type(prep.input.poset);
        if (type.label == LocalType::LocallyPQuillen) prime = type.quillen_prime;
    }
    if (prime && is_locally_p_quillen(prep.input.poset, *prime)) {
        report = free_bound_check(prep.input.poset, prep.family, *prime, config.ring);
    } else {
        report = free_objects(prep.input.poset);
        report.applicable = false;
        report.not_applicable_reason = "poset is not locally p-Quillen";
    }

    json body;
    body["command"] = "free-objects";
    body["input"] = config.input_path;
    body.update(free_report_to_json(prep.input.poset, report));

    std::ostringstream table;
    table << "free objects: " << report.free_elements.size() << "\n";
    if (report.ratio_defined)
        table << "ratio |N_1|/|P''| = " << report.ratio.get_str() << "\n";
    if (report.applicable)
        table << "bound " << report.bound.get_str() << ", top homology zero: "
              << (report.top_homology_zero ? "yes" : "no")
              << ", bound holds: " << (report.bound_holds ? "yes" : "no") << "\n";
    else
        table << "bound not applicable: " << report.not_applicable_reason << "\n";
    return finish(config, body, kExitOk, table.str());
}

RunResult cmd_validate(const RunConfig& config) {
    LoadedInput input = load_input(config.input_path, config.atom_order, config.element_cap);

    json body;
    body["command"] = "validate";
    body["input"] = config.input_path;
    body["grading"] = "ok";  // build() already enforced it

    auto am = is_atom_modular(input.poset);
    json am_violations = json::array();
    for (const auto& v : am.violations)
        am_violations.push_back({{"scope", input.poset.label(v.scope)},
                                 {"atom", input.poset.label(v.atom)},
                                 {"other", input.poset.label(v.other)},
                                 {"note", v.note}});
    body["atom_modular"] = am.ok();
    body["atom_modular_violations"] = am_violations;

    bool family_ok = true;
    json lcf_violations = json::array();
    std::string family_source;
    LocalCoveringFamily family;
    bool have_family = false;
    if (!config.family_path.empty()) {
        std::ifstream in(config.family_path);
        if (!in) fail(Errc::InputError, "cannot open " + config.family_path);
        json fj;
        in >> fj;
        family = family_from_json(input.poset, fj);
        family_source = "file";
        have_family = true;
    } else if (input.embedded_family) {
        family = *input.embedded_family;
        family_source = "embedded";
        have_family = true;
    } else if (am.ok()) {
        family = build_atom_modular_lcf(input.poset,
                                        parse_atom_order(input.poset, config.atom_order));
        family_source = "constructed";
        have_family = true;
    } else {
        family_source = "none (poset is not locally atom-modular)";
        family_ok = false;
    }

    if (have_family) {
        auto lcf = validate_lcf(input.poset, family);
        family_ok = lcf.ok();
        auto name = [&](ElementId x) {
            return x == kBottom ? std::string("0hat") : input.poset.label(x);
        };
        for (const auto& v : lcf.violations)
            lcf_violations.push_back({{"condition", v.condition},
                                      {"p", name(v.p)},
                                      {"q", name(v.q)},
                                      {"r", name(v.r)},
                                      {"note", v.note}});
    }
    body["family_source"] = family_source;
    body["family_ok"] = family_ok;
    body["family_violations"] = lcf_violations;

    const bool clean = am.ok() && family_ok;
    std::ostringstream table;
    table << "grading: ok\natom-modular: " << (am.ok() ? "yes" : "NO")
          << "\nfamily (" << family_source << "): " << (family_ok ? "valid" : "INVALID") << "\n";
    for (const auto& v : lcf_violations)
        table << "  condition " << v["condition"] << " at p=" << v["p"].get<std::string>() << ": "
              << v["note"].get<std::string>() << "\n";
    return finish(config, body, clean ? kExitOk : kExitValidation, table.str());
}

}  // namespace

RunResult run_command(const RunConfig& config) {
    try {
        if (config.command == "homology") return cmd_homology(config);
        if (config.command == "compare") return cmd_compare(config);
        if (config.command == "euler") return cmd_euler(config);
        if (config.command == "free-objects") return cmd_free_objects(config);
        if (config.command == "validate") return cmd_validate(config);
        return {kExitInput, "", "unknown command: " + config.command};
    } catch (const Error& e) {
        RunResult out;
        out.exit_code = exit_code_for(e.code());
        out.error = std::string(errc_name(e.code())) + ": " + e.what();
        return out;
    } catch (const std::exception& e) {
        return {kExitInput, "", std::string("error: ") + e.what()};
    }
}

}  // namespace poshom
