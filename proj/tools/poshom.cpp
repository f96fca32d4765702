// Command-line front-end: homology of graded posets through local covering
// families, with a brute-force order-complex oracle for cross-checking.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "poshom/cli.hpp"
#include "poshom/ring.hpp"

int main(int argc, char** argv) {
    CLI::App app{"poset homology via local covering families"};
    app.require_subcommand(1);

    poshom::RunConfig config;
    std::string ring_text = "z";

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--input", config.input_path, "input JSON (kind: poset|complex|group)")
            ->required();
        cmd->add_option("--ring", ring_text, "coefficients: z | q | fp:<p> | zmod:<m>");
        cmd->add_option("--atom-order", config.atom_order,
                        "default | random:<seed> | comma-separated atom ids");
        cmd->add_flag("--reduced", config.augmented,
                      "use the augmented complexes (reduced homology)");
        cmd->add_option("--output", config.output_path, "write the report here instead of stdout");
        cmd->add_flag("--table", config.table, "human-readable table instead of JSON");
        cmd->add_option("--element-cap", config.element_cap, "group enumeration cap");
        return cmd;
    };

    add_common(app.add_subcommand("homology", "homology of the covering-family complex"));
    auto* compare = add_common(
        app.add_subcommand("compare", "covering-family complex vs order-complex oracle"));
    compare->add_flag("--corrupt-differential", config.corrupt_differential)->group("");
    add_common(app.add_subcommand("euler", "Euler characteristic formula vs oracle (groups)"));
    add_common(app.add_subcommand("free-objects", "free objects and the proportion bound"));
    auto* validate =
        add_common(app.add_subcommand("validate", "grading, atom-modularity, family axioms"));
    validate->add_option("--family", config.family_path, "serialized family JSON to validate");

    CLI11_PARSE(app, argc, argv);

    config.command = app.get_subcommands().front()->get_name();
    try {
        config.ring = poshom::CoefficientRing::parse(ring_text);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return poshom::kExitInput;
    }

    poshom::RunResult result = poshom::run_command(config);
    if (!result.error.empty()) std::cerr << result.error << "\n";
    if (!result.output.empty()) {
        if (config.output_path.empty()) {
            std::cout << result.output;
        } else {
            std::ofstream out(config.output_path);
            if (!out) {
                std::cerr << "cannot write " << config.output_path << "\n";
                return poshom::kExitInput;
            }
            out << result.output;
        }
    }
    return result.exit_code;
}
