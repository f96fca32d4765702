#pragma once

#include <string>

#include "poshom/ring.hpp"

namespace poshom {

// Exit codes: 0 ok, 1 validation failure, 2 comparison mismatch, 3 input error.
enum ExitCode : int {
    kExitOk = 0,
    kExitValidation = 1,
    kExitMismatch = 2,
    kExitInput = 3,
};

struct RunConfig {
    std::string command;  // homology | compare | euler | free-objects | validate
    std::string input_path;
    CoefficientRing ring = CoefficientRing::integers();
    std::string atom_order = "default";  // default | random:<seed> | explicit id list
    bool augmented = false;              // --reduced: include the degree -1 augmentation
    std::string output_path;             // empty = stdout
    bool table = false;                  // human-readable rendering instead of JSON
    long element_cap = 10000;
    std::string family_path;             // validate: external serialized family
    bool corrupt_differential = false;   // hidden test hook for the mismatch path
};

struct RunResult {
    int exit_code = kExitOk;
    std::string output;  // report text (JSON or table)
    std::string error;   // diagnostic on failure
};

// Pure command runner; identical configs produce byte-identical output.
RunResult run_command(const RunConfig& config);

}  // namespace poshom
