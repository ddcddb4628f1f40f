#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace qembed {

/// Exit codes: 0 success/embedding, 2 invalid input, 3 valid but failed
/// (collision or residual above tolerance), 4 internal invariant breach.
enum ExitCode : int { kOk = 0, kInvalid = 2, kNegative = 3, kInternal = 4 };

struct CommandRequest {
    std::string subcommand;        // make | verify | embed | joyce | bergman | geom
    std::string kind;              // make kind or geom family

    std::string group_path;
    std::string aut_path;
    std::string subgroup_path;
    std::string quandle_path;
    std::string triplet_path;

    int dihedral_n = 0;            // make dihedral
    std::string mode = "auto";     // embed: inner | semidirect | auto
    std::optional<int> witness;    // embed --witness
    int basepoint = 0;             // joyce

    int n = 2;                     // geom
    int k = 1;
    double theta = 0.0;

    double tol = 1e-9;
    int samples = 200;
    uint64_t seed = 0xC0FFEE;
    int modulus_factor = 1;
    std::string format = "json";   // json | text
    std::string out;               // output file; empty writes to stdout
};

int run_command(const CommandRequest& req, std::ostream& out, std::ostream& err);

} // namespace qembed
