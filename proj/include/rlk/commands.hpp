#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rlk/config.hpp"
#include "rlk/partition.hpp"

namespace rlk {

/// One executed command: the structured report (the stable machine
/// contract), its plain-text rendering, and the process exit code.
struct CommandResult {
    nlohmann::ordered_json report;
    std::string text;
    int exit_code = 0;
};

/// Blocks, dimensions, adaptation/admissibility/rigidity flags, subspace
/// bases, and — when a corrected class is supplied — the class checks.
CommandResult cmd_analyze(const Configuration& cfg);

/// Side lattices, compatibility, minimality, the common-lattice identity,
/// and — when the block-separated hypotheses hold — the four-way equality.
/// Throws MissingSides without res+sm, or without ext on a datum that is
/// not block-adapted (no default extension side exists).
CommandResult cmd_compare(const Configuration& cfg);

struct PartitionsRequest {
    int n = 0;
    std::optional<int> k;
    std::optional<std::vector<int>> profile;
    bool list = false;
    int guard = kDefaultEnumerationGuard;
};

/// Counting values (Bell, Stirling, profile multiplicity) and, on request,
/// the guarded partition listing with the dimension-count columns.
CommandResult cmd_partitions(const PartitionsRequest& req);

enum class QuiverFlavor { Node, Block };

/// Renders the node or block shadow as DOT, writing it to out_path when
/// given (IoError on failure); the DOT text also lands in the report.
CommandResult cmd_quiver(const Configuration& cfg, QuiverFlavor flavor,
                         const std::optional<std::string>& out_path);

/// Runs every check applicable to the supplied fields; exit code 0 iff all
/// pass, 4 with a machine-readable failure list otherwise.
CommandResult cmd_verify(const Configuration& cfg);

}  // namespace rlk
