#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rlk/extension.hpp"
#include "rlk/incidence.hpp"
#include "rlk/lattice.hpp"

namespace rlk {

/// One parsed input document: the incidence datum plus the optional
/// analysis payloads. Pure data; the command layer decides which
/// analyses apply.
struct Configuration {
    IncidenceDatum datum;
    std::optional<RationalVector> corrected_class;
    std::optional<RationalVector> mhm_class;
    std::optional<RationalVector> realization_diag;
    std::optional<SideAssignment> res;
    std::optional<SideAssignment> sm;
    std::optional<SideAssignment> ext;
    std::optional<GroupAction> group_action;
    std::optional<std::vector<RationalVector>> q_geom_complement;

    friend bool operator==(const Configuration&, const Configuration&) = default;
};

/// Parses the documented JSON schema. Rationals are integers or "p/q"
/// strings; decimal literals are rejected (ValueError). Unknown or
/// missing keys raise SchemaError; malformed JSON raises ParseError.
Configuration parse_config(const std::string& text);

/// Deterministic JSON rendering; parse_config(serialize_config(c)) == c.
std::string serialize_config(const Configuration& cfg);

/// Reads and parses a config file; IoError when unreadable.
Configuration load_config_file(const std::string& path);

}  // namespace rlk
