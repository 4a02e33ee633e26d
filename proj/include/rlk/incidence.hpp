#pragma once

#include <string>
#include <vector>

#include "rlk/block_partition.hpp"
#include "rlk/matrix.hpp"
#include "rlk/subspace.hpp"

namespace rlk {

/// Declared geometric facts about one cycle. These are assertions supplied
/// by the user, never derived from the matrix.
struct AdmissibilityFlags {
    bool reduced_meets_nodes = false;
    bool smooth_locus_connected = false;
    bool rank_one_locally_constant = false;
    bool variation_by_specialization = false;
    // Sufficient condition replacing the connectedness argument: local
    // triviality along the smooth locus, combined with the rank-one and
    // variation flags, already forces coefficient propagation.
    bool locally_trivial_along_smooth_locus = false;

    friend bool operator==(const AdmissibilityFlags&, const AdmissibilityFlags&) = default;
};

/// A finite family of cycles meeting a finite node set: one matrix row per
/// cycle, one column per node, entries the rational incidence multiplicities.
struct IncidenceDatum {
    std::vector<std::string> node_labels;
    std::vector<std::string> cycle_labels;
    Matrix matrix;  // cycles x nodes
    std::vector<AdmissibilityFlags> cycle_flags;

    int node_count() const { return static_cast<int>(node_labels.size()); }
    int cycle_count() const { return static_cast<int>(cycle_labels.size()); }

    /// Throws on label/shape inconsistencies.
    void validate() const;

    friend bool operator==(const IncidenceDatum&, const IncidenceDatum&) = default;
};

/// Nodes grouped by identical incidence columns.
BlockPartition incidence_blocks(const IncidenceDatum& d);

/// Row space of the incidence matrix inside nodewise space Q^r.
Subspace geometric_space(const IncidenceDatum& d);

/// Vectors constant on each block; dim = block count.
Subspace block_constant_space(const BlockPartition& p);

/// True iff the geometric space fills the whole block-constant space.
bool is_block_adapted(const IncidenceDatum& d);

/// Sufficient criterion: the distinct incidence columns are linearly
/// independent. Implies is_block_adapted.
bool image_equals_block_constant_criterion(const IncidenceDatum& d);

/// The per-block summation map Q^r -> Q^B as a 0/1 matrix.
Matrix block_quotient_matrix(const BlockPartition& p);

/// Kernel of the block quotient: vectors whose block sums all vanish.
Subspace block_relation_space(const BlockPartition& p);

struct CycleVerdict {
    std::string label;
    bool admissible = false;
    bool row_nonzero = false;
    bool full_conditions = false;  // all four declared conditions
    bool shortcut = false;         // local triviality + rank-one + variation
};

struct AdmissibilityReport {
    bool admissible = false;
    std::vector<CycleVerdict> cycles;
    std::vector<std::string> warnings;
};

/// Per-cycle admissibility: the incidence row must be nonzero and either
/// all four declared conditions or the shortcut must hold. Non-0/1 rows are
/// allowed but flagged with a warning when they carry declared conditions.
AdmissibilityReport is_geometrically_admissible(const IncidenceDatum& d);

}  // namespace rlk
