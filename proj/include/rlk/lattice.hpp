#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rlk/extension.hpp"
#include "rlk/incidence.hpp"

namespace rlk {

enum class Side { Resolution, Smoothing, Extension };

enum class SideMode { Labels, Explicit };

std::string side_name(Side s);

/// One side of the comparison: either per-node class labels (with the
/// standing assumption that distinct labels are independent classes) or an
/// explicit relation matrix whose kernel is the side's lattice.
struct SideAssignment {
    Side side = Side::Resolution;
    SideMode mode = SideMode::Labels;
    std::vector<std::string> labels;  // Labels mode: one per node
    Matrix explicit_matrix;           // Explicit mode: m x r

    static SideAssignment from_labels(Side side, std::vector<std::string> labels);
    static SideAssignment from_matrix(Side side, Matrix m);

    int node_count() const;

    friend bool operator==(const SideAssignment&, const SideAssignment&) = default;
};

/// A full comparison instance: the datum plus the three sides, with an
/// optional declared complement for the geometric quotient.
struct ComparisonProblem {
    IncidenceDatum datum;
    SideAssignment res;
    SideAssignment sm;
    SideAssignment ext;
    std::optional<Subspace> q_geom_complement;

    void validate() const;
};

/// Permutation action on the node set, given by generators.
struct GroupAction {
    std::vector<std::vector<int>> generators;  // each a permutation of 0..n-1

    void validate(int n) const;

    friend bool operator==(const GroupAction&, const GroupAction&) = default;
};

/// The side's relation lattice: kernel of the label-indicator matrix
/// (Labels mode) or of the explicit matrix.
Subspace side_lattice(const SideAssignment& s);

/// Kernel of the geometric quotient map: the declared complement when
/// present (validated as a direct-sum complement of the geometric space),
/// else the block relation space when the datum is block-adapted, else the
/// coordinate complement of the geometric space.
Subspace q_geom_kernel(const ComparisonProblem& p);

struct SideFactorization {
    Side side = Side::Resolution;
    bool factors = false;
};

struct CompatibilityReport {
    bool compatible = false;
    std::vector<SideFactorization> sides;
};

/// A side factors through the geometric quotient iff the quotient kernel
/// sits inside the side's lattice; compatible iff all three factor.
CompatibilityReport is_comparison_compatible(const ComparisonProblem& p);

/// True iff the quotient kernel equals the triple intersection of the
/// side lattices.
bool is_minimal(const ComparisonProblem& p);

struct ComparisonReport {
    Subspace r_geom;
    Subspace r_res;
    Subspace r_sm;
    Subspace r_ext;
    Subspace intersection;
    CompatibilityReport compatibility;
    bool minimal = false;
    bool identity_holds = false;
    std::vector<std::string> failures;
};

/// The common-lattice identity: under compatibility and minimality the
/// geometric kernel equals the triple intersection; otherwise the report
/// names what failed and asserts nothing.
ComparisonReport comparison_theorem(const ComparisonProblem& p);

struct ConditionResult {
    std::string name;
    bool passed = false;
};

struct BlockSeparatedReport {
    std::vector<ConditionResult> conditions;
    bool all_passed = false;

    std::vector<std::string> failed_names() const;
};

/// The block-separated hypotheses, checked one by one:
///   (1)/(2) each node lies on exactly one cycle and rows are 0/1 block
///           indicators;
///   (3)     resolution classes constant on each block;
///   (4)     smoothing classes constant on each block;
///   (5)     distinct block classes independent on both sides;
///   (6a)    datum admissible and block-adapted;
///   (6b)    extension parameters injective across blocks.
BlockSeparatedReport verify_block_separated(const ComparisonProblem& p);

struct EqualityReport {
    Subspace r_res;
    Subspace r_sm;
    Subspace r_ext;
    Subspace r_blk;
    bool lattices_equal = false;
    int block_count = 0;
    bool quotient_dims_ok = false;
};

/// Under the block-separated hypotheses: all four lattices coincide and
/// every quotient has dimension |B|. Throws HypothesisFailed (naming the
/// failed conditions) when verify_block_separated does not pass.
EqualityReport block_separated_equality(const ComparisonProblem& p);

/// Default extension side for a block-adapted datum: the block quotient
/// itself as the explicit relation matrix.
SideAssignment default_extension_side(const IncidenceDatum& d);

/// True iff the orbits of the generated permutation group are exactly the
/// blocks: each block is preserved setwise and acted on transitively.
bool check_orbit_blocks(const GroupAction& g, const BlockPartition& p);

}  // namespace rlk
