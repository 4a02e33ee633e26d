#include "rlk/incidence.hpp"

#include <map>
#include <set>

#include "rlk/errors.hpp"

namespace rlk {

void IncidenceDatum::validate() const {
    if (matrix.rows() != cycle_count())
        throw DimensionMismatch("matrix row count does not match cycle count");
    if (matrix.cols() != node_count())
        throw DimensionMismatch("matrix column count does not match node count");
    if (cycle_flags.size() != cycle_labels.size())
        throw DimensionMismatch("flag set count does not match cycle count");
    std::set<std::string> nodes(node_labels.begin(), node_labels.end());
    if (nodes.size() != node_labels.size()) throw ValueError("duplicate node label");
    std::set<std::string> cycles(cycle_labels.begin(), cycle_labels.end());
    if (cycles.size() != cycle_labels.size()) throw ValueError("duplicate cycle label");
}

BlockPartition incidence_blocks(const IncidenceDatum& d) {
    // Group node indices by their incidence column.
    std::map<std::vector<std::string>, int> column_ids;
    std::vector<int> assignment(static_cast<size_t>(d.node_count()));
    for (int j = 0; j < d.node_count(); ++j) {
        std::vector<std::string> key;
        key.reserve(static_cast<size_t>(d.cycle_count()));
        for (int i = 0; i < d.cycle_count(); ++i) key.push_back(d.matrix.at(i, j).str());
        auto it = column_ids.try_emplace(std::move(key), static_cast<int>(column_ids.size())).first;
        assignment[static_cast<size_t>(j)] = it->second;
    }
    return BlockPartition::from_assignment(assignment);
}

Subspace geometric_space(const IncidenceDatum& d) {
    std::vector<RationalVector> rows;
    rows.reserve(static_cast<size_t>(d.cycle_count()));
    for (int i = 0; i < d.cycle_count(); ++i) rows.push_back(d.matrix.row(i));
    return Subspace::span(d.node_count(), rows);
}

Subspace block_constant_space(const BlockPartition& p) {
    std::vector<RationalVector> gens;
    gens.reserve(static_cast<size_t>(p.block_count()));
    for (const auto& block : p.blocks()) {
        RationalVector indicator(static_cast<size_t>(p.n()));
        for (int i : block) indicator[static_cast<size_t>(i)] = Rational(1);
        gens.push_back(std::move(indicator));
    }
    return Subspace::span(p.n(), gens);
}

bool is_block_adapted(const IncidenceDatum& d) {
    return subspace_equal(geometric_space(d), block_constant_space(incidence_blocks(d)));
}

bool image_equals_block_constant_criterion(const IncidenceDatum& d) {
    // Columns are constant on their blocks by construction of the blocks;
    // the substance is independence of the distinct columns.
    const BlockPartition blocks = incidence_blocks(d);
    std::vector<RationalVector> distinct;
    distinct.reserve(static_cast<size_t>(blocks.block_count()));
    for (const auto& block : blocks.blocks()) distinct.push_back(d.matrix.col(block.front()));
    if (distinct.empty()) return true;
    const Matrix m = Matrix::from_rows(distinct, d.cycle_count());
    return rank(m) == blocks.block_count();
}

Matrix block_quotient_matrix(const BlockPartition& p) {
    Matrix q(p.block_count(), p.n());
    for (int b = 0; b < p.block_count(); ++b)
        for (int i : p.blocks()[static_cast<size_t>(b)]) q.at(b, i) = Rational(1);
    return q;
}

Subspace block_relation_space(const BlockPartition& p) {
    return kernel(block_quotient_matrix(p));
}

AdmissibilityReport is_geometrically_admissible(const IncidenceDatum& d) {
    AdmissibilityReport report;
    report.admissible = true;
    for (int i = 0; i < d.cycle_count(); ++i) {
        const AdmissibilityFlags& f = d.cycle_flags[static_cast<size_t>(i)];
        CycleVerdict v;
        v.label = d.cycle_labels[static_cast<size_t>(i)];

        bool zero_one = true;
        for (int j = 0; j < d.node_count(); ++j) {
            const Rational& x = d.matrix.at(i, j);
            if (!v.row_nonzero && !x.is_zero()) v.row_nonzero = true;
            if (!x.is_zero() && !x.is_one()) zero_one = false;
        }
        v.full_conditions = f.reduced_meets_nodes && f.smooth_locus_connected &&
                            f.rank_one_locally_constant && f.variation_by_specialization;
        v.shortcut = f.locally_trivial_along_smooth_locus && f.rank_one_locally_constant &&
                     f.variation_by_specialization;
        v.admissible = v.row_nonzero && (v.full_conditions || v.shortcut);

        const bool any_flag = f.reduced_meets_nodes || f.smooth_locus_connected ||
                              f.rank_one_locally_constant || f.variation_by_specialization ||
                              f.locally_trivial_along_smooth_locus;
        if (!zero_one && any_flag)
            report.warnings.push_back("cycle '" + v.label +
                                      "' carries declared conditions on a non-0/1 incidence row; "
                                      "they are taken on trust");

        report.admissible = report.admissible && v.admissible;
        report.cycles.push_back(std::move(v));
    }
    return report;
}

}  // namespace rlk
