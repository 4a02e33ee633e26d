// Release gate: every blocking property of the toolkit, one line each.
// Each criterion recomputes its expectation from scratch (brute-force
// enumeration, independent intersections, counting recurrences) instead of
// trusting the code path under test.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "rlk/commands.hpp"
#include "rlk/lattice.hpp"
#include "rlk/partition.hpp"

using namespace rlk;

namespace {

std::string config_path(const char* name) { return std::string(RLK_CONFIG_DIR) + "/" + name; }

Configuration bundled(const char* name) { return load_config_file(config_path(name)); }

AdmissibilityFlags all_flags() {
    AdmissibilityFlags f;
    f.reduced_meets_nodes = true;
    f.smooth_locus_connected = true;
    f.rank_one_locally_constant = true;
    f.variation_by_specialization = true;
    f.locally_trivial_along_smooth_locus = true;
    return f;
}

IncidenceDatum datum_from_rows(const std::vector<RationalVector>& rows, int cols) {
    IncidenceDatum d;
    for (int j = 0; j < cols; ++j) d.node_labels.push_back("p" + std::to_string(j + 1));
    for (size_t i = 0; i < rows.size(); ++i) {
        d.cycle_labels.push_back("C" + std::to_string(i + 1));
        d.cycle_flags.push_back(all_flags());
    }
    d.matrix = Matrix::from_rows(rows, cols);
    return d;
}

ComparisonProblem problem_from(const Configuration& cfg) {
    ComparisonProblem p;
    p.datum = cfg.datum;
    p.res = *cfg.res;
    p.sm = *cfg.sm;
    p.ext = cfg.ext ? *cfg.ext : default_extension_side(cfg.datum);
    return p;
}

// One node per block, per-block labels on all three sides, all flags set.
ComparisonProblem random_block_separated(std::mt19937& gen) {
    std::uniform_int_distribution<int> rdist(1, 8);
    const int r = rdist(gen);
    std::uniform_int_distribution<int> bdist(1, std::min(4, r));
    const int b = bdist(gen);
    std::uniform_int_distribution<int> odist(0, b - 1);
    std::vector<int> owner(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) owner[static_cast<size_t>(i)] = i < b ? i : odist(gen);

    IncidenceDatum d;
    for (int i = 0; i < r; ++i) d.node_labels.push_back("p" + std::to_string(i + 1));
    std::vector<RationalVector> rows(static_cast<size_t>(b), RationalVector(static_cast<size_t>(r), 0));
    for (int i = 0; i < r; ++i) rows[static_cast<size_t>(owner[static_cast<size_t>(i)])][static_cast<size_t>(i)] = 1;
    for (int k = 0; k < b; ++k) {
        d.cycle_labels.push_back("C" + std::to_string(k + 1));
        d.cycle_flags.push_back(all_flags());
    }
    d.matrix = Matrix::from_rows(rows, r);

    auto labels = [&](const char* stem) {
        std::vector<std::string> out;
        for (int i = 0; i < r; ++i)
            out.push_back(std::string(stem) + std::to_string(owner[static_cast<size_t>(i)] + 1));
        return out;
    };
    ComparisonProblem p;
    p.datum = d;
    p.res = SideAssignment::from_labels(Side::Resolution, labels("u"));
    p.sm = SideAssignment::from_labels(Side::Smoothing, labels("v"));
    p.ext = SideAssignment::from_labels(Side::Extension, labels("w"));
    return p;
}

bool constant_on_blocks(const RationalVector& v, const BlockPartition& p) {
    for (const auto& block : p.blocks())
        for (int i : block)
            if (!(v[static_cast<size_t>(i)] == v[static_cast<size_t>(block.front())])) return false;
    return true;
}

// All weakly-decreasing k-part positive compositions of n.
void profiles_into(int n, int k, int max_part, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
    if (k == 0) {
        if (n == 0) out.push_back(cur);
        return;
    }
    for (int part = std::min(n - k + 1, max_part); part >= 1; --part) {
        cur.push_back(part);
        profiles_into(n - part, k - 1, part, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> profiles(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    profiles_into(n, k, n, cur, out);
    return out;
}

// ---------------------------------------------------------------------------

bool criterion_dimension_table(std::string& detail) {
    const struct {
        const char* file;
        int node, geom, e_geom;
    } rows[] = {
        {"two_node_common_cycle.json", 2, 1, 1},
        {"three_node_two_classes.json", 3, 2, 2},
        {"four_node_overlapping_cycles.json", 4, 2, 2},
    };
    for (const auto& row : rows) {
        const CommandResult res = cmd_analyze(bundled(row.file));
        const auto& dims = res.report["dims"];
        if (dims["node"] != row.node || dims["geom"] != row.geom ||
            dims["e_geom"] != row.e_geom) {
            detail = std::string(row.file) + " gave (" + dims["node"].dump() + "," +
                     dims["geom"].dump() + "," + dims["e_geom"].dump() + ")";
            return false;
        }
    }
    detail = "(2,1,1) (3,2,2) (4,2,2) on the bundled configs";
    return true;
}

bool criterion_two_node_membership(std::string& detail) {
    const Configuration cfg = bundled("two_node_common_cycle.json");
    const Subspace eg = e_geom(cfg.datum, ExtensionLayer::perverse(2));
    const bool in = membership({1, 1}, eg);
    const bool out = membership({1, 0}, eg);
    detail = "E_geom is the diagonal line: (1,1) in, (1,0) out";
    return eg.dim() == 1 && in && !out;
}

bool criterion_exhaustive_triples(std::string& detail) {
    const Configuration cfg = bundled("three_node_two_classes.json");
    const Subspace eg = e_geom(cfg.datum, ExtensionLayer::perverse(3));
    int hits = 0;
    for (long a = -2; a <= 2; ++a)
        for (long b = -2; b <= 2; ++b)
            for (long c = -2; c <= 2; ++c) {
                const bool in = membership({Rational(a), Rational(b), Rational(c)}, eg);
                if (in != (a == b)) {
                    detail = "triple (" + std::to_string(a) + "," + std::to_string(b) + "," +
                             std::to_string(c) + ") misclassified";
                    return false;
                }
                if (in) ++hits;
            }
    detail = "all 125 triples: membership iff the first two coefficients agree (" +
             std::to_string(hits) + " members)";
    return true;
}

bool criterion_block_separated_equality(std::string& detail) {
    std::mt19937 gen(20260815);
    for (int trial = 0; trial < 1000; ++trial) {
        const ComparisonProblem p = random_block_separated(gen);
        const EqualityReport eq = block_separated_equality(p);
        const int blocks = incidence_blocks(p.datum).block_count();
        const int r = p.datum.node_count();
        const bool same = eq.r_res == eq.r_sm && eq.r_sm == eq.r_ext && eq.r_ext == eq.r_blk;
        const bool dims_ok = eq.quotient_dims_ok && eq.block_count == blocks &&
                             r - eq.r_blk.dim() == blocks;
        if (!(eq.lattices_equal && same && dims_ok)) {
            detail = "trial " + std::to_string(trial) + " broke the four-way equality";
            return false;
        }
    }
    detail = "1000 random instances (r <= 8, blocks <= 4): lattices equal, quotients of dim |B|";
    return true;
}

bool criterion_comparison_identity(std::string& detail) {
    // Compatible + minimal instances: the bundled ones.
    for (const char* name : {"two_node_common_cycle.json", "three_node_two_classes.json",
                             "quintic_symmetric_pair.json"}) {
        const ComparisonProblem p = problem_from(bundled(name));
        const Subspace triple =
            intersect(intersect(side_lattice(p.res), side_lattice(p.sm)), side_lattice(p.ext));
        const ComparisonReport rep = comparison_theorem(p);
        if (!rep.compatibility.compatible || !rep.minimal) {
            detail = std::string(name) + " is not compatible+minimal";
            return false;
        }
        if (!rep.identity_holds || !(q_geom_kernel(p) == triple)) {
            detail = std::string(name) + " broke the identity";
            return false;
        }
    }
    // A non-minimal instance: independent nodes, but all sides relate them.
    ComparisonProblem bad;
    bad.datum = datum_from_rows({{1, 0}, {0, 1}}, 2);
    bad.res = SideAssignment::from_labels(Side::Resolution, {"u", "u"});
    bad.sm = SideAssignment::from_labels(Side::Smoothing, {"v", "v"});
    bad.ext = SideAssignment::from_labels(Side::Extension, {"w", "w"});
    const ComparisonReport rep = comparison_theorem(bad);
    if (!rep.compatibility.compatible || rep.minimal || rep.identity_holds) {
        detail = "non-minimal instance was not refused";
        return false;
    }
    detail = "identity via independent intersections; the non-minimal instance is refused";
    return true;
}

bool criterion_rank_nullity(std::string& detail) {
    std::mt19937 gen(97);
    std::uniform_int_distribution<int> dim(1, 6);
    std::uniform_int_distribution<long> entry(-2, 2);
    for (int trial = 0; trial < 10000; ++trial) {
        const int rows = dim(gen);
        const int cols = dim(gen);
        Matrix m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m.at(i, j) = Rational(entry(gen));
        if (rank(m) + kernel(m).dim() != cols) {
            detail = "trial " + std::to_string(trial) + " broke rank + nullity = cols";
            return false;
        }
    }
    detail = "rank + kernel dim = columns on 10000 random matrices up to 6x6";
    return true;
}

bool criterion_combinatorics(std::string& detail) {
    for (int n = 0; n <= 10; ++n) {
        if (BigInt(enumerate_partitions(n).size()) != bell(n)) {
            detail = "enumeration count vs bell failed at n=" + std::to_string(n);
            return false;
        }
    }
    for (int n = 0; n <= 8; ++n) {
        const auto parts = enumerate_partitions(n);
        for (int k = 0; k <= n; ++k) {
            long count = 0;
            for (const auto& p : parts)
                if (p.block_count() == k) ++count;
            if (BigInt(count) != stirling2(n, k)) {
                detail = "per-k count vs stirling failed at n=" + std::to_string(n) +
                         ", k=" + std::to_string(k);
                return false;
            }
        }
    }
    for (int n = 1; n <= 8; ++n)
        for (int k = 1; k <= n; ++k) {
            BigInt sum = 0;
            for (const auto& lambda : profiles(n, k)) sum += profile_multiplicity(BlockProfile(lambda));
            if (sum != stirling2(n, k)) {
                detail = "profile multiplicities vs stirling failed at n=" + std::to_string(n) +
                         ", k=" + std::to_string(k);
                return false;
            }
        }
    for (int n = 1; n <= 6; ++n) {
        for (const auto& p : enumerate_partitions(n)) {
            const DimensionTriple base = dimension_law(n, p);
            const int kb = p.block_count();
            // Every merge of >= 2 blocks.
            for (int mask = 0; mask < (1 << kb); ++mask) {
                std::vector<int> which;
                for (int i = 0; i < kb; ++i)
                    if (mask & (1 << i)) which.push_back(i);
                if (which.size() < 2) continue;
                const int m = static_cast<int>(which.size());
                const BlockPartition merged = coalesce(p, which);
                const DimensionTriple after = dimension_law(n, merged);
                if (after.dim_geom != base.dim_geom - (m - 1) ||
                    after.dim_rel != base.dim_rel + (m - 1)) {
                    detail = "coalesce delta wrong on " + p.str();
                    return false;
                }
            }
            // Every binary split of every block, and its inverse merge.
            for (int b = 0; b < kb; ++b) {
                const auto& block = p.blocks()[static_cast<size_t>(b)];
                const int sz = static_cast<int>(block.size());
                if (sz < 2) continue;
                for (int mask = 1; mask < (1 << sz) - 1; ++mask) {
                    std::vector<std::vector<int>> split(2);
                    for (int i = 0; i < sz; ++i)
                        split[(mask >> i) & 1].push_back(block[static_cast<size_t>(i)]);
                    const BlockPartition finer = thicken(p, b, split);
                    const DimensionTriple after = dimension_law(n, finer);
                    if (after.dim_geom != base.dim_geom + 1 || after.dim_rel != base.dim_rel - 1) {
                        detail = "thicken delta wrong on " + p.str();
                        return false;
                    }
                    // The two freshly split blocks merge back to p.
                    std::vector<int> back;
                    for (int i = 0; i < finer.block_count(); ++i) {
                        const auto& fb = finer.blocks()[static_cast<size_t>(i)];
                        if (fb == split[0] || fb == split[1]) back.push_back(i);
                    }
                    if (back.size() != 2 || !(coalesce(finer, back) == p)) {
                        detail = "thicken then coalesce failed to restore " + p.str();
                        return false;
                    }
                }
            }
        }
    }
    detail = "bell to n=10, stirling and profile sums to n=8, merge/split deltas to n=6";
    return true;
}

bool criterion_realization_commutes(std::string& detail) {
    std::mt19937 gen(4242);
    std::uniform_int_distribution<int> rdist(1, 5);
    std::uniform_int_distribution<int> cdist(1, 4);
    std::uniform_int_distribution<long> entry(-2, 2);
    std::uniform_int_distribution<long> nonzero(1, 3);
    std::uniform_int_distribution<int> sign(0, 1);
    auto rand_nonzero = [&]() {
        const long v = nonzero(gen);
        return Rational(sign(gen) ? v : -v);
    };
    for (int trial = 0; trial < 100; ++trial) {
        const int r = rdist(gen);
        const int cycles = cdist(gen);
        std::vector<RationalVector> rows(static_cast<size_t>(cycles));
        for (auto& row : rows)
            for (int j = 0; j < r; ++j) row.push_back(Rational(entry(gen)));
        const IncidenceDatum d = datum_from_rows(rows, r);

        RationalVector source_scale, diag, target_scale;
        for (int j = 0; j < r; ++j) {
            source_scale.push_back(rand_nonzero());
            diag.push_back(rand_nonzero());
            target_scale.push_back(source_scale.back() * diag.back());
        }
        RealizationMap rat;
        rat.source = ExtensionLayer::scaled(LayerKind::MHM, source_scale);
        rat.target = ExtensionLayer::scaled(LayerKind::Perverse, target_scale);
        rat.diagonal = diag;
        if (!(rat.matrix() * gamma_map(d, rat.source) == gamma_map(d, rat.target))) {
            detail = "trial " + std::to_string(trial) + " broke the square";
            return false;
        }
    }
    detail = "realization square commutes on 100 random diagonal maps and data";
    return true;
}

bool criterion_propagation(std::string& detail) {
    long checked = 0;
    for (const char* name : {"two_node_common_cycle.json", "three_node_two_classes.json",
                             "four_node_overlapping_cycles.json"}) {
        const Configuration cfg = bundled(name);
        const IncidenceDatum& d = cfg.datum;
        const int r = d.node_count();
        const BlockPartition prop = propagation_closure(d);
        const ExtensionLayer layer = ExtensionLayer::perverse(r);
        long total = 1;
        for (int i = 0; i < r; ++i) total *= 5;
        for (long code = 0; code < total; ++code) {
            RationalVector v;
            long rest = code;
            for (int i = 0; i < r; ++i) {
                v.push_back(Rational(rest % 5 - 2));
                rest /= 5;
            }
            const bool expected = constant_on_blocks(v, prop);
            const bool got = check_corrected_class({layer, v}, d).propagation_ok;
            if (got != expected) {
                detail = std::string(name) + ": vector misjudged by the propagation check";
                return false;
            }
            ++checked;
        }
    }
    detail = "accepts exactly the propagation-block-constant classes (" +
             std::to_string(checked) + " vectors)";
    return true;
}

bool criterion_adapted_criterion_sound(std::string& detail) {
    long tested = 0;
    for (int rows = 1; rows <= 3; ++rows)
        for (int cols = 1; cols <= 5; ++cols) {
            const long total = 1L << (rows * cols);
            for (long code = 0; code < total; ++code) {
                std::vector<RationalVector> grid(static_cast<size_t>(rows),
                                                 RationalVector(static_cast<size_t>(cols), 0));
                for (int bit = 0; bit < rows * cols; ++bit)
                    if (code & (1L << bit))
                        grid[static_cast<size_t>(bit / cols)][static_cast<size_t>(bit % cols)] = 1;
                const IncidenceDatum d = datum_from_rows(grid, cols);
                ++tested;
                if (image_equals_block_constant_criterion(d) && !is_block_adapted(d)) {
                    detail = "counterexample at rows=" + std::to_string(rows) +
                             " cols=" + std::to_string(cols) + " code=" + std::to_string(code);
                    return false;
                }
            }
        }
    detail = "criterion implies block-adapted on all " + std::to_string(tested) +
             " 0/1 matrices up to 3x5";
    return true;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<bool(std::string&)> run;
        double budget_s;
    };
    const std::vector<Criterion> criteria = {
        {"dimension table", criterion_dimension_table, 1.0},
        {"two-node extension line", criterion_two_node_membership, 1.0},
        {"prototype triples", criterion_exhaustive_triples, 1.0},
        {"block-separated equality", criterion_block_separated_equality, 10.0},
        {"comparison identity", criterion_comparison_identity, 1.0},
        {"rank-nullity suite", criterion_rank_nullity, 10.0},
        {"combinatorics oracles", criterion_combinatorics, 60.0},
        {"realization commutativity", criterion_realization_commutes, 1.0},
        {"propagation checks", criterion_propagation, 1.0},
        {"adapted-criterion soundness", criterion_adapted_criterion_sound, 30.0},
    };

    int passed = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        std::string detail;
        bool ok = false;
        const auto start = std::chrono::steady_clock::now();
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed > c.budget_s) {
            ok = false;
            detail += " [over the " + std::to_string(c.budget_s) + "s budget]";
        }
        std::printf("[%2zu] %s  %-28s (%.2fs)  %s\n", i + 1, ok ? "PASS" : "FAIL", c.name,
                    elapsed, detail.c_str());
        if (ok) ++passed;
    }
    std::printf("acceptance: %d/%zu criteria passed\n", passed, criteria.size());
    return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
