#include <algorithm>
#include <fstream>
#include <sstream>

#include "rlk/commands.hpp"
#include "rlk/quiver.hpp"

namespace rlk {

namespace {

using njson = nlohmann::ordered_json;

const char* yesno(bool b) { return b ? "yes" : "no"; }

njson vec_json(const RationalVector& v) {
    njson arr = njson::array();
    for (const auto& x : v) arr.push_back(x.str());
    return arr;
}

njson basis_json(const Subspace& s) {
    njson arr = njson::array();
    for (const auto& row : s.basis()) arr.push_back(vec_json(row));
    return arr;
}

njson blocks_json(const BlockPartition& p, const std::vector<std::string>& labels) {
    njson classes = njson::array();
    for (const auto& block : p.blocks()) {
        njson cls = njson::array();
        for (int i : block) cls.push_back(labels.at(static_cast<size_t>(i)));
        classes.push_back(std::move(cls));
    }
    njson out = njson::object();
    out["count"] = p.block_count();
    out["display"] = p.str();
    out["classes"] = std::move(classes);
    return out;
}

std::vector<std::string> flag_names(const AdmissibilityFlags& f) {
    std::vector<std::string> names;
    if (f.reduced_meets_nodes) names.emplace_back("reduced_meets_nodes");
    if (f.smooth_locus_connected) names.emplace_back("smooth_locus_connected");
    if (f.rank_one_locally_constant) names.emplace_back("rank_one_locally_constant");
    if (f.variation_by_specialization) names.emplace_back("variation_by_specialization");
    if (f.locally_trivial_along_smooth_locus) names.emplace_back("locally_trivial_along_smooth_locus");
    return names;
}

njson echo_input(const IncidenceDatum& d) {
    njson cycles = njson::array();
    for (int i = 0; i < d.cycle_count(); ++i) {
        njson cyc = njson::object();
        cyc["label"] = d.cycle_labels[static_cast<size_t>(i)];
        cyc["incidence_row"] = vec_json(d.matrix.row(i));
        cyc["declared"] = flag_names(d.cycle_flags[static_cast<size_t>(i)]);
        cycles.push_back(std::move(cyc));
    }
    njson out = njson::object();
    out["nodes"] = d.node_labels;
    out["cycles"] = std::move(cycles);
    return out;
}

std::string side_mode_str(const SideAssignment& s) {
    return s.mode == SideMode::Labels ? "labels" : "matrix";
}

/// Which kernel q_geom_kernel will use, for the report.
std::string complement_branch(const Configuration& cfg) {
    if (cfg.q_geom_complement) return "declared complement";
    if (is_block_adapted(cfg.datum)) return "block-relation space";
    return "coordinate complement of the geometric space";
}

ComparisonProblem build_problem(const Configuration& cfg, bool& ext_defaulted) {
    if (!cfg.res || !cfg.sm) throw MissingSides("comparison needs 'res' and 'sm' side assignments");
    ComparisonProblem p;
    p.datum = cfg.datum;
    p.res = *cfg.res;
    p.sm = *cfg.sm;
    ext_defaulted = false;
    if (cfg.ext) {
        p.ext = *cfg.ext;
    } else if (is_block_adapted(cfg.datum)) {
        p.ext = default_extension_side(cfg.datum);
        ext_defaulted = true;
    } else {
        throw MissingSides(
            "no 'ext' side given, and the datum is not block-adapted, so the block quotient "
            "cannot stand in for it");
    }
    if (cfg.q_geom_complement)
        p.q_geom_complement = Subspace::span(cfg.datum.node_count(), *cfg.q_geom_complement);
    return p;
}

bool sides_complete(const Configuration& cfg) {
    return cfg.res && cfg.sm && (cfg.ext || is_block_adapted(cfg.datum));
}

}  // namespace

CommandResult cmd_analyze(const Configuration& cfg) {
    const IncidenceDatum& d = cfg.datum;
    d.validate();
    const int r = d.node_count();
    const BlockPartition blocks = incidence_blocks(d);
    const Subspace v_geom = geometric_space(d);
    const Subspace constant = block_constant_space(blocks);
    const Subspace r_blk = block_relation_space(blocks);
    const bool adapted = is_block_adapted(d);
    const bool criterion = image_equals_block_constant_criterion(d);
    const AdmissibilityReport adm = is_geometrically_admissible(d);
    const Subspace eg = e_geom(d, ExtensionLayer::perverse(r));
    const bool rigid = is_rigid(d);
    const bool splits =
        intersect(constant, r_blk).dim() == 0 && constant.dim() + r_blk.dim() == r;

    std::vector<std::string> warnings = adm.warnings;
    if (!adapted)
        warnings.push_back(
            "datum is not block-adapted: the geometric space is a proper subspace of the "
            "block-constant space");

    struct VerdictRow {
        std::string name;
        bool holds;
        std::string detail;
    };
    std::vector<VerdictRow> verdicts;
    verdicts.push_back({"geometric space contained in the block-constant space",
                        constant.contains(v_geom),
                        "incidence rows are constant on equal-column blocks"});
    verdicts.push_back({"node space splits as block-constant plus block-relation", splits,
                        "dims " + std::to_string(constant.dim()) + " + " +
                            std::to_string(r_blk.dim()) + " = " + std::to_string(r) +
                            " with trivial intersection"});
    verdicts.push_back({"block-adapted datum", adapted,
                        adapted ? "geometric space fills the block-constant space"
                                : "strict inclusion: rank falls short of the block count"});
    verdicts.push_back({"independent-columns criterion", criterion,
                        criterion ? "distinct incidence columns are linearly independent, "
                                    "which suffices for block adaptation"
                                  : "distinct incidence columns are dependent; adaptation "
                                    "was decided by direct comparison"});
    verdicts.push_back({"geometric admissibility", adm.admissible,
                        "every cycle needs a nonzero row and its declared conditions"});
    verdicts.push_back({"rigid extension sector", rigid,
                        "realized subspace has dimension " + std::to_string(eg.dim())});

    njson report = njson::object();
    report["command"] = "analyze";
    report["input"] = echo_input(d);
    report["blocks"] = blocks_json(blocks, d.node_labels);
    {
        njson dims = njson::object();
        dims["node"] = r;
        dims["geom"] = v_geom.dim();
        dims["e_geom"] = eg.dim();
        dims["rel"] = r - blocks.block_count();
        report["dims"] = std::move(dims);
    }
    {
        njson flags = njson::object();
        flags["block_adapted"] = adapted;
        flags["admissible"] = adm.admissible;
        flags["rigid"] = rigid;
        report["flags"] = std::move(flags);
    }
    {
        njson cycles = njson::array();
        for (const auto& cv : adm.cycles) {
            njson c = njson::object();
            c["label"] = cv.label;
            c["admissible"] = cv.admissible;
            c["row_nonzero"] = cv.row_nonzero;
            c["full_conditions"] = cv.full_conditions;
            c["shortcut"] = cv.shortcut;
            cycles.push_back(std::move(c));
        }
        report["cycles"] = std::move(cycles);
    }
    {
        njson spaces = njson::object();
        spaces["v_geom"] = basis_json(v_geom);
        spaces["block_constant"] = basis_json(constant);
        spaces["r_blk"] = basis_json(r_blk);
        spaces["e_geom"] = basis_json(eg);
        report["spaces"] = std::move(spaces);
    }
    {
        njson vs = njson::array();
        for (const auto& v : verdicts) {
            njson row = njson::object();
            row["name"] = v.name;
            row["holds"] = v.holds;
            row["detail"] = v.detail;
            vs.push_back(std::move(row));
        }
        report["verdicts"] = std::move(vs);
    }

    std::ostringstream text;
    text << "analyze: " << r << " node" << (r == 1 ? "" : "s") << ", " << d.cycle_count()
         << " cycle" << (d.cycle_count() == 1 ? "" : "s") << "\n";
    text << "blocks: " << blocks.str() << " (count " << blocks.block_count() << ")\n";
    text << "dims: node=" << r << " geom=" << v_geom.dim() << " e_geom=" << eg.dim()
         << " rel=" << r - blocks.block_count() << "\n";
    text << "flags: block_adapted=" << yesno(adapted) << " admissible=" << yesno(adm.admissible)
         << " rigid=" << yesno(rigid) << "\n";
    for (const auto& cv : adm.cycles) {
        text << "cycle " << cv.label << ": admissible=" << yesno(cv.admissible)
             << " (row_nonzero=" << yesno(cv.row_nonzero)
             << ", full_conditions=" << yesno(cv.full_conditions)
             << ", shortcut=" << yesno(cv.shortcut) << ")\n";
    }
    for (const auto& v : verdicts)
        text << (v.holds ? "[holds] " : "[fails] ") << v.name << ": " << v.detail << "\n";

    if (cfg.corrected_class) {
        const CorrectedClass cc{ExtensionLayer::perverse(r), *cfg.corrected_class};
        const ClassCheckReport chk = check_corrected_class(cc, d);
        warnings.insert(warnings.end(), chk.warnings.begin(), chk.warnings.end());
        njson cj = njson::object();
        cj["class"] = vec_json(*cfg.corrected_class);
        cj["propagation_ok"] = chk.propagation_ok;
        cj["incidence_ok"] = chk.incidence_ok;
        cj["in_e_geom"] = chk.in_e_geom;
        report["class_check"] = std::move(cj);
        text << "class check: propagation_ok=" << yesno(chk.propagation_ok)
             << " incidence_ok=" << yesno(chk.incidence_ok)
             << " in_e_geom=" << yesno(chk.in_e_geom) << "\n";
    }

    report["warnings"] = warnings;
    for (const auto& w : warnings) text << "warning: " << w << "\n";
    return {std::move(report), text.str(), 0};
}

CommandResult cmd_compare(const Configuration& cfg) {
    cfg.datum.validate();
    bool ext_defaulted = false;
    const ComparisonProblem p = build_problem(cfg, ext_defaulted);
    const ComparisonReport cr = comparison_theorem(p);
    const BlockSeparatedReport bs = verify_block_separated(p);

    njson report = njson::object();
    report["command"] = "compare";
    {
        njson sides = njson::object();
        sides["res"] = side_mode_str(p.res);
        sides["sm"] = side_mode_str(p.sm);
        sides["ext"] = ext_defaulted ? "block quotient (defaulted)" : side_mode_str(p.ext);
        report["sides"] = std::move(sides);
    }
    report["q_geom_kernel_source"] = complement_branch(cfg);
    {
        njson lat = njson::object();
        lat["r_geom"] = basis_json(cr.r_geom);
        lat["r_res"] = basis_json(cr.r_res);
        lat["r_sm"] = basis_json(cr.r_sm);
        lat["r_ext"] = basis_json(cr.r_ext);
        lat["intersection"] = basis_json(cr.intersection);
        report["lattices"] = std::move(lat);
    }
    {
        njson dims = njson::object();
        dims["r_geom"] = cr.r_geom.dim();
        dims["r_res"] = cr.r_res.dim();
        dims["r_sm"] = cr.r_sm.dim();
        dims["r_ext"] = cr.r_ext.dim();
        dims["intersection"] = cr.intersection.dim();
        report["dims"] = std::move(dims);
    }
    {
        njson comp = njson::object();
        comp["compatible"] = cr.compatibility.compatible;
        njson per = njson::array();
        for (const auto& sf : cr.compatibility.sides) {
            njson row = njson::object();
            row["side"] = side_name(sf.side);
            row["factors"] = sf.factors;
            per.push_back(std::move(row));
        }
        comp["sides"] = std::move(per);
        report["compatibility"] = std::move(comp);
    }
    report["minimal"] = cr.minimal;
    report["identity_holds"] = cr.identity_holds;
    report["failures"] = cr.failures;
    {
        njson conds = njson::array();
        for (const auto& c : bs.conditions) {
            njson row = njson::object();
            row["name"] = c.name;
            row["passed"] = c.passed;
            conds.push_back(std::move(row));
        }
        njson b = njson::object();
        b["conditions"] = std::move(conds);
        b["all_passed"] = bs.all_passed;
        report["block_separated"] = std::move(b);
    }

    std::ostringstream text;
    text << "compare: res=" << side_mode_str(p.res) << " sm=" << side_mode_str(p.sm) << " ext="
         << (ext_defaulted ? std::string("block quotient (defaulted)") : side_mode_str(p.ext))
         << "\n";
    text << "q_geom kernel: " << complement_branch(cfg) << "\n";
    text << "lattice dims: r_geom=" << cr.r_geom.dim() << " r_res=" << cr.r_res.dim()
         << " r_sm=" << cr.r_sm.dim() << " r_ext=" << cr.r_ext.dim()
         << " intersection=" << cr.intersection.dim() << "\n";
    text << "compatibility:";
    for (const auto& sf : cr.compatibility.sides)
        text << " " << side_name(sf.side) << "=" << (sf.factors ? "factors" : "does-not-factor");
    text << " -> " << (cr.compatibility.compatible ? "compatible" : "incompatible") << "\n";
    text << "minimal: " << yesno(cr.minimal) << "\n";
    text << "identity (geometric kernel equals the triple intersection): "
         << (cr.identity_holds ? "holds" : "fails") << "\n";
    for (const auto& f : cr.failures) text << "failure: " << f << "\n";
    text << "block-separated hypotheses:\n";
    for (const auto& c : bs.conditions)
        text << "  " << (c.passed ? "[ok]  " : "[no]  ") << c.name << "\n";

    if (bs.all_passed) {
        const EqualityReport eq = block_separated_equality(p);
        njson e = njson::object();
        e["verdict"] = "R_res=R_sm=R_ext=R_blk";
        e["holds"] = eq.lattices_equal;
        e["block_count"] = eq.block_count;
        e["quotient_dims_ok"] = eq.quotient_dims_ok;
        e["r_blk"] = basis_json(eq.r_blk);
        report["equality"] = std::move(e);
        text << "equality R_res=R_sm=R_ext=R_blk: " << (eq.lattices_equal ? "holds" : "fails")
             << " (blocks=" << eq.block_count
             << ", quotient dims " << (eq.quotient_dims_ok ? "ok" : "off") << ")\n";
    } else {
        text << "equality R_res=R_sm=R_ext=R_blk: not asserted (hypotheses fail)\n";
    }
    return {std::move(report), text.str(), 0};
}

CommandResult cmd_partitions(const PartitionsRequest& req) {
    if (req.n < 0) throw ValueError("node count must be nonnegative");
    if (req.k && (*req.k < 0 || *req.k > req.n))
        throw ValueError("block count k must lie between 0 and n");

    njson report = njson::object();
    report["command"] = "partitions";
    report["n"] = req.n;
    std::ostringstream text;
    text << "set partitions of n=" << req.n << " nodes\n";

    const BigInt b = bell(req.n);
    report["bell"] = b.get_str();
    text << "B_" << req.n << " = " << b.get_str() << "\n";

    if (req.k) {
        const BigInt s = stirling2(req.n, *req.k);
        njson sj = njson::object();
        sj["k"] = *req.k;
        sj["value"] = s.get_str();
        report["stirling"] = std::move(sj);
        text << "S(" << req.n << "," << *req.k << ") = " << s.get_str() << "\n";
    }

    std::optional<BlockProfile> profile;
    if (req.profile) {
        profile.emplace(*req.profile);
        if (profile->n() != req.n)
            throw ValueError("profile parts sum to " + std::to_string(profile->n()) +
                             ", not n=" + std::to_string(req.n));
        if (req.k && profile->block_count() != *req.k)
            throw ValueError("profile has " + std::to_string(profile->block_count()) +
                             " parts but k=" + std::to_string(*req.k) + " was requested");
        const BigInt m = profile_multiplicity(*profile);
        njson pj = njson::object();
        pj["lambda"] = profile->parts();
        pj["multiplicity"] = m.get_str();
        report["profile"] = std::move(pj);
        text << "N = " << m.get_str() << "\n";
    }

    if (req.list) {
        const std::vector<BlockPartition> all = enumerate_partitions(req.n, req.guard);
        njson listing = njson::array();
        int shown = 0;
        for (const auto& p : all) {
            if (req.k && p.block_count() != *req.k) continue;
            if (profile && !(BlockProfile::of(p) == *profile)) continue;
            const DimensionTriple t = dimension_law(req.n, p);
            njson row = njson::object();
            row["partition"] = p.str();
            row["blocks"] = p.block_count();
            njson dims = njson::object();
            dims["node"] = t.dim_node;
            dims["geom"] = t.dim_geom;
            dims["rel"] = t.dim_rel;
            row["dimension_law"] = std::move(dims);
            listing.push_back(std::move(row));
            text << "  " << p.str() << "  blocks=" << p.block_count() << "  dims(node,geom,rel)=("
                 << t.dim_node << "," << t.dim_geom << "," << t.dim_rel << ")\n";
            ++shown;
        }
        report["listing"] = std::move(listing);
        text << "listed " << shown << " partition" << (shown == 1 ? "" : "s") << "\n";
    }
    return {std::move(report), text.str(), 0};
}

CommandResult cmd_quiver(const Configuration& cfg, QuiverFlavor flavor,
                         const std::optional<std::string>& out_path) {
    cfg.datum.validate();
    const QuiverShadow q =
        flavor == QuiverFlavor::Node ? node_quiver(cfg.datum) : block_quiver(cfg.datum);
    const std::string dot = to_dot(q);
    if (out_path) {
        std::ofstream out(*out_path, std::ios::binary);
        if (!out) throw IoError("cannot open '" + *out_path + "' for writing");
        out << dot;
        out.flush();
        if (!out) throw IoError("error while writing '" + *out_path + "'");
    }

    njson report = njson::object();
    report["command"] = "quiver";
    report["flavor"] = flavor == QuiverFlavor::Node ? "node" : "block";
    report["coupling_dim"] = q.coupling_dim;
    report["vertex_count"] = static_cast<int>(q.vertices.size());
    report["arrow_count"] = static_cast<int>(q.arrows.size());
    report["notes"] = q.notes;
    if (out_path) report["out"] = *out_path;
    report["dot"] = dot;

    std::ostringstream text;
    text << "quiver: flavor=" << (flavor == QuiverFlavor::Node ? "node" : "block")
         << " vertices=" << q.vertices.size() << " arrows=" << q.arrows.size() << "\n";
    text << "coupling_dim = " << q.coupling_dim << "\n";
    for (const auto& note : q.notes) text << "note: " << note << "\n";
    if (out_path)
        text << "wrote " << *out_path << "\n";
    else
        text << dot;
    return {std::move(report), text.str(), 0};
}

CommandResult cmd_verify(const Configuration& cfg) {
    const IncidenceDatum& d = cfg.datum;
    d.validate();
    const int r = d.node_count();
    const BlockPartition blocks = incidence_blocks(d);
    const Subspace v_geom = geometric_space(d);
    const Subspace constant = block_constant_space(blocks);
    const Subspace r_blk = block_relation_space(blocks);
    const bool adapted = is_block_adapted(d);
    const bool criterion = image_equals_block_constant_criterion(d);
    const AdmissibilityReport adm = is_geometrically_admissible(d);
    const BlockPartition prop = propagation_closure(d);

    struct Check {
        std::string name;
        bool applicable = false;
        bool passed = false;
        std::string detail;
    };
    std::vector<Check> checks;
    std::vector<std::string> warnings = adm.warnings;

    checks.push_back({"block_decomposition", true,
                      intersect(constant, r_blk).dim() == 0 &&
                          constant.dim() + r_blk.dim() == r,
                      "block-constant and block-relation spaces split the node space"});
    checks.push_back({"geom_inside_block_constant", true, constant.contains(v_geom),
                      "the geometric space lies inside the block-constant space"});
    checks.push_back({"adapted_criterion_sound", criterion, criterion ? adapted : false,
                      "independent distinct columns force block adaptation"});

    std::optional<ClassCheckReport> chk;
    if (cfg.corrected_class) {
        const CorrectedClass cc{ExtensionLayer::perverse(r), *cfg.corrected_class};
        chk = check_corrected_class(cc, d);
        warnings.insert(warnings.end(), chk->warnings.begin(), chk->warnings.end());
        const bool refines = blocks.refines(prop);
        checks.push_back({"propagation_ok", true, chk->propagation_ok,
                          "class constant on the cycle-propagation blocks"});
        checks.push_back({"incidence_ok", refines, chk->incidence_ok,
                          refines ? "class constant on the incidence blocks"
                                  : "incidence blocks do not refine the propagation blocks; "
                                    "constancy on them is not forced"});
        checks.push_back({"in_e_geom", adm.admissible, chk->in_e_geom,
                          adm.admissible
                              ? "class lies in the realized subspace"
                              : "membership is only forced for admissible data"});
    }

    if (cfg.mhm_class && cfg.realization_diag && cfg.corrected_class) {
        RealizationMap rat;
        rat.source = ExtensionLayer::mhm(r);
        rat.target = ExtensionLayer::perverse(r);
        rat.diagonal = *cfg.realization_diag;
        rat.validate();
        const CorrectedClass realized = realize({rat.source, *cfg.mhm_class}, rat);
        checks.push_back({"realization_matches", true,
                          realized.components == *cfg.corrected_class,
                          "the realization diagonal carries the mhm class onto the "
                          "corrected class"});
    } else if (cfg.mhm_class || cfg.realization_diag) {
        warnings.push_back(
            "realization not checked: it needs mhm_class, realization_diag, and "
            "corrected_class together");
    }

    if (sides_complete(cfg)) {
        bool ext_defaulted = false;
        const ComparisonProblem p = build_problem(cfg, ext_defaulted);
        const ComparisonReport cr = comparison_theorem(p);
        const bool hypotheses = cr.compatibility.compatible && cr.minimal;
        checks.push_back({"comparison_identity", hypotheses,
                          hypotheses ? cr.identity_holds : false,
                          hypotheses ? "geometric kernel equals the triple intersection"
                                     : "compatibility or minimality fails; the identity is "
                                       "not asserted"});
        for (const auto& f : cr.failures) warnings.push_back("comparison: " + f);
        const BlockSeparatedReport bs = verify_block_separated(p);
        bool eq_ok = false;
        std::string eq_detail;
        if (bs.all_passed) {
            const EqualityReport eq = block_separated_equality(p);
            eq_ok = eq.lattices_equal && eq.quotient_dims_ok;
            eq_detail = "all four lattices coincide and every quotient has dimension " +
                        std::to_string(eq.block_count);
        } else {
            eq_detail = "hypotheses fail:";
            for (const auto& name : bs.failed_names()) eq_detail += " " + name;
        }
        checks.push_back({"block_separated_equality", bs.all_passed, eq_ok, eq_detail});
    } else if (cfg.res || cfg.sm || cfg.ext) {
        warnings.push_back("comparison not checked: sides are incomplete");
    }

    if (cfg.group_action) {
        checks.push_back({"orbit_blocks_match", true,
                          check_orbit_blocks(*cfg.group_action, blocks),
                          "orbits of the symmetry action coincide with the incidence blocks"});
    }

    std::vector<std::string> failures;
    int applicable = 0;
    for (const auto& c : checks) {
        if (!c.applicable) continue;
        ++applicable;
        if (!c.passed) failures.push_back(c.name + "=false");
    }
    const bool ok = failures.empty();

    njson report = njson::object();
    report["command"] = "verify";
    {
        njson arr = njson::array();
        for (const auto& c : checks) {
            njson row = njson::object();
            row["name"] = c.name;
            row["applicable"] = c.applicable;
            if (c.applicable) row["passed"] = c.passed;
            row["detail"] = c.detail;
            arr.push_back(std::move(row));
        }
        report["checks"] = std::move(arr);
    }
    report["failures"] = failures;
    report["warnings"] = warnings;
    report["ok"] = ok;

    std::ostringstream text;
    text << "verify: " << r << " node" << (r == 1 ? "" : "s") << ", " << d.cycle_count()
         << " cycle" << (d.cycle_count() == 1 ? "" : "s") << "\n";
    for (const auto& c : checks) {
        const char* mark = !c.applicable ? "[skip]" : (c.passed ? "[pass]" : "[FAIL]");
        text << mark << " " << c.name << ": " << c.detail << "\n";
    }
    for (const auto& w : warnings) text << "warning: " << w << "\n";
    for (const auto& f : failures) text << "failure: " << f << "\n";
    if (ok)
        text << "verify: PASS (" << applicable << " check" << (applicable == 1 ? "" : "s")
             << ")\n";
    else
        text << "verify: FAIL (" << failures.size() << " of " << applicable
             << " applicable checks failed)\n";
    return {std::move(report), text.str(), ok ? 0 : 4};
}

}  // namespace rlk
