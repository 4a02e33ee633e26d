#include "rlk/config.hpp"

#include <array>
#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace rlk {

namespace {

using njson = nlohmann::ordered_json;

constexpr std::array<std::pair<const char*, bool AdmissibilityFlags::*>, 5> kFlagFields = {{
    {"reduced_meets_nodes", &AdmissibilityFlags::reduced_meets_nodes},
    {"smooth_locus_connected", &AdmissibilityFlags::smooth_locus_connected},
    {"rank_one_locally_constant", &AdmissibilityFlags::rank_one_locally_constant},
    {"variation_by_specialization", &AdmissibilityFlags::variation_by_specialization},
    {"locally_trivial_along_smooth_locus", &AdmissibilityFlags::locally_trivial_along_smooth_locus},
}};

const njson& expect_object(const njson& j, const std::string& where) {
    if (!j.is_object()) throw SchemaError(where + ": expected an object");
    return j;
}

const njson& expect_array(const njson& j, const std::string& where) {
    if (!j.is_array()) throw SchemaError(where + ": expected an array");
    return j;
}

void check_keys(const njson& j, const std::string& where, const std::vector<std::string>& required,
                const std::vector<std::string>& optional) {
    for (const auto& item : j.items()) {
        const std::string& key = item.key();
        bool known = false;
        for (const auto& k : required) known = known || k == key;
        for (const auto& k : optional) known = known || k == key;
        if (!known) throw SchemaError(where + ": unknown key '" + key + "'");
    }
    for (const auto& k : required)
        if (!j.contains(k)) throw SchemaError(where + ": missing key '" + k + "'");
}

Rational parse_rational(const njson& j, const std::string& where) {
    if (j.is_number_unsigned()) return Rational::parse(std::to_string(j.get<unsigned long long>()));
    if (j.is_number_integer()) return Rational::parse(std::to_string(j.get<long long>()));
    if (j.is_number_float())
        throw ValueError(where + ": decimal literal '" + j.dump() + "' rejected; use p/q form");
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const ValueError& e) {
            throw ValueError(where + ": " + e.what());
        }
    }
    throw SchemaError(where + ": expected an integer or a \"p/q\" string");
}

RationalVector parse_vector(const njson& j, const std::string& where) {
    expect_array(j, where);
    RationalVector v;
    v.reserve(j.size());
    int i = 0;
    for (const auto& entry : j) {
        v.push_back(parse_rational(entry, where + "[" + std::to_string(i) + "]"));
        ++i;
    }
    return v;
}

RationalVector parse_nodewise_vector(const njson& j, const std::string& where, int n) {
    RationalVector v = parse_vector(j, where);
    if (static_cast<int>(v.size()) != n)
        throw ValueError(where + ": length " + std::to_string(v.size()) +
                         " does not match node count " + std::to_string(n));
    return v;
}

AdmissibilityFlags parse_flags(const njson& j, const std::string& where) {
    expect_object(j, where);
    std::vector<std::string> allowed;
    for (const auto& [key, member] : kFlagFields) allowed.emplace_back(key);
    check_keys(j, where, {}, allowed);
    AdmissibilityFlags flags;
    for (const auto& [key, member] : kFlagFields) {
        if (!j.contains(key)) continue;
        const njson& v = j.at(key);
        if (!v.is_boolean()) throw SchemaError(where + "." + key + ": expected a boolean");
        flags.*member = v.get<bool>();
    }
    return flags;
}

SideAssignment parse_side(Side side, const njson& j, const std::string& where, int n) {
    expect_object(j, where);
    check_keys(j, where, {}, {"labels", "matrix"});
    const bool has_labels = j.contains("labels");
    const bool has_matrix = j.contains("matrix");
    if (has_labels == has_matrix)
        throw SchemaError(where + ": exactly one of 'labels' or 'matrix' is required");
    if (has_labels) {
        const njson& arr = expect_array(j.at("labels"), where + ".labels");
        std::vector<std::string> labels;
        for (const auto& entry : arr) {
            if (!entry.is_string()) throw SchemaError(where + ".labels: expected strings");
            labels.push_back(entry.get<std::string>());
        }
        if (static_cast<int>(labels.size()) != n)
            throw ValueError(where + ".labels: length " + std::to_string(labels.size()) +
                             " does not match node count " + std::to_string(n));
        return SideAssignment::from_labels(side, std::move(labels));
    }
    const njson& arr = expect_array(j.at("matrix"), where + ".matrix");
    std::vector<RationalVector> rows;
    int i = 0;
    for (const auto& row : arr) {
        const std::string row_where = where + ".matrix[" + std::to_string(i) + "]";
        RationalVector r = parse_vector(row, row_where);
        if (static_cast<int>(r.size()) != n)
            throw ValueError(row_where + ": length " + std::to_string(r.size()) +
                             " does not match node count " + std::to_string(n));
        rows.push_back(std::move(r));
        ++i;
    }
    return SideAssignment::from_matrix(side, Matrix::from_rows(rows, n));
}

njson render_rational(const Rational& r) {
    if (r.is_integer() && r.numerator().fits_slong_p()) return njson(r.numerator().get_si());
    return njson(r.str());
}

njson render_vector(const RationalVector& v) {
    njson arr = njson::array();
    for (const auto& x : v) arr.push_back(render_rational(x));
    return arr;
}

njson render_side(const SideAssignment& s) {
    njson out = njson::object();
    if (s.mode == SideMode::Labels) {
        out["labels"] = s.labels;
    } else {
        njson rows = njson::array();
        for (int i = 0; i < s.explicit_matrix.rows(); ++i)
            rows.push_back(render_vector(s.explicit_matrix.row(i)));
        out["matrix"] = std::move(rows);
    }
    return out;
}

}  // namespace

Configuration parse_config(const std::string& text) {
    njson doc;
    try {
        doc = njson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    expect_object(doc, "config");
    check_keys(doc, "config", {"nodes", "cycles"},
               {"corrected_class", "mhm_class", "realization_diag", "sides", "group_action",
                "q_geom_complement"});

    Configuration cfg;

    const njson& nodes = expect_array(doc.at("nodes"), "nodes");
    for (const auto& entry : nodes) {
        if (!entry.is_string()) throw SchemaError("nodes: expected strings");
        cfg.datum.node_labels.push_back(entry.get<std::string>());
    }
    const int n = static_cast<int>(cfg.datum.node_labels.size());

    const njson& cycles = expect_array(doc.at("cycles"), "cycles");
    std::vector<RationalVector> rows;
    int ci = 0;
    for (const auto& cyc : cycles) {
        const std::string where = "cycles[" + std::to_string(ci) + "]";
        expect_object(cyc, where);
        check_keys(cyc, where, {"label", "incidence_row"}, {"admissibility"});
        if (!cyc.at("label").is_string()) throw SchemaError(where + ".label: expected a string");
        cfg.datum.cycle_labels.push_back(cyc.at("label").get<std::string>());
        rows.push_back(parse_nodewise_vector(cyc.at("incidence_row"), where + ".incidence_row", n));
        cfg.datum.cycle_flags.push_back(
            cyc.contains("admissibility") ? parse_flags(cyc.at("admissibility"), where + ".admissibility")
                                          : AdmissibilityFlags{});
        ++ci;
    }
    cfg.datum.matrix = Matrix::from_rows(rows, n);
    cfg.datum.validate();

    if (doc.contains("corrected_class"))
        cfg.corrected_class = parse_nodewise_vector(doc.at("corrected_class"), "corrected_class", n);
    if (doc.contains("mhm_class"))
        cfg.mhm_class = parse_nodewise_vector(doc.at("mhm_class"), "mhm_class", n);
    if (doc.contains("realization_diag")) {
        RationalVector diag = parse_nodewise_vector(doc.at("realization_diag"), "realization_diag", n);
        for (const auto& x : diag)
            if (x.is_zero()) throw ValueError("realization_diag: entries must be nonzero");
        cfg.realization_diag = std::move(diag);
    }
    if (doc.contains("sides")) {
        const njson& sides = expect_object(doc.at("sides"), "sides");
        check_keys(sides, "sides", {}, {"res", "sm", "ext"});
        if (sides.contains("res")) cfg.res = parse_side(Side::Resolution, sides.at("res"), "sides.res", n);
        if (sides.contains("sm")) cfg.sm = parse_side(Side::Smoothing, sides.at("sm"), "sides.sm", n);
        if (sides.contains("ext")) cfg.ext = parse_side(Side::Extension, sides.at("ext"), "sides.ext", n);
    }
    if (doc.contains("group_action")) {
        const njson& gens = expect_array(doc.at("group_action"), "group_action");
        GroupAction action;
        int gi = 0;
        for (const auto& gen : gens) {
            const std::string where = "group_action[" + std::to_string(gi) + "]";
            expect_array(gen, where);
            std::vector<int> perm;
            for (const auto& entry : gen) {
                if (!entry.is_number_integer())
                    throw SchemaError(where + ": expected 1-based integer images");
                perm.push_back(entry.get<int>() - 1);
            }
            action.generators.push_back(std::move(perm));
            ++gi;
        }
        action.validate(n);
        cfg.group_action = std::move(action);
    }
    if (doc.contains("q_geom_complement")) {
        const njson& arr = expect_array(doc.at("q_geom_complement"), "q_geom_complement");
        std::vector<RationalVector> basis;
        int bi = 0;
        for (const auto& row : arr) {
            basis.push_back(
                parse_nodewise_vector(row, "q_geom_complement[" + std::to_string(bi) + "]", n));
            ++bi;
        }
        cfg.q_geom_complement = std::move(basis);
    }
    return cfg;
}

std::string serialize_config(const Configuration& cfg) {
    njson out = njson::object();
    out["nodes"] = cfg.datum.node_labels;
    njson cycles = njson::array();
    for (int i = 0; i < cfg.datum.cycle_count(); ++i) {
        njson cyc = njson::object();
        cyc["label"] = cfg.datum.cycle_labels[static_cast<size_t>(i)];
        cyc["incidence_row"] = render_vector(cfg.datum.matrix.row(i));
        const AdmissibilityFlags& flags = cfg.datum.cycle_flags[static_cast<size_t>(i)];
        njson fl = njson::object();
        for (const auto& [key, member] : kFlagFields)
            if (flags.*member) fl[key] = true;
        if (!fl.empty()) cyc["admissibility"] = std::move(fl);
        cycles.push_back(std::move(cyc));
    }
    out["cycles"] = std::move(cycles);
    if (cfg.corrected_class) out["corrected_class"] = render_vector(*cfg.corrected_class);
    if (cfg.mhm_class) out["mhm_class"] = render_vector(*cfg.mhm_class);
    if (cfg.realization_diag) out["realization_diag"] = render_vector(*cfg.realization_diag);
    if (cfg.res || cfg.sm || cfg.ext) {
        njson sides = njson::object();
        if (cfg.res) sides["res"] = render_side(*cfg.res);
        if (cfg.sm) sides["sm"] = render_side(*cfg.sm);
        if (cfg.ext) sides["ext"] = render_side(*cfg.ext);
        out["sides"] = std::move(sides);
    }
    if (cfg.group_action) {
        njson gens = njson::array();
        for (const auto& perm : cfg.group_action->generators) {
            njson g = njson::array();
            for (int image : perm) g.push_back(image + 1);
            gens.push_back(std::move(g));
        }
        out["group_action"] = std::move(gens);
    }
    if (cfg.q_geom_complement) {
        njson basis = njson::array();
        for (const auto& row : *cfg.q_geom_complement) basis.push_back(render_vector(row));
        out["q_geom_complement"] = std::move(basis);
    }
    return out.dump(2) + "\n";
}

Configuration load_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("error while reading config file '" + path + "'");
    return parse_config(buf.str());
}

}  // namespace rlk
