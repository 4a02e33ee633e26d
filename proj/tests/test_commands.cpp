#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "rlk/commands.hpp"

using namespace rlk;

namespace {

std::string config_path(const char* name) { return std::string(RLK_CONFIG_DIR) + "/" + name; }

std::string data_path(const char* name) { return std::string(RLK_TEST_DATA_DIR) + "/" + name; }

Configuration bundled(const char* name) { return load_config_file(config_path(name)); }

}  // namespace

TEST_CASE("analyze reproduces the dimension table on the bundled configs") {
    const struct {
        const char* file;
        int node, geom, e_geom;
    } rows[] = {
        {"two_node_common_cycle.json", 2, 1, 1},
        {"three_node_two_classes.json", 3, 2, 2},
        {"four_node_overlapping_cycles.json", 4, 2, 2},
    };
    for (const auto& row : rows) {
        CAPTURE(row.file);
        const CommandResult res = cmd_analyze(bundled(row.file));
        CHECK(res.exit_code == 0);
        CHECK(res.report["dims"]["node"] == row.node);
        CHECK(res.report["dims"]["geom"] == row.geom);
        CHECK(res.report["dims"]["e_geom"] == row.e_geom);
    }
}

TEST_CASE("analyze flags and class check on the two-node config") {
    const CommandResult res = cmd_analyze(bundled("two_node_common_cycle.json"));
    CHECK(res.report["flags"]["block_adapted"] == true);
    CHECK(res.report["flags"]["admissible"] == true);
    CHECK(res.report["flags"]["rigid"] == true);
    CHECK(res.report["class_check"]["propagation_ok"] == true);
    CHECK(res.report["class_check"]["in_e_geom"] == true);
    CHECK(res.report["warnings"].empty());
}

TEST_CASE("analyze warns when the datum is not block-adapted") {
    const CommandResult res = cmd_analyze(bundled("four_node_overlapping_cycles.json"));
    CHECK(res.report["flags"]["block_adapted"] == false);
    REQUIRE(!res.report["warnings"].empty());
    const std::string w = res.report["warnings"][0].get<std::string>();
    CHECK(w.find("not block-adapted") != std::string::npos);
}

TEST_CASE("analyze output is deterministic") {
    const Configuration cfg = bundled("three_node_two_classes.json");
    const CommandResult a = cmd_analyze(cfg);
    const CommandResult b = cmd_analyze(cfg);
    CHECK(a.report.dump() == b.report.dump());
    CHECK(a.text == b.text);
}

TEST_CASE("compare on a one-block config reports the four-way equality") {
    const CommandResult res = cmd_compare(bundled("quintic_symmetric_pair.json"));
    CHECK(res.exit_code == 0);
    CHECK(res.report["sides"]["ext"] == "block quotient (defaulted)");
    CHECK(res.report["identity_holds"] == true);
    CHECK(res.report["block_separated"]["all_passed"] == true);
    CHECK(res.report["equality"]["verdict"] == "R_res=R_sm=R_ext=R_blk");
    CHECK(res.report["equality"]["holds"] == true);
    CHECK(res.report["equality"]["block_count"] == 1);
    CHECK(res.report["dims"]["r_geom"] == 1);
}

TEST_CASE("compare names the failing hypothesis on overlapping cycles") {
    const CommandResult res = cmd_compare(bundled("four_node_overlapping_cycles.json"));
    CHECK(res.exit_code == 0);
    CHECK(res.report["block_separated"]["all_passed"] == false);
    bool saw_first = false;
    for (const auto& cond : res.report["block_separated"]["conditions"]) {
        if (cond["name"].get<std::string>().find("(1)(2)") != std::string::npos) {
            saw_first = true;
            CHECK(cond["passed"] == false);
        }
    }
    CHECK(saw_first);
    CHECK(!res.report.contains("equality"));
    CHECK(res.text.find("(1)(2)") != std::string::npos);
}

TEST_CASE("compare requires sides") {
    Configuration cfg = bundled("two_node_common_cycle.json");
    cfg.res.reset();
    CHECK_THROWS_AS(cmd_compare(cfg), MissingSides);

    // Without ext, a non-adapted datum has no default extension side.
    Configuration overlap = bundled("four_node_overlapping_cycles.json");
    overlap.ext.reset();
    CHECK_THROWS_AS(cmd_compare(overlap), MissingSides);

    // A block-adapted one does.
    Configuration adapted = bundled("three_node_two_classes.json");
    adapted.ext.reset();
    const CommandResult res = cmd_compare(adapted);
    CHECK(res.report["sides"]["ext"] == "block quotient (defaulted)");
    CHECK(res.report["equality"]["holds"] == true);
}

TEST_CASE("partitions command prints the counting values") {
    PartitionsRequest req;
    req.n = 4;
    req.k = 2;
    CommandResult res = cmd_partitions(req);
    CHECK(res.text.find("B_4 = 15") != std::string::npos);
    CHECK(res.text.find("S(4,2) = 7") != std::string::npos);
    CHECK(res.report["bell"] == "15");
    CHECK(res.report["stirling"]["value"] == "7");

    PartitionsRequest prof;
    prof.n = 3;
    prof.profile = std::vector<int>{2, 1};
    res = cmd_partitions(prof);
    CHECK(res.text.find("N = 3") != std::string::npos);
    CHECK(res.report["profile"]["multiplicity"] == "3");
}

TEST_CASE("partitions listing respects the guard") {
    PartitionsRequest req;
    req.n = 4;
    req.k = 2;
    req.list = true;
    const CommandResult res = cmd_partitions(req);
    CHECK(res.report["listing"].size() == 7);
    for (const auto& row : res.report["listing"]) {
        CHECK(row["blocks"] == 2);
        CHECK(row["dimension_law"]["node"] == 4);
        CHECK(row["dimension_law"]["geom"] == 2);
        CHECK(row["dimension_law"]["rel"] == 2);
    }

    PartitionsRequest big;
    big.n = 5;
    big.list = true;
    big.guard = 4;
    CHECK_THROWS_AS(cmd_partitions(big), TooLarge);
    big.guard = 5;
    CHECK(cmd_partitions(big).report["listing"].size() == 52);

    // Counts stay unguarded.
    PartitionsRequest counts;
    counts.n = 20;
    counts.guard = 4;
    CHECK(cmd_partitions(counts).exit_code == 0);
}

TEST_CASE("quiver command renders DOT and reports the coupling dimension") {
    const CommandResult res =
        cmd_quiver(bundled("three_node_two_classes.json"), QuiverFlavor::Block, std::nullopt);
    CHECK(res.report["coupling_dim"] == 2);
    CHECK(res.report["vertex_count"] == 3);
    const std::string dot = res.report["dot"].get<std::string>();
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("doublecircle") != std::string::npos);
    CHECK(dot.find("coupling_dim = 2") != std::string::npos);
    CHECK(res.text.find("coupling_dim = 2") != std::string::npos);

    const CommandResult node =
        cmd_quiver(bundled("two_node_common_cycle.json"), QuiverFlavor::Node, std::nullopt);
    CHECK(node.report["vertex_count"] == 3);
    CHECK(node.report["coupling_dim"] == 2);
}

TEST_CASE("quiver command writes the DOT file") {
    const std::string path = "test_commands_quiver.dot";
    const CommandResult res =
        cmd_quiver(bundled("three_node_two_classes.json"), QuiverFlavor::Block, path);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string contents((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(contents == res.report["dot"].get<std::string>());
    std::remove(path.c_str());
}

TEST_CASE("quiver on the empty configuration is bulk-only") {
    const Configuration cfg = parse_config(R"({"nodes":[],"cycles":[]})");
    const CommandResult res = cmd_quiver(cfg, QuiverFlavor::Node, std::nullopt);
    CHECK(res.report["vertex_count"] == 1);
    CHECK(res.report["arrow_count"] == 0);
    CHECK(res.report["coupling_dim"] == 0);
}

TEST_CASE("verify passes on every bundled config") {
    for (const char* name : {"two_node_common_cycle.json", "three_node_two_classes.json",
                             "four_node_overlapping_cycles.json", "quintic_symmetric_pair.json"}) {
        CAPTURE(name);
        const CommandResult res = cmd_verify(bundled(name));
        CHECK(res.exit_code == 0);
        CHECK(res.report["ok"] == true);
        CHECK(res.report["failures"].empty());
    }
}

TEST_CASE("verify rejects a tampered class with a machine-readable failure") {
    const CommandResult res = cmd_verify(load_config_file(data_path("tampered_two_node.json")));
    CHECK(res.exit_code == 4);
    CHECK(res.report["ok"] == false);
    bool saw = false;
    for (const auto& f : res.report["failures"])
        if (f.get<std::string>() == "propagation_ok=false") saw = true;
    CHECK(saw);
    CHECK(res.text.find("propagation_ok=false") != std::string::npos);
}

TEST_CASE("verify skips the class checks that the instance cannot force") {
    // Same column on both nodes, but the only cycle is inadmissible: the
    // incidence block does not refine the propagation blocks, so incidence
    // constancy and membership stay unasserted.
    const Configuration cfg = parse_config(R"({
      "nodes": ["a", "b"],
      "cycles": [{"label": "C", "incidence_row": [1, 1]}],
      "corrected_class": [1, 2]
    })");
    const CommandResult res = cmd_verify(cfg);
    CHECK(res.exit_code == 0);
    for (const auto& check : res.report["checks"]) {
        if (check["name"] == "incidence_ok" || check["name"] == "in_e_geom")
            CHECK(check["applicable"] == false);
        if (check["name"] == "propagation_ok") CHECK(check["passed"] == true);
    }
}

TEST_CASE("verify checks the realization only when the full triple is present") {
    Configuration cfg = bundled("two_node_common_cycle.json");
    const CommandResult ok = cmd_verify(cfg);
    bool saw = false;
    for (const auto& check : ok.report["checks"])
        if (check["name"] == "realization_matches") {
            saw = true;
            CHECK(check["passed"] == true);
        }
    CHECK(saw);

    cfg.realization_diag = RationalVector{3, 3};  // wrong scaling
    const CommandResult bad = cmd_verify(cfg);
    CHECK(bad.exit_code == 4);
    bool failed = false;
    for (const auto& f : bad.report["failures"])
        if (f.get<std::string>() == "realization_matches=false") failed = true;
    CHECK(failed);

    cfg.realization_diag.reset();
    const CommandResult skipped = cmd_verify(cfg);
    CHECK(skipped.exit_code == 0);
    for (const auto& check : skipped.report["checks"])
        CHECK(check["name"] != "realization_matches");
}

TEST_CASE("verify flags a broken symmetry action") {
    Configuration cfg = bundled("quintic_symmetric_pair.json");
    cfg.group_action = GroupAction{{{0, 1}}};  // identity: orbits are singletons
    const CommandResult res = cmd_verify(cfg);
    CHECK(res.exit_code == 4);
    bool saw = false;
    for (const auto& f : res.report["failures"])
        if (f.get<std::string>() == "orbit_blocks_match=false") saw = true;
    CHECK(saw);
}
