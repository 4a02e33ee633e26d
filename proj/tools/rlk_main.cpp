#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rlk/commands.hpp"

namespace {

int emit(const rlk::CommandResult& result, bool json, bool quiet) {
    if (!quiet) {
        if (json)
            std::cout << result.report.dump(2) << "\n";
        else
            std::cout << result.text;
    }
    return result.exit_code;
}

int enumeration_guard() {
    const char* env = std::getenv("RLK_ENUM_GUARD");
    if (env == nullptr || *env == '\0') return rlk::kDefaultEnumerationGuard;
    try {
        size_t used = 0;
        const int value = std::stoi(env, &used);
        if (used != std::string(env).size() || value < 0)
            throw rlk::ValueError("RLK_ENUM_GUARD must be a nonnegative integer");
        return value;
    } catch (const std::logic_error&) {
        throw rlk::ValueError("RLK_ENUM_GUARD must be a nonnegative integer");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"relation-lattice toolkit for finite-node conifold configurations"};
    app.require_subcommand(1);
    app.fallthrough();  // lets --json/--quiet appear after the subcommand
    bool json = false;
    bool quiet = false;
    app.add_flag("--json", json, "print the structured JSON report instead of text");
    app.add_flag("--quiet", quiet, "print nothing; the exit code carries the verdict");

    std::string analyze_path;
    CLI::App* analyze =
        app.add_subcommand("analyze", "blocks, dimensions, admissibility, class checks");
    analyze->add_option("config", analyze_path, "configuration file")->required();

    std::string compare_path;
    CLI::App* compare =
        app.add_subcommand("compare", "side lattices, compatibility, the common-lattice identity");
    compare->add_option("config", compare_path, "configuration file")->required();

    int part_n = 0;
    int part_k = -1;
    std::vector<int> part_profile;
    bool part_list = false;
    CLI::App* partitions =
        app.add_subcommand("partitions", "set-partition counts and the guarded listing");
    partitions->add_option("n", part_n, "number of nodes")->required();
    partitions->add_option("--k", part_k, "restrict to k blocks");
    partitions->add_option("--profile", part_profile, "restrict to a block-size profile")
        ->delimiter(',');
    partitions->add_flag("--list", part_list, "list the partitions themselves");

    std::string quiver_path;
    std::string quiver_flavor;
    std::string quiver_out;
    CLI::App* quiver = app.add_subcommand("quiver", "render the bulk-sector shadow as DOT");
    quiver->add_option("config", quiver_path, "configuration file")->required();
    quiver->add_option("--flavor", quiver_flavor, "node or block")
        ->required()
        ->check(CLI::IsMember({"node", "block"}));
    quiver->add_option("--out", quiver_out, "output DOT file")->required();

    std::string verify_path;
    CLI::App* verify =
        app.add_subcommand("verify", "assert every applicable structure theorem on the instance");
    verify->add_option("config", verify_path, "configuration file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze)
            return emit(rlk::cmd_analyze(rlk::load_config_file(analyze_path)), json, quiet);
        if (*compare)
            return emit(rlk::cmd_compare(rlk::load_config_file(compare_path)), json, quiet);
        if (*partitions) {
            rlk::PartitionsRequest req;
            req.n = part_n;
            if (partitions->count("--k") > 0) req.k = part_k;
            if (partitions->count("--profile") > 0) req.profile = part_profile;
            req.list = part_list;
            req.guard = enumeration_guard();
            return emit(rlk::cmd_partitions(req), json, quiet);
        }
        if (*quiver) {
            const rlk::QuiverFlavor flavor =
                quiver_flavor == "node" ? rlk::QuiverFlavor::Node : rlk::QuiverFlavor::Block;
            return emit(rlk::cmd_quiver(rlk::load_config_file(quiver_path), flavor, quiver_out),
                        json, quiet);
        }
        if (*verify)
            return emit(rlk::cmd_verify(rlk::load_config_file(verify_path)), json, quiet);
    } catch (const rlk::HypothesisFailed& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const rlk::TooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const rlk::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const rlk::Error& e) {
        // Parse, schema, value, shape, and missing-side problems: bad input.
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
