#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "thinpos/instance_io.hpp"
#include "thinpos/oracle.hpp"
#include "thinpos/report.hpp"
#include "thinpos/search.hpp"

namespace {

using namespace thinpos;

std::string join_ints(const std::vector<int>& values) {
    std::string out;
    for (int v : values) {
        if (!out.empty()) out += ' ';
        out += std::to_string(v);
    }
    return out;
}

int run_width(const std::string& path) {
    const MorseWord word = parse_word_file(path);
    const bool link = word.is_link_word();
    std::cout << "width: " << width_graph(word) << '\n';
    const bool bridge = is_bridge_position(word);
    std::cout << "bridge position: " << (bridge ? "yes" : "no") << '\n';
    if (bridge && !word.empty()) {
        std::cout << "bridge number: " << bridge_number(word) << '\n';
    } else {
        std::cout << "bridge number: n/a (not a bridge position)" << '\n';
    }
    const WidthProfile profile = width_profile(word);
    std::cout << "profile: "
              << (profile.counts.empty() ? "(empty)" : join_ints(profile.counts))
              << '\n';
    if (link) {
        const LevelClasses classes = thin_thick_levels(profile);
        const auto levels_text = [&profile](const std::vector<int>& idx) {
            std::string out;
            for (int i : idx) {
                if (!out.empty()) out += ", ";
                out += std::to_string(i) + " (count " +
                       std::to_string(profile.counts[i]) + ")";
            }
            return out.empty() ? std::string("(none)") : out;
        };
        std::cout << "thin levels: " << levels_text(classes.thin) << '\n';
        std::cout << "thick levels: " << levels_text(classes.thick) << '\n';
    } else {
        std::cout << "thin levels: n/a (graph word)" << '\n';
        std::cout << "thick levels: n/a (graph word)" << '\n';
    }
    return 0;
}

int run_search(const std::string& path, bool no_prune, bool all_candidates,
               const std::string& format, int threads) {
    const Instance instance = parse_instance_file(path);
    SearchOptions options;
    options.prune = !no_prune;
    options.cut_with_bound = options.prune;
    options.threads = threads;
    const Report report = build_report(instance, options, all_candidates);
    std::cout << (format == "json" ? format_json(report) : format_table(report));
    return 0;
}

int run_oracle(const std::string& path, long long cap) {
    const Instance instance = parse_instance_file(path);
    const OracleResult result = oracle_search(instance, cap);
    std::cout << "instance: " << instance.name << '\n';
    for (std::size_t s = 0; s < result.per_system_min.size(); ++s) {
        std::cout << "system " << s << " min width: ";
        if (result.per_system_min[s]) {
            std::cout << *result.per_system_min[s] << '\n';
        } else {
            std::cout << "(no candidates)" << '\n';
        }
    }
    std::cout << "overall minimum: " << result.min_width << '\n';
    if (result.origin.is_baseline) {
        std::cout << "winner: baseline" << '\n';
    } else {
        std::cout << "winner: system " << result.origin.system_index << ", assignment "
                  << result.origin.assignment_signs << ", extension "
                  << result.origin.extension_rank << '\n';
    }
    std::cout << "winner profile: " << join_ints(result.profile) << '\n';
    std::cout << "widths evaluated: " << result.composes << '\n';
    return 0;
}

int run_validate(const std::string& path) {
    const std::vector<std::string> violations = validate_instance_file(path);
    for (const std::string& v : violations) std::cout << v << '\n';
    return violations.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"width and thin-position search for link presentations"};
    app.require_subcommand(1);

    std::string word_path;
    CLI::App* width_cmd =
        app.add_subcommand("width", "width and level data of an event word file");
    width_cmd->add_option("wordfile", word_path, "event word file")->required();

    std::string search_path;
    bool no_prune = false;
    bool all_candidates = false;
    std::string format = "table";
    int threads = 1;
    CLI::App* search_cmd =
        app.add_subcommand("search", "minimum-width candidate of an instance");
    search_cmd->add_option("instance", search_path, "instance file")->required();
    search_cmd->add_flag("--no-prune", no_prune, "enumerate without any filtering");
    search_cmd->add_flag("--all-candidates", all_candidates,
                         "list every distinct candidate profile");
    search_cmd->add_option("--format", format, "table or json")
        ->check(CLI::IsMember({"table", "json"}));
    search_cmd->add_option("--threads", threads, "worker threads")
        ->check(CLI::PositiveNumber);

    std::string oracle_path;
    long long cap = 10'000'000;
    CLI::App* oracle_cmd = app.add_subcommand(
        "oracle", "exhaustive minimum by the independent brute-force path");
    oracle_cmd->add_option("instance", oracle_path, "instance file")->required();
    oracle_cmd->add_option("--cap", cap, "enumeration cap")->check(CLI::PositiveNumber);

    std::string validate_path;
    CLI::App* validate_cmd =
        app.add_subcommand("validate", "list instance file violations");
    validate_cmd->add_option("instance", validate_path, "instance file")->required();

    std::string thick;
    long long thin = 0;
    std::string profile;
    CLI::App* bound_cmd = app.add_subcommand("bound", "width bound diagnostics");
    bound_cmd->add_option("--thick", thick,
                          "n1,n2: bound for thick levels meeting the link in "
                          "2*n1 and 2*n2 points");
    bound_cmd->add_option("--thin", thin,
                          "n: exclusion bound for a thin level met in 2n points");
    bound_cmd->add_option("--profile", profile, "sum a comma-separated profile");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (width_cmd->parsed()) return run_width(word_path);
        if (search_cmd->parsed())
            return run_search(search_path, no_prune, all_candidates, format, threads);
        if (oracle_cmd->parsed()) return run_oracle(oracle_path, cap);
        if (validate_cmd->parsed()) return run_validate(validate_path);
        if (bound_cmd->parsed()) {
            const auto parse_list = [](const std::string& text) {
                std::vector<long long> values;
                std::string item;
                std::istringstream in(text);
                while (std::getline(in, item, ',')) {
                    std::size_t used = 0;
                    values.push_back(std::stoll(item, &used));
                    if (used != item.size()) {
                        throw ParseError("bad number '" + item + "' in list");
                    }
                }
                return values;
            };
            bool any = false;
            if (!thick.empty()) {
                const std::vector<long long> values = parse_list(thick);
                if (values.size() != 2) {
                    std::cerr << "--thick expects exactly two values n1,n2\n";
                    return 1;
                }
                std::cout << lower_bound_thick(values[0], values[1]) << '\n';
                any = true;
            }
            if (thin > 0) {
                // Thick levels on both sides must exceed a thin level met in
                // 2n points, so each meets the link in at least 2(n+1) points.
                std::cout << lower_bound_thick(thin + 1, thin + 1) << '\n';
                any = true;
            }
            if (!profile.empty()) {
                long long sum = 0;
                for (long long c : parse_list(profile)) sum += c;
                std::cout << sum << '\n';
                any = true;
            }
            if (!any) {
                std::cerr << "bound: pass --thick n1,n2, --thin n or --profile ...\n";
                return 1;
            }
            return 0;
        }
    } catch (const InternalError& e) {
        std::cerr << "internal inconsistency: " << e.what() << '\n';
        return 2;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
