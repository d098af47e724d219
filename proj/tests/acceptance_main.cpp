// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every tolerance is pinned here; all checks are exact integer comparisons.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "thinpos/assembly.hpp"
#include "thinpos/instance_io.hpp"
#include "thinpos/oracle.hpp"
#include "thinpos/search.hpp"

#include "support.hpp"

namespace {

using namespace thinpos;
using Clock = std::chrono::steady_clock;

struct Criterion {
    std::string label;
    std::function<bool(std::string&)> run;
};

std::string instance_path(const std::string& name) {
    return std::string(THINPOS_INSTANCE_DIR) + "/" + name;
}

const std::vector<std::string> kBundled = {
    "baseline_only.json", "connected_sum.json", "nested_pair.json",
    "triple_sum.json", "pretzel6x3.json"};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

bool criterion_width_formulas(std::string& detail) {
    const auto start = Clock::now();
    for (int n = 1; n <= 32; ++n) {
        if (width_link(nbridge_word(n)) != 2LL * n * n) {
            detail = "width of the " + std::to_string(n) + "-bridge word is not 2n^2";
            return false;
        }
    }
    if (width_link(nbridge_word(6)) != 72) {
        detail = "6-bridge baseline width is not 72";
        return false;
    }
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 10000; ++trial) {
        const MorseWord word = testsupport::random_link_word(rng, 16);
        if (width_link(word) != width_link(reflect(word))) {
            detail = "reflection changed a width at trial " + std::to_string(trial);
            return false;
        }
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= 1.0) {
        detail = "runtime " + std::to_string(elapsed) + "s exceeds 1s";
        return false;
    }
    std::ostringstream out;
    out << "n=1..32 exact, 10000 reflections, " << elapsed << "s";
    detail = out.str();
    return true;
}

bool criterion_printed_arithmetic(std::string& detail) {
    const std::vector<int> profile = {2, 4, 6, 8, 6, 8, 6, 4, 2};
    long long direct = 0;
    for (int c : profile) direct += c;
    const long long via_word = width_link(testsupport::word_from_profile(profile));
    if (direct != 46 || via_word != 46) {
        detail = "nine-level profile sums to " + std::to_string(via_word) +
                 ", expected 46";
        return false;
    }
    // A thin level met in 8 points forces thick levels of at least 10 points
    // on both sides: bound 5*6 + 5*6 = 60.
    const long long exclusion = lower_bound_thick(4 + 1, 4 + 1);
    if (exclusion != 60) {
        detail = "exclusion bound for a thin level met in 8 points is " +
                 std::to_string(exclusion) + ", expected 60";
        return false;
    }
    detail = "profile sum 46; exclusion bound 60";
    return true;
}

bool criterion_thick_bound(std::string& detail) {
    std::mt19937 rng(54321);
    long long qualifying = 0;
    long long attempts = 0;
    while (qualifying < 10000) {
        if (++attempts > 2000000) {
            detail = "could not generate enough two-thick-level profiles";
            return false;
        }
        const MorseWord word = testsupport::random_link_word(rng, 16);
        const WidthProfile profile = width_profile(word);
        const LevelClasses classes = thin_thick_levels(profile);
        if (classes.thick.size() < 2) continue;
        ++qualifying;
        const long long n_top = profile.counts[classes.thick.back()] / 2;
        const long long n_bottom = profile.counts[classes.thick.front()] / 2;
        if (width_link(word) < lower_bound_thick(n_top, n_bottom)) {
            detail = "violation at qualifying sample " + std::to_string(qualifying);
            return false;
        }
    }
    detail = "10000 qualifying profiles, zero violations";
    return true;
}

bool criterion_oracle_equivalence(std::string& detail) {
    const auto start = Clock::now();
    for (const std::string& name : kBundled) {
        const Instance instance = parse_instance_file(instance_path(name));
        const std::vector<Candidate> pruned = build_candidate_set(instance, true);
        const Candidate& winner = min_width(pruned);
        const OracleResult oracle = oracle_search(instance);
        if (winner.width != oracle.min_width ||
            winner.profile.counts != oracle.profile) {
            detail = name + ": pruned search returned width " +
                     std::to_string(winner.width) + ", oracle " +
                     std::to_string(oracle.min_width);
            return false;
        }
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= 10.0) {
        detail = "runtime " + std::to_string(elapsed) + "s exceeds 10s";
        return false;
    }
    std::ostringstream out;
    out << kBundled.size() << " instances, equal minima and profiles, " << elapsed
        << "s";
    detail = out.str();
    return true;
}

bool criterion_connected_sum(std::string& detail) {
    const Instance instance = parse_instance_file(instance_path("connected_sum.json"));
    const std::vector<Candidate> candidates = build_candidate_set(instance, true);
    const long long baseline = candidates.front().width;
    const Candidate& winner = min_width(candidates);
    if (baseline != 18) {
        detail = "baseline width is " + std::to_string(baseline) + ", expected 18";
        return false;
    }
    if (winner.width != 14 || winner.width >= baseline) {
        detail = "minimum width is " + std::to_string(winner.width) + ", expected 14";
        return false;
    }
    detail = "minimum 14 strictly below baseline 18";
    return true;
}

bool criterion_pretzel(std::string& detail) {
    const Instance instance = parse_instance_file(instance_path("pretzel6x3.json"));
    const std::vector<Candidate> candidates = build_candidate_set(instance, true);
    const long long baseline = candidates.front().width;
    const Candidate& winner = min_width(candidates);
    if (baseline != 72) {
        detail = "baseline width is " + std::to_string(baseline) + ", expected 72";
        return false;
    }
    if (winner.width != 48) {
        detail = "overall minimum is " + std::to_string(winner.width) + ", expected 48";
        return false;
    }
    if (winner.origin.is_baseline) {
        detail = "winner is the baseline, expected a composite candidate";
        return false;
    }
    detail = "minimum 48 strictly below baseline 72, composite winner";
    return true;
}

bool criterion_conservation(std::string& detail) {
    long long checked = 0;
    for (const std::string& name : kBundled) {
        const Instance instance = parse_instance_file(instance_path(name));
        const std::vector<Candidate> candidates = build_candidate_set(instance, false);
        for (const Candidate& candidate : candidates) {
            const ComposedPresentation& cp = candidate.presentation;
            const std::vector<int> rc = running_counts(cp.word);
            for (std::size_t b = 1; b < cp.blocks.size(); ++b) {
                const std::size_t boundary = cp.blocks[b].begin;
                const long long scanned = boundary == 0 ? 0 : rc[boundary - 1];
                if (scanned != cp.gap_counts[b - 1]) {
                    detail = name + ": inter-block count " + std::to_string(scanned) +
                             " differs from crossing count " +
                             std::to_string(cp.gap_counts[b - 1]);
                    return false;
                }
            }
            try {
                const WidthBreakdown parts = decompose_width(cp);
                if (parts.total() != cp.total_width) {
                    detail = name + ": structural width differs from scanned width";
                    return false;
                }
            } catch (const InternalError& e) {
                detail = name + ": " + e.what();
                return false;
            }
            ++checked;
        }
    }
    detail = std::to_string(checked) + " composed candidates, zero mismatches";
    return true;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"n-bridge width formula and reflection invariance", criterion_width_formulas},
        {"printed arithmetic: nine-level profile 46, exclusion bound 60",
         criterion_printed_arithmetic},
        {"two-thick-level width bound on 10000 random profiles", criterion_thick_bound},
        {"pruned search equals the exhaustive oracle on bundled instances",
         criterion_oracle_equivalence},
        {"connected sum reaches width 14 below its baseline 18", criterion_connected_sum},
        {"pretzel reaches width 48 below its baseline 72", criterion_pretzel},
        {"conservation and structural width on every composed candidate",
         criterion_conservation},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string detail;
        bool pass = false;
        try {
            pass = criteria[i].run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("[%s] %zu. %s: %s\n", pass ? "PASS" : "FAIL", i + 1,
                    criteria[i].label.c_str(), detail.c_str());
        if (!pass) ++failures;
    }
    if (failures > 0) {
        std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    } else {
        std::printf("all %zu criteria passed\n", criteria.size());
    }
    return failures == 0 ? 0 : 1;
}
