#pragma once

/*******************************************************************************

Deterministic reports over a search run.

Per-system candidate and admissible counts come from a separate counting
pass, so they are identical whether or not branches were cut. Profile rows
group candidates with equal width profiles and report a multiplicity. Output
is byte-identical across runs and thread counts.

*******************************************************************************/

#include <optional>
#include <string>
#include <vector>

#include "thinpos/search.hpp"

namespace thinpos {

struct ProfileRow {
    long long width = 0;
    std::vector<int> profile;
    long long multiplicity = 0;
};

struct SystemReport {
    int system_index = 0;
    int sphere_count = 0;
    long long candidate_count = 0;   // compatible (assignment, order) pairs
    long long admissible_count = 0;  // pairs from fully admissible assignments
    std::optional<long long> min_width;
    CandidateOrigin winner;
    std::vector<int> winning_profile;
    std::vector<long long> winning_gap_counts;
    long long winning_multiplicity = 0;
    std::vector<ProfileRow> profiles;  // filled when all_candidates is set
};

struct Report {
    std::string instance_name;
    int bridge_index = 1;
    bool pruned = true;
    bool all_candidates = false;
    long long baseline_width = 0;
    std::vector<SystemReport> systems;
    long long overall_min_width = 0;
    CandidateOrigin winner;
    std::vector<int> winner_profile;
};

Report build_report(const Instance& instance, const SearchOptions& options,
                    bool all_candidates);

std::string format_table(const Report& report);
std::string format_json(const Report& report);

}  // namespace thinpos
