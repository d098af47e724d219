#pragma once

/*******************************************************************************

Brute-force verification oracle.

An independent, simpler search path used to cross-check the pruned one: it
walks every permutation of the regions with std::next_permutation, keeps the
ones compatible with the sign assignment by direct position comparison, and
recomputes every width by a raw prefix-sum scan. No admissibility filter, no
bound cutting, no shared composition code.

Permutations are generated in lexicographic order over region ids, so the
compatible ones appear in exactly the canonical extension order of the main
search and ties resolve identically.

*******************************************************************************/

#include <optional>
#include <vector>

#include "thinpos/search.hpp"

namespace thinpos {

struct OracleResult {
    long long min_width = 0;
    std::vector<int> profile;  // winning profile, bottom to top
    CandidateOrigin origin;
    std::vector<std::optional<long long>> per_system_min;
    long long composes = 0;  // widths actually evaluated
};

// Exhaustive minimum over the unpruned candidate set. Throws CapExceeded
// when the enumeration upper bound (2^m * (m+1)! summed over systems)
// exceeds compose_cap.
OracleResult oracle_search(const Instance& instance,
                           long long compose_cap = 10'000'000);

}  // namespace thinpos
