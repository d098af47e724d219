#pragma once

/*******************************************************************************

Candidate enumeration and the minimum-width search.

The candidate set of an instance consists of the n-bridge baseline (width
2n^2) plus, for every surface system, every sign assignment and every
compatible stacking order, the composed presentation. The search returns the
first candidate of minimum width in canonical order: baseline, then system
index, assignment index, extension rank.

Pruning drops assignments in which some region's graph row is inadmissible
(wrong critical-point shape, or flagged as admitting a thinner
presentation), and cuts stacking-order branches whose partial width already
exceeds the best width found in the same system. Cutting never removes a
candidate that ties its system's minimum, so minima, winners and winning
multiplicities are identical with and without it, for any thread count.

*******************************************************************************/

#include <optional>
#include <string>
#include <vector>

#include "thinpos/assembly.hpp"
#include "thinpos/decomposition.hpp"
#include "thinpos/errors.hpp"
#include "thinpos/graph.hpp"
#include "thinpos/morse.hpp"

namespace thinpos {

struct SurfaceSystemData {
    SphereSystem system;
    GraphTable table;

    friend bool operator==(const SurfaceSystemData&, const SurfaceSystemData&) = default;
};

struct Instance {
    std::string name;
    int bridge_index = 1;
    std::vector<SurfaceSystemData> systems;

    friend bool operator==(const Instance&, const Instance&) = default;
};

struct CandidateOrigin {
    bool is_baseline = false;
    int system_index = -1;
    long long assignment_index = -1;
    std::string assignment_signs;
    long long extension_rank = -1;

    friend bool operator==(const CandidateOrigin&, const CandidateOrigin&) = default;
};

struct Candidate {
    CandidateOrigin origin;
    ComposedPresentation presentation;
    long long width = 0;
    WidthProfile profile;
};

// n1(n1+1) + n2(n2+1): a presentation with two thick levels meeting the link
// in 2*n1 and 2*n2 points is at least this wide.
long long lower_bound_thick(long long n1, long long n2);

struct SearchOptions {
    bool prune = true;
    // Cut stacking-order branches against the best width so far. Only the
    // non-minimal part of the returned set depends on this.
    bool cut_with_bound = true;
    int threads = 1;
};

// Candidates in canonical order, baseline first. With prune=true,
// inadmissible assignments are skipped and dominated branches may be cut;
// with prune=false the full set is returned.
std::vector<Candidate> build_candidate_set(const Instance& instance,
                                           const SearchOptions& options);
std::vector<Candidate> build_candidate_set(const Instance& instance, bool prune);

// First candidate of minimum width. Throws EmptyCandidateSet.
const Candidate& min_width(const std::vector<Candidate>& candidates);

// The baseline candidate alone.
Candidate baseline_candidate(int bridge_index);

}  // namespace thinpos
