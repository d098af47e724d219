#pragma once

/*******************************************************************************

Composition of region blocks into a single link presentation.

Given a sphere system, a sign assignment and a compatible stacking order of
the regions, each region contributes its bridge block (all minima, then all
maxima) and the blocks are concatenated in stacking order. Strands running
between blocks are monotonic arcs; they are not events, only running counts.

The composed word must conserve strands: the running count at each
inter-block boundary has to equal the crossing count of that gap (one strand
per puncture of every sphere spanning it). A mismatch means the instance
data is inconsistent and raises ConservationFailure.

decompose_width re-derives the width structurally - block-internal levels,
strands passing over blocks, and one level per merged gap - and must agree
with the scanned width exactly.

*******************************************************************************/

#include <cstddef>
#include <vector>

#include "thinpos/decomposition.hpp"
#include "thinpos/errors.hpp"
#include "thinpos/graph.hpp"
#include "thinpos/morse.hpp"

namespace thinpos {

struct BlockPlacement {
    int region_id = 0;
    std::size_t begin = 0;  // event index range within the composed word
    std::size_t end = 0;
    BridgeShape shape;

    std::size_t event_count() const { return end - begin; }

    friend bool operator==(const BlockPlacement&, const BlockPlacement&) = default;
};

struct ComposedPresentation {
    MorseWord word;                      // a link word
    std::vector<BlockPlacement> blocks;  // in stacking order
    std::vector<long long> gap_counts;   // strand count over each gap
    long long total_width = 0;

    friend bool operator==(const ComposedPresentation&,
                           const ComposedPresentation&) = default;
};

// Concatenates the regions' bridge blocks in the given stacking order.
// Throws InputError when the order is not a compatible linear extension,
// MissingTableEntry / InconsistentShape on bad table data, and
// ConservationFailure when an inter-block count disagrees with the gap's
// crossing count.
ComposedPresentation compose(const SphereSystem& system,
                             const SignAssignment& assignment,
                             const GraphTable& table,
                             const std::vector<int>& order);

struct WidthBreakdown {
    long long internal_sum = 0;  // block-internal level counts
    long long gap_sum = 0;       // one crossing count per merged gap
    long long passing_sum = 0;   // strands passing over block-internal levels

    long long total() const { return internal_sum + gap_sum + passing_sum; }

    friend bool operator==(const WidthBreakdown&, const WidthBreakdown&) = default;
};

// Structural re-derivation of the width. Throws InternalInconsistency when
// the sum disagrees with the scanned total_width.
WidthBreakdown decompose_width(const ComposedPresentation& cp);

}  // namespace thinpos
