#include "thinpos/assembly.hpp"

#include <algorithm>
#include <string>

namespace thinpos {

namespace {

void check_order(const SphereSystem& system, const SignAssignment& assignment,
                 const std::vector<int>& order) {
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != system.region_ids()) {
        throw InputError("stacking order is not a permutation of the regions");
    }
    std::map<int, std::size_t> position;
    for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;
    for (const auto& [below, above] :
         order_constraints(system, assignment).below_above) {
        if (position.at(below) >= position.at(above)) {
            throw InputError("stacking order places region " +
                             std::to_string(above) + " below region " +
                             std::to_string(below) +
                             ", violating their shared sphere");
        }
    }
}

}  // namespace

ComposedPresentation compose(const SphereSystem& system,
                             const SignAssignment& assignment,
                             const GraphTable& table,
                             const std::vector<int>& order) {
    check_order(system, assignment, order);

    ComposedPresentation cp;
    std::vector<MorseEvent> events;
    cp.blocks.reserve(order.size());
    for (int region : order) {
        const GraphTable::Pattern pattern = vertex_signs(system, region, assignment);
        const SignedVertexGraphSpec& spec = table.lookup(region, pattern);
        BlockPlacement block;
        block.region_id = region;
        block.shape = bridge_shape(spec);
        block.begin = events.size();
        events.insert(events.end(), block.shape.minima, MorseEvent::min());
        events.insert(events.end(), block.shape.maxima, MorseEvent::max());
        block.end = events.size();
        cp.blocks.push_back(block);
    }

    for (std::size_t gap = 0; gap + 1 < order.size(); ++gap) {
        cp.gap_counts.push_back(crossing_count(system, order, gap));
    }

    // Conservation: the scanned count at each block boundary must equal the
    // crossing count of that gap, and each block must see at least its own
    // entering strands.
    long long count = 0;
    std::size_t at = 0;
    for (std::size_t b = 0; b < cp.blocks.size(); ++b) {
        const BlockPlacement& block = cp.blocks[b];
        if (b > 0 && count != cp.gap_counts[b - 1]) {
            throw ConservationFailure(
                "running count " + std::to_string(count) + " below region " +
                std::to_string(block.region_id) + " block differs from crossing count " +
                std::to_string(cp.gap_counts[b - 1]) + " of gap " + std::to_string(b - 1));
        }
        if (count < block.shape.d_minus) {
            throw ConservationFailure(
                "region " + std::to_string(block.region_id) + " block expects " +
                std::to_string(block.shape.d_minus) + " entering strands but only " +
                std::to_string(count) + " arrive");
        }
        for (; at < block.end; ++at) count += events[at].strand_delta();
    }
    if (count != 0) {
        throw ConservationFailure("composed word leaves " + std::to_string(count) +
                                  " strands open at the top");
    }

    try {
        cp.word = MorseWord(std::move(events));
    } catch (const MalformedWord& e) {
        throw InternalInconsistency(std::string("composed word failed validation: ") +
                                    e.what());
    }
    cp.total_width = width_link(cp.word);
    return cp;
}

WidthBreakdown decompose_width(const ComposedPresentation& cp) {
    WidthBreakdown parts;
    const std::vector<MorseEvent>& events = cp.word.events();

    for (std::size_t b = 0; b < cp.blocks.size(); ++b) {
        const BlockPlacement& block = cp.blocks[b];
        const std::size_t n = block.event_count();
        if (n == 0) continue;

        // Levels strictly inside the block, counted from its own entering
        // strands; everything else at those levels is passing.
        long long own = block.shape.d_minus;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            own += events[block.begin + i].strand_delta();
            parts.internal_sum += own;
        }

        const long long below = b == 0 ? 0 : cp.gap_counts[b - 1];
        const long long passing = below - block.shape.d_minus;
        if (passing < 0) {
            throw InternalInconsistency("region " + std::to_string(block.region_id) +
                                        " block has negative passing strand count");
        }
        parts.passing_sum += passing * static_cast<long long>(n - 1);
    }

    // One regular level per maximal run of gaps between non-empty blocks.
    // Every gap in a run carries the same count; empty blocks inside the run
    // do not create levels of their own.
    std::ptrdiff_t previous_nonempty = -1;
    for (std::size_t b = 0; b < cp.blocks.size(); ++b) {
        if (cp.blocks[b].event_count() == 0) continue;
        if (previous_nonempty >= 0) {
            const long long count = cp.gap_counts[b - 1];
            for (std::size_t g = static_cast<std::size_t>(previous_nonempty); g < b; ++g) {
                if (cp.gap_counts[g] != count) {
                    throw InternalInconsistency(
                        "gaps merged across an empty block carry unequal counts");
                }
            }
            parts.gap_sum += count;
        }
        previous_nonempty = static_cast<std::ptrdiff_t>(b);
    }

    if (parts.total() != cp.total_width) {
        throw InternalInconsistency(
            "structural width " + std::to_string(parts.total()) +
            " differs from scanned width " + std::to_string(cp.total_width));
    }
    return parts;
}

}  // namespace thinpos
