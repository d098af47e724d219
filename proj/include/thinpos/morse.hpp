#pragma once

/*******************************************************************************

Event words for Morse presentations of links and of signed vertex graphs.

A presentation is recorded as the bottom-to-top sequence of its events:
minima and maxima of the curve, plus optional vertex events for the signed
vertices of a graph piece. Heights are abstract; only the order matters,
because the width invariant depends on nothing else.

Bookkeeping: a minimum opens two strands, a maximum closes two, a vertex of
degree d opens (label '-') or closes (label '+') d strands. A word is valid
when every '-' vertex precedes all other events, every '+' vertex follows
them, the running strand count never goes negative, and it closes at zero.

The width of a link word is the sum of the strand counts at the regular
levels between consecutive critical events. For graph words only the levels
between genuine critical events count; levels adjacent to vertex events are
excluded.

*******************************************************************************/

#include <cstddef>
#include <string>
#include <vector>

#include "thinpos/errors.hpp"

namespace thinpos {

enum class EventKind { Min, Max, VertexPlus, VertexMinus };

struct MorseEvent {
    EventKind kind = EventKind::Min;
    int degree = 0;  // vertex events only; even, >= 2

    static MorseEvent min() { return {EventKind::Min, 0}; }
    static MorseEvent max() { return {EventKind::Max, 0}; }
    static MorseEvent vplus(int degree) { return {EventKind::VertexPlus, degree}; }
    static MorseEvent vminus(int degree) { return {EventKind::VertexMinus, degree}; }

    bool is_vertex() const {
        return kind == EventKind::VertexPlus || kind == EventKind::VertexMinus;
    }
    bool is_critical() const { return !is_vertex(); }

    // Signed change of the strand count when sweeping past this event.
    int strand_delta() const;

    // Token used by the word text format: MIN, MAX, V+<d>, V-<d>.
    std::string token() const;

    friend bool operator==(const MorseEvent&, const MorseEvent&) = default;
};

// Validated event word. Construction throws MalformedWord when the vertex
// placement or the strand-count bookkeeping is violated; all operations may
// assume a well-formed word afterwards.
class MorseWord {
public:
    MorseWord() = default;
    explicit MorseWord(std::vector<MorseEvent> events);

    const std::vector<MorseEvent>& events() const { return events_; }
    std::size_t size() const { return events_.size(); }
    bool empty() const { return events_.empty(); }

    // True when the word has no vertex events.
    bool is_link_word() const;

    friend bool operator==(const MorseWord&, const MorseWord&) = default;

private:
    std::vector<MorseEvent> events_;
};

// Strand count after each event, bottom to top. Same length as the word;
// the last entry is always 0.
std::vector<int> running_counts(const MorseWord& word);

// Strand counts at the regular levels between consecutive critical events,
// bottom to top. For a link word this is every running count except the
// final zero.
struct WidthProfile {
    std::vector<int> counts;

    friend bool operator==(const WidthProfile&, const WidthProfile&) = default;
};

WidthProfile width_profile(const MorseWord& word);

// Sum of the profile counts. width_link refuses vertex events; width_graph
// accepts them and skips the levels adjacent to vertices.
long long width_link(const MorseWord& word);
long long width_graph(const MorseWord& word);

// True when every maximum occurs after every minimum.
bool is_bridge_position(const MorseWord& word);

// Half the strand count at the level separating all maxima from all minima.
// Requires a nonempty word in bridge position.
int bridge_number(const MorseWord& word);

// n minima followed by n maxima; its width is 2n^2.
MorseWord nbridge_word(int n);

// Profile levels classified against their neighbours, with the word ends
// treated as count 0: a thick level is a strict local maximum, a thin level
// a strict local minimum away from the ends. Indices into profile.counts.
struct LevelClasses {
    std::vector<int> thin;
    std::vector<int> thick;

    friend bool operator==(const LevelClasses&, const LevelClasses&) = default;
};

LevelClasses thin_thick_levels(const WidthProfile& profile);

// Upside-down copy: event order reversed, Min<->Max and V+<->V- swapped.
// Width is preserved.
MorseWord reflect(const MorseWord& word);

}  // namespace thinpos
