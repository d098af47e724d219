#pragma once

/*******************************************************************************

Signed vertex graphs of tangle pieces.

Cutting a link along a system of spheres leaves one tangle per region. Each
region is summarised by a signed vertex graph: one vertex per boundary
sphere, labelled '+' when the sphere sits above the piece's critical points
and '-' when below, with degree equal to the sphere's puncture count. The
bridge number of a minimal bridge presentation of that graph is input data
(it is exactly the hard part we do not compute), carried per (region, sign
pattern) by a GraphTable.

Given the degree sums d- and d+ and the bridge number b, the census of the
piece's critical points is forced: (2b - d-)/2 minima and (2b - d+)/2
maxima, all minima below all maxima. That block of events is everything a
region contributes to a composed presentation.

*******************************************************************************/

#include <map>
#include <utility>
#include <vector>

#include "thinpos/errors.hpp"
#include "thinpos/morse.hpp"

namespace thinpos {

enum class Sign { Plus, Minus };

inline Sign opposite(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

struct SignedVertex {
    int sphere_id = 0;
    Sign sign = Sign::Plus;
    int degree = 0;  // puncture count of the sphere; even, >= 2

    friend bool operator==(const SignedVertex&, const SignedVertex&) = default;
};

// One input row: the minimal bridge data of a region's signed vertex graph
// under one boundary sign pattern. admits_thinner marks a bridge
// presentation known not to be a thin position of the graph; such rows are
// excluded from pruned searches.
struct SignedVertexGraphSpec {
    int region_id = 0;
    std::vector<SignedVertex> vertices;  // sorted by sphere id
    int bridge_number = 1;
    bool admits_thinner = false;

    int degree_sum(Sign s) const;

    friend bool operator==(const SignedVertexGraphSpec&,
                           const SignedVertexGraphSpec&) = default;
};

struct BridgeShape {
    int d_minus = 0;
    int d_plus = 0;
    int bridge = 0;
    int minima = 0;
    int maxima = 0;

    friend bool operator==(const BridgeShape&, const BridgeShape&) = default;
};

// The unique critical-point census forced by (d-, d+, b). Throws
// InconsistentShape when a count would be negative or non-integral.
BridgeShape bridge_shape(const SignedVertexGraphSpec& spec);

// The event block the region contributes to a composed word: all minima,
// then all maxima. Entering strand count is d-, exiting is d+. Empty for a
// monotone piece.
std::vector<MorseEvent> bridge_block(const SignedVertexGraphSpec& spec);

// A block that can belong to a thin position has critical points of both
// kinds or none at all.
bool is_two_sided_or_monotone(const SignedVertexGraphSpec& spec);

// Two-sided-or-monotone and not flagged admits_thinner.
bool is_admissible(const SignedVertexGraphSpec& spec);

// Catalog of graph rows keyed by (region, boundary sign pattern).
class GraphTable {
public:
    using Pattern = std::map<int, Sign>;
    using Key = std::pair<int, std::vector<std::pair<int, Sign>>>;

    // Throws InputError on a duplicate (region, pattern) key.
    void add(SignedVertexGraphSpec spec);

    const SignedVertexGraphSpec* find(int region_id, const Pattern& pattern) const;

    // Throws MissingTableEntry naming the uncovered (region, pattern).
    const SignedVertexGraphSpec& lookup(int region_id, const Pattern& pattern) const;

    const std::map<Key, SignedVertexGraphSpec>& rows() const { return rows_; }
    std::size_t size() const { return rows_.size(); }

    static Key key_of(int region_id, const Pattern& pattern);
    static std::string pattern_text(const Pattern& pattern);

    friend bool operator==(const GraphTable&, const GraphTable&) = default;

private:
    std::map<Key, SignedVertexGraphSpec> rows_;
};

}  // namespace thinpos
