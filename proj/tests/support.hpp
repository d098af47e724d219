#pragma once

// Shared helpers for the unit and acceptance suites: seeded random
// generators for valid words and instances, and small independent oracles.

#include <algorithm>
#include <random>
#include <vector>

#include "thinpos/decomposition.hpp"
#include "thinpos/morse.hpp"
#include "thinpos/search.hpp"

namespace testsupport {

// A random valid link word with up to max_pairs minima. Feasible moves only:
// the running count never goes negative and closes at zero by construction.
inline thinpos::MorseWord random_link_word(std::mt19937& rng, int max_pairs) {
    std::uniform_int_distribution<int> pair_dist(1, max_pairs);
    const int pairs = pair_dist(rng);
    int mins_left = pairs;
    int maxs_left = pairs;
    int count = 0;
    std::vector<thinpos::MorseEvent> events;
    events.reserve(2 * static_cast<std::size_t>(pairs));
    std::bernoulli_distribution coin(0.5);
    while (mins_left + maxs_left > 0) {
        const bool can_min = mins_left > 0;
        const bool can_max = maxs_left > 0 && count >= 2;
        if (can_min && (!can_max || coin(rng))) {
            events.push_back(thinpos::MorseEvent::min());
            --mins_left;
            count += 2;
        } else {
            events.push_back(thinpos::MorseEvent::max());
            --maxs_left;
            count -= 2;
        }
    }
    return thinpos::MorseWord(std::move(events));
}

// The unique link word realizing a profile of counts stepping by +-2 and
// starting at 2; the final maximum closing the last count to zero is implied.
inline thinpos::MorseWord word_from_profile(const std::vector<int>& profile) {
    std::vector<thinpos::MorseEvent> events;
    int previous = 0;
    for (int c : profile) {
        events.push_back(c > previous ? thinpos::MorseEvent::min()
                                      : thinpos::MorseEvent::max());
        previous = c;
    }
    events.push_back(thinpos::MorseEvent::max());
    return thinpos::MorseWord(std::move(events));
}

// A random valid instance whose graph table covers every sign pattern. With
// honest_shapes, every row is two-sided or monotone and unflagged, so the
// admissibility filter removes nothing.
inline thinpos::Instance random_instance(std::mt19937& rng, int max_spheres,
                                         bool honest_shapes) {
    using namespace thinpos;
    std::uniform_int_distribution<int> n_dist(3, 6);
    std::uniform_int_distribution<int> m_dist(1, max_spheres);
    std::bernoulli_distribution coin(0.5);
    std::bernoulli_distribution rare(0.3);

    Instance instance;
    instance.name = "random";
    instance.bridge_index = n_dist(rng);

    const int m = m_dist(rng);
    std::vector<BowlSphere> spheres;
    for (int i = 1; i <= m; ++i) {
        BowlSphere s;
        s.id = i;
        std::uniform_int_distribution<int> parent_dist(0, i - 1);
        const int p = parent_dist(rng);
        if (p > 0) s.parent = p;
        s.punctures = coin(rng) ? 2 : 4;
        spheres.push_back(s);
    }

    SurfaceSystemData data;
    data.system = SphereSystem(std::move(spheres));
    for (int region : data.system.region_ids()) {
        const std::vector<int> boundary = data.system.boundary_spheres(region);
        const int k = static_cast<int>(boundary.size());
        std::vector<int> chosen_bridge(1 << k, 0);
        for (int bits = 0; bits < (1 << k); ++bits) {
            SignedVertexGraphSpec spec;
            spec.region_id = region;
            int d_minus = 0;
            int d_plus = 0;
            for (int j = 0; j < k; ++j) {
                const Sign sign = ((bits >> j) & 1) != 0 ? Sign::Minus : Sign::Plus;
                const int degree = data.system.sphere(boundary[j]).punctures;
                spec.vertices.push_back({boundary[j], sign, degree});
                (sign == Sign::Minus ? d_minus : d_plus) += degree;
            }
            // The upside-down pattern describes the same piece mirrored, so
            // it gets the same bridge number.
            const int flipped = ((1 << k) - 1) & ~bits;
            if (flipped < bits) {
                spec.bridge_number = chosen_bridge[flipped];
            } else {
                const int floor_b = std::max(1, std::max(d_minus, d_plus) / 2);
                if (!honest_shapes && d_minus != d_plus && rare(rng)) {
                    spec.bridge_number = floor_b;  // one-sided census
                } else if (d_minus == d_plus && d_minus > 0 && coin(rng)) {
                    spec.bridge_number = d_minus / 2;  // monotone
                } else {
                    std::uniform_int_distribution<int> extra(1, 2);
                    spec.bridge_number = floor_b + extra(rng);
                }
            }
            chosen_bridge[bits] = spec.bridge_number;
            data.table.add(std::move(spec));
        }
    }
    instance.systems.push_back(std::move(data));
    return instance;
}

// Brute-force linear extension enumeration by permutation filtering; the
// independent cross-check for the backtracking enumerator.
inline std::vector<std::vector<int>> brute_force_extensions(
    const std::vector<int>& region_ids,
    const thinpos::OrderConstraints& constraints) {
    std::vector<int> perm = region_ids;
    std::sort(perm.begin(), perm.end());
    std::vector<std::vector<int>> out;
    do {
        bool ok = true;
        for (const auto& [below, above] : constraints.below_above) {
            const auto pos_below =
                std::find(perm.begin(), perm.end(), below) - perm.begin();
            const auto pos_above =
                std::find(perm.begin(), perm.end(), above) - perm.begin();
            if (pos_below >= pos_above) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace testsupport
