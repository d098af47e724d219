#include "thinpos/oracle.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

namespace thinpos {

namespace {

long long enumeration_bound(const SphereSystem& system) {
    const int m = system.sphere_count();
    const long long huge = std::numeric_limits<long long>::max() / 2;
    long long total = 1;
    for (int i = 2; i <= m + 1; ++i) {  // (m+1)!
        if (total > huge / i) return huge;
        total *= i;
    }
    for (int i = 0; i < m; ++i) {  // 2^m
        if (total > huge / 2) return huge;
        total *= 2;
    }
    return total;
}

struct ScanResult {
    long long width = 0;
    std::vector<int> profile;
};

// Raw prefix-sum scan over a delta sequence; the width is the sum of every
// prefix count except the final zero.
ScanResult scan_deltas(const std::vector<int>& deltas) {
    ScanResult result;
    long long count = 0;
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        count += deltas[i];
        if (count < 0) {
            throw InternalInconsistency("oracle scan: strand count went negative");
        }
        if (i + 1 < deltas.size()) {
            result.profile.push_back(static_cast<int>(count));
            result.width += count;
        }
    }
    if (count != 0) {
        throw InternalInconsistency("oracle scan: strand count did not close at zero");
    }
    return result;
}

}  // namespace

OracleResult oracle_search(const Instance& instance, long long compose_cap) {
    long long bound = 1;
    for (const SurfaceSystemData& data : instance.systems) {
        const long long part = enumeration_bound(data.system);
        bound = bound > std::numeric_limits<long long>::max() - part
                    ? std::numeric_limits<long long>::max()
                    : bound + part;
    }
    if (bound > compose_cap) {
        throw CapExceeded("oracle enumeration bound " + std::to_string(bound) +
                          " exceeds cap " + std::to_string(compose_cap));
    }

    OracleResult result;

    // Baseline: n ups then n downs.
    {
        std::vector<int> deltas;
        deltas.insert(deltas.end(), instance.bridge_index, 2);
        deltas.insert(deltas.end(), instance.bridge_index, -2);
        ScanResult scan = scan_deltas(deltas);
        result.min_width = scan.width;
        result.profile = std::move(scan.profile);
        result.origin.is_baseline = true;
        result.composes = 1;
    }

    for (int s = 0; s < static_cast<int>(instance.systems.size()); ++s) {
        const SurfaceSystemData& data = instance.systems[s];
        const int m = data.system.sphere_count();
        std::vector<int> sphere_ids;
        for (const BowlSphere& sphere : data.system.spheres()) {
            sphere_ids.push_back(sphere.id);
        }

        std::optional<long long> system_min;

        for (long long k = 0; k < (1LL << m); ++k) {
            std::map<int, Sign> inside_sign;
            std::string signs_text;
            for (int j = 0; j < m; ++j) {
                const bool minus = ((k >> (m - 1 - j)) & 1) != 0;
                inside_sign[sphere_ids[j]] = minus ? Sign::Minus : Sign::Plus;
                signs_text += minus ? '-' : '+';
            }

            std::vector<int> perm = data.system.region_ids();
            std::sort(perm.begin(), perm.end());
            long long extension_rank = 0;
            do {
                std::map<int, std::size_t> position;
                for (std::size_t i = 0; i < perm.size(); ++i) position[perm[i]] = i;

                // Compatible iff the region on the '+' side of each sphere
                // sits below the region on the '-' side.
                bool compatible = true;
                for (const BowlSphere& sphere : data.system.spheres()) {
                    const std::size_t inside = position.at(sphere.id);
                    const std::size_t outside =
                        position.at(sphere.parent ? *sphere.parent : 0);
                    const bool inside_below = inside < outside;
                    const bool inside_plus = inside_sign.at(sphere.id) == Sign::Plus;
                    if (inside_below != inside_plus) {
                        compatible = false;
                        break;
                    }
                }
                if (!compatible) continue;

                std::vector<int> deltas;
                for (int region : perm) {
                    int d_minus = 0;
                    int d_plus = 0;
                    std::map<int, Sign> pattern;
                    for (const BowlSphere& sphere : data.system.spheres()) {
                        const int outside = sphere.parent ? *sphere.parent : 0;
                        if (sphere.id != region && outside != region) continue;
                        const Sign seen = sphere.id == region
                                              ? inside_sign.at(sphere.id)
                                              : opposite(inside_sign.at(sphere.id));
                        pattern[sphere.id] = seen;
                        (seen == Sign::Minus ? d_minus : d_plus) += sphere.punctures;
                    }
                    const SignedVertexGraphSpec* row = data.table.find(region, pattern);
                    if (row == nullptr) {
                        throw MissingTableEntry(
                            "no graph table row for region " + std::to_string(region) +
                            " with signs " + GraphTable::pattern_text(pattern));
                    }
                    const int minima = row->bridge_number - d_minus / 2;
                    const int maxima = row->bridge_number - d_plus / 2;
                    if (minima < 0 || maxima < 0) {
                        throw InconsistentShape(
                            "region " + std::to_string(region) +
                            ": bridge number too small for its degree sums");
                    }
                    deltas.insert(deltas.end(), minima, 2);
                    deltas.insert(deltas.end(), maxima, -2);
                }

                ScanResult scan = scan_deltas(deltas);
                ++result.composes;
                if (!system_min || scan.width < *system_min) system_min = scan.width;
                if (scan.width < result.min_width) {
                    result.min_width = scan.width;
                    result.profile = std::move(scan.profile);
                    result.origin = CandidateOrigin{};
                    result.origin.system_index = s;
                    result.origin.assignment_index = k;
                    result.origin.assignment_signs = signs_text;
                    result.origin.extension_rank = extension_rank;
                }
                ++extension_rank;
            } while (std::next_permutation(perm.begin(), perm.end()));
        }

        result.per_system_min.push_back(system_min);
    }

    return result;
}

}  // namespace thinpos
