#pragma once

/*******************************************************************************

Sphere systems and the order constraints they impose.

A tangle decomposition is a containment forest of bowl-like spheres. Region 0
is the piece outside every sphere; region i is the piece directly inside
sphere i. Adjacent regions share exactly one sphere, so the region adjacency
graph is a tree on m+1 nodes.

Each sphere gets a sign on its inside collar ('+' means flat face up); the
outside collar gets the opposite sign. A sign assignment orients every
adjacency edge: the region seeing '+' must sit below the region seeing '-'.
Stacking orders of the regions are exactly the linear extensions of those
constraints; since the constraints orient a tree, at least one always exists.

All enumeration orders are canonical so runs are reproducible: sphere ids
ascending, sign assignments as binary counters ('+' before '-'), extensions
in backtracking order choosing the smallest available region first.

*******************************************************************************/

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "thinpos/errors.hpp"
#include "thinpos/graph.hpp"

namespace thinpos {

struct BowlSphere {
    int id = 0;
    std::optional<int> parent;  // directly containing sphere, or none
    int punctures = 0;          // even, >= 2

    friend bool operator==(const BowlSphere&, const BowlSphere&) = default;
};

class SphereSystem {
public:
    SphereSystem() = default;  // no spheres: the single region 0
    explicit SphereSystem(std::vector<BowlSphere> spheres);

    int sphere_count() const { return static_cast<int>(spheres_.size()); }
    const std::vector<BowlSphere>& spheres() const { return spheres_; }
    bool has_sphere(int id) const;
    const BowlSphere& sphere(int id) const;

    // 0 followed by the sphere ids, ascending.
    std::vector<int> region_ids() const;
    bool has_region(int region_id) const;

    int inside_region(int sphere_id) const;   // the region directly inside
    int outside_region(int sphere_id) const;  // the region directly outside

    // Spheres bounding a region: its own shell plus its children. Ascending.
    std::vector<int> boundary_spheres(int region_id) const;

    friend bool operator==(const SphereSystem&, const SphereSystem&) = default;

private:
    std::vector<BowlSphere> spheres_;  // sorted by id
};

struct SignAssignment {
    std::map<int, Sign> inside_sign;  // per sphere; outside collar is opposite

    // Signs in sphere-id order, e.g. "+-+". Empty string for no spheres.
    std::string bits(const SphereSystem& system) const;

    friend bool operator==(const SignAssignment&, const SignAssignment&) = default;
};

// 2^m assignments. Index k maps to signs read off k as a binary counter over
// spheres in id order, '+' for 0, so index 0 is all '+'.
long long assignment_count(const SphereSystem& system);
SignAssignment sign_assignment_at(const SphereSystem& system, long long index);
std::vector<SignAssignment> enumerate_sign_assignments(const SphereSystem& system);

// Collar signs of a region's boundary spheres as seen from that region.
GraphTable::Pattern vertex_signs(const SphereSystem& system, int region_id,
                                 const SignAssignment& assignment);

// One directed pair per sphere: (lower region, upper region). Inside sign
// '+' hangs the inside region below the outside one.
struct OrderConstraints {
    std::vector<std::pair<int, int>> below_above;  // in sphere-id order

    friend bool operator==(const OrderConstraints&, const OrderConstraints&) = default;
};

OrderConstraints order_constraints(const SphereSystem& system,
                                   const SignAssignment& assignment);

// Every total order of the regions consistent with the constraints, each
// exactly once, in canonical backtracking order. The visitor returns false
// to stop early.
void for_each_linear_extension(
    const std::vector<int>& region_ids, const OrderConstraints& constraints,
    const std::function<bool(const std::vector<int>&)>& visit);

long long count_linear_extensions(const std::vector<int>& region_ids,
                                  const OrderConstraints& constraints);

std::vector<std::vector<int>> enumerate_linear_extensions(
    const std::vector<int>& region_ids, const OrderConstraints& constraints);

// Regions whose graph row fails the two-sided-or-monotone shape condition
// under this assignment. Throws MissingTableEntry on an uncovered pattern.
struct RegionShapeViolation {
    int region_id = 0;
    GraphTable::Pattern pattern;
    std::string message;
};

std::vector<RegionShapeViolation> region_shape_violations(
    const SphereSystem& system, const SignAssignment& assignment,
    const GraphTable& table);

// Strands crossing the gap between order positions gap_index and
// gap_index+1: the puncture counts of every sphere whose two regions lie on
// opposite sides of the gap.
long long crossing_count(const SphereSystem& system,
                         const std::vector<int>& order, std::size_t gap_index);

}  // namespace thinpos
