#include "thinpos/decomposition.hpp"

#include <algorithm>
#include <string>

namespace thinpos {

namespace {

const BowlSphere* find_sphere(const std::vector<BowlSphere>& spheres, int id) {
    const auto it = std::lower_bound(
        spheres.begin(), spheres.end(), id,
        [](const BowlSphere& s, int want) { return s.id < want; });
    if (it == spheres.end() || it->id != id) return nullptr;
    return &*it;
}

}  // namespace

SphereSystem::SphereSystem(std::vector<BowlSphere> spheres)
    : spheres_(std::move(spheres)) {
    std::sort(spheres_.begin(), spheres_.end(),
              [](const BowlSphere& a, const BowlSphere& b) { return a.id < b.id; });
    for (std::size_t i = 0; i < spheres_.size(); ++i) {
        const BowlSphere& s = spheres_[i];
        if (s.id < 1) {
            throw MalformedForest("sphere id " + std::to_string(s.id) +
                                  " invalid: ids must be >= 1 (0 names the outer region)");
        }
        if (i > 0 && spheres_[i - 1].id == s.id) {
            throw MalformedForest("duplicate sphere id " + std::to_string(s.id));
        }
    }
    for (const BowlSphere& s : spheres_) {
        if (s.parent && find_sphere(spheres_, *s.parent) == nullptr) {
            throw MalformedForest("sphere " + std::to_string(s.id) +
                                  ": parent " + std::to_string(*s.parent) +
                                  " is not in the system");
        }
    }
    // Parent chains must reach a root within m hops.
    for (const BowlSphere& s : spheres_) {
        const BowlSphere* cur = &s;
        for (std::size_t hops = 0; cur->parent; ++hops) {
            if (hops >= spheres_.size()) {
                throw MalformedForest("containment cycle through sphere " +
                                      std::to_string(s.id));
            }
            cur = find_sphere(spheres_, *cur->parent);
        }
    }
}

bool SphereSystem::has_sphere(int id) const {
    return find_sphere(spheres_, id) != nullptr;
}

const BowlSphere& SphereSystem::sphere(int id) const {
    const BowlSphere* s = find_sphere(spheres_, id);
    if (s == nullptr) {
        throw InputError("unknown sphere id " + std::to_string(id));
    }
    return *s;
}

std::vector<int> SphereSystem::region_ids() const {
    std::vector<int> ids;
    ids.reserve(spheres_.size() + 1);
    ids.push_back(0);
    for (const BowlSphere& s : spheres_) ids.push_back(s.id);
    return ids;
}

bool SphereSystem::has_region(int region_id) const {
    return region_id == 0 || has_sphere(region_id);
}

int SphereSystem::inside_region(int sphere_id) const {
    return sphere(sphere_id).id;
}

int SphereSystem::outside_region(int sphere_id) const {
    const BowlSphere& s = sphere(sphere_id);
    return s.parent ? *s.parent : 0;
}

std::vector<int> SphereSystem::boundary_spheres(int region_id) const {
    if (!has_region(region_id)) {
        throw InputError("unknown region id " + std::to_string(region_id));
    }
    std::vector<int> out;
    if (region_id != 0) out.push_back(region_id);
    for (const BowlSphere& s : spheres_) {
        const int parent_region = s.parent ? *s.parent : 0;
        if (parent_region == region_id) out.push_back(s.id);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string SignAssignment::bits(const SphereSystem& system) const {
    std::string out;
    out.reserve(inside_sign.size());
    for (const BowlSphere& s : system.spheres()) {
        out += sign_char(inside_sign.at(s.id));
    }
    return out;
}

long long assignment_count(const SphereSystem& system) {
    const int m = system.sphere_count();
    if (m > 62) {
        throw CapExceeded("cannot enumerate sign assignments of " +
                          std::to_string(m) + " spheres");
    }
    return 1LL << m;
}

SignAssignment sign_assignment_at(const SphereSystem& system, long long index) {
    const long long total = assignment_count(system);
    if (index < 0 || index >= total) {
        throw InputError("sign assignment index " + std::to_string(index) +
                         " out of range [0, " + std::to_string(total) + ")");
    }
    const int m = system.sphere_count();
    SignAssignment assignment;
    for (int j = 0; j < m; ++j) {
        const bool minus = ((index >> (m - 1 - j)) & 1) != 0;
        assignment.inside_sign[system.spheres()[j].id] =
            minus ? Sign::Minus : Sign::Plus;
    }
    return assignment;
}

std::vector<SignAssignment> enumerate_sign_assignments(const SphereSystem& system) {
    const long long total = assignment_count(system);
    std::vector<SignAssignment> out;
    out.reserve(static_cast<std::size_t>(total));
    for (long long k = 0; k < total; ++k) {
        out.push_back(sign_assignment_at(system, k));
    }
    return out;
}

GraphTable::Pattern vertex_signs(const SphereSystem& system, int region_id,
                                 const SignAssignment& assignment) {
    GraphTable::Pattern pattern;
    for (int sphere_id : system.boundary_spheres(region_id)) {
        const Sign inside = assignment.inside_sign.at(sphere_id);
        pattern[sphere_id] =
            system.inside_region(sphere_id) == region_id ? inside : opposite(inside);
    }
    return pattern;
}

OrderConstraints order_constraints(const SphereSystem& system,
                                   const SignAssignment& assignment) {
    OrderConstraints constraints;
    constraints.below_above.reserve(system.spheres().size());
    for (const BowlSphere& s : system.spheres()) {
        const int inside = system.inside_region(s.id);
        const int outside = system.outside_region(s.id);
        if (assignment.inside_sign.at(s.id) == Sign::Plus) {
            constraints.below_above.emplace_back(inside, outside);
        } else {
            constraints.below_above.emplace_back(outside, inside);
        }
    }
    return constraints;
}

namespace {

struct ExtensionState {
    std::vector<int> region_ids;           // ascending
    std::vector<std::uint64_t> pred_mask;  // regions that must precede each one
    std::uint64_t placed = 0;
    std::vector<int> order;
};

int region_index(const std::vector<int>& region_ids, int region_id) {
    const auto it =
        std::lower_bound(region_ids.begin(), region_ids.end(), region_id);
    if (it == region_ids.end() || *it != region_id) {
        throw InputError("constraint names unknown region " +
                         std::to_string(region_id));
    }
    return static_cast<int>(it - region_ids.begin());
}

ExtensionState make_state(const std::vector<int>& region_ids,
                          const OrderConstraints& constraints) {
    if (region_ids.size() > 64) {
        throw CapExceeded("cannot enumerate extensions of " +
                          std::to_string(region_ids.size()) + " regions");
    }
    ExtensionState state;
    state.region_ids = region_ids;
    std::sort(state.region_ids.begin(), state.region_ids.end());
    state.pred_mask.assign(state.region_ids.size(), 0);
    for (const auto& [below, above] : constraints.below_above) {
        const int b = region_index(state.region_ids, below);
        const int a = region_index(state.region_ids, above);
        state.pred_mask[a] |= std::uint64_t{1} << b;
    }
    state.order.reserve(state.region_ids.size());
    return state;
}

bool visit_extensions(ExtensionState& state,
                      const std::function<bool(const std::vector<int>&)>& visit) {
    const std::size_t n = state.region_ids.size();
    if (state.order.size() == n) return visit(state.order);
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t bit = std::uint64_t{1} << i;
        if ((state.placed & bit) != 0) continue;
        if ((state.pred_mask[i] & ~state.placed) != 0) continue;
        state.placed |= bit;
        state.order.push_back(state.region_ids[i]);
        const bool keep_going = visit_extensions(state, visit);
        state.order.pop_back();
        state.placed &= ~bit;
        if (!keep_going) return false;
    }
    return true;
}

}  // namespace

void for_each_linear_extension(
    const std::vector<int>& region_ids, const OrderConstraints& constraints,
    const std::function<bool(const std::vector<int>&)>& visit) {
    ExtensionState state = make_state(region_ids, constraints);
    visit_extensions(state, visit);
}

long long count_linear_extensions(const std::vector<int>& region_ids,
                                  const OrderConstraints& constraints) {
    long long count = 0;
    for_each_linear_extension(region_ids, constraints,
                              [&count](const std::vector<int>&) {
                                  ++count;
                                  return true;
                              });
    return count;
}

std::vector<std::vector<int>> enumerate_linear_extensions(
    const std::vector<int>& region_ids, const OrderConstraints& constraints) {
    std::vector<std::vector<int>> out;
    for_each_linear_extension(region_ids, constraints,
                              [&out](const std::vector<int>& order) {
                                  out.push_back(order);
                                  return true;
                              });
    return out;
}

std::vector<RegionShapeViolation> region_shape_violations(
    const SphereSystem& system, const SignAssignment& assignment,
    const GraphTable& table) {
    std::vector<RegionShapeViolation> violations;
    for (int region : system.region_ids()) {
        const GraphTable::Pattern pattern = vertex_signs(system, region, assignment);
        const SignedVertexGraphSpec& spec = table.lookup(region, pattern);
        const BridgeShape shape = bridge_shape(spec);
        if (is_two_sided_or_monotone(spec)) continue;
        RegionShapeViolation v;
        v.region_id = region;
        v.pattern = pattern;
        v.message = "region " + std::to_string(region) + " with signs " +
                    GraphTable::pattern_text(pattern) + " has " +
                    std::to_string(shape.minima) + " minima and " +
                    std::to_string(shape.maxima) +
                    " maxima; need both kinds or neither";
        violations.push_back(std::move(v));
    }
    return violations;
}

long long crossing_count(const SphereSystem& system,
                         const std::vector<int>& order, std::size_t gap_index) {
    if (order.empty() || gap_index + 1 >= order.size()) {
        throw InputError("gap index " + std::to_string(gap_index) +
                         " out of range for an order of " +
                         std::to_string(order.size()) + " regions");
    }
    std::map<int, std::size_t> position;
    for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;

    long long total = 0;
    for (const BowlSphere& s : system.spheres()) {
        const std::size_t a = position.at(system.inside_region(s.id));
        const std::size_t b = position.at(system.outside_region(s.id));
        const auto [lo, hi] = std::minmax(a, b);
        if (lo <= gap_index && gap_index < hi) total += s.punctures;
    }
    return total;
}

}  // namespace thinpos
