#include "thinpos/graph.hpp"

#include <string>

namespace thinpos {

int SignedVertexGraphSpec::degree_sum(Sign s) const {
    int sum = 0;
    for (const SignedVertex& v : vertices) {
        if (v.sign == s) sum += v.degree;
    }
    return sum;
}

BridgeShape bridge_shape(const SignedVertexGraphSpec& spec) {
    const std::string where = "region " + std::to_string(spec.region_id);
    if (spec.bridge_number < 1) {
        throw InconsistentShape(where + ": bridge number must be >= 1");
    }
    for (const SignedVertex& v : spec.vertices) {
        if (v.degree < 2 || v.degree % 2 != 0) {
            throw InconsistentShape(where + ": vertex for sphere " +
                                    std::to_string(v.sphere_id) +
                                    " has degree " + std::to_string(v.degree) +
                                    "; need an even degree >= 2");
        }
    }

    BridgeShape shape;
    shape.d_minus = spec.degree_sum(Sign::Minus);
    shape.d_plus = spec.degree_sum(Sign::Plus);
    shape.bridge = spec.bridge_number;

    const int twice_b = 2 * spec.bridge_number;
    if (shape.d_minus > twice_b || shape.d_plus > twice_b) {
        throw InconsistentShape(where + ": degree sums (" +
                                std::to_string(shape.d_minus) + ", " +
                                std::to_string(shape.d_plus) +
                                ") exceed twice the bridge number " +
                                std::to_string(twice_b));
    }
    shape.minima = (twice_b - shape.d_minus) / 2;
    shape.maxima = (twice_b - shape.d_plus) / 2;
    return shape;
}

std::vector<MorseEvent> bridge_block(const SignedVertexGraphSpec& spec) {
    const BridgeShape shape = bridge_shape(spec);
    std::vector<MorseEvent> block;
    block.reserve(static_cast<std::size_t>(shape.minima + shape.maxima));
    block.insert(block.end(), shape.minima, MorseEvent::min());
    block.insert(block.end(), shape.maxima, MorseEvent::max());
    return block;
}

bool is_two_sided_or_monotone(const SignedVertexGraphSpec& spec) {
    const BridgeShape shape = bridge_shape(spec);
    return (shape.minima > 0 && shape.maxima > 0) ||
           (shape.minima == 0 && shape.maxima == 0);
}

bool is_admissible(const SignedVertexGraphSpec& spec) {
    return is_two_sided_or_monotone(spec) && !spec.admits_thinner;
}

GraphTable::Key GraphTable::key_of(int region_id, const Pattern& pattern) {
    return {region_id, {pattern.begin(), pattern.end()}};
}

std::string GraphTable::pattern_text(const Pattern& pattern) {
    std::string out = "{";
    for (const auto& [sphere, sign] : pattern) {
        if (out.size() > 1) out += ", ";
        out += std::to_string(sphere);
        out += ':';
        out += sign_char(sign);
    }
    out += '}';
    return out;
}

void GraphTable::add(SignedVertexGraphSpec spec) {
    Pattern pattern;
    for (const SignedVertex& v : spec.vertices) {
        if (!pattern.emplace(v.sphere_id, v.sign).second) {
            throw InputError("graph table row for region " +
                             std::to_string(spec.region_id) +
                             ": duplicate vertex for sphere " +
                             std::to_string(v.sphere_id));
        }
    }
    const Key key = key_of(spec.region_id, pattern);
    if (rows_.count(key) != 0) {
        throw InputError("duplicate graph table row for region " +
                         std::to_string(spec.region_id) + " with signs " +
                         pattern_text(pattern));
    }
    // Canonical vertex order, so equal rows compare equal.
    std::vector<SignedVertex> sorted;
    sorted.reserve(pattern.size());
    for (const auto& [sphere, sign] : pattern) {
        for (const SignedVertex& v : spec.vertices) {
            if (v.sphere_id == sphere) {
                sorted.push_back({sphere, sign, v.degree});
                break;
            }
        }
    }
    spec.vertices = std::move(sorted);
    rows_.emplace(key, std::move(spec));
}

const SignedVertexGraphSpec* GraphTable::find(int region_id,
                                              const Pattern& pattern) const {
    const auto it = rows_.find(key_of(region_id, pattern));
    return it == rows_.end() ? nullptr : &it->second;
}

const SignedVertexGraphSpec& GraphTable::lookup(int region_id,
                                                const Pattern& pattern) const {
    const SignedVertexGraphSpec* spec = find(region_id, pattern);
    if (spec == nullptr) {
        throw MissingTableEntry("no graph table row for region " +
                                std::to_string(region_id) + " with signs " +
                                pattern_text(pattern));
    }
    return *spec;
}

}  // namespace thinpos
