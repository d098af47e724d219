#include "thinpos/morse.hpp"

#include <algorithm>
#include <stdexcept>

namespace thinpos {

int MorseEvent::strand_delta() const {
    switch (kind) {
        case EventKind::Min: return 2;
        case EventKind::Max: return -2;
        case EventKind::VertexMinus: return degree;
        case EventKind::VertexPlus: return -degree;
    }
    return 0;
}

std::string MorseEvent::token() const {
    switch (kind) {
        case EventKind::Min: return "MIN";
        case EventKind::Max: return "MAX";
        case EventKind::VertexPlus: return "V+" + std::to_string(degree);
        case EventKind::VertexMinus: return "V-" + std::to_string(degree);
    }
    return {};
}

MorseWord::MorseWord(std::vector<MorseEvent> events) : events_(std::move(events)) {
    bool seen_body = false;
    bool seen_plus = false;
    for (std::size_t i = 0; i < events_.size(); ++i) {
        const MorseEvent& e = events_[i];
        if (e.is_vertex()) {
            if (e.degree < 2 || e.degree % 2 != 0) {
                throw MalformedWord("event " + std::to_string(i) + " (" + e.token() +
                                    "): vertex degree must be an even integer >= 2");
            }
            if (e.kind == EventKind::VertexMinus && (seen_body || seen_plus)) {
                throw MalformedWord("event " + std::to_string(i) +
                                    ": '-' vertices must precede all other events");
            }
            if (e.kind == EventKind::VertexPlus) seen_plus = true;
        } else {
            if (seen_plus) {
                throw MalformedWord("event " + std::to_string(i) +
                                    ": critical events may not occur above a '+' vertex");
            }
            seen_body = true;
        }
    }

    long long count = 0;
    for (std::size_t i = 0; i < events_.size(); ++i) {
        count += events_[i].strand_delta();
        if (count < 0) {
            throw MalformedWord("strand count drops below zero after event " +
                                std::to_string(i) + " (" + events_[i].token() + ")");
        }
    }
    if (count != 0) {
        throw MalformedWord("strand count ends at " + std::to_string(count) +
                            ", expected 0");
    }
}

bool MorseWord::is_link_word() const {
    return std::none_of(events_.begin(), events_.end(),
                        [](const MorseEvent& e) { return e.is_vertex(); });
}

std::vector<int> running_counts(const MorseWord& word) {
    std::vector<int> counts;
    counts.reserve(word.size());
    int count = 0;
    for (const MorseEvent& e : word.events()) {
        count += e.strand_delta();
        counts.push_back(count);
    }
    return counts;
}

WidthProfile width_profile(const MorseWord& word) {
    const std::vector<int> rc = running_counts(word);
    WidthProfile profile;
    // Consecutive critical events are adjacent in the word (vertices only
    // occur at the ends), so the count after the lower one is the level count.
    int previous_critical = -1;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (!word.events()[i].is_critical()) continue;
        if (previous_critical >= 0) profile.counts.push_back(rc[previous_critical]);
        previous_critical = static_cast<int>(i);
    }
    return profile;
}

long long width_graph(const MorseWord& word) {
    long long total = 0;
    for (int c : width_profile(word).counts) total += c;
    return total;
}

long long width_link(const MorseWord& word) {
    if (!word.is_link_word()) {
        throw NotLinkWord("width of a link requested for a word with vertex events");
    }
    return width_graph(word);
}

bool is_bridge_position(const MorseWord& word) {
    bool seen_max = false;
    for (const MorseEvent& e : word.events()) {
        if (e.kind == EventKind::Max) seen_max = true;
        if (e.kind == EventKind::Min && seen_max) return false;
    }
    return true;
}

int bridge_number(const MorseWord& word) {
    if (word.empty()) {
        throw NotBridgePosition("empty word has no bridge number");
    }
    if (!is_bridge_position(word)) {
        throw NotBridgePosition("a maximum occurs below a minimum");
    }
    const std::vector<int> rc = running_counts(word);
    return *std::max_element(rc.begin(), rc.end()) / 2;
}

MorseWord nbridge_word(int n) {
    if (n < 1) throw std::invalid_argument("nbridge_word: n must be >= 1");
    std::vector<MorseEvent> events;
    events.reserve(2 * static_cast<std::size_t>(n));
    events.insert(events.end(), n, MorseEvent::min());
    events.insert(events.end(), n, MorseEvent::max());
    return MorseWord(std::move(events));
}

LevelClasses thin_thick_levels(const WidthProfile& profile) {
    LevelClasses classes;
    const std::vector<int>& c = profile.counts;
    const int n = static_cast<int>(c.size());
    for (int i = 0; i < n; ++i) {
        const int left = i > 0 ? c[i - 1] : 0;
        const int right = i + 1 < n ? c[i + 1] : 0;
        if (c[i] > left && c[i] > right) {
            classes.thick.push_back(i);
        } else if (i > 0 && i + 1 < n && c[i] < left && c[i] < right) {
            classes.thin.push_back(i);
        }
    }
    return classes;
}

MorseWord reflect(const MorseWord& word) {
    std::vector<MorseEvent> events(word.events().rbegin(), word.events().rend());
    for (MorseEvent& e : events) {
        switch (e.kind) {
            case EventKind::Min: e.kind = EventKind::Max; break;
            case EventKind::Max: e.kind = EventKind::Min; break;
            case EventKind::VertexPlus: e.kind = EventKind::VertexMinus; break;
            case EventKind::VertexMinus: e.kind = EventKind::VertexPlus; break;
        }
    }
    return MorseWord(std::move(events));
}

}  // namespace thinpos
