#include "thinpos/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace thinpos {

namespace {

std::string origin_text(const CandidateOrigin& origin) {
    if (origin.is_baseline) return "baseline";
    return "system " + std::to_string(origin.system_index) + ", assignment " +
           origin.assignment_signs + ", extension " +
           std::to_string(origin.extension_rank);
}

std::string join_ints(const std::vector<int>& values) {
    std::string out;
    for (int v : values) {
        if (!out.empty()) out += ' ';
        out += std::to_string(v);
    }
    return out;
}

std::string join_longs(const std::vector<long long>& values) {
    std::string out;
    for (long long v : values) {
        if (!out.empty()) out += ' ';
        out += std::to_string(v);
    }
    return out;
}

}  // namespace

Report build_report(const Instance& instance, const SearchOptions& options,
                    bool all_candidates) {
    SearchOptions effective = options;
    if (all_candidates) effective.cut_with_bound = false;

    Report report;
    report.instance_name = instance.name;
    report.bridge_index = instance.bridge_index;
    report.pruned = effective.prune;
    report.all_candidates = all_candidates;

    const std::vector<Candidate> candidates = build_candidate_set(instance, effective);
    report.baseline_width = candidates.front().width;

    for (int s = 0; s < static_cast<int>(instance.systems.size()); ++s) {
        const SurfaceSystemData& data = instance.systems[s];
        SystemReport sr;
        sr.system_index = s;
        sr.sphere_count = data.system.sphere_count();

        // Counting pass: totals do not depend on pruning or cutting.
        const long long assignments = assignment_count(data.system);
        for (long long k = 0; k < assignments; ++k) {
            const SignAssignment assignment = sign_assignment_at(data.system, k);
            const long long extensions = count_linear_extensions(
                data.system.region_ids(), order_constraints(data.system, assignment));
            sr.candidate_count += extensions;
            bool admissible = true;
            for (int region : data.system.region_ids()) {
                const SignedVertexGraphSpec& spec = data.table.lookup(
                    region, vertex_signs(data.system, region, assignment));
                if (!is_admissible(spec)) {
                    admissible = false;
                    break;
                }
            }
            if (admissible) sr.admissible_count += extensions;
        }

        const Candidate* winner = nullptr;
        for (const Candidate& c : candidates) {
            if (c.origin.system_index != s) continue;
            if (winner == nullptr || c.width < winner->width) winner = &c;
        }
        if (winner != nullptr) {
            sr.min_width = winner->width;
            sr.winner = winner->origin;
            sr.winning_profile = winner->profile.counts;
            sr.winning_gap_counts = winner->presentation.gap_counts;
            for (const Candidate& c : candidates) {
                if (c.origin.system_index == s && c.width == winner->width &&
                    c.profile == winner->profile) {
                    ++sr.winning_multiplicity;
                }
            }
        }

        if (all_candidates) {
            for (const Candidate& c : candidates) {
                if (c.origin.system_index != s) continue;
                auto row = std::find_if(sr.profiles.begin(), sr.profiles.end(),
                                        [&c](const ProfileRow& r) {
                                            return r.width == c.width &&
                                                   r.profile == c.profile.counts;
                                        });
                if (row == sr.profiles.end()) {
                    sr.profiles.push_back({c.width, c.profile.counts, 1});
                } else {
                    ++row->multiplicity;
                }
            }
        }

        report.systems.push_back(std::move(sr));
    }

    const Candidate& overall = min_width(candidates);
    report.overall_min_width = overall.width;
    report.winner = overall.origin;
    report.winner_profile = overall.profile.counts;
    return report;
}

std::string format_table(const Report& report) {
    std::ostringstream out;
    out << "instance: " << report.instance_name << '\n';
    out << "bridge index: " << report.bridge_index << '\n';
    out << "mode: " << (report.pruned ? "pruned" : "unpruned") << '\n';
    out << "baseline width: " << report.baseline_width << '\n';

    for (const SystemReport& sr : report.systems) {
        out << '\n';
        out << "system " << sr.system_index << ": " << sr.sphere_count
            << (sr.sphere_count == 1 ? " sphere" : " spheres") << '\n';
        out << "  candidates:   " << sr.candidate_count << '\n';
        out << "  admissible:   " << sr.admissible_count << '\n';
        if (sr.min_width) {
            out << "  min width:    " << *sr.min_width << '\n';
            out << "  winner:       assignment " << sr.winner.assignment_signs
                << ", extension " << sr.winner.extension_rank << '\n';
            out << "  profile:      " << join_ints(sr.winning_profile) << '\n';
            out << "  gap counts:   "
                << (sr.winning_gap_counts.empty() ? "(none)"
                                                  : join_longs(sr.winning_gap_counts))
                << '\n';
            out << "  multiplicity: " << sr.winning_multiplicity << '\n';
        } else {
            out << "  min width:    (no candidates)" << '\n';
        }
        if (report.all_candidates) {
            out << "  profiles:" << '\n';
            for (const ProfileRow& row : sr.profiles) {
                out << "    width " << row.width << "  x" << row.multiplicity << "  "
                    << join_ints(row.profile) << '\n';
            }
        }
    }

    out << '\n';
    out << "overall minimum: " << report.overall_min_width << '\n';
    out << "winner: " << origin_text(report.winner) << '\n';
    out << "winner profile: " << join_ints(report.winner_profile) << '\n';
    return out.str();
}

std::string format_json(const Report& report) {
    using nlohmann::ordered_json;

    const auto origin_json = [](const CandidateOrigin& origin) {
        ordered_json j;
        if (origin.is_baseline) {
            j["origin"] = "baseline";
        } else {
            j["origin"] = "composite";
            j["system"] = origin.system_index;
            j["assignment"] = origin.assignment_signs;
            j["extension"] = origin.extension_rank;
        }
        return j;
    };

    ordered_json j;
    j["instance"] = report.instance_name;
    j["bridge_index"] = report.bridge_index;
    j["mode"] = report.pruned ? "pruned" : "unpruned";
    j["baseline_width"] = report.baseline_width;
    j["systems"] = ordered_json::array();
    for (const SystemReport& sr : report.systems) {
        ordered_json js;
        js["index"] = sr.system_index;
        js["spheres"] = sr.sphere_count;
        js["candidates"] = sr.candidate_count;
        js["admissible"] = sr.admissible_count;
        if (sr.min_width) {
            js["min_width"] = *sr.min_width;
            js["winner"] = origin_json(sr.winner);
            js["winning_profile"] = sr.winning_profile;
            js["gap_counts"] = sr.winning_gap_counts;
            js["multiplicity"] = sr.winning_multiplicity;
        } else {
            js["min_width"] = nullptr;
        }
        if (report.all_candidates) {
            js["profiles"] = ordered_json::array();
            for (const ProfileRow& row : sr.profiles) {
                ordered_json jr;
                jr["width"] = row.width;
                jr["multiplicity"] = row.multiplicity;
                jr["profile"] = row.profile;
                js["profiles"].push_back(std::move(jr));
            }
        }
        j["systems"].push_back(std::move(js));
    }
    j["overall_minimum"] = report.overall_min_width;
    j["winner"] = origin_json(report.winner);
    j["winner_profile"] = report.winner_profile;
    return j.dump(2) + "\n";
}

}  // namespace thinpos
