#include "thinpos/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <limits>
#include <stdexcept>
#include <thread>
#include <utility>

namespace thinpos {

long long lower_bound_thick(long long n1, long long n2) {
    if (n1 < 1 || n2 < 1) {
        throw std::invalid_argument("lower_bound_thick: arguments must be >= 1");
    }
    return n1 * (n1 + 1) + n2 * (n2 + 1);
}

Candidate baseline_candidate(int bridge_index) {
    if (bridge_index < 1) {
        throw std::invalid_argument("baseline_candidate: bridge index must be >= 1");
    }
    // The baseline is the empty decomposition: one region holding all n
    // bridges, composed through the ordinary machinery.
    SphereSystem empty_system;
    GraphTable table;
    SignedVertexGraphSpec spec;
    spec.region_id = 0;
    spec.bridge_number = bridge_index;
    table.add(spec);

    Candidate candidate;
    candidate.origin.is_baseline = true;
    candidate.presentation = compose(empty_system, SignAssignment{}, table, {0});
    candidate.width = candidate.presentation.total_width;
    candidate.profile = width_profile(candidate.presentation.word);
    return candidate;
}

namespace {

struct ResolvedRegion {
    int region_id = 0;
    const SignedVertexGraphSpec* spec = nullptr;
    BridgeShape shape;
};

struct AssignmentJob {
    int system_index = 0;
    long long assignment_index = 0;
};

class AssignmentSearcher {
public:
    AssignmentSearcher(const SurfaceSystemData& data, const SignAssignment& assignment,
                       const SearchOptions& options, std::atomic<long long>& best)
        : data_(data), assignment_(assignment), options_(options), best_(best) {
        region_ids_ = data.system.region_ids();
        regions_.reserve(region_ids_.size());
        for (int region : region_ids_) {
            ResolvedRegion r;
            r.region_id = region;
            r.spec = &data.table.lookup(region,
                                        vertex_signs(data.system, region, assignment));
            r.shape = bridge_shape(*r.spec);
            regions_.push_back(r);
        }
    }

    bool all_admissible() const {
        return std::all_of(regions_.begin(), regions_.end(),
                           [](const ResolvedRegion& r) { return is_admissible(*r.spec); });
    }

    std::vector<Candidate> run() {
        pred_mask_.assign(regions_.size(), 0);
        for (const auto& [below, above] :
             order_constraints(data_.system, assignment_).below_above) {
            pred_mask_[index_of(above)] |= std::uint64_t{1} << index_of(below);
        }
        order_.clear();
        placed_ = 0;
        rank_ = 0;
        results_.clear();
        extend(0, 0);
        return std::move(results_);
    }

private:
    std::size_t index_of(int region_id) const {
        const auto it =
            std::lower_bound(region_ids_.begin(), region_ids_.end(), region_id);
        return static_cast<std::size_t>(it - region_ids_.begin());
    }

    // Number of stacking orders completing the current partial placement;
    // used to keep extension ranks canonical across cut branches.
    long long count_completions() {
        if (order_.size() == regions_.size()) return 1;
        long long total = 0;
        for (std::size_t i = 0; i < regions_.size(); ++i) {
            const std::uint64_t bit = std::uint64_t{1} << i;
            if ((placed_ & bit) != 0) continue;
            if ((pred_mask_[i] & ~placed_) != 0) continue;
            placed_ |= bit;
            order_.push_back(regions_[i].region_id);
            total += count_completions();
            order_.pop_back();
            placed_ &= ~bit;
        }
        return total;
    }

    void extend(long long strand_count, long long partial_width) {
        if (order_.size() == regions_.size()) {
            emit();
            ++rank_;
            return;
        }
        for (std::size_t i = 0; i < regions_.size(); ++i) {
            const std::uint64_t bit = std::uint64_t{1} << i;
            if ((placed_ & bit) != 0) continue;
            if ((pred_mask_[i] & ~placed_) != 0) continue;

            // Partial width including every level up to the block's top; a
            // lower bound on any completion, since later levels only add.
            long long count = strand_count;
            long long width = partial_width;
            for (int k = 0; k < regions_[i].shape.minima; ++k) {
                count += 2;
                width += count;
            }
            for (int k = 0; k < regions_[i].shape.maxima; ++k) {
                count -= 2;
                width += count;
            }

            placed_ |= bit;
            order_.push_back(regions_[i].region_id);
            if (cut_active() && width > best_.load(std::memory_order_relaxed)) {
                rank_ += count_completions();
            } else {
                extend(count, width);
            }
            order_.pop_back();
            placed_ &= ~bit;
        }
    }

    bool cut_active() const { return options_.prune && options_.cut_with_bound; }

    void emit() {
        Candidate candidate;
        candidate.origin.system_index = -1;  // filled in by the caller
        candidate.origin.extension_rank = rank_;
        candidate.presentation = compose(data_.system, assignment_, data_.table, order_);
        candidate.width = candidate.presentation.total_width;
        candidate.profile = width_profile(candidate.presentation.word);
        if (cut_active()) {
            long long current = best_.load(std::memory_order_relaxed);
            while (candidate.width < current &&
                   !best_.compare_exchange_weak(current, candidate.width,
                                                std::memory_order_relaxed)) {
            }
        }
        results_.push_back(std::move(candidate));
    }

    const SurfaceSystemData& data_;
    const SignAssignment& assignment_;
    const SearchOptions& options_;
    std::atomic<long long>& best_;

    std::vector<int> region_ids_;
    std::vector<ResolvedRegion> regions_;
    std::vector<std::uint64_t> pred_mask_;
    std::uint64_t placed_ = 0;
    std::vector<int> order_;
    long long rank_ = 0;
    std::vector<Candidate> results_;
};

std::vector<Candidate> search_assignment(const SurfaceSystemData& data,
                                         const SignAssignment& assignment,
                                         const SearchOptions& options,
                                         std::atomic<long long>& best) {
    AssignmentSearcher searcher(data, assignment, options, best);
    if (options.prune && !searcher.all_admissible()) return {};
    return searcher.run();
}

}  // namespace

std::vector<Candidate> build_candidate_set(const Instance& instance,
                                           const SearchOptions& options) {
    std::vector<Candidate> candidates;
    candidates.push_back(baseline_candidate(instance.bridge_index));

    // One cutting bound per system, starting empty. A shared bound seeded by
    // the baseline could cut an entire system whose minimum lies above it,
    // and which candidates survive would then depend on thread timing; with
    // per-system bounds every system's minimum, winner and multiplicity are
    // exact for any schedule.
    std::vector<std::atomic<long long>> bests(instance.systems.size());
    for (auto& b : bests) b.store(std::numeric_limits<long long>::max());

    std::vector<AssignmentJob> jobs;
    for (int s = 0; s < static_cast<int>(instance.systems.size()); ++s) {
        const long long total = assignment_count(instance.systems[s].system);
        for (long long k = 0; k < total; ++k) jobs.push_back({s, k});
    }

    std::vector<std::vector<Candidate>> slots(jobs.size());
    std::vector<std::exception_ptr> failures(jobs.size());

    const auto run_job = [&](std::size_t j) {
        const AssignmentJob& job = jobs[j];
        const SurfaceSystemData& data = instance.systems[job.system_index];
        try {
            const SignAssignment assignment =
                sign_assignment_at(data.system, job.assignment_index);
            std::vector<Candidate> found = search_assignment(
                data, assignment, options, bests[job.system_index]);
            for (Candidate& c : found) {
                c.origin.system_index = job.system_index;
                c.origin.assignment_index = job.assignment_index;
                c.origin.assignment_signs = assignment.bits(data.system);
            }
            slots[j] = std::move(found);
        } catch (...) {
            failures[j] = std::current_exception();
        }
    };

    const int threads = std::max(1, options.threads);
    if (threads == 1 || jobs.size() <= 1) {
        for (std::size_t j = 0; j < jobs.size(); ++j) run_job(j);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        const int workers = std::min<std::size_t>(threads, jobs.size());
        pool.reserve(static_cast<std::size_t>(workers));
        for (int t = 0; t < workers; ++t) {
            pool.emplace_back([&] {
                for (std::size_t j = next.fetch_add(1); j < jobs.size();
                     j = next.fetch_add(1)) {
                    run_job(j);
                }
            });
        }
        for (std::thread& t : pool) t.join();
    }

    // First failure in canonical order, so errors are deterministic too.
    for (const std::exception_ptr& failure : failures) {
        if (failure) std::rethrow_exception(failure);
    }
    for (std::vector<Candidate>& slot : slots) {
        for (Candidate& c : slot) candidates.push_back(std::move(c));
    }
    return candidates;
}

std::vector<Candidate> build_candidate_set(const Instance& instance, bool prune) {
    SearchOptions options;
    options.prune = prune;
    options.cut_with_bound = prune;
    return build_candidate_set(instance, options);
}

const Candidate& min_width(const std::vector<Candidate>& candidates) {
    if (candidates.empty()) {
        throw EmptyCandidateSet("no candidates to minimize over");
    }
    const Candidate* winner = &candidates.front();
    for (const Candidate& c : candidates) {
        if (c.width < winner->width) winner = &c;
    }
    return *winner;
}

}  // namespace thinpos
