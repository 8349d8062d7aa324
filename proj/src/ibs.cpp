#include "salbp/ibs.hpp"

#include <chrono>
#include <ostream>

#include "salbp/rng.hpp"

namespace salbp {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Driver {
    const ProblemSpec& spec;
    const IbsConfig& config;
    Instance reversed;
    ProblemSpec reversed_spec;
    std::uint64_t app_counter = 0;
    Clock::time_point run_start = Clock::now();

    explicit Driver(const ProblemSpec& s, const IbsConfig& c)
        : spec(s), config(c), reversed(reverse_instance(*s.instance)),
          reversed_spec{&reversed, s.m} {}

    // One beam search application; `reverse` selects the instance direction.
    // With `randomize` (hp mode, phase-2 large window) the beam parameters
    // and possibly the weights are redrawn per application.
    BsOutcome apply(int C, BsParams params, bool reverse, bool randomize = false) {
        auto rng = make_stream(config.seed, app_counter++);
        params.det_rate = config.det_rate;
        params.early_exit = !config.strict_search;
        params.dup_check_generated = config.strict_search;
        GreedyWeights weights = config.weights;
        if (randomize) {
            params.k_bw = std::uniform_int_distribution<int>(config.hp.k_bw_min,
                                                             config.hp.k_bw_max)(rng);
            params.k_ext = std::uniform_int_distribution<int>(config.hp.k_ext_min,
                                                              config.hp.k_ext_max)(rng);
            if (std::uniform_real_distribution<double>(0.0, 1.0)(rng) <
                config.hp.random_weight_prob) {
                std::uniform_real_distribution<double> kappa(-1.0, 1.0);
                weights.kappa1 = kappa(rng);
                weights.kappa2 = kappa(rng);
            }
        }
        BsOutcome out = beam_search(reverse ? reversed_spec : spec, C, params, weights, rng);
        if (out.success && reverse) {
            out.solution = reverse_solution(*out.solution);
            out.solution->instance_name = spec.instance->name();
        }
        return out;
    }

    void log(IbsResult& result, int C, int attempts, bool success, double elapsed_s) {
        const long long ms = static_cast<long long>(elapsed_s * 1000.0);
        result.per_c_log.push_back({C, attempts, success, ms});
        if (config.verbose_log)
            *config.verbose_log << "C=" << C << " attempts=" << attempts
                                << " success=" << (success ? 1 : 0) << " ms=" << ms << "\n";
    }

    IbsResult run() {
        IbsResult result;
        const int start_c = starting_cycle_time(spec);
        const long long sum_t = spec.instance->total_time();

        // Phase 1: walk C up with a small beam until something succeeds.
        // C = sum of all times is always feasible, so this terminates.
        int C = start_c;
        for (;;) {
            auto t0 = Clock::now();
            int attempts = 0;
            BsOutcome out = apply(C, config.phase1_params, false);
            ++attempts;
            if (!out.success) {
                out = apply(C, config.phase1_params, true);
                ++attempts;
            }
            log(result, C, attempts, out.success, seconds_since(t0));
            if (out.success) {
                result.best_cycle_time = C;
                result.best_solution = *out.solution;
                result.time_to_best = seconds_since(run_start);
                break;
            }
            if (C >= sum_t)
                throw std::logic_error("phase 1 failed at C = sum of times");
            ++C;
        }

        // Phase 2: walk C down; each cycle time gets its own time budget.
        const double budget = config.hp_mode ? config.hp.time_limit : config.time_limit_per_c;
        const double small_frac =
            config.hp_mode ? config.hp.small_fraction : config.small_fraction;
        C = result.best_cycle_time - 1;
        while (C >= start_c) {
            auto t0 = Clock::now();
            int attempts = 0;
            bool success = false;
            while (seconds_since(t0) < budget && !success) {
                const bool small_window = seconds_since(t0) < small_frac * budget;
                const BsParams& phase_params =
                    small_window ? config.small_params : config.large_params;
                const bool randomize = config.hp_mode && !small_window;
                BsOutcome out = apply(C, phase_params, false, randomize);
                ++attempts;
                if (!out.success) {
                    out = apply(C, phase_params, true, randomize);
                    ++attempts;
                }
                if (out.success) {
                    success = true;
                    result.best_cycle_time = C;
                    result.best_solution = *out.solution;
                    result.time_to_best = seconds_since(run_start);
                }
            }
            log(result, C, attempts, success, seconds_since(t0));
            if (!success) break;
            --C;
        }
        return result;
    }
};

}  // namespace

IbsResult run_ibs(const ProblemSpec& spec, const IbsConfig& config) {
    Driver driver(spec, config);
    return driver.run();
}

IbsResult run_ibs_hp(const ProblemSpec& spec, const IbsConfig& config) {
    IbsConfig hp_config = config;
    hp_config.hp_mode = true;
    Driver driver(spec, hp_config);
    return driver.run();
}

}  // namespace salbp
