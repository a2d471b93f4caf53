#pragma once

// Maps the CLI's identity ids onto the verifiers, expands each id into its
// default parameter instances, and runs task lists on a small pool. Reports
// always come back in registry order regardless of thread count, so output
// bytes are a pure function of the configuration.

#include "durfee/identities.hpp"

#include <atomic>
#include <functional>
#include <thread>

namespace durfee {

struct VerifyOptions {
    std::optional<int> t;
    std::optional<int> r;
    int order = 100;
};

struct IdentityTask {
    std::string id;
    std::function<VerificationReport(GenfunCache&)> run;
};

/// Canonical id order; `verify all` runs them in exactly this order.
inline const std::vector<std::string>& identity_ids() {
    static const std::vector<std::string> ids = {
        "prop3.1",  "prop3.2",  "cor3.3",   "lemma3.4", "prop4.1",
        "thm1.3.1", "thm1.3.2", "thm1.3.3", "thm5.1.1", "thm5.1.2",
        "thm5.1.3", "thm5.2.1", "thm5.2.2", "thm5.2.3", "thm5.2.4",
        "f4",       "andrews-lewis-refined", "injection", "r2-equiv",
        "r2-expand", "partial-fraction", "pentagonal", "zetainv"};
    return ids;
}

inline bool is_known_identity(const std::string& id) {
    const auto& ids = identity_ids();
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

namespace detail {

inline std::vector<int> moduli_for(const VerifyOptions& opt, std::vector<int> defaults) {
    if (opt.t) return {*opt.t};
    return defaults;
}

}  // namespace detail

/// Expands one identity id into concrete runnable tasks. Unknown ids and
/// invalid parameters throw std::invalid_argument before any computation.
inline std::vector<IdentityTask> make_tasks(const std::string& id, const VerifyOptions& opt) {
    if (!is_known_identity(id)) throw std::invalid_argument("unknown identity id: " + id);
    const int N = opt.order;
    if (N < 0) throw std::invalid_argument("order must be >= 0");
    std::vector<IdentityTask> tasks;
    auto add = [&](std::function<VerificationReport(GenfunCache&)> fn) {
        tasks.push_back({id, std::move(fn)});
    };

    auto odd_moduli = [&](std::vector<int> defaults) {
        auto ts = detail::moduli_for(opt, std::move(defaults));
        for (int t : ts)
            if (t < 1 || t % 2 == 0)
                throw std::invalid_argument(id + " requires an odd modulus, got " + std::to_string(t));
        return ts;
    };
    auto even_moduli = [&](std::vector<int> defaults) {
        auto ts = detail::moduli_for(opt, std::move(defaults));
        for (int t : ts)
            if (t < 2 || t % 2 != 0)
                throw std::invalid_argument(id + " requires an even modulus, got " + std::to_string(t));
        return ts;
    };

    if (id == "prop3.1") {
        for (int t : odd_moduli({5, 7, 9})) {
            std::vector<int> rs;
            if (opt.r) {
                if (*opt.r < 0 || *opt.r >= t)
                    throw std::invalid_argument("prop3.1 requires 0 <= r < t");
                rs = {*opt.r};
            } else {
                for (int r = 0; r < t; ++r) rs.push_back(r);
            }
            for (int r : rs)
                add([=](GenfunCache& c) { return verify_prop_3_1(t, r, N, c); });
        }
    } else if (id == "prop3.2") {
        for (int t : odd_moduli({5, 7, 9})) {
            std::vector<int> rs;
            if (opt.r) {
                if (*opt.r < 1 || *opt.r > 3 * t + 1 || *opt.r % 3 != 1)
                    throw std::invalid_argument("prop3.2 requires r = 1 mod 3 in [1, 3t+1]");
                rs = {*opt.r};
            } else {
                for (int r = 1; r <= 3 * t + 1; r += 3) rs.push_back(r);
            }
            for (int r : rs)
                add([=](GenfunCache& c) { return verify_prop_3_2(t, r, N, c); });
        }
    } else if (id == "cor3.3") {
        for (int t : odd_moduli({5, 7, 9, 11, 13}))
            add([=](GenfunCache& c) { return verify_cor_3_3(t, N, c); });
    } else if (id == "lemma3.4") {
        for (int t : odd_moduli({5, 7, 9})) {
            std::vector<int> rs;
            if (opt.r) {
                if (*opt.r <= 1 || *opt.r > 3 * t + 1 || *opt.r % 3 != 1)
                    throw std::invalid_argument("lemma3.4 requires r = 1 mod 3 in (1, 3t+1]");
                rs = {*opt.r};
            } else {
                for (int r = 4; r <= 3 * t + 1; r += 3) rs.push_back(r);
            }
            for (int r : rs)
                add([=](GenfunCache& c) { return verify_lemma_3_4(t, r, N, c); });
        }
    } else if (id == "prop4.1") {
        for (int t : even_moduli({2, 4, 6, 8, 10}))
            add([=](GenfunCache& c) { return verify_prop_4_1(t, N, c); });
    } else if (id == "thm1.3.1") {
        for (int t : odd_moduli({3, 5, 7, 9, 11, 13, 15}))
            add([=](GenfunCache& c) { return verify_thm_1_3_1(t, N, c); });
    } else if (id == "thm1.3.2") {
        for (int t : even_moduli({2, 4, 6, 8, 10}))
            add([=](GenfunCache& c) { return verify_thm_1_3_2(t, N, c); });
    } else if (id == "thm1.3.3") {
        const int n_max = std::min(N, 30);  // symbol enumeration bound
        add([=](GenfunCache&) { return verify_thm_1_3_3(n_max); });
    } else if (id.rfind("thm5.1.", 0) == 0) {
        const int part = id.back() - '0';
        add([=](GenfunCache& c) { return verify_thm_5_1(part, N, c); });
    } else if (id.rfind("thm5.2.", 0) == 0) {
        const int part = id.back() - '0';
        add([=](GenfunCache& c) { return verify_thm_5_2(part, N, c); });
    } else if (id == "f4") {
        add([=](GenfunCache& c) { return verify_f4(N, c); });
    } else if (id == "andrews-lewis-refined") {
        const int n_max = std::max(N, 5);
        add([=](GenfunCache& c) { return verify_andrews_lewis_refined(n_max, c); });
    } else if (id == "injection") {
        add([=](GenfunCache&) { return verify_injection(13, 51); });
    } else if (id == "r2-equiv") {
        for (int t : detail::moduli_for(opt, {2, 3, 4, 5, 6, 7, 8}))
            add([=](GenfunCache& c) { return verify_r2_equiv(t, N, c); });
    } else if (id == "r2-expand") {
        for (int t : detail::moduli_for(opt, {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}))
            add([=](GenfunCache&) { return check_R2_expand(t, N); });
    } else if (id == "partial-fraction") {
        for (int t : detail::moduli_for(opt, {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}))
            add([=](GenfunCache&) { return check_partial_fraction(t, N); });
    } else if (id == "pentagonal") {
        add([=](GenfunCache&) { return verify_pentagonal(std::max(N, 300)); });
    } else if (id == "zetainv") {
        add([=](GenfunCache&) { return verify_zetainv(2, std::max(opt.t.value_or(30), 2)); });
    }
    return tasks;
}

inline std::vector<IdentityTask> make_all_tasks(const VerifyOptions& opt) {
    std::vector<IdentityTask> tasks;
    for (const auto& id : identity_ids()) {
        auto expanded = make_tasks(id, opt);
        tasks.insert(tasks.end(), std::make_move_iterator(expanded.begin()),
                     std::make_move_iterator(expanded.end()));
    }
    return tasks;
}

/// Runs the tasks on up to `threads` workers. Results land in task order;
/// exact arithmetic plus fixed ordering makes the output independent of the
/// thread count.
inline std::vector<VerificationReport> run_tasks(const std::vector<IdentityTask>& tasks,
                                                 int threads, GenfunCache& cache) {
    std::vector<VerificationReport> results(tasks.size());
    if (threads <= 1) {
        for (size_t i = 0; i < tasks.size(); ++i) results[i] = tasks[i].run(cache);
        return results;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    auto worker = [&]() {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            try {
                results[i] = tasks[i].run(cache);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!error) error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    const int n = std::min<int>(threads, static_cast<int>(tasks.size()));
    pool.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
    return results;
}

}  // namespace durfee
