#include "theta/identities.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>

#include "theta/branching.hpp"
#include "theta/codimension.hpp"
#include "theta/factorization.hpp"

namespace theta {

std::vector<std::vector<int>> compositions(int r) {
    std::vector<std::vector<int>> out;
    if (r <= 0) return out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = 1; p <= left; ++p) {
            cur.push_back(p);
            self(self, left - p);
            cur.pop_back();
        }
    };
    rec(rec, r);
    return out;
}

unsigned sweep_threads_from_env() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("THETA_FACTOR_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return std::min<unsigned>(static_cast<unsigned>(v), hw);
    }
    return hw;
}

namespace {

using Task = std::function<SweepResult()>;

std::vector<SweepResult> run_tasks(const std::vector<Task>& tasks, unsigned threads) {
    std::vector<SweepResult> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) results[i] = tasks[i]();
    };
    const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return results;
}

void merge_into(SweepResult& into, const SweepResult& part) {
    into.checked += part.checked;
    into.failed += part.failed;
    if (into.first_failure.empty()) into.first_failure = part.first_failure;
}

void record(SweepResult& res, bool ok, const std::string& what) {
    ++res.checked;
    if (!ok) {
        ++res.failed;
        if (res.first_failure.empty()) res.first_failure = what;
    }
}

SweepResult balance_for_rank(int r, int max_level) {
    SweepResult res{"balance", 0, 0, {}};
    for (int k = 1; k <= max_level; ++k)
        for (const auto& mu : enumerate_mu(r, k)) {
            const auto b = verify_boundary_balance(mu);
            record(res, b.holds, "r=" + std::to_string(r) + " k=" + std::to_string(k) + " mu=" +
                                     mu.mu().to_string());
        }
    return res;
}

void check_tree(const DecompositionTree& t, SweepResult& res) {
    record(res, check_star(t.spec).holds, "node " + std::to_string(t.spec.genus()));
    for (const auto& [mu, child] : t.children) check_tree(child, res);
}

// Roots (g, r, d = r g, k, ell = k) with no marked points satisfy the
// balance condition; trees of depth 2 are checked node by node.
SweepResult star_for_rank(int r, int max_level) {
    SweepResult res{"star_preservation", 0, 0, {}};
    const int depth = 2;
    for (int k = 1; k <= std::min(max_level, 3); ++k) {
        const ModuliSpec root(depth, r, r * depth, k, k, {});
        check_tree(build_tree(root, depth), res);
    }
    return res;
}

SweepResult telescoping_for_rank(int r) {
    SweepResult res{"telescoping", 0, 0, {}};
    for (auto& c : compositions(r)) {
        const FlagType flag(c);
        record(res, telescoping_check(flag), "flag of rank " + std::to_string(r));
    }
    return res;
}

SweepResult branching_for_rank(int r, int max_level) {
    SweepResult res{"branching", 0, 0, {}};
    for (int m = 0; m <= max_level; ++m) {
        const auto id = verify_branching_identity(static_cast<std::size_t>(r), m);
        record(res, id.equal, "r=" + std::to_string(r) + " m=" + std::to_string(m));
    }
    return res;
}

}  // namespace

std::vector<SweepResult> run_identity_sweep(int max_rank, int max_level, unsigned threads) {
    if (max_rank < 1 || max_level < 1) throw std::invalid_argument("sweep bounds must be positive");
    const std::vector<std::string> names{"balance", "star_preservation", "telescoping", "branching"};
    std::vector<Task> tasks;
    // Task index = sweep * max_rank + (r - 1).
    for (int r = 1; r <= max_rank; ++r) tasks.push_back([=] { return balance_for_rank(r, max_level); });
    for (int r = 1; r <= max_rank; ++r) {
        if (r <= 2) tasks.push_back([=] { return star_for_rank(r, max_level); });
        else tasks.push_back([] { return SweepResult{"star_preservation", 0, 0, {}}; });
    }
    for (int r = 1; r <= max_rank; ++r) tasks.push_back([=] { return telescoping_for_rank(r); });
    for (int r = 1; r <= max_rank; ++r) tasks.push_back([=] { return branching_for_rank(r, max_level); });

    const auto parts = run_tasks(tasks, threads);
    std::vector<SweepResult> out;
    for (std::size_t s = 0; s < names.size(); ++s) {
        SweepResult merged{names[s], 0, 0, {}};
        for (int r = 0; r < max_rank; ++r)
            merge_into(merged, parts[s * static_cast<std::size_t>(max_rank) + static_cast<std::size_t>(r)]);
        out.push_back(std::move(merged));
    }
    return out;
}

}  // namespace theta
