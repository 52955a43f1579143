#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace hgcn {

#ifdef HGCN_REAL64
using real = double;
#else
using real = float;
#endif

using Shape = std::vector<int>;

// ---------------------------------------------------------------------------
// Error taxonomy. Every throw site uses one of these so the CLI can map
// failures to stable exit codes and a machine-readable error line.
// ---------------------------------------------------------------------------

struct DimensionError : std::runtime_error {
    explicit DimensionError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ContractError : std::logic_error {
    explicit ContractError(const std::string& msg) : std::logic_error(msg) {}
};

struct GenerationError : std::runtime_error {
    explicit GenerationError(const std::string& msg) : std::runtime_error(msg) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

inline std::string shape_str(const Shape& s) {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) os << 'x';
        os << s[i];
    }
    os << ']';
    return os.str();
}

inline int64_t shape_numel(const Shape& s) {
    int64_t n = 1;
    for (int d : s) n *= d;
    return n;
}

inline void require_dim(bool cond, const std::string& msg) {
    if (!cond) throw DimensionError(msg);
}

// ---------------------------------------------------------------------------
// Deterministic seed derivation. Commands derive per-sample / per-epoch seeds
// from the run seed and a tag chain, so resumption and parallel generation
// stay reproducible without shared RNG state.
// ---------------------------------------------------------------------------

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline uint64_t derive_seed(uint64_t base) { return splitmix64(base); }

template <typename... Rest>
uint64_t derive_seed(uint64_t base, uint64_t tag, Rest... rest) {
    return derive_seed(splitmix64(base ^ splitmix64(tag)), rest...);
}

inline uint64_t hash_tag(const std::string& s) {
    uint64_t h = 1469598103934665603ULL;  // FNV-1a
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

// ---------------------------------------------------------------------------
// Thread control. Ops parallelize only over independent slices and reduce
// partials in fixed order, so results are bit-identical for any thread count.
// ---------------------------------------------------------------------------

inline int& thread_count_ref() {
    static int count = [] {
        if (const char* env = std::getenv("HGCN_THREADS")) {
            int n = std::atoi(env);
            if (n > 0) return n;
        }
        unsigned hw = std::thread::hardware_concurrency();
        return static_cast<int>(hw == 0 ? 1 : (hw > 8 ? 8 : hw));
    }();
    return count;
}

inline int thread_count() { return thread_count_ref(); }
inline void set_thread_count(int n) { thread_count_ref() = n < 1 ? 1 : n; }

// Runs body(i) for i in [0, n). Splits into contiguous chunks when the
// estimated per-item cost justifies spawning.
inline void parallel_for(int64_t n, const std::function<void(int64_t)>& body,
                         int64_t work_per_item = 1) {
    const int threads = thread_count();
    if (threads <= 1 || n <= 1 || n * work_per_item < 16384) {
        for (int64_t i = 0; i < n; ++i) body(i);
        return;
    }
    const int used = static_cast<int>(n < threads ? n : threads);
    std::vector<std::thread> pool;
    pool.reserve(used);
    for (int t = 0; t < used; ++t) {
        const int64_t lo = n * t / used;
        const int64_t hi = n * (t + 1) / used;
        pool.emplace_back([lo, hi, &body] {
            for (int64_t i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace hgcn
