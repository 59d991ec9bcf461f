#ifndef PVI_UTIL_HPP
#define PVI_UTIL_HPP

#include <cstdint>
#include <future>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace pvi {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arithmetic on incompatible quadratic extensions.
struct FieldMismatchError : Error {
    using Error::Error;
};

struct DivisionByZeroError : Error {
    using Error::Error;
};

// Expression text rejected; carries the byte offset of the offending token.
struct ParseError : Error {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t off)
        : Error(msg + " (offset " + std::to_string(off) + ")"), offset(off) {}
};

// Catalog file violates the schema.
struct SchemaError : Error {
    using Error::Error;
};

// A parametrization does not meet an operation's precondition
// (dx/ds = 0, u in {0,1,x}, fixed locus, ...).
struct DegenerateError : Error {
    using Error::Error;
};

inline std::uint64_t hash_combine(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 12) + (h >> 4);
    return h;
}

// Applies fn to 0..n-1, possibly concurrently; results are returned in input
// order so downstream behaviour stays deterministic.
template <class F>
auto parallel_map(std::size_t n, unsigned jobs, F fn)
    -> std::vector<decltype(fn(std::size_t{0}))> {
    using R = decltype(fn(std::size_t{0}));
    std::vector<R> out(n);
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errs(jobs);
    unsigned k = std::min<std::size_t>(jobs, n);
    for (unsigned t = 0; t < k; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= n) break;
                    out[i] = fn(i);
                }
            } catch (...) {
                errs[t] = std::current_exception();
                next = n;
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace pvi

#endif
