#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

// Exhaustive-enumeration kernels. Every verifier reduces to "find the first
// index in [0, n) whose check fails"; the parallel version returns the same
// index as the serial one so reports do not depend on scheduling.
namespace hopf2x::kernels {

enum class Exec { serial, parallel };

Exec default_exec();
void set_default_exec(Exec e);

template <class Pred>
std::size_t first_failure_serial(std::size_t n, Pred&& ok)
{
    for (std::size_t i = 0; i < n; ++i)
        if (!ok(i)) return i;
    return n;
}

template <class Pred>
std::size_t first_failure_parallel(std::size_t n, Pred&& ok)
{
    std::atomic<std::size_t> best{n};
    std::exception_ptr err;
    std::mutex err_mu;
    std::size_t err_at = n;
    const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 64)
    for (long long k = 0; k < count; ++k) {
        std::size_t i = static_cast<std::size_t>(k);
        if (i >= best.load(std::memory_order_relaxed)) continue;
        try {
            if (!ok(i)) {
                std::size_t cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
            }
        } catch (...) {
            std::lock_guard lock(err_mu);
            if (i < err_at) {
                err_at = i;
                err = std::current_exception();
            }
        }
    }
    if (err && err_at < best.load()) std::rethrow_exception(err);
    return best.load();
}

template <class Pred>
std::size_t first_failure(std::size_t n, Pred&& ok, Exec e = default_exec())
{
    if (e == Exec::serial || n < 256) return first_failure_serial(n, ok);
    return first_failure_parallel(n, ok);
}

// Runs body(i) for every i; results must go to disjoint slots.
template <class Body>
void for_each_index(std::size_t n, Body&& body, Exec e = default_exec())
{
    if (e == Exec::serial || n < 64) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::exception_ptr err;
    std::mutex err_mu;
    const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 16)
    for (long long k = 0; k < count; ++k) {
        try {
            body(static_cast<std::size_t>(k));
        } catch (...) {
            std::lock_guard lock(err_mu);
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
}

}  // namespace hopf2x::kernels
