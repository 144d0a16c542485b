#include "carlitz/parallel.hpp"

#include <exception>
#include <stdexcept>
#include <thread>
#include <vector>

namespace carlitz {

Laurent sum_over_monics(const FieldPtr& F, int degree, int threads,
                        const std::function<Laurent(const Poly&)>& term) {
    if (threads < 1) throw std::invalid_argument("thread count must be >= 1");
    const std::uint64_t count = monic_count(F, degree);

    auto sum_range = [&](std::uint64_t lo, std::uint64_t hi) {
        Laurent acc = Laurent::exact_zero(F);
        for (std::uint64_t k = lo; k < hi; ++k) acc = acc + term(monic_at(F, degree, k));
        return acc;
    };

    const std::uint64_t nthreads = std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), count);
    if (nthreads <= 1) return sum_range(0, count);

    std::vector<Laurent> partial(nthreads, Laurent::exact_zero(F));
    std::vector<std::exception_ptr> errors(nthreads);
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (std::uint64_t t = 0; t < nthreads; ++t) {
        const std::uint64_t lo = count * t / nthreads;
        const std::uint64_t hi = count * (t + 1) / nthreads;
        pool.emplace_back([&, t, lo, hi] {
            try {
                partial[t] = sum_range(lo, hi);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& err : errors)
        if (err) std::rethrow_exception(err);

    Laurent acc = Laurent::exact_zero(F);
    for (const auto& p : partial) acc = acc + p;
    return acc;
}

} // namespace carlitz
