#pragma once

#include <cstdint>

namespace lrs {

// Tally of exact-arithmetic operations performed in the active domain.
// divs stays 0 unless a mode explicitly divides (monic normalization).
struct OpCounter {
    std::uint64_t mults = 0;
    std::uint64_t divs = 0;
    std::uint64_t adds = 0;
};

namespace detail {
OpCounter* active_counter() noexcept;
void set_active_counter(OpCounter* c) noexcept;
}  // namespace detail

// Installs a counter for the current thread; every domain multiplication,
// inversion and addition performed while the scope is alive is tallied.
// Scopes nest; the previous counter is restored on destruction.
class CountingScope {
public:
    explicit CountingScope(OpCounter& counter) noexcept
        : prev_(detail::active_counter()) {
        detail::set_active_counter(&counter);
    }
    ~CountingScope() { detail::set_active_counter(prev_); }

    CountingScope(const CountingScope&) = delete;
    CountingScope& operator=(const CountingScope&) = delete;

private:
    OpCounter* prev_;
};

}  // namespace lrs
