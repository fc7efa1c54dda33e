#include "lrs/opcount.hpp"

namespace lrs::detail {

namespace {
thread_local OpCounter* g_counter = nullptr;
}

OpCounter* active_counter() noexcept { return g_counter; }
void set_active_counter(OpCounter* c) noexcept { g_counter = c; }

}  // namespace lrs::detail
