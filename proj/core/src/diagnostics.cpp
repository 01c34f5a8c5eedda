#include "ramsey/diagnostics.hpp"

#include <atomic>
#include <mutex>
#include <utility>

namespace ramsey::diagnostics {

namespace {

std::mutex& handler_mutex() {
    static std::mutex m;
    return m;
}

Handler& current_handler() {
    static Handler h;
    return h;
}

std::atomic<std::size_t> g_warnings{0};

}  // namespace

void set_handler(Handler handler) {
    std::lock_guard lock(handler_mutex());
    current_handler() = std::move(handler);
}

void report(Severity severity, std::string_view message) {
    if (severity == Severity::warning) g_warnings.fetch_add(1, std::memory_order_relaxed);
    std::lock_guard lock(handler_mutex());
    if (auto& h = current_handler()) h(severity, message);
}

std::size_t warning_count() noexcept { return g_warnings.load(std::memory_order_relaxed); }

void reset_counts() noexcept { g_warnings.store(0, std::memory_order_relaxed); }

}  // namespace ramsey::diagnostics
