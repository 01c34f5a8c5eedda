#pragma once

#include <cstddef>
#include <functional>
#include <string_view>

namespace ramsey::diagnostics {

enum class Severity { info, warning };

using Handler = std::function<void(Severity, std::string_view)>;

// Installs a process-wide handler. Passing an empty handler restores the default,
// which only counts messages. Handlers may be invoked from several threads at once,
// but never concurrently with each other (calls are serialized).
void set_handler(Handler handler);

void report(Severity severity, std::string_view message);

std::size_t warning_count() noexcept;
void reset_counts() noexcept;

}  // namespace ramsey::diagnostics
