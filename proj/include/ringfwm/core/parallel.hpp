#pragma once

#include <cstddef>

namespace ringfwm {

/// Execution policy for the grid kernels. Both policies produce bit-identical
/// results: every output element depends only on its own index, and all
/// reductions combine per-row partials in a fixed order.
enum class Execution { serial, parallel };

template <typename F>
void for_each_index(std::size_t n, Execution exec, F&& body) {
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            body(static_cast<std::size_t>(i));
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) body(i);
    }
}

}  // namespace ringfwm
