#pragma once

#include <cstddef>

namespace mirrad {

// Data-parallel index loop. Bodies must write only to slots owned by their
// index; combine partial results serially afterwards so that totals do not
// depend on the thread count. Under that discipline the parallel form is
// bit-identical to the serial one.
template <typename F>
void for_each_index(std::size_t n, F&& f) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
        f(static_cast<std::size_t>(i));
#else
    for (std::size_t i = 0; i < n; ++i) f(i);
#endif
}

template <typename F>
void for_each_index_serial(std::size_t n, F&& f) {
    for (std::size_t i = 0; i < n; ++i) f(i);
}

}  // namespace mirrad
