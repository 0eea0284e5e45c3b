#include "landaukit/parallel.hpp"

namespace landaukit {

void for_each_index(Exec mode, long count, const std::function<void(long)>& fn) {
#ifdef _OPENMP
    if (mode == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }
#else
    (void)mode;
#endif
    for (long i = 0; i < count; ++i) {
        fn(i);
    }
}

}  // namespace landaukit
