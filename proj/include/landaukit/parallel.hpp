#pragma once

#include <functional>

namespace landaukit {

enum class Exec { Serial, Parallel };

// Runs fn(0), ..., fn(count - 1). In Parallel mode iterations may run
// concurrently, so fn must only touch state owned by its own index.
void for_each_index(Exec mode, long count, const std::function<void(long)>& fn);

}  // namespace landaukit
