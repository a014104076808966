#pragma once

namespace blr {

/// Global resource limits. Mutable so the CLI can override the defaults;
/// set them before any parallel work starts.
struct Limits {
    int order_cap = 4096;        ///< largest admissible ring order
    long long ideal_cap = 1 << 16;  ///< abort ideal enumeration beyond this many ideals
};

Limits& limits();

/// Thread count for the OpenMP kernels. 0 restores the library default
/// (all hardware threads). No-op when built without OpenMP.
void set_num_threads(int n);
int num_threads();

}  // namespace blr
