#ifndef HCBENCH_PAIRS_HPP
#define HCBENCH_PAIRS_HPP

namespace hcbench {

/// Index of the unordered pair {u, v}, u < v, in the row-major upper
/// triangle over n vertices.
inline int pair_index(int n, int u, int v) {
    if (u > v) {
        int t = u;
        u = v;
        v = t;
    }
    return u * (2 * n - u - 1) / 2 + (v - u - 1);
}

inline int pair_count(int n) { return n * (n - 1) / 2; }

} // namespace hcbench

#endif
