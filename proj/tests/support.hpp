#pragma once

// Helpers shared by the test binaries. Everything here works on plain
// arrays (one-line notation) so that expected values are produced by code
// with no dependence on the library under test.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <vector>

#include "permkit/perm.hpp"

namespace testsupport {

// Array-form composition, right factor first: out[k] = p[q[k]].
inline std::vector<permkit::Point> compose_arrays(const std::vector<permkit::Point>& p,
                                                  const std::vector<permkit::Point>& q) {
    std::vector<permkit::Point> out(q.size());
    for (std::size_t k = 0; k < q.size(); ++k) out[k] = p[static_cast<std::size_t>(q[k])];
    return out;
}

// Array form of a single cycle acting on 0..n-1.
inline std::vector<permkit::Point> cycle_array(const permkit::Cycle& cycle, std::size_t n) {
    std::vector<permkit::Point> out(n);
    std::iota(out.begin(), out.end(), permkit::Point{0});
    for (std::size_t i = 0; i < cycle.size(); ++i)
        out[static_cast<std::size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
    return out;
}

// Number of inversions: pairs i < j with values[i] > values[j]. Its parity
// equals the permutation's parity.
inline std::size_t inversion_count(const std::vector<permkit::Point>& values) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t j = i + 1; j < values.size(); ++j)
            if (values[i] > values[j]) ++count;
    return count;
}

// Uniformly random array form, independent of the library's shuffling.
inline std::vector<permkit::Point> random_array(std::size_t n, std::mt19937_64& rng) {
    std::vector<permkit::Point> out(n);
    std::iota(out.begin(), out.end(), permkit::Point{0});
    std::shuffle(out.begin(), out.end(), rng);
    return out;
}

// All n! array forms in lexicographic order.
inline std::vector<std::vector<permkit::Point>> all_arrays(std::size_t n) {
    std::vector<permkit::Point> values(n);
    std::iota(values.begin(), values.end(), permkit::Point{0});
    std::vector<std::vector<permkit::Point>> out;
    do {
        out.push_back(values);
    } while (std::next_permutation(values.begin(), values.end()));
    return out;
}

}  // namespace testsupport
