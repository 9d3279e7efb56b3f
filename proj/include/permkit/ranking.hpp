#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "permkit/bigint.hpp"
#include "permkit/perm.hpp"

namespace permkit {

/// Deterministic pseudo-random source with a remembered seed, so that any
/// draw can be reproduced later. The engine is std::mt19937_64, whose
/// output for a given seed is pinned down by the standard, so the same
/// seed yields the same stream on every platform.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed);

    /// A source seeded from the operating system's entropy.
    static RandomSource from_entropy();

    /// The seed this source was created with.
    std::uint64_t seed() const { return seed_; }

    /// Next raw 64-bit value.
    std::uint64_t next();

    /// Uniform draw from [0, bound) by rejection sampling, so every value
    /// is exactly equally likely. bound must be positive.
    std::uint64_t below(std::uint64_t bound);

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

Bigint factorial(std::uint64_t n);

/// Inversion vector v of p on 0..size-1: v[i] counts the j > i with
/// p[j] < p[i]. The last entry is always 0. Throws SizeTooSmall unless
/// size > max_moved(p).
std::vector<Point> inversion_vector(const Perm& p, std::size_t size);

/// Lexicographic rank of p among the size! permutations of 0..size-1,
/// via the inversion vector: quadratic in size.
Bigint rank_lex(const Perm& p, std::size_t size);

/// Inverse of rank_lex. Throws RankOutOfRange unless 0 <= rank < size!.
Perm unrank_lex(std::size_t size, const Bigint& rank);

/// Myrvold-Ruskey rank of p: a linear-time scheme whose order is neither
/// lexicographic nor related to rank_lex, but unrank_mr(size, rank_mr(p))
/// returns p and the ranks still cover 0..size!-1 exactly once.
Bigint rank_mr(const Perm& p, std::size_t size);

/// Inverse of rank_mr. Throws RankOutOfRange unless 0 <= rank < size!.
Perm unrank_mr(std::size_t size, const Bigint& rank);

/// Uniformly random permutation of 0..size-1 by the Fisher-Yates shuffle:
/// all size! outcomes are equally likely.
Perm random_perm(std::size_t size, RandomSource& source);

}  // namespace permkit
