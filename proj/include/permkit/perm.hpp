#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "permkit/bigint.hpp"
#include "permkit/errors.hpp"

namespace permkit {

using Point = std::uint64_t;
using Cycle = std::vector<Point>;

/// An immutable permutation of the nonnegative integers that moves only
/// finitely many points. Only moved points are stored, so a Perm has no
/// intrinsic size: (0 1) acts the same on {0,1}, on {0,...,9} and on all
/// of N. Composition applies the right factor first:
///
///     (p * q)[k] == p[q[k]]
///
/// Beware that many authors compose in the opposite order.
class Perm {
public:
    /// The identity permutation.
    Perm() = default;

    /// Builds a perm from one-line notation: values[k] is the image of k.
    /// Throws NotABijection unless values is a permutation of 0..n-1.
    static Perm from_array(const std::vector<Point>& values);

    /// Builds a perm as the product of the given cycles, applied left to
    /// right: from_cycles({c1, c2}) == from_cycles({c1}) * from_cycles({c2}).
    /// Cycles of length 0 or 1 are accepted and contribute nothing.
    /// Throws MalformedCycle if a cycle repeats a point.
    static Perm from_cycles(const std::vector<Cycle>& cycles);

    /// Image of a point; fixed points map to themselves.
    Point apply(Point point) const;
    Point operator[](Point point) const { return apply(point); }

    bool is_identity() const { return map_.empty(); }

    /// Composition, right factor first: (p * q)[k] == p[q[k]].
    Perm operator*(const Perm& rhs) const;

    Perm inverse() const;
    Perm operator~() const { return inverse(); }

    /// Power by binary exponentiation; negative exponents use the inverse.
    Perm pow(std::int64_t exponent) const;
    Perm pow(const Bigint& exponent) const;

    bool commutes_with(const Perm& other) const;

    /// The commutator p * q * ~p * ~q.
    Perm commutator(const Perm& other) const;

    /// Moved points in increasing order.
    std::vector<Point> support() const;

    /// Largest/smallest moved point; both are 0 for the identity.
    Point max_moved() const { return map_.empty() ? 0 : map_.back().first; }
    Point min_moved() const { return map_.empty() ? 0 : map_.front().first; }

    /// One-line notation on 0..size-1. Throws SizeTooSmall unless
    /// size > max_moved(); the zero-argument form uses max_moved() + 1.
    std::vector<Point> to_array(std::size_t size) const;
    std::vector<Point> to_array() const { return to_array(max_moved() + 1); }

    /// Cycle decomposition, fixed points omitted. Each cycle starts at its
    /// smallest point and cycles are ordered by that point, which makes the
    /// result canonical: equal perms yield equal cycle lists.
    std::vector<Cycle> cycles() const;

    /// Order of the perm in the symmetric group: lcm of its cycle lengths.
    Bigint order() const;

    /// 0 for even, 1 for odd; the parity of (moved points - cycles).
    int parity() const;
    bool is_even() const { return parity() == 0; }
    bool is_odd() const { return parity() == 1; }

    /// +1 for even perms, -1 for odd ones.
    int sign() const { return parity() == 0 ? 1 : -1; }

    /// Word of length size over 0-9, A-Z, a-z whose k-th letter encodes the
    /// image of k. Throws SizeTooSmall unless size > max_moved() and
    /// PermError for size > 62; the zero-argument form uses max_moved() + 1.
    std::string label(std::size_t size) const;
    std::string label() const { return label(max_moved() + 1); }

    /// The stored (point, image) pairs: sorted by point, no fixed points.
    /// Equal perms have equal mappings, so this doubles as a canonical key.
    const std::vector<std::pair<Point, Point>>& mapping() const { return map_; }

    friend bool operator==(const Perm& a, const Perm& b) { return a.map_ == b.map_; }
    friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }

    /// Lexicographic order on the canonical mapping; unrelated to the
    /// lexicographic rank but a strict total order, suitable for std::set.
    friend bool operator<(const Perm& a, const Perm& b) { return a.map_ < b.map_; }

private:
    // Takes (point, image) pairs in any order, sorts them and drops fixed
    // points. Callers guarantee the pairs form a bijection.
    static Perm from_pairs(std::vector<std::pair<Point, Point>> pairs);

    std::vector<std::pair<Point, Point>> map_;
};

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

}  // namespace permkit

template <>
struct std::hash<permkit::Perm> {
    std::size_t operator()(const permkit::Perm& p) const noexcept {
        // FNV-1a over the canonical mapping.
        std::uint64_t h = 1469598103934665603ULL;
        for (const auto& [point, image] : p.mapping()) {
            for (std::uint64_t word : {point, image}) {
                for (int shift = 0; shift < 64; shift += 8) {
                    h ^= (word >> shift) & 0xffU;
                    h *= 1099511628211ULL;
                }
            }
        }
        return static_cast<std::size_t>(h);
    }
};
