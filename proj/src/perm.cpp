#include "permkit/perm.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace permkit {

namespace {

// Index of point in the sorted mapping, or npos if the point is fixed.
std::size_t find_index(const std::vector<std::pair<Point, Point>>& map, Point point) {
    auto it = std::lower_bound(map.begin(), map.end(), point,
                               [](const auto& entry, Point value) { return entry.first < value; });
    if (it == map.end() || it->first != point) return static_cast<std::size_t>(-1);
    return static_cast<std::size_t>(it - map.begin());
}

}  // namespace

Perm Perm::from_pairs(std::vector<std::pair<Point, Point>> pairs) {
    std::erase_if(pairs, [](const auto& entry) { return entry.first == entry.second; });
    std::sort(pairs.begin(), pairs.end());
    Perm result;
    result.map_ = std::move(pairs);
    return result;
}

Perm Perm::from_array(const std::vector<Point>& values) {
    const std::size_t n = values.size();
    std::vector<bool> seen(n, false);
    std::vector<std::pair<Point, Point>> pairs;
    for (std::size_t k = 0; k < n; ++k) {
        const Point image = values[k];
        if (image >= n)
            throw NotABijection("array value " + std::to_string(image) + " is out of range");
        if (seen[static_cast<std::size_t>(image)])
            throw NotABijection("array repeats value " + std::to_string(image));
        seen[static_cast<std::size_t>(image)] = true;
        if (image != k) pairs.emplace_back(static_cast<Point>(k), image);
    }
    return from_pairs(std::move(pairs));
}

Perm Perm::from_cycles(const std::vector<Cycle>& cycles) {
    Perm result;
    for (const Cycle& cycle : cycles) {
        Cycle sorted(cycle);
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw MalformedCycle("cycle repeats a point");
        if (cycle.size() < 2) continue;
        std::vector<std::pair<Point, Point>> pairs;
        pairs.reserve(cycle.size());
        for (std::size_t i = 0; i < cycle.size(); ++i)
            pairs.emplace_back(cycle[i], cycle[(i + 1) % cycle.size()]);
        result = result * from_pairs(std::move(pairs));
    }
    return result;
}

Point Perm::apply(Point point) const {
    const std::size_t idx = find_index(map_, point);
    return idx == static_cast<std::size_t>(-1) ? point : map_[idx].second;
}

Perm Perm::operator*(const Perm& rhs) const {
    // Only points moved by either factor can be moved by the product.
    std::vector<Point> points;
    points.reserve(map_.size() + rhs.map_.size());
    for (const auto& entry : map_) points.push_back(entry.first);
    for (const auto& entry : rhs.map_) points.push_back(entry.first);
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    std::vector<std::pair<Point, Point>> pairs;
    pairs.reserve(points.size());
    for (Point k : points) pairs.emplace_back(k, apply(rhs.apply(k)));
    return from_pairs(std::move(pairs));
}

Perm Perm::inverse() const {
    std::vector<std::pair<Point, Point>> pairs;
    pairs.reserve(map_.size());
    for (const auto& [point, image] : map_) pairs.emplace_back(image, point);
    return from_pairs(std::move(pairs));
}

Perm Perm::pow(std::int64_t exponent) const { return pow(Bigint(exponent)); }

Perm Perm::pow(const Bigint& exponent) const {
    if (exponent < 0) return inverse().pow(Bigint(-exponent));
    Perm base = *this;
    Perm result;
    Bigint e = exponent;
    while (e > 0) {
        if (boost::multiprecision::bit_test(e, 0)) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

bool Perm::commutes_with(const Perm& other) const {
    return (*this) * other == other * (*this);
}

Perm Perm::commutator(const Perm& other) const {
    return (*this) * other * inverse() * other.inverse();
}

std::vector<Point> Perm::support() const {
    std::vector<Point> points;
    points.reserve(map_.size());
    for (const auto& entry : map_) points.push_back(entry.first);
    return points;
}

std::vector<Point> Perm::to_array(std::size_t size) const {
    if (size <= max_moved())
        throw SizeTooSmall("size " + std::to_string(size) + " does not cover point " +
                           std::to_string(max_moved()));
    std::vector<Point> values(size);
    std::iota(values.begin(), values.end(), Point{0});
    for (const auto& [point, image] : map_) values[static_cast<std::size_t>(point)] = image;
    return values;
}

std::vector<Cycle> Perm::cycles() const {
    std::vector<Cycle> result;
    std::vector<bool> visited(map_.size(), false);
    for (std::size_t start = 0; start < map_.size(); ++start) {
        if (visited[start]) continue;
        // map_ is sorted, so an unvisited start is the smallest point of
        // its cycle and the cycles come out ordered by smallest point.
        Cycle cycle;
        std::size_t idx = start;
        do {
            visited[idx] = true;
            cycle.push_back(map_[idx].first);
            idx = find_index(map_, map_[idx].second);
        } while (idx != start);
        result.push_back(std::move(cycle));
    }
    return result;
}

Bigint Perm::order() const {
    Bigint result = 1;
    for (const Cycle& cycle : cycles())
        result = boost::multiprecision::lcm(result, Bigint(cycle.size()));
    return result;
}

int Perm::parity() const {
    std::size_t transpositions = 0;
    for (const Cycle& cycle : cycles()) transpositions += cycle.size() - 1;
    return static_cast<int>(transpositions % 2);
}

std::string Perm::label(std::size_t size) const {
    static const char letters[] =
        "0123456789"
        "ABCDEFGHIJKLMNOPQRSTUVWXYZ"
        "abcdefghijklmnopqrstuvwxyz";
    if (size > 62) throw PermError("size is too large for labels");
    if (size <= max_moved())
        throw SizeTooSmall("size " + std::to_string(size) + " does not cover point " +
                           std::to_string(max_moved()));
    std::string word;
    word.reserve(size);
    for (std::size_t k = 0; k < size; ++k)
        word.push_back(letters[static_cast<std::size_t>(apply(static_cast<Point>(k)))]);
    return word;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t lcm(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

}  // namespace permkit
