#include "permkit/ranking.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace permkit {

namespace {

void require_positive_size(std::size_t size) {
    if (size == 0) throw SizeTooSmall("size must be positive");
}

void require_nonnegative_rank(const Bigint& rank) {
    if (rank < 0) throw RankOutOfRange("rank must be nonnegative");
}

}  // namespace

RandomSource::RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

RandomSource RandomSource::from_entropy() {
    std::random_device device;
    const std::uint64_t seed =
        (static_cast<std::uint64_t>(device()) << 32) ^ static_cast<std::uint64_t>(device());
    return RandomSource(seed);
}

std::uint64_t RandomSource::next() { return engine_(); }

std::uint64_t RandomSource::below(std::uint64_t bound) {
    if (bound == 0) throw PermError("bound must be positive");
    // Accept only draws under the largest multiple of bound, so each
    // residue is hit by exactly the same number of raw values.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t draw;
    do {
        draw = engine_();
    } while (draw >= limit);
    return draw % bound;
}

Bigint factorial(std::uint64_t n) {
    Bigint result = 1;
    for (std::uint64_t k = 2; k <= n; ++k) result *= k;
    return result;
}

std::vector<Point> inversion_vector(const Perm& p, std::size_t size) {
    require_positive_size(size);
    const std::vector<Point> values = p.to_array(size);
    std::vector<Point> counts(size, 0);
    for (std::size_t i = 0; i + 1 < size; ++i)
        for (std::size_t j = i + 1; j < size; ++j)
            if (values[j] < values[i]) ++counts[i];
    return counts;
}

Bigint rank_lex(const Perm& p, std::size_t size) {
    // Horner evaluation of the inversion vector in the factorial base:
    // rank = sum of counts[i] * (size-1-i)!.
    const std::vector<Point> counts = inversion_vector(p, size);
    Bigint rank = 0;
    for (std::size_t i = 0; i < size; ++i) {
        rank *= static_cast<unsigned long>(size - i);
        rank += static_cast<unsigned long>(counts[i]);
    }
    return rank;
}

Perm unrank_lex(std::size_t size, const Bigint& rank) {
    require_positive_size(size);
    require_nonnegative_rank(rank);

    // Factorial-base digits of the rank, least significant first.
    Bigint rest = rank;
    Bigint quotient, remainder;
    std::vector<std::uint64_t> digits(size, 0);
    for (std::size_t k = 2; k <= size; ++k) {
        boost::multiprecision::divide_qr(rest, Bigint(k), quotient, remainder);
        digits[k - 1] = remainder.convert_to<std::uint64_t>();
        rest = quotient;
    }
    if (rest > 0) throw RankOutOfRange("size is too small");

    // digits reversed is the inversion vector; rebuild by picking the
    // digit-th smallest unused value.
    std::vector<Point> pool(size);
    std::iota(pool.begin(), pool.end(), Point{0});
    std::vector<Point> values;
    values.reserve(size);
    for (std::size_t i = 0; i < size; ++i) {
        const std::size_t idx = static_cast<std::size_t>(digits[size - 1 - i]);
        values.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return Perm::from_array(values);
}

Bigint rank_mr(const Perm& p, std::size_t size) {
    require_positive_size(size);
    std::vector<Point> values = p.to_array(size);
    std::vector<Point> positions(size);  // inverse: positions[values[i]] == i
    for (std::size_t i = 0; i < size; ++i) positions[static_cast<std::size_t>(values[i])] = i;

    // digits[k] is the position of point k-1 when the scheme shrinks the
    // array from length k to k-1; the rank is
    //   rank = digits[size] + size * (digits[size-1] + (size-1) * (...)).
    std::vector<std::uint64_t> digits(size + 1, 0);
    for (std::size_t k = size; k >= 2; --k) {
        const Point moved = values[k - 1];
        digits[k] = static_cast<std::uint64_t>(moved);
        const std::size_t other = static_cast<std::size_t>(positions[k - 1]);
        std::swap(values[k - 1], values[other]);
        std::swap(positions[static_cast<std::size_t>(moved)], positions[k - 1]);
    }

    // Folding the digits in one pass would repeatedly multiply a huge
    // accumulator by a machine word; a balanced reduction multiplies
    // numbers of similar length instead, which GMP handles far better.
    struct Fold {
        const std::vector<std::uint64_t>& digits;
        // Returns (value, product) for the digit range [lo, hi]:
        // product = lo * (lo+1) * ... * hi, and value folds the digits so
        // that rank(2..size) = value(lo..hi) combines as below.
        std::pair<Bigint, Bigint> run(std::size_t lo, std::size_t hi) const {
            if (lo == hi) return {Bigint(digits[lo]), Bigint(lo)};
            const std::size_t mid = lo + (hi - lo) / 2;
            auto [low_value, low_product] = run(lo, mid);
            auto [high_value, high_product] = run(mid + 1, hi);
            return {high_value + high_product * low_value, low_product * high_product};
        }
    };
    if (size < 2) return 0;
    return Fold{digits}.run(2, size).first;
}

Perm unrank_mr(std::size_t size, const Bigint& rank) {
    require_positive_size(size);
    require_nonnegative_rank(rank);
    std::vector<Point> values(size);
    std::iota(values.begin(), values.end(), Point{0});
    Bigint rest = rank;
    Bigint quotient, remainder;
    for (std::size_t k = size; k >= 1; --k) {
        boost::multiprecision::divide_qr(rest, Bigint(k), quotient, remainder);
        std::swap(values[k - 1], values[remainder.convert_to<std::size_t>()]);
        rest = quotient;
    }
    if (rest > 0) throw RankOutOfRange("size is too small");
    return Perm::from_array(values);
}

Perm random_perm(std::size_t size, RandomSource& source) {
    require_positive_size(size);
    std::vector<Point> values(size);
    std::iota(values.begin(), values.end(), Point{0});
    // Fisher-Yates: position k trades places with a uniform pick from
    // 0..k, so all size! arrangements are equally likely.
    for (std::size_t k = size - 1; k >= 1; --k) {
        const std::size_t other = static_cast<std::size_t>(source.below(k + 1));
        std::swap(values[k], values[other]);
    }
    return Perm::from_array(values);
}

}  // namespace permkit
