#pragma once

#include <cstdint>

namespace bellsim {

// SplitMix64 finalizer. Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t x)
{
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

// Top 53 bits into [0, 1).
constexpr double to_unit_interval(std::uint64_t word)
{
    return static_cast<double>(word >> 11) * 0x1.0p-53;
}

// Counter-based random stream: the word at any index is a pure function of
// (seed, label, index), so trials can be evaluated in any order or sharded
// across any number of workers without changing the draw. Distinct labels
// derived from the same seed give decorrelated streams.
class CounterStream {
  public:
    CounterStream(std::uint64_t seed, std::uint64_t label)
        : key_(mix64(mix64(seed) + label))
    {
    }

    std::uint64_t word(std::uint64_t index) const
    {
        return mix64(key_ + (index + 1) * 0x9E3779B97F4A7C15ULL);
    }

    double uniform(std::uint64_t index) const { return to_unit_interval(word(index)); }

  private:
    std::uint64_t key_;
};

// Wraps a CounterStream with an incrementing counter for consumers that
// want draw-by-draw semantics (shuffles). Self-contained so sequences are
// identical across standard libraries and platforms.
class SequentialRng {
  public:
    explicit SequentialRng(CounterStream stream) : stream_(stream) {}

    std::uint64_t next() { return stream_.word(counter_++); }

    double uniform01() { return to_unit_interval(next()); }

    // Unbiased draw from [0, n) by rejection.
    std::uint64_t bounded(std::uint64_t n)
    {
        if (n == 0)
            return 0;
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t w = next();
        while (w >= limit)
            w = next();
        return w % n;
    }

  private:
    CounterStream stream_;
    std::uint64_t counter_ = 0;
};

}  // namespace bellsim
