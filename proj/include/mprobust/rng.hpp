#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace mprobust {

/// Deterministic random stream with a stable seed-to-stream mapping.
///
/// The engine is std::mt19937_64, whose transition function, seeding and
/// output are fixed by the C++ standard, so the same seed yields the same
/// stream on every platform and compiler. The value mappings below are
/// implemented here rather than via std::*_distribution (whose algorithms
/// are implementation-defined):
///   - next_unit():       (engine() >> 11) * 2^-53, uniform on [0, 1)
///   - next_real(lo, hi): lo + (hi - lo) * next_unit()
///   - next_index(n):     high 64 bits of engine() * n, uniform on [0, n)
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    double next_unit() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double next_real(double lo, double hi) {
        return lo + (hi - lo) * next_unit();
    }

    std::size_t next_index(std::size_t bound) {
        using u128 = unsigned __int128;
        return static_cast<std::size_t>((static_cast<u128>(engine_()) * bound) >> 64);
    }

private:
    std::mt19937_64 engine_;
};

/// Draws `count` distinct indices from [0, population) by partial
/// Fisher-Yates, consuming one next_index per draw. Returned sorted ascending.
std::vector<std::size_t> sample_without_replacement(RandomStream& rng,
                                                    std::size_t population,
                                                    std::size_t count);

} // namespace mprobust
