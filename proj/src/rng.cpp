#include "mprobust/rng.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mprobust {

std::vector<std::size_t> sample_without_replacement(RandomStream& rng,
                                                    std::size_t population,
                                                    std::size_t count) {
    if (count > population) {
        throw std::invalid_argument("cannot sample more positions than exist");
    }
    std::vector<std::size_t> pool(population);
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    for (std::size_t t = 0; t < count; ++t) {
        std::size_t pick = t + rng.next_index(population - t);
        std::swap(pool[t], pool[pick]);
    }
    pool.resize(count);
    std::sort(pool.begin(), pool.end());
    return pool;
}

} // namespace mprobust
