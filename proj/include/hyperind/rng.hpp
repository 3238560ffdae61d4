#ifndef HYPERIND_RNG_HPP
#define HYPERIND_RNG_HPP

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hyperind/core.hpp"

namespace hyperind {

/// Names an independent random stream: a master seed plus a label path.
struct RngSpec {
    std::uint64_t seed = 0;
    std::string label;

    RngSpec child(const std::string& part) const;
    RngSpec child(const std::string& part, std::uint64_t index) const;
};

/// Deterministic, platform-stable generator. The engine is std::mt19937_64
/// (output fixed by the standard), seeded with
/// splitmix64(seed ^ splitmix64(fnv1a64(label))). All derived draws use the
/// integer -> value mappings below, never the std distributions.
class Rng {
public:
    explicit Rng(const RngSpec& spec);

    const RngSpec& spec() const noexcept { return spec_; }

    std::uint64_t next_u64() { return engine_(); }
    /// Uniform on [0, 1) with 53 bits.
    double uniform01();
    bool bernoulli(double p);
    /// Uniform on [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound);

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    /// Uniform s-subset of {0, ..., n-1}, sorted.
    VertexSet sample_subset(std::size_t n, std::size_t s);
    /// Each vertex of {0, ..., n-1} kept independently with probability p.
    VertexSet bernoulli_subset(std::size_t n, double p);

private:
    RngSpec spec_;
    std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t fnv1a64(const std::string& s);

}  // namespace hyperind

#endif
