#include "hyperind/rng.hpp"

#include <algorithm>

namespace hyperind {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

RngSpec RngSpec::child(const std::string& part) const {
    return {seed, label.empty() ? part : label + "/" + part};
}

RngSpec RngSpec::child(const std::string& part, std::uint64_t index) const {
    return child(part + "#" + std::to_string(index));
}

Rng::Rng(const RngSpec& spec)
    : spec_(spec), engine_(splitmix64(spec.seed ^ splitmix64(fnv1a64(spec.label)))) {}

double Rng::uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

bool Rng::bernoulli(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return uniform01() < p;
}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw Error(ErrorKind::InvalidArguments, "below(0)");
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
        std::uint64_t x = next_u64();
        if (x >= threshold) return x % bound;
    }
}

VertexSet Rng::sample_subset(std::size_t n, std::size_t s) {
    if (s > n) throw Error(ErrorKind::InvalidArguments, "subset larger than ground set");
    // Floyd's algorithm. Small samples test membership by scanning.
    VertexSet out;
    out.reserve(s);
    const bool small = s <= 32;
    std::vector<std::uint8_t> chosen(small ? 0 : n, 0);
    for (std::size_t j = n - s; j < n; ++j) {
        auto t = static_cast<std::size_t>(below(j + 1));
        bool taken = small ? std::find(out.begin(), out.end(), static_cast<VertexId>(t)) != out.end() : chosen[t] != 0;
        std::size_t pick = taken ? j : t;
        if (!small) chosen[pick] = 1;
        out.push_back(static_cast<VertexId>(pick));
    }
    std::sort(out.begin(), out.end());
    return out;
}

VertexSet Rng::bernoulli_subset(std::size_t n, double p) {
    VertexSet out;
    for (std::size_t x = 0; x < n; ++x)
        if (bernoulli(p)) out.push_back(static_cast<VertexId>(x));
    return out;
}

}  // namespace hyperind
