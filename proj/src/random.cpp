#include "unimod/random.hpp"

#include <cmath>
#include <numbers>

namespace unimod {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

} // namespace

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t substream) {
    std::uint64_t z = mix64(seed ^ (kGamma * (substream + 1)));
    for (auto& word : state_) {
        z += kGamma;
        word = mix64(z);
    }
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = kGamma;
}

std::uint64_t RandomStream::next_u64() {
    // xoshiro256**
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double RandomStream::uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::phase() {
    return 2.0 * std::numbers::pi * uniform01();
}

std::complex<double> RandomStream::complex_normal() {
    double u1 = uniform01();
    while (u1 == 0.0) u1 = uniform01();
    const double r = std::sqrt(-std::log(u1));
    const double t = phase();
    return {r * std::cos(t), r * std::sin(t)};
}

double RandomStream::normal() {
    double u1 = uniform01();
    while (u1 == 0.0) u1 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    return r * std::cos(phase());
}

} // namespace unimod
