#pragma once

#include <complex>
#include <cstdint>

namespace unimod {

/// Deterministic stream of pseudorandom draws: xoshiro256** seeded through
/// SplitMix64. A stream is identified by (seed, substream index); substream
/// derivation is O(1), so sample i of a Monte Carlo run can be generated
/// independently of samples 0..i-1 and results do not depend on how the
/// loop is scheduled.
///
/// Layout of the derivation: key = mix64(seed ^ GAMMA*(index+1)), then the
/// four 64-bit state words are consecutive SplitMix64 outputs from key.
/// All floating-point draws are built from the top bits of next_u64(), so
/// sequences are bit-identical across platforms.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed, std::uint64_t substream = 0);

    std::uint64_t next_u64();

    /// Uniform on [0, 1), 53 significant bits.
    double uniform01();

    /// Uniform phase on [0, 2π).
    double phase();

    /// Complex normal with E|z|^2 = 1 (variance 1/2 per real component),
    /// drawn by the polar method: sqrt(-ln u1) * exp(2πi u2).
    std::complex<double> complex_normal();

    /// Standard real normal, mean 0, variance 1.
    double normal();

  private:
    std::uint64_t state_[4];
};

} // namespace unimod
