#pragma once
#include <cstdint>

namespace hrg {

// Counter-based randomness: every variate is a pure function of a 64-bit key
// and an index, so sampling is order-independent and parallelizes without
// shared state. The mixer is the splitmix64 finalizer.
inline constexpr std::uint64_t golden_gamma = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// n-th output of the stream anchored at key
constexpr std::uint64_t stream_at(std::uint64_t key, std::uint64_t n) noexcept {
  return mix64(key + (n + 1) * golden_gamma);
}

// fold one more identifier into a key
constexpr std::uint64_t chain(std::uint64_t key, std::uint64_t v) noexcept {
  return mix64((key + golden_gamma) ^ (v * 0xff51afd7ed558ccdULL + 0x2545f4914f6cdd1dULL));
}

// 53-bit uniform in [0,1)
constexpr double to_unit(std::uint64_t bits) noexcept {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

struct sample_seed {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;  // sub-stream id, lets callers draw disjoint batches
};

namespace stream_tag {
inline constexpr std::uint64_t position = 0x706f736974ULL;
inline constexpr std::uint64_t edge = 0x65646765ULL;
inline constexpr std::uint64_t cell = 0x63656c6cULL;
}  // namespace stream_tag

inline constexpr std::uint64_t root_key(sample_seed s, std::uint64_t tag) noexcept {
  return chain(chain(chain(0, s.seed), s.stream), tag);
}

// sequential uniforms within one keyed stream
class counter_rng {
 public:
  explicit counter_rng(std::uint64_t key) noexcept : key_(key) {}
  double next_unit() noexcept { return to_unit(stream_at(key_, n_++)); }

 private:
  std::uint64_t key_;
  std::uint64_t n_ = 0;
};

}  // namespace hrg
