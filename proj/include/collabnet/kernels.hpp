#pragma once

#include <cstdint>
#include <span>
#include <string_view>

// Data-parallel inner loops used by the metric computations, with scalar
// reference implementations and SIMD variants selected once at startup.
// All kernels are integer-exact, so every variant must return identical
// results (enforced by the equivalence tests).

namespace collabnet::kernels {

// Sum of a u32 vector into u64. Hot in closeness (per-source BFS distance sums).
std::uint64_t sum_u32(std::span<const std::uint32_t> v);

// Number of values present in both sorted, duplicate-free lists.
// Hot in clustering (neighbor-list intersections for triangle counts).
std::size_t count_common_sorted(std::span<const std::uint32_t> a,
                                std::span<const std::uint32_t> b);

// Scalar reference paths, always available (used directly by the
// equivalence tests; dispatch falls back to these).
namespace scalar {
std::uint64_t sum_u32(std::span<const std::uint32_t> v);
std::size_t count_common_sorted(std::span<const std::uint32_t> a,
                                std::span<const std::uint32_t> b);
}  // namespace scalar

// Name of the variant the dispatcher picked: "avx2", "neon" or "scalar".
std::string_view active_variant();

}  // namespace collabnet::kernels
