#include "collabnet/kernels.hpp"

#include <algorithm>
#include <utility>

#if defined(__x86_64__) || defined(_M_X64)
#define COLLABNET_X86 1
#include <immintrin.h>
#elif defined(__aarch64__) || defined(_M_ARM64)
#define COLLABNET_NEON 1
#include <arm_neon.h>
#endif

namespace collabnet::kernels {

namespace scalar {

std::uint64_t sum_u32(std::span<const std::uint32_t> v) {
    std::uint64_t s = 0;
    for (std::uint32_t x : v) s += x;
    return s;
}

std::size_t count_common_sorted(std::span<const std::uint32_t> a,
                                std::span<const std::uint32_t> b) {
    std::size_t i = 0, j = 0, count = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
            ++i;
        } else if (b[j] < a[i]) {
            ++j;
        } else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

}  // namespace scalar

#if COLLABNET_X86

namespace avx2 {

__attribute__((target("avx2"))) std::uint64_t sum_u32(std::span<const std::uint32_t> v) {
    const std::uint32_t* p = v.data();
    std::size_t n = v.size();
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + i));
        // widen to u64 lanes before accumulating
        __m256i lo = _mm256_cvtepu32_epi64(_mm256_castsi256_si128(x));
        __m256i hi = _mm256_cvtepu32_epi64(_mm256_extracti128_si256(x, 1));
        acc = _mm256_add_epi64(acc, _mm256_add_epi64(lo, hi));
    }
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::uint64_t s = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i) s += p[i];
    return s;
}

__attribute__((target("avx2"))) std::size_t count_common_sorted(
    std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
    if (a.size() > b.size()) std::swap(a, b);
    const std::uint32_t* pb = b.data();
    const std::size_t nb = b.size();
    std::size_t j = 0, count = 0;
    for (std::uint32_t x : a) {
        // both lists sorted, so j never moves back; a match of x can only
        // sit in the first 8-wide block whose last element is >= x
        while (j + 8 <= nb && pb[j + 7] < x) j += 8;
        if (j + 8 <= nb) {
            __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(pb + j));
            __m256i eq = _mm256_cmpeq_epi32(vb, _mm256_set1_epi32(static_cast<int>(x)));
            count += _mm256_movemask_epi8(eq) != 0;
        } else {
            std::size_t k = j;
            while (k < nb && pb[k] < x) ++k;
            count += (k < nb && pb[k] == x);
        }
    }
    return count;
}

}  // namespace avx2

#elif COLLABNET_NEON

namespace neon {

std::uint64_t sum_u32(std::span<const std::uint32_t> v) {
    const std::uint32_t* p = v.data();
    std::size_t n = v.size();
    uint64x2_t acc = vdupq_n_u64(0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        uint32x4_t x = vld1q_u32(p + i);
        acc = vaddq_u64(acc, vpaddlq_u32(x));
    }
    std::uint64_t s = vgetq_lane_u64(acc, 0) + vgetq_lane_u64(acc, 1);
    for (; i < n; ++i) s += p[i];
    return s;
}

std::size_t count_common_sorted(std::span<const std::uint32_t> a,
                                std::span<const std::uint32_t> b) {
    if (a.size() > b.size()) std::swap(a, b);
    const std::uint32_t* pb = b.data();
    const std::size_t nb = b.size();
    std::size_t j = 0, count = 0;
    for (std::uint32_t x : a) {
        while (j + 4 <= nb && pb[j + 3] < x) j += 4;
        if (j + 4 <= nb) {
            uint32x4_t vb = vld1q_u32(pb + j);
            uint32x4_t eq = vceqq_u32(vb, vdupq_n_u32(x));
            count += vmaxvq_u32(eq) != 0;
        } else {
            std::size_t k = j;
            while (k < nb && pb[k] < x) ++k;
            count += (k < nb && pb[k] == x);
        }
    }
    return count;
}

}  // namespace neon

#endif

namespace {

using SumFn = std::uint64_t (*)(std::span<const std::uint32_t>);
using IntersectFn = std::size_t (*)(std::span<const std::uint32_t>,
                                    std::span<const std::uint32_t>);

struct Dispatch {
    SumFn sum;
    IntersectFn intersect;
    std::string_view name;
};

Dispatch pick() {
#if COLLABNET_X86
    if (__builtin_cpu_supports("avx2")) return {avx2::sum_u32, avx2::count_common_sorted, "avx2"};
#elif COLLABNET_NEON
    return {neon::sum_u32, neon::count_common_sorted, "neon"};
#endif
    return {scalar::sum_u32, scalar::count_common_sorted, "scalar"};
}

const Dispatch g_dispatch = pick();

}  // namespace

std::uint64_t sum_u32(std::span<const std::uint32_t> v) { return g_dispatch.sum(v); }

std::size_t count_common_sorted(std::span<const std::uint32_t> a,
                                std::span<const std::uint32_t> b) {
    return g_dispatch.intersect(a, b);
}

std::string_view active_variant() { return g_dispatch.name; }

}  // namespace collabnet::kernels
