// AVX2 variant of the lane-batched step. Built with -mavx2; callers must
// check available() (cpuid) before dispatching here.

#include "atype/sim/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace atype {

namespace {

bool avx2_available() { return __builtin_cpu_supports("avx2") != 0; }

void avx2_step(const CompiledNet& net, const std::uint64_t* cur, std::uint64_t* next,
               std::size_t words) {
  const __m256i ones = _mm256_set1_epi64x(-1);
  for (const CompiledNet::Op& op : net.ops) {
    const std::uint64_t* a = cur + static_cast<std::size_t>(op.a) * words;
    const std::uint64_t* b = cur + static_cast<std::size_t>(op.b) * words;
    std::uint64_t* d = next + static_cast<std::size_t>(op.dst) * words;
    std::size_t w = 0;
    if (op.is_delay) {
      for (; w + 4 <= words; w += 4) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + w));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(d + w), va);
      }
      for (; w < words; ++w) d[w] = a[w];
    } else {
      for (; w + 4 <= words; w += 4) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + w));
        const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + w));
        const __m256i nand = _mm256_xor_si256(_mm256_and_si256(va, vb), ones);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(d + w), nand);
      }
      for (; w < words; ++w) d[w] = ~(a[w] & b[w]);
    }
  }
}

}  // namespace

const StepKernel& avx2_kernel() {
  static const StepKernel k{"avx2", avx2_available, avx2_step};
  return k;
}

}  // namespace atype

#endif
