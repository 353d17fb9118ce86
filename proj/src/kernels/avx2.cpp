// AVX2 variants.  Functions carry a per-function target attribute instead of
// compiling the whole translation unit with -mavx2, so inline library code
// instantiated here never leaks AVX2 instructions into the scalar path.

#include "cde/kernels.hpp"

#if CDE_HAVE_AVX2

#include <immintrin.h>

#include <bit>
#include <cassert>

#define CDE_AVX2 __attribute__((target("avx2")))

namespace cde::kernels::avx2 {
namespace {

constexpr Symbol kExactDoubleLimit = Symbol{1} << 26;

CDE_AVX2 void add_mod_impl(Symbol* acc, const Symbol* row, std::size_t n, Symbol q) {
  const __m256i vq = _mm256_set1_epi32(static_cast<int>(q));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + i));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i));
    const __m256i s = _mm256_add_epi32(a, b);
    // s - q wraps above s exactly when s < q
    const __m256i r = _mm256_min_epu32(s, _mm256_sub_epi32(s, vq));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i), r);
  }
  for (; i < n; ++i) {
    const Symbol s = acc[i] + row[i];
    acc[i] = s >= q ? s - q : s;
  }
}

CDE_AVX2 void axpy_mod_impl(Symbol* acc, const Symbol* row, std::size_t n, Symbol coeff, Symbol q) {
  const __m256d vq = _mm256_set1_pd(static_cast<double>(q));
  const __m256d vinv = _mm256_set1_pd(1.0 / static_cast<double>(q));
  const __m256d vc = _mm256_set1_pd(static_cast<double>(coeff));
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d a = _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(acc + i)));
    const __m256d b = _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(row + i)));
    // exact: coeff * row < 2^52 and the sum stays below 2^53
    const __m256d p = _mm256_add_pd(_mm256_mul_pd(vc, b), a);
    const __m256d quot = _mm256_floor_pd(_mm256_mul_pd(p, vinv));
    __m256d r = _mm256_sub_pd(p, _mm256_mul_pd(quot, vq));
    // quotient may be off by one either way
    r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), vq));
    r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, vq, _CMP_GE_OQ), vq));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(acc + i), _mm256_cvttpd_epi32(r));
  }
  for (; i < n; ++i) {
    const std::uint64_t t = static_cast<std::uint64_t>(coeff) * row[i] + acc[i];
    acc[i] = static_cast<Symbol>(t % q);
  }
}

CDE_AVX2 std::size_t count_nonzero_impl(const Symbol* v, std::size_t n) {
  const __m256i zero = _mm256_setzero_si256();
  std::size_t zeros = 0;
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
    const int mask = _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(x, zero)));
    zeros += static_cast<std::size_t>(std::popcount(static_cast<unsigned>(mask)));
  }
  std::size_t nonzero = i - zeros;
  for (; i < n; ++i) nonzero += v[i] != 0;
  return nonzero;
}

CDE_AVX2 std::size_t count_mismatch_impl(const Symbol* a, const Symbol* b, std::size_t n) {
  std::size_t equal = 0;
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    const int mask = _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(x, y)));
    equal += static_cast<std::size_t>(std::popcount(static_cast<unsigned>(mask)));
  }
  std::size_t mismatch = i - equal;
  for (; i < n; ++i) mismatch += a[i] != b[i];
  return mismatch;
}

}  // namespace

void add_mod(std::span<Symbol> acc, std::span<const Symbol> row, Symbol q) {
  assert(acc.size() == row.size());
  add_mod_impl(acc.data(), row.data(), acc.size(), q);
}

void axpy_mod(std::span<Symbol> acc, std::span<const Symbol> row, Symbol coeff, Symbol q) {
  assert(acc.size() == row.size());
  if (coeff == 0) return;
  if (q >= kExactDoubleLimit) {
    for (std::size_t i = 0; i < acc.size(); ++i) {
      const std::uint64_t t = static_cast<std::uint64_t>(coeff) * row[i] + acc[i];
      acc[i] = static_cast<Symbol>(t % q);
    }
    return;
  }
  axpy_mod_impl(acc.data(), row.data(), acc.size(), coeff, q);
}

std::size_t count_nonzero(std::span<const Symbol> v) { return count_nonzero_impl(v.data(), v.size()); }

std::size_t count_mismatch(std::span<const Symbol> a, std::span<const Symbol> b) {
  assert(a.size() == b.size());
  return count_mismatch_impl(a.data(), b.data(), a.size());
}

}  // namespace cde::kernels::avx2

#endif  // CDE_HAVE_AVX2
