#include "cde/kernels.hpp"

#if CDE_HAVE_NEON

#include <arm_neon.h>

#include <cassert>

namespace cde::kernels::neon {

void add_mod(std::span<Symbol> acc, std::span<const Symbol> row, Symbol q) {
  assert(acc.size() == row.size());
  const std::size_t n = acc.size();
  const uint32x4_t vq = vdupq_n_u32(q);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const uint32x4_t s = vaddq_u32(vld1q_u32(acc.data() + i), vld1q_u32(row.data() + i));
    vst1q_u32(acc.data() + i, vminq_u32(s, vsubq_u32(s, vq)));
  }
  for (; i < n; ++i) {
    const Symbol s = acc[i] + row[i];
    acc[i] = s >= q ? s - q : s;
  }
}

// 64-bit lane division has no NEON instruction; widen, multiply, reduce per lane.
void axpy_mod(std::span<Symbol> acc, std::span<const Symbol> row, Symbol coeff, Symbol q) {
  assert(acc.size() == row.size());
  if (coeff == 0) return;
  const std::size_t n = acc.size();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const uint32x2_t r = vld1_u32(row.data() + i);
    const uint64x2_t p = vmlal_n_u32(vmovl_u32(vld1_u32(acc.data() + i)), r, coeff);
    acc[i] = static_cast<Symbol>(vgetq_lane_u64(p, 0) % q);
    acc[i + 1] = static_cast<Symbol>(vgetq_lane_u64(p, 1) % q);
  }
  for (; i < n; ++i) {
    const std::uint64_t t = static_cast<std::uint64_t>(coeff) * row[i] + acc[i];
    acc[i] = static_cast<Symbol>(t % q);
  }
}

std::size_t count_nonzero(std::span<const Symbol> v) {
  const std::size_t n = v.size();
  uint32x4_t hits = vdupq_n_u32(0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    // vtstq sets all-ones lanes where x != 0; shift to 0/1
    const uint32x4_t x = vld1q_u32(v.data() + i);
    hits = vaddq_u32(hits, vshrq_n_u32(vtstq_u32(x, x), 31));
  }
  std::size_t count = vaddvq_u32(hits);
  for (; i < n; ++i) count += v[i] != 0;
  return count;
}

std::size_t count_mismatch(std::span<const Symbol> a, std::span<const Symbol> b) {
  assert(a.size() == b.size());
  const std::size_t n = a.size();
  uint32x4_t hits = vdupq_n_u32(0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const uint32x4_t eq = vceqq_u32(vld1q_u32(a.data() + i), vld1q_u32(b.data() + i));
    hits = vaddq_u32(hits, vshrq_n_u32(vmvnq_u32(eq), 31));
  }
  std::size_t count = vaddvq_u32(hits);
  for (; i < n; ++i) count += a[i] != b[i];
  return count;
}

}  // namespace cde::kernels::neon

#endif  // CDE_HAVE_NEON
