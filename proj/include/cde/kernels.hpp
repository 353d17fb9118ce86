#pragma once

// Data-parallel GF(q) row kernels.
//
// Every kernel has a portable scalar reference and, where the host supports
// it, an AVX2 (x86-64) or NEON (aarch64) variant.  The public entry points
// dispatch through a table chosen once from cpuid; the CDE_SIMD environment
// variable (scalar | avx2 | neon | auto) or set_isa() overrides the choice.
//
// All symbols are residues in [0, q) with q < 2^31.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

#if defined(__x86_64__) || defined(_M_X64)
#define CDE_HAVE_AVX2 1
#else
#define CDE_HAVE_AVX2 0
#endif

#if defined(__aarch64__) || defined(_M_ARM64)
#define CDE_HAVE_NEON 1
#else
#define CDE_HAVE_NEON 0
#endif

namespace cde::kernels {

using Symbol = std::uint32_t;

enum class Isa { kScalar, kAvx2, kNeon };

std::string_view isa_name(Isa isa) noexcept;
bool isa_supported(Isa isa) noexcept;
/// Best variant the running CPU supports.
Isa detect_isa() noexcept;
Isa active_isa() noexcept;
/// Throws cde::InvalidArgument when the host cannot run `isa`.
void set_isa(Isa isa);

/// acc[i] = (acc[i] + row[i]) mod q
void add_mod(std::span<Symbol> acc, std::span<const Symbol> row, Symbol q);
/// acc[i] = (acc[i] + coeff * row[i]) mod q
void axpy_mod(std::span<Symbol> acc, std::span<const Symbol> row, Symbol coeff, Symbol q);
std::size_t count_nonzero(std::span<const Symbol> v);
/// Hamming distance between equal-length vectors.
std::size_t count_mismatch(std::span<const Symbol> a, std::span<const Symbol> b);

namespace scalar {
void add_mod(std::span<Symbol> acc, std::span<const Symbol> row, Symbol q);
void axpy_mod(std::span<Symbol> acc, std::span<const Symbol> row, Symbol coeff, Symbol q);
std::size_t count_nonzero(std::span<const Symbol> v);
std::size_t count_mismatch(std::span<const Symbol> a, std::span<const Symbol> b);
}  // namespace scalar

#if CDE_HAVE_AVX2
namespace avx2 {
void add_mod(std::span<Symbol> acc, std::span<const Symbol> row, Symbol q);
// Vectorized for q < 2^26 (products exact in double); larger moduli use the scalar loop.
void axpy_mod(std::span<Symbol> acc, std::span<const Symbol> row, Symbol coeff, Symbol q);
std::size_t count_nonzero(std::span<const Symbol> v);
std::size_t count_mismatch(std::span<const Symbol> a, std::span<const Symbol> b);
}  // namespace avx2
#endif

#if CDE_HAVE_NEON
namespace neon {
void add_mod(std::span<Symbol> acc, std::span<const Symbol> row, Symbol q);
void axpy_mod(std::span<Symbol> acc, std::span<const Symbol> row, Symbol coeff, Symbol q);
std::size_t count_nonzero(std::span<const Symbol> v);
std::size_t count_mismatch(std::span<const Symbol> a, std::span<const Symbol> b);
}  // namespace neon
#endif

}  // namespace cde::kernels
