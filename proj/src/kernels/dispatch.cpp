#include <atomic>
#include <cstdlib>
#include <string>

#include "cde/error.hpp"
#include "cde/kernels.hpp"

namespace cde::kernels {
namespace {

struct Table {
  Isa isa;
  void (*add_mod)(std::span<Symbol>, std::span<const Symbol>, Symbol);
  void (*axpy_mod)(std::span<Symbol>, std::span<const Symbol>, Symbol, Symbol);
  std::size_t (*count_nonzero)(std::span<const Symbol>);
  std::size_t (*count_mismatch)(std::span<const Symbol>, std::span<const Symbol>);
};

constexpr Table kScalar{Isa::kScalar, scalar::add_mod, scalar::axpy_mod, scalar::count_nonzero,
                        scalar::count_mismatch};
#if CDE_HAVE_AVX2
constexpr Table kAvx2{Isa::kAvx2, avx2::add_mod, avx2::axpy_mod, avx2::count_nonzero, avx2::count_mismatch};
#endif
#if CDE_HAVE_NEON
constexpr Table kNeon{Isa::kNeon, neon::add_mod, neon::axpy_mod, neon::count_nonzero, neon::count_mismatch};
#endif

const Table* table_for(Isa isa) noexcept {
  switch (isa) {
#if CDE_HAVE_AVX2
    case Isa::kAvx2:
      return &kAvx2;
#endif
#if CDE_HAVE_NEON
    case Isa::kNeon:
      return &kNeon;
#endif
    default:
      return &kScalar;
  }
}

Isa initial_isa() noexcept {
  const char* env = std::getenv("CDE_SIMD");
  if (env != nullptr) {
    const std::string want(env);
    if (want == "scalar") return Isa::kScalar;
    if (want == "avx2" && isa_supported(Isa::kAvx2)) return Isa::kAvx2;
    if (want == "neon" && isa_supported(Isa::kNeon)) return Isa::kNeon;
  }
  return detect_isa();
}

std::atomic<const Table*>& current() {
  static std::atomic<const Table*> table{table_for(initial_isa())};
  return table;
}

const Table& active() { return *current().load(std::memory_order_relaxed); }

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::kAvx2:
      return "avx2";
    case Isa::kNeon:
      return "neon";
    case Isa::kScalar:
      break;
  }
  return "scalar";
}

bool isa_supported(Isa isa) noexcept {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if CDE_HAVE_AVX2 && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::kNeon:
      return CDE_HAVE_NEON != 0;
  }
  return false;
}

Isa detect_isa() noexcept {
  if (isa_supported(Isa::kAvx2)) return Isa::kAvx2;
  if (isa_supported(Isa::kNeon)) return Isa::kNeon;
  return Isa::kScalar;
}

Isa active_isa() noexcept { return active().isa; }

void set_isa(Isa isa) {
  if (!isa_supported(isa)) {
    throw InvalidArgument("SIMD variant '" + std::string(isa_name(isa)) + "' is not supported on this host");
  }
  current().store(table_for(isa), std::memory_order_relaxed);
}

void add_mod(std::span<Symbol> acc, std::span<const Symbol> row, Symbol q) { active().add_mod(acc, row, q); }

void axpy_mod(std::span<Symbol> acc, std::span<const Symbol> row, Symbol coeff, Symbol q) {
  active().axpy_mod(acc, row, coeff, q);
}

std::size_t count_nonzero(std::span<const Symbol> v) { return active().count_nonzero(v); }

std::size_t count_mismatch(std::span<const Symbol> a, std::span<const Symbol> b) {
  return active().count_mismatch(a, b);
}

}  // namespace cde::kernels
