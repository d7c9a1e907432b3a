#include <cstdlib>
#include <stdexcept>
#include <string>

#include "diskbez/kernels/eval.hpp"

namespace diskbez::kernels {

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(DISKBEZ_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

namespace {

Isa detect() {
  if (const char* env = std::getenv("DISKBEZ_ISA"); env != nullptr && std::string(env) == "scalar") {
    return Isa::Scalar;
  }
  return isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
}

}  // namespace

Isa active_isa() {
  static const Isa isa = detect();
  return isa;
}

void eval_batch(Isa isa, const HomogeneousControls& c, std::span<const double> t,
                const SampleBuffers& out) {
  const std::size_t n1 = c.w.size();
  if (n1 == 0 || c.wx.size() != n1 || c.wy.size() != n1 || c.r.size() != n1) {
    throw std::invalid_argument("eval_batch: inconsistent control arrays");
  }
  if (out.x.size() < t.size() || out.y.size() < t.size() || out.r.size() < t.size()) {
    throw std::invalid_argument("eval_batch: output buffers shorter than parameter list");
  }
  if (!isa_available(isa)) {
    throw std::invalid_argument("eval_batch: ISA " + std::string(isa_name(isa)) + " not available");
  }
  switch (isa) {
    case Isa::Scalar:
      detail::eval_batch_scalar(c, t, out);
      return;
    case Isa::Avx2:
#if defined(DISKBEZ_HAVE_AVX2)
      detail::eval_batch_avx2(c, t, out);
      return;
#else
      break;
#endif
  }
  throw std::invalid_argument("eval_batch: unsupported ISA");
}

}  // namespace diskbez::kernels
