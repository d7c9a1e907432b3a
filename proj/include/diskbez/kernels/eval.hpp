#pragma once

#include <span>
#include <string_view>

namespace diskbez::kernels {

/// Control data of a disk rational Bezier curve in homogeneous form:
/// wx[i] = w[i] * x[i], wy[i] = w[i] * y[i]. All spans have length n + 1.
struct HomogeneousControls {
  std::span<const double> wx;
  std::span<const double> wy;
  std::span<const double> w;
  std::span<const double> r;
};

/// Output of a batch evaluation; each span has the length of the parameter span.
struct SampleBuffers {
  std::span<double> x;
  std::span<double> y;
  std::span<double> r;
};

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa);

/// Whether `isa` was compiled in and is supported by the running CPU.
bool isa_available(Isa isa);

/// Best available ISA. Setting DISKBEZ_ISA=scalar in the environment forces
/// the scalar path; the choice is made once per process.
Isa active_isa();

/// Evaluates center and radius at every parameter in `t` with the
/// homogeneous de Casteljau recurrence. Every ISA performs the same
/// floating-point operations in the same order.
void eval_batch(Isa isa, const HomogeneousControls& c, std::span<const double> t,
                const SampleBuffers& out);

inline void eval_batch(const HomogeneousControls& c, std::span<const double> t,
                       const SampleBuffers& out) {
  eval_batch(active_isa(), c, t, out);
}

namespace detail {
void eval_batch_scalar(const HomogeneousControls& c, std::span<const double> t,
                       const SampleBuffers& out);
#if defined(DISKBEZ_HAVE_AVX2)
void eval_batch_avx2(const HomogeneousControls& c, std::span<const double> t,
                     const SampleBuffers& out);
#endif
}  // namespace detail

}  // namespace diskbez::kernels
