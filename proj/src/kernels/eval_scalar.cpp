#include <vector>

#include "diskbez/kernels/eval.hpp"

namespace diskbez::kernels::detail {

void eval_batch_scalar(const HomogeneousControls& c, std::span<const double> t,
                       const SampleBuffers& out) {
  const std::size_t n1 = c.w.size();
  std::vector<double> ax(n1), ay(n1), aw(n1), ar(n1);
  for (std::size_t k = 0; k < t.size(); ++k) {
    const double tt = t[k];
    const double s = 1.0 - tt;
    for (std::size_t i = 0; i < n1; ++i) {
      ax[i] = c.wx[i];
      ay[i] = c.wy[i];
      aw[i] = c.w[i];
      ar[i] = c.r[i];
    }
    for (std::size_t level = 1; level < n1; ++level) {
      for (std::size_t i = 0; i + level < n1; ++i) {
        ax[i] = s * ax[i] + tt * ax[i + 1];
        ay[i] = s * ay[i] + tt * ay[i + 1];
        aw[i] = s * aw[i] + tt * aw[i + 1];
        ar[i] = s * ar[i] + tt * ar[i + 1];
      }
    }
    out.x[k] = ax[0] / aw[0];
    out.y[k] = ay[0] / aw[0];
    out.r[k] = ar[0];
  }
}

}  // namespace diskbez::kernels::detail
