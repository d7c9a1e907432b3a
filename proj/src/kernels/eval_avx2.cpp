#include <immintrin.h>

#include <vector>

#include "diskbez/kernels/eval.hpp"

namespace diskbez::kernels::detail {

namespace {

// s*a + t*b without FMA, matching the scalar kernel bit for bit.
inline __m256d lerp(__m256d s, __m256d t, __m256d a, __m256d b) {
  return _mm256_add_pd(_mm256_mul_pd(s, a), _mm256_mul_pd(t, b));
}

// Wrapped so std::vector keeps the vector type's alignment attributes.
struct Lanes {
  __m256d v;
};

}  // namespace

void eval_batch_avx2(const HomogeneousControls& c, std::span<const double> t,
                     const SampleBuffers& out) {
  const std::size_t n1 = c.w.size();
  std::vector<Lanes> ax(n1), ay(n1), aw(n1), ar(n1);
  const __m256d one = _mm256_set1_pd(1.0);

  std::size_t k = 0;
  for (; k + 4 <= t.size(); k += 4) {
    const __m256d tt = _mm256_loadu_pd(t.data() + k);
    const __m256d s = _mm256_sub_pd(one, tt);
    for (std::size_t i = 0; i < n1; ++i) {
      ax[i].v = _mm256_set1_pd(c.wx[i]);
      ay[i].v = _mm256_set1_pd(c.wy[i]);
      aw[i].v = _mm256_set1_pd(c.w[i]);
      ar[i].v = _mm256_set1_pd(c.r[i]);
    }
    for (std::size_t level = 1; level < n1; ++level) {
      for (std::size_t i = 0; i + level < n1; ++i) {
        ax[i].v = lerp(s, tt, ax[i].v, ax[i + 1].v);
        ay[i].v = lerp(s, tt, ay[i].v, ay[i + 1].v);
        aw[i].v = lerp(s, tt, aw[i].v, aw[i + 1].v);
        ar[i].v = lerp(s, tt, ar[i].v, ar[i + 1].v);
      }
    }
    _mm256_storeu_pd(out.x.data() + k, _mm256_div_pd(ax[0].v, aw[0].v));
    _mm256_storeu_pd(out.y.data() + k, _mm256_div_pd(ay[0].v, aw[0].v));
    _mm256_storeu_pd(out.r.data() + k, ar[0].v);
  }

  if (k < t.size()) {
    const std::size_t rest = t.size() - k;
    eval_batch_scalar(c, t.subspan(k),
                      {out.x.subspan(k, rest), out.y.subspan(k, rest), out.r.subspan(k, rest)});
  }
}

}  // namespace diskbez::kernels::detail
