// Compiled with -mavx2. Mirrors evaluate_scalar operation for operation so
// the two kernels agree bit for bit.

#include <immintrin.h>

#include "gravab/field_kernels.hpp"

namespace gravab::kernels {

void evaluate_avx2(const PackedSpheres& spheres, PointsView points, FieldBatchView out) {
  detail::check_sizes(points, out);
  const std::size_t n = points.x.size();
  const std::size_t ns = spheres.size();
  const std::size_t vec_end = n - n % 4;

  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d three = _mm256_set1_pd(3.0);
  const __m256d half = _mm256_set1_pd(0.5);

  for (std::size_t i = 0; i < vec_end; i += 4) {
    const __m256d px = _mm256_loadu_pd(points.x.data() + i);
    const __m256d py = _mm256_loadu_pd(points.y.data() + i);
    const __m256d pz = _mm256_loadu_pd(points.z.data() + i);
    __m256d u = _mm256_setzero_pd();
    __m256d gx = _mm256_setzero_pd();
    __m256d gy = _mm256_setzero_pd();
    __m256d gz = _mm256_setzero_pd();
    __m256d hxx = _mm256_setzero_pd();

    for (std::size_t s = 0; s < ns; ++s) {
      const __m256d dx = _mm256_sub_pd(px, _mm256_set1_pd(spheres.cx[s]));
      const __m256d dy = _mm256_sub_pd(py, _mm256_set1_pd(spheres.cy[s]));
      const __m256d dz = _mm256_sub_pd(pz, _mm256_set1_pd(spheres.cz[s]));
      const __m256d r2 = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy)),
                                       _mm256_mul_pd(dz, dz));
      const __m256d r = _mm256_sqrt_pd(r2);
      const __m256d gm = _mm256_set1_pd(spheres.gm[s]);
      const __m256d neg_gm = _mm256_set1_pd(-spheres.gm[s]);
      const __m256d big_r = _mm256_set1_pd(spheres.radius[s]);
      const __m256d inv_big_r3 = _mm256_set1_pd(spheres.inv_radius3[s]);
      const __m256d outside = _mm256_cmp_pd(r, big_r, _CMP_GE_OQ);

      // exterior branch
      const __m256d inv_r = _mm256_div_pd(one, r);
      const __m256d k_out =
          _mm256_mul_pd(gm, _mm256_mul_pd(_mm256_mul_pd(inv_r, inv_r), inv_r));
      const __m256d u_out = _mm256_mul_pd(neg_gm, inv_r);
      const __m256d q = _mm256_mul_pd(
          _mm256_mul_pd(_mm256_mul_pd(_mm256_mul_pd(three, inv_r), inv_r), dx), dx);
      const __m256d h_out = _mm256_mul_pd(k_out, _mm256_sub_pd(one, q));

      // interior branch
      const __m256d k_in = _mm256_mul_pd(gm, inv_big_r3);
      const __m256d three_r2 = _mm256_mul_pd(_mm256_mul_pd(three, big_r), big_r);
      const __m256d u_in = _mm256_mul_pd(
          _mm256_mul_pd(_mm256_mul_pd(neg_gm, _mm256_sub_pd(three_r2, r2)), half), inv_big_r3);

      const __m256d k = _mm256_blendv_pd(k_in, k_out, outside);
      u = _mm256_add_pd(u, _mm256_blendv_pd(u_in, u_out, outside));
      gx = _mm256_add_pd(gx, _mm256_mul_pd(k, dx));
      gy = _mm256_add_pd(gy, _mm256_mul_pd(k, dy));
      gz = _mm256_add_pd(gz, _mm256_mul_pd(k, dz));
      hxx = _mm256_add_pd(hxx, _mm256_blendv_pd(k_in, h_out, outside));
    }

    _mm256_storeu_pd(out.potential.data() + i, u);
    _mm256_storeu_pd(out.grad_x.data() + i, gx);
    _mm256_storeu_pd(out.grad_y.data() + i, gy);
    _mm256_storeu_pd(out.grad_z.data() + i, gz);
    _mm256_storeu_pd(out.hess_xx.data() + i, hxx);
  }

  if (vec_end < n) {
    const std::size_t tail = n - vec_end;
    evaluate_scalar(spheres,
                    {points.x.subspan(vec_end, tail), points.y.subspan(vec_end, tail),
                     points.z.subspan(vec_end, tail)},
                    {out.potential.subspan(vec_end, tail), out.grad_x.subspan(vec_end, tail),
                     out.grad_y.subspan(vec_end, tail), out.grad_z.subspan(vec_end, tail),
                     out.hess_xx.subspan(vec_end, tail)});
  }
}

}  // namespace gravab::kernels
