#include <cmath>

#include "gravab/field_kernels.hpp"

namespace gravab::kernels {

void evaluate_scalar(const PackedSpheres& spheres, PointsView points, FieldBatchView out) {
  detail::check_sizes(points, out);
  const std::size_t n = points.x.size();
  const std::size_t ns = spheres.size();
  for (std::size_t i = 0; i < n; ++i) {
    double u = 0.0, gx = 0.0, gy = 0.0, gz = 0.0, hxx = 0.0;
    for (std::size_t s = 0; s < ns; ++s) {
      const double dx = points.x[i] - spheres.cx[s];
      const double dy = points.y[i] - spheres.cy[s];
      const double dz = points.z[i] - spheres.cz[s];
      const double r2 = dx * dx + dy * dy + dz * dz;
      const double r = std::sqrt(r2);
      const double gm = spheres.gm[s];
      const double big_r = spheres.radius[s];
      if (r >= big_r) {
        const double inv_r = 1.0 / r;
        const double k = gm * (inv_r * inv_r * inv_r);
        u += -gm * inv_r;
        gx += k * dx;
        gy += k * dy;
        gz += k * dz;
        hxx += k * (1.0 - 3.0 * inv_r * inv_r * dx * dx);
      } else {
        const double k = gm * spheres.inv_radius3[s];
        u += -gm * (3.0 * big_r * big_r - r2) * 0.5 * spheres.inv_radius3[s];
        gx += k * dx;
        gy += k * dy;
        gz += k * dz;
        hxx += k;
      }
    }
    out.potential[i] = u;
    out.grad_x[i] = gx;
    out.grad_y[i] = gy;
    out.grad_z[i] = gz;
    out.hess_xx[i] = hxx;
  }
}

}  // namespace gravab::kernels
