#include "gravab/field_kernels.hpp"

#include <cstdlib>
#include <string>

#include "gravab/error.hpp"

namespace gravab::kernels {

PackedSpheres PackedSpheres::from(const SourceConfiguration& config) {
  PackedSpheres packed;
  for (const auto& s : config.spheres()) {
    packed.cx.push_back(s.center.x());
    packed.cy.push_back(s.center.y());
    packed.cz.push_back(s.center.z());
    packed.radius.push_back(s.radius);
    packed.gm.push_back(constants::G * s.mass());
    packed.inv_radius3.push_back(1.0 / (s.radius * s.radius * s.radius));
  }
  return packed;
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "unknown";
}

bool avx2_available() {
#if defined(GRAVAB_HAVE_AVX2_KERNEL) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa active_isa() {
  if (const char* env = std::getenv("GRAVAB_SIMD")) {
    const std::string value(env);
    if (value == "off" || value == "scalar" || value == "0") return Isa::scalar;
  }
  return avx2_available() ? Isa::avx2 : Isa::scalar;
}

#if !defined(GRAVAB_HAVE_AVX2_KERNEL)
void evaluate_avx2(const PackedSpheres& spheres, PointsView points, FieldBatchView out) {
  evaluate_scalar(spheres, points, out);
}
#endif

void evaluate(Isa isa, const PackedSpheres& spheres, PointsView points, FieldBatchView out) {
  if (isa == Isa::avx2 && avx2_available()) {
    evaluate_avx2(spheres, points, out);
  } else {
    evaluate_scalar(spheres, points, out);
  }
}

void evaluate(const PackedSpheres& spheres, PointsView points, FieldBatchView out) {
  evaluate(active_isa(), spheres, points, out);
}

FieldBatch axial_batch(const SourceConfiguration& config, std::span<const double> xs) {
  const std::vector<double> zeros(xs.size(), 0.0);
  FieldBatch batch(xs.size());
  evaluate(PackedSpheres::from(config), {xs, zeros, zeros}, batch.view());
  return batch;
}

namespace detail {

void check_sizes(PointsView points, const FieldBatchView& out) {
  const std::size_t n = points.x.size();
  if (points.y.size() != n || points.z.size() != n || out.potential.size() != n ||
      out.grad_x.size() != n || out.grad_y.size() != n || out.grad_z.size() != n ||
      out.hess_xx.size() != n) {
    throw Error(ErrorCode::invalid_input, "field batch spans must all have the same length");
  }
}

}  // namespace detail

}  // namespace gravab::kernels
