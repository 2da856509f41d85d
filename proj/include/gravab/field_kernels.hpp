#pragma once

/**
 * @file field_kernels.hpp
 * @brief Batched source-mass field evaluation over many points.
 *
 * The scalar kernel is the reference. The AVX2 kernel evaluates four points
 * per lane group with the same operation sequence (no FMA contraction), so
 * both produce bit-identical results; the tests hold them to that. The
 * dispatcher picks AVX2 when it was compiled in and the CPU reports it,
 * unless GRAVAB_SIMD=off is set in the environment.
 */

#include <span>
#include <string_view>
#include <vector>

#include "gravab/gravfield.hpp"

namespace gravab::kernels {

/// Structure-of-arrays copy of a sphere list with precomputed GM and 1/R³.
struct PackedSpheres {
  std::vector<double> cx, cy, cz;
  std::vector<double> radius;
  std::vector<double> gm;
  std::vector<double> inv_radius3;

  static PackedSpheres from(const SourceConfiguration& config);
  std::size_t size() const { return gm.size(); }
};

struct PointsView {
  std::span<const double> x, y, z;
};

/// Outputs per point: potential, gradient components, and ∂²U/∂x².
struct FieldBatchView {
  std::span<double> potential;
  std::span<double> grad_x, grad_y, grad_z;
  std::span<double> hess_xx;
};

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);

/// Whether the AVX2 kernel is compiled in and the CPU supports it.
bool avx2_available();

/// Kernel the dispatcher will use.
Isa active_isa();

void evaluate_scalar(const PackedSpheres& spheres, PointsView points, FieldBatchView out);
void evaluate_avx2(const PackedSpheres& spheres, PointsView points, FieldBatchView out);

/// Runtime-dispatched entry point. Throws invalid-input on size mismatch.
void evaluate(const PackedSpheres& spheres, PointsView points, FieldBatchView out);
void evaluate(Isa isa, const PackedSpheres& spheres, PointsView points, FieldBatchView out);

/// Owning buffers for a batch.
struct FieldBatch {
  std::vector<double> potential, grad_x, grad_y, grad_z, hess_xx;

  explicit FieldBatch(std::size_t n)
      : potential(n), grad_x(n), grad_y(n), grad_z(n), hess_xx(n) {}

  FieldBatchView view() { return {potential, grad_x, grad_y, grad_z, hess_xx}; }
};

/// Convenience: source field along the x-axis (y = z = 0) at the given x.
FieldBatch axial_batch(const SourceConfiguration& config, std::span<const double> xs);

namespace detail {
void check_sizes(PointsView points, const FieldBatchView& out);
}

}  // namespace gravab::kernels
