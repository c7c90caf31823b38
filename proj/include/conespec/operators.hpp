#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "conespec/cone.hpp"

namespace conespec {

// ---------------------------------------------------------------------------
// Concrete operator families
// ---------------------------------------------------------------------------

/// Finite nonnegative matrix acting by (Ax)_i = max_j a(i,j) x_j.
struct MaxTimesMatrix {
  std::size_t n = 0;
  std::vector<double> a;  // row-major

  double at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
  double& at(std::size_t i, std::size_t j) { return a[i * n + j]; }

  static MaxTimesMatrix from_rows(const std::vector<std::vector<double>>& rows);
  static MaxTimesMatrix identity(std::size_t n);
  double max_entry() const;
};

/// Finite nonnegative matrix acting by ordinary matrix-vector product.
struct SumMatrix {
  std::size_t n = 0;
  std::vector<double> a;  // row-major

  double at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
  double& at(std::size_t i, std::size_t j) { return a[i * n + j]; }

  static SumMatrix from_rows(const std::vector<std::vector<double>>& rows);
  double max_row_sum() const;
};

/// Windowed max-kernel on a uniform grid:
/// (Tx)(s_i) = max_{lo(i) <= j <= hi(i)} kappa(i,j) x(s_j).
struct MaxKernel {
  UniformGrid grid;
  std::vector<std::size_t> lo, hi;          // inclusive window per row
  std::vector<std::vector<double>> samples;  // samples[i][j - lo[i]]
  double max_sample = 0.0;

  double at(std::size_t i, std::size_t j) const { return samples[i][j - lo[i]]; }
  static MaxKernel validate(MaxKernel k);
};

enum class ShiftKind {
  L2ConeShift,  // Euclidean norm, unit lower bound membership
  LinfShift,    // sup norm, plain nonnegative cone
};

/// Escape hatch for one-off operators defined by explicit coordinate rules.
struct CustomOp {
  std::string name;
  std::function<ConeVector(const ConeVector&)> apply;
  /// Exact |T^n| when known; nullptr disables power-norm based estimates.
  std::function<double(std::size_t)> power_norm;
};

enum class Aggregation { Sup, Sum };

// ---------------------------------------------------------------------------
// OperatorDescriptor
// ---------------------------------------------------------------------------

/// A concrete operator together with its declared structural flags.
///
/// The norm bound K is the exact operator norm for the structured kinds
/// (max entry, max kernel sample, 1 for shifts, max row sum).
class OperatorDescriptor {
 public:
  using Kind = std::variant<MaxTimesMatrix, MaxKernel, ShiftKind, SumMatrix, CustomOp>;

  static OperatorDescriptor max_times(MaxTimesMatrix A);
  static OperatorDescriptor max_kernel(MaxKernel K);
  static OperatorDescriptor shift(ShiftKind kind);
  static OperatorDescriptor sum_matrix(SumMatrix A);
  static OperatorDescriptor custom(CustomOp op, ConeSpace space, Aggregation agg,
                                   bool sup_preserving, bool additive,
                                   std::optional<double> lipschitz, double norm_bound);

  const Kind& kind() const { return kind_; }
  const ConeSpace& space() const { return space_; }
  Aggregation aggregation() const { return aggregation_; }
  bool sup_preserving() const { return sup_preserving_; }
  bool additive() const { return additive_; }
  const std::optional<double>& lipschitz() const { return lipschitz_; }
  double norm_bound() const { return norm_bound_; }

  const MaxTimesMatrix* as_max_times() const { return std::get_if<MaxTimesMatrix>(&kind_); }
  const MaxKernel* as_kernel() const { return std::get_if<MaxKernel>(&kind_); }
  const SumMatrix* as_sum() const { return std::get_if<SumMatrix>(&kind_); }
  const ShiftKind* as_shift() const { return std::get_if<ShiftKind>(&kind_); }
  const CustomOp* as_custom() const { return std::get_if<CustomOp>(&kind_); }

  /// True when exact power norms are available for this operator.
  bool has_power_norm() const;

 private:
  OperatorDescriptor(Kind kind, ConeSpace space) : kind_(std::move(kind)), space_(std::move(space)) {}

  Kind kind_;
  ConeSpace space_;
  Aggregation aggregation_ = Aggregation::Sup;
  bool sup_preserving_ = false;
  bool additive_ = false;
  std::optional<double> lipschitz_;
  double norm_bound_ = 0.0;
};

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

/// T(x) by the defining formula of the operator's kind.
ConeVector apply(const OperatorDescriptor& op, const ConeVector& x);

/// [x, Tx, T^2 x, ..., T^H x].
std::vector<ConeVector> power_orbit(const OperatorDescriptor& op, const ConeVector& x,
                                    std::size_t H);

/// Exact |T^n| for structured kinds. May overflow to +inf for huge values;
/// log_power_norm stays finite.
double power_norm(const OperatorDescriptor& op, std::size_t n);

/// log |T^n| (-inf when |T^n| = 0). Computed in the log domain throughout.
double log_power_norm(const OperatorDescriptor& op, std::size_t n);

/// log |T^n| for n = 1..H in one pass.
std::vector<double> log_power_norm_sequence(const OperatorDescriptor& op, std::size_t H);

/// factor * T as a new descriptor (structured kinds stay structured).
OperatorDescriptor scaled(const OperatorDescriptor& op, double factor);

/// The operator's natural test set C' with |T^n| = sup_{x in C'} |T^n x|:
/// basis vectors for matrices and shifts (shift ladder up to `sparse_extent`),
/// the all-ones function plus up to 32 grid bumps for kernels.
std::vector<ConeVector> canonical_seeds(const OperatorDescriptor& op,
                                        std::size_t sparse_extent = 4096);

}  // namespace conespec
