#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "conespec/errors.hpp"

namespace conespec {

// ---------------------------------------------------------------------------
// Index domains
// ---------------------------------------------------------------------------

/// Finite index set {0, ..., size-1}.
struct FiniteSet {
  std::size_t size = 0;
  bool operator==(const FiniteSet&) const = default;
};

/// Uniform grid on [0, right] with `points` nodes, s_i = i*right/(points-1).
struct UniformGrid {
  double right = 1.0;
  std::size_t points = 2;

  double step() const { return right / static_cast<double>(points - 1); }
  double point(std::size_t i) const {
    return static_cast<double>(i) * right / static_cast<double>(points - 1);
  }
  bool operator==(const UniformGrid&) const = default;
};

/// Countable index set (natural numbers); vectors have finite support.
struct CountableSparse {
  bool operator==(const CountableSparse&) const = default;
};

using IndexDomain = std::variant<FiniteSet, UniformGrid, CountableSparse>;

enum class NormKind { Sup, Euclidean };
enum class Membership { Nonnegative, UnitLowerBoundOnSupport };

// ---------------------------------------------------------------------------
// ConeSpace
// ---------------------------------------------------------------------------

/// A concrete max-cone representation: index domain + norm + membership rule.
///
/// Euclidean norm is allowed only on FiniteSet / CountableSparse domains;
/// UnitLowerBoundOnSupport only on CountableSparse.
class ConeSpace {
 public:
  ConeSpace(IndexDomain domain, NormKind norm,
            Membership membership = Membership::Nonnegative);

  static ConeSpace finite(std::size_t n, NormKind norm = NormKind::Sup);
  static ConeSpace grid(double right, std::size_t points);
  static ConeSpace sparse(NormKind norm = NormKind::Sup,
                          Membership membership = Membership::Nonnegative);

  const IndexDomain& domain() const { return domain_; }
  NormKind norm_kind() const { return norm_; }
  Membership membership() const { return membership_; }

  bool is_sparse() const;
  /// Number of coordinates for dense domains; throws for sparse.
  std::size_t dense_size() const;

  bool operator==(const ConeSpace&) const = default;

 private:
  IndexDomain domain_;
  NormKind norm_;
  Membership membership_;
};

// ---------------------------------------------------------------------------
// ConeVector
// ---------------------------------------------------------------------------

/// Nonnegative coordinate map over a ConeSpace's index domain.
///
/// Construction guarantees coordinates are nonnegative, finite, and (for
/// sparse domains) finitely supported with a canonical sorted representation
/// holding only nonzero entries. The space's membership rule is a predicate
/// (see in_cone); it is enforced by `scale` and by fixture constructors, not
/// by every intermediate of a construction pipeline.
class ConeVector {
 public:
  using SparseEntry = std::pair<std::size_t, double>;

  static ConeVector dense(ConeSpace space, std::vector<double> values);
  static ConeVector sparse(ConeSpace space, std::vector<SparseEntry> entries);
  static ConeVector zero(ConeSpace space);
  /// Indicator e_index scaled by value.
  static ConeVector basis(ConeSpace space, std::size_t index, double value = 1.0);
  /// All-ones vector; dense domains only.
  static ConeVector ones(ConeSpace space);

  const ConeSpace& space() const { return space_; }
  bool is_zero() const;
  std::size_t support_size() const;
  double operator[](std::size_t index) const;

  const std::vector<double>& dense_values() const;
  const std::vector<SparseEntry>& sparse_entries() const;

  bool operator==(const ConeVector&) const = default;

 private:
  explicit ConeVector(ConeSpace space) : space_(std::move(space)) {}

  ConeSpace space_;
  std::vector<double> dense_;
  std::vector<SparseEntry> sparse_;

  friend ConeVector sup_join(const ConeVector&, const ConeVector&);
  friend ConeVector add(const ConeVector&, const ConeVector&);
  friend ConeVector scale_unchecked(double, const ConeVector&);
};

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

/// Coordinatewise maximum; both arguments must share one space.
ConeVector sup_join(const ConeVector& x, const ConeVector& y);

/// Lattice norm of the space (sup or Euclidean).
double norm(const ConeVector& x);

/// c*x with the membership rule enforced (throws ConeViolationError).
ConeVector scale(double c, const ConeVector& x);

/// c*x in the ambient positive lattice; membership rule not enforced.
ConeVector scale_unchecked(double c, const ConeVector& x);

/// Coordinate sum, for additive (sum-aggregation) pipelines.
ConeVector add(const ConeVector& x, const ConeVector& y);

/// Membership predicate of the vector's space.
bool in_cone(const ConeVector& x);

/// Norm of the signed coordinatewise difference x - y (never exported as a vector).
double diff_norm(const ConeVector& x, const ConeVector& y);

/// |x - y| <= tol * (1 + max coordinate magnitude), coordinatewise.
bool approx_equal(const ConeVector& x, const ConeVector& y, double tol = 1e-12);

// Ambient-lattice helpers on raw signed coordinate arrays (the vector lattice
// R^d with coordinatewise order). Used by inequality checks and tests.
double sup_norm(std::span<const double> v);
double euclidean_norm(std::span<const double> v);
double ambient_norm(std::span<const double> v, NormKind kind);
std::vector<double> pointwise_max(std::span<const double> a, std::span<const double> b);

}  // namespace conespec
