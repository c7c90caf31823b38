#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conespec/approx_eig.hpp"
#include "conespec/operators.hpp"

#include "json.hpp"

namespace conespec {

// ---------------------------------------------------------------------------
// Radius estimates
// ---------------------------------------------------------------------------

enum class RadiusKind { UpperBoundFromInf, LimsupLocal };

/// Finite-horizon estimate of a spectral radius.
///
/// UpperBoundFromInf: value = min_{n<=H} |T^n|^{1/n}, a certified upper bound
/// on the Bonsall cone spectral radius. LimsupLocal: value = max of the
/// samples over the trailing window [window_start, H], a limsup surrogate for
/// the local radius (exact 0 when the orbit hits zero).
struct RadiusEstimate {
  double value = 0.0;
  std::size_t horizon = 0;
  RadiusKind kind = RadiusKind::UpperBoundFromInf;
  std::vector<std::pair<std::size_t, double>> samples;  // (n, |T^n (x)|^{1/n})
  std::vector<double> running_min;
  std::size_t window_start = 0;  // LimsupLocal only
};

/// Finite-horizon upper bound on the Bonsall cone spectral radius.
RadiusEstimate bonsall_radius(const OperatorDescriptor& op, std::size_t H);

/// Trailing-window surrogate for the local cone spectral radius r_x(T).
RadiusEstimate local_radius(const OperatorDescriptor& op, const ConeVector& x,
                            std::size_t H);

/// Exact maximum cycle geometric mean of the max-times matrix (Karp's
/// minimum/maximum mean cycle scheme, run in the log domain); equals the
/// max-times spectral radius. Returns 0 for an acyclic positive-entry digraph.
double cycle_mean_radius(const MaxTimesMatrix& A);

/// r_{e_j}(T_A) for j = 0..n-1: the maximum cycle geometric mean over cycles
/// reachable from node j along edges j -> i with a(i,j) > 0.
std::vector<double> basis_local_radii(const MaxTimesMatrix& A);

/// One point-spectrum entry: the value t plus a verified eigenvector when the
/// Kleene-star construction produced one that passes apply(A,v) = t*v.
struct PointSpectrumEntry {
  double t = 0.0;
  std::optional<ConeVector> eigenvector;
};

/// The distinct basis local radii with verification-gated eigenvectors.
std::vector<PointSpectrumEntry> finite_point_spectrum(const MaxTimesMatrix& A);

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

struct CertificateRecord {
  double t = 0.0;
  std::optional<ApproxEigenpair> pair;
  std::string reason;  // failure reason code when pair is absent
};

struct SpectralReport {
  RadiusEstimate radius;
  std::optional<double> exact_radius;  // finite max-times matrices
  std::vector<std::pair<std::string, RadiusEstimate>> local_radii;
  std::pair<double, double> ap_interval{0.0, 0.0};
  std::vector<PointSpectrumEntry> point_spectrum;
  std::vector<CertificateRecord> certificates;
};

/// Assembles radius, local radii over the test set, the certified
/// [sup r_x, r] interval, approximate-eigenvector certificates at up to five
/// evenly spaced targets, and (for max-times matrices) the point spectrum.
SpectralReport ap_spectrum_report(const OperatorDescriptor& op,
                                  const std::vector<ConeVector>& test_set,
                                  std::size_t H, double eps,
                                  const std::vector<std::string>& labels = {});

nlohmann::json to_json(const RadiusEstimate& e);
nlohmann::json to_json(const SpectralReport& r);
nlohmann::json vector_to_json(const ConeVector& x);

}  // namespace conespec
