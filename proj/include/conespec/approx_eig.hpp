#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "conespec/operators.hpp"

#include "json.hpp"

namespace conespec {

// ---------------------------------------------------------------------------
// Envelope machinery
// ---------------------------------------------------------------------------

/// The two integers behind the envelope construction for a given (eps, K):
/// m0 minimal with (1+eps)^m0 > 2/eps, and n minimal with n > m0 and
/// (1+eps)^n > 2 K^m0 (1+eps)^m0.
struct HorizonParams {
  double eps = 0.0;
  double K = 1.0;
  std::size_t m0 = 0;
  std::size_t n = 0;
};

HorizonParams horizon_params(double eps, double K);

/// Orbit norms alpha_k = |T^k x| of a normalized seed, kept in log domain.
struct AlphaSequence {
  std::vector<double> log_alpha;  // log |T^k x|, k = 0..H (-inf once the orbit dies)
  double K = 1.0;                 // admissibility bound alpha_k <= K^k

  std::size_t horizon() const { return log_alpha.empty() ? 0 : log_alpha.size() - 1; }
  double alpha(std::size_t k) const;
};

/// The peak-m geometric envelope beta_k = alpha_m^{-1} (1+eps)^{-|k-m|}.
///
/// Satisfies (finite-horizon form): beta_0 <= eps, |beta_{k+1}-beta_k| <= 2eps,
/// strict increase below m and strict decrease above, alpha_m beta_m = 1,
/// alpha_k beta_k <= 1 for all stored k, and boundary decay
/// alpha_R beta_{R+1} below the configured tolerance.
struct BetaSequence {
  std::size_t m = 0;
  double eps = 0.0;
  double log_alpha_m = 0.0;
  std::vector<double> beta;       // k = 0..R
  std::vector<double> log_gamma;  // gamma_k = alpha_n (1+eps)^{|k-n|}, log domain
  std::size_t m0 = 0;
  std::size_t lemma_n = 0;

  std::size_t R() const { return beta.empty() ? 0 : beta.size() - 1; }
  double beta_at(std::size_t k) const;      // formula value for any k
  double log_beta_at(std::size_t k) const;  // log of the same
};

/// Envelope construction: m is the smallest argmax of alpha_k / gamma_k over
/// k <= H (boundary argmax is an error, never accepted).
BetaSequence build_beta(const AlphaSequence& alpha, const HorizonParams& p, std::size_t H);

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

enum class CertificatePath { ZeroTarget, GeometricSum, BetaEnvelope };

struct ConstructionTrace {
  std::string seed;  // label of the seed that produced the vector
  std::optional<std::size_t> m, r, n_k, r_k, k;
  std::optional<double> t_k, M0_hat, K_hat, eps_effective;
};

/// A certified approximate eigenpair: residual is always directly measured.
///
/// u is normalized to unit norm except on cones whose membership rule forbids
/// normalization; then u is unnormalized and u_norm carries |u|.
struct ApproxEigenpair {
  double t = 0.0;
  ConeVector u;
  double u_norm = 1.0;
  double residual = 0.0;  // |Tu - t u| / |u|
  CertificatePath path = CertificatePath::BetaEnvelope;
  Aggregation aggregation = Aggregation::Sup;
  ConstructionTrace trace;
  /// The a priori residual bound evaluated with measured M0_hat and K_hat.
  std::optional<double> bound;
};

/// |apply(op,u) - t*u| / |u| via the signed coordinatewise difference.
double residual(const OperatorDescriptor& op, double t, const ConeVector& u);

/// Constructive membership certificate for t in the approximate point
/// spectrum. Seeds are scanned in order; all searches are deterministic.
ApproxEigenpair approx_eigenvector(const OperatorDescriptor& op, double t, double eps,
                                   const std::vector<ConeVector>& seeds, std::size_t H);

/// The divergent-orbit construction at target 1 (caller rescales the
/// operator): y_k = join_{j<=r_k} T^j x_k / t_k^{j+1}, measured residual
/// <= 5/k for sup aggregation when the threshold is reachable.
ApproxEigenpair case1_construct(const OperatorDescriptor& op, std::size_t k,
                                const std::vector<ConeVector>& seeds, std::size_t H);

/// join_{k<=H} k^{-2} x_k (or the sum) over near-norming seeds x_k; its local
/// radius approaches r(T) as H grows when the attainment hypotheses hold.
ConeVector radius_witness(const OperatorDescriptor& op, std::size_t H);

/// x = y v Sy v ... v S^{m-1} y for S = T/t; requires T^m y = t^m y and
/// returns a verified fixed point of S (so an exact eigenvector of T at t).
ConeVector eigenvector_from_power(const OperatorDescriptor& op, const ConeVector& y,
                                  double t, std::size_t m);

/// Certificate at the local radius of x, seeded from the orbit cone of x.
ApproxEigenpair orbit_local_certificate(const OperatorDescriptor& op, const ConeVector& x,
                                        double eps, std::size_t H);

nlohmann::json to_json(const ApproxEigenpair& p);

}  // namespace conespec
