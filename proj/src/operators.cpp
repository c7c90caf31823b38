#include "conespec/operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace conespec {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_or_neg_inf(double v) { return v > 0.0 ? std::log(v) : kNegInf; }

void check_matrix_entries(const std::vector<double>& a) {
  for (double v : a) {
    if (!std::isfinite(v) || v < 0.0)
      throw InvalidArgumentError("matrix entries must be finite and nonnegative");
  }
}

void check_space(const OperatorDescriptor& op, const ConeVector& x) {
  if (!(op.space() == x.space()))
    throw DomainMismatchError("vector does not belong to the operator's cone space");
}

// Max-plus product C = A (x) B on log-domain matrices (-inf encodes zero).
std::vector<double> max_plus_product(const std::vector<double>& A,
                                     const std::vector<double>& B, std::size_t n) {
  std::vector<double> C(n * n, kNegInf);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      double aik = A[i * n + k];
      if (aik == kNegInf) continue;
      for (std::size_t j = 0; j < n; ++j) {
        double v = aik + B[k * n + j];
        if (v > C[i * n + j]) C[i * n + j] = v;
      }
    }
  }
  return C;
}

std::vector<double> log_entries(const MaxTimesMatrix& A) {
  std::vector<double> L(A.a.size());
  for (std::size_t i = 0; i < A.a.size(); ++i) L[i] = log_or_neg_inf(A.a[i]);
  return L;
}

double max_of(const std::vector<double>& v) {
  double m = kNegInf;
  for (double x : v) m = std::max(m, x);
  return m;
}

}  // namespace

// ---------------------------------------------------------------------------
// Structured kinds
// ---------------------------------------------------------------------------

MaxTimesMatrix MaxTimesMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  MaxTimesMatrix m;
  m.n = rows.size();
  if (m.n == 0) throw InvalidArgumentError("matrix must be nonempty");
  m.a.reserve(m.n * m.n);
  for (const auto& r : rows) {
    if (r.size() != m.n) throw InvalidArgumentError("matrix must be square");
    m.a.insert(m.a.end(), r.begin(), r.end());
  }
  check_matrix_entries(m.a);
  return m;
}

MaxTimesMatrix MaxTimesMatrix::identity(std::size_t n) {
  MaxTimesMatrix m;
  m.n = n;
  m.a.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

double MaxTimesMatrix::max_entry() const { return a.empty() ? 0.0 : *std::max_element(a.begin(), a.end()); }

SumMatrix SumMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  SumMatrix m;
  m.n = rows.size();
  if (m.n == 0) throw InvalidArgumentError("matrix must be nonempty");
  m.a.reserve(m.n * m.n);
  for (const auto& r : rows) {
    if (r.size() != m.n) throw InvalidArgumentError("matrix must be square");
    m.a.insert(m.a.end(), r.begin(), r.end());
  }
  check_matrix_entries(m.a);
  return m;
}

double SumMatrix::max_row_sum() const {
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += at(i, j);
    best = std::max(best, s);
  }
  return best;
}

MaxKernel MaxKernel::validate(MaxKernel k) {
  const std::size_t N = k.grid.points;
  if (N < 2) throw InvalidArgumentError("grid needs at least 2 points");
  if (k.lo.size() != N || k.hi.size() != N || k.samples.size() != N)
    throw InvalidArgumentError("kernel window/sample arrays must match the grid");
  double m = 0.0;
  for (std::size_t i = 0; i < N; ++i) {
    if (k.lo[i] > k.hi[i] || k.hi[i] >= N)
      throw InvalidArgumentError("kernel window out of range");
    if (k.samples[i].size() != k.hi[i] - k.lo[i] + 1)
      throw InvalidArgumentError("kernel sample row has wrong width");
    for (double v : k.samples[i]) {
      if (!std::isfinite(v) || v < 0.0)
        throw InvalidArgumentError("kernel samples must be finite and nonnegative");
      m = std::max(m, v);
    }
  }
  k.max_sample = m;
  return k;
}

// ---------------------------------------------------------------------------
// OperatorDescriptor factories
// ---------------------------------------------------------------------------

OperatorDescriptor OperatorDescriptor::max_times(MaxTimesMatrix A) {
  check_matrix_entries(A.a);
  double K = A.max_entry();
  std::size_t n = A.n;
  OperatorDescriptor d(Kind(std::move(A)), ConeSpace::finite(n));
  d.aggregation_ = Aggregation::Sup;
  d.sup_preserving_ = true;
  d.additive_ = false;
  d.lipschitz_ = K;
  d.norm_bound_ = K;
  return d;
}

OperatorDescriptor OperatorDescriptor::max_kernel(MaxKernel K) {
  MaxKernel k = MaxKernel::validate(std::move(K));
  double bound = k.max_sample;
  UniformGrid g = k.grid;
  OperatorDescriptor d(Kind(std::move(k)), ConeSpace(g, NormKind::Sup));
  d.aggregation_ = Aggregation::Sup;
  d.sup_preserving_ = true;
  d.additive_ = false;
  d.lipschitz_ = bound;
  d.norm_bound_ = bound;
  return d;
}

OperatorDescriptor OperatorDescriptor::shift(ShiftKind kind) {
  ConeSpace space = kind == ShiftKind::L2ConeShift
                        ? ConeSpace::sparse(NormKind::Euclidean,
                                            Membership::UnitLowerBoundOnSupport)
                        : ConeSpace::sparse(NormKind::Sup, Membership::Nonnegative);
  OperatorDescriptor d(Kind(kind), std::move(space));
  d.aggregation_ = Aggregation::Sup;
  d.sup_preserving_ = true;
  d.additive_ = false;
  d.lipschitz_ = 1.0;
  d.norm_bound_ = 1.0;
  return d;
}

OperatorDescriptor OperatorDescriptor::sum_matrix(SumMatrix A) {
  check_matrix_entries(A.a);
  double K = A.max_row_sum();
  std::size_t n = A.n;
  OperatorDescriptor d(Kind(std::move(A)), ConeSpace::finite(n));
  d.aggregation_ = Aggregation::Sum;
  d.sup_preserving_ = false;
  d.additive_ = true;
  d.lipschitz_ = K;
  d.norm_bound_ = K;
  return d;
}

OperatorDescriptor OperatorDescriptor::custom(CustomOp op, ConeSpace space,
                                              Aggregation agg, bool sup_preserving,
                                              bool additive, std::optional<double> lipschitz,
                                              double norm_bound) {
  if (!op.apply) throw InvalidArgumentError("custom operator needs an apply function");
  OperatorDescriptor d(Kind(std::move(op)), std::move(space));
  d.aggregation_ = agg;
  d.sup_preserving_ = sup_preserving;
  d.additive_ = additive;
  d.lipschitz_ = lipschitz;
  d.norm_bound_ = norm_bound;
  return d;
}

bool OperatorDescriptor::has_power_norm() const {
  if (const auto* c = as_custom()) return static_cast<bool>(c->power_norm);
  return true;
}

// ---------------------------------------------------------------------------
// apply
// ---------------------------------------------------------------------------

namespace {

ConeVector apply_max_times(const MaxTimesMatrix& A, const ConeVector& x) {
  const auto& v = x.dense_values();
  std::vector<double> out(A.n, 0.0);
  for (std::size_t i = 0; i < A.n; ++i) {
    double best = 0.0;
    for (std::size_t j = 0; j < A.n; ++j) best = std::max(best, A.at(i, j) * v[j]);
    out[i] = best;
  }
  return ConeVector::dense(x.space(), std::move(out));
}

ConeVector apply_sum(const SumMatrix& A, const ConeVector& x) {
  const auto& v = x.dense_values();
  std::vector<double> out(A.n, 0.0);
  for (std::size_t i = 0; i < A.n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < A.n; ++j) s += A.at(i, j) * v[j];
    out[i] = s;
  }
  return ConeVector::dense(x.space(), std::move(out));
}

ConeVector apply_kernel(const MaxKernel& k, const ConeVector& x) {
  const auto& v = x.dense_values();
  const std::size_t N = k.grid.points;
  std::vector<double> out(N, 0.0);
  for (std::size_t i = 0; i < N; ++i) {
    double best = 0.0;
    const auto& row = k.samples[i];
    for (std::size_t j = k.lo[i]; j <= k.hi[i]; ++j)
      best = std::max(best, row[j - k.lo[i]] * v[j]);
    out[i] = best;
  }
  return ConeVector::dense(x.space(), std::move(out));
}

ConeVector apply_shift(const ConeVector& x) {
  std::vector<ConeVector::SparseEntry> out;
  out.reserve(x.sparse_entries().size());
  for (const auto& [i, v] : x.sparse_entries())
    if (i > 0) out.emplace_back(i - 1, v);
  return ConeVector::sparse(x.space(), std::move(out));
}

}  // namespace

ConeVector apply(const OperatorDescriptor& op, const ConeVector& x) {
  check_space(op, x);
  if (const auto* A = op.as_max_times()) return apply_max_times(*A, x);
  if (const auto* A = op.as_sum()) return apply_sum(*A, x);
  if (const auto* k = op.as_kernel()) return apply_kernel(*k, x);
  if (op.as_shift()) return apply_shift(x);
  return op.as_custom()->apply(x);
}

std::vector<ConeVector> power_orbit(const OperatorDescriptor& op, const ConeVector& x,
                                    std::size_t H) {
  std::vector<ConeVector> orbit;
  orbit.reserve(H + 1);
  orbit.push_back(x);
  for (std::size_t k = 0; k < H; ++k) orbit.push_back(apply(op, orbit.back()));
  return orbit;
}

// ---------------------------------------------------------------------------
// power norms
// ---------------------------------------------------------------------------

std::vector<double> log_power_norm_sequence(const OperatorDescriptor& op, std::size_t H) {
  std::vector<double> out;
  out.reserve(H);
  if (const auto* A = op.as_max_times()) {
    const std::size_t n = A->n;
    std::vector<double> L = log_entries(*A);
    std::vector<double> P = L;
    for (std::size_t k = 1; k <= H; ++k) {
      if (k > 1) P = max_plus_product(P, L, n);
      out.push_back(max_of(P));
    }
    return out;
  }
  if (const auto* k = op.as_kernel()) {
    const std::size_t N = k->grid.points;
    std::vector<double> v(N, 0.0), w(N);
    for (std::size_t step = 1; step <= H; ++step) {
      for (std::size_t i = 0; i < N; ++i) {
        double best = kNegInf;
        const auto& row = k->samples[i];
        for (std::size_t j = k->lo[i]; j <= k->hi[i]; ++j) {
          double lk = log_or_neg_inf(row[j - k->lo[i]]);
          if (lk == kNegInf) continue;
          double cand = lk + v[j];
          if (cand > best) best = cand;
        }
        w[i] = best;
      }
      std::swap(v, w);
      out.push_back(max_of(v));
    }
    return out;
  }
  if (op.as_shift()) {
    out.assign(H, 0.0);  // |T^n| = 1
    return out;
  }
  if (const auto* A = op.as_sum()) {
    const std::size_t n = A->n;
    std::vector<double> B = A->a;
    double log_scale = 0.0;
    for (std::size_t k = 1; k <= H; ++k) {
      if (k > 1) {
        std::vector<double> C(n * n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t l = 0; l < n; ++l) {
            double b = B[i * n + l];
            if (b == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) C[i * n + j] += b * A->a[l * n + j];
          }
        B = std::move(C);
        double m = max_of(B);
        if (m > 1e100 || (m > 0.0 && m < 1e-100)) {
          for (double& v : B) v /= m;
          log_scale += std::log(m);
        }
      }
      double best = kNegInf;
      for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) s += B[i * n + j];
        best = std::max(best, log_or_neg_inf(s));
      }
      out.push_back(best == kNegInf ? kNegInf : best + log_scale);
    }
    return out;
  }
  const auto* c = op.as_custom();
  if (!c->power_norm)
    throw PreconditionError("power norms are unavailable for this operator");
  for (std::size_t k = 1; k <= H; ++k) out.push_back(log_or_neg_inf(c->power_norm(k)));
  return out;
}

double log_power_norm(const OperatorDescriptor& op, std::size_t n) {
  if (n < 1) throw InvalidArgumentError("power norm needs n >= 1");
  if (const auto* c = op.as_custom()) {
    if (!c->power_norm)
      throw PreconditionError("power norms are unavailable for this operator");
    return log_or_neg_inf(c->power_norm(n));
  }
  if (op.as_shift()) return 0.0;
  return log_power_norm_sequence(op, n).back();
}

double power_norm(const OperatorDescriptor& op, std::size_t n) {
  return std::exp(log_power_norm(op, n));
}

// ---------------------------------------------------------------------------
// scaled
// ---------------------------------------------------------------------------

OperatorDescriptor scaled(const OperatorDescriptor& op, double factor) {
  if (!(factor > 0.0) || !std::isfinite(factor))
    throw InvalidArgumentError("scale factor must be positive and finite");
  auto rescale_flags = [&](OperatorDescriptor& d) {
    d.aggregation_ = op.aggregation();
    d.sup_preserving_ = op.sup_preserving();
    d.additive_ = op.additive();
    if (op.lipschitz()) d.lipschitz_ = *op.lipschitz() * factor;
    d.norm_bound_ = op.norm_bound() * factor;
  };
  if (const auto* A = op.as_max_times()) {
    MaxTimesMatrix B = *A;
    for (double& v : B.a) v *= factor;
    OperatorDescriptor d = OperatorDescriptor::max_times(std::move(B));
    rescale_flags(d);
    return d;
  }
  if (const auto* A = op.as_sum()) {
    SumMatrix B = *A;
    for (double& v : B.a) v *= factor;
    OperatorDescriptor d = OperatorDescriptor::sum_matrix(std::move(B));
    rescale_flags(d);
    return d;
  }
  if (const auto* k = op.as_kernel()) {
    MaxKernel K = *k;
    for (auto& row : K.samples)
      for (double& v : row) v *= factor;
    OperatorDescriptor d = OperatorDescriptor::max_kernel(std::move(K));
    rescale_flags(d);
    return d;
  }
  // Shifts and custom operators wrap into a custom kind.
  OperatorDescriptor inner = op;
  CustomOp c;
  c.name = "scaled";
  c.apply = [inner, factor](const ConeVector& x) {
    return scale_unchecked(factor, apply(inner, x));
  };
  if (op.has_power_norm()) {
    c.power_norm = [inner, factor](std::size_t n) {
      return std::exp(static_cast<double>(n) * std::log(factor) + log_power_norm(inner, n));
    };
  }
  OperatorDescriptor d = OperatorDescriptor::custom(
      std::move(c), op.space(), op.aggregation(), op.sup_preserving(), op.additive(),
      op.lipschitz() ? std::optional<double>(*op.lipschitz() * factor) : std::nullopt,
      op.norm_bound() * factor);
  return d;
}

// ---------------------------------------------------------------------------
// canonical seeds
// ---------------------------------------------------------------------------

std::vector<ConeVector> canonical_seeds(const OperatorDescriptor& op,
                                        std::size_t sparse_extent) {
  std::vector<ConeVector> seeds;
  if (const auto* A = op.as_max_times()) {
    for (std::size_t j = 0; j < A->n; ++j)
      seeds.push_back(ConeVector::basis(op.space(), j));
    return seeds;
  }
  if (const auto* A = op.as_sum()) {
    seeds.push_back(ConeVector::ones(op.space()));
    for (std::size_t j = 0; j < A->n; ++j)
      seeds.push_back(ConeVector::basis(op.space(), j));
    return seeds;
  }
  if (const auto* k = op.as_kernel()) {
    seeds.push_back(ConeVector::ones(op.space()));
    const std::size_t N = k->grid.points;
    const std::size_t bumps = std::min<std::size_t>(N, 32);
    for (std::size_t b = 0; b < bumps; ++b) {
      std::size_t idx = (bumps == 1) ? N - 1 : b * (N - 1) / (bumps - 1);
      seeds.push_back(ConeVector::basis(op.space(), idx));
    }
    return seeds;
  }
  if (op.as_shift()) {
    seeds.push_back(ConeVector::basis(op.space(), 0));
    for (std::size_t j = 1; j <= sparse_extent; j *= 2)
      seeds.push_back(ConeVector::basis(op.space(), j));
    return seeds;
  }
  throw PreconditionError("custom operators have no canonical seed set");
}

}  // namespace conespec
