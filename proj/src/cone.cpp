#include "conespec/cone.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace conespec {

namespace {

void check_value(double v) {
  if (!std::isfinite(v)) throw InvalidArgumentError("coordinate is not finite");
  if (v < 0.0) throw InvalidArgumentError("coordinate is negative");
}

void check_same_space(const ConeVector& x, const ConeVector& y) {
  if (!(x.space() == y.space()))
    throw DomainMismatchError("vectors belong to different cone spaces");
}

}  // namespace

// ---------------------------------------------------------------------------
// ConeSpace
// ---------------------------------------------------------------------------

ConeSpace::ConeSpace(IndexDomain domain, NormKind norm, Membership membership)
    : domain_(std::move(domain)), norm_(norm), membership_(membership) {
  if (const auto* f = std::get_if<FiniteSet>(&domain_)) {
    if (f->size < 1) throw InvalidArgumentError("FiniteSet size must be >= 1");
  } else if (const auto* g = std::get_if<UniformGrid>(&domain_)) {
    if (!(g->right > 0.0) || !std::isfinite(g->right))
      throw InvalidArgumentError("UniformGrid right endpoint must be positive");
    if (g->points < 2) throw InvalidArgumentError("UniformGrid needs at least 2 points");
    if (norm_ == NormKind::Euclidean)
      throw InvalidArgumentError("Euclidean norm is not available on grid domains");
  }
  if (membership_ == Membership::UnitLowerBoundOnSupport &&
      !std::holds_alternative<CountableSparse>(domain_))
    throw InvalidArgumentError(
        "UnitLowerBoundOnSupport is only available on sparse domains");
}

ConeSpace ConeSpace::finite(std::size_t n, NormKind norm) {
  return ConeSpace(FiniteSet{n}, norm);
}

ConeSpace ConeSpace::grid(double right, std::size_t points) {
  return ConeSpace(UniformGrid{right, points}, NormKind::Sup);
}

ConeSpace ConeSpace::sparse(NormKind norm, Membership membership) {
  return ConeSpace(CountableSparse{}, norm, membership);
}

bool ConeSpace::is_sparse() const {
  return std::holds_alternative<CountableSparse>(domain_);
}

std::size_t ConeSpace::dense_size() const {
  if (const auto* f = std::get_if<FiniteSet>(&domain_)) return f->size;
  if (const auto* g = std::get_if<UniformGrid>(&domain_)) return g->points;
  throw InvalidArgumentError("sparse domain has no dense size");
}

// ---------------------------------------------------------------------------
// ConeVector
// ---------------------------------------------------------------------------

ConeVector ConeVector::dense(ConeSpace space, std::vector<double> values) {
  if (space.is_sparse())
    throw InvalidArgumentError("dense construction on a sparse domain");
  if (values.size() != space.dense_size())
    throw InvalidArgumentError("coordinate count does not match the domain");
  for (double v : values) check_value(v);
  ConeVector x(std::move(space));
  x.dense_ = std::move(values);
  return x;
}

ConeVector ConeVector::sparse(ConeSpace space, std::vector<SparseEntry> entries) {
  if (!space.is_sparse())
    throw InvalidArgumentError("sparse construction on a dense domain");
  std::sort(entries.begin(), entries.end(),
            [](const SparseEntry& a, const SparseEntry& b) { return a.first < b.first; });
  std::vector<SparseEntry> clean;
  clean.reserve(entries.size());
  for (const auto& [i, v] : entries) {
    check_value(v);
    if (!clean.empty() && clean.back().first == i)
      throw InvalidArgumentError("duplicate sparse index");
    if (v > 0.0) clean.emplace_back(i, v);
  }
  ConeVector x(std::move(space));
  x.sparse_ = std::move(clean);
  return x;
}

ConeVector ConeVector::zero(ConeSpace space) {
  if (space.is_sparse()) return sparse(std::move(space), {});
  std::size_t n = space.dense_size();
  return dense(std::move(space), std::vector<double>(n, 0.0));
}

ConeVector ConeVector::basis(ConeSpace space, std::size_t index, double value) {
  check_value(value);
  if (space.is_sparse()) {
    std::vector<SparseEntry> e;
    if (value > 0.0) e.emplace_back(index, value);
    return sparse(std::move(space), std::move(e));
  }
  if (index >= space.dense_size())
    throw InvalidArgumentError("basis index out of range");
  std::vector<double> v(space.dense_size(), 0.0);
  v[index] = value;
  return dense(std::move(space), std::move(v));
}

ConeVector ConeVector::ones(ConeSpace space) {
  if (space.is_sparse())
    throw InvalidArgumentError("all-ones vector needs a dense domain");
  std::size_t n = space.dense_size();
  return dense(std::move(space), std::vector<double>(n, 1.0));
}

bool ConeVector::is_zero() const {
  if (space_.is_sparse()) return sparse_.empty();
  return std::all_of(dense_.begin(), dense_.end(), [](double v) { return v == 0.0; });
}

std::size_t ConeVector::support_size() const {
  if (space_.is_sparse()) return sparse_.size();
  return static_cast<std::size_t>(
      std::count_if(dense_.begin(), dense_.end(), [](double v) { return v != 0.0; }));
}

double ConeVector::operator[](std::size_t index) const {
  if (!space_.is_sparse()) {
    if (index >= dense_.size()) throw InvalidArgumentError("index out of range");
    return dense_[index];
  }
  auto it = std::lower_bound(
      sparse_.begin(), sparse_.end(), index,
      [](const SparseEntry& e, std::size_t i) { return e.first < i; });
  if (it != sparse_.end() && it->first == index) return it->second;
  return 0.0;
}

const std::vector<double>& ConeVector::dense_values() const {
  if (space_.is_sparse()) throw InvalidArgumentError("sparse vector has no dense storage");
  return dense_;
}

const std::vector<ConeVector::SparseEntry>& ConeVector::sparse_entries() const {
  if (!space_.is_sparse())
    throw InvalidArgumentError("dense vector has no sparse storage");
  return sparse_;
}

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

ConeVector sup_join(const ConeVector& x, const ConeVector& y) {
  check_same_space(x, y);
  ConeVector out(x.space_);
  if (!x.space_.is_sparse()) {
    out.dense_.resize(x.dense_.size());
    for (std::size_t i = 0; i < x.dense_.size(); ++i)
      out.dense_[i] = std::max(x.dense_[i], y.dense_[i]);
    return out;
  }
  const auto& a = x.sparse_;
  const auto& b = y.sparse_;
  out.sparse_.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.sparse_.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.sparse_.push_back(b[j++]);
    } else {
      out.sparse_.emplace_back(a[i].first, std::max(a[i].second, b[j].second));
      ++i;
      ++j;
    }
  }
  return out;
}

ConeVector add(const ConeVector& x, const ConeVector& y) {
  check_same_space(x, y);
  ConeVector out(x.space_);
  if (!x.space_.is_sparse()) {
    out.dense_.resize(x.dense_.size());
    for (std::size_t i = 0; i < x.dense_.size(); ++i)
      out.dense_[i] = x.dense_[i] + y.dense_[i];
    return out;
  }
  const auto& a = x.sparse_;
  const auto& b = y.sparse_;
  out.sparse_.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.sparse_.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.sparse_.push_back(b[j++]);
    } else {
      out.sparse_.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

double norm(const ConeVector& x) {
  if (x.space().norm_kind() == NormKind::Sup) {
    double m = 0.0;
    if (x.space().is_sparse()) {
      for (const auto& [i, v] : x.sparse_entries()) m = std::max(m, v);
    } else {
      for (double v : x.dense_values()) m = std::max(m, v);
    }
    return m;
  }
  double s = 0.0;
  if (x.space().is_sparse()) {
    for (const auto& [i, v] : x.sparse_entries()) s += v * v;
  } else {
    for (double v : x.dense_values()) s += v * v;
  }
  return std::sqrt(s);
}

ConeVector scale_unchecked(double c, const ConeVector& x) {
  if (!std::isfinite(c) || c < 0.0)
    throw InvalidArgumentError("scale factor must be a finite nonnegative real");
  ConeVector out(x.space_);
  if (!x.space_.is_sparse()) {
    out.dense_.resize(x.dense_.size());
    for (std::size_t i = 0; i < x.dense_.size(); ++i) out.dense_[i] = c * x.dense_[i];
    return out;
  }
  if (c == 0.0) return out;
  out.sparse_.reserve(x.sparse_.size());
  for (const auto& [i, v] : x.sparse_) {
    double w = c * v;
    if (w > 0.0) out.sparse_.emplace_back(i, w);
  }
  return out;
}

ConeVector scale(double c, const ConeVector& x) {
  if (!std::isfinite(c) || c < 0.0)
    throw InvalidArgumentError("scale factor must be a finite nonnegative real");
  if (x.space().membership() == Membership::UnitLowerBoundOnSupport && c != 0.0) {
    double min_nz = std::numeric_limits<double>::infinity();
    for (const auto& [i, v] : x.sparse_entries()) min_nz = std::min(min_nz, v);
    if (std::isfinite(min_nz) && c * min_nz < 1.0)
      throw ConeViolationError("scaling leaves the unit-lower-bound cone");
  }
  return scale_unchecked(c, x);
}

bool in_cone(const ConeVector& x) {
  if (x.space().membership() == Membership::UnitLowerBoundOnSupport) {
    for (const auto& [i, v] : x.sparse_entries())
      if (v < 1.0) return false;
  }
  return true;
}

double diff_norm(const ConeVector& x, const ConeVector& y) {
  check_same_space(x, y);
  const bool sup = x.space().norm_kind() == NormKind::Sup;
  double acc = 0.0;
  auto feed = [&](double d) {
    d = std::abs(d);
    if (sup)
      acc = std::max(acc, d);
    else
      acc += d * d;
  };
  if (!x.space().is_sparse()) {
    const auto& a = x.dense_values();
    const auto& b = y.dense_values();
    for (std::size_t i = 0; i < a.size(); ++i) feed(a[i] - b[i]);
  } else {
    const auto& a = x.sparse_entries();
    const auto& b = y.sparse_entries();
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        feed(a[i++].second);
      } else if (i == a.size() || b[j].first < a[i].first) {
        feed(-b[j++].second);
      } else {
        feed(a[i].second - b[j].second);
        ++i;
        ++j;
      }
    }
  }
  return sup ? acc : std::sqrt(acc);
}

bool approx_equal(const ConeVector& x, const ConeVector& y, double tol) {
  if (!(x.space() == y.space())) return false;
  double scale_ref = 0.0;
  if (x.space().is_sparse()) {
    for (const auto& [i, v] : x.sparse_entries()) scale_ref = std::max(scale_ref, v);
    for (const auto& [i, v] : y.sparse_entries()) scale_ref = std::max(scale_ref, v);
  } else {
    for (double v : x.dense_values()) scale_ref = std::max(scale_ref, v);
    for (double v : y.dense_values()) scale_ref = std::max(scale_ref, v);
  }
  // Sup distance of the coordinatewise difference, independent of norm kind.
  double d = 0.0;
  if (x.space().is_sparse()) {
    const auto& a = x.sparse_entries();
    const auto& b = y.sparse_entries();
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first))
        d = std::max(d, a[i++].second);
      else if (i == a.size() || b[j].first < a[i].first)
        d = std::max(d, b[j++].second);
      else {
        d = std::max(d, std::abs(a[i].second - b[j].second));
        ++i;
        ++j;
      }
    }
  } else {
    const auto& a = x.dense_values();
    const auto& b = y.dense_values();
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  }
  return d <= tol * (1.0 + scale_ref);
}

// ---------------------------------------------------------------------------
// Ambient lattice helpers
// ---------------------------------------------------------------------------

double sup_norm(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double euclidean_norm(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double ambient_norm(std::span<const double> v, NormKind kind) {
  return kind == NormKind::Sup ? sup_norm(v) : euclidean_norm(v);
}

std::vector<double> pointwise_max(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw InvalidArgumentError("length mismatch");
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

}  // namespace conespec
