#include "exbound/numerics.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "exbound/error.hpp"

namespace exbound::numerics {

namespace {

void require_same_dim(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorKind::DimensionMismatch,
                "dims " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
  }
}

void require_unit(const StateVector& v, const char* what) {
  if (!v.is_unit()) {
    throw Error(ErrorKind::NotNormalized,
                std::string(what) + " has norm " + std::to_string(v.norm()));
  }
}

bool all_finite(const std::vector<Complex>& values) {
  for (const auto& z : values) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

}  // namespace

StateVector::StateVector(std::vector<Complex> amps) : amps_(std::move(amps)) {
  if (amps_.empty()) throw Error(ErrorKind::DimensionMismatch, "state vector of dimension 0");
  if (!all_finite(amps_)) throw Error(ErrorKind::NotNormalized, "non-finite amplitude");
}

StateVector::StateVector(std::initializer_list<Complex> amps)
    : StateVector(std::vector<Complex>(amps)) {}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw Error(ErrorKind::IndexOutOfRange, "basis index " + std::to_string(index));
  std::vector<Complex> amps(dim);
  amps[index] = 1.0;
  return StateVector(std::move(amps));
}

double StateVector::norm() const noexcept {
  double sum = 0.0;
  for (const auto& z : amps_) sum += std::norm(z);
  return std::sqrt(sum);
}

StateVector StateVector::normalized() const {
  const double n = norm();
  if (n == 0.0) throw Error(ErrorKind::NotNormalized, "cannot normalize the zero vector");
  std::vector<Complex> out(amps_);
  for (auto& z : out) z /= n;
  return StateVector(std::move(out));
}

bool StateVector::is_unit(double tol) const noexcept { return std::abs(norm() - 1.0) <= tol; }

HermitianOperator::HermitianOperator(std::size_t dim, std::vector<Complex> entries, double tol)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim_ == 0 || entries_.size() != dim_ * dim_) {
    throw Error(ErrorKind::DimensionMismatch, "operator needs dim*dim entries");
  }
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i; j < dim_; ++j) {
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) {
        throw Error(ErrorKind::NotHermitian,
                    "entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
}

HermitianOperator HermitianOperator::identity(std::size_t dim) {
  std::vector<Complex> entries(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) entries[i * dim + i] = 1.0;
  return HermitianOperator(dim, std::move(entries));
}

HermitianOperator HermitianOperator::projector_sum(std::span<const StateVector> vectors) {
  if (vectors.empty()) throw Error(ErrorKind::DimensionMismatch, "empty projector sum");
  const std::size_t dim = vectors.front().dim();
  std::vector<Complex> entries(dim * dim);
  for (const auto& v : vectors) {
    if (v.dim() != dim) throw Error(ErrorKind::DimensionMismatch, "mixed dimensions in projector sum");
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) entries[i * dim + j] += v[i] * std::conj(v[j]);
    }
  }
  return HermitianOperator(dim, std::move(entries));
}

StateVector HermitianOperator::apply(const StateVector& v) const {
  if (v.dim() != dim_) throw Error(ErrorKind::DimensionMismatch, "operator/vector dims differ");
  std::vector<Complex> out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) out[i] += (*this)(i, j) * v[j];
  }
  return StateVector(std::move(out));
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  require_same_dim(a, b);
  Complex sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) sum += std::conj(a[i]) * b[i];
  return sum;
}

double probability(const StateVector& state, const StateVector& event) {
  require_same_dim(state, event);
  require_unit(state, "state");
  require_unit(event, "event vector");
  return std::norm(inner_product(event, state));
}

double fidelity(const StateVector& a, const StateVector& b) { return std::norm(inner_product(a, b)); }

StateVector tensor(const StateVector& a, const StateVector& b) {
  std::vector<Complex> out;
  out.reserve(a.dim() * b.dim());
  for (const auto& x : a.amplitudes()) {
    for (const auto& y : b.amplitudes()) out.push_back(x * y);
  }
  return StateVector(std::move(out));
}

Eigenpair max_eigenpair(const HermitianOperator& op) {
  const auto n = static_cast<Eigen::Index>(op.dim());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = op(i, j);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::NotHermitian, "eigen solver did not converge");
  }
  // Eigenvalues come back in ascending order.
  const Eigen::VectorXcd top = solver.eigenvectors().col(n - 1);
  std::vector<Complex> amps(top.data(), top.data() + n);
  return {solver.eigenvalues()(n - 1), StateVector(std::move(amps)).normalized()};
}

std::vector<StateVector> orthonormal_complement(std::span<const StateVector> vectors) {
  if (vectors.empty()) throw Error(ErrorKind::DimensionMismatch, "no input vectors");
  const std::size_t dim = vectors.front().dim();
  if (vectors.size() >= dim) {
    throw Error(ErrorKind::DimensionMismatch, "input already spans the space");
  }
  for (std::size_t a = 0; a < vectors.size(); ++a) {
    if (vectors[a].dim() != dim) throw Error(ErrorKind::DimensionMismatch, "mixed dimensions");
    require_unit(vectors[a], "input vector");
    for (std::size_t b = a + 1; b < vectors.size(); ++b) {
      if (std::abs(inner_product(vectors[a], vectors[b])) > kOrthogonalityTolerance) {
        throw Error(ErrorKind::NotOrthogonal,
                    "inputs " + std::to_string(a) + " and " + std::to_string(b));
      }
    }
  }

  std::vector<StateVector> span(vectors.begin(), vectors.end());
  std::vector<StateVector> added;
  // A candidate whose residual is below this is treated as inside the span.
  constexpr double kRankTolerance = 1e-8;
  for (std::size_t k = 0; k < dim && span.size() < dim; ++k) {
    std::vector<Complex> r(dim);
    r[k] = 1.0;
    // Two passes of modified Gram-Schmidt keep the result orthogonal to ~1e-16.
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : span) {
        Complex c = 0.0;
        for (std::size_t i = 0; i < dim; ++i) c += std::conj(b[i]) * r[i];
        for (std::size_t i = 0; i < dim; ++i) r[i] -= c * b[i];
      }
    }
    double n = 0.0;
    for (const auto& z : r) n += std::norm(z);
    n = std::sqrt(n);
    if (n < kRankTolerance) continue;
    for (auto& z : r) z /= n;
    StateVector next(std::move(r));
    span.push_back(next);
    added.push_back(std::move(next));
  }
  return added;
}

double gram_deviation(std::span<const StateVector> vectors) {
  double worst = 0.0;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t j = 0; j < vectors.size(); ++j) {
      const Complex expected = (i == j) ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(inner_product(vectors[i], vectors[j]) - expected));
    }
  }
  return worst;
}

}  // namespace exbound::numerics
