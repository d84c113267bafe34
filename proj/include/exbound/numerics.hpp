#pragma once

// Small dense complex linear algebra (dim <= 8, plus 20 for global events).
// Everything here is a pure function over immutable values.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace exbound::numerics {

using Complex = std::complex<double>;

inline constexpr double kNormTolerance = 1e-9;
inline constexpr double kOrthogonalityTolerance = 1e-9;
// Used only when checking vectors that were printed with 3 decimals.
inline constexpr double kRoundedDataTolerance = 1e-2;

class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(std::vector<Complex> amps);
  StateVector(std::initializer_list<Complex> amps);

  // |index> in dimension dim.
  static StateVector basis(std::size_t dim, std::size_t index);

  std::size_t dim() const noexcept { return amps_.size(); }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }
  std::span<const Complex> amplitudes() const noexcept { return amps_; }

  double norm() const noexcept;
  // Throws NotNormalized for the zero vector.
  StateVector normalized() const;
  bool is_unit(double tol = kNormTolerance) const noexcept;

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  std::vector<Complex> amps_;
};

class HermitianOperator {
 public:
  // Row-major dim x dim entries; throws NotHermitian / DimensionMismatch.
  HermitianOperator(std::size_t dim, std::vector<Complex> entries, double tol = 1e-12);

  static HermitianOperator identity(std::size_t dim);
  // Sum of rank-1 projectors |v><v|.
  static HermitianOperator projector_sum(std::span<const StateVector> vectors);

  std::size_t dim() const noexcept { return dim_; }
  const Complex& operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }

  StateVector apply(const StateVector& v) const;

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

struct Eigenpair {
  double value;
  StateVector vector;
};

// <a|b>, a conjugated.
Complex inner_product(const StateVector& a, const StateVector& b);

// Born rule |<event|state>|^2. Both arguments must be unit within kNormTolerance.
double probability(const StateVector& state, const StateVector& event);

// |<a|b>|^2.
double fidelity(const StateVector& a, const StateVector& b);

StateVector tensor(const StateVector& a, const StateVector& b);

Eigenpair max_eigenpair(const HermitianOperator& op);

// Completes pairwise-orthogonal unit vectors to an orthonormal basis by
// Gram-Schmidt over |0>, |1>, ... in index order, skipping directions already
// in the span.
std::vector<StateVector> orthonormal_complement(std::span<const StateVector> vectors);

// max |G_ij - delta_ij| over the Gram matrix.
double gram_deviation(std::span<const StateVector> vectors);

}  // namespace exbound::numerics
