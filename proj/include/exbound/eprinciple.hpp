#pragma once

// The exclusivity-principle bound S * R <= 8 built from sixteen merged
// 8-cliques of global events (u_i, v_sigma(i)).

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "exbound/exgraph.hpp"

namespace exbound::bound {

using Probabilities = std::array<double, 8>;
using Permutation = std::array<std::size_t, 8>;

// sigma(i) = ((-1)^m i + k) mod 8: rotation by k, then a reflection through
// the v0-v4 axis when m = 1.
class MergeMap {
 public:
  MergeMap(int k, int m);
  // Accepts only distance-preserving bijections of Z_8; throws
  // InvariantViolation otherwise.
  static MergeMap from_permutation(const Permutation& sigma);

  int k() const noexcept { return k_; }
  int m() const noexcept { return m_; }
  std::size_t operator()(std::size_t i) const { return sigma_.at(i); }
  const Permutation& sigma() const noexcept { return sigma_; }

  // Global-event vertices (i, sigma(i)) in the 64-vertex product graph.
  std::vector<std::size_t> product_vertices() const;

 private:
  MergeMap(int k, int m, const Permutation& sigma) : k_(k), m_(m), sigma_(sigma) {}

  int k_;
  int m_;
  Permutation sigma_;
};

// W1..W8 are the rotations k = 0..7, W9..W16 the reflected ones.
std::vector<MergeMap> all_merge_maps();

// sum_i pS[i] * pR[sigma(i)]; at most 1 under the exclusivity principle.
double w_value(const MergeMap& map, const Probabilities& p_s, const Probabilities& p_r);

// Uncorrelated first-order propagation of per-event standard errors.
double w_uncertainty(const MergeMap& map, const Probabilities& p_s, const Probabilities& err_s,
                     const Probabilities& p_r, const Probabilities& err_r);

struct WReport {
  std::size_t index;  // 1..16
  Permutation sigma;
  double value;
  double uncertainty;
  bool exceeds_bound;  // value > 1 + 3 * uncertainty
};

std::vector<WReport> w_reports(const Probabilities& p_s, const Probabilities& err_s, const Probabilities& p_r,
                               const Probabilities& err_r);

// CSV with header index,sigma0..sigma7,value,uncertainty.
std::string to_csv(const std::vector<WReport>& reports);

// True iff {(i, sigma(i))} is a clique of the 64-vertex product graph.
bool clique_certificate(const MergeMap& map, const graph::ExclusivityGraph& product);

struct ProductBound {
  double s;
  double r;
  double product;
  double w_sum;  // sum of all sixteen W values; equals 2 * s * r
};

ProductBound product_bound(const Probabilities& p_s, const Probabilities& p_r);

struct Measured {
  double value;
  double error;
};

struct CrossBounds {
  Measured r_bound;  // 8 / S_exp
  Measured s_bound;  // 8 / R_exp
};

CrossBounds cross_bounds(Measured s_exp, Measured r_exp);

struct ReferenceBounds {
  double r_two_copies;          // 3 sqrt(3) / 2
  double r_two_copies_printed;  // value printed alongside it in the literature
  double s_two_copies;          // 8 / sqrt(5)
};

ReferenceBounds reference_bounds();

}  // namespace exbound::bound
