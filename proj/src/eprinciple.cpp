#include "exbound/eprinciple.hpp"

#include <cmath>
#include <fmt/format.h>
#include <sstream>

#include "exbound/error.hpp"

namespace exbound::bound {

namespace {

constexpr std::size_t kEvents = 8;

void require_probabilities(const Probabilities& p, const char* name) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!(p[i] >= 0.0 && p[i] <= 1.0)) {
      throw Error(ErrorKind::ProbabilityOutOfRange, fmt::format("{}[{}] = {}", name, i, p[i]));
    }
  }
}

std::size_t mod8(long long x) { return static_cast<std::size_t>(((x % 8) + 8) % 8); }

}  // namespace

MergeMap::MergeMap(int k, int m) : k_(k), m_(m), sigma_{} {
  if (k < 0 || k > 7) throw Error(ErrorKind::InvariantViolation, fmt::format("rotation k = {}", k));
  if (m != 0 && m != 1) throw Error(ErrorKind::InvariantViolation, fmt::format("reflection m = {}", m));
  for (std::size_t i = 0; i < kEvents; ++i) {
    const long long signed_i = m == 0 ? static_cast<long long>(i) : -static_cast<long long>(i);
    sigma_[i] = mod8(signed_i + k);
  }
}

MergeMap MergeMap::from_permutation(const Permutation& sigma) {
  std::array<bool, kEvents> seen{};
  for (auto s : sigma) {
    if (s >= kEvents || seen[s]) throw Error(ErrorKind::InvariantViolation, "merge map is not a bijection");
    seen[s] = true;
  }
  for (std::size_t i = 0; i < kEvents; ++i) {
    for (std::size_t j = 0; j < kEvents; ++j) {
      if (graph::circular_distance(sigma[i], sigma[j], kEvents) != graph::circular_distance(i, j, kEvents)) {
        throw Error(ErrorKind::InvariantViolation,
                    fmt::format("merge map changes the distance of ({}, {})", i, j));
      }
    }
  }
  // Distance-preserving bijections of the 8-cycle are the dihedral maps.
  const int k = static_cast<int>(sigma[0]);
  const int m = sigma[1] == mod8(k + 1) ? 0 : 1;
  return MergeMap(k, m, sigma);
}

std::vector<std::size_t> MergeMap::product_vertices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < kEvents; ++i) out.push_back(i * kEvents + sigma_[i]);
  return out;
}

std::vector<MergeMap> all_merge_maps() {
  std::vector<MergeMap> maps;
  for (int m = 0; m < 2; ++m) {
    for (int k = 0; k < 8; ++k) maps.emplace_back(k, m);
  }
  return maps;
}

double w_value(const MergeMap& map, const Probabilities& p_s, const Probabilities& p_r) {
  require_probabilities(p_s, "pS");
  require_probabilities(p_r, "pR");
  double sum = 0.0;
  for (std::size_t i = 0; i < kEvents; ++i) sum += p_s[i] * p_r[map(i)];
  return sum;
}

double w_uncertainty(const MergeMap& map, const Probabilities& p_s, const Probabilities& err_s,
                     const Probabilities& p_r, const Probabilities& err_r) {
  double var = 0.0;
  for (std::size_t i = 0; i < kEvents; ++i) {
    const double from_s = p_r[map(i)] * err_s[i];
    const double from_r = p_s[i] * err_r[map(i)];
    var += from_s * from_s + from_r * from_r;
  }
  return std::sqrt(var);
}

std::vector<WReport> w_reports(const Probabilities& p_s, const Probabilities& err_s, const Probabilities& p_r,
                               const Probabilities& err_r) {
  std::vector<WReport> out;
  std::size_t index = 1;
  for (const auto& map : all_merge_maps()) {
    const double value = w_value(map, p_s, p_r);
    const double unc = w_uncertainty(map, p_s, err_s, p_r, err_r);
    out.push_back({index++, map.sigma(), value, unc, value > 1.0 + 3.0 * unc});
  }
  return out;
}

std::string to_csv(const std::vector<WReport>& reports) {
  std::ostringstream os;
  os << "index";
  for (std::size_t i = 0; i < kEvents; ++i) os << ",sigma" << i;
  os << ",value,uncertainty\n";
  for (const auto& r : reports) {
    os << r.index;
    for (auto s : r.sigma) os << ',' << s;
    os << fmt::format(",{},{}\n", r.value, r.uncertainty);
  }
  return os.str();
}

bool clique_certificate(const MergeMap& map, const graph::ExclusivityGraph& product) {
  if (product.n() != kEvents * kEvents) {
    throw Error(ErrorKind::GraphShapeMismatch, fmt::format("product graph has {} vertices", product.n()));
  }
  return graph::is_clique(product, map.product_vertices());
}

ProductBound product_bound(const Probabilities& p_s, const Probabilities& p_r) {
  ProductBound out{0.0, 0.0, 0.0, 0.0};
  for (const auto& map : all_merge_maps()) out.w_sum += w_value(map, p_s, p_r);
  for (std::size_t i = 0; i < kEvents; ++i) {
    out.s += p_s[i];
    out.r += p_r[i];
  }
  out.product = out.s * out.r;
  // Each R-event is the partner of each S-event in exactly two of the maps.
  if (std::abs(out.w_sum - 2.0 * out.product) > 1e-9) {
    throw Error(ErrorKind::InvariantViolation, fmt::format("sum of W = {} but 2SR = {}", out.w_sum, 2 * out.product));
  }
  return out;
}

CrossBounds cross_bounds(Measured s_exp, Measured r_exp) {
  if (!(s_exp.value > 0.0) || !(r_exp.value > 0.0)) {
    throw Error(ErrorKind::NonPositiveInput, fmt::format("S = {}, R = {}", s_exp.value, r_exp.value));
  }
  auto invert = [](Measured x) {
    return Measured{8.0 / x.value, 8.0 * x.error / (x.value * x.value)};
  };
  return {invert(s_exp), invert(r_exp)};
}

ReferenceBounds reference_bounds() {
  return {3.0 * std::sqrt(3.0) / 2.0, 2.5298, 8.0 / std::sqrt(5.0)};
}

}  // namespace exbound::bound
