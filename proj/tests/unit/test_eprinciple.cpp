#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "exbound/eprinciple.hpp"
#include "exbound/error.hpp"
#include "exbound/published.hpp"

using namespace exbound;
using namespace exbound::bound;

namespace {

const double kSqrt2 = std::sqrt(2.0);

Probabilities filled(double x) {
  Probabilities p;
  p.fill(x);
  return p;
}

Probabilities published_values(const std::array<published::Value, 8>& rows, bool errors) {
  Probabilities p;
  for (std::size_t i = 0; i < 8; ++i) p[i] = errors ? rows[i].error : rows[i].value;
  return p;
}

const graph::ExclusivityGraph& product_graph() {
  static const auto g = graph::disjunctive_product(graph::circulant({8, {3, 4}}), graph::circulant({8, {1, 2}}));
  return g;
}

}  // namespace

TEST(MergeMap, RotationsAndReflections) {
  const MergeMap rot(3, 0);
  const MergeMap refl(3, 1);
  for (std::size_t i = 0; i < 8; ++i) {
    EXPECT_EQ(rot(i), (i + 3) % 8);
    EXPECT_EQ(refl(i), (8 - i + 3) % 8);
  }
  EXPECT_THROW(MergeMap(8, 0), Error);
  EXPECT_THROW(MergeMap(0, 2), Error);
}

TEST(MergeMap, AllSixteenAreDistinctDistancePreservingMaps) {
  const auto maps = all_merge_maps();
  ASSERT_EQ(maps.size(), 16u);
  std::set<Permutation> seen;
  for (std::size_t w = 0; w < 16; ++w) {
    EXPECT_EQ(maps[w].k(), static_cast<int>(w % 8));
    EXPECT_EQ(maps[w].m(), static_cast<int>(w / 8));
    seen.insert(maps[w].sigma());
    for (std::size_t i = 0; i < 8; ++i) {
      for (std::size_t j = 0; j < 8; ++j) {
        EXPECT_EQ(graph::circular_distance(maps[w](i), maps[w](j), 8), graph::circular_distance(i, j, 8));
      }
    }
  }
  EXPECT_EQ(seen.size(), 16u);
}

TEST(MergeMap, FromPermutationValidates) {
  const auto m = MergeMap::from_permutation({5, 4, 3, 2, 1, 0, 7, 6});
  EXPECT_EQ(m.k(), 5);
  EXPECT_EQ(m.m(), 1);
  EXPECT_THROW(MergeMap::from_permutation({0, 0, 1, 2, 3, 4, 5, 6}), Error);
  EXPECT_THROW(MergeMap::from_permutation({1, 0, 2, 3, 4, 5, 6, 7}), Error);
}

TEST(MergeMap, ImagesAreCliquesOfTheProduct) {
  for (const auto& m : all_merge_maps()) {
    const auto vertices = m.product_vertices();
    EXPECT_TRUE(graph::is_clique(product_graph(), vertices));
    EXPECT_TRUE(clique_certificate(m, product_graph()));
  }
  // A map that is not distance preserving does not give a clique.
  std::vector<std::size_t> twisted{0 * 8 + 1, 1 * 8 + 0, 2 * 8 + 2, 3 * 8 + 3, 4 * 8 + 4, 5 * 8 + 5, 6 * 8 + 6,
                                   7 * 8 + 7};
  EXPECT_FALSE(graph::is_clique(product_graph(), twisted));
  EXPECT_THROW(clique_certificate(all_merge_maps()[0], graph::circulant({8, {1}})), Error);
}

TEST(WValue, IdealValuesSaturateTheBound) {
  const auto ps = filled((2 + kSqrt2) / 8);
  const auto pr = filled(1 - 1 / kSqrt2);
  EXPECT_NEAR(ps[0] * pr[0], 1.0 / 8, 1e-16);
  for (const auto& m : all_merge_maps()) EXPECT_NEAR(w_value(m, ps, pr), 1.0, 1e-12);
}

TEST(WValue, RejectsProbabilitiesOutsideUnitInterval) {
  auto ps = filled(0.4);
  ps[2] = 1.2;
  try {
    w_value(MergeMap(0, 0), ps, filled(0.3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ProbabilityOutOfRange);
  }
}

TEST(WValue, PublishedTablesGiveReportedW1) {
  const auto ps = published_values(published::kChshProbabilities, false);
  const auto pr = published_values(published::kNcProbabilities, false);
  const double w1 = w_value(MergeMap(0, 0), ps, pr);
  // Inputs are printed to 4 places: each term moves by at most about
  // 0.5e-4 * (p_s + p_r), about 3.6e-4 over eight terms, plus half the
  // last printed digit of W.
  EXPECT_NEAR(w1, published::kW[0].value, 3.6e-4 + 0.5e-3);
}

TEST(WUncertainty, MatchesNumericalPropagation) {
  const auto ps = published_values(published::kChshProbabilities, false);
  const auto es = published_values(published::kChshProbabilities, true);
  const auto pr = published_values(published::kNcProbabilities, false);
  const auto er = published_values(published::kNcProbabilities, true);
  for (const auto& m : all_merge_maps()) {
    double var = 0.0;
    const double h = 1e-6;
    for (std::size_t i = 0; i < 8; ++i) {
      auto up = ps;
      up[i] += h;
      const double ds = (w_value(m, up, pr) - w_value(m, ps, pr)) / h;
      auto ur = pr;
      ur[i] += h;
      const double dr = (w_value(m, ps, ur) - w_value(m, ps, pr)) / h;
      var += ds * ds * es[i] * es[i] + dr * dr * er[i] * er[i];
    }
    EXPECT_NEAR(w_uncertainty(m, ps, es, pr, er), std::sqrt(var), 1e-8);
  }
}

TEST(WReports, FlagOnlyValuesBeyondThreeSigma) {
  auto ps = filled(0.45);
  const auto pr = filled(0.30);
  const auto err = filled(0.001);
  const auto reports = w_reports(ps, err, pr, err);
  ASSERT_EQ(reports.size(), 16u);
  for (const auto& r : reports) {
    EXPECT_NEAR(r.value, 8 * 0.45 * 0.30, 1e-14);
    EXPECT_TRUE(r.exceeds_bound);
  }
  ps = filled(0.4);
  for (const auto& r : w_reports(ps, err, pr, err)) EXPECT_FALSE(r.exceeds_bound);
}

TEST(WReports, CsvLayout) {
  const auto reports = w_reports(filled(0.5), filled(0.0), filled(0.25), filled(0.0));
  std::istringstream csv(to_csv(reports));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "index,sigma0,sigma1,sigma2,sigma3,sigma4,sigma5,sigma6,sigma7,value,uncertainty");
  std::getline(csv, line);
  EXPECT_EQ(line, "1,0,1,2,3,4,5,6,7,1,0");
  int rows = 1;
  while (std::getline(csv, line)) ++rows;
  EXPECT_EQ(rows, 16);
}

TEST(ProductBound, SumOfWIsTwiceTheProduct) {
  const auto ps = published_values(published::kChshProbabilities, false);
  const auto pr = published_values(published::kNcProbabilities, false);
  const auto pb = product_bound(ps, pr);
  double s = 0, r = 0;
  for (std::size_t i = 0; i < 8; ++i) {
    s += ps[i];
    r += pr[i];
  }
  EXPECT_NEAR(pb.s, s, 1e-14);
  EXPECT_NEAR(pb.r, r, 1e-14);
  EXPECT_NEAR(pb.w_sum, 2 * s * r, 1e-12);
  const auto ideal = product_bound(filled((2 + kSqrt2) / 8), filled(1 - 1 / kSqrt2));
  EXPECT_NEAR(ideal.product, 8.0, 1e-8);
}

TEST(CrossBounds, ReproducePrintedValues) {
  const auto xb = cross_bounds({published::kS.value, published::kS.error}, {published::kR.value, published::kR.error});
  EXPECT_NEAR(xb.r_bound.value, 8 / 3.413, 1e-15);
  EXPECT_NEAR(xb.r_bound.error, 8 * 0.013 / (3.413 * 3.413), 1e-15);
  EXPECT_NEAR(xb.s_bound.value, 8 / 2.335, 1e-15);
  EXPECT_NEAR(xb.s_bound.error, 8 * 0.011 / (2.335 * 2.335), 1e-15);
  EXPECT_EQ(std::round(xb.r_bound.value * 1000) / 1000, published::kRBound.value);
  EXPECT_EQ(std::round(xb.r_bound.error * 1000) / 1000, published::kRBound.error);
  EXPECT_EQ(std::round(xb.s_bound.value * 1000) / 1000, published::kSBound.value);
  EXPECT_EQ(std::round(xb.s_bound.error * 1000) / 1000, published::kSBound.error);
}

TEST(CrossBounds, RejectsNonPositiveInput) {
  try {
    cross_bounds({0.0, 0.1}, {2.0, 0.1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonPositiveInput);
  }
}

TEST(ReferenceBounds, Values) {
  const auto ref = reference_bounds();
  EXPECT_NEAR(ref.r_two_copies, 3 * std::sqrt(3.0) / 2, 1e-15);
  EXPECT_NEAR(ref.s_two_copies, 8 / std::sqrt(5.0), 1e-15);
  EXPECT_EQ(ref.r_two_copies_printed, 2.5298);
}
