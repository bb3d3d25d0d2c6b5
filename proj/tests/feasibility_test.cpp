#include <gtest/gtest.h>

#include <algorithm>

#include "ndkt/feasibility.hpp"
#include "ndkt/search.hpp"

using namespace ndkt;

namespace {

using K = Provenance::Kind;

void expect_verdict(const FeasibilityVerdict& v, Answer a, K k, const std::string& rule) {
  EXPECT_EQ(v.answer, a) << v.citation;
  EXPECT_EQ(v.provenance.kind, k) << v.citation;
  EXPECT_EQ(v.provenance.rule, rule);
  EXPECT_FALSE(v.citation.empty());
}

FeasibilityVerdict closed(const char* s) { return closed_tour_feasible(Shape::parse(s)); }

}  // namespace

TEST(ClosedFeasible, PlaneBoards) {
  expect_verdict(closed("3x3"), Answer::impossible, K::proven, "schwenk-a");
  expect_verdict(closed("4x7"), Answer::impossible, K::proven, "schwenk-b");
  expect_verdict(closed("2x8"), Answer::impossible, K::proven, "schwenk-b");
  expect_verdict(closed("3x4"), Answer::impossible, K::proven, "schwenk-c");
  expect_verdict(closed("8x3"), Answer::impossible, K::proven, "schwenk-c");
  expect_verdict(closed("3x10"), Answer::possible, K::proven, "schwenk");
  expect_verdict(closed("6x6"), Answer::possible, K::proven, "schwenk");
  EXPECT_EQ(closed("6x6").corroborated_by, "fig1b");
}

TEST(ClosedFeasible, SolidBoards) {
  expect_verdict(closed("3x3x5"), Answer::impossible, K::proven, "demaio-mathew-a");
  expect_verdict(closed("2x2x9"), Answer::impossible, K::proven, "demaio-mathew-b");
  expect_verdict(closed("2x3x3"), Answer::impossible, K::proven, "demaio-mathew-c");
  expect_verdict(closed("3x4x2"), Answer::possible, K::proven, "demaio-mathew");
  EXPECT_EQ(closed("4x4x4").corroborated_by, "fig2");
}

TEST(ClosedFeasible, HigherDimensions) {
  const auto fig6 = closed("3x4x2x2");
  expect_verdict(fig6, Answer::possible, K::conjectured, "conjecture-1");
  EXPECT_EQ(fig6.corroborated_by, "fig6");
  expect_verdict(closed("2x2x2x5"), Answer::impossible, K::conjectured, "conjecture-1-b");
  expect_verdict(closed("2x2x3x3"), Answer::impossible, K::conjectured, "conjecture-1-c");
  expect_verdict(closed("3x3x3x5"), Answer::impossible, K::proven, "parity-odd-cells");
  expect_verdict(closed("2x2x2x2x7"), Answer::impossible, K::conjectured, "conjecture-2-b");
  expect_verdict(closed("2x2x2x3x3"), Answer::impossible, K::conjectured, "conjecture-2-c");
  EXPECT_EQ(closed("3x4x2x2x2").corroborated_by, "fig8");
  expect_verdict(closed("2x2x2x2x2x5"), Answer::impossible, K::conjectured, "conjecture-3-b");
  expect_verdict(closed("2x2x2x2x3x3x2"), Answer::impossible, K::conjectured, "conjecture-3-c");
  expect_verdict(closed("2x2x2x2x3x4"), Answer::possible, K::conjectured, "conjecture-3");
}

TEST(ClosedFeasible, UnitExtentsAreStripped) {
  EXPECT_EQ(closed("3x1x4x1").provenance.rule, "schwenk-c");
  EXPECT_EQ(closed("1x6").provenance.rule, "schwenk-b");
  EXPECT_EQ(closed("1x5").provenance.rule, "schwenk-a");
  EXPECT_EQ(closed("1x1").provenance.rule, "schwenk-a");
  EXPECT_EQ(closed("3x4x2x1").provenance.rule, "demaio-mathew");
}

TEST(ClosedFeasible, PermutationInvariant) {
  for (const auto& shape : shape_family(4, 2, 5)) {
    std::vector<int> e(shape.extents().begin(), shape.extents().end());
    const auto base = closed_tour_feasible(shape);
    do {
      const auto v = closed_tour_feasible(Shape(e));
      ASSERT_EQ(v.answer, base.answer);
      ASSERT_EQ(v.provenance.rule, base.provenance.rule);
    } while (std::next_permutation(e.begin(), e.end()));
  }
}

TEST(ClosedFeasible, OddCellCountIsAlwaysProvenImpossible) {
  for (std::size_t d = 2; d <= 5; ++d)
    for (const auto& shape : shape_family(d, 1, 7)) {
      if (shape.cell_count() % 2 == 0) continue;
      const auto v = closed_tour_feasible(shape);
      ASSERT_EQ(v.answer, Answer::impossible) << shape.to_string();
      ASSERT_EQ(v.provenance.kind, K::proven) << shape.to_string();
    }
}

TEST(MagicFeasible, Cases) {
  expect_verdict(magic_tour_feasible(5, 4), Answer::impossible, K::proven, "odd-order-magic");
  expect_verdict(magic_tour_feasible(3, 3), Answer::impossible, K::proven, "odd-order-magic");
  expect_verdict(magic_tour_feasible(6, 2), Answer::impossible, K::proven, "jelliss-singly-even");
  expect_verdict(magic_tour_feasible(4, 3), Answer::possible, K::established_by_example, "fig2");
  expect_verdict(magic_tour_feasible(4, 4), Answer::possible, K::established_by_example, "fig9");
  expect_verdict(magic_tour_feasible(4, 5), Answer::possible, K::established_by_example, "fig10");
  expect_verdict(magic_tour_feasible(2, 3), Answer::impossible, K::proven, "no-knight-moves");
  expect_verdict(magic_tour_feasible(1, 4), Answer::possible, K::proven, "single-cell");
  EXPECT_EQ(magic_tour_feasible(8, 2).answer, Answer::unknown);
  EXPECT_EQ(magic_tour_feasible(8, 2).provenance.kind, K::open);
  EXPECT_EQ(magic_tour_feasible(4, 6).answer, Answer::unknown);
  EXPECT_THROW(magic_tour_feasible(0, 3), InputError);
  EXPECT_THROW(magic_tour_feasible(4, 1), InputError);
}

TEST(KeyValues, Verdict) {
  EXPECT_EQ(to_key_values(closed("3x4x2x2")), "answer=possible provenance=conjectured(conjecture-1) corroborated_by=fig6");
  EXPECT_EQ(to_key_values(closed("3x3")), "answer=impossible provenance=proven(schwenk-a)");
}

TEST(ShapeFamily, Enumeration) {
  const auto fam = shape_family(4, 2, 4);
  EXPECT_EQ(fam.size(), 15u);  // multisets of size 4 from {2,3,4}
  EXPECT_EQ(fam.front(), Shape({2, 2, 2, 2}));
  EXPECT_EQ(fam.back(), Shape({4, 4, 4, 4}));
}

TEST(ConjectureAudit, SmallFourDimensionalBoards) {
  std::vector<Shape> family;
  for (const auto& s : shape_family(4, 2, 4))
    if (s.cell_count() <= 48) family.push_back(s);
  ASSERT_EQ(family.size(), 5u);
  const auto checks = verify_conjecture(family, 48, [](const Shape& s) -> std::optional<bool> {
    SearchConfig config;
    config.mode = Mode::closed;
    config.exhaustive = true;
    config.budget.wall = std::chrono::minutes(2);
    const auto r = find_tour(s, config);
    if (r.status == Status::budget_exceeded) return std::nullopt;
    return r.status == Status::found;
  });
  ASSERT_EQ(checks.size(), 5u);
  for (const auto& c : checks) {
    EXPECT_TRUE(c.observed == Observed::exists || c.observed == Observed::not_exists) << c.shape.to_string();
    EXPECT_FALSE(c.disagrees()) << c.shape.to_string();
  }
  EXPECT_TRUE(disagreements(checks).empty());
  EXPECT_EQ(checks.back().shape, Shape({2, 2, 3, 4}));
  EXPECT_EQ(checks.back().observed, Observed::exists);
}

TEST(ConjectureAudit, OverBudgetShapesAreFlagged) {
  const auto checks = verify_conjecture({Shape({3, 4, 2, 2}), Shape({4, 4, 4, 4})}, 100,
                                        [](const Shape&) -> std::optional<bool> { return true; });
  EXPECT_EQ(checks[0].observed, Observed::exists);
  EXPECT_EQ(checks[1].observed, Observed::skipped_over_budget);
  EXPECT_FALSE(checks[1].disagrees());
}

TEST(ConjectureAudit, ContradictionIsReported) {
  const auto checks = verify_conjecture({Shape({2, 2, 3, 3})}, 100,
                                        [](const Shape&) -> std::optional<bool> { return true; });
  EXPECT_TRUE(checks[0].disagrees());
  EXPECT_EQ(disagreements(checks).size(), 1u);
}
