#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "ndkt/corpus.hpp"
#include "ndkt/magic.hpp"

using namespace ndkt;

namespace {

Grid corpus_grid(const char* id) { return find_corpus_entry(id)->grid(); }

MagicReport with_diagonals(const Grid& g) {
  MagicOptions o;
  o.include_diagonals = true;
  return magic_report(g, o);
}

Grid random_numbering(const Shape& s, std::mt19937& rng) {
  std::vector<std::uint32_t> n(s.cell_count());
  std::iota(n.begin(), n.end(), 1u);
  std::shuffle(n.begin(), n.end(), rng);
  return Grid(s, n);
}

}  // namespace

TEST(MagicConstant, KnownValues) {
  EXPECT_EQ(magic_constant(4, 3), 130);
  EXPECT_EQ(magic_constant(4, 4), 514);
  EXPECT_EQ(magic_constant(6, 2), 111);
  EXPECT_EQ(magic_constant(4, 5), 2050);
  EXPECT_EQ(magic_constant(8, 2), 260);
  EXPECT_EQ(magic_constant(1, 7), 1);
}

TEST(MagicConstant, OddOrderParity) {
  // odd in every even dimension; in odd dimensions only when m = 1 (mod 4)
  for (int m : {3, 5, 7, 9, 11})
    for (int d = 2; d <= 5; ++d) {
      const bool odd = d % 2 == 0 || m % 4 == 1;
      EXPECT_EQ(magic_constant(m, d) % 2 == 1, odd) << m << "^" << d;
    }
  EXPECT_EQ(magic_constant(3, 3), 42);
}

TEST(MagicConstant, OverflowIsReported) { EXPECT_THROW(magic_constant(1000, 10), CapacityError); }

TEST(MagicReport, Fig2) {
  const auto r = with_diagonals(corpus_grid("fig2"));
  EXPECT_EQ(r.magic_constant, 130);
  EXPECT_EQ(r.magic_line_count, 48u);
  EXPECT_EQ(r.magic_diagonal_count, 4u);
  EXPECT_TRUE(*r.is_magic);
  EXPECT_TRUE(*r.is_diagonally_magic);
}

TEST(MagicReport, Fig9KeyValues) {
  EXPECT_EQ(to_key_values(with_diagonals(corpus_grid("fig9"))),
            "magic=true constant=514 lines=256/256 axes=64/64,64/64,64/64,64/64 diag=0/8 ratio=256/256");
  EXPECT_EQ(to_key_values(magic_report(corpus_grid("fig9"))),
            "magic=true constant=514 lines=256/256 axes=64/64,64/64,64/64,64/64 ratio=256/256");
}

TEST(MagicReport, Fig10FirstRow) {
  const auto r = magic_report(corpus_grid("fig10"));
  ASSERT_FALSE(r.line_sums.empty());
  EXPECT_EQ(r.line_sums.front().axis, 0u);
  EXPECT_EQ(r.line_sums.front().sum, 2050);
  EXPECT_EQ(r.magic_line_count, 1280u);
  EXPECT_EQ(r.magic_ratio, (Ratio{1280, 1280}));
}

TEST(MagicReport, Fig1bRowsOnly) {
  const auto r = magic_report(corpus_grid("fig1b"));
  EXPECT_EQ(r.magic_lines_per_axis, (std::vector<std::size_t>{6, 0}));
  EXPECT_EQ(r.magic_ratio, (Ratio{6, 12}));
  EXPECT_FALSE(*r.is_magic);
  std::vector<Sum> columns;
  for (const auto& ls : r.line_sums)
    if (ls.axis == 1) columns.push_back(ls.sum);
  EXPECT_EQ(columns, (std::vector<Sum>{121, 131, 119, 103, 91, 101}));
}

TEST(MagicReport, RatioWithDiagonals) {
  MagicOptions o;
  o.include_diagonals = true;
  o.ratio_mode = RatioMode::with_diagonals;
  EXPECT_EQ(magic_report(corpus_grid("fig9"), o).magic_ratio, (Ratio{256, 264}));
}

TEST(MagicReport, NonCubicHasNoConstant) {
  const auto r = magic_report(corpus_grid("fig6"));
  EXPECT_FALSE(r.magic_constant);
  EXPECT_FALSE(r.is_magic);
  EXPECT_EQ(r.total_line_count, 16u + 12u + 24u + 24u);
  MagicOptions o;
  o.include_diagonals = true;
  EXPECT_THROW(magic_report(corpus_grid("fig6"), o), DomainError);
}

TEST(MagicReport, RejectsNonPermutation) {
  EXPECT_THROW(magic_report(Grid(Shape({2, 2}), {1, 1, 2, 3})), InputError);
}

TEST(MagicReport, AxisTotalsAreConserved) {
  std::mt19937 rng(5);
  for (const auto& shape : {Shape({4, 4, 4}), Shape({3, 5}), Shape({2, 3, 4})}) {
    const Grid g = random_numbering(shape, rng);
    const auto r = magic_report(g);
    const Sum n = static_cast<Sum>(shape.cell_count());
    std::vector<Sum> per_axis(shape.dimension(), 0);
    for (const auto& ls : r.line_sums) per_axis[ls.axis] += ls.sum;
    for (Sum s : per_axis) EXPECT_EQ(s, n * (n + 1) / 2);
  }
}

TEST(MagicReport, InvariantUnderCubeSymmetries) {
  const Grid g = corpus_grid("fig2");
  const auto syms = shape_symmetries(g.shape());
  ASSERT_EQ(syms.size(), 48u);
  for (const auto& s : syms) {
    const auto r = with_diagonals(transformed(g, s));
    EXPECT_TRUE(*r.is_magic);
    EXPECT_TRUE(*r.is_diagonally_magic);
  }
}

TEST(Quartiles, Groups) {
  EXPECT_EQ(quartile_group(1, 64), 0);
  EXPECT_EQ(quartile_group(16, 64), 0);
  EXPECT_EQ(quartile_group(17, 64), 1);
  EXPECT_EQ(quartile_group(64, 64), 3);
}

TEST(Quartiles, CorpusBalance) {
  EXPECT_EQ(to_key_values(quartile_report(corpus_grid("fig9"))), "quartiles=true balanced=256/256");
  EXPECT_TRUE(quartile_report(corpus_grid("fig10")).balanced);
  const auto fig2 = quartile_report(corpus_grid("fig2"));
  EXPECT_EQ(fig2.balanced_line_count, 40u);
  EXPECT_FALSE(fig2.balanced);
  EXPECT_EQ(quartile_report(corpus_grid("fig3")).balanced_line_count, 40u);
}

TEST(Quartiles, BoundsOnRandomNumberings) {
  std::mt19937 rng(11);
  for (int t = 0; t < 50; ++t) {
    const auto r = quartile_report(random_numbering(Shape({4, 4, 4}), rng));
    EXPECT_EQ(r.total_line_count, 48u);
    EXPECT_LE(r.balanced_line_count, r.total_line_count);
    EXPECT_EQ(r.balanced, r.balanced_line_count == 48u);
  }
}

TEST(Quartiles, NeedsOrderFour) { EXPECT_THROW(quartile_report(corpus_grid("fig1b")), DomainError); }

TEST(RenderTable, MentionsConstant) {
  const std::string text = render_table(with_diagonals(corpus_grid("fig2")));
  EXPECT_NE(text.find("130"), std::string::npos);
}
