#include "pairscheme/latin.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace pairscheme;

namespace {

std::vector<long> row_of(const LatinSquare& l, long r) {
  std::vector<long> out;
  for (long c = 0; c < l.order; ++c) out.push_back(l.cell(r, c));
  return out;
}

}  // namespace

TEST(LatinSquare, FieldSquaresOverF5) {
  auto f5 = make_field(5);
  LatinSquare l1 = latin_square(f5, 1);
  EXPECT_EQ(l1.cells, (std::vector<long>{0, 1, 2, 3, 4, 4, 0, 1, 2, 3, 3, 4, 0, 1, 2, 2, 3, 4, 0, 1, 1, 2, 3, 4, 0}));
  LatinSquare l2 = latin_square(f5, 2);
  EXPECT_EQ(l2.cells, (std::vector<long>{0, 2, 4, 1, 3, 3, 0, 2, 4, 1, 1, 3, 0, 2, 4, 4, 1, 3, 0, 2, 2, 4, 1, 3, 0}));
  EXPECT_EQ(row_of(latin_square(f5, 3), 0), (std::vector<long>{0, 3, 1, 4, 2}));
  // beta = 4 follows the defining formula; its first row is 4 * (0,1,2,3,4)
  EXPECT_EQ(row_of(latin_square(f5, 4), 0), (std::vector<long>{0, 4, 3, 2, 1}));
  for (long beta = 1; beta < 5; ++beta) {
    LatinSquare l = latin_square(f5, beta);
    EXPECT_TRUE(is_latin(l));
    for (long a = 0; a < 5; ++a) EXPECT_EQ(l.cell(a, a), 0);  // constant zero diagonal
  }
  EXPECT_THROW(latin_square(f5, 0), std::invalid_argument);
}

TEST(LatinSquare, Suitability) {
  auto f5 = make_field(5);
  LatinSquare l1 = latin_square(f5, 1), l2 = latin_square(f5, 2);
  EXPECT_TRUE(is_suitable(l1, l2));
  EXPECT_FALSE(is_suitable(l1, l1));
  // order-1 squares are vacuously suitable
  LatinSquare tiny{1, nullptr, -1, {0}};
  EXPECT_TRUE(is_suitable(tiny, tiny));
  EXPECT_THROW(is_suitable(l1, tiny), std::invalid_argument);
}

TEST(LatinSquare, PairwiseSuitableFamilies) {
  for (long r : {3L, 4L, 5L, 7L}) {
    auto pm = is_prime_power(r);
    auto f = make_field(pm->first, pm->second);
    std::vector<LatinSquare> squares;
    for (long beta = 1; beta < r; ++beta) squares.push_back(latin_square(f, beta));
    for (std::size_t i = 0; i < squares.size(); ++i)
      for (std::size_t j = 0; j < squares.size(); ++j)
        EXPECT_EQ(is_suitable(squares[i], squares[j]), i != j) << "r=" << r;
  }
}

TEST(LatinSquare, TransposeIsNegation) {
  for (long r : {4L, 5L, 7L}) {
    auto pm = is_prime_power(r);
    auto f = make_field(pm->first, pm->second);
    for (long beta = 1; beta < r; ++beta) {
      LatinSquare l = latin_square(f, beta);
      LatinSquare ln = latin_square(f, f->neg(beta));
      for (long a = 0; a < r; ++a)
        for (long b = 0; b < r; ++b) EXPECT_EQ(l.cell(a, b), ln.cell(b, a));
    }
  }
}

TEST(PermComponents, Decomposition) {
  auto f5 = make_field(5);
  LatinSquare l1 = latin_square(f5, 1);
  PermComponents pc = perm_components(l1);
  // symbol 0 sits on the diagonal
  EXPECT_EQ(pc.perm[0], (std::vector<long>{0, 1, 2, 3, 4}));
  // beta=1, gamma=2 solves 1(-a+b) = 2, the shift b = a + 2
  EXPECT_EQ(pc.perm[2], (std::vector<long>{2, 3, 4, 0, 1}));
  // components partition all cells
  std::vector<long> coverage(25, 0);
  for (long s = 0; s < 5; ++s)
    for (long a = 0; a < 5; ++a) coverage[static_cast<std::size_t>(a * 5 + pc.perm[static_cast<std::size_t>(s)][static_cast<std::size_t>(a)])]++;
  EXPECT_EQ(std::accumulate(coverage.begin(), coverage.end(), 0L), 25);
  for (long v : coverage) EXPECT_EQ(v, 1);
  // the shortcut construction agrees with the cell decomposition
  for (long beta = 1; beta < 5; ++beta) {
    PermComponents full = perm_components(latin_square(f5, beta));
    for (long gamma = 0; gamma < 5; ++gamma)
      EXPECT_EQ(latin_component(*f5, beta, gamma), full.perm[static_cast<std::size_t>(gamma)]);
  }
}

TEST(PermCalculus, ExhaustiveSmallFields) {
  for (long r : {2L, 3L, 4L, 5L}) {
    auto pm = is_prime_power(r);
    auto report = check_perm_calculus(*make_field(pm->first, pm->second));
    EXPECT_TRUE(report.all_ok()) << "r=" << r;
    EXPECT_EQ(report.clauses.size(), 4u);
  }
}

TEST(LatinSquare, Relabel) {
  auto f5 = make_field(5);
  LatinSquare l3 = latin_square(f5, 3);
  std::vector<long> identity{0, 1, 2, 3, 4};
  EXPECT_EQ(relabel(l3, identity).cells, l3.cells);
  std::vector<long> swap{1, 0, 2, 3, 4};
  LatinSquare moved = relabel(l3, swap);
  EXPECT_NE(moved.cells, l3.cells);
  EXPECT_EQ(relabel(moved, swap).cells, l3.cells);  // involution undoes it
  EXPECT_TRUE(is_latin(moved));
  EXPECT_THROW(relabel(l3, std::vector<long>{0, 0, 1, 2, 3}), std::invalid_argument);
}

TEST(LatinSquare, CsvExport) {
  auto f4 = make_field(2, 2);
  LatinSquare l = latin_square(f4, 2);
  std::string csv = latin_csv(l);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "0,z,z+1,1");
}
