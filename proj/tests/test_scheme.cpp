#include "pairscheme/scheme.hpp"

#include <gtest/gtest.h>

using namespace pairscheme;

namespace {

// the thin scheme of a cyclic group: classes are the powers of the shift
SchemeInstance cyclic_thin_scheme(long n) {
  SchemeInstance s;
  s.v = n;
  std::vector<long> cycle(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) cycle[static_cast<std::size_t>(i)] = (i + 1) % n;
  IntMatrix shift = IntMatrix::permutation(cycle);
  IntMatrix power = IntMatrix::identity(n);
  for (long k = 0; k < n; ++k) {
    s.labels.push_back("R" + std::to_string(k));
    s.classes.push_back(power);
    power = power * shift;
  }
  return s;
}

}  // namespace

TEST(Axioms, ThinGroupSchemes) {
  for (long n : {2L, 4L, 5L}) {
    auto report = verify_axioms(cyclic_thin_scheme(n));
    EXPECT_TRUE(report.all_ok()) << "n=" << n;
    ASSERT_TRUE(report.tensor.has_value());
    // thin scheme: p_{ij}^k = 1 iff k = i + j mod n
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j)
        for (long k = 0; k < n; ++k) EXPECT_EQ(report.tensor->at(i, j, k), (i + j) % n == k ? 1 : 0);
  }
}

TEST(Axioms, TensorRowSums) {
  // sum_k p_ij^k k_k = k_i k_j
  SchemeInstance s = cyclic_thin_scheme(5);
  auto report = verify_axioms(s);
  auto k = s.valencies();
  const long nc = static_cast<long>(s.classes.size());
  for (long i = 0; i < nc; ++i)
    for (long j = 0; j < nc; ++j) {
      long total = 0;
      for (long kk = 0; kk < nc; ++kk) total += report.tensor->at(i, j, kk) * k[static_cast<std::size_t>(kk)];
      EXPECT_EQ(total, k[static_cast<std::size_t>(i)] * k[static_cast<std::size_t>(j)]);
    }
}

TEST(Axioms, FaultsAreWitnessed) {
  // a class that is not transpose-closed
  SchemeInstance s = cyclic_thin_scheme(4);
  s.classes.pop_back();
  s.labels.pop_back();
  IntMatrix extra(4, 4);
  extra.at(0, 3) = 1;
  extra.at(1, 0) = 1;
  extra.at(2, 1) = 1;
  extra.at(3, 2) = 1;
  // replace R3 by a matrix equal to it, then flip two cells to break AS3 only
  s.classes.push_back(extra);
  s.labels.push_back("R3");
  auto ok = verify_axioms(s);
  EXPECT_TRUE(ok.all_ok());  // sanity: R3 really is the inverse shift

  // now mutate one bit: AS2 must fail with a coordinate witness
  SchemeInstance bad = s;
  bad.classes[3].at(0, 3) = 0;
  auto report = verify_axioms(bad);
  EXPECT_FALSE(report.all_ok());
  const ClauseResult* as2 = report.checks.find("AS2 partition");
  ASSERT_NE(as2, nullptr);
  EXPECT_FALSE(as2->ok);
  ASSERT_TRUE(as2->witness.has_value());
  EXPECT_EQ(as2->witness->row, 0);
  EXPECT_EQ(as2->witness->col, 3);

  // merged classes {I, P^2, P + P^3} still form a scheme; the lopsided merge
  // {I, P + P^2, P^3} is not transpose-closed
  auto full = cyclic_thin_scheme(4);
  SchemeInstance sym;
  sym.v = 4;
  sym.labels = {"R0", "R1", "R2"};
  sym.classes = {full.classes[0], full.classes[2], full.classes[1] + full.classes[3]};
  EXPECT_TRUE(verify_axioms(sym).all_ok());
  // breaking the pairing: {I, P^2 + P, P^3} is not transpose-closed
  SchemeInstance broken;
  broken.v = 4;
  broken.labels = {"R0", "R1", "R2"};
  broken.classes = {full.classes[0], full.classes[2] + full.classes[1], full.classes[3]};
  auto r3 = verify_axioms(broken);
  EXPECT_FALSE(r3.all_ok());
  const ClauseResult* as3 = r3.checks.find("AS3 transpose closure");
  ASSERT_NE(as3, nullptr);
  EXPECT_FALSE(as3->ok);
}

TEST(Axioms, ClosureFaultIsWitnessed) {
  // move one symmetric cell pair between classes: the partition and the
  // transpose closure survive, so the failure must surface in AS4
  auto full = cyclic_thin_scheme(5);
  SchemeInstance merged;
  merged.v = 5;
  merged.labels = {"R0", "R1", "R2"};
  merged.classes = {full.classes[0], full.classes[1] + full.classes[4], full.classes[2] + full.classes[3]};
  ASSERT_TRUE(verify_axioms(merged).all_ok());
  SchemeInstance mutated = merged;
  mutated.classes[1].at(0, 1) = 0;
  mutated.classes[2].at(0, 1) = 1;
  mutated.classes[1].at(1, 0) = 0;
  mutated.classes[2].at(1, 0) = 1;
  auto report = verify_axioms(mutated);
  EXPECT_TRUE(report.checks.find("AS2 partition")->ok);
  EXPECT_TRUE(report.checks.find("AS3 transpose closure")->ok);
  const ClauseResult* as4 = report.checks.find("AS4 closed products");
  ASSERT_NE(as4, nullptr);
  EXPECT_FALSE(as4->ok);
  ASSERT_TRUE(as4->witness.has_value());
  EXPECT_GE(as4->witness->row, 0);
}

TEST(SymmetricScheme, Predicate) {
  SchemeInstance z4 = cyclic_thin_scheme(4);
  EXPECT_FALSE(is_symmetric_scheme(z4));
  auto full = cyclic_thin_scheme(4);
  SchemeInstance sym;
  sym.v = 4;
  sym.labels = {"R0", "R1", "R2"};
  sym.classes = {full.classes[0], full.classes[2], full.classes[1] + full.classes[3]};
  EXPECT_TRUE(is_symmetric_scheme(sym));
}

TEST(Designs, SymmetricDesignEquation) {
  EXPECT_TRUE(verify_symmetric_design(IntMatrix::identity(6), 6, 1, 0));
  EXPECT_TRUE(verify_symmetric_design(IntMatrix::all_ones(6), 6, 6, 6));
  // the complement of I in J is a (6,5,4) design
  EXPECT_TRUE(verify_symmetric_design(IntMatrix::all_ones(6) - IntMatrix::identity(6), 6, 5, 4));
  EXPECT_FALSE(verify_symmetric_design(IntMatrix::identity(6), 6, 1, 1));
  EXPECT_FALSE(verify_symmetric_design(2 * IntMatrix::identity(6), 6, 2, 0));  // not 0/1
}

TEST(Designs, GroupDivisibleEquation) {
  IntMatrix m = IntMatrix::kronecker(IntMatrix::identity(3), IntMatrix::all_ones(4));
  EXPECT_TRUE(verify_sgdd(m, 12, 4, 3, 4, 4, 0));
  EXPECT_FALSE(verify_sgdd(m, 12, 4, 3, 4, 4, 1));
  // improper case coincides with the plain symmetric design equation
  IntMatrix comp = IntMatrix::all_ones(6) - IntMatrix::identity(6);
  EXPECT_TRUE(verify_sgdd(comp, 6, 5, 2, 3, 4, 4));
  EXPECT_TRUE(verify_symmetric_design(comp, 6, 5, 4));
  EXPECT_FALSE(verify_sgdd(comp, 8, 5, 2, 3, 4, 4));  // v != m*n consistency
}
