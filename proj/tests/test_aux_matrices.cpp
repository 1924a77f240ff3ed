#include "pairscheme/aux_matrices.hpp"

#include <gtest/gtest.h>

using namespace pairscheme;

TEST(MultTable, SmallFields) {
  auto f3 = make_field(3);
  EXPECT_EQ(mult_table(*f3), (std::vector<std::vector<long>>{{0, 0, 0}, {0, 1, 2}, {0, 2, 1}}));
  auto f2 = make_field(2);
  EXPECT_EQ(mult_table(*f2), (std::vector<std::vector<long>>{{0, 0}, {0, 1}}));
  // GF(4) table rows: 0; 0,1,z,z+1; 0,z,z+1,1; 0,z+1,1,z
  auto f4 = make_field(2, 2);
  EXPECT_EQ(mult_table(*f4),
            (std::vector<std::vector<long>>{{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}}));
}

TEST(GeneralizedHadamard, MultTablesQualify) {
  for (auto f : {make_field(3), make_field(2, 2), make_field(5), make_field(3, 2)})
    EXPECT_TRUE(verify_gh(*f, mult_table(*f)));
  auto f3 = make_field(3);
  std::vector<std::vector<long>> zeros(3, std::vector<long>(3, 0));
  EXPECT_FALSE(verify_gh(*f3, zeros));
}

TEST(PhiRep, TranslationAction) {
  // defining property: phi(a)[i][j] = 1 iff element j = element i + a
  for (auto f : {make_field(3), make_field(2, 2), make_field(3, 2)}) {
    for (long a = 0; a < f->q(); ++a) {
      IntMatrix p = phi_rep(*f, a);
      for (long i = 0; i < f->q(); ++i)
        for (long j = 0; j < f->q(); ++j) EXPECT_EQ(p(i, j), f->add(i, a) == j ? 1 : 0);
    }
    // group homomorphism
    for (long a = 0; a < f->q(); ++a)
      for (long b = 0; b < f->q(); ++b)
        EXPECT_EQ(phi_rep(*f, a) * phi_rep(*f, b), phi_rep(*f, f->add(a, b)));
  }
}

TEST(PhiRep, PrimeFieldPowersOfShift) {
  auto f3 = make_field(3);
  IntMatrix r3 = IntMatrix::permutation({1, 2, 0});
  EXPECT_EQ(phi_rep(*f3, 0), IntMatrix::identity(3));
  EXPECT_EQ(phi_rep(*f3, 1), r3);
  EXPECT_EQ(phi_rep(*f3, 2), r3 * r3);
}

TEST(PhiRep, ExtensionFieldKroneckerShape) {
  // digit shifts enter the Kronecker product most significant digit first
  auto f4 = make_field(2, 2);
  IntMatrix r2 = IntMatrix::permutation({1, 0});
  IntMatrix i2 = IntMatrix::identity(2);
  EXPECT_EQ(phi_rep(*f4, 1), IntMatrix::kronecker(i2, r2));
  EXPECT_EQ(phi_rep(*f4, 2), IntMatrix::kronecker(r2, i2));
  EXPECT_EQ(phi_rep(*f4, 3), IntMatrix::kronecker(r2, r2));
}

TEST(AuxMatrix, SpecialLabels) {
  auto f3 = make_field(3);
  EXPECT_EQ(aux_matrix(*f3, AuxLabel::x()), IntMatrix::zero(9, 9));
  EXPECT_EQ(aux_matrix(*f3, AuxLabel::y()),
            IntMatrix::kronecker(IntMatrix::identity(3), IntMatrix::all_ones(3)));
  EXPECT_EQ(aux_matrix(*f3, AuxLabel::element(0)),
            IntMatrix::kronecker(IntMatrix::all_ones(3), IntMatrix::identity(3)));
}

TEST(AuxMatrix, BlockDisplayAtQ3) {
  auto f3 = make_field(3);
  auto phi = [&](long a) { return phi_rep(*f3, a); };
  IntMatrix c1 = IntMatrix::block_assemble({{phi(0), phi(1), phi(2)}, {phi(2), phi(0), phi(1)}, {phi(1), phi(2), phi(0)}});
  EXPECT_EQ(aux_matrix(*f3, AuxLabel::element(1)), c1);
  IntMatrix c2 = IntMatrix::block_assemble({{phi(0), phi(2), phi(1)}, {phi(1), phi(0), phi(2)}, {phi(2), phi(1), phi(0)}});
  EXPECT_EQ(aux_matrix(*f3, AuxLabel::element(2)), c2);
}

TEST(AuxMatrix, RowStructure) {
  // one 1 per row and column inside every q x q block; row sums equal q
  auto f4 = make_field(2, 2);
  for (long a = 0; a < 4; ++a) {
    IntMatrix c = aux_matrix(*f4, AuxLabel::element(a));
    for (long i = 0; i < 16; ++i) EXPECT_EQ(c.row_sum(i), 4);
    for (long bi = 0; bi < 4; ++bi)
      for (long bj = 0; bj < 4; ++bj) {
        long ones = 0;
        for (long i = 0; i < 4; ++i)
          for (long j = 0; j < 4; ++j) ones += c(bi * 4 + i, bj * 4 + j);
        EXPECT_EQ(ones, 4);  // a permutation block
      }
  }
}

TEST(AuxIdentities, HoldForSmallFields) {
  for (long q : {2L, 3L, 4L, 5L}) {
    auto pm = is_prime_power(q);
    auto fam = build_aux_family(make_field(pm->first, pm->second));
    auto report = check_aux_identities(fam);
    EXPECT_TRUE(report.all_ok()) << "q=" << q;
    EXPECT_EQ(report.clauses.size(), 6u);  // clause (i) contributes two identities
  }
}

TEST(AuxIdentities, MutationCaught) {
  auto fam = build_aux_family(make_field(3));
  // flip one bit of C_1
  long r = 2, c = 5;
  fam.c_elem[1].at(r, c) = 1 - fam.c_elem[1](r, c);
  auto report = check_aux_identities(fam);
  EXPECT_FALSE(report.all_ok());
  bool witnessed = false;
  for (const auto& clause : report.clauses)
    if (!clause.ok && clause.witness) witnessed = true;
  EXPECT_TRUE(witnessed);
}
