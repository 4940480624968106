#include <gtest/gtest.h>

#include "dyfrt/errors.hpp"
#include "dyfrt/matrix.hpp"
#include "dyfrt/random.hpp"
#include "dyfrt/scalar.hpp"
#include "oracle.hpp"

using namespace dyfrt;

TEST(Scalar, ParseAndPrint) {
  EXPECT_EQ(to_string(parse_scalar("3")), "3");
  EXPECT_EQ(to_string(parse_scalar("-4/6")), "-2/3");
  EXPECT_EQ(to_string(parse_scalar("10/5")), "2");
  EXPECT_THROW(parse_scalar("abc"), StructuralError);
  EXPECT_THROW(parse_scalar("1/0"), StructuralError);
  EXPECT_THROW(parse_scalar(""), StructuralError);
}

TEST(Matrix, ZerosAreNotStored) {
  Matrix m(2, 3);
  m.set(0, 1, Scalar(5));
  m.add_to(0, 1, Scalar(-5));
  EXPECT_EQ(m.nnz(), 0u);
  EXPECT_TRUE(m.is_zero());
}

TEST(Matrix, FromTripletsSumsDuplicates) {
  Matrix m = Matrix::from_triplets(2, 2, {{0, 0, Scalar(1)}, {0, 0, Scalar(2)}, {1, 0, Scalar(1)}, {1, 0, Scalar(-1)}});
  EXPECT_EQ(m.get(0, 0), Scalar(3));
  EXPECT_EQ(m.nnz(), 1u);
}

TEST(Matrix, ProductMatchesDenseOracle) {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = uniform_int(rng, 1, 5), k = uniform_int(rng, 1, 5), m = uniform_int(rng, 1, 5);
    auto rnd = [&](int r, int c) {
      std::vector<std::vector<Scalar>> d(r, std::vector<Scalar>(c));
      for (auto& row : d)
        for (auto& x : row)
          if (uniform_int(rng, 0, 2)) x = Scalar(uniform_int(rng, -3, 3), uniform_int(rng, 1, 3)), x.canonicalize();
      return d;
    };
    auto a = rnd(n, k), b = rnd(k, m);
    Matrix p = Matrix::from_dense(a) * Matrix::from_dense(b);
    EXPECT_EQ(oracle::dense(p), oracle::mul(a, b));
    EXPECT_EQ(Matrix::from_dense(a).transpose().transpose(), Matrix::from_dense(a));
  }
}

TEST(Matrix, InverseAndSingular) {
  Matrix a = Matrix::from_dense({{Scalar(2), Scalar(1)}, {Scalar(1), Scalar(1)}});
  auto inv = a.inverse();
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(a * *inv, Matrix::identity(2));
  EXPECT_EQ(inv->get(0, 1), Scalar(-1));

  Matrix s = Matrix::from_dense({{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}});
  EXPECT_FALSE(s.inverse().has_value());
  EXPECT_FALSE(Matrix(2, 3).inverse().has_value());
}

TEST(Matrix, FirstDifference) {
  Matrix a = Matrix::identity(3), b = Matrix::identity(3);
  EXPECT_FALSE(Matrix::first_difference(a, b).has_value());
  b.set(2, 1, Scalar(1, 2));
  auto d = Matrix::first_difference(a, b);
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(*d, std::make_pair(std::size_t{2}, std::size_t{1}));
}

TEST(Matrix, ApplyAndArithmetic) {
  Matrix a = Matrix::from_dense({{Scalar(1), Scalar(2)}, {Scalar(0), Scalar(3)}});
  auto y = a.apply({Scalar(1), Scalar(1)});
  EXPECT_EQ(y[0], Scalar(3));
  EXPECT_EQ(y[1], Scalar(3));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ((Scalar(2) * a).get(1, 1), Scalar(6));
  EXPECT_EQ((a + a).get(0, 1), Scalar(4));
}
