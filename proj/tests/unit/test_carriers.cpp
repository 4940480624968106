#include <gtest/gtest.h>

#include "dyfrt/carriers.hpp"
#include "dyfrt/errors.hpp"
#include "dyfrt/serialize.hpp"
#include "oracle.hpp"

using namespace dyfrt;

TEST(Carriers, BuiltinQ5MatchesTable) {
  Quasigroup q = builtin_q5();
  ASSERT_EQ(q.size(), 5);
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) EXPECT_EQ(q.mul(a, b), oracle::kQ5[a][b]) << a << "·" << b;
  EXPECT_EQ(q.mul(0, 2), 2);
  EXPECT_EQ(q.mul(4, 3), 0);
  EXPECT_TRUE(validate_quasigroup(q).pass);
}

TEST(Carriers, Q5AsActionIsValid) {
  FiniteAction a = builtin_q5().as_action();
  EXPECT_EQ(a.h_size(), 5);
  EXPECT_EQ(a.x_size(), 5);
  EXPECT_EQ(a.act(3, 1), 0);
  EXPECT_TRUE(validate_action(a).pass);
}

TEST(Carriers, ActionReportsFailingColumn) {
  FiniteAction a{FiniteSet{3, {}}, FiniteSet{2, {}}, {{0, 1}, {1, 1}, {2, 0}}};
  auto r = validate_action(a);
  EXPECT_FALSE(r.pass);
  ASSERT_EQ(r.failing_columns.size(), 1u);
  EXPECT_EQ(r.failing_columns[0], 1);
}

TEST(Carriers, QuasigroupReportsRowsAndColumns) {
  Quasigroup q{FiniteSet{3, {}}, {{0, 1, 2}, {1, 1, 0}, {2, 0, 1}}};
  auto r = validate_quasigroup(q);
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.failing_rows, std::vector<int>{1});
  EXPECT_EQ(r.failing_columns, std::vector<int>{1});
}

TEST(Carriers, ShapeErrorsThrow) {
  FiniteAction ragged{FiniteSet{2, {}}, FiniteSet{2, {}}, {{0, 1}, {1}}};
  EXPECT_THROW(validate_action(ragged), StructuralError);
  FiniteAction out_of_range{FiniteSet{2, {}}, FiniteSet{1, {}}, {{0}, {2}}};
  EXPECT_THROW(validate_action(out_of_range), StructuralError);
  TernarySystem t{FiniteSet{2, {}}, {0, 1, 1}};
  EXPECT_THROW(validate_ternary(t), StructuralError);
}

TEST(Carriers, LeftDivide) {
  Quasigroup q = builtin_q5();
  EXPECT_EQ(left_divide(q, 0, 2), 2);
  EXPECT_EQ(left_divide(q, 1, 4), 4);
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) EXPECT_EQ(q.mul(a, left_divide(q, a, b)), b);
  EXPECT_THROW(left_divide(q, 5, 0), StructuralError);
}

TEST(Carriers, Z5Ternary) {
  TernarySystem t = builtin_z5_ternary();
  EXPECT_EQ(t.apply(1, 2, 3), 2);
  for (int a = 0; a < 5; ++a)
    for (int c = 0; c < 5; ++c) EXPECT_EQ(t.apply(a, a, c), c);
  EXPECT_NO_THROW(validate_ternary(t));
}

TEST(Carriers, JsonRoundTrip) {
  Quasigroup q = builtin_q5();
  auto s = io::structure_from_json(io::to_json(q));
  ASSERT_TRUE(std::holds_alternative<Quasigroup>(s));
  EXPECT_EQ(std::get<Quasigroup>(s), q);

  FiniteAction a = q.as_action();
  EXPECT_EQ(std::get<FiniteAction>(io::structure_from_json(io::to_json(a))), a);

  TernarySystem t = builtin_z5_ternary();
  EXPECT_EQ(std::get<TernarySystem>(io::structure_from_json(io::to_json(t))), t);
}

TEST(Carriers, JsonRejectsBadShapes) {
  io::Json j = io::to_json(builtin_q5());
  j["table"][2].erase(0);
  EXPECT_THROW(io::structure_from_json(j), StructuralError);
  EXPECT_THROW(io::structure_from_json(io::to_json(cyclic_quasigroup(6)), 4), StructuralError);
  EXPECT_THROW(io::structure_from_json(io::Json{{"kind", "monoid"}}), StructuralError);
}
