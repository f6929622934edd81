#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rigidtrace/field.hpp"
#include "rigidtrace/matrix.hpp"

using namespace rigidtrace;

static Matrix<Rat> qmat(int r, int c, std::initializer_list<long> vals) {
  Matrix<Rat> m(r, c, Rat(0));
  auto it = vals.begin();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = Rat(*it++);
  return m;
}

static Matrix<Fp> pmat(int r, int c, std::int64_t p, std::initializer_list<long> vals) {
  Matrix<Fp> m(r, c, Fp(0, p));
  auto it = vals.begin();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = Fp(*it++, p);
  return m;
}

TEST_CASE("field arithmetic over Q and Fp") {
  CHECK(rat_from_string("2/4") == Rat(1, 2));
  CHECK(rat_from_string("-6/3") == Rat(-2));
  CHECK(to_string(Rat(1, 2)) == "1/2");
  CHECK_THROWS(rat_from_string("1/0"));

  Fp a(5, 3), b(2, 3);
  CHECK(a == Fp(2, 3));
  CHECK((a + b).v == 1);
  CHECK((a - b).v == 0);
  CHECK((a * b).v == 1);
  CHECK((Fp(1, 3) / Fp(2, 3)).v == 2);
  CHECK((-Fp(1, 7)).v == 6);
  CHECK_THROWS(Fp(1, 5) / Fp(0, 5));
  CHECK(Fp(4, 7).inverse().v == 2);
}

TEST_CASE("matrix multiply, transpose, trace") {
  auto A = qmat(2, 3, {1, 2, 3, 4, 5, 6});
  auto B = qmat(3, 2, {7, 8, 9, 10, 11, 12});
  auto AB = qmat(2, 2, {58, 64, 139, 154});
  CHECK(A * B == AB);
  CHECK(transpose(A) == qmat(3, 2, {1, 4, 2, 5, 3, 6}));
  CHECK(mat_trace(AB, Rat(0)) == Rat(212));
  CHECK(mat_identity(3, Rat(0)) * B == B);
}

TEST_CASE("kronecker product is left-factor major") {
  auto A = qmat(2, 2, {1, 2, 3, 4});
  auto B = qmat(2, 2, {0, 5, 6, 7});
  auto K = kron(A, B);
  CHECK(K.rows == 4);
  // block (0,0) = 1*B, block (0,1) = 2*B
  CHECK(K.at(0, 1) == Rat(5));
  CHECK(K.at(0, 3) == Rat(10));
  CHECK(K.at(3, 0) == Rat(18));
  CHECK(K.at(3, 3) == Rat(28));
  // mixed-product property on a sample
  auto C = qmat(2, 2, {1, 1, 0, 1});
  auto D = qmat(2, 2, {2, 0, 1, 1});
  CHECK(kron(A * C, B * D) == kron(A, B) * kron(C, D));
}

TEST_CASE("rref and rank, hand-reduced examples") {
  // [[1,2,3],[4,5,6],[7,8,9]] has rank 2; rref = [[1,0,-1],[0,1,2],[0,0,0]]
  auto A = qmat(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9});
  auto R = A;
  auto piv = rref_inplace(R);
  CHECK(piv == std::vector<int>{0, 1});
  CHECK(R == qmat(3, 3, {1, 0, -1, 0, 1, 2, 0, 0, 0}));
  CHECK(rank(A) == 2);
  CHECK(rank(mat_identity(4, Rat(0))) == 4);
  CHECK(rank(mat_zero(3, 5, Rat(0))) == 0);

  // over F2: [[1,0,1],[0,1,0],[1,1,1]] has row3 = row1 + row2
  CHECK(rank(pmat(3, 3, 2, {1, 0, 1, 0, 1, 0, 1, 1, 1})) == 2);
  CHECK(rank(pmat(3, 3, 2, {1, 1, 0, 0, 1, 1, 0, 0, 1})) == 3);
}

TEST_CASE("solve returns echelon solution with free variables zero") {
  // x + y = 3, 2x + 2y = 6: underdetermined, canonical solution (3, 0)
  auto A = qmat(2, 2, {1, 1, 2, 2});
  auto x = solve(A, {Rat(3), Rat(6)}, Rat(0));
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rat(3));
  CHECK((*x)[1] == Rat(0));

  // inconsistent
  auto y = solve(A, {Rat(3), Rat(7)}, Rat(0));
  CHECK(!y.has_value());

  // unique: [[2,1],[1,3]] x = (5,10) -> x = (1,3)
  auto B = qmat(2, 2, {2, 1, 1, 3});
  auto z = solve(B, {Rat(5), Rat(10)}, Rat(0));
  REQUIRE(z.has_value());
  CHECK((*z)[0] == Rat(1));
  CHECK((*z)[1] == Rat(3));
}

TEST_CASE("nullspace basis") {
  auto A = qmat(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9});
  auto ns = nullspace(A, Rat(0));
  REQUIRE(ns.size() == 1);
  CHECK(ns[0] == std::vector<Rat>{Rat(1), Rat(-2), Rat(1)});
  // sanity: A v = 0
  Matrix<Rat> v(3, 1, Rat(0));
  for (int i = 0; i < 3; ++i) v.at(i, 0) = ns[0][i];
  CHECK(A * v == mat_zero(3, 1, Rat(0)));
  CHECK(nullspace(mat_identity(2, Rat(0)), Rat(0)).empty());
}

TEST_CASE("inverse over Q and Fp") {
  auto A = qmat(2, 2, {1, 2, 3, 4});
  auto Ai = inverse(A, Rat(0));
  REQUIRE(Ai.has_value());
  Matrix<Rat> expect(2, 2, Rat(0));
  expect.at(0, 0) = Rat(-2);
  expect.at(0, 1) = Rat(1);
  expect.at(1, 0) = Rat(3, 2);
  expect.at(1, 1) = Rat(-1, 2);
  CHECK(*Ai == expect);
  CHECK(*Ai * A == mat_identity(2, Rat(0)));
  CHECK(!inverse(qmat(2, 2, {1, 2, 2, 4}), Rat(0)).has_value());
  CHECK(!is_invertible(qmat(2, 3, {1, 0, 0, 0, 1, 0}), Rat(0)));

  auto P = pmat(2, 2, 3, {1, 2, 1, 1});
  auto Pi = inverse(P, Fp(0, 3));
  REQUIRE(Pi.has_value());
  CHECK(*Pi * P == mat_identity(2, Fp(0, 3)));
}

TEST_CASE("zero-dimensional matrices") {
  Matrix<Rat> e0(0, 0, Rat(0));
  CHECK(e0 * e0 == e0);
  CHECK(mat_trace(e0, Rat(0)) == Rat(0));
  CHECK(rank(e0) == 0);
  // 0x2 times 2x0 is the 0x0 matrix; 2x0 times 0x2 is the 2x2 zero matrix
  Matrix<Rat> a(0, 2, Rat(0)), b(2, 0, Rat(0));
  CHECK(a * b == e0);
  CHECK(b * a == mat_zero(2, 2, Rat(0)));
  auto i0 = inverse(e0, Rat(0));
  REQUIRE(i0.has_value());
  CHECK(*i0 == e0);
}
