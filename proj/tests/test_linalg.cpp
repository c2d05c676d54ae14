#include "solvgrp/linalg.hpp"
#include "testutil.hpp"
#include <doctest.h>

using namespace solvgrp;

namespace {

IntMatrix random_matrix(testutil::Rng &rng, int rows, int cols, long lim)
{
	IntMatrix m(rows, cols);
	for (int i = 0; i < rows; ++i)
		for (int j = 0; j < cols; ++j)
			m.at(i, j) = rng.pick(-lim, lim);
	return m;
}

bool is_diagonal_chain(const IntMatrix &d)
{
	for (int i = 0; i < d.rows(); ++i)
		for (int j = 0; j < d.cols(); ++j)
			if (i != j && d.at(i, j) != 0)
				return false;
	int n = std::min(d.rows(), d.cols());
	for (int k = 0; k + 1 < n; ++k) {
		if (d.at(k, k) < 0)
			return false;
		if (d.at(k + 1, k + 1) != 0 &&
		    (d.at(k, k) == 0 || d.at(k + 1, k + 1) % d.at(k, k) != 0))
			return false;
	}
	return true;
}

} // namespace

TEST_SUITE("ext_gcd")
{
	TEST_CASE("pinned small case")
	{
		auto r = ext_gcd({2, 3});
		CHECK_EQ(r.g, 1);
		REQUIRE_EQ(r.coeffs.size(), 2);
		CHECK_EQ(r.coeffs[0] * 2 + r.coeffs[1] * 3, 1);
		CHECK_EQ(r.coeffs[0], -1);
		CHECK_EQ(r.coeffs[1], 1);
	}

	TEST_CASE("edge cases")
	{
		CHECK_EQ(ext_gcd({0, 0, 0}).g, 0);
		CHECK_EQ(ext_gcd({-6}).g, 6);
		CHECK_EQ(ext_gcd({-6}).coeffs[0], -1);
		auto r = ext_gcd({0, -4, 6});
		CHECK_EQ(r.g, 2);
		CHECK_EQ(r.coeffs[1] * -4 + r.coeffs[2] * 6, 2);
		CHECK_THROWS_AS(ext_gcd({}), std::invalid_argument);
	}

	TEST_CASE("certificate holds on random input")
	{
		testutil::Rng rng(11);
		for (int it = 0; it < 200; ++it) {
			int n = (int)rng.pick(1, 6);
			std::vector<Int> v(n);
			for (auto &e : v)
				e = rng.pick(-50, 50);
			auto r = ext_gcd(v);
			Int dot = 0, g = 0;
			for (int i = 0; i < n; ++i) {
				dot += r.coeffs[i] * v[i];
				mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[i].get_mpz_t());
			}
			CHECK_EQ(dot, r.g);
			CHECK_EQ(g, r.g);
		}
	}
}

TEST_SUITE("smith normal form")
{
	TEST_CASE("pinned 2x3 case")
	{
		IntMatrix a(2, 3, {1, 2, 3, 4, 5, 6});
		auto f = invariant_factors(a);
		REQUIRE_EQ(f.size(), 2);
		CHECK_EQ(f[0], 1);
		CHECK_EQ(f[1], 3);
	}

	TEST_CASE("transforms certify the form")
	{
		testutil::Rng rng(23);
		for (int it = 0; it < 120; ++it) {
			int rows = (int)rng.pick(1, 4), cols = (int)rng.pick(1, 4);
			IntMatrix a = random_matrix(rng, rows, cols, 12);
			SmithNF s = smith_normal_form(a);
			CHECK_EQ(multiply(multiply(s.u, a), s.v), s.d);
			CHECK(is_diagonal_chain(s.d));
			Int du = determinant(s.u), dv = determinant(s.v);
			CHECK((du == 1 || du == -1));
			CHECK((dv == 1 || dv == -1));
		}
	}

	TEST_CASE("zero and identity")
	{
		CHECK_EQ(invariant_factors(IntMatrix(2, 2)), std::vector<Int>{0, 0});
		CHECK_EQ(invariant_factors(IntMatrix::identity(3)),
		         std::vector<Int>{1, 1, 1});
	}
}

TEST_SUITE("determinant")
{
	TEST_CASE("small cases")
	{
		CHECK_EQ(determinant(IntMatrix(2, 2, {1, 2, 3, 4})), -2);
		CHECK_EQ(determinant(IntMatrix(3, 3, {2, 0, 0, 0, 3, 0, 0, 0, 5})), 30);
		CHECK_EQ(determinant(IntMatrix(2, 2, {0, 1, 1, 0})), -1);
		CHECK_EQ(determinant(IntMatrix(2, 2, {1, 2, 2, 4})), 0);
		CHECK_EQ(determinant(IntMatrix(0, 0)), 1);
		CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), std::invalid_argument);
	}

	TEST_CASE("multiplicative on random pairs")
	{
		testutil::Rng rng(5);
		for (int it = 0; it < 60; ++it) {
			int n = (int)rng.pick(1, 4);
			IntMatrix a = random_matrix(rng, n, n, 9);
			IntMatrix b = random_matrix(rng, n, n, 9);
			CHECK_EQ(determinant(multiply(a, b)),
			         determinant(a) * determinant(b));
		}
	}
}

TEST_SUITE("primitivity and summands")
{
	TEST_CASE("is_primitive")
	{
		CHECK(is_primitive({2, 3}));
		CHECK(is_primitive({-1}));
		CHECK_FALSE(is_primitive({2, 4}));
		CHECK_FALSE(is_primitive({0, 0}));
		CHECK_FALSE(is_primitive({}));
		CHECK(is_primitive({6, 10, 15}));
	}

	TEST_CASE("is_rank2_direct_summand")
	{
		CHECK(is_rank2_direct_summand(IntMatrix(2, 2, {1, 0, 0, 1})));
		CHECK(is_rank2_direct_summand(IntMatrix(2, 3, {1, 0, 0, 0, 1, 0})));
		CHECK(is_rank2_direct_summand(IntMatrix(2, 2, {2, 3, 1, 2})));
		// det 2: index-2 subgroup, not a summand
		CHECK_FALSE(is_rank2_direct_summand(IntMatrix(2, 2, {2, 0, 0, 1})));
		// rank 1
		CHECK_FALSE(is_rank2_direct_summand(IntMatrix(2, 2, {1, 2, 2, 4})));
		CHECK_FALSE(is_rank2_direct_summand(IntMatrix(2, 1, {1, 0})));
		CHECK_THROWS_AS(is_rank2_direct_summand(IntMatrix(3, 3)),
		                std::invalid_argument);
	}

	TEST_CASE("unimodular_completion preserves the rows")
	{
		testutil::Rng rng(31);
		int done = 0;
		for (int it = 0; done < 60 && it < 4000; ++it) {
			int r = (int)rng.pick(2, 5);
			IntMatrix a = random_matrix(rng, 2, r, 6);
			if (!is_rank2_direct_summand(a))
				continue;
			++done;
			IntMatrix c = unimodular_completion(a);
			REQUIRE_EQ(c.rows(), r);
			for (int j = 0; j < r; ++j) {
				CHECK_EQ(c.at(0, j), a.at(0, j));
				CHECK_EQ(c.at(1, j), a.at(1, j));
			}
			Int det = determinant(c);
			CHECK((det == 1 || det == -1));
		}
		CHECK_EQ(done, 60);
		CHECK_THROWS_AS(unimodular_completion(IntMatrix(2, 2, {2, 0, 0, 1})),
		                std::invalid_argument);
	}
}

TEST_SUITE("integer solve")
{
	TEST_CASE("solvable systems")
	{
		IntMatrix a(2, 2, {2, 1, 1, 1});
		auto x = solve_integer(a, {3, 2});
		REQUIRE(x.has_value());
		CHECK_EQ((*x)[0] * 2 + (*x)[1], 3);
		CHECK_EQ((*x)[0] + (*x)[1], 2);
	}

	TEST_CASE("unsolvable systems")
	{
		CHECK_FALSE(solve_integer(IntMatrix(1, 1, {2}), {3}).has_value());
		CHECK_FALSE(solve_integer(IntMatrix(2, 1, {1, 1}), {1, 2}).has_value());
		CHECK(solve_integer(IntMatrix(2, 1, {1, 1}), {2, 2}).has_value());
	}

	TEST_CASE("random consistency: a*x == b whenever a solution is claimed")
	{
		testutil::Rng rng(17);
		int claimed = 0;
		for (int it = 0; it < 200; ++it) {
			int rows = (int)rng.pick(1, 3), cols = (int)rng.pick(1, 4);
			IntMatrix a = random_matrix(rng, rows, cols, 6);
			// build b = a * t for a random integer t so a solution exists
			std::vector<Int> t(cols), b(rows, Int(0));
			for (auto &e : t)
				e = rng.pick(-5, 5);
			for (int i = 0; i < rows; ++i)
				for (int j = 0; j < cols; ++j)
					b[i] += a.at(i, j) * t[j];
			auto x = solve_integer(a, b);
			REQUIRE(x.has_value());
			++claimed;
			for (int i = 0; i < rows; ++i) {
				Int acc = 0;
				for (int j = 0; j < cols; ++j)
					acc += a.at(i, j) * (*x)[j];
				CHECK_EQ(acc, b[i]);
			}
		}
		CHECK_EQ(claimed, 200);
	}
}
