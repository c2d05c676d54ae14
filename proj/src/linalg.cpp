#include "solvgrp/linalg.hpp"

#include <stdexcept>

namespace solvgrp {

IntMatrix::IntMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_((size_t)rows * cols, Int(0))
{
	if (rows < 0 || cols < 0)
		throw std::invalid_argument("matrix dimensions must be nonnegative");
}

IntMatrix::IntMatrix(int rows, int cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries))
{
	if (entries_.size() != (size_t)rows * cols)
		throw std::invalid_argument("matrix entry count mismatch");
}

IntMatrix IntMatrix::identity(int n)
{
	IntMatrix m(n, n);
	for (int i = 0; i < n; ++i)
		m.at(i, i) = 1;
	return m;
}

ExpVec IntMatrix::row(int i) const
{
	return ExpVec(entries_.begin() + (size_t)i * cols_,
	              entries_.begin() + (size_t)(i + 1) * cols_);
}

void IntMatrix::swap_rows(int i, int j)
{
	if (i == j)
		return;
	for (int c = 0; c < cols_; ++c)
		std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(int i, int j)
{
	if (i == j)
		return;
	for (int r = 0; r < rows_; ++r)
		std::swap(at(r, i), at(r, j));
}

void IntMatrix::add_row(int dst, int src, const Int &c)
{
	for (int k = 0; k < cols_; ++k)
		at(dst, k) += c * at(src, k);
}

void IntMatrix::add_col(int dst, int src, const Int &c)
{
	for (int k = 0; k < rows_; ++k)
		at(k, dst) += c * at(k, src);
}

void IntMatrix::negate_row(int i)
{
	for (int c = 0; c < cols_; ++c)
		at(i, c) = -at(i, c);
}

void IntMatrix::negate_col(int j)
{
	for (int r = 0; r < rows_; ++r)
		at(r, j) = -at(r, j);
}

IntMatrix multiply(const IntMatrix &a, const IntMatrix &b)
{
	if (a.cols() != b.rows())
		throw std::invalid_argument("matrix product shape mismatch");
	IntMatrix out(a.rows(), b.cols());
	for (int i = 0; i < a.rows(); ++i)
		for (int k = 0; k < a.cols(); ++k) {
			const Int &aik = a.at(i, k);
			if (aik == 0)
				continue;
			for (int j = 0; j < b.cols(); ++j)
				out.at(i, j) += aik * b.at(k, j);
		}
	return out;
}

ExtGcd ext_gcd(const std::vector<Int> &v)
{
	if (v.empty())
		throw std::invalid_argument("ext_gcd of empty vector");
	ExtGcd r;
	r.coeffs.assign(v.size(), Int(0));
	r.g = abs(v[0]);
	r.coeffs[0] = v[0] < 0 ? -1 : (v[0] > 0 ? 1 : 0);
	for (size_t i = 1; i < v.size(); ++i) {
		if (v[i] == 0)
			continue;
		if (r.g == 0) {
			r.g = abs(v[i]);
			r.coeffs[i] = v[i] < 0 ? -1 : 1;
			continue;
		}
		Int g, s, t;
		mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
		           r.g.get_mpz_t(), v[i].get_mpz_t());
		for (size_t j = 0; j < i; ++j)
			r.coeffs[j] *= s;
		r.coeffs[i] = t;
		r.g = g;
	}
	return r;
}

namespace {

// Position of a nonzero entry of minimal absolute value in the submatrix
// starting at (k,k), or nullopt if that block is zero.
std::optional<std::pair<int, int>> min_pivot(const IntMatrix &m, int k)
{
	std::optional<std::pair<int, int>> best;
	Int best_abs = 0;
	for (int i = k; i < m.rows(); ++i)
		for (int j = k; j < m.cols(); ++j) {
			const Int &e = m.at(i, j);
			if (e == 0)
				continue;
			Int a = abs(e);
			if (!best || a < best_abs) {
				best = {{i, j}};
				best_abs = a;
			}
		}
	return best;
}

} // namespace

SmithNF smith_normal_form(const IntMatrix &a)
{
	SmithNF s;
	s.d = a;
	s.u = IntMatrix::identity(a.rows());
	s.v = IntMatrix::identity(a.cols());
	IntMatrix &d = s.d;
	const int n = std::min(a.rows(), a.cols());

	for (int k = 0; k < n; ++k) {
		for (;;) {
			auto p = min_pivot(d, k);
			if (!p)
				goto done; // remaining block is zero
			d.swap_rows(k, p->first);
			s.u.swap_rows(k, p->first);
			d.swap_cols(k, p->second);
			s.v.swap_cols(k, p->second);

			bool dirty = false;
			for (int i = k + 1; i < d.rows(); ++i) {
				if (d.at(i, k) == 0)
					continue;
				Int q = d.at(i, k) / d.at(k, k); // C++ truncation; remainder stays small
				d.add_row(i, k, -q);
				s.u.add_row(i, k, -q);
				if (d.at(i, k) != 0)
					dirty = true;
			}
			for (int j = k + 1; j < d.cols(); ++j) {
				if (d.at(k, j) == 0)
					continue;
				Int q = d.at(k, j) / d.at(k, k);
				d.add_col(j, k, -q);
				s.v.add_col(j, k, -q);
				if (d.at(k, j) != 0)
					dirty = true;
			}
			if (dirty)
				continue; // smaller pivot now exists

			// Row and column are clear; force divisibility of the rest.
			bool fixed = false;
			for (int i = k + 1; i < d.rows() && !fixed; ++i)
				for (int j = k + 1; j < d.cols() && !fixed; ++j)
					if (d.at(i, j) % d.at(k, k) != 0) {
						d.add_row(k, i, 1);
						s.u.add_row(k, i, 1);
						fixed = true;
					}
			if (!fixed)
				break;
		}
		if (d.at(k, k) < 0) {
			d.negate_row(k);
			s.u.negate_row(k);
		}
	}
done:
	for (int k = 0; k < n; ++k)
		if (d.at(k, k) < 0) {
			d.negate_row(k);
			s.u.negate_row(k);
		}
	return s;
}

std::vector<Int> invariant_factors(const IntMatrix &a)
{
	SmithNF s = smith_normal_form(a);
	const int n = std::min(a.rows(), a.cols());
	std::vector<Int> f(n);
	for (int k = 0; k < n; ++k)
		f[k] = s.d.at(k, k);
	return f;
}

Int determinant(const IntMatrix &a)
{
	if (a.rows() != a.cols())
		throw std::invalid_argument("determinant of non-square matrix");
	if (a.rows() == 0)
		return 1;

	// Fraction-free Gaussian elimination (Bareiss).
	IntMatrix m = a;
	const int n = m.rows();
	Int sign = 1, prev = 1;
	for (int k = 0; k + 1 < n; ++k) {
		if (m.at(k, k) == 0) {
			int p = -1;
			for (int i = k + 1; i < n; ++i)
				if (m.at(i, k) != 0) {
					p = i;
					break;
				}
			if (p < 0)
				return 0;
			m.swap_rows(k, p);
			sign = -sign;
		}
		for (int i = k + 1; i < n; ++i)
			for (int j = k + 1; j < n; ++j) {
				Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
				mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(),
				             prev.get_mpz_t());
			}
		prev = m.at(k, k);
	}
	return sign * m.at(n - 1, n - 1);
}

bool is_primitive(const ExpVec &v)
{
	if (v.empty())
		return false;
	Int g = 0;
	for (const Int &x : v) {
		mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
		if (g == 1)
			return true;
	}
	return g == 1;
}

bool is_rank2_direct_summand(const IntMatrix &a)
{
	if (a.rows() != 2)
		throw std::invalid_argument("expected a 2-row matrix");
	if (a.cols() < 2)
		return false;
	auto f = invariant_factors(a);
	return f[0] == 1 && f[1] == 1;
}

IntMatrix invert_unimodular(const IntMatrix &a)
{
	if (a.rows() != a.cols())
		throw std::invalid_argument("matrix is not square");
	// u * a * v = I for a unimodular a, so a^-1 = v * u.
	SmithNF s = smith_normal_form(a);
	for (int k = 0; k < a.rows(); ++k)
		if (s.d.at(k, k) != 1)
			throw std::invalid_argument("matrix is not unimodular");
	return multiply(s.v, s.u);
}

IntMatrix unimodular_completion(const IntMatrix &a)
{
	if (!is_rank2_direct_summand(a))
		throw std::invalid_argument("rows do not span a rank-2 direct summand");
	const int r = a.cols();
	SmithNF s = smith_normal_form(a); // u * a * v = [I_2 | 0]

	// a = u^-1 * [I_2 | 0] * v^-1, so the first two rows of v^-1 are
	// u * a; replacing them by the rows of a keeps the determinant a unit
	// (the change of basis is block-triangular with det(u^-1) = ±1).
	// Remaining rows of v^-1 complete the basis.
	IntMatrix vinv = invert_unimodular(s.v);

	IntMatrix c(r, r);
	for (int j = 0; j < r; ++j) {
		c.at(0, j) = a.at(0, j);
		c.at(1, j) = a.at(1, j);
	}
	for (int i = 2; i < r; ++i)
		for (int j = 0; j < r; ++j)
			c.at(i, j) = vinv.at(i, j);
	Int det = determinant(c);
	if (det != 1 && det != -1)
		throw std::logic_error("completion is not unimodular");
	return c;
}

std::optional<std::vector<Int>> solve_integer(const IntMatrix &a,
                                              const std::vector<Int> &b)
{
	if ((int)b.size() != a.rows())
		throw std::invalid_argument("right-hand side length mismatch");
	SmithNF s = smith_normal_form(a); // u a v = d, solve d y = u b, x = v y
	std::vector<Int> ub(a.rows(), Int(0));
	for (int i = 0; i < a.rows(); ++i)
		for (int j = 0; j < a.rows(); ++j)
			ub[i] += s.u.at(i, j) * b[j];

	const int n = std::min(a.rows(), a.cols());
	std::vector<Int> y(a.cols(), Int(0));
	for (int i = 0; i < a.rows(); ++i) {
		if (i >= n || s.d.at(i, i) == 0) {
			if (ub[i] != 0)
				return std::nullopt;
			continue;
		}
		if (ub[i] % s.d.at(i, i) != 0)
			return std::nullopt;
		y[i] = ub[i] / s.d.at(i, i);
	}
	std::vector<Int> x(a.cols(), Int(0));
	for (int i = 0; i < a.cols(); ++i)
		for (int j = 0; j < a.cols(); ++j)
			x[i] += s.v.at(i, j) * y[j];
	return x;
}

} // namespace solvgrp
