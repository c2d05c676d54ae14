#pragma once

#include "solvgrp/int_types.hpp"
#include <optional>

namespace solvgrp {

// Dense integer matrix, row-major, arbitrary-precision entries.
class IntMatrix
{
  public:
	IntMatrix() = default;
	IntMatrix(int rows, int cols);
	IntMatrix(int rows, int cols, std::vector<Int> entries);
	static IntMatrix identity(int n);

	int rows() const { return rows_; }
	int cols() const { return cols_; }
	Int &at(int i, int j) { return entries_[(size_t)i * cols_ + j]; }
	const Int &at(int i, int j) const { return entries_[(size_t)i * cols_ + j]; }
	const std::vector<Int> &entries() const { return entries_; }

	ExpVec row(int i) const;
	void swap_rows(int i, int j);
	void swap_cols(int i, int j);
	void add_row(int dst, int src, const Int &c); // row dst += c * row src
	void add_col(int dst, int src, const Int &c);
	void negate_row(int i);
	void negate_col(int j);

	bool operator==(const IntMatrix &) const = default;

  private:
	int rows_ = 0, cols_ = 0;
	std::vector<Int> entries_;
};

IntMatrix multiply(const IntMatrix &a, const IntMatrix &b);
Int determinant(const IntMatrix &a); // square only

struct ExtGcd
{
	Int g;                     // gcd >= 0
	std::vector<Int> coeffs;   // sum v_i * coeffs_i = g
};

// Extended gcd of a nonempty vector; gcd of the zero vector is 0.
ExtGcd ext_gcd(const std::vector<Int> &v);

struct SmithNF
{
	IntMatrix d; // diagonal, d_1 | d_2 | ..., all >= 0
	IntMatrix u; // unimodular, u * a * v = d
	IntMatrix v;
};

SmithNF smith_normal_form(const IntMatrix &a);

// Invariant factors of the Smith form, zeros included, length min(rows,cols).
std::vector<Int> invariant_factors(const IntMatrix &a);

// gcd of the entries is exactly 1 (false for the zero vector).
bool is_primitive(const ExpVec &v);

// Rows of a 2 x r matrix span a rank-2 direct summand of Z^r, i.e. the
// Smith form is diag(1,1).
bool is_rank2_direct_summand(const IntMatrix &a);

// Extends the rows of a 2 x r direct-summand matrix to a matrix in GL_r(Z).
IntMatrix unimodular_completion(const IntMatrix &a);

// Exact inverse of a square matrix with determinant ±1.
IntMatrix invert_unimodular(const IntMatrix &a);

// One integer solution x of a*x = b, if any.
std::optional<std::vector<Int>> solve_integer(const IntMatrix &a,
                                              const std::vector<Int> &b);

} // namespace solvgrp
