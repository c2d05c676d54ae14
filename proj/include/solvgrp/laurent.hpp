#pragma once

#include "solvgrp/int_types.hpp"
#include <map>
#include <string>
#include <string_view>

namespace solvgrp {

// Graded lexicographic: total |degree| first, then lex. Gives every
// polynomial one canonical term order (deterministic rendering).
struct GradedLex
{
	bool operator()(const ExpVec &a, const ExpVec &b) const;
};

// Element of Z[x_1^{±1}, ..., x_r^{±1}], sparse exact representation.
class LaurentPoly
{
  public:
	using TermMap = std::map<ExpVec, Int, GradedLex>;

	LaurentPoly() = default;
	explicit LaurentPoly(int rank) : rank_(rank) {}

	static LaurentPoly constant(int rank, const Int &c);
	// c * x^v
	static LaurentPoly monomial(const ExpVec &v, const Int &c = 1);
	// x_index^exp
	static LaurentPoly gen(int rank, int index, const Int &exp = 1);

	int rank() const { return rank_; }
	const TermMap &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	Int coeff(const ExpVec &v) const;

	void add_term(const ExpVec &v, const Int &c);

	bool operator==(const LaurentPoly &) const = default;

  private:
	int rank_ = 0;
	TermMap terms_;
};

LaurentPoly add(const LaurentPoly &p, const LaurentPoly &q);
LaurentPoly sub(const LaurentPoly &p, const LaurentPoly &q);
LaurentPoly neg(const LaurentPoly &p);
LaurentPoly mul(const LaurentPoly &p, const LaurentPoly &q);
LaurentPoly mul(const Int &c, const LaurentPoly &p);

// Coefficient sum = evaluation at x = 1.
Int augmentation(const LaurentPoly &p);

// Polynomial in t_1..t_r with all terms of total degree < bound; the image
// ring of the completion map at truncation order `bound`.
class TruncatedSeries
{
  public:
	using TermMap = std::map<ExpVec, Int, GradedLex>;

	TruncatedSeries() = default;
	TruncatedSeries(int rank, int bound) : rank_(rank), bound_(bound) {}

	int rank() const { return rank_; }
	int bound() const { return bound_; }
	const TermMap &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	// Drops the term silently when its degree reaches the bound.
	void add_term(const ExpVec &v, const Int &c);

	// Terms of exact total degree deg.
	TermMap homogeneous_component(int deg) const;

	bool operator==(const TruncatedSeries &) const = default;

  private:
	int rank_ = 0, bound_ = 0;
	TermMap terms_;
};

TruncatedSeries add(const TruncatedSeries &a, const TruncatedSeries &b);
TruncatedSeries mul(const TruncatedSeries &a, const TruncatedSeries &b);
TruncatedSeries neg(const TruncatedSeries &a);

// Completion map x_i := 1 + t_i truncated below `bound`; negative powers
// expand through the binomial series of (1 + t)^e.
TruncatedSeries expand_at_one(const LaurentPoly &p, int bound);

// p ∈ Δ^m for Δ the augmentation ideal: the truncated completion of p has
// no terms of degree < m.
bool in_aug_power(const LaurentPoly &p, int m);

// Back-substitution t_i := x_i − 1 (exact; result has nonnegative exponents).
LaurentPoly poly_of_series(const TruncatedSeries &s);

// Canonical representative of the coset p + Δ^m: the degree-< m part of the
// completion of p, pushed back through t = x − 1. Depends only on the coset,
// and rep(p) − p ∈ Δ^m.
LaurentPoly aug_power_rep(const LaurentPoly &p, int m);

// "2*x1^-1*x2 - 1"; terms in descending graded-lex order; zero is "0".
std::string render(const LaurentPoly &p);
// Inverse of render; also accepts any sum of [coeff*]x-monomials.
LaurentPoly parse_laurent(std::string_view text, int rank);

} // namespace solvgrp
