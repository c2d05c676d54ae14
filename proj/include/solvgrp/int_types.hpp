#pragma once

#include <gmpxx.h>
#include <string>
#include <vector>

namespace solvgrp {

// Exact arbitrary-precision integer. Everything in this library that could
// overflow a machine word (exponents, matrix entries, ring coefficients)
// goes through this type.
using Int = mpz_class;

// Exponent vector in Z^r.
using ExpVec = std::vector<Int>;

inline int cmp(const Int &a, const Int &b) { return ::cmp(a, b); }

inline int cmp(const ExpVec &a, const ExpVec &b)
{
	if (a.size() != b.size())
		return a.size() < b.size() ? -1 : 1;
	for (size_t i = 0; i < a.size(); ++i)
		if (int c = cmp(a[i], b[i]); c != 0)
			return c;
	return 0;
}

inline bool is_zero(const ExpVec &v)
{
	for (auto &e : v)
		if (e != 0)
			return false;
	return true;
}

inline std::string to_string(const Int &a) { return a.get_str(); }

// |a| fits in long, else throws. Used before expanding powers into terms.
long checked_long(const Int &a);

} // namespace solvgrp
