#include "solvgrp/laurent.hpp"

#include <cctype>
#include <stdexcept>

#include "solvgrp/word.hpp" // syntax_error

namespace solvgrp {

namespace {

Int abs_grade(const ExpVec &v)
{
	Int g = 0;
	for (const Int &e : v)
		g += abs(e);
	return g;
}

void check_rank(const ExpVec &v, int rank)
{
	if ((int)v.size() != rank)
		throw std::invalid_argument("exponent vector length mismatch");
}

} // namespace

bool GradedLex::operator()(const ExpVec &a, const ExpVec &b) const
{
	if (int c = cmp(abs_grade(a), abs_grade(b)); c != 0)
		return c < 0;
	return cmp(a, b) < 0;
}

LaurentPoly LaurentPoly::constant(int rank, const Int &c)
{
	LaurentPoly p(rank);
	p.add_term(ExpVec(rank, Int(0)), c);
	return p;
}

LaurentPoly LaurentPoly::monomial(const ExpVec &v, const Int &c)
{
	LaurentPoly p((int)v.size());
	p.add_term(v, c);
	return p;
}

LaurentPoly LaurentPoly::gen(int rank, int index, const Int &exp)
{
	if (index < 1 || index > rank)
		throw std::invalid_argument("variable index out of range");
	ExpVec v(rank, Int(0));
	v[index - 1] = exp;
	return monomial(v);
}

Int LaurentPoly::coeff(const ExpVec &v) const
{
	auto it = terms_.find(v);
	return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly::add_term(const ExpVec &v, const Int &c)
{
	check_rank(v, rank_);
	if (c == 0)
		return;
	auto [it, fresh] = terms_.try_emplace(v, c);
	if (!fresh) {
		it->second += c;
		if (it->second == 0)
			terms_.erase(it);
	}
}

LaurentPoly add(const LaurentPoly &p, const LaurentPoly &q)
{
	if (p.rank() != q.rank())
		throw std::invalid_argument("polynomial rank mismatch");
	LaurentPoly r = p;
	for (auto &[v, c] : q.terms())
		r.add_term(v, c);
	return r;
}

LaurentPoly neg(const LaurentPoly &p)
{
	LaurentPoly r(p.rank());
	for (auto &[v, c] : p.terms())
		r.add_term(v, -c);
	return r;
}

LaurentPoly sub(const LaurentPoly &p, const LaurentPoly &q)
{
	return add(p, neg(q));
}

LaurentPoly mul(const LaurentPoly &p, const LaurentPoly &q)
{
	if (p.rank() != q.rank())
		throw std::invalid_argument("polynomial rank mismatch");
	LaurentPoly r(p.rank());
	for (auto &[u, a] : p.terms())
		for (auto &[v, b] : q.terms()) {
			ExpVec w(u.size());
			for (size_t i = 0; i < u.size(); ++i)
				w[i] = u[i] + v[i];
			r.add_term(w, a * b);
		}
	return r;
}

LaurentPoly mul(const Int &c, const LaurentPoly &p)
{
	LaurentPoly r(p.rank());
	for (auto &[v, a] : p.terms())
		r.add_term(v, c * a);
	return r;
}

Int augmentation(const LaurentPoly &p)
{
	Int s = 0;
	for (auto &[v, c] : p.terms())
		s += c;
	return s;
}

void TruncatedSeries::add_term(const ExpVec &v, const Int &c)
{
	check_rank(v, rank_);
	if (c == 0 || abs_grade(v) >= bound_)
		return;
	auto [it, fresh] = terms_.try_emplace(v, c);
	if (!fresh) {
		it->second += c;
		if (it->second == 0)
			terms_.erase(it);
	}
}

TruncatedSeries::TermMap TruncatedSeries::homogeneous_component(int deg) const
{
	TermMap out;
	for (auto &[v, c] : terms_)
		if (abs_grade(v) == deg)
			out.emplace(v, c);
	return out;
}

TruncatedSeries add(const TruncatedSeries &a, const TruncatedSeries &b)
{
	if (a.rank() != b.rank() || a.bound() != b.bound())
		throw std::invalid_argument("series shape mismatch");
	TruncatedSeries r = a;
	for (auto &[v, c] : b.terms())
		r.add_term(v, c);
	return r;
}

TruncatedSeries neg(const TruncatedSeries &a)
{
	TruncatedSeries r(a.rank(), a.bound());
	for (auto &[v, c] : a.terms())
		r.add_term(v, -c);
	return r;
}

TruncatedSeries mul(const TruncatedSeries &a, const TruncatedSeries &b)
{
	if (a.rank() != b.rank() || a.bound() != b.bound())
		throw std::invalid_argument("series shape mismatch");
	TruncatedSeries r(a.rank(), a.bound());
	for (auto &[u, x] : a.terms())
		for (auto &[v, y] : b.terms()) {
			ExpVec w(u.size());
			for (size_t i = 0; i < u.size(); ++i)
				w[i] = u[i] + v[i];
			r.add_term(w, x * y); // add_term drops overflowing degrees
		}
	return r;
}

TruncatedSeries expand_at_one(const LaurentPoly &p, int bound)
{
	if (bound < 0)
		throw std::invalid_argument("truncation bound must be >= 0");
	const int rank = p.rank();
	TruncatedSeries out(rank, bound);
	for (auto &[v, c] : p.terms()) {
		// (1+t_1)^{v_1} ... (1+t_r)^{v_r}, truncated as we go.
		TruncatedSeries term(rank, bound);
		term.add_term(ExpVec(rank, Int(0)), c);
		for (int i = 0; i < rank; ++i) {
			if (v[i] == 0)
				continue;
			TruncatedSeries binom(rank, bound);
			for (int j = 0; j < bound; ++j) {
				Int b;
				mpz_bin_ui(b.get_mpz_t(), v[i].get_mpz_t(), (unsigned long)j);
				ExpVec e(rank, Int(0));
				e[i] = j;
				binom.add_term(e, b);
			}
			term = mul(term, binom);
		}
		out = add(out, term);
	}
	return out;
}

bool in_aug_power(const LaurentPoly &p, int m)
{
	if (m < 0)
		throw std::invalid_argument("ideal power must be >= 0");
	if (m == 0)
		return true;
	return expand_at_one(p, m).is_zero();
}

LaurentPoly poly_of_series(const TruncatedSeries &s)
{
	const int rank = s.rank();
	LaurentPoly out(rank);
	for (auto &[v, c] : s.terms()) {
		LaurentPoly term = LaurentPoly::constant(rank, c);
		for (int i = 0; i < rank; ++i) {
			if (v[i] == 0)
				continue;
			LaurentPoly xm1 =
			    sub(LaurentPoly::gen(rank, i + 1), LaurentPoly::constant(rank, 1));
			long e = checked_long(v[i]);
			for (long j = 0; j < e; ++j)
				term = mul(term, xm1);
		}
		out = add(out, term);
	}
	return out;
}

LaurentPoly aug_power_rep(const LaurentPoly &p, int m)
{
	return poly_of_series(expand_at_one(p, m));
}

std::string render(const LaurentPoly &p)
{
	if (p.is_zero())
		return "0";
	std::string out;
	for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
		const auto &[v, c] = *it;
		bool negative = c < 0;
		Int mag = abs(c);
		if (out.empty())
			out += negative ? "-" : "";
		else
			out += negative ? " - " : " + ";
		std::string mono;
		for (size_t i = 0; i < v.size(); ++i) {
			if (v[i] == 0)
				continue;
			if (!mono.empty())
				mono += '*';
			mono += 'x' + std::to_string(i + 1);
			if (v[i] != 1)
				mono += '^' + v[i].get_str();
		}
		if (mono.empty())
			out += mag.get_str();
		else if (mag == 1)
			out += mono;
		else
			out += mag.get_str() + "*" + mono;
	}
	return out;
}

namespace {

struct LaurentParser
{
	std::string_view text;
	size_t pos = 0;
	int rank;

	void skip_ws()
	{
		while (pos < text.size() && std::isspace((unsigned char)text[pos]))
			++pos;
	}

	char peek()
	{
		skip_ws();
		return pos < text.size() ? text[pos] : '\0';
	}

	[[noreturn]] void fail(const std::string &msg)
	{
		throw syntax_error(msg + " at position " + std::to_string(pos), pos);
	}

	Int integer(bool allow_sign)
	{
		skip_ws();
		size_t start = pos;
		if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+'))
			++pos;
		size_t digits = pos;
		while (pos < text.size() && std::isdigit((unsigned char)text[pos]))
			++pos;
		if (pos == digits)
			fail("expected integer");
		return Int(std::string(text.substr(start, pos - start)));
	}

	// [INT] ["*"] ("x"INT["^"SIGNED_INT])*  with at least one part
	LaurentPoly term()
	{
		Int coeff = 1;
		ExpVec v(rank, Int(0));
		bool saw = false;
		if (std::isdigit((unsigned char)peek())) {
			coeff = integer(false);
			saw = true;
			if (peek() == '*')
				++pos;
		}
		while (peek() == 'x') {
			++pos;
			Int idx = integer(false);
			if (!idx.fits_sint_p() || idx < 1 || idx > rank)
				fail("variable index out of range");
			Int e = 1;
			if (peek() == '^') {
				++pos;
				e = integer(true);
			}
			v[idx.get_si() - 1] += e;
			saw = true;
			if (peek() == '*')
				++pos;
		}
		if (!saw)
			fail("expected term");
		return LaurentPoly::monomial(v, coeff);
	}

	LaurentPoly sum()
	{
		LaurentPoly out(rank);
		bool negate = false;
		if (peek() == '-') {
			++pos;
			negate = true;
		} else if (peek() == '+') {
			++pos;
		}
		for (;;) {
			LaurentPoly t = term();
			out = add(out, negate ? neg(t) : t);
			char c = peek();
			if (c == '+')
				negate = false;
			else if (c == '-')
				negate = true;
			else
				break;
			++pos;
		}
		return out;
	}
};

} // namespace

LaurentPoly parse_laurent(std::string_view text, int rank)
{
	if (rank < 0)
		throw std::invalid_argument("rank must be >= 0");
	LaurentParser p{text, 0, rank};
	LaurentPoly out = p.sum();
	if (p.peek() != '\0')
		p.fail("unexpected trailing input");
	return out;
}

} // namespace solvgrp
