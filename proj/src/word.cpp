#include "solvgrp/word.hpp"

#include <algorithm>
#include <cctype>

namespace solvgrp {

namespace {
// Expanding z^e into e terms (fox geometric sums, word powers) must stay at
// desk scale; past this we fail loudly instead of allocating forever.
constexpr long expansion_cap = 1'000'000;
} // namespace

long checked_long(const Int &a)
{
	if (!a.fits_slong_p() || abs(a) > expansion_cap)
		throw std::overflow_error("exponent " + a.get_str() +
		                          " too large to expand");
	return a.get_si();
}

GroupTag GroupTag::metabelian(int r)
{
	if (r < 1)
		throw std::invalid_argument("group rank must be >= 1");
	return {Family::Metabelian, r, 2};
}

GroupTag GroupTag::solvable(int r, int d)
{
	if (r < 1 || d < 1)
		throw std::invalid_argument("S(r,d) needs r >= 1 and d >= 1");
	return {Family::Solvable, r, d};
}

GroupTag GroupTag::metabelian_nilpotent(int r, int k)
{
	if (r < 1 || k < 1)
		throw std::invalid_argument("MN(r,k) needs r >= 1 and k >= 1");
	return {Family::MetabelianNilpotent, r, k};
}

int GroupTag::derived_length() const
{
	return family == Family::Solvable ? cls : 2;
}

GroupTag parse_group_tag(std::string_view text)
{
	auto fail = [&] {
		throw syntax_error("bad group spec '" + std::string(text) +
		                       "', expected M(r) | S(r,d) | MN(r,k)",
		                   0);
	};
	size_t open = text.find('(');
	if (open == std::string_view::npos || text.back() != ')')
		fail();
	std::string name(text.substr(0, open));
	std::string args(text.substr(open + 1, text.size() - open - 2));
	size_t comma = args.find(',');
	auto to_int = [&](const std::string &s) {
		if (s.empty() ||
		    !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
			fail();
		return std::stoi(s);
	};
	try {
		if (name == "M" && comma == std::string::npos)
			return GroupTag::metabelian(to_int(args));
		if (name == "S" && comma != std::string::npos)
			return GroupTag::solvable(to_int(args.substr(0, comma)),
			                          to_int(args.substr(comma + 1)));
		if (name == "MN" && comma != std::string::npos)
			return GroupTag::metabelian_nilpotent(to_int(args.substr(0, comma)),
			                                      to_int(args.substr(comma + 1)));
	} catch (const std::invalid_argument &e) {
		throw syntax_error(e.what(), 0);
	}
	fail();
	return {}; // unreachable
}

std::string render(const GroupTag &tag)
{
	switch (tag.family) {
	case Family::Metabelian:
		return "M(" + std::to_string(tag.rank) + ")";
	case Family::Solvable:
		return "S(" + std::to_string(tag.rank) + "," + std::to_string(tag.cls) + ")";
	case Family::MetabelianNilpotent:
		return "MN(" + std::to_string(tag.rank) + "," + std::to_string(tag.cls) + ")";
	}
	return {};
}

void Word::push(const Sym &sym, const Int &exp)
{
	if (exp == 0)
		return;
	if (!letters_.empty() && letters_.back().sym == sym) {
		letters_.back().exp += exp;
		if (letters_.back().exp == 0)
			letters_.pop_back();
		return;
	}
	letters_.push_back({sym, exp});
}

Word Word::constant(int rank, int index, Int exp)
{
	if (index < 1 || index > rank)
		throw std::invalid_argument("generator index out of range");
	Word w(rank);
	w.push({false, index}, exp);
	return w;
}

Word Word::variable(int index, Int exp, int rank)
{
	if (index < 1)
		throw std::invalid_argument("variable index must be >= 1");
	Word w(rank);
	w.push({true, index}, exp);
	return w;
}

bool Word::has_variables() const
{
	return std::any_of(letters_.begin(), letters_.end(),
	                   [](const Letter &l) { return l.sym.is_var; });
}

int Word::max_variable() const
{
	int m = 0;
	for (auto &l : letters_)
		if (l.sym.is_var)
			m = std::max(m, l.sym.index);
	return m;
}

Int Word::weight() const
{
	Int w = 0;
	for (auto &l : letters_)
		w += abs(l.exp);
	return w;
}

Word Word::with_rank(int rank) const
{
	for (auto &l : letters_)
		if (!l.sym.is_var && l.sym.index > rank)
			throw std::invalid_argument("constant index exceeds new rank");
	Word w = *this;
	w.rank_ = rank;
	return w;
}

int cmp(const Word &a, const Word &b)
{
	if (a.rank() != b.rank())
		return a.rank() < b.rank() ? -1 : 1;
	const auto &la = a.letters(), &lb = b.letters();
	for (size_t i = 0; i < std::min(la.size(), lb.size()); ++i) {
		if (la[i].sym != lb[i].sym)
			return la[i].sym < lb[i].sym ? -1 : 1;
		if (int c = cmp(la[i].exp, lb[i].exp); c != 0)
			return c;
	}
	if (la.size() != lb.size())
		return la.size() < lb.size() ? -1 : 1;
	return 0;
}

Word multiply(const Word &u, const Word &v)
{
	if (u.rank() != v.rank())
		throw std::invalid_argument("word rank mismatch");
	Word w = u;
	for (auto &l : v.letters_)
		w.push(l.sym, l.exp);
	return w;
}

Word inverse(const Word &u)
{
	Word w(u.rank());
	for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it)
		w.push(it->sym, -it->exp);
	return w;
}

Word conjugate(const Word &u, const Word &t)
{
	return multiply(multiply(inverse(t), u), t);
}

Word word_pow(const Word &u, const Int &e)
{
	long n = checked_long(e);
	Word base = n < 0 ? inverse(u) : u;
	Word w(u.rank());
	for (long i = 0; i < std::abs(n); ++i)
		w = multiply(w, base);
	return w;
}

Word commutator(const Word &u, const Word &v)
{
	return multiply(multiply(inverse(u), inverse(v)), multiply(u, v));
}

Word left_normed(std::span<const Word> args)
{
	if (args.size() < 2)
		throw std::invalid_argument("left_normed needs at least 2 arguments");
	Word w = commutator(args[0], args[1]);
	for (size_t i = 2; i < args.size(); ++i)
		w = commutator(w, args[i]);
	return w;
}

Word left_normed(std::initializer_list<Word> args)
{
	return left_normed(std::span<const Word>(args.begin(), args.size()));
}

Word engel_z(int k, int l, const Word &x, const Word &y)
{
	if (k < 1 || l < 1)
		throw std::invalid_argument("engel parameters must be >= 1");
	std::vector<Word> args;
	args.push_back(y);
	args.insert(args.end(), k, x);
	args.insert(args.end(), l - 1, y);
	if (args.size() == 1)
		return Word(x.rank()); // unreachable: k >= 1 gives size >= 2
	return left_normed(args);
}

Word build_w(int k, int l, int m, int n, const Word &x, const Word &y)
{
	return commutator(engel_z(k, l, x, y), engel_z(m, n, x, y));
}

Word substitute(const Word &tpl, std::span<const Word> assignment)
{
	int rank = tpl.rank();
	for (auto &a : assignment) {
		if (&a == &assignment.front())
			rank = std::max(rank, a.rank());
		else if (a.rank() != assignment.front().rank())
			throw std::invalid_argument("assignment words have mixed ranks");
	}
	if (!assignment.empty() && tpl.rank() > assignment.front().rank())
		throw std::invalid_argument("template rank exceeds assignment rank");
	Word w(rank);
	for (auto &l : tpl.letters()) {
		if (!l.sym.is_var) {
			w.push(l.sym, l.exp);
			continue;
		}
		if (l.sym.index > (int)assignment.size())
			throw std::invalid_argument("unassigned variable x" +
			                            std::to_string(l.sym.index));
		const Word &img = assignment[l.sym.index - 1];
		long e = checked_long(l.exp);
		const Word rep = e < 0 ? inverse(img) : img;
		for (long i = 0; i < std::abs(e); ++i)
			for (auto &m : rep.letters())
				w.push(m.sym, m.exp);
	}
	return w;
}

Word substitute(const Word &tpl, std::initializer_list<Word> assignment)
{
	return substitute(tpl, std::span<const Word>(assignment.begin(), assignment.size()));
}

Word derived_law_word(int s)
{
	if (s < 1)
		throw std::invalid_argument("derived law class must be >= 1");
	if (s == 1)
		return commutator(Word::variable(1), Word::variable(2));
	Word prev = derived_law_word(s - 1);
	int half = 1 << (s - 1);
	std::vector<Word> shifted;
	shifted.reserve(half);
	for (int i = 1; i <= half; ++i)
		shifted.push_back(Word::variable(half + i));
	return commutator(prev, substitute(prev, shifted));
}

namespace {

struct Parser
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

	Word atom()
	{
		char c = peek();
		if (c == 'z' || c == 'x') {
			++pos;
			Int idx = integer(false);
			if (!idx.fits_sint_p() || idx < 1)
				fail("bad generator index");
			int i = (int)idx.get_si();
			if (c == 'z') {
				if (i > rank)
					fail("generator z" + std::to_string(i) + " out of range");
				return Word::constant(rank, i);
			}
			return Word::variable(i, 1, rank);
		}
		if (c == '1') {
			++pos;
			return Word(rank);
		}
		if (c == '(') {
			++pos;
			std::vector<Word> parts;
			parts.push_back(expr());
			while (peek() == ',') {
				++pos;
				parts.push_back(expr());
			}
			if (peek() != ')')
				fail("expected ')' or ','");
			++pos;
			if (parts.size() < 2)
				fail("commutator needs at least 2 parts");
			return left_normed(parts);
		}
		fail("expected 'z', 'x', '1' or '('");
	}

	Word factor()
	{
		Word a = atom();
		if (peek() == '^') {
			++pos;
			Int e = integer(true);
			return word_pow(a, e);
		}
		return a;
	}

	Word expr()
	{
		Word w = factor();
		while (peek() == '*') {
			++pos;
			w = multiply(w, factor());
		}
		return w;
	}
};

} // namespace

Word parse_word(std::string_view text, int rank)
{
	if (rank < 0)
		throw std::invalid_argument("rank must be >= 0");
	Parser p{text, 0, rank};
	Word w = p.expr();
	if (p.peek() != '\0')
		p.fail("unexpected trailing input");
	return w;
}

std::string render(const Word &w)
{
	if (w.empty())
		return "1";
	std::string out;
	for (auto &l : w.letters()) {
		if (!out.empty())
			out += '*';
		out += l.sym.is_var ? 'x' : 'z';
		out += std::to_string(l.sym.index);
		if (l.exp != 1) {
			out += '^';
			out += l.exp.get_str();
		}
	}
	return out;
}

} // namespace solvgrp
