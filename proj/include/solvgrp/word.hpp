#pragma once

#include "solvgrp/int_types.hpp"
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace solvgrp {

// The groups this library works in: M(r) free metabelian, S(r,d) free
// solvable of derived length <= d, MN(r,k) free metabelian nilpotent of
// class <= k.
enum class Family { Metabelian, Solvable, MetabelianNilpotent };

struct GroupTag
{
	Family family;
	int rank;
	int cls; // d for Solvable, k for MetabelianNilpotent, 2 for Metabelian

	static GroupTag metabelian(int r);
	static GroupTag solvable(int r, int d);
	static GroupTag metabelian_nilpotent(int r, int k);

	// Derived length of the ambient variety: 2 / d / 2.
	int derived_length() const;

	bool operator==(const GroupTag &) const = default;
};

// Parses "M(2)", "S(2,3)", "MN(2,4)".
GroupTag parse_group_tag(std::string_view text);
std::string render(const GroupTag &tag);

struct syntax_error : std::runtime_error
{
	size_t position;
	syntax_error(const std::string &msg, size_t pos)
	    : std::runtime_error(msg), position(pos)
	{}
};

// Constant generators z_1..z_r and variables x_1, x_2, ...
struct Sym
{
	bool is_var;
	int index; // 1-based

	bool operator==(const Sym &) const = default;
	auto operator<=>(const Sym &) const = default;
};

// One run of a freely reduced word: sym^exp with exp != 0.
struct Letter
{
	Sym sym;
	Int exp;

	bool operator==(const Letter &) const = default;
};

// Freely reduced word over z_1..z_rank and variables. Immutable value type;
// all mutating operations return new words.
class Word
{
  public:
	Word() = default;
	explicit Word(int rank) : rank_(rank) {}

	static Word constant(int rank, int index, Int exp = 1);
	static Word variable(int index, Int exp = 1, int rank = 0);

	int rank() const { return rank_; }
	const std::vector<Letter> &letters() const { return letters_; }
	bool empty() const { return letters_.empty(); }

	bool has_variables() const;
	int max_variable() const; // 0 if none
	// Total letter weight sum |exp| (the "length" all budgets refer to).
	Int weight() const;

	// Same letters, larger constant alphabet.
	Word with_rank(int rank) const;

	bool operator==(const Word &) const = default;

  private:
	friend Word multiply(const Word &, const Word &);
	friend Word inverse(const Word &);
	friend Word substitute(const Word &, std::span<const Word>);
	friend Word parse_word(std::string_view, int);
	friend class WordBuilder;

	void push(const Sym &sym, const Int &exp); // reducing append

	int rank_ = 0;
	std::vector<Letter> letters_;
};

int cmp(const Word &a, const Word &b);
inline bool operator<(const Word &a, const Word &b) { return cmp(a, b) < 0; }

Word multiply(const Word &u, const Word &v);
Word inverse(const Word &u);
Word conjugate(const Word &u, const Word &t); // t^-1 u t
Word word_pow(const Word &u, const Int &e);

// (u,v) = u^-1 v^-1 u v
Word commutator(const Word &u, const Word &v);
// (((u_1,u_2),u_3),...,u_n), n >= 2
Word left_normed(std::span<const Word> args);
Word left_normed(std::initializer_list<Word> args);

// Left-normed (y, x,...,x, y,...,y) with k copies of x and l-1 copies of y.
Word engel_z(int k, int l, const Word &x, const Word &y);
// Commutator of the two Engel words z(k;l) and z(m;n).
Word build_w(int k, int l, int m, int n, const Word &x, const Word &y);

// Replaces x_i by assignment[i-1] (raised to the letter's exponent) and
// reduces; constants are kept. All assignment words must share one rank,
// which becomes the rank of the result.
Word substitute(const Word &tpl, std::span<const Word> assignment);
Word substitute(const Word &tpl, std::initializer_list<Word> assignment);

// delta_1 = (x1,x2), delta_{s+1} = (delta_s(x_1..), delta_s(x_{2^s+1}..)),
// the solvable-class-s law word in 2^s variables.
Word derived_law_word(int s);

// Grammar: atom := "z"INT | "x"INT | "1" | "(" expr ("," expr)+ ")" ;
// factor := atom ["^" SIGNED_INT] ; expr := factor ("*" factor)* ;
// whitespace ignored; "(a,b,c)" is the left-normed commutator.
Word parse_word(std::string_view text, int rank);
std::string render(const Word &w);

} // namespace solvgrp
