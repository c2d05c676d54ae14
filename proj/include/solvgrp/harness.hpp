#pragma once

#include "solvgrp/magnus.hpp"
#include <cstdint>
#include <span>

namespace solvgrp {

// One-sided equation w(x_1..x_n) = h over a group: the left side may use
// variables, the right side is a fixed element.
struct Equation
{
	Word lhs;
	Word rhs; // variable-free
	GroupTag group;
};

// Number of variables of lhs; indices must form a contiguous 1..n range.
int equation_arity(const Word &lhs);

// Constants z_i become variables x_i. The result has rank 0 so it can be
// substituted into any group; use with_rank when mixing with constants.
Word vars_of(const Word &w);

// Value of a word over a two-letter alphabet at the pair (g, f).
Word eval_pair_word(const Word &w2, const Word &g, const Word &f);

// (x2,x1,x1,x2) = (z2,z1,z1,z2), the bracket equation whose solutions pin
// the generators modulo the derived subgroup. Rank >= 2.
Equation standard_bracket_equation(const GroupTag &g);

// (f(x̄), g(x̄), g(x̄), f(x̄)) = (f, g, g, f) for a subgroup pair (g, f).
Equation pair_bracket_equation(const Word &g, const Word &f,
                               const GroupTag &tag);

// u(g(x̄), f(x̄)) = u(g, f) for a two-variable template u.
Equation pair_template_equation(const Word &g, const Word &f,
                                const Word &u_template, const GroupTag &tag);

bool check_solution(const Equation &e, std::span<const Word> assignment);
bool check_solution(const Equation &e, std::initializer_list<Word> assignment);

// All reduced words of at most max_len alphabet letters over the given
// alphabet and its inverses, deduplicated, in length-lexicographic order
// (length, then symbol sequence with s before s^-1 and alphabet order).
std::vector<Word> bounded_alphabet_words(std::span<const Word> alphabet,
                                         int max_len, int rank);

struct SearchResult
{
	std::vector<std::vector<Word>> solutions; // in enumeration order
	bool complete = true; // false iff the candidate budget ran out
	long candidates_tried = 0;
};

// Exhaustive assignment search: every component ranges over
// bounded_alphabet_words; tuples are enumerated by total alphabet length,
// then index-lexicographically. Deterministic.
SearchResult bounded_search(const Equation &e, std::span<const Word> alphabet,
                            int max_len, long budget = 200000);

// True iff the congruence conclusion for bracket-equation solutions is
// established for this group: M(2) or MN(r, k >= 4).
bool bracket_congruence_applies(const GroupTag &g);

// abelianization(g_i) = ±e_i for i = 1, 2.
bool bracket_congruence_check(const Word &g1, const Word &g2,
                              const GroupTag &g);

// The fixed rank-2 test word built from two Engel-type bracket words, as a
// two-variable template and instantiated at (z1, z2). Nontrivial in S(2,3),
// trivial in S(2,2).
Word engel_test_word_template();
Word engel_test_word();

struct ModuleShiftWord
{
	Word word;
	bool nontrivial; // the shifted word could be trivial; flagged, not hidden
};

// v^((1-z1^m)(1-z2^m)) in S(2,d) for v in the last nontrivial derived
// subgroup, v != 1, m >= 1.
ModuleShiftWord module_shift_word(const Word &v, long m, const GroupTag &g);

struct EndoSampleReport
{
	long samples = 0;
	long fixers = 0;            // sampled endomorphisms fixing u
	long unimodular_fixers = 0; // fixers that are automorphisms mod G'
	std::vector<Homomorphism> refutations; // fixers with singular image basis
	std::uint64_t seed = 0;
};

// Samples random endomorphisms (short random images of the generators); any
// endomorphism fixing u whose abelianized matrix is not unimodular refutes
// the test-element property of u. No refutation is evidence only.
EndoSampleReport endo_fixing_sample(const Word &u, const GroupTag &g,
                                    int samples, std::uint64_t seed);

} // namespace solvgrp
