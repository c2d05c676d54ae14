#include "solvgrp/harness.hpp"
#include "solvgrp/linalg.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace solvgrp {

int equation_arity(const Word &lhs)
{
	int n = lhs.max_variable();
	std::vector<char> used((size_t)n + 1, 0);
	for (auto &l : lhs.letters())
		if (l.sym.is_var)
			used[(size_t)l.sym.index] = 1;
	for (int i = 1; i <= n; ++i)
		if (!used[(size_t)i])
			throw std::invalid_argument("equation variables are not a contiguous range");
	return n;
}

Word vars_of(const Word &w)
{
	Word out(0);
	for (auto &l : w.letters()) {
		if (l.sym.is_var)
			throw std::invalid_argument("word already contains variables");
		out = multiply(out, Word::variable(l.sym.index, l.exp, 0));
	}
	return out;
}

Word eval_pair_word(const Word &w2, const Word &g, const Word &f)
{
	if (w2.has_variables())
		throw std::invalid_argument("pair word must be variable-free");
	for (auto &l : w2.letters())
		if (l.sym.index > 2)
			throw std::invalid_argument("pair word uses a letter beyond the two-letter alphabet");
	if (g.rank() != f.rank())
		throw std::invalid_argument("pair components have mixed ranks");
	return substitute(vars_of(w2), {g, f});
}

Equation standard_bracket_equation(const GroupTag &g)
{
	if (g.rank < 2)
		throw std::invalid_argument("bracket equation needs rank >= 2");
	Word x1 = Word::variable(1, 1, g.rank);
	Word x2 = Word::variable(2, 1, g.rank);
	Word z1 = Word::constant(g.rank, 1);
	Word z2 = Word::constant(g.rank, 2);
	return {left_normed({x2, x1, x1, x2}), left_normed({z2, z1, z1, z2}), g};
}

Equation pair_bracket_equation(const Word &g, const Word &f,
                               const GroupTag &tag)
{
	if (g.rank() != tag.rank || f.rank() != tag.rank)
		throw std::invalid_argument("word rank mismatch");
	Word gx = vars_of(g).with_rank(tag.rank);
	Word fx = vars_of(f).with_rank(tag.rank);
	return {left_normed({fx, gx, gx, fx}), left_normed({f, g, g, f}), tag};
}

Equation pair_template_equation(const Word &g, const Word &f,
                                const Word &u_template, const GroupTag &tag)
{
	if (g.rank() != tag.rank || f.rank() != tag.rank)
		throw std::invalid_argument("word rank mismatch");
	if (u_template.max_variable() > 2)
		throw std::invalid_argument("template may use x1 and x2 only");
	Word gx = vars_of(g).with_rank(tag.rank);
	Word fx = vars_of(f).with_rank(tag.rank);
	return {substitute(u_template, {gx, fx}),
	        substitute(u_template, {g, f}), tag};
}

bool check_solution(const Equation &e, std::span<const Word> assignment)
{
	if (e.rhs.has_variables())
		throw std::invalid_argument("equation right side must be variable-free");
	int n = e.lhs.max_variable();
	if ((int)assignment.size() < n)
		throw std::invalid_argument("assignment does not cover the equation variables");
	for (auto &w : assignment)
		if (w.rank() != e.group.rank)
			throw std::invalid_argument("assignment word rank mismatch");
	Word value = assignment.empty()
	                 ? e.lhs.with_rank(e.group.rank)
	                 : substitute(e.lhs, assignment);
	return eq(value, e.rhs.with_rank(e.group.rank), e.group);
}

bool check_solution(const Equation &e, std::initializer_list<Word> assignment)
{
	return check_solution(
	    e, std::span<const Word>(assignment.begin(), assignment.size()));
}

namespace {

struct Candidates
{
	std::vector<Word> words;
	std::vector<int> lengths; // alphabet letters spent on each word
};

Candidates enumerate_alphabet_words(std::span<const Word> alphabet,
                                    int max_len, int rank)
{
	if (max_len < 0)
		throw std::invalid_argument("negative length bound");
	for (auto &a : alphabet)
		if (a.rank() != rank)
			throw std::invalid_argument("alphabet word rank mismatch");
	struct Item
	{
		int last;  // alphabet index of the last symbol, -1 for none
		int sign;  // +1 / -1
		Word value;
	};
	Candidates out;
	std::set<Word> seen;
	auto emit = [&](const Word &w, int len) {
		if (seen.insert(w).second) {
			out.words.push_back(w);
			out.lengths.push_back(len);
		}
	};
	std::vector<Item> frontier{{-1, 0, Word(rank)}};
	emit(frontier.front().value, 0);
	for (int len = 1; len <= max_len; ++len) {
		std::vector<Item> next;
		for (auto &it : frontier)
			for (int i = 0; i < (int)alphabet.size(); ++i)
				for (int s : {1, -1}) {
					if (it.last == i && it.sign == -s)
						continue; // cancels with the previous symbol
					Word v = multiply(it.value, s > 0 ? alphabet[i]
					                                  : inverse(alphabet[i]));
					emit(v, len);
					next.push_back({i, s, std::move(v)});
				}
		frontier = std::move(next);
	}
	return out;
}

} // namespace

std::vector<Word> bounded_alphabet_words(std::span<const Word> alphabet,
                                         int max_len, int rank)
{
	return enumerate_alphabet_words(alphabet, max_len, rank).words;
}

SearchResult bounded_search(const Equation &e, std::span<const Word> alphabet,
                            int max_len, long budget)
{
	int n = equation_arity(e.lhs);
	Candidates c = enumerate_alphabet_words(alphabet, max_len, e.group.rank);
	std::vector<Word> &cand = c.words;
	std::vector<int> &lengths = c.lengths;

	SearchResult res;
	std::vector<const Word *> pick((size_t)n);
	// tuples with total alphabet length exactly L, components in candidate
	// order; L ascends, so the overall order is length-lexicographic
	auto go = [&](auto &&self, int pos, int remaining) -> bool {
		if (pos == n) {
			if (remaining != 0)
				return true;
			if (res.candidates_tried >= budget) {
				res.complete = false;
				return false;
			}
			++res.candidates_tried;
			std::vector<Word> asg;
			asg.reserve((size_t)n);
			for (auto *p : pick)
				asg.push_back(*p);
			if (check_solution(e, asg))
				res.solutions.push_back(std::move(asg));
			return true;
		}
		for (size_t c = 0; c < cand.size(); ++c) {
			int len = lengths[c];
			if (len > remaining)
				break; // candidate lengths are nondecreasing
			if (remaining - len > (n - pos - 1) * max_len)
				continue;
			pick[(size_t)pos] = &cand[c];
			if (!self(self, pos + 1, remaining - len))
				return false;
		}
		return true;
	};
	for (int L = 0; L <= n * max_len; ++L)
		if (!go(go, 0, L))
			break;
	return res;
}

bool bracket_congruence_applies(const GroupTag &g)
{
	return (g.family == Family::Metabelian && g.rank == 2) ||
	       (g.family == Family::MetabelianNilpotent && g.cls >= 4);
}

bool bracket_congruence_check(const Word &g1, const Word &g2,
                              const GroupTag &g)
{
	if (g.rank < 2)
		throw std::invalid_argument("needs rank >= 2");
	const Word *ws[2] = {&g1, &g2};
	for (int i = 0; i < 2; ++i) {
		if (ws[i]->rank() != g.rank)
			throw std::invalid_argument("word rank mismatch");
		ExpVec a = abelianization(*ws[i]);
		for (int j = 0; j < g.rank; ++j) {
			if (j == i) {
				if (a[(size_t)j] != 1 && a[(size_t)j] != -1)
					return false;
			} else if (a[(size_t)j] != 0) {
				return false;
			}
		}
	}
	return true;
}

Word engel_test_word_template()
{
	Word x = Word::variable(1);
	Word y = Word::variable(2);
	return multiply(build_w(3, 2, 1, 1, x, y), build_w(2, 2, 1, 2, x, y));
}

Word engel_test_word()
{
	return substitute(engel_test_word_template(),
	                  {Word::constant(2, 1), Word::constant(2, 2)});
}

ModuleShiftWord module_shift_word(const Word &v, long m, const GroupTag &g)
{
	if (g.family != Family::Solvable || g.rank != 2)
		throw std::invalid_argument("module shift is defined over S(2,d)");
	if (m < 1)
		throw std::invalid_argument("shift exponent must be positive");
	if (is_identity(v, g))
		throw std::invalid_argument("base element is trivial");
	if (!in_derived(v, g, g.derived_length() - 1))
		throw std::invalid_argument(
		    "base element is not in the last nontrivial derived subgroup");
	Word z1m = word_pow(Word::constant(2, 1), m);
	Word z2m = word_pow(Word::constant(2, 2), m);
	// (1 - z1^m)(1 - z2^m) = 1 - z1^m - z2^m + z1^m z2^m
	WordExpr a;
	a.terms.emplace_back(Word(2), 1);
	a.terms.emplace_back(z1m, -1);
	a.terms.emplace_back(z2m, -1);
	a.terms.emplace_back(multiply(z1m, z2m), 1);
	Word u = module_exponent(v, a, g);
	return {u, !is_identity(u, g)};
}

EndoSampleReport endo_fixing_sample(const Word &u, const GroupTag &g,
                                    int samples, std::uint64_t seed)
{
	if (u.rank() != g.rank)
		throw std::invalid_argument("word rank mismatch");
	if (is_identity(u, g))
		throw std::invalid_argument("test word is trivial");
	std::mt19937_64 eng(seed);
	auto pick = [&](long lo, long hi) {
		return lo + (long)(eng() % (std::uint64_t)(hi - lo + 1));
	};
	EndoSampleReport rep;
	rep.seed = seed;
	rep.samples = samples;
	static const long exps[4] = {-2, -1, 1, 2};
	for (int s = 0; s < samples; ++s) {
		Homomorphism phi{g, g, {}};
		for (int i = 0; i < g.rank; ++i) {
			Word w(g.rank);
			long len = pick(0, 3);
			for (long j = 0; j < len; ++j)
				w = multiply(w, Word::constant(g.rank, (int)pick(1, g.rank),
				                               exps[pick(0, 3)]));
			phi.images.push_back(std::move(w));
		}
		if (!eq(apply_hom(phi, u), u, g))
			continue;
		++rep.fixers;
		IntMatrix m(g.rank, g.rank);
		for (int i = 0; i < g.rank; ++i) {
			ExpVec row = abelianization(phi.images[(size_t)i]);
			for (int j = 0; j < g.rank; ++j)
				m.at(i, j) = row[(size_t)j];
		}
		Int det = determinant(m);
		if (det == 1 || det == -1)
			++rep.unimodular_fixers;
		else
			rep.refutations.push_back(std::move(phi));
	}
	return rep;
}

} // namespace solvgrp
