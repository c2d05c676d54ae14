#pragma once

#include "solvgrp/laurent.hpp"
#include "solvgrp/word.hpp"

namespace solvgrp {

class CanonicalElem;

// Element of the integral group ring Z[G] for G a supported quotient:
// finitely many (canonical group element, coefficient) terms, kept sorted
// by the canonical element order with no zero coefficients.
class GroupRingElem
{
  public:
	using Term = std::pair<CanonicalElem, Int>;

	explicit GroupRingElem(GroupTag level);
	GroupRingElem(const GroupRingElem &);
	GroupRingElem(GroupRingElem &&) noexcept;
	GroupRingElem &operator=(const GroupRingElem &);
	GroupRingElem &operator=(GroupRingElem &&) noexcept;
	~GroupRingElem();

	static GroupRingElem zero(GroupTag level);
	// c * identity
	static GroupRingElem scalar(GroupTag level, const Int &c);
	static GroupRingElem embed(const CanonicalElem &g, const Int &c = 1);

	const GroupTag &level() const { return level_; }
	const std::vector<Term> &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	void add_term(const CanonicalElem &key, const Int &c);

	bool operator==(const GroupRingElem &other) const;

  private:
	GroupTag level_;
	std::vector<Term> terms_;
};

int cmp(const GroupRingElem &a, const GroupRingElem &b);

GroupRingElem add(const GroupRingElem &a, const GroupRingElem &b);
GroupRingElem sub(const GroupRingElem &a, const GroupRingElem &b);
GroupRingElem neg(const GroupRingElem &a);
GroupRingElem mul(const GroupRingElem &a, const GroupRingElem &b);
GroupRingElem mul(const Int &c, const GroupRingElem &a);

// Each key k becomes g*k; coefficients unchanged.
GroupRingElem left_act(const CanonicalElem &g, const GroupRingElem &a);

Int augmentation(const GroupRingElem &a);

// Abelian-level (depth-1 tag) ring elements are Laurent polynomials.
LaurentPoly laurent_of(const GroupRingElem &a);
GroupRingElem ring_of(const LaurentPoly &p, GroupTag level);

std::string render(const GroupRingElem &a);

// Formal integer combination of words: the computable stand-in for a group
// ring exponent when an actual Word result must be produced (ring keys are
// canonical forms, which have no preferred word representative).
struct WordExpr
{
	std::vector<std::pair<Word, Int>> terms;
};

// Canonicalizes a word combination into Z[level].
GroupRingElem ring_value(const WordExpr &a, GroupTag level);

// For v in the last nontrivial derived subgroup G^(d-1) of G (abelian and
// normal, so conjugation factors through G/G^(d-1)): v^(Σ c_j·w_j) =
// Π_j (w_j^-1 v w_j)^(c_j). Result is a concrete word; order irrelevant.
Word module_exponent(const Word &v, const WordExpr &a, const GroupTag &g);

} // namespace solvgrp
