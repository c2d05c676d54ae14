#pragma once

#include "solvgrp/harness.hpp"
#include "solvgrp/linalg.hpp"

namespace solvgrp {

enum class Status { Retract, NotVerballyClosed, Undecided };

std::string render(Status s);

// Why no subgroup-valued solution of the witness equation can exist, or
// which structural certificate rules the subgroup out.
struct Witness
{
	std::optional<Equation> equation; // solvable in G by the generators
	std::string certificate;
};

struct DecisionReport
{
	Status status = Status::Undecided;
	std::optional<Homomorphism> retraction;
	// Retraction images rewritten over the subgroup generators; this is the
	// membership certificate verify_retraction consumes.
	std::vector<Word> retraction_in_gens;
	std::optional<Witness> witness;
	std::string notes;
};

std::string decision_json(const DecisionReport &r);

// Decides whether gp(h) is a retract (equivalently verbally closed): yes
// iff the abelianized exponent vector of h is primitive. Retract reports
// carry the verified power retraction z_i -> h^{l_i}; negative reports
// carry a witness equation solvable in G but not in gp(h), with the
// exponent-arithmetic certificate. h must be nontrivial in G.
DecisionReport cyclic_decide(const Word &h, const GroupTag &g);

struct SummandCheck
{
	bool holds = false;
	std::vector<Int> invariant_factors;
};

// The stacked abelianizations of (g, f) span a rank-2 direct summand of
// Z^r — necessary for gp(g, f) to be verbally closed when noncyclic.
SummandCheck two_gen_necessary(const Word &g, const Word &f,
                               const GroupTag &tag);

struct SearchBudget
{
	int tuple_length = 2;      // alphabet letters per solution component
	int conjugator_length = 6; // alphabet letters per conjugator candidate
	long candidates = 20000;   // total candidates across the search
};

// Full decision for gp(g, f). Degenerate pairs reduce to the cyclic case;
// a failed necessary condition yields NotVerballyClosed once noncyclicity
// is certified; in MN groups a passing pair is completed to a basis and a
// retraction is synthesized; in M/S groups a bounded solution search may
// still produce a verified retraction, otherwise Undecided.
DecisionReport two_gen_decide(const Word &g, const Word &f,
                              const GroupTag &tag,
                              const SearchBudget &budget = {});

struct BuiltRetraction
{
	Homomorphism hom;
	std::vector<Word> images_in_gens; // over the two-letter {g, f} alphabet
};

// For a pair spanning a rank-2 direct summand in MN(r,k): completes
// (ab(g), ab(f)) to a basis of Z^r, lifts to a generating basis
// (g, f, z^{C_3}, ..., z^{C_r}), inverts the induced automorphism by
// successive correction along the lower central series, and conjugates the
// projection onto the first two coordinates back. The result fixes g and f
// and its images are words in {g, f}; verified before returning.
BuiltRetraction retraction_synthesis_nilpotent(const Word &g, const Word &f,
                                               const GroupTag &tag);

// Builds z_i -> h_i^{t^-1} from a solution (h_1..h_r) of the pair bracket
// equation with g(h̄) = g^t and f(h̄) = f^t. h_i and t are words over the
// two-letter {g, f} alphabet; the defining equalities are checked, and the
// resulting endomorphism provably fixes g and f.
BuiltRetraction retraction_from_solution(const Word &g, const Word &f,
                                         std::span<const Word> h,
                                         const Word &t, const GroupTag &tag);

// First word t over the {g, f} alphabet, in length-lexicographic order
// restricted to zero exponent sums (t must lie in the derived subgroup of
// gp(g, f)), with g(h̄) = g^t and f(h̄) = f^t; nullopt if none within the
// length bound or candidate budget.
std::optional<Word> conjugator_search(const Word &g, const Word &f,
                                      std::span<const Word> h,
                                      const GroupTag &tag, int bound,
                                      long budget = 20000);

// True iff rho fixes every subgroup generator. images_in_gens is the
// membership certificate: the i-th entry is rho(z_i) written over the
// subgroup generators, and must expand to rho's i-th image.
bool verify_retraction(const Homomorphism &rho,
                       std::span<const Word> subgroup_gens,
                       std::span<const Word> images_in_gens,
                       const GroupTag &tag);

} // namespace solvgrp
