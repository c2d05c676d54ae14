#pragma once

#include "solvgrp/group_ring.hpp"
#include <memory>
#include <optional>

namespace solvgrp {

// Depth of the canonical-form recursion: 1 for the abelian quotient S(r,1),
// 2 for M(r) and MN(r,k), d for S(r,d).
int tag_depth(const GroupTag &tag);
// The coefficient level one step down (depth >= 2 tags only).
GroupTag lower_tag(const GroupTag &tag);
GroupTag abelian_tag(int rank);

// Canonical form of a group element. Abelian level: exponent vector.
// Depth d >= 2: image at depth d-1 plus the r partial derivatives over
// Z[depth d-1], which together determine the element. For MN(r,k) the
// derivatives are stored as canonical coset representatives mod Δ^k.
class CanonicalElem
{
  public:
	static CanonicalElem abelian(GroupTag tag, ExpVec exps);
	static CanonicalElem layered(GroupTag tag, CanonicalElem image,
	                             std::vector<GroupRingElem> derivs);

	const GroupTag &tag() const { return tag_; }
	int depth() const { return tag_depth(tag_); }
	bool is_identity() const;

	const ExpVec &exponents() const;               // depth 1
	const CanonicalElem &image() const;            // depth >= 2
	const std::vector<GroupRingElem> &derivs() const; // depth >= 2

	// Exponent vector in the full abelianization, any depth.
	ExpVec abelian_image() const;

	bool operator==(const CanonicalElem &other) const;

  private:
	explicit CanonicalElem(GroupTag tag) : tag_(tag) {}

	GroupTag tag_;
	ExpVec exps_;
	std::shared_ptr<const CanonicalElem> image_;
	std::vector<GroupRingElem> derivs_;
};

int cmp(const CanonicalElem &a, const CanonicalElem &b);
inline bool operator<(const CanonicalElem &a, const CanonicalElem &b)
{
	return cmp(a, b) < 0;
}

CanonicalElem identity_elem(const GroupTag &tag);
CanonicalElem mul(const CanonicalElem &a, const CanonicalElem &b);
CanonicalElem inv(const CanonicalElem &a);
// t^-1 a t
CanonicalElem conj(const CanonicalElem &a, const CanonicalElem &t);

// Exponent-sum vector of a variable-free word.
ExpVec abelianization(const Word &w);

// Free partial derivative ∂w/∂z_i with values in Z[level]:
// ∂(z_j) = δ_ij, ∂(z_j^-1) = -δ_ij z̄_j^-1, ∂(uv) = ∂u + ū·∂v.
GroupRingElem fox_derivative(const Word &w, int i, const GroupTag &level);

CanonicalElem canon(const Word &w, const GroupTag &g);
bool eq(const Word &u, const Word &v, const GroupTag &g);
bool is_identity(const Word &w, const GroupTag &g);

// Σ_i D_i·(z̄_i − 1) = ū − 1 over Z[lower]; for MN tags the identity is
// required modulo Δ^(k+1) (representatives were truncated at Δ^k).
bool check_fundamental(const CanonicalElem &e);

// w ∈ G^(s); s = 0 is trivially true, s may reach the derived length.
bool in_derived(const Word &w, const GroupTag &g, int s);

// w ∈ γ_c of the free metabelian group of w's rank. c = 1 always holds;
// c >= 2 iff the abelianization vanishes and every abelianized derivative
// lies in Δ^(c−1).
bool in_gamma(const Word &w, int c);

// Deterministic nested text form (abelian: "(e1,...,er)"; deeper:
// "(image; D1; ...; Dr)") for golden tests.
std::string render(const CanonicalElem &e);

struct Homomorphism
{
	GroupTag source;
	GroupTag target;
	std::vector<Word> images; // image of each source generator z_i
};

Homomorphism identity_hom(const GroupTag &g);
// Replaces each z_i of w by images[i-1] (w must be variable-free).
Word apply_hom(const Homomorphism &f, const Word &w);
// z_i ↦ outer(inner(z_i))
Homomorphism compose_hom(const Homomorphism &outer, const Homomorphism &inner);

// z1^{v_1}*...*zr^{v_r}
Word word_of_exps(int rank, const ExpVec &v);

// Left-normed basic commutators (z_{i0},...,z_{i_{w-1}}), i0 > i1 <= i2 <=
// ... <= i_{w-1}: a basis of γ_w/γ_{w+1} of the free metabelian group of
// rank r. Deterministic order.
std::vector<Word> basic_commutator_words(int rank, int weight);

// Coordinates of w in that basis; requires w ∈ γ_c (c >= 2), nullopt if the
// homogeneous system has no solution (i.e. w ∉ γ_c).
std::optional<std::vector<Int>> gamma_coordinates(const Word &w, int c);

// Short word equal to w in MN(rank,k): z^{ab} times basic-commutator powers
// of weights 2..k, collected layer by layer (the γ_{k+1} tail is dropped).
Word collect_to_normal_word(const Word &w, int k);

} // namespace solvgrp
