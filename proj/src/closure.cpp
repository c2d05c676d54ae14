#include "solvgrp/closure.hpp"

#include <json.hpp>

namespace solvgrp {

namespace {

Int gcd_of(const ExpVec &v)
{
	Int g = 0;
	for (auto &x : v)
		mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
	return g;
}

int count_nonzero(const std::vector<Int> &v)
{
	int n = 0;
	for (auto &x : v)
		if (x != 0)
			++n;
	return n;
}

std::string join_factors(const std::vector<Int> &v)
{
	std::string out;
	for (auto &x : v) {
		if (!out.empty())
			out += ", ";
		out += x.get_str();
	}
	return out;
}

std::vector<Word> generator_tuple(const GroupTag &g)
{
	std::vector<Word> zs;
	zs.reserve((size_t)g.rank);
	for (int i = 1; i <= g.rank; ++i)
		zs.push_back(Word::constant(g.rank, i));
	return zs;
}

// The left side evaluated at x_i = h^{s_i} (powers of h commute) equals
// h^(Σ c_i s_i) with c_i the exponent sum of x_i; no subgroup solution can
// exist when gcd(c) is 0 (value trivial, h not) or >= 2 (h is torsion-free).
void check_cyclic_witness(const Equation &e, const GroupTag &g)
{
	if (!check_solution(e, generator_tuple(g)))
		throw std::logic_error("witness equation is not solved by the generators");
	ExpVec c((size_t)e.lhs.max_variable(), 0);
	for (auto &l : e.lhs.letters()) {
		if (!l.sym.is_var)
			throw std::logic_error("witness left side must be a pure variable word");
		c[(size_t)l.sym.index - 1] += l.exp;
	}
	if (gcd_of(c) == 1)
		throw std::logic_error("witness exponent sums admit a subgroup solution");
}

// h written over a subgroup alphabet, with every certificate word of the
// cyclic report (a power of its single letter) rewritten through it.
DecisionReport delegate_cyclic(const Word &h, const GroupTag &tag,
                               const Word &pair_expr,
                               const std::string &prefix)
{
	DecisionReport rep = cyclic_decide(h, tag);
	std::vector<Word> remapped;
	remapped.reserve(rep.retraction_in_gens.size());
	for (auto &w : rep.retraction_in_gens) {
		Int e = w.empty() ? Int(0) : w.letters().front().exp;
		remapped.push_back(word_pow(pair_expr, e));
	}
	rep.retraction_in_gens = std::move(remapped);
	rep.notes = prefix + rep.notes;
	return rep;
}

struct PairHit
{
	std::vector<Word> h;
	Word t;
};

// Tuples of {g, f}-alphabet words, filtered by the abelianized necessary
// equalities, then confirmed by a conjugator search. Deterministic.
std::optional<PairHit> search_pair_solution(const Word &g0, const Word &f0,
                                            const GroupTag &tag,
                                            const SearchBudget &budget)
{
	const int r = tag.rank;
	const Word letters[2] = {Word::constant(2, 1), Word::constant(2, 2)};
	std::vector<Word> cand = bounded_alphabet_words(
	    std::span<const Word>(letters, 2), budget.tuple_length, 2);
	std::vector<Word> values;
	std::vector<ExpVec> vab;
	values.reserve(cand.size());
	for (auto &c : cand) {
		values.push_back(eval_pair_word(c, g0, f0));
		vab.push_back(abelianization(values.back()));
	}
	ExpVec ag = abelianization(g0), af = abelianization(f0);

	std::vector<size_t> idx((size_t)r, 0);
	long tried = 0;
	for (;;) {
		if (tried++ >= budget.candidates)
			return std::nullopt;
		// abelianized filter: ab(g(h̄)) = ab(g), ab(f(h̄)) = ab(f)
		bool ok = true;
		for (int coord = 0; coord < r && ok; ++coord) {
			Int sg = 0, sf = 0;
			for (int j = 0; j < r; ++j) {
				sg += ag[(size_t)j] * vab[idx[(size_t)j]][(size_t)coord];
				sf += af[(size_t)j] * vab[idx[(size_t)j]][(size_t)coord];
			}
			ok = sg == ag[(size_t)coord] && sf == af[(size_t)coord];
		}
		if (ok) {
			std::vector<Word> tuple;
			tuple.reserve((size_t)r);
			for (int j = 0; j < r; ++j)
				tuple.push_back(cand[idx[(size_t)j]]);
			auto t = conjugator_search(g0, f0, tuple, tag,
			                           budget.conjugator_length,
			                           budget.candidates);
			if (t)
				return PairHit{std::move(tuple), *t};
		}
		// odometer over candidate indices
		int pos = r - 1;
		while (pos >= 0 && ++idx[(size_t)pos] == cand.size())
			idx[(size_t)pos--] = 0;
		if (pos < 0)
			return std::nullopt;
	}
}

void check_ranks(const Word &g0, const Word &f0, const GroupTag &tag)
{
	if (g0.rank() != tag.rank || f0.rank() != tag.rank)
		throw std::invalid_argument("word rank mismatch");
	if (g0.has_variables() || f0.has_variables())
		throw std::invalid_argument("subgroup generators must be variable-free");
}

} // namespace

std::string render(Status s)
{
	switch (s) {
	case Status::Retract:
		return "Retract";
	case Status::NotVerballyClosed:
		return "NotVerballyClosed";
	case Status::Undecided:
		return "Undecided";
	}
	return "Undecided";
}

std::string decision_json(const DecisionReport &r)
{
	nlohmann::ordered_json j;
	j["status"] = render(r.status);
	if (r.retraction) {
		nlohmann::ordered_json ret;
		auto imgs = nlohmann::ordered_json::array();
		for (auto &w : r.retraction->images)
			imgs.push_back(render(w));
		ret["images"] = imgs;
		if (!r.retraction_in_gens.empty()) {
			auto gi = nlohmann::ordered_json::array();
			for (auto &w : r.retraction_in_gens)
				gi.push_back(render(w));
			ret["images_in_generators"] = gi;
		}
		j["retraction"] = std::move(ret);
	}
	if (r.witness) {
		nlohmann::ordered_json w;
		if (r.witness->equation)
			w["equation"] = render(r.witness->equation->lhs) + " = " +
			                render(r.witness->equation->rhs);
		else
			w["equation"] = nullptr;
		w["certificate"] = r.witness->certificate;
		j["witness"] = std::move(w);
	}
	j["notes"] = r.notes;
	return j.dump(2);
}

bool verify_retraction(const Homomorphism &rho,
                       std::span<const Word> subgroup_gens,
                       std::span<const Word> images_in_gens,
                       const GroupTag &tag)
{
	if (!(rho.source == tag) || !(rho.target == tag))
		throw std::invalid_argument("retraction must be an endomorphism of the ambient group");
	if ((int)rho.images.size() != tag.rank)
		throw std::invalid_argument("homomorphism image count mismatch");
	if (subgroup_gens.empty())
		throw std::invalid_argument("no subgroup generators given");
	if (images_in_gens.size() != rho.images.size())
		throw std::invalid_argument("missing subgroup membership certificate");
	for (size_t i = 0; i < images_in_gens.size(); ++i) {
		Word expansion = substitute(vars_of(images_in_gens[i]), subgroup_gens);
		if (!eq(expansion.with_rank(tag.rank), rho.images[i], tag))
			throw std::invalid_argument("membership certificate does not expand to the images");
	}
	for (auto &gen : subgroup_gens)
		if (!eq(apply_hom(rho, gen), gen, tag))
			return false;
	return true;
}

DecisionReport cyclic_decide(const Word &h, const GroupTag &g)
{
	if (h.rank() != g.rank)
		throw std::invalid_argument("word rank mismatch");
	if (h.has_variables())
		throw std::invalid_argument("subgroup generator must be variable-free");
	if (is_identity(h, g))
		throw std::invalid_argument("generator is trivial: the trivial subgroup is not decided here");

	ExpVec ab = abelianization(h);
	DecisionReport rep;
	if (is_primitive(ab)) {
		ExtGcd e = ext_gcd(ab);
		Homomorphism rho{g, g, {}};
		std::vector<Word> in_gens;
		for (int i = 0; i < g.rank; ++i) {
			rho.images.push_back(word_pow(h, e.coeffs[(size_t)i]));
			in_gens.push_back(
			    word_pow(Word::constant(1, 1), e.coeffs[(size_t)i]));
		}
		if (!verify_retraction(rho, std::vector<Word>{h}, in_gens, g))
			throw std::logic_error("power retraction failed verification");
		rep.status = Status::Retract;
		rep.retraction = std::move(rho);
		rep.retraction_in_gens = std::move(in_gens);
		rep.notes = "abelianized exponent vector is primitive; z_i -> h^(l_i) "
		            "with sum l_i k_i = 1 fixes h and retracts onto gp(h)";
		return rep;
	}

	// h = z^k * h' with h' of zero exponent sums; the expression equation
	// x1^(k_1)*...*xr^(k_r)*h'(x̄) = h is solved by the generators, while
	// gp(h)-assignments only reach powers h^(gcd(k)·s).
	Word zpart = word_of_exps(g.rank, ab);
	Word hprime = multiply(inverse(zpart), h);
	Word lhs(g.rank);
	for (int i = 1; i <= g.rank; ++i)
		lhs = multiply(lhs,
		               word_pow(Word::variable(i, 1, g.rank), ab[(size_t)i - 1]));
	lhs = multiply(lhs, vars_of(hprime).with_rank(g.rank));
	Equation weq{lhs, h, g};
	check_cyclic_witness(weq, g);
	Int d = gcd_of(ab);
	rep.status = Status::NotVerballyClosed;
	Witness wit;
	wit.equation = weq;
	if (d == 0) {
		wit.certificate =
		    "every exponent sum of the left side is zero, so assignments "
		    "from the abelian subgroup gp(h) evaluate to the identity, but "
		    "the right side h is nontrivial";
		rep.notes = "h lies in the derived subgroup; its expression equation "
		            "has no solution in gp(h)";
	} else {
		wit.certificate = "exponent sums of the left side have gcd " +
		                  d.get_str() +
		                  "; assignments from gp(h) evaluate to h^(" +
		                  d.get_str() + "*s), never to h";
		rep.notes = "abelianized exponent vector is imprimitive; the "
		            "expression equation has no solution in gp(h)";
	}
	rep.witness = std::move(wit);
	return rep;
}

SummandCheck two_gen_necessary(const Word &g0, const Word &f0,
                               const GroupTag &tag)
{
	check_ranks(g0, f0, tag);
	IntMatrix m(2, tag.rank);
	ExpVec ag = abelianization(g0), af = abelianization(f0);
	for (int j = 0; j < tag.rank; ++j) {
		m.at(0, j) = ag[(size_t)j];
		m.at(1, j) = af[(size_t)j];
	}
	SummandCheck r;
	r.invariant_factors = invariant_factors(m);
	r.holds = tag.rank >= 2 && is_rank2_direct_summand(m);
	return r;
}

BuiltRetraction retraction_synthesis_nilpotent(const Word &g0, const Word &f0,
                                               const GroupTag &tag)
{
	if (tag.family != Family::MetabelianNilpotent)
		throw std::invalid_argument("synthesis needs a nilpotent group tag");
	check_ranks(g0, f0, tag);
	if (!two_gen_necessary(g0, f0, tag).holds)
		throw std::invalid_argument("pair does not span a rank-2 direct summand");
	const int r = tag.rank;
	const int k = tag.cls;

	IntMatrix a(2, r);
	ExpVec ag = abelianization(g0), af = abelianization(f0);
	for (int j = 0; j < r; ++j) {
		a.at(0, j) = ag[(size_t)j];
		a.at(1, j) = af[(size_t)j];
	}
	IntMatrix cmat = unimodular_completion(a);
	IntMatrix binv = invert_unimodular(cmat);

	Homomorphism alpha{tag, tag, {}};
	alpha.images.push_back(g0);
	alpha.images.push_back(f0);
	for (int i = 2; i < r; ++i)
		alpha.images.push_back(word_of_exps(r, cmat.row(i)));

	// w_i approximates alpha^-1(z_i); each round fixes one more level of
	// the lower central series. Corrections are basic commutators taken at
	// the abelianized preimages z^{B_j}: mod the next level a commutator
	// only sees its arguments mod the derived subgroup, and alpha maps
	// z^{B_j} onto z_j there.
	std::vector<Word> w;
	w.reserve((size_t)r);
	for (int i = 0; i < r; ++i)
		w.push_back(word_of_exps(r, binv.row(i)));
	Homomorphism base{tag, tag, w};
	for (int c = 2; c <= k; ++c) {
		std::vector<Word> basics = basic_commutator_words(r, c);
		std::vector<Word> next = w;
		for (int i = 0; i < r; ++i) {
			Word e = multiply(inverse(Word::constant(r, i + 1)),
			                  apply_hom(alpha, w[(size_t)i]));
			auto coords = gamma_coordinates(e, c);
			if (!coords)
				throw std::logic_error(
				    "inversion drifted out of the expected lower central level");
			Word delta(r);
			for (size_t b = 0; b < basics.size(); ++b)
				if ((*coords)[b] != 0)
					delta = multiply(delta,
					                 word_pow(apply_hom(base, basics[b]),
					                          -(*coords)[b]));
			next[(size_t)i] = collect_to_normal_word(
			    multiply(w[(size_t)i], delta), k);
		}
		w = std::move(next);
	}
	for (int i = 0; i < r; ++i)
		if (!eq(apply_hom(alpha, w[(size_t)i]), Word::constant(r, i + 1), tag))
			throw std::logic_error("basis inversion failed verification");

	BuiltRetraction out;
	out.hom = Homomorphism{tag, tag, {}};
	for (int i = 0; i < r; ++i) {
		Word kept(r); // projection onto the first two basis coordinates
		for (auto &l : w[(size_t)i].letters())
			if (l.sym.index <= 2)
				kept = multiply(kept, Word::constant(r, l.sym.index, l.exp));
		out.images_in_gens.push_back(kept.with_rank(2));
		out.hom.images.push_back(apply_hom(alpha, kept));
	}
	if (!verify_retraction(out.hom, std::vector<Word>{g0, f0},
	                       out.images_in_gens, tag))
		throw std::logic_error("synthesized retraction failed verification");
	return out;
}

BuiltRetraction retraction_from_solution(const Word &g0, const Word &f0,
                                         std::span<const Word> h,
                                         const Word &t, const GroupTag &tag)
{
	check_ranks(g0, f0, tag);
	if ((int)h.size() != tag.rank)
		throw std::invalid_argument("solution tuple must have one component per generator");
	std::vector<Word> hv;
	hv.reserve(h.size());
	for (auto &hi : h)
		hv.push_back(eval_pair_word(hi, g0, f0));
	Word tv = eval_pair_word(t, g0, f0);

	Homomorphism sub{tag, tag, hv};
	if (!eq(apply_hom(sub, g0), conjugate(g0, tv), tag))
		throw std::invalid_argument(
		    "solution does not conjugate the first generator: g(h) != g^t");
	if (!eq(apply_hom(sub, f0), conjugate(f0, tv), tag))
		throw std::invalid_argument(
		    "solution does not conjugate the second generator: f(h) != f^t");

	BuiltRetraction out;
	out.hom = Homomorphism{tag, tag, {}};
	Word tinv2 = inverse(t.with_rank(2));
	for (int i = 0; i < tag.rank; ++i) {
		out.hom.images.push_back(conjugate(hv[(size_t)i], inverse(tv)));
		out.images_in_gens.push_back(
		    conjugate(h[(size_t)i].with_rank(2), tinv2));
	}
	if (!verify_retraction(out.hom, std::vector<Word>{g0, f0},
	                       out.images_in_gens, tag))
		throw std::logic_error(
		    "retraction failed to fix the generators despite the defining equalities");
	return out;
}

std::optional<Word> conjugator_search(const Word &g0, const Word &f0,
                                      std::span<const Word> h,
                                      const GroupTag &tag, int bound,
                                      long budget)
{
	check_ranks(g0, f0, tag);
	if ((int)h.size() != tag.rank)
		throw std::invalid_argument("solution tuple must have one component per generator");
	std::vector<Word> hv;
	hv.reserve(h.size());
	for (auto &hi : h)
		hv.push_back(eval_pair_word(hi, g0, f0));
	Homomorphism sub{tag, tag, hv};
	Word gh = apply_hom(sub, g0);
	Word fh = apply_hom(sub, f0);

	const Word letters[2] = {Word::constant(2, 1), Word::constant(2, 2)};
	long tried = 0;
	for (auto &t2 : bounded_alphabet_words(std::span<const Word>(letters, 2),
	                                       bound, 2)) {
		if (!is_zero(abelianization(t2)))
			continue; // conjugator must come from the derived subgroup
		if (tried++ >= budget)
			return std::nullopt;
		Word tv = eval_pair_word(t2, g0, f0);
		if (eq(gh, conjugate(g0, tv), tag) && eq(fh, conjugate(f0, tv), tag))
			return t2;
	}
	return std::nullopt;
}

DecisionReport two_gen_decide(const Word &g0, const Word &f0,
                              const GroupTag &tag, const SearchBudget &budget)
{
	check_ranks(g0, f0, tag);
	bool g_triv = is_identity(g0, tag);
	bool f_triv = is_identity(f0, tag);
	if (g_triv && f_triv) {
		DecisionReport rep;
		Homomorphism rho{tag, tag,
		                 std::vector<Word>((size_t)tag.rank, Word(tag.rank))};
		std::vector<Word> in_gens((size_t)tag.rank, Word(2));
		if (!verify_retraction(rho, std::vector<Word>{g0, f0}, in_gens, tag))
			throw std::logic_error("constant retraction failed verification");
		rep.status = Status::Retract;
		rep.retraction = std::move(rho);
		rep.retraction_in_gens = std::move(in_gens);
		rep.notes = "both generators are trivial; the constant endomorphism "
		            "retracts onto the trivial subgroup";
		return rep;
	}
	if (g_triv || f_triv)
		return delegate_cyclic(
		    g_triv ? f0 : g0, tag, Word::constant(2, g_triv ? 2 : 1),
		    "one generator is trivial, so the pair generates a cyclic subgroup; ");

	SummandCheck nec = two_gen_necessary(g0, f0, tag);
	if (nec.holds) {
		if (tag.family == Family::MetabelianNilpotent) {
			BuiltRetraction syn = retraction_synthesis_nilpotent(g0, f0, tag);
			DecisionReport rep;
			rep.status = Status::Retract;
			rep.retraction = std::move(syn.hom);
			rep.retraction_in_gens = std::move(syn.images_in_gens);
			rep.notes = "abelianized generators span a rank-2 direct summand; "
			            "the pair extends to a basis of the nilpotent group, "
			            "and conjugating the coordinate projection by that "
			            "basis change gives a verified retraction";
			return rep;
		}
		if (auto hit = search_pair_solution(g0, f0, tag, budget)) {
			BuiltRetraction b =
			    retraction_from_solution(g0, f0, hit->h, hit->t, tag);
			DecisionReport rep;
			rep.status = Status::Retract;
			rep.retraction = std::move(b.hom);
			rep.retraction_in_gens = std::move(b.images_in_gens);
			rep.notes = "a subgroup solution of the defining bracket "
			            "equalities was found by bounded search; the "
			            "conjugation-corrected substitution is a verified "
			            "retraction";
			return rep;
		}
		DecisionReport rep;
		rep.status = Status::Undecided;
		rep.notes = "abelianized generators span a rank-2 direct summand "
		            "(the necessary condition holds), but no retraction was "
		            "found within the search budget; for this family the "
		            "condition is not known to be sufficient from the "
		            "generators alone";
		return rep;
	}

	// necessary condition failed: certify noncyclicity before concluding
	std::string cert = "invariant factors (" +
	                   join_factors(nec.invariant_factors) +
	                   ") of the stacked abelianized generators differ from "
	                   "(1, 1)";
	ExpVec ag = abelianization(g0), af = abelianization(f0);
	int rank_ab = count_nonzero(nec.invariant_factors);

	if (rank_ab == 2) {
		DecisionReport rep;
		rep.status = Status::NotVerballyClosed;
		rep.witness = Witness{std::nullopt, cert};
		rep.notes = "the abelianized image already has rank 2, so the "
		            "subgroup is noncyclic; a noncyclic verbally closed pair "
		            "must span a rank-2 direct summand, and this one does not";
		return rep;
	}

	if (rank_ab == 0) {
		int bottom = tag.derived_length() - 1;
		if (in_derived(g0, tag, bottom) && in_derived(f0, tag, bottom)) {
			// the subgroup is abelian; expression equation for g has no
			// abelian-valued solution since its exponent sums vanish
			Equation weq{vars_of(g0), g0, tag};
			if (!check_solution(weq, generator_tuple(tag)))
				throw std::logic_error("witness equation is not solved by the generators");
			DecisionReport rep;
			rep.status = Status::NotVerballyClosed;
			rep.witness = Witness{
			    weq,
			    "both generators lie in the last nontrivial derived "
			    "subgroup, which is abelian; the left side has zero exponent "
			    "sums, so every assignment from the abelian subgroup "
			    "evaluates to the identity, while the right side does not"};
			rep.notes = "generators sit in the abelian bottom of the derived "
			            "series; the expression equation for the first "
			            "generator has no subgroup solution";
			return rep;
		}
		DecisionReport rep;
		rep.status = Status::Undecided;
		rep.notes = "both abelianized generators vanish but the pair is not "
		            "inside the last abelian derived term; neither "
		            "noncyclicity nor an unsolvable witness equation could "
		            "be certified";
		return rep;
	}

	// abelianized rank 1: a primitive (p, q) with p·ab(g) + q·ab(f) = 0
	Int p, q;
	if (is_zero(ag)) {
		p = 1;
		q = 0;
	} else if (is_zero(af)) {
		p = 0;
		q = 1;
	} else {
		size_t j = 0;
		while (ag[j] == 0)
			++j;
		p = af[j];
		q = -ag[j];
		Int d;
		mpz_gcd(d.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
		p /= d;
		q /= d;
		for (size_t c = 0; c < ag.size(); ++c)
			if (p * ag[c] + q * af[c] != 0)
				throw std::logic_error("abelianized rows are not proportional");
	}

	Word u = multiply(word_pow(g0, p), word_pow(f0, q));
	if (!is_identity(u, tag)) {
		DecisionReport rep;
		rep.status = Status::NotVerballyClosed;
		rep.witness = Witness{std::nullopt, cert};
		rep.notes = "g^(" + p.get_str() + ")*f^(" + q.get_str() +
		            ") has zero abelianization but is nontrivial, so the "
		            "subgroup is noncyclic; a noncyclic verbally closed pair "
		            "must span a rank-2 direct summand, and this one does not";
		return rep;
	}

	// relation g^p f^q = 1 holds
	if (q == 1 || q == -1)
		return delegate_cyclic(
		    g0, tag, Word::constant(2, 1),
		    "the second generator is a power of the first; ");
	if (p == 1 || p == -1)
		return delegate_cyclic(
		    f0, tag, Word::constant(2, 2),
		    "the first generator is a power of the second; ");

	// if gp(g, f) were cyclic, g and f would be the q-th and (-p)-th powers
	// of the root g^s f^t with s·q - t·p = 1
	Int s, t, one, negp = -p;
	mpz_gcdext(one.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), q.get_mpz_t(),
	           negp.get_mpz_t());
	Word root = multiply(word_pow(g0, s), word_pow(f0, t));
	if (eq(g0, word_pow(root, q), tag) && eq(f0, word_pow(root, -p), tag)) {
		Word pair_expr = multiply(word_pow(Word::constant(2, 1), s),
		                          word_pow(Word::constant(2, 2), t));
		return delegate_cyclic(
		    root, tag, pair_expr,
		    "the generators are powers of a common root extracted from "
		    "their exponent relation; ");
	}
	DecisionReport rep;
	rep.status = Status::NotVerballyClosed;
	rep.witness = Witness{std::nullopt, cert};
	rep.notes = "the exponent relation g^(" + p.get_str() + ")*f^(" +
	            q.get_str() + ") = 1 holds, but the root test fails, so the "
	            "subgroup is noncyclic; a noncyclic verbally closed pair "
	            "must span a rank-2 direct summand, and this one does not";
	return rep;
}

} // namespace solvgrp
