#include "solvgrp/magnus.hpp"

#include "solvgrp/linalg.hpp"
#include <algorithm>
#include <functional>
#include <stdexcept>

namespace solvgrp {

int tag_depth(const GroupTag &tag)
{
	return tag.family == Family::Solvable ? tag.cls : 2;
}

GroupTag lower_tag(const GroupTag &tag)
{
	if (tag_depth(tag) < 2)
		throw std::invalid_argument("abelian level has no lower level");
	if (tag.family == Family::Solvable)
		return GroupTag::solvable(tag.rank, tag.cls - 1);
	return GroupTag::solvable(tag.rank, 1);
}

GroupTag abelian_tag(int rank)
{
	return GroupTag::solvable(rank, 1);
}

CanonicalElem CanonicalElem::abelian(GroupTag tag, ExpVec exps)
{
	if (tag_depth(tag) != 1)
		throw std::invalid_argument("tag is not an abelian level");
	if ((int)exps.size() != tag.rank)
		throw std::invalid_argument("exponent vector length mismatch");
	CanonicalElem e(tag);
	e.exps_ = std::move(exps);
	return e;
}

CanonicalElem CanonicalElem::layered(GroupTag tag, CanonicalElem image,
                                     std::vector<GroupRingElem> derivs)
{
	if (tag_depth(tag) < 2)
		throw std::invalid_argument("tag has no layered form");
	GroupTag low = lower_tag(tag);
	if (!(image.tag() == low))
		throw std::invalid_argument("image level mismatch");
	if ((int)derivs.size() != tag.rank)
		throw std::invalid_argument("need one derivative per generator");
	for (auto &d : derivs)
		if (!(d.level() == low))
			throw std::invalid_argument("derivative level mismatch");
	CanonicalElem e(tag);
	e.image_ = std::make_shared<const CanonicalElem>(std::move(image));
	e.derivs_ = std::move(derivs);
	return e;
}

bool CanonicalElem::is_identity() const
{
	if (depth() == 1)
		return is_zero(exps_);
	if (!image_->is_identity())
		return false;
	return std::all_of(derivs_.begin(), derivs_.end(),
	                   [](const GroupRingElem &d) { return d.is_zero(); });
}

const ExpVec &CanonicalElem::exponents() const
{
	if (depth() != 1)
		throw std::logic_error("layered element has no exponent vector");
	return exps_;
}

const CanonicalElem &CanonicalElem::image() const
{
	if (depth() < 2)
		throw std::logic_error("abelian element has no image");
	return *image_;
}

const std::vector<GroupRingElem> &CanonicalElem::derivs() const
{
	if (depth() < 2)
		throw std::logic_error("abelian element has no derivatives");
	return derivs_;
}

ExpVec CanonicalElem::abelian_image() const
{
	return depth() == 1 ? exps_ : image_->abelian_image();
}

bool CanonicalElem::operator==(const CanonicalElem &other) const
{
	return cmp(*this, other) == 0;
}

int cmp(const CanonicalElem &a, const CanonicalElem &b)
{
	if (!(a.tag() == b.tag())) {
		if (a.tag().family != b.tag().family)
			return (int)a.tag().family < (int)b.tag().family ? -1 : 1;
		if (a.tag().rank != b.tag().rank)
			return a.tag().rank < b.tag().rank ? -1 : 1;
		return a.tag().cls < b.tag().cls ? -1 : 1;
	}
	if (a.depth() == 1)
		return cmp(a.exponents(), b.exponents());
	if (int c = cmp(a.image(), b.image()); c != 0)
		return c;
	for (int i = 0; i < a.tag().rank; ++i)
		if (int c = cmp(a.derivs()[i], b.derivs()[i]); c != 0)
			return c;
	return 0;
}

CanonicalElem identity_elem(const GroupTag &tag)
{
	if (tag_depth(tag) == 1)
		return CanonicalElem::abelian(tag, ExpVec(tag.rank, Int(0)));
	GroupTag low = lower_tag(tag);
	return CanonicalElem::layered(
	    tag, identity_elem(low),
	    std::vector<GroupRingElem>(tag.rank, GroupRingElem::zero(low)));
}

namespace {

// Truncate a derivative to its canonical representative mod Δ^k.
GroupRingElem mn_rep(const GroupRingElem &d, int k)
{
	return ring_of(aug_power_rep(laurent_of(d), k), d.level());
}

std::vector<GroupRingElem> maybe_mn_normalize(const GroupTag &tag,
                                              std::vector<GroupRingElem> derivs)
{
	if (tag.family != Family::MetabelianNilpotent)
		return derivs;
	for (auto &d : derivs)
		d = mn_rep(d, tag.cls);
	return derivs;
}

CanonicalElem pow_elem(const CanonicalElem &g, const Int &e)
{
	long n = checked_long(e);
	CanonicalElem base = n < 0 ? inv(g) : g;
	CanonicalElem acc = identity_elem(g.tag());
	for (long t = 0; t < std::abs(n); ++t)
		acc = mul(acc, base);
	return acc;
}

// ∂(z^e) for z̄ the image of the generator: e > 0 gives Σ_{t=0}^{e−1} z̄^t,
// e < 0 gives −Σ_{t=e}^{−1} z̄^t.
GroupRingElem geo(const CanonicalElem &zbar, const Int &e)
{
	GroupRingElem s = GroupRingElem::zero(zbar.tag());
	long n = checked_long(e);
	if (n > 0) {
		CanonicalElem acc = identity_elem(zbar.tag());
		for (long t = 0; t < n; ++t) {
			s.add_term(acc, 1);
			acc = mul(acc, zbar);
		}
	} else if (n < 0) {
		CanonicalElem zinv = inv(zbar);
		CanonicalElem acc = zinv;
		for (long t = 0; t < -n; ++t) {
			s.add_term(acc, -1);
			acc = mul(acc, zinv);
		}
	}
	return s;
}

void check_constant_word(const Word &w)
{
	if (w.has_variables())
		throw std::invalid_argument("word contains variables");
}

} // namespace

CanonicalElem mul(const CanonicalElem &a, const CanonicalElem &b)
{
	if (!(a.tag() == b.tag()))
		throw std::invalid_argument("canonical element tag mismatch");
	if (a.depth() == 1) {
		ExpVec e = a.exponents();
		for (size_t i = 0; i < e.size(); ++i)
			e[i] += b.exponents()[i];
		return CanonicalElem::abelian(a.tag(), std::move(e));
	}
	std::vector<GroupRingElem> derivs;
	derivs.reserve(a.tag().rank);
	for (int i = 0; i < a.tag().rank; ++i)
		derivs.push_back(
		    add(a.derivs()[i], left_act(a.image(), b.derivs()[i])));
	return CanonicalElem::layered(a.tag(), mul(a.image(), b.image()),
	                              maybe_mn_normalize(a.tag(), std::move(derivs)));
}

CanonicalElem inv(const CanonicalElem &a)
{
	if (a.depth() == 1) {
		ExpVec e = a.exponents();
		for (auto &x : e)
			x = -x;
		return CanonicalElem::abelian(a.tag(), std::move(e));
	}
	CanonicalElem img = inv(a.image());
	std::vector<GroupRingElem> derivs;
	derivs.reserve(a.tag().rank);
	for (int i = 0; i < a.tag().rank; ++i)
		derivs.push_back(neg(left_act(img, a.derivs()[i])));
	return CanonicalElem::layered(a.tag(), std::move(img),
	                              maybe_mn_normalize(a.tag(), std::move(derivs)));
}

CanonicalElem conj(const CanonicalElem &a, const CanonicalElem &t)
{
	return mul(mul(inv(t), a), t);
}

ExpVec abelianization(const Word &w)
{
	check_constant_word(w);
	ExpVec v(w.rank(), Int(0));
	for (auto &l : w.letters())
		v[l.sym.index - 1] += l.exp;
	return v;
}

GroupRingElem fox_derivative(const Word &w, int i, const GroupTag &level)
{
	check_constant_word(w);
	if (i < 1 || i > level.rank)
		throw std::invalid_argument("derivative index out of range");
	if (w.rank() != level.rank)
		throw std::invalid_argument("rank mismatch");

	std::vector<CanonicalElem> gens;
	gens.reserve(level.rank);
	for (int j = 1; j <= level.rank; ++j)
		gens.push_back(canon(Word::constant(level.rank, j), level));

	GroupRingElem d = GroupRingElem::zero(level);
	CanonicalElem img = identity_elem(level);
	for (auto &l : w.letters()) {
		const CanonicalElem &zbar = gens[l.sym.index - 1];
		if (l.sym.index == i)
			d = add(d, left_act(img, geo(zbar, l.exp)));
		img = mul(img, pow_elem(zbar, l.exp));
	}
	return d;
}

CanonicalElem canon(const Word &w, const GroupTag &g)
{
	check_constant_word(w);
	if (w.rank() != g.rank)
		throw std::invalid_argument("rank mismatch");
	if (tag_depth(g) == 1)
		return CanonicalElem::abelian(g, abelianization(w));
	GroupTag low = lower_tag(g);
	std::vector<GroupRingElem> derivs;
	derivs.reserve(g.rank);
	for (int i = 1; i <= g.rank; ++i)
		derivs.push_back(fox_derivative(w, i, low));
	return CanonicalElem::layered(g, canon(w, low),
	                              maybe_mn_normalize(g, std::move(derivs)));
}

bool eq(const Word &u, const Word &v, const GroupTag &g)
{
	if (u.rank() != v.rank())
		throw std::invalid_argument("word rank mismatch");
	return canon(u, g) == canon(v, g);
}

bool is_identity(const Word &w, const GroupTag &g)
{
	return canon(w, g).is_identity();
}

bool check_fundamental(const CanonicalElem &e)
{
	if (e.depth() == 1)
		return true;
	GroupTag low = lower_tag(e.tag());
	GroupRingElem lhs = GroupRingElem::zero(low);
	GroupRingElem one = GroupRingElem::scalar(low, 1);
	for (int i = 1; i <= e.tag().rank; ++i) {
		CanonicalElem zbar = canon(Word::constant(e.tag().rank, i), low);
		lhs = add(lhs, mul(e.derivs()[i - 1],
		                   sub(GroupRingElem::embed(zbar), one)));
	}
	GroupRingElem rhs = sub(GroupRingElem::embed(e.image()), one);
	if (e.tag().family != Family::MetabelianNilpotent)
		return lhs == rhs;
	// representatives were truncated at Δ^k, so the identity survives mod
	// Δ^(k+1)
	return in_aug_power(sub(laurent_of(lhs), laurent_of(rhs)),
	                    e.tag().cls + 1);
}

bool in_derived(const Word &w, const GroupTag &g, int s)
{
	if (s < 0 || s > g.derived_length())
		throw std::invalid_argument("derived series index out of range");
	if (s == 0)
		return true;
	GroupTag quotient =
	    s == g.derived_length() ? g : GroupTag::solvable(g.rank, s);
	return is_identity(w, quotient);
}

bool in_gamma(const Word &w, int c)
{
	if (c < 1)
		throw std::invalid_argument("lower central index must be >= 1");
	check_constant_word(w);
	if (c == 1)
		return true;
	if (!is_zero(abelianization(w)))
		return false;
	GroupTag ab = abelian_tag(w.rank());
	for (int i = 1; i <= w.rank(); ++i)
		if (!in_aug_power(laurent_of(fox_derivative(w, i, ab)), c - 1))
			return false;
	return true;
}

std::string render(const CanonicalElem &e)
{
	if (e.depth() == 1) {
		std::string out = "(";
		for (size_t i = 0; i < e.exponents().size(); ++i) {
			if (i)
				out += ",";
			out += e.exponents()[i].get_str();
		}
		return out + ")";
	}
	std::string out = "(" + render(e.image());
	for (auto &d : e.derivs())
		out += "; " + render(d);
	return out + ")";
}

Homomorphism identity_hom(const GroupTag &g)
{
	Homomorphism f{g, g, {}};
	for (int i = 1; i <= g.rank; ++i)
		f.images.push_back(Word::constant(g.rank, i));
	return f;
}

Word apply_hom(const Homomorphism &f, const Word &w)
{
	check_constant_word(w);
	if ((int)f.images.size() != f.source.rank)
		throw std::invalid_argument("homomorphism image count mismatch");
	if (w.rank() != f.source.rank)
		throw std::invalid_argument("word rank mismatch");
	Word out(f.target.rank);
	for (auto &img : f.images)
		if (img.rank() != f.target.rank)
			throw std::invalid_argument("image rank mismatch");
	for (auto &l : w.letters())
		out = multiply(out, word_pow(f.images[l.sym.index - 1], l.exp));
	return out;
}

Homomorphism compose_hom(const Homomorphism &outer, const Homomorphism &inner)
{
	if (inner.target.rank != outer.source.rank)
		throw std::invalid_argument("composition rank mismatch");
	Homomorphism f{inner.source, outer.target, {}};
	for (auto &img : inner.images)
		f.images.push_back(apply_hom(outer, img));
	return f;
}

Word word_of_exps(int rank, const ExpVec &v)
{
	if ((int)v.size() != rank)
		throw std::invalid_argument("exponent vector length mismatch");
	Word out(rank);
	for (int i = 0; i < rank; ++i)
		if (v[i] != 0)
			out = multiply(out, Word::constant(rank, i + 1, v[i]));
	return out;
}

std::vector<Word> basic_commutator_words(int rank, int weight)
{
	if (rank < 1 || weight < 2)
		throw std::invalid_argument("need rank >= 1 and weight >= 2");
	std::vector<Word> out;
	// (z_{i0}, z_{i1}, ..., z_{i_{w-1}}) with i0 > i1 <= i2 <= ... <= i_{w-1}
	std::vector<int> tail(weight - 1);
	auto emit = [&](int i0) {
		std::vector<Word> args;
		args.push_back(Word::constant(rank, i0));
		for (int t : tail)
			args.push_back(Word::constant(rank, t));
		out.push_back(left_normed(args));
	};
	// enumerate nondecreasing tails in lexicographic order for each head
	for (int i0 = 2; i0 <= rank; ++i0) {
		std::function<void(int, int)> rec = [&](int pos, int min_val) {
			if (pos == weight - 1) {
				emit(i0);
				return;
			}
			int hi = pos == 0 ? i0 - 1 : rank;
			for (int v = min_val; v <= hi; ++v) {
				tail[pos] = v;
				rec(pos + 1, v);
			}
		};
		rec(0, 1);
	}
	return out;
}

std::optional<std::vector<Int>> gamma_coordinates(const Word &w, int c)
{
	if (c < 2)
		throw std::invalid_argument("coordinates need weight >= 2");
	check_constant_word(w);
	if (!is_zero(abelianization(w)))
		return std::nullopt;
	const int r = w.rank();
	GroupTag ab = abelian_tag(r);
	std::vector<Word> basis = basic_commutator_words(r, c);

	// degree-(c-1) homogeneous parts of all r derivatives, stacked
	auto components = [&](const Word &u) {
		std::vector<TruncatedSeries::TermMap> comp;
		for (int i = 1; i <= r; ++i)
			comp.push_back(expand_at_one(laurent_of(fox_derivative(u, i, ab)), c)
			                   .homogeneous_component(c - 1));
		return comp;
	};

	// one expansion pass does both the membership test (nothing may appear
	// below degree c-1) and the component extraction
	std::vector<TruncatedSeries::TermMap> target;
	for (int i = 1; i <= r; ++i) {
		TruncatedSeries s =
		    expand_at_one(laurent_of(fox_derivative(w, i, ab)), c);
		if (!s.terms().empty()) {
			Int low = 0;
			for (auto &e : s.terms().begin()->first)
				low += e;
			if (low < c - 1)
				return std::nullopt;
		}
		target.push_back(s.homogeneous_component(c - 1));
	}
	std::vector<std::vector<TruncatedSeries::TermMap>> cols;
	cols.reserve(basis.size());
	for (auto &b : basis)
		cols.push_back(components(b));

	// collect the monomial row index set
	std::map<std::pair<int, ExpVec>, int> row_of;
	auto note_rows = [&](const std::vector<TruncatedSeries::TermMap> &comp) {
		for (int i = 0; i < r; ++i)
			for (auto &[v, coeff] : comp[i])
				row_of.try_emplace({i, v}, 0);
	};
	note_rows(target);
	for (auto &col : cols)
		note_rows(col);
	int nrows = 0;
	for (auto &[key, idx] : row_of)
		idx = nrows++;

	IntMatrix a(nrows, (int)cols.size());
	std::vector<Int> b(nrows, Int(0));
	for (auto &[key, idx] : row_of) {
		auto &[i, v] = key;
		for (size_t j = 0; j < cols.size(); ++j) {
			auto it = cols[j][i].find(v);
			if (it != cols[j][i].end())
				a.at(idx, (int)j) = it->second;
		}
		auto it = target[i].find(v);
		if (it != target[i].end())
			b[idx] = it->second;
	}
	return solve_integer(a, b);
}

Word collect_to_normal_word(const Word &w, int k)
{
	if (k < 1)
		throw std::invalid_argument("nilpotency class must be >= 1");
	check_constant_word(w);
	const int r = w.rank();
	Word out = word_of_exps(r, abelianization(w));
	Word rem = multiply(inverse(out), w);
	for (int c = 2; c <= k; ++c) {
		auto coords = gamma_coordinates(rem, c);
		if (!coords)
			throw std::logic_error("collection residue left the expected layer");
		std::vector<Word> basis = basic_commutator_words(r, c);
		Word part(r);
		for (size_t j = 0; j < basis.size(); ++j)
			part = multiply(part, word_pow(basis[j], (*coords)[j]));
		out = multiply(out, part);
		rem = multiply(inverse(part), rem);
	}
	return out;
}

} // namespace solvgrp
