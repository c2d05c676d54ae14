#include "solvgrp/group_ring.hpp"

#include "solvgrp/magnus.hpp"
#include <algorithm>
#include <stdexcept>

namespace solvgrp {

GroupRingElem::GroupRingElem(GroupTag level) : level_(level) {}
GroupRingElem::GroupRingElem(const GroupRingElem &) = default;
GroupRingElem::GroupRingElem(GroupRingElem &&) noexcept = default;
GroupRingElem &GroupRingElem::operator=(const GroupRingElem &) = default;
GroupRingElem &GroupRingElem::operator=(GroupRingElem &&) noexcept = default;
GroupRingElem::~GroupRingElem() = default;

GroupRingElem GroupRingElem::zero(GroupTag level)
{
	return GroupRingElem(level);
}

GroupRingElem GroupRingElem::scalar(GroupTag level, const Int &c)
{
	GroupRingElem e(level);
	e.add_term(identity_elem(level), c);
	return e;
}

GroupRingElem GroupRingElem::embed(const CanonicalElem &g, const Int &c)
{
	GroupRingElem e(g.tag());
	e.add_term(g, c);
	return e;
}

void GroupRingElem::add_term(const CanonicalElem &key, const Int &c)
{
	if (!(key.tag() == level_))
		throw std::invalid_argument("ring term level mismatch");
	if (c == 0)
		return;
	auto it = std::lower_bound(
	    terms_.begin(), terms_.end(), key,
	    [](const Term &t, const CanonicalElem &k) { return cmp(t.first, k) < 0; });
	if (it != terms_.end() && cmp(it->first, key) == 0) {
		it->second += c;
		if (it->second == 0)
			terms_.erase(it);
		return;
	}
	terms_.insert(it, {key, c});
}

bool GroupRingElem::operator==(const GroupRingElem &other) const
{
	return cmp(*this, other) == 0;
}

int cmp(const GroupRingElem &a, const GroupRingElem &b)
{
	if (!(a.level() == b.level())) {
		if (a.level().family != b.level().family)
			return (int)a.level().family < (int)b.level().family ? -1 : 1;
		if (a.level().rank != b.level().rank)
			return a.level().rank < b.level().rank ? -1 : 1;
		return a.level().cls < b.level().cls ? -1 : 1;
	}
	const auto &ta = a.terms(), &tb = b.terms();
	for (size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
		if (int c = cmp(ta[i].first, tb[i].first); c != 0)
			return c;
		if (int c = cmp(ta[i].second, tb[i].second); c != 0)
			return c;
	}
	if (ta.size() != tb.size())
		return ta.size() < tb.size() ? -1 : 1;
	return 0;
}

namespace {

void check_levels(const GroupRingElem &a, const GroupRingElem &b)
{
	if (!(a.level() == b.level()))
		throw std::invalid_argument("group ring level mismatch");
}

} // namespace

GroupRingElem add(const GroupRingElem &a, const GroupRingElem &b)
{
	check_levels(a, b);
	GroupRingElem r = a;
	for (auto &[k, c] : b.terms())
		r.add_term(k, c);
	return r;
}

GroupRingElem neg(const GroupRingElem &a)
{
	GroupRingElem r(a.level());
	for (auto &[k, c] : a.terms())
		r.add_term(k, -c);
	return r;
}

GroupRingElem sub(const GroupRingElem &a, const GroupRingElem &b)
{
	return add(a, neg(b));
}

GroupRingElem mul(const GroupRingElem &a, const GroupRingElem &b)
{
	check_levels(a, b);
	GroupRingElem r(a.level());
	for (auto &[ka, ca] : a.terms())
		for (auto &[kb, cb] : b.terms())
			r.add_term(mul(ka, kb), ca * cb);
	return r;
}

GroupRingElem mul(const Int &c, const GroupRingElem &a)
{
	GroupRingElem r(a.level());
	for (auto &[k, x] : a.terms())
		r.add_term(k, c * x);
	return r;
}

GroupRingElem left_act(const CanonicalElem &g, const GroupRingElem &a)
{
	if (!(g.tag() == a.level()))
		throw std::invalid_argument("group ring level mismatch");
	GroupRingElem r(a.level());
	for (auto &[k, c] : a.terms())
		r.add_term(mul(g, k), c);
	return r;
}

Int augmentation(const GroupRingElem &a)
{
	Int s = 0;
	for (auto &[k, c] : a.terms())
		s += c;
	return s;
}

LaurentPoly laurent_of(const GroupRingElem &a)
{
	if (tag_depth(a.level()) != 1)
		throw std::invalid_argument("not an abelian-level ring element");
	LaurentPoly p(a.level().rank);
	for (auto &[k, c] : a.terms())
		p.add_term(k.exponents(), c);
	return p;
}

GroupRingElem ring_of(const LaurentPoly &p, GroupTag level)
{
	if (tag_depth(level) != 1)
		throw std::invalid_argument("not an abelian level");
	if (p.rank() != level.rank)
		throw std::invalid_argument("rank mismatch");
	GroupRingElem r(level);
	for (auto &[v, c] : p.terms())
		r.add_term(CanonicalElem::abelian(level, v), c);
	return r;
}

std::string render(const GroupRingElem &a)
{
	if (tag_depth(a.level()) == 1)
		return render(laurent_of(a));
	if (a.is_zero())
		return "0";
	std::string out;
	for (auto &[k, c] : a.terms()) {
		bool negative = c < 0;
		Int mag = abs(c);
		if (out.empty())
			out += negative ? "-" : "";
		else
			out += negative ? " - " : " + ";
		if (mag != 1)
			out += mag.get_str() + "*";
		out += "[" + render(k) + "]";
	}
	return out;
}

GroupRingElem ring_value(const WordExpr &a, GroupTag level)
{
	GroupRingElem r(level);
	for (auto &[w, c] : a.terms)
		r.add_term(canon(w, level), c);
	return r;
}

Word module_exponent(const Word &v, const WordExpr &a, const GroupTag &g)
{
	if (v.rank() != g.rank)
		throw std::invalid_argument("rank mismatch");
	int d = g.derived_length();
	if (!in_derived(v, g, d - 1))
		throw std::invalid_argument(
		    "element is not in the abelian core subgroup");
	Word out(g.rank);
	for (auto &[w, c] : a.terms) {
		if (w.rank() != g.rank)
			throw std::invalid_argument("exponent word rank mismatch");
		out = multiply(out, word_pow(conjugate(v, w), c));
	}
	return out;
}

} // namespace solvgrp
