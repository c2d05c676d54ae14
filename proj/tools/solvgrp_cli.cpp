#include "solvgrp/closure.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>

using namespace solvgrp;
using nlohmann::ordered_json;

namespace {

constexpr int kExitDecisionNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct budget_exceeded : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

// "-" pulls one line from stdin, so long words can be piped in.
std::string resolve_text(const std::string &arg)
{
	if (arg != "-")
		return arg;
	std::string line;
	if (!std::getline(std::cin, line))
		throw std::invalid_argument("no input on stdin for word argument '-'");
	return line;
}

// Deep canonical forms get expensive fast, so shallow groups allow longer
// input words than deep solvable towers.
Int word_length_budget(const GroupTag &g)
{
	return g.derived_length() <= 3 ? 200 : 60;
}

Word read_word(const std::string &arg, const GroupTag &g)
{
	Word w = parse_word(resolve_text(arg), g.rank);
	Int budget = word_length_budget(g);
	if (w.weight() > budget)
		throw budget_exceeded("word of length " + w.weight().get_str() +
		                      " exceeds the length budget " + budget.get_str() +
		                      " for " + render(g));
	return w;
}

void emit(const ordered_json &j, bool json)
{
	if (json) {
		std::cout << j.dump(2) << "\n";
		return;
	}
	for (auto &[key, value] : j.items()) {
		if (value.is_string())
			std::cout << key << ": " << value.get<std::string>() << "\n";
		else
			std::cout << key << ": " << value.dump() << "\n";
	}
}

int run_normalize(const GroupTag &g, const std::string &word_arg, bool json)
{
	Word w = read_word(word_arg, g);
	CanonicalElem e = canon(w, g);
	ordered_json j;
	j["group"] = render(g);
	j["word"] = render(w);
	j["canonical"] = render(e);
	emit(j, json);
	return 0;
}

int run_equal(const GroupTag &g, const std::string &arg1,
              const std::string &arg2, bool json)
{
	Word u = read_word(arg1, g);
	Word v = read_word(arg2, g);
	bool equal = eq(u, v, g);
	if (json) {
		ordered_json j;
		j["group"] = render(g);
		j["equal"] = equal;
		std::cout << j.dump(2) << "\n";
	} else {
		std::cout << (equal ? "equal" : "distinct") << "\n";
	}
	return 0;
}

int finish_decision(const DecisionReport &rep)
{
	std::cout << decision_json(rep) << "\n";
	return rep.status == Status::NotVerballyClosed ? kExitDecisionNegative : 0;
}

int run_retract_cyclic(const GroupTag &g, const std::string &word_arg)
{
	return finish_decision(cyclic_decide(read_word(word_arg, g), g));
}

int run_retract_twogen(const GroupTag &g, const std::string &arg1,
                       const std::string &arg2, int bound, long budget)
{
	SearchBudget sb;
	sb.tuple_length = bound;
	sb.conjugator_length = 3 * bound;
	sb.candidates = budget;
	return finish_decision(
	    two_gen_decide(read_word(arg1, g), read_word(arg2, g), g, sb));
}

int run_bracket_suite(const GroupTag &g, int bound, long budget, bool json,
                      bool congruence_only)
{
	if (congruence_only && !bracket_congruence_applies(g)) {
		std::cerr << "warning: the congruence conclusion is not established "
		             "for "
		          << render(g)
		          << "; it needs M(2) or MN(r,k) with k >= 4\n";
		return kExitUsage;
	}
	Equation e = standard_bracket_equation(g);
	std::vector<Word> alphabet;
	for (int i = 1; i <= g.rank; ++i)
		alphabet.push_back(Word::constant(g.rank, i));
	alphabet.push_back(commutator(Word::constant(g.rank, 1),
	                              Word::constant(g.rank, 2)));
	SearchResult res = bounded_search(e, alphabet, bound, budget);

	bool applies = bracket_congruence_applies(g);
	long pass = 0, fail = 0;
	for (auto &sol : res.solutions) {
		if (!applies)
			break;
		if (bracket_congruence_check(sol[0], sol[1], g))
			++pass;
		else
			++fail;
	}

	ordered_json j;
	j["suite"] = congruence_only ? "congruence" : "bracket-search";
	j["group"] = render(g);
	j["equation"] = render(e.lhs) + " = " + render(e.rhs);
	j["bound"] = bound;
	j["candidates_tried"] = res.candidates_tried;
	j["hits"] = res.solutions.size();
	j["bounded"] = !res.complete;
	ordered_json cc;
	cc["applies"] = applies;
	cc["pass"] = pass;
	cc["fail"] = fail;
	j["congruence_checks"] = cc;
	ordered_json sols = ordered_json::array();
	for (auto &sol : res.solutions) {
		ordered_json tuple = ordered_json::array();
		for (auto &w : sol)
			tuple.push_back(render(w));
		sols.push_back(tuple);
	}
	j["solutions"] = sols;
	emit(j, json);
	return res.complete ? 0 : kExitBudget;
}

int run_testword_suite(bool json)
{
	Word u = engel_test_word();
	GroupTag s23 = GroupTag::solvable(2, 3);
	GroupTag s22 = GroupTag::solvable(2, 2);
	ordered_json j;
	j["suite"] = "testword";
	j["word"] = render(u);
	j["nontrivial"] = !is_identity(u, s23);
	j["trivial_one_level_down"] = is_identity(u, s22);
	j["in_second_derived"] = in_derived(u, s23, 2);
	emit(j, json);
	return 0;
}

int run_module_shift_suite(const GroupTag &g, const std::string &word_arg,
                           int m, bool json)
{
	Word v = read_word(word_arg, g);
	ModuleShiftWord s = module_shift_word(v, m, g);
	ordered_json j;
	j["suite"] = "module-shift";
	j["group"] = render(g);
	j["base"] = render(v);
	j["shift"] = m;
	j["word"] = render(s.word);
	j["nontrivial"] = s.nontrivial;
	emit(j, json);
	return 0;
}

int run_endo_sampling_suite(const GroupTag &g, const std::string &word_arg,
                            int samples, std::uint64_t seed, bool json)
{
	Word u = read_word(word_arg, g);
	EndoSampleReport rep = endo_fixing_sample(u, g, samples, seed);
	ordered_json j;
	j["suite"] = "endo-sampling";
	j["group"] = render(g);
	j["word"] = render(u);
	j["samples"] = rep.samples;
	j["fixers"] = rep.fixers;
	j["unimodular_fixers"] = rep.unimodular_fixers;
	j["refutations"] = rep.refutations.size();
	j["seed"] = rep.seed;
	if (!rep.refutations.empty()) {
		ordered_json imgs = ordered_json::array();
		for (auto &w : rep.refutations.front().images)
			imgs.push_back(render(w));
		j["first_refutation_images"] = imgs;
	}
	emit(j, json);
	return 0;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"word algebra and retraction decisions in free metabelian, "
	             "solvable, and metabelian-nilpotent groups"};
	app.require_subcommand(1);

	std::string group_text = "M(2)";
	std::string word1, word2, suite;
	bool json = false;
	int bound = 2;
	long budget = 200000;
	std::uint64_t seed = 0;
	int samples = 200;

	auto add_group = [&](CLI::App *sub, bool required) {
		auto *opt = sub->add_option("--group", group_text,
		                            "group spec: M(r), S(r,d), or MN(r,k)");
		if (required)
			opt->required();
	};

	CLI::App *norm = app.add_subcommand("normalize",
	                                    "canonical form of a word");
	add_group(norm, true);
	norm->add_option("word", word1, "word, or - for stdin")->required();
	norm->add_flag("--json", json, "JSON output");

	CLI::App *equal = app.add_subcommand("equal", "decide equality of two words");
	add_group(equal, true);
	equal->add_option("word1", word1, "first word, or - for stdin")->required();
	equal->add_option("word2", word2, "second word, or - for stdin")->required();
	equal->add_flag("--json", json, "JSON output");

	CLI::App *rc = app.add_subcommand(
	    "retract-cyclic", "decide whether gp(h) is a retract (JSON report)");
	add_group(rc, true);
	rc->add_option("word", word1, "generator h, or - for stdin")->required();

	CLI::App *rt = app.add_subcommand(
	    "retract-twogen",
	    "decide whether gp(g,f) is a retract (JSON report)");
	add_group(rt, true);
	rt->add_option("word1", word1, "generator g, or - for stdin")->required();
	rt->add_option("word2", word2, "generator f, or - for stdin")->required();
	rt->add_option("--bound", bound, "solution-component length bound");
	rt->add_option("--budget", budget, "search candidate budget");

	CLI::App *verify = app.add_subcommand("verify", "evidence suites");
	verify->add_option("suite", suite,
	                   "bracket-search | congruence | testword | "
	                   "module-shift | endo-sampling")
	    ->required();
	add_group(verify, false);
	verify->add_option("word", word1, "suite input word, or - for stdin");
	verify->add_option("--bound", bound, "search length bound / shift exponent");
	verify->add_option("--budget", budget, "search candidate budget");
	verify->add_option("--seed", seed, "sampling seed");
	verify->add_option("--samples", samples, "sample count for endo-sampling");
	verify->add_flag("--json", json, "JSON output");

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError &e) {
		int code = app.exit(e);
		return code == 0 ? 0 : kExitUsage;
	}

	try {
		GroupTag g = parse_group_tag(group_text);
		if (norm->parsed())
			return run_normalize(g, word1, json);
		if (equal->parsed())
			return run_equal(g, word1, word2, json);
		if (rc->parsed())
			return run_retract_cyclic(g, word1);
		if (rt->parsed())
			return run_retract_twogen(g, word1, word2, bound, budget);
		if (verify->parsed()) {
			if (suite == "bracket-search")
				return run_bracket_suite(g, bound, budget, json, false);
			if (suite == "congruence")
				return run_bracket_suite(g, bound, budget, json, true);
			if (suite == "testword")
				return run_testword_suite(json);
			if (suite == "module-shift") {
				GroupTag mg = verify->count("--group")
				                  ? g
				                  : GroupTag::solvable(2, 2);
				std::string v =
				    verify->count("word") ? word1 : std::string("(z1,z2)");
				int shift = verify->count("--bound") ? bound : 1;
				return run_module_shift_suite(mg, v, shift, json);
			}
			if (suite == "endo-sampling") {
				if (!verify->count("word"))
					throw std::invalid_argument(
					    "endo-sampling needs a word argument");
				return run_endo_sampling_suite(g, word1, samples, seed, json);
			}
			std::cerr << "unknown suite '" << suite << "'\n";
			return kExitUsage;
		}
	} catch (const syntax_error &e) {
		std::cerr << "parse error: " << e.what() << "\n";
		return kExitUsage;
	} catch (const budget_exceeded &e) {
		std::cerr << "budget exceeded: " << e.what() << "\n";
		return kExitBudget;
	} catch (const std::exception &e) {
		std::cerr << "error: " << e.what() << "\n";
		return kExitUsage;
	}
	return kExitUsage;
}
