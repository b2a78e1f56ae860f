#pragma once

#include "nevkit/classify.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace nevkit {

// Deterministic generators for tests, the acceptance run and selftest.
class Corpus {
  public:
	explicit Corpus(std::uint64_t seed) : rng_(seed) {}

	// Small rational: k/den with |k/den| <= bound.
	Rational small_rational(int bound = 4, int den = 2);
	Rational positive_weight();

	// Real rational roots only, degree <= max_degree, nonconstant.
	RatFun rational_root_function(int max_degree = 8);
	// Nevanlinna function built from interlacing rational zeros and poles, so that its
	// zeros are rational as well. At most max_atoms atoms; may carry beta > 0.
	NevFun nevanlinna(int max_atoms = 6);
	// Simple function whose zeros and poles interlace; n points, n >= 1.
	RatFun interlacing(int points, int gamma_sign);
	// Simple function (infinity included) with distinct real points, not necessarily interlacing.
	RatFun simple(int max_points = 4);
	// Degree-one symmetric function.
	RatFun degree_one();

	struct Pair {
		NevFun q;
		RatFun r;
	};
	// q with r of degree <= max_degree (rational roots).
	Pair class_pair(int max_atoms = 6, int max_degree = 4);
	// Pair with r q Nevanlinna, built from degree-one factors that keep the running
	// product Nevanlinna. With simple_only, r has simple real points only.
	Pair n00_pair(int max_factors = 4, bool simple_only = false);

	std::mt19937_64& rng() { return rng_; }

  private:
	int uniform(int lo, int hi);
	std::vector<Rational> distinct_points(int n, int bound = 4, int den = 2);
	std::mt19937_64 rng_;
};

std::vector<RatFun> rational_root_corpus(int count, std::uint64_t seed, int max_degree = 8);
std::vector<RatFun> interlacing_corpus(int count, std::uint64_t seed);
std::vector<Corpus::Pair> class_pair_corpus(int count, std::uint64_t seed);
std::vector<Corpus::Pair> n00_corpus(int count, std::uint64_t seed);
// Pairs with simple r: about half are members, built like n00_pair, the rest random.
std::vector<Corpus::Pair> simple_r_corpus(int count, std::uint64_t seed);

} // namespace nevkit
