#include "nevkit/corpus.hpp"

#include "nevkit/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace nevkit {

int Corpus::uniform(int lo, int hi)
{
	return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

Rational Corpus::small_rational(int bound, int den)
{
	Rational x(uniform(-bound * den, bound * den), den);
	x.canonicalize();
	return x;
}

Rational Corpus::positive_weight()
{
	static const int nums[] = {1, 1, 1, 2, 3, 1, 1, 5};
	static const int dens[] = {1, 2, 3, 1, 2, 4, 1, 3};
	int i = uniform(0, 7);
	Rational w(nums[i], dens[i]);
	w.canonicalize();
	return w;
}

std::vector<Rational> Corpus::distinct_points(int n, int bound, int den)
{
	std::set<Rational> pts;
	while (static_cast<int>(pts.size()) < n)
		pts.insert(small_rational(bound, den));
	return {pts.begin(), pts.end()};
}

RatFun Corpus::rational_root_function(int max_degree)
{
	while (true) {
		int dn = uniform(0, max_degree), dd = uniform(0, max_degree);
		if (dn == 0 && dd == 0)
			continue;
		Poly num(uniform(0, 1) ? positive_weight() : Rational(-positive_weight())), den(1);
		for (int i = 0; i < dn; ++i)
			num *= Poly::linear_root(small_rational(3, 2));
		for (int i = 0; i < dd; ++i)
			den *= Poly::linear_root(small_rational(3, 2));
		RatFun r = RatFun::reduce(num, den);
		if (!r.is_constant())
			return r;
	}
}

NevFun Corpus::nevanlinna(int max_atoms)
{
	while (true) {
		int m = uniform(0, 2 * max_atoms);
		bool start_zero = uniform(0, 1) == 1;
		int poles = start_zero ? m / 2 : (m + 1) / 2;
		if (poles > max_atoms)
			continue;
		auto pts = distinct_points(m, 4, 2);
		Poly num(positive_weight()), den(1);
		for (int i = 0; i < m; ++i) {
			bool zero = (i % 2 == 0) == start_zero;
			(zero ? num : den) *= Poly::linear_root(pts[static_cast<std::size_t>(i)]);
		}
		RatFun r = RatFun::reduce(num, den);
		if (m == 0) {
			if (uniform(0, 1))
				r = -r;
			return NevFun(r.gamma(), 0);
		}
		for (const RatFun& cand : {r, -r})
			if (auto q = to_nevfun(cand))
				return *q;
	}
}

RatFun Corpus::interlacing(int points, int gamma_sign)
{
	auto pts = distinct_points(points, 5, 2);
	bool start_zero = uniform(0, 1) == 1;
	Poly num(gamma_sign < 0 ? Rational(-positive_weight()) : positive_weight()), den(1);
	for (int i = 0; i < points; ++i) {
		bool zero = (i % 2 == 0) == start_zero;
		(zero ? num : den) *= Poly::linear_root(pts[static_cast<std::size_t>(i)]);
	}
	return RatFun::reduce(num, den);
}

RatFun Corpus::simple(int max_points)
{
	while (true) {
		int n = uniform(1, max_points);
		auto pts = distinct_points(n, 4, 2);
		Poly num(uniform(0, 1) ? positive_weight() : Rational(-positive_weight())), den(1);
		for (const auto& p : pts)
			(uniform(0, 1) ? num : den) *= Poly::linear_root(p);
		// Simple at infinity too.
		if (std::abs(num.degree() - den.degree()) <= 1)
			return RatFun::reduce(num, den);
	}
}

RatFun Corpus::degree_one()
{
	Rational c = uniform(0, 1) ? positive_weight() : Rational(-positive_weight());
	switch (uniform(0, 3)) {
	case 0:
		return RatFun(Poly::linear_root(small_rational())) * RatFun(c);
	case 1:
		return RatFun(c) / RatFun(Poly::linear_root(small_rational()));
	default: {
		auto pts = distinct_points(2);
		if (uniform(0, 1))
			std::swap(pts[0], pts[1]);
		return RatFun::reduce(Poly::linear_root(pts[0]) * Poly(c), Poly::linear_root(pts[1]));
	}
	}
}

Corpus::Pair Corpus::class_pair(int max_atoms, int max_degree)
{
	return {nevanlinna(max_atoms), rational_root_function(max_degree)};
}

Corpus::Pair Corpus::n00_pair(int max_factors, bool simple_only)
{
	for (int attempt = 0; attempt < 1000; ++attempt) {
		NevFun q = nevanlinna(4);
		if (q.is_constant())
			continue;
		RatFun Q = q.to_ratfun();
		// Points of q are favoured as factor points so cancellations happen.
		std::vector<Rational> special;
		for (const auto& p : Q.real_points())
			special.push_back(p.root.value());
		auto pick = [&]() -> Rational {
			if (!special.empty() && uniform(0, 2) > 0)
				return special[static_cast<std::size_t>(uniform(0, static_cast<int>(special.size()) - 1))];
			return small_rational();
		};

		RatFun r(1), acc = Q;
		int wanted = uniform(1, max_factors);
		for (int k = 0; k < wanted; ++k) {
			for (int t = 0; t < 30; ++t) {
				Rational c = uniform(0, 1) ? positive_weight() : Rational(-positive_weight());
				RatFun f;
				int shape = uniform(0, 3);
				if (shape == 0) {
					f = RatFun(Poly::linear_root(pick())) * RatFun(c);
				} else if (shape == 1) {
					f = RatFun(c) / RatFun(Poly::linear_root(pick()));
				} else {
					Rational a = pick(), b = pick();
					if (a == b)
						continue;
					f = RatFun::reduce(Poly::linear_root(a) * Poly(c), Poly::linear_root(b));
				}
				RatFun next = acc * f;
				if (next.is_zero() || !herglotz_check(next).ok)
					continue;
				acc = next;
				r = r * f;
				break;
			}
		}
		if (r.is_constant())
			continue;
		if (simple_only) {
			bool simple = !r.has_nonreal_points() && std::abs(r.order_at_infinity()) <= 1;
			for (const auto& p : r.real_points())
				if (p.mult() != 1)
					simple = false;
			if (!simple)
				continue;
		}
		return {q, r};
	}
	throw InvalidArgument("could not generate a pair");
}

std::vector<RatFun> rational_root_corpus(int count, std::uint64_t seed, int max_degree)
{
	Corpus c(seed);
	std::vector<RatFun> out;
	for (int i = 0; i < count; ++i)
		out.push_back(c.rational_root_function(max_degree));
	return out;
}

std::vector<RatFun> interlacing_corpus(int count, std::uint64_t seed)
{
	Corpus c(seed);
	std::vector<RatFun> out;
	for (int i = 0; i < count; ++i) {
		// Cycle through both signs and both parities of the point count.
		int points = 1 + (i % 2) + 2 * ((i / 4) % 3);
		out.push_back(c.interlacing(points, (i / 2) % 2 ? -1 : 1));
	}
	return out;
}

std::vector<Corpus::Pair> class_pair_corpus(int count, std::uint64_t seed)
{
	Corpus c(seed);
	std::vector<Corpus::Pair> out;
	for (int i = 0; i < count; ++i)
		out.push_back(c.class_pair());
	return out;
}

std::vector<Corpus::Pair> n00_corpus(int count, std::uint64_t seed)
{
	Corpus c(seed);
	std::vector<Corpus::Pair> out;
	for (int i = 0; i < count; ++i)
		out.push_back(c.n00_pair());
	return out;
}

std::vector<Corpus::Pair> simple_r_corpus(int count, std::uint64_t seed)
{
	Corpus c(seed);
	std::vector<Corpus::Pair> out;
	for (int i = 0; i < count; ++i) {
		if (i % 2 == 0) {
			out.push_back(c.n00_pair(4, true));
		} else {
			NevFun q;
			do
				q = c.nevanlinna(4);
			while (q.is_zero());
			out.push_back({q, c.simple(4)});
		}
	}
	return out;
}

} // namespace nevkit
