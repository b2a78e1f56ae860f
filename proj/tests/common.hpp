#pragma once

#include "nevkit/corpus.hpp"
#include "nevkit/errors.hpp"
#include "nevkit/json_io.hpp"
#include "nevkit/oracle.hpp"
#include "nevkit/realize.hpp"

#include <doctest.h>

namespace test {

using namespace nevkit;

inline const RatFun z = Poly::identity();

inline Rational q_(long p, long q = 1)
{
	Rational x(p, q);
	x.canonicalize();
	return x;
}

// Ascending integer or rational coefficients.
inline Poly P(std::initializer_list<Rational> cs) { return Poly(std::vector<Rational>(cs)); }

// (z - a)/(z - b)
inline RatFun ratio(const Rational& a, const Rational& b)
{
	return RatFun::reduce(Poly::linear_root(a), Poly::linear_root(b));
}

// The worked pair used throughout: q = (z-1)/(2-z), r = (z-2)^2 z/((z-1)^2 (z-3)).
inline RatFun worked_q() { return (z - 1) / (2 - z); }
inline RatFun worked_r() { return (z - 2) * (z - 2) * z / ((z - 1) * (z - 1) * (z - 3)); }

inline std::vector<CRational> upper_points(int n, std::uint64_t seed)
{
	Corpus c(seed);
	std::vector<CRational> pts;
	while (static_cast<int>(pts.size()) < n)
		pts.push_back({c.small_rational(5, 3), c.positive_weight()});
	return pts;
}

} // namespace test
