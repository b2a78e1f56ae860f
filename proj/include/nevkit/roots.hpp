#pragma once

#include "nevkit/poly.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace nevkit {

// A real root, either exact (lo == hi) or isolated in the open interval (lo, hi)
// as a simple root of `sqf`, which then has no rational roots at all.
struct RealRoot {
	Rational lo, hi;
	Poly sqf;
	int mult = 1;

	bool exact() const { return lo == hi; }
	// Throws IrrationalRoot when the root is only isolated.
	const Rational& value() const;
	double approx() const;
	// Sign of (root - c).
	int compare(const Rational& c) const;
	// Interval shrunk below `width` (no-op for exact roots).
	RealRoot refined(const Rational& width) const;
	std::string to_string() const;
};

// Strict order of two distinct roots, refining copies as needed.
bool root_less(const RealRoot& a, const RealRoot& b);

// Part of a squarefree factor that did not split into rational linear factors.
// Its real roots are listed as inexact RealRoots; the rest come in conjugate pairs.
struct UnsplitFactor {
	Poly poly;
	int mult = 1;
	int real_roots = 0;
	int nonreal_pairs() const { return (poly.degree() - real_roots) / 2; }
};

struct RootData {
	std::vector<RealRoot> real; // sorted, pairwise separated
	std::vector<UnsplitFactor> unsplit;

	int nonreal_count() const; // with multiplicity, counting both members of each pair
	bool all_real_rational() const;
};

// Yun decomposition: p = c * prod f_i^i, each f_i monic squarefree.
std::vector<std::pair<Poly, int>> squarefree_factors(const Poly& p);

// Distinct real roots in the open interval (lo, hi); nullopt ends are infinite.
int count_real_roots(const Poly& p, const std::optional<Rational>& lo,
                     const std::optional<Rational>& hi);

// Rational with the smallest denominator in the closed interval [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi);

// Isolation width for irrational roots: 2^-64 unless NEVKIT_PRECISION says otherwise
// ("k" for 2^-k, or an explicit "p/q").
Rational root_width();

RootData find_roots(const Poly& p);

// Separates two root lists (e.g. zeros and poles) so every pair is ordered.
void separate(std::vector<RealRoot>& a, std::vector<RealRoot>& b);

} // namespace nevkit
