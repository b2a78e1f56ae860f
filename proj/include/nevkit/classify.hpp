#pragma once

#include "nevkit/gnev.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nevkit {

struct Violation {
	std::string point;
	std::string reason;
};

struct ClassReport {
	bool member = false;
	int kappa = 0;
	int kappa_tilde = 0;
	std::optional<GenNevFun> witness;
	// Atoms of q0 (and infinity when beta > 0) at which r is negative; for rational
	// data these are always admissible exceptional poles.
	std::vector<ExtReal> exceptional_poles;
	std::vector<Violation> violations;
};

ClassReport membership(const GenNevFun& g, const RatFun& r);

// One degree-one step: for s of degree <= 1 and q0 Nevanlinna, returns (psi, q1)
// with s q0 = psi q1, psi >= 0 and q1 Nevanlinna.
struct StepResult {
	RatFun psi;
	NevFun q1;
};
StepResult single_factor_step(const RatFun& s, const NevFun& q0);

// Canonical factorization of r * (phi q0), assembled factor by factor.
GenNevFun product_factorization(const GenNevFun& g, const RatFun& r);

// The four equivalent descriptions of "s q0 is Nevanlinna" for simple s.
struct SimpleForms {
	bool direct = false;      // herglotz check of s q0
	bool no_new_points = false;
	bool sign_pattern = false;
	bool boundary_limits = false;
	bool agree() const
	{
		return direct == no_new_points && direct == sign_pattern && direct == boundary_limits;
	}
};
SimpleForms simple_forms(const NevFun& q0, const RatFun& s);

struct N00Report {
	bool ok = false;
	std::vector<Violation> failures;
	std::optional<SimpleForms> forms; // present when r is simple
};
N00Report check_N00(const NevFun& q, const RatFun& r);

// Closed arc of the projective line, traversed upward from `from` to `to`
// (passing through infinity when from > to).
struct Arc {
	ExtReal from, to;
	bool full = false;
	bool contains(const ExtReal& x) const;
	std::string to_string() const;
};
// Closure of {f < 0} for f of degree <= 1; nullopt when empty.
std::optional<Arc> negative_arc(const RatFun& f);
bool arcs_disjoint(const Arc& a, const Arc& b);
bool negative_sets_disjoint(const std::vector<RatFun>& factors);

// Degree-one factors of a simple function with interlacing zeros and poles.
std::vector<RatFun> sprod_factorize(const RatFun& s);

struct FactorChain {
	std::vector<RatFun> factors;
	// q * f_1 * ... * f_i for i = 1..n, each in representation form.
	std::vector<NevFun> partial_certificates;
	// True when the prescribed order failed and a certified order was found by search.
	bool searched = false;
};

FactorChain chain_factorize(const NevFun& q, const RatFun& r);
// Index of the first factor after which q * f_1 ... f_i stops being Nevanlinna.
std::optional<std::size_t> first_failing_partial(const NevFun& q, const std::vector<RatFun>& factors);

std::vector<ExtReal> candidate_points(const GenNevFun& g, const RatFun& r);

struct KacEntry {
	ExtReal point;
	bool holds = false;
};
struct KacClosure {
	std::vector<KacEntry> poles; // q in N(b, 1)
	std::vector<KacEntry> zeros; // r q in N(a, 1)
	bool all() const;
};
KacClosure kac_closure(const NevFun& q, const RatFun& r);

} // namespace nevkit
