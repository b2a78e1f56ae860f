#pragma once

#include "nevkit/ratfun.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace nevkit {

struct Atom {
	Rational t, w;
	friend bool operator==(const Atom& a, const Atom& b) { return a.t == b.t && a.w == b.w; }
};

// Finite positive point masses at distinct rational positions, kept sorted.
class AtomicMeasure {
  public:
	AtomicMeasure() = default;
	explicit AtomicMeasure(std::vector<Atom> atoms);

	const std::vector<Atom>& atoms() const { return atoms_; }
	bool empty() const { return atoms_.empty(); }
	std::size_t size() const { return atoms_.size(); }
	Rational mass_at(const Rational& t) const;
	Rational total_mass() const;
	friend bool operator==(const AtomicMeasure& a, const AtomicMeasure& b)
	{
		return a.atoms_ == b.atoms_;
	}

  private:
	std::vector<Atom> atoms_;
};

// alpha + beta z + sum w (1/(t - z) - t/(1 + t^2))
struct NevFun {
	Rational alpha = 0;
	Rational beta = 0;
	AtomicMeasure sigma;

	NevFun() = default;
	NevFun(Rational a, Rational b, AtomicMeasure s = {});

	// Limit at infinity of Q(z) - beta z.
	Rational constant_at_infinity() const;
	bool is_zero() const { return alpha == 0 && beta == 0 && sigma.empty(); }
	bool is_constant() const { return beta == 0 && sigma.empty(); }
	RatFun to_ratfun() const;

	friend bool operator==(const NevFun& a, const NevFun& b)
	{
		return a.alpha == b.alpha && a.beta == b.beta && a.sigma == b.sigma;
	}
};

// Outcome of the exact Herglotz test on a rational function.
struct HerglotzCheck {
	bool ok = false;
	std::string reason;
	std::optional<NevFun> fun;
};

// Decides whether r is a Nevanlinna function and, if so, recovers (alpha, beta, sigma).
// Real poles must be rational; an irrational simple pole raises IrrationalRoot.
HerglotzCheck herglotz_check(const RatFun& r);
std::optional<NevFun> to_nevfun(const RatFun& r);
// Like to_nevfun but throws NotNevanlinna with the reason.
NevFun require_nevfun(const RatFun& r, const std::string& what = "function");

CRational evaluate(const NevFun& q, const CRational& z);
std::complex<double> evaluate(const NevFun& q, std::complex<double> z);
Rational evaluate(const NevFun& q, const Rational& x);

enum class LimitMode { value, residue, slope };

// value: lim Q; residue: lim (c - z) Q (or lim Q/z at infinity); slope: lim Q/(z - c).
Limit limit_at(const NevFun& q, const ExtReal& c, LimitMode mode,
               Approach how = Approach::nontangential);
// lim_{x -> -inf} (Q(x) - beta x).
Rational limit_at_minus_infinity(const NevFun& q);
// lim z Q(z) at infinity when beta = 0 and Q vanishes there.
Limit first_moment_at_infinity(const NevFun& q);

bool kac_membership(const NevFun& q, const ExtReal& xi);

enum class GapShape { bounded_gap, complement_gap, left_ray };

struct CharacterizationReport {
	GapShape shape = GapShape::bounded_gap;
	Rational c, d;
	// The main condition of the relevant characterization holds.
	bool holds = false;
	// Boundary limit: x -> d from the left (bounded), x -> d from the right
	// (complement), x -> -inf of Q - beta x (left ray).
	Limit eta;
	// Transformed representative when the limit is finite.
	std::optional<NevFun> representative;
	// Left ray only: the same data for the limit x -> c from the left.
	Limit eta_endpoint;
	std::optional<NevFun> representative_endpoint;
	bool holds_endpoint = false;
};

// Throws GapViolated when spectrum meets the gap.
CharacterizationReport gap_characterize(const NevFun& q, const Rational& c, const Rational& d,
                                        GapShape shape);

// Which of the six products built from (z - c), (z - d) stay Nevanlinna.
struct ProductPredicates {
	bool c_over_d = false;  // (z-c)/(z-d) Q
	bool d_over_c = false;  // (z-d)/(z-c) Q
	bool c_over_dm = false; // (z-c)/(d-z) Q
	bool d_over_cm = false; // (z-d)/(c-z) Q
	bool times_c = false;   // (z-c) Q
	bool over_c = false;    // Q/(z-c)
};

ProductPredicates corollary_products(const NevFun& q, const Rational& c, const Rational& d);

std::string to_string(const NevFun& q);

} // namespace nevkit
