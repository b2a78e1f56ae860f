#pragma once

#include "nevkit/nevfun.hpp"

#include <complex>
#include <string>
#include <vector>

namespace nevkit {

// omega enters the Weyl function only through its square, which stays rational.
struct OmegaEntry {
	Rational t;
	Rational value_sq;
	friend bool operator==(const OmegaEntry& a, const OmegaEntry& b)
	{
		return a.t == b.t && a.value_sq == b.value_sq;
	}
};

// Multiplication-by-t model in L2(sigma) (plus the beta part) anchored at xi.
struct L2Model {
	Rational beta = 0;
	AtomicMeasure sigma;
	ExtReal xi;
	std::vector<OmegaEntry> omega; // one entry per atom, same order as sigma
	Rational omega_inf_sq = 1;
	Rational eta = 0;

	Rational omega_sq_at(const Rational& t) const;
	// Measure (t - xi)^2 |omega|^2 dsigma (finite xi) or |omega|^2 dsigma (xi = infinity).
	AtomicMeasure induced_measure() const;
	friend bool operator==(const L2Model& a, const L2Model& b)
	{
		return a.beta == b.beta && a.sigma == b.sigma && a.xi == b.xi && a.omega == b.omega &&
		       a.omega_inf_sq == b.omega_inf_sq && a.eta == b.eta;
	}
};

// Throws NotKacMember unless q belongs to N(xi, 1).
L2Model minimal_model(const NevFun& q, const ExtReal& xi);

CRational model_weyl(const L2Model& m, const CRational& lambda);
std::complex<double> model_weyl(const L2Model& m, std::complex<double> lambda);
// The realized function in representation form.
NevFun model_function(const L2Model& m);

enum class TransformCase { both_finite, bn_infinite, an_infinite };
std::string to_string(TransformCase c);

struct ZetaEntry {
	ExtReal pole;
	Rational value;       // from the Laurent data of r and the limits of q
	Rational from_residue; // the point mass of r q at the pole
};

struct RealizationTransformReport {
	TransformCase kind = TransformCase::both_finite;
	std::vector<ExtReal> zeros, poles; // enumerated a_1..a_n and b_1..b_n
	std::vector<ZetaEntry> zetas;      // distinct poles
	L2Model model_out;
};

// Zeros and poles of r with multiplicity: double points first, then simple points,
// ascending, infinity last.
void enumerate_points(const RatFun& r, std::vector<ExtReal>& zeros, std::vector<ExtReal>& poles);

// Throws NotInN00 when q is not in the class for r, InvalidArgument when m is not the
// minimal model of q at the first pole of r.
RealizationTransformReport transform_model(const L2Model& m, const RatFun& r, const NevFun& q);

// The output model's spectral measure is |r| times the input one off the poles of r
// and carries the point masses of r q at the poles.
bool model_spectral_check(const L2Model& in, const L2Model& out, const RatFun& r);

} // namespace nevkit
