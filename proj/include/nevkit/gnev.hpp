#pragma once

#include "nevkit/nevfun.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nevkit {

// Generalized zero (gznt) or pole (gpnt) of nonpositive type with its multiplicity.
struct MultiplicityRecord {
	enum class Kind { gznt, gpnt };
	ExtReal point;
	Kind kind = Kind::gznt;
	int mult = 0;
	// Set when the point is an irrational real root; `point` is then its lower bound.
	std::optional<RealRoot> isolated;

	std::string point_string() const;
	friend bool operator==(const MultiplicityRecord& a, const MultiplicityRecord& b)
	{
		return a.point == b.point && a.kind == b.kind && a.mult == b.mult &&
		       a.isolated.has_value() == b.isolated.has_value();
	}
};

// phi * q0 with phi >= 0 on the real line and q0 Nevanlinna.
class GenNevFun {
  public:
	// Normalizes phi to a positive leading ratio (the constant moves into q0) and
	// computes kappa. Throws InvalidArgument if phi takes negative values.
	static GenNevFun make(const RatFun& phi, const NevFun& q0);
	static GenNevFun nevanlinna(const NevFun& q0) { return make(RatFun(1), q0); }

	const RatFun& phi() const { return phi_; }
	const NevFun& q0() const { return q0_; }
	const RatFun& q0_ratfun() const { return q0r_; }
	int kappa() const { return kappa_; }
	// phi * q0 reduced.
	RatFun product() const { return phi_ * q0r_; }
	bool is_zero() const { return q0_.is_zero(); }

	friend bool operator==(const GenNevFun& a, const GenNevFun& b)
	{
		return a.phi_ == b.phi_ && a.q0_ == b.q0_;
	}

  private:
	RatFun phi_;
	NevFun q0_;
	RatFun q0r_;
	int kappa_ = 0;
};

CRational evaluate_gen(const GenNevFun& g, const CRational& z);
std::complex<double> evaluate_gen(const GenNevFun& g, std::complex<double> z);

// Multiplicity of a generalized zero/pole of nonpositive type at a point where
// q ~ coeff (z - c)^order (finite c) or q ~ coeff z^-order (infinity).
int gznt_multiplicity(int order, int coeff_sign, bool at_infinity);
int gpnt_multiplicity(int order, int coeff_sign, bool at_infinity);

// Records with positive multiplicity, finite points ascending, infinity last.
std::vector<MultiplicityRecord> gznt_gpnt(const GenNevFun& g);
// Same, for the function given by a rational expression.
std::vector<MultiplicityRecord> gznt_gpnt(const RatFun& q);

struct Balance {
	int zeros = 0; // sum of gznt multiplicities incl. infinity and nonreal zeros in C+
	int poles = 0;
};
Balance balance(const RatFun& q);

struct CanonicalRational {
	RatFun psi, s0;
	std::vector<MultiplicityRecord> records;
	int kappa = 0;
	GenNevFun as_gen() const;
};

// s = psi * s0 with psi >= 0 and s0 Nevanlinna, from sign counting alone.
// Throws ConstantInput for constant s and IrrationalRoot for irrational odd-order points.
CanonicalRational canonical_rational(const RatFun& s);

// Canonical factorization of any real rational function, constants included.
GenNevFun canonical_of(const RatFun& q);

// (phi o tau) (q0 o tau) for a degree-one Nevanlinna tau.
GenNevFun compose_gen(const GenNevFun& g, const RatFun& tau);

} // namespace nevkit
