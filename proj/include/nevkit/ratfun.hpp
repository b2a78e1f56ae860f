#pragma once

#include "nevkit/roots.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace nevkit {

// How a limit at a real point (or at infinity) is approached. At infinity,
// from_left means x -> +inf and from_right means x -> -inf, matching the
// orientation of the projective line.
enum class Approach { nontangential, from_left, from_right };

// r(z) ~ coeff * (z - c)^order near a finite c; r(z) ~ coeff * z^(-order) near infinity.
struct Laurent {
	int order = 0;
	Rational coeff;
};

// A real zero or pole of a rational function.
struct RealPoint {
	RealRoot root;
	bool pole = false;
	int mult() const { return root.mult; }
	bool odd() const { return root.mult % 2 != 0; }
};

// Symmetric rational function num/den in lowest terms with a monic denominator.
class RatFun {
  public:
	RatFun() : RatFun(Rational(0)) {}
	RatFun(Rational c);
	RatFun(long c) : RatFun(Rational(c)) {}
	RatFun(const Poly& p);

	static RatFun reduce(const Poly& num, const Poly& den);
	// (a z + b) / (c z + d)
	static RatFun mobius(const Rational& a, const Rational& b, const Rational& c,
	                     const Rational& d);

	const Poly& num() const { return d_->num; }
	const Poly& den() const { return d_->den; }
	// Leading-coefficient ratio.
	Rational gamma() const { return num().lead(); }
	int degree() const { return std::max(num().degree(), den().degree()); }
	bool is_zero() const { return num().is_zero(); }
	bool is_constant() const { return degree() <= 0; }
	bool is_polynomial() const { return den().degree() == 0; }

	const RootData& zeros() const { return d_->zeros; }
	const RootData& poles() const { return d_->poles; }
	// Positive: zero at infinity of that order; negative: pole.
	int order_at_infinity() const;
	bool has_nonreal_points() const;
	// Zeros and poles on the real line, ascending.
	std::vector<RealPoint> real_points() const;

	Rational operator()(const Rational& x) const;
	CRational operator()(const CRational& z) const;
	std::complex<double> operator()(std::complex<double> z) const;
	// Sign of r at a point which is neither a zero nor a pole.
	int sign_at(const Rational& x) const;

	Laurent laurent(const Rational& c) const;
	Laurent laurent_at_infinity() const;
	Laurent laurent(const ExtReal& c) const;
	Limit limit(const ExtReal& c, Approach how = Approach::nontangential) const;

	RatFun inverse() const;

	friend RatFun operator+(const RatFun& a, const RatFun& b);
	friend RatFun operator-(const RatFun& a, const RatFun& b);
	friend RatFun operator-(const RatFun& a);
	friend RatFun operator*(const RatFun& a, const RatFun& b);
	friend RatFun operator/(const RatFun& a, const RatFun& b);
	friend bool operator==(const RatFun& a, const RatFun& b)
	{
		return a.num() == b.num() && a.den() == b.den();
	}

	std::string to_string(const char* var = "z") const;

  private:
	struct Data {
		Poly num, den;
		RootData zeros, poles;
	};
	std::shared_ptr<const Data> d_;
};

// Interval end on the extended real line; a finite end may be an isolated root.
struct Endpoint {
	enum class Kind { neg_inf, finite, pos_inf };
	Kind kind = Kind::finite;
	RealRoot at;

	static Endpoint neg_infinity() { return {Kind::neg_inf, {}}; }
	static Endpoint pos_infinity() { return {Kind::pos_inf, {}}; }
	static Endpoint point(const Rational& x) { return {Kind::finite, RealRoot{x, x, Poly::linear_root(x), 1}}; }
	static Endpoint root(const RealRoot& r) { return {Kind::finite, r}; }
	bool finite() const { return kind == Kind::finite; }
	std::string to_string() const;
};

struct SignPiece {
	Endpoint left, right;
	int sign = 0;
	// Even-order zeros/poles inside the piece, where r is 0 or infinite.
	std::vector<RealRoot> excluded;
};

struct SignReport {
	std::vector<SignPiece> pieces;
	std::vector<SignPiece> with_sign(int s) const;
};

// Maximal constant-sign pieces of r on (lo, hi); nullopt bounds are -inf / +inf.
SignReport sign_on_interval(const RatFun& r, const std::optional<Rational>& lo = std::nullopt,
                            const std::optional<Rational>& hi = std::nullopt);

// Number of odd-order real zeros and poles strictly greater than c.
int eta_count(const RatFun& r, const Rational& c);

// r o tau for a degree-one tau.
RatFun compose_mobius(const RatFun& r, const RatFun& tau);

// Sign of the leading Laurent coefficient of r at one of its own real points.
int laurent_sign(const RatFun& r, const RealPoint& p);

// Sign of r at a real root of some other polynomial; nullopt when r vanishes or
// has a pole there.
std::optional<int> sign_at_root(const RatFun& r, const RealRoot& x);

// Some rational strictly between two distinct roots a < b.
Rational point_between(const RealRoot& a, const RealRoot& b);

} // namespace nevkit
