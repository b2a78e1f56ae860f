#pragma once

#include "nevkit/rational.hpp"

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace nevkit {

// Univariate polynomial with exact rational coefficients, ascending degree.
class Poly {
  public:
	Poly() = default;
	explicit Poly(std::vector<Rational> coeffs);
	Poly(Rational constant);
	Poly(long constant) : Poly(Rational(constant)) {}

	static Poly identity(); // z
	static Poly linear_root(const Rational& a); // z - a
	static Poly monomial(const Rational& c, int k);

	// -1 for the zero polynomial.
	int degree() const { return static_cast<int>(c_.size()) - 1; }
	bool is_zero() const { return c_.empty(); }
	bool is_constant() const { return c_.size() <= 1; }
	const std::vector<Rational>& coeffs() const { return c_; }
	Rational coeff(int k) const;
	Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }

	Rational operator()(const Rational& x) const;
	CRational operator()(const CRational& z) const;
	std::complex<double> operator()(std::complex<double> z) const;
	std::complex<long double> operator()(std::complex<long double> z) const;

	Poly derivative() const;
	Poly monic() const;
	// Positive integer multiple with coprime integer coefficients.
	Poly primitive() const;
	Poly pow(int k) const;
	Poly compose(const Poly& inner) const;
	// p(-z)
	Poly reflect() const;

	friend Poly operator+(const Poly& a, const Poly& b);
	friend Poly operator-(const Poly& a, const Poly& b);
	friend Poly operator-(const Poly& a);
	friend Poly operator*(const Poly& a, const Poly& b);
	friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
	Poly& operator+=(const Poly& b) { return *this = *this + b; }
	Poly& operator-=(const Poly& b) { return *this = *this - b; }
	Poly& operator*=(const Poly& b) { return *this = *this * b; }

	// Euclidean division: a = q*b + r, deg r < deg b.
	static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
	// Monic gcd (zero only if both are zero).
	static Poly gcd(const Poly& a, const Poly& b);
	// Exact quotient; the remainder is required to vanish.
	static Poly exact_div(const Poly& a, const Poly& b);

	std::string to_string(const char* var = "z") const;

  private:
	void trim();
	std::vector<Rational> c_;
};

// Sign of p just to the right of x (x may be a root).
int sign_right_of(const Poly& p, const Rational& x);
int sign_left_of(const Poly& p, const Rational& x);

// Multiplicity of x as a root of p (0 when p(x) != 0).
int root_multiplicity(const Poly& p, const Rational& x);

// p(z) = (z - x)^m * rest(z) with rest(x) != 0.
Poly deflate(const Poly& p, const Rational& x, int m);

} // namespace nevkit
