#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

namespace nevkit {

using Rational = mpq_class;

inline int sgn(const Rational& x) { return ::sgn(x); }

std::string to_string(const Rational& x);

// Accepts "p/q", integers and plain decimals like "-0.25".
Rational parse_rational(const std::string& text);

inline double to_double(const Rational& x) { return x.get_d(); }

// Exact complex number with rational parts.
struct CRational {
	Rational re, im;

	CRational() = default;
	CRational(Rational r) : re(std::move(r)), im(0) {}
	CRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
	CRational(long r) : re(r), im(0) {}

	CRational conj() const { return {re, -im}; }
	Rational norm() const { return re * re + im * im; }
	bool is_zero() const { return re == 0 && im == 0; }
	bool is_real() const { return im == 0; }
	std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

	friend bool operator==(const CRational& a, const CRational& b)
	{
		return a.re == b.re && a.im == b.im;
	}
	friend CRational operator+(const CRational& a, const CRational& b)
	{
		return {a.re + b.re, a.im + b.im};
	}
	friend CRational operator-(const CRational& a, const CRational& b)
	{
		return {a.re - b.re, a.im - b.im};
	}
	friend CRational operator-(const CRational& a) { return {-a.re, -a.im}; }
	friend CRational operator*(const CRational& a, const CRational& b)
	{
		return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
	}
	friend CRational operator/(const CRational& a, const CRational& b);
	CRational& operator+=(const CRational& b) { return *this = *this + b; }
	CRational& operator-=(const CRational& b) { return *this = *this - b; }
	CRational& operator*=(const CRational& b) { return *this = *this * b; }
};

std::string to_string(const CRational& z);

// The point at infinity, or a finite rational.
class ExtReal {
  public:
	ExtReal() : inf_(false), v_(0) {}
	ExtReal(Rational v) : inf_(false), v_(std::move(v)) {}
	ExtReal(long v) : inf_(false), v_(v) {}
	static ExtReal infinity()
	{
		ExtReal e;
		e.inf_ = true;
		return e;
	}

	bool is_infinite() const { return inf_; }
	bool is_finite() const { return !inf_; }
	const Rational& value() const { return v_; }

	friend bool operator==(const ExtReal& a, const ExtReal& b)
	{
		return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
	}
	// Total order used for sorting point lists: finite values ascending, then infinity.
	friend bool operator<(const ExtReal& a, const ExtReal& b)
	{
		if (a.inf_ || b.inf_)
			return !a.inf_ && b.inf_;
		return a.v_ < b.v_;
	}

  private:
	bool inf_;
	Rational v_;
};

std::string to_string(const ExtReal& x);
ExtReal parse_ext_real(const std::string& text);

// Result of a limit computation; divergence is kept symbolic.
struct Limit {
	enum class Kind { finite, pos_inf, neg_inf, unsigned_inf };
	Kind kind = Kind::finite;
	Rational value;

	static Limit finite(Rational v) { return {Kind::finite, std::move(v)}; }
	static Limit pos_inf() { return {Kind::pos_inf, 0}; }
	static Limit neg_inf() { return {Kind::neg_inf, 0}; }
	static Limit unsigned_inf() { return {Kind::unsigned_inf, 0}; }
	// Infinity whose sign is that of s (unsigned when s == 0).
	static Limit infinite(int s)
	{
		return s > 0 ? pos_inf() : s < 0 ? neg_inf() : unsigned_inf();
	}

	bool is_finite() const { return kind == Kind::finite; }
	bool is_infinite() const { return kind != Kind::finite; }
	friend bool operator==(const Limit& a, const Limit& b)
	{
		return a.kind == b.kind && (a.kind != Kind::finite || a.value == b.value);
	}
};

std::string to_string(const Limit& l);

} // namespace nevkit
