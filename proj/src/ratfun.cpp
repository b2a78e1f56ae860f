#include "nevkit/ratfun.hpp"

#include "nevkit/errors.hpp"

#include <algorithm>

namespace nevkit {

RatFun::RatFun(Rational c)
{
	auto d = std::make_shared<Data>();
	d->num = Poly(std::move(c));
	d->den = Poly(1);
	d_ = std::move(d);
}

RatFun::RatFun(const Poly& p) { *this = reduce(p, Poly(1)); }

RatFun RatFun::reduce(const Poly& num, const Poly& den)
{
	if (den.is_zero())
		throw IdenticallyZeroDenominator("denominator is the zero polynomial");
	auto d = std::make_shared<Data>();
	if (num.is_zero()) {
		d->num = Poly();
		d->den = Poly(1);
		RatFun r;
		r.d_ = std::move(d);
		return r;
	}
	Poly g = Poly::gcd(num, den);
	Poly n = Poly::exact_div(num, g);
	Poly m = Poly::exact_div(den, g);
	Rational l = m.lead();
	d->num = n * Poly(1 / l);
	d->den = m * Poly(1 / l);
	d->zeros = find_roots(d->num);
	d->poles = find_roots(d->den);
	separate(d->zeros.real, d->poles.real);
	RatFun r;
	r.d_ = std::move(d);
	return r;
}

RatFun RatFun::mobius(const Rational& a, const Rational& b, const Rational& c, const Rational& d)
{
	return reduce(Poly(std::vector<Rational>{b, a}), Poly(std::vector<Rational>{d, c}));
}

int RatFun::order_at_infinity() const
{
	if (is_zero())
		return 0;
	return den().degree() - num().degree();
}

bool RatFun::has_nonreal_points() const
{
	return zeros().nonreal_count() > 0 || poles().nonreal_count() > 0;
}

std::vector<RealPoint> RatFun::real_points() const
{
	std::vector<RealPoint> out;
	for (const auto& z : zeros().real)
		out.push_back({z, false});
	for (const auto& p : poles().real)
		out.push_back({p, true});
	std::sort(out.begin(), out.end(),
	          [](const RealPoint& a, const RealPoint& b) { return a.root.lo < b.root.lo; });
	return out;
}

Rational RatFun::operator()(const Rational& x) const
{
	Rational dv = den()(x);
	if (dv == 0)
		throw PoleHit("rational function evaluated at its pole " + x.get_str());
	return num()(x) / dv;
}

CRational RatFun::operator()(const CRational& z) const
{
	CRational dv = den()(z);
	if (dv.is_zero())
		throw PoleHit("rational function evaluated at a pole");
	return num()(z) / dv;
}

std::complex<double> RatFun::operator()(std::complex<double> z) const
{
	return num()(z) / den()(z);
}

int RatFun::sign_at(const Rational& x) const
{
	int a = sgn(num()(x));
	int b = sgn(den()(x));
	if (a == 0 || b == 0)
		throw InvalidArgument("sign requested at a zero or pole " + x.get_str());
	return a * b;
}

Laurent RatFun::laurent(const Rational& c) const
{
	if (is_zero())
		return {0, 0};
	int m = root_multiplicity(num(), c);
	int n = root_multiplicity(den(), c);
	return {m - n, deflate(num(), c, m)(c) / deflate(den(), c, n)(c)};
}

Laurent RatFun::laurent_at_infinity() const
{
	if (is_zero())
		return {0, 0};
	return {order_at_infinity(), num().lead() / den().lead()};
}

Laurent RatFun::laurent(const ExtReal& c) const
{
	return c.is_infinite() ? laurent_at_infinity() : laurent(c.value());
}

Limit RatFun::limit(const ExtReal& c, Approach how) const
{
	Laurent l = laurent(c);
	if (l.order > 0)
		return Limit::finite(0);
	if (l.order == 0)
		return Limit::finite(l.coeff);
	int s = sgn(l.coeff);
	int k = -l.order;
	switch (how) {
	case Approach::nontangential:
		return Limit::unsigned_inf();
	case Approach::from_right:
		// (x - c) > 0 finite; x -> -inf at infinity
		if (c.is_infinite())
			return Limit::infinite(k % 2 ? -s : s);
		return Limit::infinite(s);
	case Approach::from_left:
		if (c.is_infinite())
			return Limit::infinite(s);
		return Limit::infinite(k % 2 ? -s : s);
	}
	return Limit::unsigned_inf();
}

RatFun RatFun::inverse() const
{
	if (is_zero())
		throw PoleHit("inverse of the zero function");
	return reduce(den(), num());
}

RatFun operator+(const RatFun& a, const RatFun& b)
{
	return RatFun::reduce(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}

RatFun operator-(const RatFun& a) { return RatFun::reduce(-a.num(), a.den()); }

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b)
{
	return RatFun::reduce(a.num() * b.num(), a.den() * b.den());
}

RatFun operator/(const RatFun& a, const RatFun& b)
{
	if (b.is_zero())
		throw PoleHit("division by the zero function");
	return RatFun::reduce(a.num() * b.den(), a.den() * b.num());
}

std::string RatFun::to_string(const char* var) const
{
	if (den().degree() == 0)
		return num().to_string(var);
	return "(" + num().to_string(var) + ")/(" + den().to_string(var) + ")";
}

std::string Endpoint::to_string() const
{
	switch (kind) {
	case Kind::neg_inf:
		return "-inf";
	case Kind::pos_inf:
		return "+inf";
	case Kind::finite:
		return at.to_string();
	}
	return "?";
}

std::vector<SignPiece> SignReport::with_sign(int s) const
{
	std::vector<SignPiece> out;
	for (const auto& p : pieces)
		if (p.sign == s)
			out.push_back(p);
	return out;
}

Rational point_between(const RealRoot& a, const RealRoot& b)
{
	RealRoot x = a, y = b;
	while (!(x.hi < y.lo)) {
		if (x.exact() && y.exact())
			throw InvalidArgument("point_between on coincident roots");
		if (!x.exact())
			x = x.refined((x.hi - x.lo) / 2);
		if (!y.exact())
			y = y.refined((y.hi - y.lo) / 2);
	}
	return (x.hi + y.lo) / 2;
}

SignReport sign_on_interval(const RatFun& r, const std::optional<Rational>& lo,
                            const std::optional<Rational>& hi)
{
	if (lo && hi && *lo >= *hi)
		throw InvalidArgument("sign_on_interval needs lo < hi");

	std::vector<RealPoint> inside;
	for (const auto& p : r.real_points()) {
		if (lo && p.root.compare(*lo) <= 0)
			continue;
		if (hi && p.root.compare(*hi) >= 0)
			continue;
		inside.push_back(p);
	}

	Endpoint left = lo ? Endpoint::point(*lo) : Endpoint::neg_infinity();
	Endpoint right = hi ? Endpoint::point(*hi) : Endpoint::pos_infinity();

	auto sample_after = [&](const Endpoint& from, std::size_t next) -> Rational {
		// A rational strictly between `from` and the next listed point (or the right end).
		bool have_next = next < inside.size();
		if (from.kind == Endpoint::Kind::neg_inf) {
			if (have_next)
				return inside[next].root.lo - 1;
			if (right.finite())
				return right.at.lo - 1;
			return 0;
		}
		if (have_next)
			return point_between(from.at, inside[next].root);
		if (right.finite())
			return point_between(from.at, right.at);
		return from.at.hi + 1;
	};

	SignReport rep;
	SignPiece cur{left, right, 0, {}};
	Endpoint from = left;
	std::size_t i = 0;
	while (true) {
		if (cur.sign == 0)
			cur.sign = r.sign_at(sample_after(from, i));
		if (i == inside.size()) {
			cur.right = right;
			rep.pieces.push_back(cur);
			break;
		}
		const RealPoint& p = inside[i];
		from = Endpoint::root(p.root);
		++i;
		if (p.odd()) {
			cur.right = from;
			rep.pieces.push_back(cur);
			cur = SignPiece{from, right, 0, {}};
		} else {
			cur.excluded.push_back(p.root);
		}
	}
	return rep;
}

int laurent_sign(const RatFun& r, const RealPoint& p)
{
	if (p.root.exact())
		return sgn(r.laurent(p.root.lo).coeff);
	// Only this point of r lies in the isolating interval; sample beside it.
	const RealRoot& x = p.root;
	Rational mid = (x.lo + x.hi) / 2;
	int s = r.sign_at(mid);
	bool right = x.compare(mid) < 0;
	int order = p.pole ? -p.mult() : p.mult();
	if (right || order % 2 == 0)
		return s;
	return -s;
}

std::optional<int> sign_at_root(const RatFun& r, const RealRoot& x)
{
	if (x.exact()) {
		if (r.den()(x.lo) == 0 || r.num()(x.lo) == 0)
			return std::nullopt;
		return r.sign_at(x.lo);
	}
	for (const Poly* p : {&r.num(), &r.den()}) {
		Poly g = Poly::gcd(*p, x.sqf);
		if (g.degree() > 0 && count_real_roots(g, x.lo, x.hi) > 0)
			return std::nullopt;
	}
	RealRoot y = x;
	while (count_real_roots(r.num(), y.lo, y.hi) > 0 || count_real_roots(r.den(), y.lo, y.hi) > 0)
		y = y.refined((y.hi - y.lo) / 2);
	return r.sign_at((y.lo + y.hi) / 2);
}

int eta_count(const RatFun& r, const Rational& c)
{
	int n = 0;
	for (const auto& p : r.real_points())
		if (p.odd() && p.root.compare(c) > 0)
			++n;
	return n;
}

RatFun compose_mobius(const RatFun& r, const RatFun& tau)
{
	if (tau.degree() != 1)
		throw DegreeNotOne("composition needs a degree-one inner function, got degree " +
		                   std::to_string(tau.degree()));
	const Poly& top = tau.num();   // a z + b
	const Poly& bottom = tau.den(); // c z + d
	int k = r.degree();
	auto homogenize = [&](const Poly& p) {
		Poly acc;
		for (int i = 0; i <= p.degree(); ++i)
			acc += Poly(p.coeff(i)) * top.pow(i) * bottom.pow(k - i);
		return acc;
	};
	return RatFun::reduce(homogenize(r.num()), homogenize(r.den()));
}

} // namespace nevkit
