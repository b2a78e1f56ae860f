#include "nevkit/nevfun.hpp"

#include "nevkit/errors.hpp"

#include <algorithm>
#include <sstream>

namespace nevkit {

AtomicMeasure::AtomicMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms))
{
	std::sort(atoms_.begin(), atoms_.end(), [](const Atom& a, const Atom& b) { return a.t < b.t; });
	for (std::size_t i = 0; i < atoms_.size(); ++i) {
		if (atoms_[i].w <= 0)
			throw InvalidArgument("atom weight must be positive at t = " + atoms_[i].t.get_str());
		if (i > 0 && atoms_[i].t == atoms_[i - 1].t)
			throw InvalidArgument("duplicate atom position " + atoms_[i].t.get_str());
	}
}

Rational AtomicMeasure::mass_at(const Rational& t) const
{
	auto it = std::lower_bound(atoms_.begin(), atoms_.end(), t,
	                           [](const Atom& a, const Rational& x) { return a.t < x; });
	if (it != atoms_.end() && it->t == t)
		return it->w;
	return 0;
}

Rational AtomicMeasure::total_mass() const
{
	Rational m = 0;
	for (const auto& a : atoms_)
		m += a.w;
	return m;
}

NevFun::NevFun(Rational a, Rational b, AtomicMeasure s)
    : alpha(std::move(a)), beta(std::move(b)), sigma(std::move(s))
{
	if (beta < 0)
		throw InvalidArgument("beta must be nonnegative");
}

Rational NevFun::constant_at_infinity() const
{
	Rational c = alpha;
	for (const auto& a : sigma.atoms())
		c -= a.w * a.t / (1 + a.t * a.t);
	return c;
}

RatFun NevFun::to_ratfun() const
{
	Poly den(1);
	for (const auto& a : sigma.atoms())
		den *= Poly::linear_root(a.t);
	Poly num = Poly(std::vector<Rational>{constant_at_infinity(), beta}) * den;
	for (std::size_t i = 0; i < sigma.size(); ++i) {
		Poly others(1);
		for (std::size_t j = 0; j < sigma.size(); ++j)
			if (j != i)
				others *= Poly::linear_root(sigma.atoms()[j].t);
		num -= Poly(sigma.atoms()[i].w) * others;
	}
	return RatFun::reduce(num, den);
}

HerglotzCheck herglotz_check(const RatFun& r)
{
	HerglotzCheck out;
	if (r.is_zero()) {
		out.ok = true;
		out.fun = NevFun();
		return out;
	}
	if (r.num().degree() - r.den().degree() > 1) {
		out.reason = "grows faster than linearly at infinity";
		return out;
	}
	if (r.poles().nonreal_count() > 0) {
		out.reason = "has nonreal poles";
		return out;
	}
	for (const auto& p : r.poles().real) {
		if (p.mult > 1) {
			out.reason = "has a pole of order " + std::to_string(p.mult) + " at " + p.to_string();
			return out;
		}
	}
	auto [quot, rem] = Poly::divmod(r.num(), r.den());
	Rational beta = quot.coeff(1);
	if (beta < 0) {
		out.reason = "negative linear coefficient at infinity";
		return out;
	}
	Poly dprime = r.den().derivative();
	std::vector<Atom> atoms;
	for (const auto& p : r.poles().real) {
		const Rational& t = p.value();
		Rational w = -rem(t) / dprime(t);
		if (w <= 0) {
			out.reason = "pole at " + t.get_str() + " has residue of the wrong sign";
			return out;
		}
		atoms.push_back({t, w});
	}
	Rational alpha = quot.coeff(0);
	for (const auto& a : atoms)
		alpha += a.w * a.t / (1 + a.t * a.t);
	out.ok = true;
	out.fun = NevFun(alpha, beta, AtomicMeasure(std::move(atoms)));
	return out;
}

std::optional<NevFun> to_nevfun(const RatFun& r) { return herglotz_check(r).fun; }

NevFun require_nevfun(const RatFun& r, const std::string& what)
{
	auto h = herglotz_check(r);
	if (!h.ok)
		throw NotNevanlinna(what + " " + r.to_string() + " " + h.reason);
	return *h.fun;
}

CRational evaluate(const NevFun& q, const CRational& z)
{
	CRational acc = CRational(q.alpha) + CRational(q.beta) * z;
	for (const auto& a : q.sigma.atoms()) {
		CRational diff = CRational(a.t) - z;
		if (diff.is_zero())
			throw PoleHit("evaluation at the atom " + a.t.get_str());
		acc += CRational(a.w) * (CRational(1) / diff - CRational(a.t / (1 + a.t * a.t)));
	}
	return acc;
}

std::complex<double> evaluate(const NevFun& q, std::complex<double> z)
{
	std::complex<double> acc = q.alpha.get_d() + q.beta.get_d() * z;
	for (const auto& a : q.sigma.atoms()) {
		double t = a.t.get_d();
		std::complex<double> diff = t - z;
		if (diff == 0.0)
			throw PoleHit("evaluation at the atom " + a.t.get_str());
		acc += a.w.get_d() * (1.0 / diff - t / (1 + t * t));
	}
	return acc;
}

Rational evaluate(const NevFun& q, const Rational& x) { return evaluate(q, CRational(x)).re; }

Limit limit_at(const NevFun& q, const ExtReal& c, LimitMode mode, Approach how)
{
	if (c.is_infinite()) {
		switch (mode) {
		case LimitMode::residue:
		case LimitMode::slope:
			return Limit::finite(q.beta);
		case LimitMode::value:
			if (q.beta == 0)
				return Limit::finite(q.constant_at_infinity());
			if (how == Approach::from_left)
				return Limit::pos_inf();
			if (how == Approach::from_right)
				return Limit::neg_inf();
			return Limit::unsigned_inf();
		}
	}

	const Rational& x = c.value();
	Rational w = q.sigma.mass_at(x);
	switch (mode) {
	case LimitMode::residue:
		return Limit::finite(w);
	case LimitMode::value:
		if (w == 0)
			return Limit::finite(evaluate(q, x));
		// w / (t - x): positive just left of the atom
		if (how == Approach::from_left)
			return Limit::pos_inf();
		if (how == Approach::from_right)
			return Limit::neg_inf();
		return Limit::unsigned_inf();
	case LimitMode::slope: {
		if (w != 0)
			return how == Approach::nontangential ? Limit::unsigned_inf() : Limit::neg_inf();
		Rational v = evaluate(q, x);
		if (v != 0) {
			if (how == Approach::from_right)
				return Limit::infinite(sgn(v));
			if (how == Approach::from_left)
				return Limit::infinite(-sgn(v));
			return Limit::unsigned_inf();
		}
		Rational s = q.beta;
		for (const auto& a : q.sigma.atoms())
			s += a.w / ((a.t - x) * (a.t - x));
		return Limit::finite(s);
	}
	}
	return Limit::unsigned_inf();
}

Rational limit_at_minus_infinity(const NevFun& q) { return q.constant_at_infinity(); }

Limit first_moment_at_infinity(const NevFun& q)
{
	if (q.beta != 0 || q.constant_at_infinity() != 0)
		return Limit::unsigned_inf();
	return Limit::finite(-q.sigma.total_mass());
}

bool kac_membership(const NevFun& q, const ExtReal& xi)
{
	if (xi.is_infinite())
		return q.beta == 0;
	return q.sigma.mass_at(xi.value()) == 0;
}

namespace {

std::vector<Rational> atoms_in_open(const NevFun& q, const std::optional<Rational>& lo,
                                    const std::optional<Rational>& hi)
{
	std::vector<Rational> out;
	for (const auto& a : q.sigma.atoms())
		if ((!lo || a.t > *lo) && (!hi || a.t < *hi))
			out.push_back(a.t);
	return out;
}

std::vector<Rational> atoms_outside_closed(const NevFun& q, const Rational& c, const Rational& d)
{
	std::vector<Rational> out;
	for (const auto& a : q.sigma.atoms())
		if (a.t < c || a.t > d)
			out.push_back(a.t);
	return out;
}

std::string list(const std::vector<Rational>& xs)
{
	std::string s;
	for (const auto& x : xs)
		s += (s.empty() ? "" : ", ") + x.get_str();
	return s;
}

RatFun linear(const Rational& slope, const Rational& root) // slope * (z - root)
{
	return RatFun(Poly(std::vector<Rational>{-slope * root, slope}));
}

bool in_closed(const Limit& l, bool lower_zero)
{
	// lower_zero: 0 <= l < inf ; otherwise -inf < l <= 0
	if (!l.is_finite())
		return false;
	return lower_zero ? l.value >= 0 : l.value <= 0;
}

} // namespace

CharacterizationReport gap_characterize(const NevFun& q, const Rational& c, const Rational& d,
                                        GapShape shape)
{
	CharacterizationReport rep;
	rep.shape = shape;
	rep.c = c;
	rep.d = d;
	RatFun Q = q.to_ratfun();

	switch (shape) {
	case GapShape::bounded_gap: {
		if (!(c < d))
			throw InvalidArgument("bounded gap needs c < d");
		auto bad = atoms_in_open(q, c, d);
		if (!bad.empty())
			throw GapViolated("atoms inside (" + c.get_str() + ", " + d.get_str() + "): " + list(bad));
		rep.eta = limit_at(q, d, LimitMode::value, Approach::from_left);
		rep.holds = rep.eta.is_finite();
		if (rep.holds)
			rep.representative = require_nevfun((Q - RatFun(rep.eta.value)) * linear(1, c) / linear(1, d),
			                                    "gap representative");
		break;
	}
	case GapShape::complement_gap: {
		if (!(c < d))
			throw InvalidArgument("complement gap needs c < d");
		auto bad = atoms_outside_closed(q, c, d);
		if (!bad.empty())
			throw GapViolated("atoms outside [" + c.get_str() + ", " + d.get_str() + "]: " + list(bad));
		if (q.beta != 0)
			throw GapViolated("mass at infinity (beta > 0)");
		rep.eta = limit_at(q, d, LimitMode::value, Approach::from_right);
		rep.holds = rep.eta.is_finite();
		if (rep.holds)
			rep.representative = require_nevfun((Q - RatFun(rep.eta.value)) * linear(1, c) / linear(-1, d),
			                                    "gap representative");
		break;
	}
	case GapShape::left_ray: {
		auto bad = atoms_in_open(q, std::nullopt, c);
		if (!bad.empty())
			throw GapViolated("atoms inside (-inf, " + c.get_str() + "): " + list(bad));
		rep.eta = Limit::finite(limit_at_minus_infinity(q));
		rep.holds = true;
		RatFun shifted = Q - RatFun(rep.eta.value) - linear(q.beta, 0);
		rep.representative = require_nevfun(shifted * linear(1, c), "ray representative");
		rep.eta_endpoint = limit_at(q, c, LimitMode::value, Approach::from_left);
		rep.holds_endpoint = rep.eta_endpoint.is_finite();
		if (rep.holds_endpoint)
			rep.representative_endpoint =
			    require_nevfun((Q - RatFun(rep.eta_endpoint.value)) / linear(1, c), "ray representative");
		break;
	}
	}
	return rep;
}

ProductPredicates corollary_products(const NevFun& q, const Rational& c, const Rational& d)
{
	if (!(c < d))
		throw InvalidArgument("corollary_products needs c < d");
	ProductPredicates p;
	bool gap_open = atoms_in_open(q, c, d).empty();
	bool outside_open = atoms_outside_closed(q, c, d).empty() && q.beta == 0;
	bool ray_open = atoms_in_open(q, std::nullopt, c).empty();

	p.c_over_d = gap_open && in_closed(limit_at(q, d, LimitMode::value, Approach::from_left), false);
	p.d_over_c = gap_open && in_closed(limit_at(q, c, LimitMode::value, Approach::from_right), true);
	p.c_over_dm = outside_open && in_closed(limit_at(q, d, LimitMode::value, Approach::from_right), true);
	p.d_over_cm = outside_open && in_closed(limit_at(q, c, LimitMode::value, Approach::from_left), false);
	p.times_c = ray_open &&
	            in_closed(limit_at(q, ExtReal::infinity(), LimitMode::value, Approach::from_right), true);
	p.over_c = ray_open && in_closed(limit_at(q, c, LimitMode::value, Approach::from_left), false);
	return p;
}

std::string to_string(const NevFun& q)
{
	std::ostringstream out;
	out << "{alpha=" << q.alpha.get_str() << ", beta=" << q.beta.get_str() << ", atoms=[";
	bool first = true;
	for (const auto& a : q.sigma.atoms()) {
		out << (first ? "" : ", ") << "(" << a.t.get_str() << ", " << a.w.get_str() << ")";
		first = false;
	}
	out << "]}";
	return out.str();
}

} // namespace nevkit
