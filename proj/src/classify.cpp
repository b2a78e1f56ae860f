#include "nevkit/classify.hpp"

#include "nevkit/errors.hpp"

#include <algorithm>

namespace nevkit {

namespace {

// Value of r at infinity when finite: order > 0 gives 0, order 0 the leading ratio.
std::optional<Rational> finite_at_infinity(const RatFun& r)
{
	Laurent l = r.laurent_at_infinity();
	if (l.order < 0)
		return std::nullopt;
	return l.order > 0 ? Rational(0) : l.coeff;
}

bool negative_at_infinity(const RatFun& r)
{
	auto v = finite_at_infinity(r);
	return v && *v < 0;
}

// r(x) finite and negative at a rational point.
bool negative_at(const RatFun& r, const Rational& x)
{
	if (r.den()(x) == 0)
		return false;
	return r(x) < 0;
}

bool negative_at(const RatFun& r, const RealRoot& x)
{
	auto s = sign_at_root(r, x);
	return s && *s < 0;
}

bool q_has_zero_at_infinity(const NevFun& q) { return q.beta == 0 && q.constant_at_infinity() == 0 && !q.is_zero(); }

Poly squared(const Rational& x) { return Poly::linear_root(x).pow(2); }


} // namespace

ClassReport membership(const GenNevFun& g, const RatFun& r)
{
	ClassReport rep;
	rep.member = true; // atomic spectra make the exceptional set finite
	rep.kappa = g.kappa();
	for (const auto& a : g.q0().sigma.atoms())
		if (negative_at(r, a.t))
			rep.exceptional_poles.push_back(a.t);
	if (g.q0().beta > 0 && negative_at_infinity(r))
		rep.exceptional_poles.push_back(ExtReal::infinity());
	rep.witness = product_factorization(g, r);
	rep.kappa_tilde = rep.witness->kappa();
	return rep;
}

StepResult single_factor_step(const RatFun& s, const NevFun& q0)
{
	if (s.degree() > 1)
		throw DegreeNotOne("single step needs degree at most one, got " + std::to_string(s.degree()));
	if (s.is_zero())
		throw InvalidArgument("zero factor");
	if (q0.is_zero())
		return {RatFun(1), q0};

	RatFun Q = q0.to_ratfun();
	Poly top(1), bottom(1);

	for (const auto& z : s.zeros().real) {
		const Rational& a = z.value();
		if (q0.sigma.mass_at(a) > 0)
			continue;
		if (s.laurent(a).coeff * evaluate(q0, a) <= 0)
			top *= squared(a);
	}
	for (const auto& p : s.poles().real) {
		const Rational& b = p.value();
		if (q0.sigma.mass_at(b) > 0 || s.laurent(b).coeff * evaluate(q0, b) > 0)
			bottom *= squared(b);
	}
	for (const auto& z : Q.zeros().real)
		if (negative_at(s, z))
			top *= squared(z.value());
	for (const auto& a : q0.sigma.atoms())
		if (negative_at(s, a.t))
			bottom *= squared(a.t);

	StepResult out;
	out.psi = RatFun::reduce(top, bottom);
	auto h = herglotz_check(s * Q / out.psi);
	if (!h.ok)
		throw NotMember("degree-one step with " + s.to_string() + " left " + h.reason);
	out.q1 = *h.fun;
	return out;
}

GenNevFun product_factorization(const GenNevFun& g, const RatFun& r)
{
	if (r.is_zero())
		throw InvalidArgument("r must not vanish identically");
	RatFun phi = g.phi();
	std::vector<RatFun> steps;
	if (r.is_constant()) {
		steps.push_back(r);
	} else {
		CanonicalRational cr = canonical_rational(r);
		phi = phi * cr.psi;
		if (cr.s0.is_constant())
			steps.push_back(cr.s0);
		else
			steps = sprod_factorize(cr.s0);
	}
	NevFun q = g.q0();
	for (const auto& s : steps) {
		StepResult st = single_factor_step(s, q);
		phi = phi * st.psi;
		q = st.q1;
	}
	return GenNevFun::make(phi, q);
}

SimpleForms simple_forms(const NevFun& q0, const RatFun& s)
{
	SimpleForms f;
	RatFun Q = q0.to_ratfun();
	f.direct = herglotz_check(s * Q).ok;

	bool spectrum_clear = true;
	for (const auto& a : q0.sigma.atoms())
		if (negative_at(s, a.t))
			spectrum_clear = false;
	if (q0.beta > 0 && negative_at_infinity(s))
		spectrum_clear = false;

	// no_new_points: nothing from q0 in the negative set of s, and no new gznt/gpnt at
	// the zeros and poles of s.
	{
		bool ok = spectrum_clear;
		for (const auto& z : Q.zeros().real)
			if (negative_at(s, z))
				ok = false;
		if (q_has_zero_at_infinity(q0) && negative_at_infinity(s))
			ok = false;
		for (const auto& z : s.zeros().real) {
			const Rational& a = z.value();
			if (q0.sigma.mass_at(a) == 0 && s.laurent(a).coeff * evaluate(q0, a) <= 0)
				ok = false;
		}
		for (const auto& p : s.poles().real) {
			const Rational& b = p.value();
			if (q0.sigma.mass_at(b) > 0 || s.laurent(b).coeff * evaluate(q0, b) > 0)
				ok = false;
		}
		f.no_new_points = ok;
	}

	// sign_pattern: q0 holomorphic with one sign on every negative arc of s, and the
	// arc ends of the right type.
	{
		bool ok = true;
		auto pieces = sign_on_interval(s).pieces;
		struct NegArc {
			Endpoint from, to;
			bool wraps = false;
		};
		std::vector<NegArc> arcs;
		std::size_t n = pieces.size();
		bool wrap = n > 1 && pieces.front().sign < 0 && pieces.back().sign < 0;
		for (std::size_t i = 0; i < n; ++i) {
			if (pieces[i].sign >= 0)
				continue;
			if (wrap && i == 0)
				continue;
			if (wrap && i == n - 1)
				arcs.push_back({pieces[i].left, pieces.front().right, true});
			else
				arcs.push_back({pieces[i].left, pieces[i].right, false});
		}
		if (n == 1 && pieces.front().sign < 0)
			ok = false; // s < 0 everywhere is not simple; treat as failure
		auto inside = [](const NegArc& arc, const RealRoot& x) {
			bool after = arc.from.kind != Endpoint::Kind::finite || x.compare(arc.from.at.lo) > 0;
			bool before = arc.to.kind != Endpoint::Kind::finite || x.compare(arc.to.at.lo) < 0;
			return arc.wraps ? (after || before) : (after && before);
		};
		for (const auto& arc : arcs) {
			for (const auto& a : q0.sigma.atoms())
				if (inside(arc, RealRoot{a.t, a.t, Poly::linear_root(a.t), 1}))
					ok = false;
			for (const auto& z : Q.zeros().real)
				if (inside(arc, z))
					ok = false;
			if (arc.wraps && (q0.beta > 0 || q_has_zero_at_infinity(q0)))
				ok = false;
			if (!ok)
				break;
			Rational sample;
			if (arc.wraps)
				sample = arc.from.at.lo + 1;
			else if (arc.from.kind == Endpoint::Kind::neg_inf)
				sample = arc.to.at.lo - 1;
			else if (arc.to.kind == Endpoint::Kind::pos_inf)
				sample = arc.from.at.lo + 1;
			else
				sample = (arc.from.at.lo + arc.to.at.lo) / 2;
			int sign = sgn(evaluate(q0, sample));
			if (sign == 0) {
				ok = false;
				break;
			}
			auto is_pole = [&](const Rational& x) { return s.den()(x) == 0; };
			if (arc.from.finite() && is_pole(arc.from.at.lo) != (sign > 0))
				ok = false;
			if (arc.to.finite() && is_pole(arc.to.at.lo) != (sign < 0))
				ok = false;
		}
		f.sign_pattern = ok;
	}

	// boundary_limits: spectrum avoids the negative set, and the limits at the poles of
	// s have the sign of a Nevanlinna residue.
	{
		bool ok = spectrum_clear;
		for (const auto& p : s.poles().real) {
			const Rational& b = p.value();
			if (q0.sigma.mass_at(b) > 0 || s.laurent(b).coeff * evaluate(q0, b) > 0)
				ok = false;
		}
		Laurent inf = s.laurent_at_infinity();
		if (inf.order < 0) {
			if (q0.beta > 0 || inf.coeff * q0.constant_at_infinity() < 0)
				ok = false;
		}
		f.boundary_limits = ok;
	}
	return f;
}

N00Report check_N00(const NevFun& q, const RatFun& r)
{
	N00Report rep;
	RatFun Q = q.to_ratfun();
	auto fail = [&](const std::string& point, const std::string& reason) {
		rep.failures.push_back({point, reason});
	};

	for (const auto& a : q.sigma.atoms())
		if (negative_at(r, a.t))
			fail(a.t.get_str(), "r is negative at an atom of q");
	if (q.beta > 0 && negative_at_infinity(r))
		fail("inf", "r is negative at infinity, which carries mass of q");
	for (const auto& z : Q.zeros().real)
		if (negative_at(r, z))
			fail(z.to_string(), "r is finite and negative at a zero of q");
	if (q_has_zero_at_infinity(q) && negative_at_infinity(r))
		fail("inf", "r is finite and negative at the zero of q at infinity");

	if (r.has_nonreal_points())
		fail("C\\R", "r has nonreal zeros or poles");

	for (const auto& p : r.real_points()) {
		std::string at = p.root.to_string();
		if (p.mult() > 2) {
			fail(at, "order " + std::to_string(p.mult()) + " exceeds two");
			continue;
		}
		int iota = laurent_sign(r, p);
		bool atom = p.root.exact() && q.sigma.mass_at(p.root.lo) > 0;
		std::optional<int> q_sign = atom ? std::nullopt : sign_at_root(Q, p.root);
		bool q_zero = !atom && !q_sign;
		if (p.mult() == 2) {
			if (!p.pole && !atom)
				fail(at, "double zero of r is not an atom of q");
			if (p.pole && !q_zero)
				fail(at, "double pole of r is not a zero of q");
			if (iota > 0)
				fail(at, "leading coefficient at a double point must be negative");
		} else if (!p.pole) {
			if (!atom && !(q_sign && iota * *q_sign > 0))
				fail(at, "sign condition at a simple zero of r fails");
		} else {
			if (atom || (q_sign && iota * *q_sign > 0))
				fail(at, "sign condition at a simple pole of r fails");
		}
	}

	bool simple = !r.is_constant() && !r.has_nonreal_points() && std::abs(r.order_at_infinity()) <= 1;
	for (const auto& p : r.real_points())
		if (p.mult() != 1 || !p.root.exact())
			simple = false;
	if (simple && !q.is_zero())
		rep.forms = simple_forms(q, r);
	rep.ok = rep.failures.empty();
	return rep;
}

bool Arc::contains(const ExtReal& x) const
{
	if (full)
		return true;
	if (!(to < from))
		return !(x < from) && !(to < x);
	return !(x < from) || !(to < x);
}

std::string Arc::to_string() const
{
	if (full)
		return "[all]";
	return "[" + nevkit::to_string(from) + " -> " + nevkit::to_string(to) + "]";
}

std::optional<Arc> negative_arc(const RatFun& f)
{
	if (f.degree() > 1)
		throw DegreeNotOne("negative_arc needs degree at most one");
	if (f.is_constant()) {
		if (f.is_zero() || f.gamma() > 0)
			return std::nullopt;
		Arc a;
		a.full = true;
		return a;
	}
	ExtReal zero = f.num().degree() == 1 ? ExtReal(f.zeros().real.front().value()) : ExtReal::infinity();
	ExtReal pole = f.den().degree() == 1 ? ExtReal(f.poles().real.front().value()) : ExtReal::infinity();
	Rational sample;
	if (zero.is_finite() && pole.is_finite())
		sample = zero.value() < pole.value() ? Rational((zero.value() + pole.value()) / 2)
		                                     : Rational(zero.value() + 1);
	else if (zero.is_finite())
		sample = zero.value() + 1;
	else
		sample = pole.value() - 1;
	if (f(sample) < 0)
		return Arc{zero, pole, false};
	return Arc{pole, zero, false};
}

bool arcs_disjoint(const Arc& a, const Arc& b)
{
	if (a.full || b.full)
		return false;
	return !(a.contains(b.from) || a.contains(b.to) || b.contains(a.from) || b.contains(a.to));
}

bool negative_sets_disjoint(const std::vector<RatFun>& factors)
{
	std::vector<Arc> arcs;
	for (const auto& f : factors)
		if (auto a = negative_arc(f))
			arcs.push_back(*a);
	for (std::size_t i = 0; i < arcs.size(); ++i)
		for (std::size_t j = i + 1; j < arcs.size(); ++j)
			if (!arcs_disjoint(arcs[i], arcs[j]))
				return false;
	return true;
}

std::vector<RatFun> sprod_factorize(const RatFun& s)
{
	if (s.is_constant())
		throw ConstantInput("sprod_factorize needs a nonconstant function");
	if (s.has_nonreal_points())
		throw NotInterlacing("nonreal zeros or poles");
	auto pts = s.real_points();
	for (std::size_t i = 0; i < pts.size(); ++i) {
		if (pts[i].mult() != 1)
			throw NotInterlacing("point " + pts[i].root.to_string() + " is not simple");
		if (!pts[i].root.exact())
			throw IrrationalRoot("point " + pts[i].root.to_string() + " is irrational");
		if (i > 0 && pts[i].pole == pts[i - 1].pole)
			throw NotInterlacing("two consecutive " + std::string(pts[i].pole ? "poles" : "zeros") +
			                     " at " + pts[i - 1].root.to_string() + " and " + pts[i].root.to_string());
	}
	if (s.degree() == 1)
		return {s};
	if (!pts.back().pole) {
		std::vector<RatFun> out;
		for (const auto& f : sprod_factorize(s.inverse()))
			out.push_back(f.inverse());
		return out;
	}

	std::vector<Rational> a, b;
	for (const auto& p : pts)
		(p.pole ? b : a).push_back(p.root.lo);
	Rational gamma = s.gamma();
	auto lin = [](const Rational& zero, const Rational& pole) {
		return RatFun::reduce(Poly::linear_root(zero), Poly::linear_root(pole));
	};
	std::size_t l = a.size();
	std::vector<RatFun> out;
	if (b.size() == l) {
		if (gamma < 0) {
			out.push_back(RatFun(gamma) * lin(a[0], b[l - 1]));
			for (std::size_t i = 1; i < l; ++i)
				out.push_back(lin(a[i], b[i - 1]));
		} else {
			for (std::size_t i = 0; i < l; ++i)
				out.push_back(i == 0 ? RatFun(gamma) * lin(a[i], b[i]) : lin(a[i], b[i]));
		}
	} else if (b.size() == l + 1) {
		// poles b_0 < a_1 < b_1 < ... < a_l < b_l
		auto over = [&](const Rational& pole) {
			return RatFun::reduce(Poly(gamma), Poly::linear_root(pole));
		};
		if (gamma < 0) {
			for (std::size_t i = 0; i < l; ++i)
				out.push_back(lin(a[i], b[i]));
			out.push_back(over(b[l]));
		} else {
			for (std::size_t i = 0; i < l; ++i)
				out.push_back(lin(a[i], b[i + 1]));
			out.push_back(over(b[0]));
		}
	} else {
		throw NotInterlacing("zero and pole counts differ by more than one");
	}

	RatFun prod(1);
	for (const auto& f : out)
		prod = prod * f;
	if (!(prod == s))
		throw NotInterlacing("factor product does not reproduce " + s.to_string());
	return out;
}

std::vector<ExtReal> candidate_points(const GenNevFun& g, const RatFun& r)
{
	std::vector<ExtReal> out;
	for (const auto& p : r.real_points())
		out.push_back(p.root.value());
	out.push_back(ExtReal::infinity());
	for (const auto& rec : gznt_gpnt(g)) {
		if (rec.isolated)
			throw IrrationalRoot("generalized point " + rec.point_string() + " is irrational");
		out.push_back(rec.point);
	}
	const NevFun& q0 = g.q0();
	for (const auto& a : q0.sigma.atoms())
		if (negative_at(r, a.t))
			out.push_back(a.t);
	for (const auto& z : g.q0_ratfun().zeros().real)
		if (negative_at(r, z))
			out.push_back(z.value());
	if ((q0.beta > 0 || q_has_zero_at_infinity(q0)) && negative_at_infinity(r))
		out.push_back(ExtReal::infinity());
	std::sort(out.begin(), out.end());
	out.erase(std::unique(out.begin(), out.end()), out.end());
	return out;
}

bool KacClosure::all() const
{
	for (const auto& e : poles)
		if (!e.holds)
			return false;
	for (const auto& e : zeros)
		if (!e.holds)
			return false;
	return true;
}

KacClosure kac_closure(const NevFun& q, const RatFun& r)
{
	auto h = herglotz_check(r * q.to_ratfun());
	if (!h.ok)
		throw NotInN00("r q is not Nevanlinna: " + h.reason);
	const NevFun& rq = *h.fun;
	KacClosure out;
	for (const auto& p : r.poles().real)
		out.poles.push_back({p.value(), kac_membership(q, p.value())});
	if (r.order_at_infinity() < 0)
		out.poles.push_back({ExtReal::infinity(), kac_membership(q, ExtReal::infinity())});
	for (const auto& z : r.zeros().real)
		out.zeros.push_back({z.value(), kac_membership(rq, z.value())});
	if (r.order_at_infinity() > 0)
		out.zeros.push_back({ExtReal::infinity(), kac_membership(rq, ExtReal::infinity())});
	return out;
}

} // namespace nevkit
