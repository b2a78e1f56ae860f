#include "nevkit/realize.hpp"

#include "nevkit/classify.hpp"
#include "nevkit/errors.hpp"

#include <algorithm>
#include <map>

namespace nevkit {

Rational L2Model::omega_sq_at(const Rational& t) const
{
	for (const auto& e : omega)
		if (e.t == t)
			return e.value_sq;
	return 0;
}

AtomicMeasure L2Model::induced_measure() const
{
	std::vector<Atom> atoms;
	for (const auto& a : sigma.atoms()) {
		Rational w = a.w * omega_sq_at(a.t);
		if (xi.is_finite())
			w *= (a.t - xi.value()) * (a.t - xi.value());
		if (w != 0)
			atoms.push_back({a.t, w});
	}
	return AtomicMeasure(std::move(atoms));
}

L2Model minimal_model(const NevFun& q, const ExtReal& xi)
{
	if (!kac_membership(q, xi))
		throw NotKacMember("function is not in N(" + to_string(xi) + ", 1)");
	L2Model m;
	m.beta = q.beta;
	m.sigma = q.sigma;
	m.xi = xi;
	for (const auto& a : q.sigma.atoms()) {
		Rational sq = 1;
		if (xi.is_finite())
			sq = 1 / ((a.t - xi.value()) * (a.t - xi.value()));
		m.omega.push_back({a.t, sq});
	}
	m.eta = xi.is_finite() ? evaluate(q, xi.value()) : q.constant_at_infinity();
	return m;
}

CRational model_weyl(const L2Model& m, const CRational& lambda)
{
	CRational sum = 0;
	for (const auto& a : m.sigma.atoms()) {
		CRational gap = CRational(a.t) - lambda;
		if (gap.is_zero())
			throw SpectrumHit("lambda = " + a.t.get_str() + " is an atom of the model");
		Rational weight = a.w * m.omega_sq_at(a.t);
		if (m.xi.is_finite())
			sum += CRational(weight * (a.t - m.xi.value())) / gap;
		else
			sum += CRational(weight) / gap;
	}
	if (m.xi.is_infinite())
		return CRational(m.eta) + sum;
	sum += CRational(m.beta * m.omega_inf_sq);
	return CRational(m.eta) + (lambda - CRational(m.xi.value())) * sum;
}

std::complex<double> model_weyl(const L2Model& m, std::complex<double> lambda)
{
	std::complex<double> sum = 0;
	for (const auto& a : m.sigma.atoms()) {
		std::complex<double> gap = a.t.get_d() - lambda;
		if (gap == 0.0)
			throw SpectrumHit("lambda = " + a.t.get_str() + " is an atom of the model");
		double weight = Rational(a.w * m.omega_sq_at(a.t)).get_d();
		if (m.xi.is_finite())
			sum += weight * Rational(a.t - m.xi.value()).get_d() / gap;
		else
			sum += weight / gap;
	}
	if (m.xi.is_infinite())
		return m.eta.get_d() + sum;
	sum += Rational(m.beta * m.omega_inf_sq).get_d();
	return m.eta.get_d() + (lambda - m.xi.value().get_d()) * sum;
}

NevFun model_function(const L2Model& m)
{
	// Rewrite in the form c + beta' z + sum W / (t - z).
	Rational c = m.eta;
	Rational slope = 0;
	std::vector<Atom> atoms;
	for (const auto& a : m.sigma.atoms()) {
		Rational weight = a.w * m.omega_sq_at(a.t);
		if (weight == 0)
			continue;
		if (m.xi.is_finite()) {
			Rational d = a.t - m.xi.value();
			// weight d (z - xi)/(t - z) = weight d^2/(t - z) - weight d
			atoms.push_back({a.t, weight * d * d});
			c -= weight * d;
		} else {
			atoms.push_back({a.t, weight});
		}
	}
	if (m.xi.is_finite()) {
		slope = m.beta * m.omega_inf_sq;
		c -= slope * m.xi.value();
	}
	Rational alpha = c;
	for (const auto& a : atoms)
		alpha += a.w * a.t / (1 + a.t * a.t);
	return NevFun(alpha, slope, AtomicMeasure(std::move(atoms)));
}

std::string to_string(TransformCase c)
{
	switch (c) {
	case TransformCase::both_finite:
		return "both_finite";
	case TransformCase::bn_infinite:
		return "bn_infinite";
	case TransformCase::an_infinite:
		return "an_infinite";
	}
	return "?";
}

void enumerate_points(const RatFun& r, std::vector<ExtReal>& zeros, std::vector<ExtReal>& poles)
{
	zeros.clear();
	poles.clear();
	auto pts = r.real_points();
	for (bool doubles : {true, false})
		for (const auto& p : pts) {
			if ((p.mult() % 2 == 0) != doubles)
				continue;
			for (int k = 0; k < p.mult(); ++k)
				(p.pole ? poles : zeros).push_back(p.root.value());
		}
	int k = r.order_at_infinity();
	for (int i = 0; i < std::abs(k); ++i)
		(k > 0 ? zeros : poles).push_back(ExtReal::infinity());
}

namespace {

// lim (b - l) r(l) q(l) at a finite pole, lim r q / l at infinity.
Rational zeta_from_laurent(const RatFun& r, const NevFun& q, const ExtReal& b)
{
	Laurent l = r.laurent(b);
	if (b.is_finite()) {
		if (l.order == -1)
			return -l.coeff * evaluate(q, b.value());
		if (l.order == -2) {
			Limit s = limit_at(q, b, LimitMode::slope);
			if (!s.is_finite())
				throw NotInN00("q has no finite derivative at the double pole " + to_string(b));
			return -l.coeff * s.value;
		}
		throw NotInN00("pole of order " + std::to_string(-l.order) + " at " + to_string(b));
	}
	if (l.order == -1) {
		if (q.beta != 0)
			throw NotInN00("q has mass at infinity");
		return l.coeff * q.constant_at_infinity();
	}
	if (l.order == -2) {
		Limit mom = first_moment_at_infinity(q);
		if (!mom.is_finite())
			throw NotInN00("q does not vanish at infinity");
		return l.coeff * mom.value;
	}
	throw NotInN00("pole of order " + std::to_string(-l.order) + " at infinity");
}

std::vector<ExtReal> distinct(std::vector<ExtReal> xs)
{
	std::sort(xs.begin(), xs.end());
	xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
	return xs;
}

} // namespace

RealizationTransformReport transform_model(const L2Model& m, const RatFun& r, const NevFun& q)
{
	N00Report n00 = check_N00(q, r);
	if (!n00.ok)
		throw NotInN00(n00.failures.front().point + ": " + n00.failures.front().reason);
	if (r.is_constant())
		throw NotInN00("r must be nonconstant");

	RealizationTransformReport rep;
	enumerate_points(r, rep.zeros, rep.poles);
	const ExtReal& b1 = rep.poles.front();
	const ExtReal& an = rep.zeros.back();
	const ExtReal& bn = rep.poles.back();
	if (!(m == minimal_model(q, b1)))
		throw InvalidArgument("input model must be the minimal model of q at " + to_string(b1));

	auto h = herglotz_check(r * q.to_ratfun());
	if (!h.ok)
		throw NotInN00("r q is not Nevanlinna: " + h.reason);
	const NevFun& rq = *h.fun;

	rep.kind = an.is_infinite()   ? TransformCase::an_infinite
	           : bn.is_infinite() ? TransformCase::bn_infinite
	                              : TransformCase::both_finite;

	std::map<Rational, Rational> pole_mass;
	Rational zeta_inf = 0;
	for (const auto& b : distinct(rep.poles)) {
		ZetaEntry z{b, zeta_from_laurent(r, q, b),
		            b.is_finite() ? rq.sigma.mass_at(b.value()) : rq.beta};
		if (z.value != z.from_residue)
			throw NotInN00("point mass at " + to_string(b) + " disagrees: " + z.value.get_str() + " vs " +
			               z.from_residue.get_str());
		if (z.value < 0)
			throw NotInN00("negative point mass at " + to_string(b));
		if (b.is_finite())
			pole_mass[b.value()] = z.value;
		else
			zeta_inf = z.value;
		rep.zetas.push_back(z);
	}

	auto scale = [&](const Rational& t) -> Rational {
		if (an.is_infinite())
			return 1;
		return 1 / ((t - an.value()) * (t - an.value()));
	};

	L2Model& out = rep.model_out;
	out.xi = an;
	std::vector<Atom> atoms;
	for (const auto& a : m.sigma.atoms()) {
		if (r.num()(a.t) == 0)
			continue;
		atoms.push_back(a);
		out.omega.push_back({a.t, abs(r(a.t)) * scale(a.t)});
	}
	for (const auto& [b, zeta] : pole_mass) {
		if (zeta == 0)
			continue;
		atoms.push_back({b, 1});
		out.omega.push_back({b, zeta * scale(b)});
	}
	std::sort(out.omega.begin(), out.omega.end(),
	          [](const OmegaEntry& x, const OmegaEntry& y) { return x.t < y.t; });
	out.sigma = AtomicMeasure(std::move(atoms));

	switch (rep.kind) {
	case TransformCase::both_finite:
		out.beta = r.laurent_at_infinity().coeff * m.beta;
		break;
	case TransformCase::bn_infinite:
		out.beta = zeta_inf;
		break;
	case TransformCase::an_infinite:
		out.beta = 0;
		break;
	}
	if (out.beta != rq.beta)
		throw NotInN00("mass at infinity " + out.beta.get_str() + " differs from that of r q, " +
		               rq.beta.get_str());
	out.omega_inf_sq = 1;

	Limit eta = limit_at(rq, an, LimitMode::value);
	if (!eta.is_finite())
		throw NotInN00("r q has no finite limit at " + to_string(an));
	out.eta = eta.value;
	return rep;
}

bool model_spectral_check(const L2Model& in, const L2Model& out, const RatFun& r)
{
	NevFun q = model_function(in);
	std::vector<Atom> expected;
	AtomicMeasure induced = in.induced_measure();
	for (const auto& a : induced.atoms()) {
		if (r.den()(a.t) == 0)
			return false;
		Rational v = abs(r(a.t));
		if (v != 0)
			expected.push_back({a.t, a.w * v});
	}
	for (const auto& p : r.poles().real) {
		Rational zeta = zeta_from_laurent(r, q, p.value());
		if (zeta < 0)
			return false;
		if (zeta > 0)
			expected.push_back({p.value(), zeta});
	}
	return AtomicMeasure(std::move(expected)) == out.induced_measure();
}

} // namespace nevkit
