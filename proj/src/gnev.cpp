#include "nevkit/gnev.hpp"

#include "nevkit/errors.hpp"

#include <algorithm>

namespace nevkit {

std::string MultiplicityRecord::point_string() const
{
	if (isolated)
		return isolated->to_string();
	return to_string(point);
}

namespace {

NevFun scaled(const NevFun& q, const Rational& c)
{
	std::vector<Atom> atoms;
	for (const auto& a : q.sigma.atoms())
		atoms.push_back({a.t, a.w * c});
	return NevFun(q.alpha * c, q.beta * c, AtomicMeasure(std::move(atoms)));
}

int sign_somewhere(const RatFun& r)
{
	for (long x = 0;; ++x)
		for (long y : {x, -x})
			if (r.num()(Rational(y)) != 0 && r.den()(Rational(y)) != 0)
				return r.sign_at(Rational(y));
}

struct Sums {
	int pi = 0, kappa = 0;
};

Sums finite_sums(const RatFun& q)
{
	Sums s;
	for (const auto& rec : gznt_gpnt(q)) {
		if (rec.point.is_infinite())
			continue;
		(rec.kind == MultiplicityRecord::Kind::gznt ? s.pi : s.kappa) += rec.mult;
	}
	s.pi += q.zeros().nonreal_count() / 2;
	s.kappa += q.poles().nonreal_count() / 2;
	return s;
}

} // namespace

GenNevFun GenNevFun::make(const RatFun& phi, const NevFun& q0)
{
	if (phi.is_zero())
		throw InvalidArgument("phi must not vanish identically");
	for (const auto& p : phi.real_points())
		if (p.odd())
			throw InvalidArgument("phi changes sign at " + p.root.to_string());
	if (sign_somewhere(phi) < 0)
		throw InvalidArgument("phi is negative");

	GenNevFun g;
	Rational c = phi.gamma();
	g.phi_ = phi * RatFun(1 / c);
	g.q0_ = scaled(q0, c);
	g.q0r_ = g.q0_.to_ratfun();
	if (!g.q0_.is_zero()) {
		Sums s = finite_sums(g.product());
		g.kappa_ = std::max(s.pi, s.kappa);
	}
	return g;
}

CRational evaluate_gen(const GenNevFun& g, const CRational& z)
{
	return g.phi()(z) * evaluate(g.q0(), z);
}

std::complex<double> evaluate_gen(const GenNevFun& g, std::complex<double> z)
{
	return g.phi()(z) * evaluate(g.q0(), z);
}

int gznt_multiplicity(int order, int coeff_sign, bool at_infinity)
{
	// Largest pi >= 0 for which the test limit is finite and of the right sign.
	for (int pi = std::abs(order) + 1; pi > 0; --pi) {
		int e = at_infinity ? 2 * pi - 1 - order : order - 2 * pi + 1;
		if (at_infinity ? (e < 0 || (e == 0 && coeff_sign > 0)) : (e > 0 || (e == 0 && coeff_sign < 0)))
			return pi;
	}
	return 0;
}

int gpnt_multiplicity(int order, int coeff_sign, bool at_infinity)
{
	for (int kappa = 0;; ++kappa) {
		int e = at_infinity ? -order - 2 * kappa - 1 : 2 * kappa + 1 + order;
		if (at_infinity ? (e < 0 || (e == 0 && coeff_sign > 0)) : (e > 0 || (e == 0 && coeff_sign < 0)))
			return kappa;
	}
}

std::vector<MultiplicityRecord> gznt_gpnt(const RatFun& q)
{
	std::vector<MultiplicityRecord> out;
	if (q.is_zero())
		return out;
	auto push = [&](const RealPoint* p, int order, int sign, bool inf) {
		int pi = gznt_multiplicity(order, sign, inf);
		int kappa = gpnt_multiplicity(order, sign, inf);
		for (auto [kind, m] : {std::pair{MultiplicityRecord::Kind::gznt, pi},
		                       std::pair{MultiplicityRecord::Kind::gpnt, kappa}}) {
			if (m == 0)
				continue;
			MultiplicityRecord rec;
			rec.kind = kind;
			rec.mult = m;
			if (inf)
				rec.point = ExtReal::infinity();
			else if (p->root.exact())
				rec.point = p->root.lo;
			else {
				rec.point = p->root.lo;
				rec.isolated = p->root;
			}
			out.push_back(rec);
		}
	};
	for (const auto& p : q.real_points())
		push(&p, p.pole ? -p.mult() : p.mult(), laurent_sign(q, p), false);
	Laurent inf = q.laurent_at_infinity();
	push(nullptr, inf.order, sgn(inf.coeff), true);
	return out;
}

std::vector<MultiplicityRecord> gznt_gpnt(const GenNevFun& g) { return gznt_gpnt(g.product()); }

Balance balance(const RatFun& q)
{
	Balance b;
	for (const auto& rec : gznt_gpnt(q))
		(rec.kind == MultiplicityRecord::Kind::gznt ? b.zeros : b.poles) += rec.mult;
	b.zeros += q.zeros().nonreal_count() / 2;
	b.poles += q.poles().nonreal_count() / 2;
	return b;
}

GenNevFun CanonicalRational::as_gen() const
{
	return GenNevFun::make(psi, require_nevfun(s0, "canonical factor"));
}

CanonicalRational canonical_rational(const RatFun& s)
{
	if (s.is_constant())
		throw ConstantInput("canonical factorization needs a nonconstant function, got " + s.to_string());
	int sg = sgn(s.gamma());

	Poly top(1), bottom(1);
	int sum_pi = 0, sum_kappa = 0;

	auto take_unsplit = [&](const RootData& data, Poly& into, int& sum) {
		for (const auto& u : data.unsplit) {
			if (u.mult % 2 != 0 && u.real_roots > 0)
				throw IrrationalRoot("odd-order real root of " + u.poly.to_string() +
				                     " is needed exactly");
			into *= u.poly.pow(u.mult);
			sum += u.poly.degree() * u.mult / 2;
		}
	};
	take_unsplit(s.zeros(), top, sum_pi);
	take_unsplit(s.poles(), bottom, sum_kappa);

	for (const auto& p : s.real_points()) {
		if (!p.root.exact())
			continue; // part of an unsplit factor, handled above
		const Rational& x = p.root.lo;
		int m = p.mult();
		int half;
		if (m % 2 == 0) {
			half = m / 2;
		} else {
			int parity = eta_count(s, x) % 2 == 0 ? 1 : -1;
			half = p.pole ? (m + parity * sg) / 2 : (m - parity * sg) / 2;
		}
		(p.pole ? bottom : top) *= Poly::linear_root(x).pow(2 * half);
		(p.pole ? sum_kappa : sum_pi) += half;
	}

	CanonicalRational out;
	out.psi = RatFun::reduce(top, bottom);
	out.s0 = s / out.psi;
	require_nevfun(out.s0, "canonical factor of " + s.to_string());
	out.records = gznt_gpnt(s);
	out.kappa = std::max(sum_pi, sum_kappa);
	return out;
}

GenNevFun canonical_of(const RatFun& q)
{
	if (q.is_constant())
		return GenNevFun::nevanlinna(NevFun(q.is_zero() ? Rational(0) : q.gamma(), 0));
	return canonical_rational(q).as_gen();
}

GenNevFun compose_gen(const GenNevFun& g, const RatFun& tau)
{
	if (tau.degree() != 1)
		throw DegreeNotOne("inner function must have degree one, got " + std::to_string(tau.degree()));
	auto h = herglotz_check(tau);
	if (!h.ok)
		throw NotNevanlinnaTau(tau.to_string() + " " + h.reason);
	RatFun phi = compose_mobius(g.phi(), tau);
	NevFun q0 = require_nevfun(compose_mobius(g.q0_ratfun(), tau), "composed Nevanlinna part");
	return GenNevFun::make(phi, q0);
}

} // namespace nevkit
