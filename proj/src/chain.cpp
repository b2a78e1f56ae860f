#include "nevkit/classify.hpp"

#include "nevkit/errors.hpp"

#include <algorithm>

namespace nevkit {

namespace {

struct Marked {
	Rational x;
	bool pole = false;
};

RatFun ratio(const Rational& zero, const Rational& pole)
{
	return RatFun::reduce(Poly::linear_root(zero), Poly::linear_root(pole));
}

// Factors for one bounded negative interval (lo, hi) of r, whose ends are odd points.
std::vector<RatFun> interval_factors(const RatFun& r, const RatFun& Q, const Rational& lo,
                                     const Rational& hi)
{
	std::vector<Marked> pts;
	for (const auto& p : Q.real_points())
		if (p.root.compare(lo) > 0 && p.root.compare(hi) < 0)
			pts.push_back({p.root.value(), p.pole});

	bool lo_zero = r.num()(lo) == 0;
	bool hi_zero = r.num()(hi) == 0;
	std::vector<RatFun> ends;
	std::vector<RatFun> pairs;
	std::size_t first = 0, last = pts.size();

	auto bad = [&](const std::string& why) {
		return NotInClass("interval (" + lo.get_str() + ", " + hi.get_str() + "): " + why);
	};

	if (lo_zero && !hi_zero) {
		ends.push_back(ratio(lo, hi));
		if (!pts.empty()) {
			if (pts.front().pole || !pts.back().pole)
				throw bad("expected a zero of q first and a pole of q last");
			++first;
			--last;
		}
	} else if (!lo_zero && hi_zero) {
		ends.push_back(ratio(hi, lo));
	} else if (lo_zero && hi_zero) {
		if (pts.empty() || pts.front().pole)
			throw bad("expected a zero of q first");
		const Rational& a0 = pts.front().x;
		ends.push_back(ratio(lo, a0));
		ends.push_back(ratio(hi, a0));
		++first;
	} else {
		if (pts.empty() || !pts.back().pole)
			throw bad("expected a pole of q last");
		const Rational& b = pts.back().x;
		ends.push_back(ratio(b, lo));
		ends.push_back(ratio(b, hi));
		--last;
	}

	if ((last - first) % 2 != 0)
		throw bad("unpaired zero or pole of q");
	for (std::size_t i = first; i < last; i += 2) {
		if (!pts[i].pole || pts[i + 1].pole)
			throw bad("zeros and poles of q do not pair up");
		pairs.push_back(ratio(pts[i].x, pts[i + 1].x));
	}
	if (lo_zero && !hi_zero && !pts.empty())
		pairs.push_back(ratio(pts.back().x, pts.front().x));

	std::vector<RatFun> out = pairs;
	for (const auto& e : ends)
		if (!(e == RatFun(1)))
			out.push_back(e);
	out.insert(out.end(), pairs.begin(), pairs.end());
	return out;
}

bool hits_point(const RatFun& f, const Rational& x)
{
	for (const auto& p : f.real_points())
		if (p.root.compare(x) == 0)
			return true;
	return false;
}

// A rational near `base`, inside (lo, hi) when those are given, avoiding points of r and Q.
Rational avoid_points(const RatFun& r, const RatFun& Q, const Rational& base,
                      const std::optional<Rational>& lo, const std::optional<Rational>& hi)
{
	Rational step(1, 1000);
	if (lo && hi)
		step = (*hi - *lo) / 1000;
	for (long k = 0; k < 100000; ++k) {
		for (long sgn_k : {1L, -1L}) {
			Rational x = base + step * (sgn_k * k);
			if ((lo && x <= *lo) || (hi && x >= *hi))
				continue;
			if (!hits_point(r, x) && !hits_point(Q, x))
				return x;
		}
	}
	throw InvalidArgument("no admissible conjugation point found");
}

// Negative arc through or ending at infinity: conjugate by tau(l) = p - 1/l, solve the
// bounded problem, and map the factors back with z -> 1/(p - z).
std::vector<RatFun> arc_factors(const RatFun& r, const RatFun& Q, const std::optional<Rational>& from,
                                const std::optional<Rational>& to, const Rational& p)
{
	RatFun tau = RatFun::mobius(p, -1, 1, 0);
	RatFun back = RatFun::mobius(0, 1, -1, p);
	auto lam = [&](const std::optional<Rational>& x) { return x ? Rational(1 / (p - *x)) : Rational(0); };
	auto local = interval_factors(compose_mobius(r, tau), compose_mobius(Q, tau), lam(from), lam(to));
	std::vector<RatFun> out;
	for (const auto& f : local)
		out.push_back(compose_mobius(f, back));
	return out;
}

std::optional<std::vector<NevFun>> certify(const RatFun& Q, const std::vector<RatFun>& factors)
{
	std::vector<NevFun> certs;
	RatFun acc = Q;
	for (const auto& f : factors) {
		acc = acc * f;
		auto h = herglotz_check(acc);
		if (!h.ok)
			return std::nullopt;
		certs.push_back(*h.fun);
	}
	return certs;
}

bool search_order(const RatFun& acc, std::vector<RatFun>& pool, std::vector<RatFun>& chosen)
{
	if (pool.empty())
		return true;
	for (std::size_t i = 0; i < pool.size(); ++i) {
		bool seen = false;
		for (std::size_t j = 0; j < i; ++j)
			if (pool[j] == pool[i])
				seen = true;
		if (seen)
			continue;
		RatFun next = acc * pool[i];
		if (!herglotz_check(next).ok)
			continue;
		RatFun f = pool[i];
		pool.erase(pool.begin() + static_cast<long>(i));
		chosen.push_back(f);
		if (search_order(next, pool, chosen))
			return true;
		chosen.pop_back();
		pool.insert(pool.begin() + static_cast<long>(i), f);
	}
	return false;
}

std::vector<std::vector<RatFun>> full_circle_chains(const RatFun& r, const NevFun& q, const RatFun& Q)
{
	struct Pt {
		std::optional<Rational> x; // nullopt: infinity
		bool pole;
	};
	std::vector<Pt> cyc;
	for (const auto& p : Q.real_points())
		cyc.push_back({p.root.value(), p.pole});
	if (q.beta > 0)
		cyc.push_back({std::nullopt, true});
	else if (Q.order_at_infinity() > 0)
		cyc.push_back({std::nullopt, false});

	std::vector<std::vector<RatFun>> out;
	std::size_t n = cyc.size();
	if (n == 0 || n % 2 != 0)
		return out;
	for (std::size_t start = 0; start < n; ++start) {
		if (cyc[start].pole)
			continue;
		std::vector<RatFun> tilde;
		bool ok = true;
		for (std::size_t k = 0; k < n; k += 2) {
			const Pt& zero = cyc[(start + k) % n];
			const Pt& pole = cyc[(start + k + 1) % n];
			if (zero.pole || !pole.pole) {
				ok = false;
				break;
			}
			Poly top = pole.x ? Poly::linear_root(*pole.x) : Poly(1);
			Poly bottom = zero.x ? Poly::linear_root(*zero.x) : Poly(1);
			tilde.push_back(RatFun::reduce(top, bottom));
		}
		if (!ok)
			continue;
		RatFun prod(1);
		for (const auto& t : tilde)
			prod = prod * t * t;
		RatFun c = r / prod;
		if (!c.is_constant())
			continue;
		std::vector<RatFun> chain = tilde;
		chain.push_back(c * tilde[0]);
		chain.insert(chain.end(), tilde.begin() + 1, tilde.end());
		out.push_back(chain);
	}
	return out;
}

} // namespace

std::optional<std::size_t> first_failing_partial(const NevFun& q, const std::vector<RatFun>& factors)
{
	RatFun acc = q.to_ratfun();
	for (std::size_t i = 0; i < factors.size(); ++i) {
		acc = acc * factors[i];
		if (!herglotz_check(acc).ok)
			return i;
	}
	return std::nullopt;
}

FactorChain chain_factorize(const NevFun& q, const RatFun& r)
{
	N00Report n00 = check_N00(q, r);
	if (!n00.ok) {
		std::string msg;
		for (const auto& f : n00.failures)
			msg += (msg.empty() ? "" : "; ") + f.point + ": " + f.reason;
		throw NotInClass(msg);
	}
	RatFun Q = q.to_ratfun();
	FactorChain chain;

	auto finish = [&](std::vector<RatFun> factors) {
		if (auto certs = certify(Q, factors)) {
			chain.factors = std::move(factors);
			chain.partial_certificates = std::move(*certs);
			return true;
		}
		return false;
	};

	if (r.is_constant()) {
		if (!finish({r}))
			throw NotInClass("constant factor breaks the Nevanlinna property");
		return chain;
	}

	auto pieces = sign_on_interval(r).pieces;
	if (pieces.size() == 1) {
		if (pieces.front().sign > 0)
			throw NotInClass("r is positive with only even-order points");
		for (auto& candidate : full_circle_chains(r, q, Q))
			if (finish(candidate))
				return chain;
		throw NotInClass("no rotation of the zeros and poles of q gives a certified chain");
	}

	std::vector<RatFun> factors;
	std::size_t n = pieces.size();
	auto at = [](const Endpoint& e) { return e.at.value(); };
	for (std::size_t i = 1; i + 1 < n; ++i) {
		if (pieces[i].sign > 0)
			continue;
		auto f = interval_factors(r, Q, at(pieces[i].left), at(pieces[i].right));
		factors.insert(factors.end(), f.begin(), f.end());
	}
	bool first_neg = pieces.front().sign < 0;
	bool last_neg = pieces.back().sign < 0;
	if (first_neg && last_neg) {
		Rational a = at(pieces.back().left), b = at(pieces.front().right);
		Rational p = avoid_points(r, Q, (a + b) / 2, b, a);
		auto f = arc_factors(r, Q, a, b, p);
		factors.insert(factors.end(), f.begin(), f.end());
	} else if (first_neg) {
		Rational b = at(pieces.front().right);
		Rational p = avoid_points(r, Q, b + 1, b, std::nullopt);
		auto f = arc_factors(r, Q, std::nullopt, b, p);
		factors.insert(factors.end(), f.begin(), f.end());
	} else if (last_neg) {
		Rational a = at(pieces.back().left);
		Rational p = avoid_points(r, Q, a - 1, std::nullopt, a);
		auto f = arc_factors(r, Q, a, std::nullopt, p);
		factors.insert(factors.end(), f.begin(), f.end());
	}

	RatFun prod(1);
	for (const auto& f : factors)
		prod = prod * f;
	RatFun c = r / prod;
	if (!c.is_constant() || c.gamma() <= 0)
		throw NotInClass("leftover factor " + c.to_string() + " is not a positive constant");
	if (factors.empty())
		factors.push_back(c);
	else
		factors.front() = c * factors.front();

	if (finish(factors))
		return chain;

	std::vector<RatFun> pool = factors, chosen;
	if (search_order(Q, pool, chosen) && finish(chosen)) {
		chain.searched = true;
		return chain;
	}
	throw NotInClass("no order of the constructed factors keeps every partial product Nevanlinna");
}

} // namespace nevkit
