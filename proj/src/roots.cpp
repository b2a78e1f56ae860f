#include "nevkit/roots.hpp"

#include "nevkit/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace nevkit {

namespace {

struct SturmChain {
	std::vector<Poly> seq;

	explicit SturmChain(const Poly& f)
	{
		seq.push_back(f);
		seq.push_back(f.derivative());
		while (!seq.back().is_zero()) {
			Poly r = Poly::divmod(seq[seq.size() - 2], seq.back()).second;
			seq.push_back(-r);
		}
		seq.pop_back();
	}

	static int changes(const std::vector<int>& signs)
	{
		int v = 0, last = 0;
		for (int s : signs) {
			if (s == 0)
				continue;
			if (last != 0 && s != last)
				++v;
			last = s;
		}
		return v;
	}

	int at(const Rational& x) const
	{
		std::vector<int> s;
		for (const auto& p : seq)
			s.push_back(sgn(p(x)));
		return changes(s);
	}

	int at_pos_inf() const
	{
		std::vector<int> s;
		for (const auto& p : seq)
			s.push_back(sgn(p.lead()));
		return changes(s);
	}

	int at_neg_inf() const
	{
		std::vector<int> s;
		for (const auto& p : seq)
			s.push_back(p.degree() % 2 ? -sgn(p.lead()) : sgn(p.lead()));
		return changes(s);
	}

	// Roots in the half-open interval (lo, hi].
	int count(const Rational& lo, const Rational& hi) const { return at(lo) - at(hi); }
};

Rational cauchy_bound(const Poly& f)
{
	Rational m = 0;
	for (int k = 0; k < f.degree(); ++k) {
		Rational r = abs(f.coeff(k) / f.lead());
		if (r > m)
			m = r;
	}
	return m + 1;
}

void bisect_isolate(const SturmChain& sc, Rational lo, Rational hi,
                    std::vector<std::pair<Rational, Rational>>& out)
{
	int n = sc.count(lo, hi);
	if (n == 0)
		return;
	if (n == 1) {
		out.emplace_back(lo, hi);
		return;
	}
	Rational mid = (lo + hi) / 2;
	bisect_isolate(sc, lo, mid, out);
	bisect_isolate(sc, mid, hi, out);
}

// Shrinks (lo, hi) around the unique simple root of f by sign bisection.
void shrink(const Poly& f, Rational& lo, Rational& hi, const Rational& width)
{
	int slo = sgn(f(lo));
	while (hi - lo >= width) {
		Rational mid = (lo + hi) / 2;
		int sm = sgn(f(mid));
		if (sm == 0) {
			lo = hi = mid;
			return;
		}
		if (sm == slo)
			lo = mid;
		else
			hi = mid;
	}
}

} // namespace

const Rational& RealRoot::value() const
{
	if (!exact())
		throw IrrationalRoot("root of " + sqf.to_string() + " in (" + lo.get_str() + ", " +
		                     hi.get_str() + ") is not rational");
	return lo;
}

double RealRoot::approx() const { return Rational((lo + hi) / 2).get_d(); }

int RealRoot::compare(const Rational& c) const
{
	if (exact())
		return sgn(lo - c);
	if (c <= lo)
		return 1;
	if (c >= hi)
		return -1;
	// c is strictly inside; sqf has no rational roots, so refinement separates.
	int sc = sgn(sqf(c));
	int slo = sgn(sqf(lo));
	return sc == slo ? 1 : -1;
}

RealRoot RealRoot::refined(const Rational& width) const
{
	RealRoot r = *this;
	if (!r.exact())
		shrink(r.sqf, r.lo, r.hi, width);
	return r;
}

std::string RealRoot::to_string() const
{
	if (exact())
		return lo.get_str();
	return "(" + lo.get_str() + ", " + hi.get_str() + ")";
}

bool root_less(const RealRoot& a, const RealRoot& b)
{
	RealRoot x = a, y = b;
	while (true) {
		if (x.hi <= y.lo)
			return true;
		if (y.hi <= x.lo)
			return false;
		if (x.exact() && y.exact())
			return false; // equal
		if (x.exact())
			return y.compare(x.lo) > 0;
		if (y.exact())
			return x.compare(y.lo) < 0;
		x = x.refined((x.hi - x.lo) / 2);
		y = y.refined((y.hi - y.lo) / 2);
	}
}

int RootData::nonreal_count() const
{
	int n = 0;
	for (const auto& u : unsplit)
		n += (u.poly.degree() - u.real_roots) * u.mult;
	return n;
}

bool RootData::all_real_rational() const
{
	for (const auto& r : real)
		if (!r.exact())
			return false;
	return true;
}

std::vector<std::pair<Poly, int>> squarefree_factors(const Poly& p)
{
	std::vector<std::pair<Poly, int>> out;
	if (p.degree() < 1)
		return out;
	Poly f = p.monic();
	Poly d = f.derivative();
	Poly a = Poly::gcd(f, d);
	Poly b = Poly::exact_div(f, a);
	Poly c = Poly::exact_div(d, a) - b.derivative();
	int i = 1;
	while (b.degree() > 0) {
		Poly g = Poly::gcd(b, c);
		if (g.degree() > 0)
			out.emplace_back(g, i);
		b = Poly::exact_div(b, g);
		c = Poly::exact_div(c, g) - b.derivative();
		++i;
	}
	return out;
}

int count_real_roots(const Poly& p, const std::optional<Rational>& lo,
                     const std::optional<Rational>& hi)
{
	if (p.degree() < 1)
		return 0;
	Poly f = Poly::exact_div(p, Poly::gcd(p, p.derivative()));
	SturmChain sc(f);
	int vlo = lo ? sc.at(*lo) : sc.at_neg_inf();
	int vhi = hi ? sc.at(*hi) : sc.at_pos_inf();
	int n = vlo - vhi; // roots in (lo, hi]
	if (hi && f(*hi) == 0)
		--n;
	return n;
}

Rational simplest_between(const Rational& lo, const Rational& hi)
{
	if (lo > hi)
		return simplest_between(hi, lo);
	if (lo <= 0 && hi >= 0)
		return 0;
	if (hi < 0)
		return -simplest_between(-hi, -lo);
	mpz_class fl;
	mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
	if (Rational(fl) == lo)
		return lo;
	Rational ceil_lo = Rational(fl + 1);
	if (ceil_lo <= hi)
		return ceil_lo;
	Rational base(fl);
	return base + 1 / simplest_between(1 / (hi - base), 1 / (lo - base));
}

Rational root_width()
{
	mpz_class den;
	mpz_ui_pow_ui(den.get_mpz_t(), 2, 64);
	Rational width(mpz_class(1), den);
	const char* env = std::getenv("NEVKIT_PRECISION");
	if (!env)
		return width;
	std::string s(env);
	try {
		if (s.find('/') == std::string::npos && s.find('.') == std::string::npos) {
			long k = std::stol(s);
			if (k > 0 && k < 4096) {
				mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(k));
				width = Rational(mpz_class(1), den);
			}
		} else {
			Rational w = parse_rational(s);
			if (w > 0)
				width = w;
		}
	} catch (const std::exception&) {
		// keep the default on malformed input
	}
	return width;
}

RootData find_roots(const Poly& p)
{
	RootData data;
	if (p.degree() < 1)
		return data;
	const Rational width = root_width();

	for (const auto& [f, m] : squarefree_factors(p)) {
		std::vector<Rational> rational;
		std::vector<std::pair<Rational, Rational>> irrational;

		if (f.degree() == 1) {
			rational.push_back(-f.coeff(0) / f.coeff(1));
		} else {
			SturmChain sc(f);
			Rational B = cauchy_bound(f);
			std::vector<std::pair<Rational, Rational>> cells;
			bisect_isolate(sc, -B, B, cells);

			mpz_class D = f.primitive().lead().get_num();
			Rational sep(mpz_class(1), D * D);

			for (auto [lo, hi] : cells) {
				if (f(hi) == 0) {
					rational.push_back(hi);
					continue;
				}
				bool found = false;
				while (true) {
					if (hi - lo < sep) {
						Rational cand = simplest_between(lo, hi);
						if (cand > lo && cand < hi && f(cand) == 0) {
							rational.push_back(cand);
							found = true;
						}
						break;
					}
					Rational mid = (lo + hi) / 2;
					if (f(mid) == 0) {
						rational.push_back(mid);
						found = true;
						break;
					}
					if (sc.count(lo, mid) == 1)
						hi = mid;
					else
						lo = mid;
				}
				if (!found)
					irrational.emplace_back(lo, hi);
			}
		}

		Poly rest = f;
		for (const auto& x : rational) {
			rest = Poly::exact_div(rest, Poly::linear_root(x));
			data.real.push_back(RealRoot{x, x, Poly::linear_root(x), m});
		}
		if (rest.degree() > 0) {
			data.unsplit.push_back(UnsplitFactor{rest, m, static_cast<int>(irrational.size())});
			for (auto [lo, hi] : irrational) {
				RealRoot r{lo, hi, rest, m};
				data.real.push_back(r.refined(width));
			}
		}
	}

	std::vector<RealRoot> none;
	separate(data.real, none);
	return data;
}

void separate(std::vector<RealRoot>& a, std::vector<RealRoot>& b)
{
	// Refine overlapping neighbours until the merged list is strictly ordered.
	while (true) {
		std::vector<std::pair<RealRoot*, int>> all;
		for (auto& r : a)
			all.emplace_back(&r, 0);
		for (auto& r : b)
			all.emplace_back(&r, 1);
		std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
			if (x.first->lo != y.first->lo)
				return x.first->lo < y.first->lo;
			return x.first->hi < y.first->hi;
		});
		bool clean = true;
		for (std::size_t i = 0; i + 1 < all.size(); ++i) {
			RealRoot& x = *all[i].first;
			RealRoot& y = *all[i + 1].first;
			if (x.hi <= y.lo)
				continue;
			clean = false;
			if (!x.exact())
				x = x.refined((x.hi - x.lo) / 2);
			if (!y.exact())
				y = y.refined((y.hi - y.lo) / 2);
		}
		if (clean)
			break;
	}
	auto by_lo = [](const RealRoot& x, const RealRoot& y) { return x.lo < y.lo; };
	std::sort(a.begin(), a.end(), by_lo);
	std::sort(b.begin(), b.end(), by_lo);
}

} // namespace nevkit
