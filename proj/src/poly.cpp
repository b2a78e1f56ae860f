#include "nevkit/poly.hpp"

#include "nevkit/errors.hpp"

#include <sstream>

namespace nevkit {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(Rational constant)
{
	if (constant != 0)
		c_.push_back(std::move(constant));
}

Poly Poly::identity() { return Poly(std::vector<Rational>{0, 1}); }

Poly Poly::linear_root(const Rational& a) { return Poly(std::vector<Rational>{-a, 1}); }

Poly Poly::monomial(const Rational& c, int k)
{
	std::vector<Rational> v(k + 1);
	v[k] = c;
	return Poly(std::move(v));
}

void Poly::trim()
{
	while (!c_.empty() && c_.back() == 0)
		c_.pop_back();
}

Rational Poly::coeff(int k) const
{
	if (k < 0 || k > degree())
		return 0;
	return c_[k];
}

Rational Poly::operator()(const Rational& x) const
{
	Rational acc = 0;
	for (auto it = c_.rbegin(); it != c_.rend(); ++it)
		acc = acc * x + *it;
	return acc;
}

CRational Poly::operator()(const CRational& z) const
{
	CRational acc;
	for (auto it = c_.rbegin(); it != c_.rend(); ++it)
		acc = acc * z + CRational(*it);
	return acc;
}

std::complex<double> Poly::operator()(std::complex<double> z) const
{
	std::complex<double> acc = 0;
	for (auto it = c_.rbegin(); it != c_.rend(); ++it)
		acc = acc * z + it->get_d();
	return acc;
}

std::complex<long double> Poly::operator()(std::complex<long double> z) const
{
	std::complex<long double> acc = 0;
	for (auto it = c_.rbegin(); it != c_.rend(); ++it)
		acc = acc * z + static_cast<long double>(it->get_d());
	return acc;
}

Poly Poly::derivative() const
{
	if (c_.size() <= 1)
		return {};
	std::vector<Rational> d(c_.size() - 1);
	for (std::size_t k = 1; k < c_.size(); ++k)
		d[k - 1] = c_[k] * static_cast<long>(k);
	return Poly(std::move(d));
}

Poly Poly::monic() const
{
	if (c_.empty())
		return {};
	std::vector<Rational> v = c_;
	Rational l = c_.back();
	for (auto& x : v)
		x /= l;
	return Poly(std::move(v));
}

Poly Poly::primitive() const
{
	if (c_.empty())
		return {};
	mpz_class l = 1;
	for (const auto& x : c_)
		mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
	std::vector<Rational> v;
	mpz_class g = 0;
	for (const auto& x : c_) {
		Rational y = x * l;
		mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), y.get_num_mpz_t());
		v.push_back(y);
	}
	if (c_.back() < 0)
		g = -g;
	for (auto& x : v)
		x /= g;
	return Poly(std::move(v));
}

Poly Poly::pow(int k) const
{
	Poly acc(1);
	for (int i = 0; i < k; ++i)
		acc *= *this;
	return acc;
}

Poly Poly::compose(const Poly& inner) const
{
	Poly acc;
	for (auto it = c_.rbegin(); it != c_.rend(); ++it)
		acc = acc * inner + Poly(*it);
	return acc;
}

Poly Poly::reflect() const
{
	std::vector<Rational> v = c_;
	for (std::size_t k = 1; k < v.size(); k += 2)
		v[k] = -v[k];
	return Poly(std::move(v));
}

Poly operator+(const Poly& a, const Poly& b)
{
	std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
	for (std::size_t k = 0; k < a.c_.size(); ++k)
		v[k] += a.c_[k];
	for (std::size_t k = 0; k < b.c_.size(); ++k)
		v[k] += b.c_[k];
	return Poly(std::move(v));
}

Poly operator-(const Poly& a)
{
	std::vector<Rational> v = a.c_;
	for (auto& x : v)
		x = -x;
	return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b)
{
	if (a.c_.empty() || b.c_.empty())
		return {};
	std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
	for (std::size_t i = 0; i < a.c_.size(); ++i)
		for (std::size_t j = 0; j < b.c_.size(); ++j)
			v[i + j] += a.c_[i] * b.c_[j];
	return Poly(std::move(v));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b)
{
	if (b.is_zero())
		throw InvalidArgument("polynomial division by zero");
	std::vector<Rational> r = a.c_;
	int db = b.degree();
	int da = a.degree();
	if (da < db)
		return {Poly(), a};
	std::vector<Rational> q(da - db + 1);
	const Rational& lb = b.c_.back();
	for (int k = da - db; k >= 0; --k) {
		Rational f = r[k + db] / lb;
		q[k] = f;
		if (f == 0)
			continue;
		for (int j = 0; j <= db; ++j)
			r[k + j] -= f * b.c_[j];
	}
	r.resize(db);
	return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly Poly::gcd(const Poly& a, const Poly& b)
{
	Poly x = a, y = b;
	while (!y.is_zero()) {
		Poly r = divmod(x, y).second;
		x = std::move(y);
		y = r.monic();
	}
	return x.monic();
}

Poly Poly::exact_div(const Poly& a, const Poly& b)
{
	auto [q, r] = divmod(a, b);
	if (!r.is_zero())
		throw InvalidArgument("inexact polynomial division");
	return q;
}

std::string Poly::to_string(const char* var) const
{
	if (c_.empty())
		return "0";
	std::ostringstream out;
	bool first = true;
	for (int k = degree(); k >= 0; --k) {
		const Rational& c = c_[k];
		if (c == 0)
			continue;
		Rational mag = abs(c);
		if (first)
			out << (c < 0 ? "-" : "");
		else
			out << (c < 0 ? " - " : " + ");
		first = false;
		bool unit = mag == 1 && k > 0;
		if (!unit)
			out << mag.get_str();
		if (k > 0) {
			if (!unit)
				out << "*";
			out << var;
			if (k > 1)
				out << "^" << k;
		}
	}
	return out.str();
}

int root_multiplicity(const Poly& p, const Rational& x)
{
	if (p.is_zero())
		throw InvalidArgument("multiplicity in the zero polynomial");
	int m = 0;
	Poly q = p;
	while (q(x) == 0) {
		q = Poly::exact_div(q, Poly::linear_root(x));
		++m;
	}
	return m;
}

Poly deflate(const Poly& p, const Rational& x, int m)
{
	Poly q = p;
	for (int i = 0; i < m; ++i)
		q = Poly::exact_div(q, Poly::linear_root(x));
	return q;
}

int sign_right_of(const Poly& p, const Rational& x)
{
	if (p.is_zero())
		return 0;
	int m = root_multiplicity(p, x);
	return sgn(deflate(p, x, m)(x));
}

int sign_left_of(const Poly& p, const Rational& x)
{
	if (p.is_zero())
		return 0;
	int m = root_multiplicity(p, x);
	int s = sgn(deflate(p, x, m)(x));
	return (m % 2) ? -s : s;
}

} // namespace nevkit
