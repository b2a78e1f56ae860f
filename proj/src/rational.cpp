#include "nevkit/rational.hpp"

#include "nevkit/errors.hpp"

#include <cctype>

namespace nevkit {

std::string to_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(const std::string& text)
{
	std::string s;
	for (char ch : text)
		if (!std::isspace(static_cast<unsigned char>(ch)))
			s += ch;
	if (s.empty())
		throw ParseError("empty rational");

	auto dot = s.find('.');
	if (dot != std::string::npos) {
		if (s.find('/') != std::string::npos)
			throw ParseError("mixed decimal and fraction: " + text);
		bool neg = s[0] == '-';
		std::string body = (s[0] == '-' || s[0] == '+') ? s.substr(1) : s;
		dot = body.find('.');
		std::string digits = body.substr(0, dot) + body.substr(dot + 1);
		if (digits.empty())
			throw ParseError("bad decimal: " + text);
		for (char ch : digits)
			if (!std::isdigit(static_cast<unsigned char>(ch)))
				throw ParseError("bad decimal: " + text);
		mpz_class num(digits, 10);
		mpz_class den;
		mpz_ui_pow_ui(den.get_mpz_t(), 10, body.size() - dot - 1);
		Rational q(num, den);
		q.canonicalize();
		return neg ? Rational(-q) : q;
	}

	for (std::size_t i = 0; i < s.size(); ++i) {
		char ch = s[i];
		bool ok = std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' ||
		          ((ch == '-' || ch == '+') && i == 0);
		if (!ok)
			throw ParseError("bad rational: " + text);
	}
	if (s[0] == '+')
		s = s.substr(1);
	Rational q;
	if (q.set_str(s, 10) != 0)
		throw ParseError("bad rational: " + text);
	if (q.get_den() == 0)
		throw ParseError("zero denominator: " + text);
	q.canonicalize();
	return q;
}

CRational operator/(const CRational& a, const CRational& b)
{
	Rational n = b.norm();
	if (n == 0)
		throw PoleHit("complex division by zero");
	CRational p = a * b.conj();
	return {p.re / n, p.im / n};
}

std::string to_string(const CRational& z)
{
	if (z.im == 0)
		return to_string(z.re);
	return to_string(z.re) + (z.im < 0 ? " - " : " + ") + to_string(Rational(abs(z.im))) + "i";
}

std::string to_string(const ExtReal& x)
{
	return x.is_infinite() ? std::string("inf") : to_string(x.value());
}

ExtReal parse_ext_real(const std::string& text)
{
	if (text == "inf" || text == "infinity" || text == "oo")
		return ExtReal::infinity();
	return ExtReal(parse_rational(text));
}

std::string to_string(const Limit& l)
{
	switch (l.kind) {
	case Limit::Kind::finite:
		return to_string(l.value);
	case Limit::Kind::pos_inf:
		return "+inf";
	case Limit::Kind::neg_inf:
		return "-inf";
	case Limit::Kind::unsigned_inf:
		return "inf";
	}
	return "?";
}

} // namespace nevkit
