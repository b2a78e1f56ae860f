#include "common.hpp"

#include <cstdlib>

using namespace test;

TEST_CASE("rationals parse and print in p/q form")
{
	CHECK(parse_rational("3/6") == q_(1, 2));
	CHECK(parse_rational(" -7/14 ") == q_(-1, 2));
	CHECK(parse_rational("-0.25") == q_(-1, 4));
	CHECK(parse_rational("12") == 12);
	CHECK(to_string(q_(-6, 4)) == "-3/2");
	CHECK_THROWS_AS(parse_rational(""), ParseError);
	CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
	CHECK_THROWS_AS(parse_rational("1-2"), ParseError);
	CHECK_THROWS_AS(parse_rational("abc"), ParseError);
	CHECK(parse_ext_real("inf").is_infinite());
	CHECK(ExtReal(q_(5)) < ExtReal::infinity());
}

TEST_CASE("polynomial arithmetic and division")
{
	Poly p({-1, 0, 1}); // z^2 - 1
	auto [quo, rem] = Poly::divmod(p, Poly::linear_root(1));
	CHECK(quo == P({1, 1}));
	CHECK(rem.is_zero());
	CHECK(Poly::gcd(p, P({1, 2, 1})) == P({1, 1}));
	CHECK(root_multiplicity(Poly::linear_root(2).pow(3) * Poly::linear_root(1), 2) == 3);
	CHECK(deflate(Poly::linear_root(2).pow(3), 2, 3) == Poly(1));
	CHECK(p.derivative() == P({0, 2}));
	CHECK(p.compose(P({1, 1})) == P({0, 2, 1}));
	CHECK(P({q_(1, 2), q_(3, 4)}).primitive() == P({2, 3}));
}

TEST_CASE("reduction normalizes to a monic denominator")
{
	RatFun r = RatFun::reduce(P({-2, 2}), P({-2, 0, 2})); // (2z-2)/(2z^2-2)
	CHECK(r == RatFun::reduce(Poly(1), P({1, 1})));
	CHECK(r.den().lead() == 1);
	CHECK_THROWS_AS(RatFun::reduce(Poly(1), Poly()), IdenticallyZeroDenominator);
	CHECK(RatFun::mobius(1, -1, -1, 2) == worked_q());
	CHECK(worked_q().gamma() == -1);
	CHECK(worked_r().degree() == 3);
}

TEST_CASE("zeros, poles and the point at infinity")
{
	RatFun r = worked_r();
	auto pts = r.real_points();
	REQUIRE(pts.size() == 4);
	CHECK(pts[0].root.value() == 0);
	CHECK_FALSE(pts[0].pole);
	CHECK(pts[1].root.value() == 1);
	CHECK(pts[1].pole);
	CHECK(pts[1].mult() == 2);
	CHECK(pts[2].root.value() == 2);
	CHECK(pts[2].mult() == 2);
	CHECK(pts[3].root.value() == 3);
	CHECK(r.order_at_infinity() == 0);
	CHECK((z * z * z).order_at_infinity() == -3);
	CHECK((1 / (z * z)).order_at_infinity() == 2);
	CHECK((z * z + 1).has_nonreal_points());
}

TEST_CASE("irrational roots are isolated")
{
	RatFun r = z * z - 2;
	REQUIRE(r.zeros().real.size() == 2);
	const RealRoot& x = r.zeros().real[1];
	CHECK_FALSE(x.exact());
	CHECK(x.compare(q_(141, 100)) > 0);
	CHECK(x.compare(q_(142, 100)) < 0);
	CHECK(std::abs(x.approx() - 1.4142135623730951) < 1e-12);
	CHECK_THROWS_AS(x.value(), IrrationalRoot);
	CHECK(root_width() == Rational(1) / (Rational(1) << 64));
}

TEST_CASE("precision override via environment")
{
	setenv("NEVKIT_PRECISION", "10", 1);
	CHECK(root_width() == Rational(1, 1024));
	setenv("NEVKIT_PRECISION", "1/1000", 1);
	CHECK(root_width() == Rational(1, 1000));
	unsetenv("NEVKIT_PRECISION");
}

TEST_CASE("laurent data and limits")
{
	RatFun r = worked_r();
	Laurent at2 = r.laurent(Rational(2));
	CHECK(at2.order == 2);
	CHECK(at2.coeff == -2);
	Laurent at1 = r.laurent(Rational(1));
	CHECK(at1.order == -2);
	CHECK(at1.coeff == q_(-1, 2));
	Laurent at0 = r.laurent(Rational(0));
	CHECK(at0.order == 1);
	CHECK(at0.coeff == q_(-4, 3));
	Laurent at3 = r.laurent(Rational(3));
	CHECK(at3.order == -1);
	CHECK(at3.coeff == q_(3, 4));
	Laurent inf = (2 * z * z).laurent_at_infinity();
	CHECK(inf.order == -2);
	CHECK(inf.coeff == 2);

	RatFun f = (z - 1) / (z - 2);
	CHECK(f.limit(Rational(2), Approach::from_left) == Limit::neg_inf());
	CHECK(f.limit(Rational(2), Approach::from_right) == Limit::pos_inf());
	CHECK(f.limit(Rational(2)) == Limit::unsigned_inf());
	CHECK(f.limit(ExtReal::infinity()) == Limit::finite(1));
	CHECK((-z).limit(ExtReal::infinity(), Approach::from_left) == Limit::neg_inf());
	CHECK((-z).limit(ExtReal::infinity(), Approach::from_right) == Limit::pos_inf());
}

TEST_CASE("evaluation")
{
	RatFun r = worked_q();
	CHECK(r(Rational(0)) == q_(-1, 2));
	CHECK_THROWS_AS(r(Rational(2)), PoleHit);
	CRational w = r(CRational(0, 1)); // (i - 1)/(2 - i) = (-3 + i)/5
	CHECK(w == CRational(q_(-3, 5), q_(1, 5)));
	auto d = r(std::complex<double>(0, 1));
	CHECK(d.real() == doctest::Approx(-0.6));
	CHECK(d.imag() == doctest::Approx(0.2));
	CHECK(r.sign_at(Rational(3)) == -1);
	CHECK(r.inverse() == (2 - z) / (z - 1));
}

TEST_CASE("sign pieces and eta counts")
{
	RatFun r = worked_r();
	auto pieces = sign_on_interval(r).pieces;
	// Odd points 0 and 3 split the line; the double points stay inside pieces.
	REQUIRE(pieces.size() == 3);
	CHECK(pieces[0].sign == 1);
	CHECK(pieces[1].sign == -1);
	CHECK(pieces[2].sign == 1);
	CHECK(pieces[1].excluded.size() == 2);

	CHECK(eta_count((z - 1) / (z - 2), 1) == 1);
	CHECK(eta_count((z - 1) / (z - 2), 2) == 0);
	CHECK(eta_count(r, 0) == 1);
}

TEST_CASE("mobius composition")
{
	RatFun tau = RatFun::mobius(0, -1, 1, 0); // -1/z
	CHECK(compose_mobius(z, tau) == -1 / z);
	CHECK(compose_mobius((z - 1) / (z - 2), tau) == (z + 1) / (2 * z + 1));
	CHECK_THROWS_AS(compose_mobius(z, z * z), DegreeNotOne);
}

TEST_CASE("signs at roots of other polynomials")
{
	RatFun f = (z - 1) / (z - 3);
	RatFun g = z * z - 2;
	auto s = sign_at_root(f, g.zeros().real[1]); // sqrt 2 in (1, 3)
	REQUIRE(s.has_value());
	CHECK(*s == -1);
	CHECK_FALSE(sign_at_root(g, g.zeros().real[0]).has_value());
	Rational mid = point_between(g.zeros().real[0], g.zeros().real[1]);
	CHECK(mid * mid < 2);
}
