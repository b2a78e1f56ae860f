#include "common.hpp"

using namespace test;

TEST_CASE("representation data of the worked q")
{
	auto h = herglotz_check(worked_q());
	REQUIRE(h.ok);
	const NevFun& q = *h.fun;
	CHECK(q.alpha == q_(-3, 5));
	CHECK(q.beta == 0);
	REQUIRE(q.sigma.size() == 1);
	CHECK(q.sigma.atoms()[0] == Atom{2, 1});
	CHECK(q.constant_at_infinity() == -1);
	CHECK(q.to_ratfun() == worked_q());
}

TEST_CASE("representation data of r q")
{
	NevFun rq = require_nevfun(worked_r() * worked_q());
	CHECK(rq.alpha == q_(-3, 10));
	CHECK(rq.beta == 0);
	CHECK(rq.sigma == AtomicMeasure({{1, q_(1, 2)}, {3, q_(3, 2)}}));
}

TEST_CASE("herglotz rejections name the reason")
{
	CHECK_FALSE(herglotz_check(z * z).ok);
	CHECK_FALSE(herglotz_check(-z).ok);
	CHECK_FALSE(herglotz_check(1 / z).ok);
	CHECK_FALSE(herglotz_check(1 / (z * z + 1)).ok);
	CHECK_FALSE(herglotz_check(-1 / (z * z)).ok);
	CHECK(herglotz_check(RatFun(-7)).ok);
	CHECK(herglotz_check(z + 1 / (1 - z)).ok);
	CHECK_THROWS_AS(require_nevfun(z * z), NotNevanlinna);
	CHECK_FALSE(to_nevfun(1 / z).has_value());
}

TEST_CASE("irrational simple poles are out of the exact core")
{
	CHECK_THROWS_AS(herglotz_check(-z / (z * z - 2)), IrrationalRoot);
}

TEST_CASE("round trip through the representation")
{
	NevFun q(q_(1, 3), 2, AtomicMeasure({{-1, q_(1, 2)}, {q_(5, 2), 3}}));
	auto back = to_nevfun(q.to_ratfun());
	REQUIRE(back.has_value());
	CHECK(*back == q);
	CHECK_THROWS_AS(AtomicMeasure({{1, 1}, {1, 2}}), InvalidArgument);
	CHECK_THROWS_AS(AtomicMeasure({{1, -1}}), InvalidArgument);
}

TEST_CASE("evaluation agrees across overloads")
{
	NevFun q = require_nevfun(worked_q());
	CHECK(evaluate(q, Rational(0)) == q_(-1, 2));
	CHECK(evaluate(q, CRational(0, 1)) == worked_q()(CRational(0, 1)));
	auto d = evaluate(q, std::complex<double>(q_(1, 3).get_d(), 2.0));
	auto e = worked_q()(std::complex<double>(q_(1, 3).get_d(), 2.0));
	CHECK(d.real() == doctest::Approx(e.real()));
	CHECK(d.imag() == doctest::Approx(e.imag()));
	CHECK_THROWS_AS(evaluate(q, Rational(2)), PoleHit);
}

TEST_CASE("boundary limits")
{
	NevFun q = require_nevfun(worked_q());
	CHECK(limit_at(q, Rational(0), LimitMode::value) == Limit::finite(q_(-1, 2)));
	CHECK(limit_at(q, Rational(2), LimitMode::residue) == Limit::finite(1));
	CHECK(limit_at(q, Rational(1), LimitMode::slope) == Limit::finite(1));
	CHECK(limit_at(q, ExtReal::infinity(), LimitMode::value) == Limit::finite(-1));
	CHECK(limit_at(q, Rational(2), LimitMode::value, Approach::from_left) == Limit::pos_inf());
	CHECK(limit_at(q, Rational(2), LimitMode::value, Approach::from_right) == Limit::neg_inf());
	CHECK(limit_at(q, Rational(2), LimitMode::value) == Limit::unsigned_inf());

	NevFun p = require_nevfun(z + 1 / (1 - z));
	CHECK(limit_at(p, ExtReal::infinity(), LimitMode::residue) == Limit::finite(1));
	CHECK(limit_at(p, ExtReal::infinity(), LimitMode::value, Approach::from_left) == Limit::pos_inf());
	CHECK(limit_at_minus_infinity(p) == 0);

	NevFun m = require_nevfun(1 / (1 - z) + 2 / (3 - z));
	CHECK(first_moment_at_infinity(m) == Limit::finite(-3));
	CHECK(first_moment_at_infinity(q).is_infinite());
}

TEST_CASE("Kac-Donoghue membership")
{
	NevFun q = require_nevfun(worked_q());
	CHECK(kac_membership(q, Rational(1)));
	CHECK(kac_membership(q, Rational(3)));
	CHECK_FALSE(kac_membership(q, Rational(2)));
	CHECK(kac_membership(q, ExtReal::infinity()));
	CHECK_FALSE(kac_membership(require_nevfun(z), ExtReal::infinity()));
}

TEST_CASE("gap characterizations")
{
	NevFun q = require_nevfun(worked_q()); // single atom at 2
	auto bounded = gap_characterize(q, 0, 1, GapShape::bounded_gap);
	CHECK(bounded.holds);
	CHECK(bounded.eta == Limit::finite(0));
	REQUIRE(bounded.representative.has_value());
	CHECK(bounded.representative->to_ratfun() == (worked_q() - 0) * z / (z - 1));

	auto touching = gap_characterize(q, 0, 2, GapShape::bounded_gap);
	CHECK_FALSE(touching.holds);
	CHECK(touching.eta == Limit::pos_inf());

	CHECK_THROWS_AS(gap_characterize(q, 1, 3, GapShape::bounded_gap), GapViolated);
	CHECK_THROWS_AS(gap_characterize(q, 3, 4, GapShape::complement_gap), GapViolated);
	auto around = gap_characterize(q, 1, 3, GapShape::complement_gap);
	CHECK(around.holds);
	CHECK(around.eta == Limit::finite(-2));
}

TEST_CASE("product predicates match direct checks")
{
	Corpus c(31);
	for (int i = 0; i < 60; ++i) {
		NevFun q = c.nevanlinna(3);
		if (q.is_zero())
			continue;
		Rational a = c.small_rational(3, 2), b = c.small_rational(3, 2);
		if (a == b)
			continue;
		if (b < a)
			std::swap(a, b);
		RatFun Q = q.to_ratfun();
		RatFun za = z - a, zb = z - b;
		ProductPredicates p = corollary_products(q, a, b);
		CAPTURE(Q.to_string());
		CAPTURE(a);
		CAPTURE(b);
		CHECK(p.c_over_d == herglotz_check(za / zb * Q).ok);
		CHECK(p.d_over_c == herglotz_check(zb / za * Q).ok);
		CHECK(p.c_over_dm == herglotz_check(za / (b - z) * Q).ok);
		CHECK(p.d_over_cm == herglotz_check(zb / (a - z) * Q).ok);
		CHECK(p.times_c == herglotz_check(za * Q).ok);
		CHECK(p.over_c == herglotz_check(Q / za).ok);
	}
}
