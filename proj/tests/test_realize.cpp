#include "common.hpp"

using namespace test;

namespace {

std::vector<std::string> strings(const std::vector<ExtReal>& xs)
{
	std::vector<std::string> out;
	for (const auto& x : xs)
		out.push_back(to_string(x));
	return out;
}

using Strings = std::vector<std::string>;

} // namespace

TEST_CASE("minimal models at a finite point")
{
	NevFun q = require_nevfun(worked_q());
	L2Model m = minimal_model(q, Rational(0));
	CHECK(m.beta == 0);
	CHECK(m.sigma == q.sigma);
	REQUIRE(m.omega.size() == 1);
	CHECK(m.omega[0] == OmegaEntry{2, q_(1, 4)});
	CHECK(m.eta == q_(-1, 2));
	CHECK(model_function(m) == q);

	L2Model at1 = minimal_model(q, Rational(1));
	CHECK(at1.omega[0] == OmegaEntry{2, 1});
	CHECK(at1.eta == 0);
	CHECK(model_function(at1) == q);
	CHECK_THROWS_AS(minimal_model(q, Rational(2)), NotKacMember);
}

TEST_CASE("minimal model at infinity")
{
	NevFun q = require_nevfun(worked_q());
	L2Model m = minimal_model(q, ExtReal::infinity());
	CHECK(model_function(m) == q);
	CHECK_THROWS_AS(minimal_model(require_nevfun(z), ExtReal::infinity()), NotKacMember);
}

TEST_CASE("model Weyl functions reproduce q")
{
	Corpus c(71);
	auto pts = upper_points(10, 72);
	for (int i = 0; i < 30; ++i) {
		NevFun q = c.nevanlinna(4);
		for (const auto& p : q.to_ratfun().real_points()) {
			ExtReal xi(p.root.value());
			if (!kac_membership(q, xi))
				continue;
			L2Model m = minimal_model(q, xi);
			for (const auto& w : pts)
				CHECK(model_weyl(m, w) == evaluate(q, w));
		}
	}
}

TEST_CASE("point enumeration order")
{
	std::vector<ExtReal> zeros, poles;
	enumerate_points(worked_r(), zeros, poles);
	CHECK(strings(zeros) == Strings{"2", "2", "0"});
	CHECK(strings(poles) == Strings{"1", "1", "3"});

	enumerate_points(z, zeros, poles);
	CHECK(strings(zeros) == Strings{"0"});
	CHECK(strings(poles) == Strings{"inf"});
}

TEST_CASE("worked realization")
{
	NevFun q = require_nevfun(worked_q());
	L2Model in = minimal_model(q, Rational(1));
	auto rep = transform_model(in, worked_r(), q);
	REQUIRE(rep.zetas.size() == 2);
	CHECK(rep.zetas[0].pole == ExtReal(Rational(1)));
	CHECK(rep.zetas[0].value == q_(1, 2));
	CHECK(rep.zetas[1].pole == ExtReal(Rational(3)));
	CHECK(rep.zetas[1].value == q_(3, 2));
	for (const auto& zeta : rep.zetas)
		CHECK(zeta.value == zeta.from_residue);
	CHECK(model_function(rep.model_out) == require_nevfun(worked_r() * worked_q()));
	CHECK(model_spectral_check(in, rep.model_out, worked_r()));
	for (const auto& w : upper_points(20, 73))
		CHECK(model_weyl(rep.model_out, w) == worked_r()(w) * evaluate(q, w));
}

TEST_CASE("transform rejects bad input")
{
	NevFun q = require_nevfun(worked_q());
	L2Model wrong = minimal_model(q, Rational(0));
	CHECK_THROWS_AS(transform_model(wrong, worked_r(), q), InvalidArgument);
	NevFun p = require_nevfun(1 / (-1 - z));
	CHECK_THROWS_AS(transform_model(minimal_model(p, ExtReal::infinity()), z, p), NotInN00);
}

TEST_CASE("generated realizations")
{
	auto pts = upper_points(15, 74);
	for (const auto& [q, r] : n00_corpus(30, 75)) {
		CAPTURE(q.to_ratfun().to_string());
		CAPTURE(r.to_string());
		std::vector<ExtReal> zeros, poles;
		enumerate_points(r, zeros, poles);
		L2Model in = minimal_model(q, poles.front());
		auto rep = transform_model(in, r, q);
		for (const auto& w : pts)
			CHECK(model_weyl(rep.model_out, w) == r(w) * evaluate(q, w));
		CHECK(model_spectral_check(in, rep.model_out, r));
	}
}
