#include "common.hpp"

using namespace test;

namespace {

GenNevFun nev(const RatFun& f) { return GenNevFun::nevanlinna(require_nevfun(f)); }

std::vector<std::string> strings(const std::vector<ExtReal>& xs)
{
	std::vector<std::string> out;
	for (const auto& x : xs)
		out.push_back(to_string(x));
	return out;
}

using Strings = std::vector<std::string>;

} // namespace

TEST_CASE("membership reports")
{
	auto a = membership(nev(-1 / z), z);
	CHECK(a.member);
	CHECK(a.kappa == 0);
	CHECK(a.kappa_tilde == 0);
	REQUIRE(a.witness.has_value());
	CHECK(a.witness->product() == RatFun(-1));
	CHECK(a.exceptional_poles.empty());

	auto b = membership(nev(1 / (-1 - z)), z);
	CHECK(b.member);
	CHECK(b.kappa_tilde == 1);
	CHECK(strings(b.exceptional_poles) == Strings{"-1"});

	auto c = membership(nev(z), z);
	CHECK(c.member);
	CHECK(c.kappa_tilde == 1);
	CHECK(c.witness->product() == z * z);
}

TEST_CASE("product factorization examples")
{
	GenNevFun w = product_factorization(nev(1 / (-1 - z)), z);
	CHECK(w.phi() == z * z / ((z + 1) * (z + 1)));
	CHECK(w.q0_ratfun() == -(z + 1) / z);
	CHECK(w.kappa() == 1);

	GenNevFun v = product_factorization(nev(-1 / z), z);
	CHECK(v.phi() == RatFun(1));
	CHECK(v.q0_ratfun() == RatFun(-1));

	GenNevFun u = product_factorization(nev(worked_q()), worked_r());
	CHECK(u.phi() == RatFun(1));
	CHECK(u.q0_ratfun() == -z * (z - 2) / ((z - 1) * (z - 3)));
	CHECK(u.kappa() == 0);
}

TEST_CASE("product factorization starting from a generalized function")
{
	GenNevFun g = canonical_of((z - 1) / (z - 2)); // kappa 1
	GenNevFun w = product_factorization(g, (z - 2) / (z - 1));
	CHECK(w.product() == RatFun(1));
	CHECK(w.kappa() == 0);
	GenNevFun v = product_factorization(g, RatFun(-1));
	CHECK(v.product() == -(z - 1) / (z - 2));
}

TEST_CASE("single degree-one steps")
{
	NevFun q = require_nevfun(1 / (-1 - z));
	StepResult st = single_factor_step(z, q);
	CHECK(st.psi == z * z / ((z + 1) * (z + 1)));
	CHECK(st.q1.to_ratfun() == -(z + 1) / z);
	CHECK_THROWS_AS(single_factor_step(z * z, q), DegreeNotOne);
	StepResult neg = single_factor_step(RatFun(-2), require_nevfun(-1 / z));
	CHECK(neg.psi * neg.q1.to_ratfun() == 2 / z);
}

TEST_CASE("witness identity on generated pairs")
{
	auto pts = upper_points(20, 51);
	for (const auto& [q, r] : class_pair_corpus(25, 52)) {
		GenNevFun w = product_factorization(GenNevFun::nevanlinna(q), r);
		CAPTURE(r.to_string());
		for (const auto& p : pts)
			CHECK(evaluate_gen(w, p) == r(p) * evaluate(q, p));
		CHECK(herglotz_check(w.q0_ratfun()).ok);
		CHECK(canonical_of(w.product()) == w);
	}
}

TEST_CASE("class conditions on the worked pair")
{
	N00Report rep = check_N00(require_nevfun(worked_q()), worked_r());
	CHECK(rep.ok);
	CHECK(rep.failures.empty());
	CHECK_FALSE(rep.forms.has_value()); // r has double points

	CHECK(check_N00(require_nevfun(-1 / z), z).ok);

	N00Report bad = check_N00(require_nevfun(1 / (-1 - z)), z);
	CHECK_FALSE(bad.ok);
	REQUIRE(bad.forms.has_value());
	CHECK_FALSE(bad.forms->direct);
	CHECK(bad.forms->agree());

	N00Report high = check_N00(require_nevfun(-1 / z), z * z * z);
	CHECK_FALSE(high.ok);
}

TEST_CASE("the four simple-r forms agree")
{
	for (const auto& [q, r] : simple_r_corpus(40, 53)) {
		N00Report rep = check_N00(q, r);
		REQUIRE(rep.forms.has_value());
		CAPTURE(q.to_ratfun().to_string());
		CAPTURE(r.to_string());
		CHECK(rep.forms->agree());
		CHECK(rep.forms->direct == rep.ok);
	}
}

TEST_CASE("interlacing factorizations")
{
	RatFun s = (z - 1) * (z - 3) / ((z - 2) * (z - 4));
	auto fs = sprod_factorize(s);
	CHECK(fs == std::vector<RatFun>{(z - 1) / (z - 2), (z - 3) / (z - 4)});
	CHECK(negative_sets_disjoint(fs));

	auto gs = sprod_factorize(-s);
	CHECK(gs == std::vector<RatFun>{-(z - 1) / (z - 4), (z - 3) / (z - 2)});
	CHECK(negative_sets_disjoint(gs));

	CHECK(sprod_factorize((z - 1) / (z - 2)) == std::vector<RatFun>{(z - 1) / (z - 2)});
	CHECK_THROWS_AS(sprod_factorize((z - 1) * (z - 2) / (z - 3)), NotInterlacing);
	CHECK_THROWS_AS(sprod_factorize((z - 1) * (z - 1) / (z - 3)), NotInterlacing);
	CHECK_THROWS_AS(sprod_factorize(RatFun(2)), ConstantInput);
}

TEST_CASE("interlacing corpus")
{
	for (const auto& s : interlacing_corpus(60, 54)) {
		auto fs = sprod_factorize(s);
		RatFun prod(1);
		for (const auto& f : fs) {
			CHECK(f.degree() == 1);
			prod = prod * f;
		}
		CHECK(prod == s);
		CHECK(negative_sets_disjoint(fs));
	}
}

TEST_CASE("negative arcs")
{
	auto a = negative_arc((z - 1) / (z - 2));
	REQUIRE(a.has_value());
	CHECK(a->to_string() == "[1 -> 2]");
	CHECK(negative_arc((z - 2) / (z - 1))->to_string() == "[1 -> 2]");
	auto b = negative_arc((2 - z) / (z - 1));
	REQUIRE(b.has_value());
	CHECK(b->to_string() == "[2 -> 1]"); // through infinity
	CHECK(b->contains(ExtReal::infinity()));
	CHECK_FALSE(b->contains(ExtReal(q_(3, 2))));
	CHECK(arcs_disjoint(*negative_arc((z - 1) / (z - 2)), *negative_arc((z - 3) / (z - 4))));
	CHECK_FALSE(arcs_disjoint(*a, *negative_arc((z - 2) / (z - 3)))); // share the closed end 2
	CHECK(negative_arc(-z)->to_string() == "[0 -> inf]");
	CHECK_FALSE(negative_arc(RatFun(3)).has_value());
	CHECK(negative_arc(RatFun(-3))->full);
}

TEST_CASE("candidate points")
{
	CHECK(strings(candidate_points(nev(1 / (-1 - z)), z)) == Strings{"-1", "0", "inf"});
	CHECK(strings(candidate_points(nev(-1 / z), z)) == Strings{"0", "inf"});
	CHECK(strings(candidate_points(nev(worked_q()), worked_r())) == Strings{"0", "1", "2", "3", "inf"});
}

TEST_CASE("candidates cover the points of the product")
{
	for (const auto& [q, r] : class_pair_corpus(25, 55)) {
		GenNevFun g = GenNevFun::nevanlinna(q);
		auto cands = candidate_points(g, r);
		for (const auto& rec : gznt_gpnt(product_factorization(g, r))) {
			CAPTURE(rec.point_string());
			CHECK(std::find(cands.begin(), cands.end(), rec.point) != cands.end());
		}
	}
}

TEST_CASE("Kac closure")
{
	KacClosure a = kac_closure(require_nevfun(-1 / z), z);
	REQUIRE(a.poles.size() == 1);
	CHECK(a.poles[0].point.is_infinite());
	CHECK(a.all());

	KacClosure b = kac_closure(require_nevfun(worked_q()), worked_r());
	CHECK(strings({b.poles[0].point, b.poles[1].point}) == Strings{"1", "3"});
	CHECK(strings({b.zeros[0].point, b.zeros[1].point}) == Strings{"0", "2"});
	CHECK(b.all());
	CHECK_THROWS_AS(kac_closure(require_nevfun(1 / (-1 - z)), z), NotInN00);
}
