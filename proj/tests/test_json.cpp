#include "common.hpp"

using namespace test;

TEST_CASE("rational functions serialize with their points")
{
	Json j = to_json(worked_q());
	CHECK(j["num"] == Json::array({"1", "-1"}));
	CHECK(j["den"] == Json::array({"-2", "1"}));
	CHECK(j["zeros"][0]["point"] == "1");
	CHECK(j["poles"][0]["order_parity"] == "odd");
	CHECK(ratfun_from_json(j) == worked_q());

	Json inf = to_json(z * z * z);
	CHECK(inf["poles"][0]["point"] == "inf");
	CHECK(inf["poles"][0]["mult"] == 3);
}

TEST_CASE("byte-stable output")
{
	CHECK(to_json(canonical_of(z * z * z)).dump() ==
	      R"({"kappa":1,"phi":{"den":["1"],"nonreal_poles":0,"nonreal_zeros":0,"num":["0","0","1"],)"
	      R"("poles":[{"mult":2,"order_parity":"even","point":"inf"}],)"
	      R"("zeros":[{"mult":2,"order_parity":"even","point":"0"}]},)"
	      R"("q0":{"alpha":"0","atoms":[],"beta":"1"},)"
	      R"("records":[{"kind":"gznt","mult":1,"point":"0"},{"kind":"gpnt","mult":1,"point":"inf"}]})");
	CHECK(dump(to_json(require_nevfun(worked_q()))) ==
	      "{\n  \"alpha\": \"-3/5\",\n  \"atoms\": [\n    {\n      \"t\": \"2\",\n      \"w\": \"1\"\n    }\n  ],\n"
	      "  \"beta\": \"0\"\n}\n");
}

TEST_CASE("round trips")
{
	for (const auto& f : rational_root_corpus(20, 91, 5)) {
		CHECK(ratfun_from_json(parse_json(dump(to_json(f)))) == f);
		GenNevFun g = canonical_of(f);
		CHECK(gen_from_json(parse_json(dump(to_json(g)))) == g);
	}
	Corpus c(92);
	for (int i = 0; i < 20; ++i) {
		NevFun q = c.nevanlinna(4);
		CHECK(nevfun_from_json(parse_json(dump(to_json(q)))) == q);
	}
	L2Model m = minimal_model(require_nevfun(worked_q()), Rational(0));
	CHECK(model_from_json(parse_json(dump(to_json(m)))) == m);
}

TEST_CASE("document kinds")
{
	CHECK(detect_kind(to_json(worked_q())) == DocKind::ratfun);
	CHECK(detect_kind(to_json(require_nevfun(worked_q()))) == DocKind::nevfun);
	CHECK(detect_kind(to_json(canonical_of(z))) == DocKind::gen_nevfun);
	CHECK(detect_kind(to_json(minimal_model(require_nevfun(worked_q()), Rational(0)))) == DocKind::model);
}

TEST_CASE("malformed input")
{
	CHECK_THROWS_AS(parse_json("{not json"), ParseError);
	CHECK_THROWS_AS(rational_from_json(Json(1.5)), ParseError);
	CHECK(rational_from_json(Json(3)) == 3);
	CHECK(rational_from_json(Json("-2/4")) == q_(-1, 2));
	CHECK_THROWS_AS(detect_kind(Json::object({{"foo", 1}})), SchemaMismatch);

	Json g = to_json(canonical_of(z * z * z));
	g["kappa"] = 5;
	CHECK_THROWS_AS(gen_from_json(g), SchemaMismatch);
}
