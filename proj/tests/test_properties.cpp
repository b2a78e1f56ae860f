#include "common.hpp"

using namespace test;

TEST_CASE("canonical factorization invariants")
{
	for (const auto& f : rational_root_corpus(80, 111, 8)) {
		CAPTURE(f.to_string());
		auto c = canonical_rational(f);
		CHECK(c.psi * c.s0 == f);
		CHECK(herglotz_check(c.s0).ok);
		for (const auto& p : c.s0.real_points())
			CHECK(p.mult() == 1);
		// psi is nonnegative on the line: every real point has even order.
		for (const auto& p : c.psi.real_points())
			CHECK(p.mult() % 2 == 0);
		CHECK(c.psi.gamma() > 0);
		CHECK(c.psi.order_at_infinity() % 2 == 0);
	}
}

TEST_CASE("kappa is invariant under f -> -1/f and Nevanlinna substitutions")
{
	RatFun tau = (z - 1) / (2 - z);
	for (const auto& f : rational_root_corpus(60, 112, 6)) {
		CAPTURE(f.to_string());
		int k = canonical_of(f).kappa();
		CHECK(canonical_of(-1 / f).kappa() == k);
		CHECK(compose_gen(canonical_of(f), tau).kappa() == k);
		CHECK(canonical_of(2 * f).kappa() == k);
	}
}

TEST_CASE("kappa equals the record totals")
{
	for (const auto& f : rational_root_corpus(60, 113, 7)) {
		int zeros = 0, poles = 0;
		for (const auto& rec : gznt_gpnt(f))
			(rec.kind == MultiplicityRecord::Kind::gznt ? zeros : poles) += rec.mult;
		CAPTURE(f.to_string());
		CHECK(zeros == poles);
		CHECK(canonical_of(f).kappa() == zeros);
	}
}

TEST_CASE("products with Nevanlinna functions stay canonical")
{
	for (const auto& [q, r] : class_pair_corpus(60, 115)) {
		CAPTURE(q.to_ratfun().to_string());
		CAPTURE(r.to_string());
		auto rep = membership(GenNevFun::nevanlinna(q), r);
		CHECK(rep.member);
		REQUIRE(rep.witness.has_value());
		CHECK(rep.witness->product() == r * q.to_ratfun());
		CHECK(rep.kappa_tilde == rep.witness->kappa());
		CHECK(herglotz_check(rep.witness->q0_ratfun()).ok);
	}
}

TEST_CASE("class members factor through Nevanlinna partials")
{
	for (const auto& [q, r] : n00_corpus(50, 117)) {
		CAPTURE(q.to_ratfun().to_string());
		CAPTURE(r.to_string());
		REQUIRE(check_N00(q, r).ok);
		NevFun rq = require_nevfun(r * q.to_ratfun());
		FactorChain ch = chain_factorize(q, r);
		REQUIRE_FALSE(ch.partial_certificates.empty());
		CHECK(ch.partial_certificates.back() == rq);
		CHECK(kac_closure(q, r).all());

		std::vector<ExtReal> zeros, poles;
		enumerate_points(r, zeros, poles);
		CHECK(zeros.size() == poles.size());
		auto rep = transform_model(minimal_model(q, poles.front()), r, q);
		CHECK(model_function(rep.model_out) == rq);
		for (const auto& zeta : rep.zetas)
			CHECK(limit_at(rq, zeta.pole, LimitMode::residue) == Limit::finite(zeta.value));
	}
}

TEST_CASE("interlacing products have pairwise disjoint negative arcs")
{
	for (const auto& s : interlacing_corpus(60, 118)) {
		auto fs = sprod_factorize(s);
		for (std::size_t i = 0; i < fs.size(); ++i)
			for (std::size_t j = i + 1; j < fs.size(); ++j) {
				auto a = negative_arc(fs[i]), b = negative_arc(fs[j]);
				if (a && b)
					CHECK(arcs_disjoint(*a, *b));
			}
	}
}
