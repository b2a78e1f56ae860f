#include "nevkit/corpus.hpp"
#include "nevkit/errors.hpp"
#include "nevkit/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace nevkit;

namespace {

struct Options {
	std::string verb;
	std::string in, r, out, xi, interval, dump_samples;
	std::uint64_t seed = 1;
	double tol = -1;
	bool json = false;
	std::size_t points = 40;
	int trials = 5;
	double eps_min = 1e-7;
	int eps_levels = 6;
};

// Raised for results that are valid but negative (exit code 2).
struct Negative {
	Json report;
};

Json read_doc(const std::string& path, const char* flag)
{
	if (path.empty())
		throw ParseError(std::string("missing ") + flag + " FILE");
	std::ifstream f(path);
	if (!f)
		throw ParseError("cannot open " + path);
	std::stringstream ss;
	ss << f.rdbuf();
	return parse_json(ss.str());
}

GenNevFun as_gen(const Json& j)
{
	switch (detect_kind(j)) {
	case DocKind::gen_nevfun:
		return gen_from_json(j);
	case DocKind::nevfun:
		return GenNevFun::nevanlinna(nevfun_from_json(j));
	case DocKind::ratfun:
		return canonical_of(ratfun_from_json(j));
	case DocKind::model:
		break;
	}
	throw SchemaMismatch("expected a function, got a model");
}

NevFun as_nev(const Json& j)
{
	switch (detect_kind(j)) {
	case DocKind::nevfun:
		return nevfun_from_json(j);
	case DocKind::ratfun: {
		auto q = to_nevfun(ratfun_from_json(j));
		if (!q)
			throw SchemaMismatch("input is not a Nevanlinna function");
		return *q;
	}
	case DocKind::gen_nevfun: {
		GenNevFun g = gen_from_json(j);
		if (!(g.phi() == RatFun(1)))
			throw SchemaMismatch("input has a nontrivial phi; a Nevanlinna function is required");
		return g.q0();
	}
	case DocKind::model:
		break;
	}
	throw SchemaMismatch("expected a Nevanlinna function, got a model");
}

RatFun as_ratfun(const Json& j)
{
	switch (detect_kind(j)) {
	case DocKind::ratfun:
		return ratfun_from_json(j);
	case DocKind::nevfun:
		return nevfun_from_json(j).to_ratfun();
	case DocKind::gen_nevfun:
		return gen_from_json(j).product();
	case DocKind::model:
		break;
	}
	throw SchemaMismatch("expected a function, got a model");
}

Json run_factor(const Options& o)
{
	Json j = read_doc(o.in, "--in");
	Json out;
	if (detect_kind(j) == DocKind::ratfun) {
		RatFun r = ratfun_from_json(j);
		out["input"] = to_json(r);
		if (!r.is_constant())
			out["canonical_rational"] = to_json(canonical_rational(r));
		out["canonical"] = to_json(canonical_of(r));
		Balance b = balance(r);
		out["balance"] = {{"zeros", b.zeros}, {"poles", b.poles}};
	} else {
		GenNevFun g = as_gen(j);
		out["input"] = to_json(g.product());
		out["canonical"] = to_json(canonical_of(g.product()));
	}
	return out;
}

Json run_classify(const Options& o)
{
	GenNevFun g = as_gen(read_doc(o.in, "--in"));
	RatFun r = as_ratfun(read_doc(o.r, "--r"));
	ClassReport rep = membership(g, r);
	Json out = to_json(rep);
	Json cands = Json::array();
	for (const auto& c : candidate_points(g, r))
		cands.push_back(to_json(c));
	out["candidate_points"] = cands;
	if (g.phi() == RatFun(1) && !g.is_zero()) {
		N00Report n00 = check_N00(g.q0(), r);
		out["n00"] = to_json(n00);
	}
	if (!rep.member)
		throw Negative{out};
	return out;
}

Json run_product(const Options& o)
{
	GenNevFun g = as_gen(read_doc(o.in, "--in"));
	RatFun r = as_ratfun(read_doc(o.r, "--r"));
	GenNevFun w = product_factorization(g, r);
	return {{"witness", to_json(w)}, {"kappa", g.kappa()}, {"kappa_tilde", w.kappa()}};
}

Json run_chain(const Options& o)
{
	NevFun q = as_nev(read_doc(o.in, "--in"));
	RatFun r = as_ratfun(read_doc(o.r, "--r"));
	try {
		return to_json(chain_factorize(q, r));
	} catch (const NotInClass& e) {
		throw Negative{{{"member", false}, {"reason", e.what()}, {"n00", to_json(check_N00(q, r))}}};
	}
}

Json run_realize(const Options& o)
{
	NevFun q = as_nev(read_doc(o.in, "--in"));
	if (o.r.empty()) {
		if (o.xi.empty())
			throw ParseError("realize needs --r FILE or --xi VAL");
		try {
			return {{"model", to_json(minimal_model(q, parse_ext_real(o.xi)))}};
		} catch (const NotKacMember& e) {
			throw Negative{{{"member", false}, {"reason", e.what()}}};
		}
	}
	RatFun r = as_ratfun(read_doc(o.r, "--r"));
	std::vector<ExtReal> zeros, poles;
	enumerate_points(r, zeros, poles);
	if (poles.empty())
		throw Negative{{{"member", false}, {"reason", "r has no poles"}}};
	try {
		L2Model in = minimal_model(q, poles.front());
		RealizationTransformReport rep = transform_model(in, r, q);
		Json out = {{"model_in", to_json(in)}, {"report", to_json(rep)}, {"model_out", to_json(rep.model_out)}};
		out["spectral_check"] = model_spectral_check(in, rep.model_out, r);
		Json zeta = Json::object();
		for (const auto& z : rep.zetas)
			zeta[to_string(z.pole)] = to_json(z.value);
		out["zeta"] = zeta;
		return out;
	} catch (const NotInN00& e) {
		throw Negative{{{"member", false}, {"reason", e.what()}}};
	} catch (const NotKacMember& e) {
		throw Negative{{{"member", false}, {"reason", e.what()}}};
	}
}

Json run_kappa(const Options& o)
{
	RatFun f = as_ratfun(read_doc(o.in, "--in"));
	NegativeSquaresConfig cfg;
	cfg.points = o.points;
	cfg.trials = o.trials;
	cfg.seed = o.seed;
	if (o.tol > 0)
		cfg.tol = o.tol;
	Evaluator ev = evaluator_of(f);
	NegativeSquaresReport rep = negative_squares_report(ev, cfg);
	Json out = {{"oracle", to_json(rep, cfg)}, {"function", to_json(f)}};
	try {
		out["symbolic_kappa"] = canonical_of(f).kappa();
	} catch (const IrrationalRoot& e) {
		out["symbolic_kappa"] = nullptr;
		out["symbolic_note"] = e.what();
	}
	if (!o.dump_samples.empty()) {
		std::ofstream csv(o.dump_samples);
		csv.precision(17);
		csv << "trial,re_z,im_z,re_f,im_f\n";
		for (int t = 0; t < cfg.trials; ++t)
			for (auto z : sample_points(cfg.points, cfg.seed * 1000003ULL + static_cast<std::uint64_t>(t))) {
				std::complex<double> v;
				try {
					v = ev(z);
				} catch (const PoleHit&) {
					continue;
				}
				csv << t << ',' << z.real() << ',' << z.imag() << ',' << v.real() << ',' << v.imag() << '\n';
			}
	}
	return out;
}

Json run_invert(const Options& o)
{
	RatFun f = as_ratfun(read_doc(o.in, "--in"));
	InversionConfig cfg;
	if (o.interval.empty())
		throw ParseError("invert needs --interval c,d");
	auto comma = o.interval.find(',');
	if (comma == std::string::npos)
		throw ParseError("--interval must look like c,d");
	cfg.c = parse_rational(o.interval.substr(0, comma)).get_d();
	cfg.d = parse_rational(o.interval.substr(comma + 1)).get_d();
	cfg.eps_min = o.eps_min;
	cfg.eps_levels = o.eps_levels;
	if (o.tol > 0)
		cfg.tol = o.tol;
	Json out = to_json(stieltjes_invert(evaluator_of(f), cfg), cfg);
	if (auto q = to_nevfun(f)) {
		Rational exact = 0;
		for (const auto& a : q->sigma.atoms()) {
			double t = a.t.get_d();
			if (t > cfg.c && t < cfg.d)
				exact += a.w;
			else if (t == cfg.c || t == cfg.d)
				exact += a.w / 2;
		}
		out["exact"] = to_json(exact);
	}
	return out;
}

// Invariant suite over a small deterministic corpus.
int run_selftest(std::ostream& log)
{
	int failed = 0;
	auto check = [&](const std::string& name, const std::function<bool()>& body) {
		bool ok = false;
		std::string why;
		try {
			ok = body();
		} catch (const std::exception& e) {
			why = e.what();
		}
		log << (ok ? "ok   " : "FAIL ") << name << (why.empty() ? "" : "  (" + why + ")") << '\n';
		if (!ok)
			++failed;
	};

	const RatFun z = Poly::identity();
	const RatFun q_ex = RatFun::mobius(1, -1, -1, 2);
	const RatFun r_ex = RatFun::reduce(Poly::linear_root(2).pow(2) * Poly::identity(),
	                                   Poly::linear_root(1).pow(2) * Poly::linear_root(3));

	check("canonical product identity", [&] {
		for (const auto& f : rational_root_corpus(40, 11, 6)) {
			GenNevFun g = canonical_of(f);
			if (!(g.product() == f) || g.kappa() != canonical_rational(f).kappa)
				return false;
		}
		return true;
	});
	check("gznt/gpnt balance", [&] {
		for (const auto& f : rational_root_corpus(40, 12, 6)) {
			Balance b = balance(f);
			if (b.zeros != b.poles)
				return false;
		}
		return true;
	});
	check("oracle agrees with canonical kappa", [&] {
		for (const auto& f : rational_root_corpus(15, 13, 5))
			if (negative_squares(evaluator_of(f), 40, 5, 1) != canonical_of(f).kappa())
				return false;
		return true;
	});
	check("witness identity", [&] {
		for (const auto& [q, r] : class_pair_corpus(15, 14)) {
			GenNevFun w = product_factorization(GenNevFun::nevanlinna(q), r);
			CRational pt(Rational(1, 3), Rational(7, 5));
			if (!(evaluate_gen(w, pt) == r(pt) * evaluate(q, pt)))
				return false;
		}
		return true;
	});
	check("sprod disjointness", [&] {
		for (const auto& s : interlacing_corpus(20, 15)) {
			auto fs = sprod_factorize(s);
			RatFun prod(1);
			for (const auto& f : fs)
				prod = prod * f;
			if (!(prod == s) || !negative_sets_disjoint(fs))
				return false;
		}
		return true;
	});
	check("worked chain certifies", [&] {
		return chain_factorize(require_nevfun(q_ex), r_ex).factors.size() == 3;
	});
	check("reordered chain fails", [&] {
		std::vector<RatFun> bad = {z / (z - RatFun(3)), (z - RatFun(2)) / (z - RatFun(1)),
		                           (z - RatFun(2)) / (z - RatFun(1))};
		return first_failing_partial(require_nevfun(q_ex), bad).has_value();
	});
	check("worked realization", [&] {
		NevFun q = require_nevfun(q_ex);
		L2Model in = minimal_model(q, Rational(1));
		auto rep = transform_model(in, r_ex, q);
		return model_spectral_check(in, rep.model_out, r_ex) &&
		       model_weyl(rep.model_out, CRational(0, 1)) == r_ex(CRational(0, 1)) * evaluate(q, CRational(0, 1));
	});
	check("json round trip", [&] {
		for (const auto& f : rational_root_corpus(10, 16, 6)) {
			GenNevFun g = canonical_of(f);
			Json j = to_json(g);
			if (dump(to_json(gen_from_json(parse_json(dump(j))))) != dump(j))
				return false;
		}
		return true;
	});
	log << (failed == 0 ? "selftest passed\n" : "selftest failed: " + std::to_string(failed) + "\n");
	return failed == 0 ? 0 : 1;
}

void emit(const Options& o, const Json& out)
{
	std::string text = dump(out);
	if (!o.out.empty()) {
		std::ofstream f(o.out);
		if (!f)
			throw ParseError("cannot write " + o.out);
		f << text;
	}
	if (o.json || o.out.empty())
		std::cout << text;
}

} // namespace

int main(int argc, char** argv)
{
	CLI::App app{"nevkit: generalized Nevanlinna functions times rational functions"};
	Options o;
	app.add_option("verb", o.verb, "factor|classify|product|chain|realize|kappa|invert|selftest")
	    ->required()
	    ->check(CLI::IsMember({"factor", "classify", "product", "chain", "realize", "kappa", "invert", "selftest"}));
	app.add_option("--in", o.in, "input function (JSON)");
	app.add_option("--r", o.r, "rational multiplier (JSON)");
	app.add_option("--out", o.out, "write the JSON report here");
	app.add_option("--xi", o.xi, "anchor point for realize without --r (rational or inf)");
	app.add_option("--seed", o.seed, "oracle seed");
	app.add_option("--tol", o.tol, "oracle tolerance");
	app.add_flag("--json", o.json, "print the JSON report to stdout as well");
	app.add_option("--points", o.points, "kernel sample points per trial");
	app.add_option("--trials", o.trials, "kernel trials");
	app.add_option("--eps-min", o.eps_min, "smallest inversion epsilon");
	app.add_option("--eps-levels", o.eps_levels, "number of epsilon levels");
	app.add_option("--interval", o.interval, "inversion interval c,d");
	app.add_option("--dump-samples", o.dump_samples, "CSV file of kernel samples (kappa)");

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		int code = app.exit(e);
		return code == 0 ? 0 : 1;
	}

	try {
		if (o.verb == "selftest")
			return run_selftest(std::cout);
		Json out;
		if (o.verb == "factor")
			out = run_factor(o);
		else if (o.verb == "classify")
			out = run_classify(o);
		else if (o.verb == "product")
			out = run_product(o);
		else if (o.verb == "chain")
			out = run_chain(o);
		else if (o.verb == "realize")
			out = run_realize(o);
		else if (o.verb == "kappa")
			out = run_kappa(o);
		else
			out = run_invert(o);
		emit(o, out);
		return 0;
	} catch (const Negative& n) {
		emit(o, n.report);
		return 2;
	} catch (const std::exception& e) {
		std::cerr << "nevkit: " << e.what() << '\n';
		return 1;
	}
}
