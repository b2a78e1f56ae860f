#include "nevkit/json_io.hpp"

#include "nevkit/errors.hpp"

namespace nevkit {

namespace {

const Json& field(const Json& j, const char* key)
{
	if (!j.is_object())
		throw SchemaMismatch(std::string("expected an object with field \"") + key + "\"");
	auto it = j.find(key);
	if (it == j.end())
		throw SchemaMismatch(std::string("missing field \"") + key + "\"");
	return *it;
}

const Json& array_field(const Json& j, const char* key)
{
	const Json& a = field(j, key);
	if (!a.is_array())
		throw SchemaMismatch(std::string("field \"") + key + "\" must be an array");
	return a;
}

Json points_json(const RatFun& r, bool poles)
{
	Json list = Json::array();
	for (const auto& p : r.real_points()) {
		if (p.pole != poles)
			continue;
		list.push_back({{"point", p.root.exact() ? to_string(p.root.lo) : p.root.to_string()},
		                {"mult", p.mult()},
		                {"order_parity", p.odd() ? "odd" : "even"}});
	}
	int k = r.order_at_infinity();
	if (k != 0 && (k < 0) == poles)
		list.push_back({{"point", "inf"}, {"mult", std::abs(k)}, {"order_parity", k % 2 ? "odd" : "even"}});
	return list;
}

Json atoms_json(const AtomicMeasure& m)
{
	Json list = Json::array();
	for (const auto& a : m.atoms())
		list.push_back({{"t", to_json(a.t)}, {"w", to_json(a.w)}});
	return list;
}

AtomicMeasure atoms_from_json(const Json& list)
{
	if (!list.is_array())
		throw SchemaMismatch("atoms must be an array");
	std::vector<Atom> atoms;
	for (const auto& a : list)
		atoms.push_back({rational_from_json(field(a, "t")), rational_from_json(field(a, "w"))});
	try {
		return AtomicMeasure(std::move(atoms));
	} catch (const InvalidArgument& e) {
		throw SchemaMismatch(e.what());
	}
}

Json ext_list(const std::vector<ExtReal>& xs)
{
	Json list = Json::array();
	for (const auto& x : xs)
		list.push_back(to_json(x));
	return list;
}

} // namespace

Json to_json(const Rational& x) { return to_string(x); }

Json to_json(const ExtReal& x) { return to_string(x); }

Json to_json(const Limit& l) { return to_string(l); }

Json to_json(const Poly& p)
{
	Json list = Json::array();
	for (const auto& c : p.coeffs())
		list.push_back(to_json(c));
	if (list.empty())
		list.push_back("0");
	return list;
}

Json to_json(const RatFun& r)
{
	return {{"num", to_json(r.num())},
	        {"den", to_json(r.den())},
	        {"zeros", points_json(r, false)},
	        {"poles", points_json(r, true)},
	        {"nonreal_zeros", r.zeros().nonreal_count()},
	        {"nonreal_poles", r.poles().nonreal_count()}};
}

Json to_json(const NevFun& q)
{
	return {{"alpha", to_json(q.alpha)}, {"beta", to_json(q.beta)}, {"atoms", atoms_json(q.sigma)}};
}

Json to_json(const MultiplicityRecord& rec)
{
	return {{"point", rec.point_string()},
	        {"kind", rec.kind == MultiplicityRecord::Kind::gznt ? "gznt" : "gpnt"},
	        {"mult", rec.mult}};
}

Json to_json(const GenNevFun& g)
{
	Json records = Json::array();
	for (const auto& rec : gznt_gpnt(g))
		records.push_back(to_json(rec));
	return {{"phi", to_json(g.phi())}, {"q0", to_json(g.q0())}, {"kappa", g.kappa()}, {"records", records}};
}

Json to_json(const L2Model& m)
{
	Json omega = Json::array();
	for (const auto& e : m.omega)
		omega.push_back({{"t", to_json(e.t)}, {"value_sq", to_json(e.value_sq)}});
	return {{"beta", to_json(m.beta)},
	        {"sigma", atoms_json(m.sigma)},
	        {"xi", to_json(m.xi)},
	        {"eta", to_json(m.eta)},
	        {"omega", omega},
	        {"omega_inf_sq", to_json(m.omega_inf_sq)}};
}

Json to_json(const CanonicalRational& c)
{
	Json records = Json::array();
	for (const auto& rec : c.records)
		records.push_back(to_json(rec));
	return {{"psi", to_json(c.psi)}, {"s0", to_json(c.s0)}, {"kappa", c.kappa}, {"records", records}};
}

Json to_json(const ClassReport& rep)
{
	Json violations = Json::array();
	for (const auto& v : rep.violations)
		violations.push_back({{"point", v.point}, {"reason", v.reason}});
	Json j = {{"member", rep.member},
	          {"kappa", rep.kappa},
	          {"kappa_tilde", rep.kappa_tilde},
	          {"exceptional_poles", ext_list(rep.exceptional_poles)},
	          {"violations", violations}};
	j["witness"] = rep.witness ? to_json(*rep.witness) : Json(nullptr);
	return j;
}

Json to_json(const FactorChain& chain)
{
	Json factors = Json::array(), certs = Json::array();
	for (const auto& f : chain.factors)
		factors.push_back(to_json(f));
	for (const auto& c : chain.partial_certificates)
		certs.push_back(to_json(c));
	return {{"factors", factors}, {"partial_certificates", certs}, {"searched", chain.searched}};
}

Json to_json(const N00Report& rep)
{
	Json failures = Json::array();
	for (const auto& v : rep.failures)
		failures.push_back({{"point", v.point}, {"reason", v.reason}});
	Json j = {{"ok", rep.ok}, {"failures", failures}};
	if (rep.forms)
		j["forms"] = {{"direct", rep.forms->direct},
		              {"no_new_points", rep.forms->no_new_points},
		              {"sign_pattern", rep.forms->sign_pattern},
		              {"boundary_limits", rep.forms->boundary_limits}};
	else
		j["forms"] = nullptr;
	return j;
}

Json to_json(const KacClosure& k)
{
	auto list = [](const std::vector<KacEntry>& xs) {
		Json a = Json::array();
		for (const auto& e : xs)
			a.push_back({{"point", to_json(e.point)}, {"holds", e.holds}});
		return a;
	};
	return {{"poles", list(k.poles)}, {"zeros", list(k.zeros)}, {"all", k.all()}};
}

Json to_json(const RealizationTransformReport& rep)
{
	Json zetas = Json::array();
	for (const auto& z : rep.zetas)
		zetas.push_back({{"pole", to_json(z.pole)}, {"value", to_json(z.value)}, {"from_residue", to_json(z.from_residue)}});
	return {{"case", to_string(rep.kind)},
	        {"zeros", ext_list(rep.zeros)},
	        {"poles", ext_list(rep.poles)},
	        {"zetas", zetas},
	        {"model_out", to_json(rep.model_out)}};
}

Json to_json(const NegativeSquaresReport& rep, const NegativeSquaresConfig& cfg)
{
	Json trials = Json::array();
	for (const auto& t : rep.trials)
		trials.push_back({{"count", t.count}, {"lowest_eigenvalues", t.lowest}});
	return {{"kappa", rep.kappa},
	        {"points", cfg.points},
	        {"trials", trials},
	        {"seed", cfg.seed},
	        {"tol", cfg.tol}};
}

Json to_json(const InversionResult& res, const InversionConfig& cfg)
{
	return {{"c", cfg.c},
	        {"d", cfg.d},
	        {"value", res.value},
	        {"error", res.error},
	        {"tol", cfg.tol},
	        {"eps", res.eps},
	        {"raw", res.raw},
	        {"extrapolated", res.extrapolated}};
}

Rational rational_from_json(const Json& j)
{
	if (j.is_string())
		return parse_rational(j.get<std::string>());
	if (j.is_number_integer())
		return Rational(j.dump());
	throw ParseError("rational must be a \"p/q\" string or an integer, got " + j.dump());
}

ExtReal ext_real_from_json(const Json& j)
{
	if (j.is_string())
		return parse_ext_real(j.get<std::string>());
	return ExtReal(rational_from_json(j));
}

Poly poly_from_json(const Json& j)
{
	if (!j.is_array())
		throw SchemaMismatch("polynomial must be an array of coefficients");
	std::vector<Rational> cs;
	for (const auto& c : j)
		cs.push_back(rational_from_json(c));
	return Poly(std::move(cs));
}

RatFun ratfun_from_json(const Json& j)
{
	Poly num = poly_from_json(field(j, "num"));
	Poly den = j.contains("den") ? poly_from_json(j.at("den")) : Poly(1);
	return RatFun::reduce(num, den);
}

NevFun nevfun_from_json(const Json& j)
{
	if (!j.is_object())
		throw SchemaMismatch("Nevanlinna function must be an object");
	Rational alpha = j.contains("alpha") ? rational_from_json(j.at("alpha")) : Rational(0);
	Rational beta = j.contains("beta") ? rational_from_json(j.at("beta")) : Rational(0);
	if (beta < 0)
		throw SchemaMismatch("beta must be nonnegative");
	AtomicMeasure sigma = j.contains("atoms") ? atoms_from_json(j.at("atoms")) : AtomicMeasure();
	return NevFun(alpha, beta, sigma);
}

GenNevFun gen_from_json(const Json& j)
{
	RatFun phi = ratfun_from_json(field(j, "phi"));
	NevFun q0 = nevfun_from_json(field(j, "q0"));
	GenNevFun g = [&] {
		try {
			return GenNevFun::make(phi, q0);
		} catch (const InvalidArgument& e) {
			throw SchemaMismatch(e.what());
		}
	}();
	if (j.contains("kappa") && (!j.at("kappa").is_number_integer() || j.at("kappa").get<int>() != g.kappa()))
		throw SchemaMismatch("stated kappa " + j.at("kappa").dump() + " differs from computed " +
		                     std::to_string(g.kappa()));
	return g;
}

L2Model model_from_json(const Json& j)
{
	L2Model m;
	m.beta = rational_from_json(field(j, "beta"));
	m.sigma = atoms_from_json(field(j, "sigma"));
	m.xi = ext_real_from_json(field(j, "xi"));
	m.eta = rational_from_json(field(j, "eta"));
	for (const auto& e : array_field(j, "omega"))
		m.omega.push_back({rational_from_json(field(e, "t")), rational_from_json(field(e, "value_sq"))});
	m.omega_inf_sq = j.contains("omega_inf_sq") ? rational_from_json(j.at("omega_inf_sq")) : Rational(1);
	return m;
}

DocKind detect_kind(const Json& j)
{
	if (!j.is_object())
		throw SchemaMismatch("input document must be a JSON object");
	if (j.contains("phi"))
		return DocKind::gen_nevfun;
	if (j.contains("omega"))
		return DocKind::model;
	if (j.contains("alpha") || j.contains("atoms"))
		return DocKind::nevfun;
	if (j.contains("num"))
		return DocKind::ratfun;
	throw SchemaMismatch("cannot tell the document type from its keys");
}

Json parse_json(const std::string& text)
{
	try {
		return Json::parse(text);
	} catch (const nlohmann::json::parse_error& e) {
		throw ParseError(e.what());
	}
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace nevkit
