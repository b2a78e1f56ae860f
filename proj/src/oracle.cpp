#include "nevkit/oracle.hpp"

#include "nevkit/errors.hpp"

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <unsupported/Eigen/Polynomials>

#include <algorithm>
#include <cmath>
#include <random>

namespace nevkit {

namespace {

std::complex<double> ratfun_at(const RatFun& r, std::complex<double> z)
{
	std::complex<long double> zl(z.real(), z.imag());
	std::complex<long double> den = r.den()(zl);
	if (den == std::complex<long double>(0))
		throw PoleHit("evaluation at a pole");
	std::complex<long double> v = r.num()(zl) / den;
	return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

bool finite(std::complex<double> v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

constexpr double pi = 3.14159265358979323846;

} // namespace

Evaluator evaluator_of(const RatFun& r)
{
	return [r](std::complex<double> z) { return ratfun_at(r, z); };
}

Evaluator evaluator_of(const NevFun& q)
{
	return evaluator_of(q.to_ratfun());
}

Evaluator evaluator_of(const GenNevFun& g)
{
	return evaluator_of(g.product());
}

KernelSample kernel_sample(const Evaluator& f, const std::vector<std::complex<double>>& points)
{
	KernelSample k;
	k.points = points;
	std::size_t n = points.size();
	std::vector<std::complex<double>> values(n);
	for (std::size_t i = 0; i < n; ++i) {
		values[i] = f(points[i]);
		if (!finite(values[i]))
			throw EvaluationFailure("function is not finite at a sample point");
	}
	k.gram.resize(n * n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			k.gram[i * n + j] =
			    (values[i] - std::conj(values[j])) / (points[i] - std::conj(points[j]));
	return k;
}

std::vector<std::complex<double>> sample_points(std::size_t n, std::uint64_t seed)
{
	std::mt19937_64 rng(seed);
	std::uniform_real_distribution<double> unit(0.0, 1.0);
	std::vector<std::complex<double>> pts;
	for (std::size_t i = 0; i < n; ++i) {
		if (i % 2 == 0) {
			double radius = std::pow(10.0, -1.0 + 3.5 * unit(rng));
			double angle = pi * (0.02 + 0.96 * unit(rng));
			pts.push_back(std::polar(radius, angle));
		} else {
			double x = -8.0 + 16.0 * unit(rng);
			double y = std::pow(10.0, -1.5 + 2.0 * unit(rng));
			pts.emplace_back(x, y);
		}
	}
	return pts;
}

NegativeSquaresReport negative_squares_report(const Evaluator& f, const NegativeSquaresConfig& cfg)
{
	NegativeSquaresReport rep;
	for (int trial = 0; trial < cfg.trials; ++trial) {
		std::uint64_t seed = cfg.seed * 1000003ULL + static_cast<std::uint64_t>(trial);
		std::vector<std::complex<double>> pts;
		// Resample points where f cannot be evaluated.
		std::uint64_t extra = 0;
		auto candidates = sample_points(cfg.points, seed);
		for (auto z : candidates) {
			for (int attempt = 0;; ++attempt) {
				bool ok = false;
				try {
					ok = finite(f(z));
				} catch (const PoleHit&) {
				}
				if (ok)
					break;
				if (attempt > 100)
					throw EvaluationFailure("could not find evaluable sample points");
				z = sample_points(1, seed ^ (0x9e3779b97f4a7c15ULL + ++extra))[0];
			}
			pts.push_back(z);
		}

		KernelSample k = kernel_sample(f, pts);
		std::size_t n = pts.size();
		Eigen::MatrixXcd m(n, n);
		std::vector<double> scale(n);
		for (std::size_t i = 0; i < n; ++i)
			scale[i] = 1.0 / std::sqrt(std::max(std::abs(k.at(i, i).real()), 1e-300));
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = 0; j < n; ++j)
				m(static_cast<long>(i), static_cast<long>(j)) = scale[i] * scale[j] * k.at(i, j);
		m = (m + m.adjoint()).eval() / 2.0;
		double norm = m.cwiseAbs().rowwise().sum().maxCoeff();
		Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
		const auto& ev = es.eigenvalues();
		TrialReport tr;
		for (long i = 0; i < ev.size(); ++i) {
			if (ev(i) < -cfg.tol * norm)
				++tr.count;
			if (i < 5)
				tr.lowest.push_back(ev(i));
		}
		rep.kappa = std::max(rep.kappa, tr.count);
		rep.trials.push_back(tr);
	}
	return rep;
}

int negative_squares(const Evaluator& f, std::size_t n_points, int trials, std::uint64_t seed, double tol)
{
	NegativeSquaresConfig cfg;
	cfg.points = n_points;
	cfg.trials = trials;
	cfg.seed = seed;
	cfg.tol = tol;
	return negative_squares_report(f, cfg).kappa;
}

namespace {

double default_height(const RatFun& phi, double c, double d)
{
	double h = std::min(1.0, d - c);
	int deg = phi.den().degree();
	if (deg >= 1) {
		Eigen::VectorXd coeffs(deg + 1);
		for (int i = 0; i <= deg; ++i)
			coeffs(i) = phi.den().coeff(i).get_d();
		Eigen::PolynomialSolver<double, Eigen::Dynamic> solver(coeffs);
		for (long i = 0; i < solver.roots().size(); ++i) {
			auto root = solver.roots()(i);
			if (std::abs(root.imag()) > 1e-12)
				h = std::min(h, 0.5 * std::abs(root.imag()));
		}
	}
	return h;
}

template <class F>
double integrate(F&& g, double a, double b, int panels)
{
	using boost::math::quadrature::gauss_kronrod;
	double total = 0;
	double width = (b - a) / panels;
	for (int i = 0; i < panels; ++i)
		total += gauss_kronrod<double, 61>::integrate(g, a + i * width, a + (i + 1) * width, 8, 1e-13);
	return total;
}

} // namespace

InversionResult stieltjes_invert(const Evaluator& f, const InversionConfig& cfg, const RatFun& phi)
{
	if (!(cfg.c < cfg.d))
		throw InvalidArgument("inversion interval needs c < d");
	if (cfg.eps_levels < 2 || !(cfg.eps_min > 0) || !(cfg.eps_min < cfg.eps_max))
		throw InvalidArgument("epsilon schedule must have at least two decreasing positive levels");
	if (cfg.quadrature_points < 64)
		throw InvalidArgument("quadrature_points must be at least 64");
	for (const auto& p : phi.poles().real)
		if (p.approx() >= cfg.c - 1e-12 && p.approx() <= cfg.d + 1e-12)
			throw InvalidArgument("phi has a real pole in the inversion interval");

	double height = cfg.height ? *cfg.height : default_height(phi, cfg.c, cfg.d);
	int panels = std::max(1, cfg.quadrature_points / 256);
	auto g = [&](std::complex<double> z) { return ratfun_at(phi, z) * f(z); };

	// The horizontal leg at the top does not depend on epsilon.
	double top = integrate([&](double x) { return g({x, height}).imag(); }, cfg.c, cfg.d, panels);

	InversionResult res;
	double ratio = std::pow(cfg.eps_max / cfg.eps_min, 1.0 / (cfg.eps_levels - 1));
	for (int k = 0; k < cfg.eps_levels; ++k) {
		double eps = cfg.eps_max / std::pow(ratio, k);
		auto leg = [&](double x) {
			return integrate([&](double u) {
				double y = std::exp(u);
				return g({x, y}).real() * y;
			}, std::log(eps), std::log(height), panels);
		};
		double value = (leg(cfg.c) + top - leg(cfg.d)) / pi;
		res.eps.push_back(eps);
		res.raw.push_back(value);
		if (k > 0)
			res.extrapolated.push_back((ratio * value - res.raw[k - 1]) / (ratio - 1));
	}
	std::size_t m = res.extrapolated.size();
	res.value = res.extrapolated.back();
	res.error = m >= 2 ? std::abs(res.extrapolated[m - 1] - res.extrapolated[m - 2])
	                   : std::abs(res.raw.back() - res.raw[res.raw.size() - 2]);
	if (!(res.error <= cfg.tol))
		throw NonConvergent("last levels differ by " + std::to_string(res.error));
	return res;
}

GapProbe gap_probe(const Evaluator& f, double c, double d, int samples, double tol)
{
	GapProbe p;
	InversionConfig cfg;
	cfg.c = c;
	cfg.d = d;
	double total = stieltjes_invert(f, cfg).value;
	auto end_mass = [&](double x) {
		double y = 1e-9;
		return y * f({x, y}).imag();
	};
	p.interior_mass = total - (end_mass(c) + end_mass(d)) / 2;

	p.real_valued = true;
	p.increasing = true;
	double prev = -INFINITY;
	for (int k = 0; k < samples; ++k) {
		double x = c + (d - c) * (k + 0.5) / samples;
		std::complex<double> v;
		try {
			v = f({x, 0.0});
		} catch (const PoleHit&) {
			p.real_valued = false;
			break;
		}
		if (!finite(v) || std::abs(v.imag()) > 1e-9 * (1 + std::abs(v.real()))) {
			p.real_valued = false;
			break;
		}
		if (!(v.real() > prev))
			p.increasing = false;
		prev = v.real();
	}
	p.gap = std::abs(p.interior_mass) < tol && p.real_valued && p.increasing;
	return p;
}

bool gap_detect(const Evaluator& f, double c, double d, int samples, double tol)
{
	try {
		return gap_probe(f, c, d, samples, tol).gap;
	} catch (const NonConvergent&) {
		return false;
	}
}

} // namespace nevkit
