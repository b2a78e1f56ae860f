#pragma once

#include "nevkit/gnev.hpp"

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace nevkit {

using Evaluator = std::function<std::complex<double>(std::complex<double>)>;

Evaluator evaluator_of(const RatFun& r);
Evaluator evaluator_of(const NevFun& q);
Evaluator evaluator_of(const GenNevFun& g);

// Gram matrix of the Nevanlinna kernel, row-major.
struct KernelSample {
	std::vector<std::complex<double>> points;
	std::vector<std::complex<double>> gram;
	std::complex<double> at(std::size_t i, std::size_t j) const { return gram[i * points.size() + j]; }
};

// Throws EvaluationFailure when f is not finite at one of the points.
KernelSample kernel_sample(const Evaluator& f, const std::vector<std::complex<double>>& points);

// Points of the upper half-plane, half on an annulus and half in a strip along the axis.
std::vector<std::complex<double>> sample_points(std::size_t n, std::uint64_t seed);

struct NegativeSquaresConfig {
	std::size_t points = 40;
	int trials = 5;
	std::uint64_t seed = 1;
	double tol = 1e-9; // relative to the infinity norm of the scaled matrix
};

struct TrialReport {
	int count = 0;
	std::vector<double> lowest; // smallest eigenvalues of the scaled matrix
};

struct NegativeSquaresReport {
	int kappa = 0; // max over trials
	std::vector<TrialReport> trials;
};

NegativeSquaresReport negative_squares_report(const Evaluator& f, const NegativeSquaresConfig& cfg);
int negative_squares(const Evaluator& f, std::size_t n_points, int trials, std::uint64_t seed,
                     double tol = 1e-9);

struct InversionConfig {
	double c = 0, d = 1;
	double eps_max = 1e-2;
	double eps_min = 1e-7;
	int eps_levels = 6;
	int quadrature_points = 4096;
	double tol = 1e-4; // allowed spread of the last two extrapolated values
	// Height of the horizontal contour leg; default stays below the complex poles of phi.
	std::optional<double> height;
};

struct InversionResult {
	double value = 0;
	double error = 0;
	std::vector<double> eps;
	std::vector<double> raw;
	std::vector<double> extrapolated;
};

// Integral of phi d sigma over (c, d) with half weights at c and d.
// Throws NonConvergent when the finest levels disagree beyond cfg.tol.
InversionResult stieltjes_invert(const Evaluator& f, const InversionConfig& cfg, const RatFun& phi = RatFun(1));

struct GapProbe {
	double interior_mass = 0;
	bool real_valued = false;
	bool increasing = false;
	bool gap = false;
};

GapProbe gap_probe(const Evaluator& f, double c, double d, int samples = 100, double tol = 1e-3);
bool gap_detect(const Evaluator& f, double c, double d, int samples = 100, double tol = 1e-3);

} // namespace nevkit
