#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <queue>
#include <vector>

#include "zetareg/errors.hpp"

namespace zetareg
{

struct QuadratureResult
{
	std::complex<double> value;
	double error = 0;
	int evaluations = 0;
};

namespace detail
{

// 7-point Gauss / 15-point Kronrod pair (QUADPACK qk15).
inline constexpr std::array<double, 8> kronrod_nodes{
	0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
	0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
	0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
	0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kronrod_weights{
	0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
	0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
	0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
	0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> gauss_weights{
	0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
	0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel
{
	double a, b;
	std::complex<double> value;
	double error;
	bool operator<(const Panel& other) const { return error < other.error; }
};

template <class F>
Panel gauss_kronrod_panel(F& f, double a, double b)
{
	const double centre = 0.5 * (a + b);
	const double half = 0.5 * (b - a);
	const std::complex<double> fc = f(centre);
	std::complex<double> kronrod = fc * kronrod_weights[7];
	std::complex<double> gauss = fc * gauss_weights[3];
	for (int i = 0; i < 7; ++i)
	{
		const double dx = half * kronrod_nodes[i];
		const std::complex<double> pair = f(centre - dx) + f(centre + dx);
		kronrod += kronrod_weights[i] * pair;
		if (i % 2 == 1)
			gauss += gauss_weights[i / 2] * pair;
	}
	kronrod *= half;
	gauss *= half;
	return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace detail

/// Globally adaptive Gauss–Kronrod integration of a complex-valued f over [a, b].
///
/// The interval is first cut into `initial_panels` equal pieces; the panel with the largest
/// error estimate is bisected until the summed estimate is below max(abs_tol, rel_tol·|I|).
/// Throws ConvergenceError once `max_panels` is exceeded.
template <class F>
QuadratureResult integrate(F&& f, double a, double b, double abs_tol, double rel_tol,
						   int initial_panels = 1, int max_panels = 4000)
{
	if (a == b)
		return {};
	initial_panels = std::max(1, initial_panels);
	std::priority_queue<detail::Panel> queue;
	std::complex<double> total = 0;
	double error = 0;
	const double width = (b - a) / initial_panels;
	for (int i = 0; i < initial_panels; ++i)
	{
		const double lo = a + i * width;
		const double hi = (i + 1 == initial_panels) ? b : a + (i + 1) * width;
		auto panel = detail::gauss_kronrod_panel(f, lo, hi);
		total += panel.value;
		error += panel.error;
		queue.push(panel);
	}
	int panels = initial_panels;
	while (error > std::max(abs_tol, rel_tol * std::abs(total)))
	{
		if (panels >= max_panels)
			throw ConvergenceError("adaptive quadrature exceeded its panel budget");
		const detail::Panel worst = queue.top();
		queue.pop();
		const double mid = 0.5 * (worst.a + worst.b);
		if (mid <= worst.a || mid >= worst.b)
			throw ConvergenceError("adaptive quadrature cannot bisect further");
		auto left = detail::gauss_kronrod_panel(f, worst.a, mid);
		auto right = detail::gauss_kronrod_panel(f, mid, worst.b);
		total += left.value + right.value - worst.value;
		error += left.error + right.error - worst.error;
		queue.push(left);
		queue.push(right);
		++panels;
	}
	// Re-sum to drop the drift of the running updates.
	std::complex<double> resummed = 0;
	double resummed_error = 0;
	while (!queue.empty())
	{
		resummed += queue.top().value;
		resummed_error += queue.top().error;
		queue.pop();
	}
	return {resummed, resummed_error, panels * 15};
}

}  // namespace zetareg
