#include "zetareg/theta_mellin.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "zetareg/compensated_sum.hpp"
#include "zetareg/hurwitz_lerch.hpp"
#include "zetareg/quadrature.hpp"

namespace zetareg
{

namespace
{

constexpr int max_order = 20;
constexpr double merge_tol = 1e-12;

/// Where to switch from the expansion to quadrature, and how many expansion terms to use.
struct Split
{
	double delta;
	std::vector<ExpansionTerm> terms;
};

/// Largest δ at which the truncated expansion reproduces θ(δ) and θ(δ/2) to 1e-13, with the
/// next three expansion orders below 1e-15 of θ(δ). Terms beyond all orders (e^{−π²/t} for
/// m = 2) are only caught by the direct comparison.
Split choose_split(const ThetaSeries& ts, Complex s)
{
	static constexpr std::array<double, 12> candidates{0.5, 0.25, 0.1, 0.05, 0.025, 0.01, 0.005, 0.0025, 0.001, 5e-4, 2.5e-4, 1e-4};
	constexpr int lookahead = 3;
	const AsymptoticExpansion full = theta_asymptotic(ts, max_order);
	const int min_order = std::max(1, static_cast<int>(std::ceil(-s.real())) + 1);
	auto matches = [&](const AsymptoticExpansion& e, double t) {
		const Complex direct = theta_eval(ts, t);
		return std::abs(direct - e(t)) <= 1e-13 * std::abs(direct);
	};
	for (double delta : candidates)
	{
		const double scale = std::abs(full.leading_coeff) * std::pow(delta, -1.0 / ts.m);
		for (int k = min_order; k + lookahead <= max_order; ++k)
		{
			double next = 0;
			for (int j = k + 1; j <= k + lookahead; ++j)
				next = std::max(next, std::abs(full.coeffs[j]) * std::pow(delta, j) +
										  std::abs(full.fractional[j]) * std::pow(delta, j - 1.0 / ts.m));
			if (next > 1e-15 * scale)
				continue;
			AsymptoticExpansion cut = full;
			cut.order = k;
			if (matches(cut, delta) && matches(cut, 0.5 * delta))
				return {delta, cut.terms(k)};
			break;
		}
	}
	throw ConvergenceError("mellin: small-t expansion never reaches double precision");
}

/// Upper cutoff T with C·e^{−κT}·T^{max(Re s − 1, 0)} below 1e-18.
double upper_cutoff(const ThetaSeries& ts, Complex s)
{
	if (!(ts.kappa > 0))
		throw DomainError("mellin: theta series does not decay (need (1+x)^m + Re y > 0)");
	const double growth = std::max(s.real() - 1, 0.0);
	double t = 2;
	while (std::log(ts.decay_const) - ts.kappa * t + growth * std::log(t) > std::log(1e-18))
		t *= 1.25;
	return t;
}

/// ∫_δ^T t^{s−1}θ(t)dt in u = log t.
Complex tail_integral(const ThetaSeries& ts, Complex s, double delta, double abs_tol, const EvalConfig& cfg)
{
	const double lo = std::log(delta);
	const double hi = std::log(upper_cutoff(ts, s));
	auto integrand = [&](double u) { return std::exp(s * u) * theta_eval(ts, std::exp(u)); };
	const int panels = 8 + static_cast<int>(std::ceil(std::abs(s.imag()) * (hi - lo) / constants::pi));
	return integrate(integrand, lo, hi, abs_tol, 1e-2 * cfg.quad_tol, panels, 20000).value;
}

}  // namespace

ThetaSeries make_theta_series(int m, double x, Complex y)
{
	if (m < 1)
		throw DomainError("theta: m must be positive");
	if (!(x >= 0))
		throw DomainError("theta: requires x >= 0");
	detail::require_finite(y, "theta");
	ThetaSeries ts{m, x, y, 0, 0};
	const double first = std::pow(1 + x, m);
	ts.kappa = first + y.real();
	double c = 0;
	for (int k = 1;; ++k)
	{
		const double term = std::exp(-(std::pow(k + x, m) - first));
		c += term;
		if (term < 1e-17 * c)
			break;
	}
	ts.decay_const = c;
	return ts;
}

Complex theta_eval(const ThetaSeries& ts, double t)
{
	if (!(t > 0))
		throw DomainError("theta_eval: requires t > 0");
	double sum = 0;
	double carry = 0;
	for (long k = 1;; ++k)
	{
		const double term = std::exp(-std::pow(k + ts.x, ts.m) * t);
		const double acc = sum + term;
		carry += (sum - acc) + term;
		sum = acc;
		// Consecutive ratios shrink, so the tail is dominated by a geometric series.
		const double next = std::exp(-std::pow(k + 1 + ts.x, ts.m) * t);
		const double ratio = std::exp(-(std::pow(k + 2 + ts.x, ts.m) - std::pow(k + 1 + ts.x, ts.m)) * t);
		if (next / (1 - ratio) <= 1e-17 * (sum + carry) || next == 0)
			break;
	}
	return (sum + carry) * std::exp(-ts.y * t);
}

std::vector<ExpansionTerm> AsymptoticExpansion::terms(double max_exponent) const
{
	std::vector<ExpansionTerm> out;
	auto push = [&](double e, Complex c) {
		if (e > max_exponent + merge_tol || c == 0.0)
			return;
		for (auto& term : out)
			if (std::abs(term.exponent - e) < merge_tol)
			{
				term.coeff += c;
				return;
			}
		out.push_back({e, c});
	};
	for (std::size_t j = 0; j < fractional.size(); ++j)
		push(static_cast<double>(j) - 1.0 / m, fractional[j]);
	for (std::size_t k = 0; k < coeffs.size(); ++k)
		push(static_cast<double>(k), coeffs[k]);
	std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.exponent < b.exponent; });
	return out;
}

Complex AsymptoticExpansion::operator()(double t) const
{
	Complex sum = 0;
	for (const auto& term : terms(order))
		sum += term.coeff * std::pow(t, term.exponent);
	return sum;
}

AsymptoticExpansion theta_asymptotic(const ThetaSeries& ts, int order)
{
	if (order < 0 || order > max_order)
		throw CapacityError("theta_asymptotic: order must lie in [0, 20]");
	AsymptoticExpansion e;
	e.m = ts.m;
	e.order = order;
	e.leading_coeff = gamma(1.0 + 1.0 / ts.m);

	// Taylor coefficients of e^{−yt}. For m = 1 the fractional term j = K + 1 has exponent K.
	const int fractional_count = order + 1 + (ts.m == 1 ? 1 : 0);
	std::vector<Complex> damping(fractional_count);
	damping[0] = 1.0;
	for (int j = 1; j < fractional_count; ++j)
		damping[j] = damping[j - 1] * (-ts.y) / static_cast<double>(j);

	std::vector<Complex> bare(order + 1);
	double factorial = 1;
	for (int k = 0; k <= order; ++k)
	{
		if (k > 0)
			factorial *= k;
		const double sign = (k % 2 == 0) ? 1.0 : -1.0;
		bare[k] = sign * hurwitz_zeta(-static_cast<double>(ts.m * k), ts.x + 1.0) / factorial;
	}
	e.coeffs.assign(order + 1, 0.0);
	for (int k = 0; k <= order; ++k)
		for (int i = 0; i <= k; ++i)
			e.coeffs[k] += bare[i] * damping[k - i];
	e.fractional.resize(fractional_count);
	for (int j = 0; j < fractional_count; ++j)
		e.fractional[j] = e.leading_coeff * damping[j];
	return e;
}

Complex mellin_zeta(const ThetaSeries& ts, Complex s, const EvalConfig& cfg)
{
	cfg.validate();
	const Split split = choose_split(ts, s);

	// Γ(s)ζ_m(s) has a simple pole with residue a at s = −e for each expansion term a·t^e.
	// At s = −k the pole of Γ cancels it, leaving ζ_m(−k) = (−1)^k k!·a.
	long long which = 0;
	if (detail::is_nonpositive_integer(s, &which))
	{
		const double k = static_cast<double>(-which);
		for (const auto& term : split.terms)
			if (std::abs(term.exponent - k) < merge_tol)
				return (static_cast<long long>(k) % 2 == 0 ? 1.0 : -1.0) * std::tgamma(k + 1) * term.coeff;
		return 0.0;
	}
	for (const auto& term : split.terms)
		if (s + term.exponent == 0.0 && term.coeff != 0.0)
			throw PoleError("mellin_zeta: pole at s = " + std::to_string(s.real()), s.real());

	detail::CompensatedSum head;
	for (const auto& term : split.terms)
		head.add(term.coeff * std::exp((s + term.exponent) * std::log(split.delta)) / (s + term.exponent));
	const Complex h = head.value();
	const Complex tail = tail_integral(ts, s, split.delta, 1e-2 * cfg.quad_tol * std::max(std::abs(h), 1e-30), cfg);
	return detail::require_finite((h + tail) * reciprocal_gamma(s), "mellin_zeta");
}

Complex mellin_regprod_oracle(const ThetaSeries& ts, const EvalConfig& cfg)
{
	cfg.validate();
	const Split split = choose_split(ts, 0.0);
	const double log_delta = std::log(split.delta);

	// With Γ(s)ζ(s) = c_0δ^s/s + G(s) and 1/Γ(s) = s + γs² + …,
	// ζ'(0) = c_0(γ + log δ) + G(0).
	detail::CompensatedSum derivative;
	for (const auto& term : split.terms)
	{
		if (std::abs(term.exponent) < merge_tol)
			derivative.add(term.coeff * (constants::euler_gamma + log_delta));
		else
			derivative.add(term.coeff * std::exp(term.exponent * log_delta) / term.exponent);
	}
	const Complex head = derivative.value();
	derivative.add(tail_integral(ts, 0.0, split.delta, 1e-2 * cfg.quad_tol * std::max(std::abs(head), 1.0), cfg));
	return detail::require_finite(std::exp(-derivative.value()), "mellin_regprod_oracle");
}

IdentitySides poisson_theta2(double t)
{
	if (!(t > 0))
		throw DomainError("poisson_theta2: requires t > 0");
	const ThetaSeries ts = make_theta_series(2, 0, 0.0);
	const double r = std::sqrt(constants::pi / t);
	const Complex dual = theta_eval(ts, constants::pi * constants::pi / t);
	return {theta_eval(ts, t), r * dual + 0.5 * r - 0.5};
}

double poisson_check_theta2(double t) { return poisson_theta2(t).residual(); }

}  // namespace zetareg
