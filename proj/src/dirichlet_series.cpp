#include "zetareg/dirichlet_series.hpp"

#include <cmath>
#include <vector>

#include "zetareg/compensated_sum.hpp"

namespace zetareg
{

namespace
{

constexpr double pole_guard = 1e-6;

Complex ipow(Complex u, int m)
{
	Complex r = 1.0;
	for (int i = 0; i < m; ++i)
		r *= u;
	return r;
}

double binomial(int n, int k)
{
	double b = 1;
	for (int i = 0; i < k; ++i)
		b = b * (n - i) / (i + 1);
	return b;
}

/// Σ_{k>=1} f(k) for even f, rebuilt into Σ_{k∈ℤ} as f(0) + 2Σ_{k>=1}.
Complex bilateral(Complex f0, Complex one_sided) { return f0 + 2.0 * one_sided; }

}  // namespace

const char* to_string(SeriesMethod method)
{
	switch (method)
	{
	case SeriesMethod::direct_em: return "direct_em";
	case SeriesMethod::digamma_form: return "digamma_form";
	case SeriesMethod::trig_form: return "trig_form";
	}
	return "unknown";
}

Complex power_sum_direct(int m, Complex x, Complex y, Complex s, const EvalConfig& cfg, double* tail_bound)
{
	cfg.validate();
	if (m < 1)
		throw DomainError("power_sum_direct: m must be positive");
	if (!(x.real() > -1))
		throw DomainError("power_sum_direct: requires Re x > -1");
	if (!(static_cast<double>(m) * s.real() > 1))
		throw DomainError("power_sum_direct: series diverges unless Re(m s) > 1");

	const int n = cfg.trunc;
	const int em_order = cfg.em_order;
	const bool unit = (s == Complex(1.0, 0.0));
	auto term = [&](double k) {
		const Complex u = k + x;
		const Complex base = ipow(u, m) + y;
		if (std::abs(base) <= 1e-14 * (std::abs(ipow(u, m)) + std::abs(y)))
			throw DomainError("power_sum_direct: (k+x)^m + y vanishes at k = " + std::to_string(static_cast<long>(k)));
		return unit ? 1.0 / base : std::exp(-s * std::log(base));
	};

	detail::CompensatedSum sum;
	for (int k = n - 1; k >= 1; --k)
		sum.add(term(k));

	// Tail Σ_{k>=N}: ∫_N^∞ f + f(N)/2 − Σ_j B_{2j}/(2j)!·f^{(2j−1)}(N), with the Taylor
	// coefficients of f(N+h) = g(N+h)^{−s} generated from those of the polynomial g.
	const Complex w = static_cast<double>(n) + x;
	std::vector<Complex> g(m + 1);
	for (int i = 0; i <= m; ++i)
		g[i] = binomial(m, i) * ipow(w, m - i);
	g[0] += y;
	const Complex f_n = term(n);
	const int order = 2 * em_order + 1;
	std::vector<Complex> c(order + 1, 0.0);  // Taylor coefficients of (g/g_0)^{−s}
	c[0] = 1.0;
	for (int k = 1; k <= order; ++k)
	{
		Complex acc = 0;
		for (int i = 1; i <= std::min(k, m); ++i)
			acc += ((1.0 - s) * static_cast<double>(i) - static_cast<double>(k)) * (g[i] / g[0]) * c[k - i];
		c[k] = acc / static_cast<double>(k);
	}

	const Complex ratio = y / ipow(w, m);
	if (std::abs(ratio) > 0.5)
		throw DomainError("power_sum_direct: |y| too large for the truncation; raise trunc");
	Complex integral = 0;
	Complex coeff = 1.0;                                           // C(−s, r) y^r
	Complex power = std::exp((1.0 - static_cast<double>(m) * s) * std::log(w));  // w^{1−m(s+r)}
	const Complex w_m = ipow(w, m);
	for (int r = 0; r < 400; ++r)
	{
		const Complex denom = static_cast<double>(m) * (s + static_cast<double>(r)) - 1.0;
		if (denom == 0.0)
			throw DomainError("power_sum_direct: tail integral hits m(s+r) = 1");
		const Complex piece = coeff * power / denom;
		integral += piece;
		if (r > 0 && std::abs(piece) <= 1e-18 * std::abs(integral))
			break;
		coeff *= (-s - static_cast<double>(r)) / static_cast<double>(r + 1) * y;
		power /= w_m;
	}

	const auto& bern = BernoulliTable::instance();
	Complex tail = integral + 0.5 * f_n;
	for (int j = 1; j <= em_order; ++j)
		tail -= bern.value(2 * j) / (2.0 * j) * f_n * c[2 * j - 1];
	if (tail_bound)
		*tail_bound = std::abs(bern.value(2 * em_order + 2) / (2.0 * em_order + 2) * f_n * c[order]);
	sum.add(tail);
	return detail::require_finite(sum.value(), "power_sum_direct");
}

SeriesSum sum_direct(int m, Complex x, Complex y, const EvalConfig& cfg)
{
	SeriesSum out{m, x, y, 0.0, SeriesMethod::direct_em, 0.0};
	out.value = power_sum_direct(m, x, y, 1.0, cfg, &out.tail_bound);
	return out;
}

SeriesSum sum_digamma(int m, Complex x, Complex y, SignConvention sign, int root_choice)
{
	if (m < 2)
		throw DomainError("sum_digamma: requires m >= 2");
	if (y == 0.0)
		throw DomainError("sum_digamma: requires y != 0");
	const Complex omega = root_of_sign(m, -1, root_choice);
	const Complex y_root = std::exp(std::log(y) / static_cast<double>(m));
	const Complex weight = y_root / y;  // y^{1/m − 1}
	detail::CompensatedSum acc;
	for (int j = 0; j < m; ++j)
	{
		const Complex xi_omega = root_of_sign(m, 1, j) * omega;
		const Complex arg = x - xi_omega * y_root + 1.0;
		if (detail::is_nonpositive_integer(arg) ||
			(std::abs(arg.imag()) < 1e-12 && arg.real() <= 0 && std::abs(arg.real() - std::round(arg.real())) < 1e-12))
			throw DomainError("sum_digamma: digamma argument at a pole");
		acc.add(xi_omega * weight * digamma(arg));
	}
	const double sigma = sign == SignConvention::corrected ? 1.0 : -1.0;
	SeriesSum out{m, x, y, 0.0, SeriesMethod::digamma_form, 0.0};
	out.value = detail::require_finite(sigma / m * acc.value(), "sum_digamma");
	out.tail_bound = 1e-15 * m * std::abs(out.value);
	return out;
}

IdentitySides coth_identity(double y, const EvalConfig& cfg)
{
	if (y == 0)
		throw DomainError("coth_identity: requires y != 0");
	const Complex s = sum_direct(2, 0.0, y * y, cfg).value;
	const Complex total = bilateral(2.0 / y, 2.0 * y * s);
	return {total / (2 * constants::pi), coth(constants::pi * y)};
}

double coth_identity_residual(double y, const EvalConfig& cfg) { return coth_identity(y, cfg).residual(); }

IdentitySides quartic_identity(double y, SignConvention sign, const EvalConfig& cfg)
{
	if (y == 0)
		throw DomainError("quartic_identity: requires y != 0");
	const double y3 = y * y * y;
	const Complex s = sum_direct(4, 0.0, y3 * y, cfg).value;
	const Complex total = bilateral(4.0 / y, 4.0 * y3 * s);
	const double prefactor = (sign == SignConvention::corrected ? 0.5 : 1.0) / (constants::pi * std::sqrt(2.0));

	const double a = std::sqrt(2.0) * constants::pi * y;
	const double sh = checked_sinh(0.5 * a, cfg.overflow_clamp);
	const double sn = std::sin(0.5 * a);
	const double denom = 2 * (sh * sh + sn * sn);  // cosh a − cos a
	if (denom == 0)
		throw DomainError("quartic_identity: cosh a = cos a");
	const double rhs = (checked_sinh(a, cfg.overflow_clamp) + std::sin(a)) / denom;
	return {prefactor * total, rhs};
}

double quartic_identity_residual(double y, SignConvention sign, const EvalConfig& cfg)
{
	return quartic_identity(y, sign, cfg).residual();
}

IdentitySides cot_sum_identity(int n, double y, SignConvention sign, const EvalConfig& cfg)
{
	if (n < 3)
		throw DomainError("cot_sum_identity: requires n >= 3");
	if (y == 0)
		throw DomainError("cot_sum_identity: requires y != 0");
	Complex rhs = 0;
	for (int l = 0; l < n; ++l)
	{
		const Complex omega = sign == SignConvention::corrected ? root_of_sign(2 * n, -1, l) : root_of_sign(2 * n, 1, l);
		const Complex z = constants::pi * omega * y;
		if (std::abs(std::sin(z)) < pole_guard)
			throw DomainError("cot_sum_identity: cot argument at a pole");
		rhs += omega * cot(z);
	}
	const double y_pow = std::pow(y, 2 * n);
	const Complex s = sum_direct(2 * n, 0.0, y_pow, cfg).value;
	const Complex total = bilateral(1.0 / y, std::pow(y, 2 * n - 1) * s);
	return {static_cast<double>(n) / constants::pi * total, rhs};
}

double cot_sum_identity_residual(int n, double y, SignConvention sign, const EvalConfig& cfg)
{
	return cot_sum_identity(n, y, sign, cfg).residual();
}

Complex euler_even_zeta(int j)
{
	const Rational b = bernoulli_even(j);
	Rational factorial = 1;
	for (int i = 2; i <= 2 * j; ++i)
		factorial *= i;
	const double ratio = Rational(b / factorial).convert_to<double>();
	const double sign = (j % 2 == 1) ? 1.0 : -1.0;
	return sign * 0.5 * std::pow(2 * constants::pi, 2 * j) * ratio;
}

Complex euler_even_zeta_from_coth(int j)
{
	constexpr int max_j = 12;
	if (j < 1 || j > max_j)
		throw CapacityError("euler_even_zeta_from_coth: j must lie in [1, 12]");
	constexpr int points = 128;
	constexpr double radius = 0.5;  // the nearest singularities of πy·coth(πy) are at ±i
	Complex coeff = 0;
	for (int k = 0; k < points; ++k)
	{
		const double theta = 2 * constants::pi * k / points;
		const Complex u = constants::pi * std::polar(radius, theta);
		const Complex f = u * std::cosh(u) / std::sinh(u);
		coeff += f * std::polar(1.0, -2.0 * j * theta);
	}
	coeff /= points * std::pow(radius, 2 * j);
	const double sign = (j % 2 == 1) ? 1.0 : -1.0;
	return sign * 0.5 * coeff;
}

Complex hurwitz_via_polygamma(int m, Complex x, SignConvention sign)
{
	if (m < 2 || m > 13)
		throw CapacityError("hurwitz_via_polygamma: m must lie in [2, 13]");
	double factorial = 1;
	for (int i = 2; i < m; ++i)
		factorial *= i;
	const bool even = m % 2 == 0;
	const double sigma = (sign == SignConvention::corrected) == even ? 1.0 : -1.0;
	return sigma * polygamma(m - 1, x) / factorial;
}

}  // namespace zetareg
