#include "zetareg/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "zetareg/quadrature.hpp"

namespace zetareg
{

namespace
{

constexpr double stirling_shift = 10.0;
constexpr int stirling_terms = 12;
constexpr int polygamma_max_order = 12;
constexpr int polygamma_terms = 20;

double factorial(int n)
{
	double f = 1;
	for (int i = 2; i <= n; ++i)
		f *= i;
	return f;
}

void require_not_pole(Complex z, const char* what)
{
	long long which = 0;
	if (detail::is_nonpositive_integer(z, &which))
		throw PoleError(std::string(what) + ": pole at non-positive integer " + std::to_string(which),
						static_cast<double>(which));
}

}  // namespace

namespace detail
{

Complex require_finite(Complex z, const char* what)
{
	if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
		throw OverflowError(std::string(what) + ": result is not finite");
	return z;
}

bool is_nonpositive_integer(Complex z, long long* which)
{
	if (z.imag() != 0 || z.real() > 0 || z.real() != std::floor(z.real()))
		return false;
	if (which)
		*which = static_cast<long long>(z.real());
	return true;
}

}  // namespace detail

// ---------------------------------------------------------------------------------------------
// Bernoulli numbers

BernoulliTable::BernoulliTable()
{
	const int n_max = 2 * j_max;
	exact_.reserve(n_max + 1);
	exact_.emplace_back(1);
	// Σ_{k=0}^{n} C(n+1,k) B_k = 0 solved for B_n.
	for (int n = 1; n <= n_max; ++n)
	{
		Rational acc = 0;
		boost::multiprecision::cpp_int binom = 1;  // C(n+1, 0)
		for (int k = 0; k < n; ++k)
		{
			acc += Rational(binom) * exact_[k];
			binom = binom * (n + 1 - k) / (k + 1);
		}
		exact_.push_back(-acc / Rational(n + 1));
	}
	value_.reserve(exact_.size());
	long_value_.reserve(exact_.size());
	for (const auto& b : exact_)
	{
		value_.push_back(b.convert_to<double>());
		long_value_.push_back(b.convert_to<long double>());
	}
}

const BernoulliTable& BernoulliTable::instance()
{
	static const BernoulliTable table;
	return table;
}

const Rational& BernoulliTable::exact(int n) const
{
	if (n < 0 || n > 2 * j_max)
		throw CapacityError("Bernoulli index " + std::to_string(n) + " outside the table");
	return exact_[n];
}

double BernoulliTable::value(int n) const
{
	if (n < 0 || n > 2 * j_max)
		throw CapacityError("Bernoulli index " + std::to_string(n) + " outside the table");
	return value_[n];
}

long double BernoulliTable::long_value(int n) const
{
	if (n < 0 || n > 2 * j_max)
		throw CapacityError("Bernoulli index " + std::to_string(n) + " outside the table");
	return long_value_[n];
}

Rational bernoulli_even(int j)
{
	if (j < 1 || j > BernoulliTable::j_max)
		throw CapacityError("bernoulli_even: j must lie in [1, " + std::to_string(BernoulliTable::j_max) + "]");
	return BernoulliTable::instance().exact(2 * j);
}

double bernoulli_even_value(int j)
{
	if (j < 1 || j > BernoulliTable::j_max)
		throw CapacityError("bernoulli_even: j must lie in [1, " + std::to_string(BernoulliTable::j_max) + "]");
	return BernoulliTable::instance().value(2 * j);
}

// ---------------------------------------------------------------------------------------------
// Gamma family

Complex log_gamma(Complex z)
{
	require_not_pole(z, "log_gamma");
	const auto& bern = BernoulliTable::instance();
	Complex shift_logs = 0;
	while (z.real() < stirling_shift)
	{
		shift_logs += std::log(z);
		z += 1.0;
	}
	const Complex inv = 1.0 / z;
	const Complex inv2 = inv * inv;
	Complex series = 0;
	Complex power = inv;
	for (int j = 1; j <= stirling_terms; ++j)
	{
		series += bern.value(2 * j) / (2.0 * j * (2.0 * j - 1)) * power;
		power *= inv2;
	}
	const Complex result = (z - 0.5) * std::log(z) - z + 0.5 * constants::log_two_pi + series - shift_logs;
	return detail::require_finite(result, "log_gamma");
}

Complex gamma(Complex z)
{
	const Complex value = std::exp(log_gamma(z));
	if (z.imag() == 0)
		return detail::require_finite(Complex(value.real(), 0.0), "gamma");
	return detail::require_finite(value, "gamma");
}

Complex reciprocal_gamma(Complex z)
{
	if (detail::is_nonpositive_integer(z))
		return 0.0;
	const Complex value = std::exp(-log_gamma(z));
	if (z.imag() == 0)
		return detail::require_finite(Complex(value.real(), 0.0), "reciprocal_gamma");
	return detail::require_finite(value, "reciprocal_gamma");
}

Complex digamma(Complex z)
{
	require_not_pole(z, "digamma");
	const auto& bern = BernoulliTable::instance();
	Complex shift = 0;
	while (z.real() < stirling_shift)
	{
		shift -= 1.0 / z;
		z += 1.0;
	}
	const Complex inv2 = 1.0 / (z * z);
	Complex series = 0;
	Complex power = inv2;
	for (int j = 1; j <= stirling_terms; ++j)
	{
		series += bern.value(2 * j) / (2.0 * j) * power;
		power *= inv2;
	}
	return detail::require_finite(std::log(z) - 0.5 / z - series + shift, "digamma");
}

Complex polygamma(int n, Complex z)
{
	if (n < 1 || n > polygamma_max_order)
		throw CapacityError("polygamma: order must lie in [1, 12]");
	require_not_pole(z, "polygamma");
	const auto& bern = BernoulliTable::instance();
	const double sign = (n % 2 == 1) ? 1.0 : -1.0;  // (−1)^{n+1}
	const double n_fact = factorial(n);
	Complex shift = 0;
	while (z.real() < 20.0 + n)
	{
		shift += sign * n_fact / std::pow(z, n + 1);
		z += 1.0;
	}
	const Complex inv = 1.0 / z;
	const Complex inv2 = inv * inv;
	const Complex inv_n = std::pow(inv, n);
	Complex series = factorial(n - 1) * inv_n + 0.5 * n_fact * inv_n * inv;
	Complex power = inv_n * inv2;
	// B_{2j} (2j+n−1)! / (2j)!, built incrementally.
	double ratio = n_fact / 2.0 * (n + 1);  // (n+1)!/2! for j = 1
	for (int j = 1; j <= polygamma_terms; ++j)
	{
		if (j > 1)
			ratio *= static_cast<double>(2 * j + n - 2) * (2 * j + n - 1) / ((2.0 * j - 1) * (2.0 * j));
		series += bern.value(2 * j) * ratio * power;
		power *= inv2;
	}
	return detail::require_finite(sign * series + shift, "polygamma");
}

Complex gamma_integral_oracle(Complex z, const EvalConfig& cfg)
{
	cfg.validate();
	const double a = z.real();
	const double b = z.imag();
	if (!(a > 0))
		throw DomainError("gamma_integral_oracle: requires Re z > 0");

	// Rotate the ray t = r·e^{iφ} through the saddle t ≈ z, keeping |φ| <= π/2 − 2/|b| so the
	// integrand still decays; the leftover cancellation is at most about e^2.
	const double cap = std::abs(b) < 2 ? 0.0 : constants::pi / 2 - 2.0 / std::abs(b);
	const double phi = std::copysign(std::min(std::abs(std::atan2(b, a)), cap), b);
	const Complex dir = std::polar(1.0, phi);
	const double decay = std::cos(phi);

	// ∫ over |t| <= 1 along the ray, with the common factor e^{iφz} removed: Σ (−c)^n / (n!(z+n)).
	Complex head = 0;
	Complex term = 1.0;
	for (int n = 0; n < 400; ++n)
	{
		const Complex contribution = term / (z + static_cast<double>(n));
		head += contribution;
		if (n > 4 && std::abs(contribution) < 1e-18 * std::abs(head))
			break;
		term *= -dir / static_cast<double>(n + 1);
	}

	// Tail ∫_1^R r^{z−1} e^{−r·c} dr. Pick R where the monotone envelope falls far below its peak.
	const double peak_r = std::max(1.0, (a - 1) / decay);
	const double log_peak = (a - 1) * std::log(peak_r) - peak_r * decay;
	const double log_target = log_peak + std::log(cfg.quad_tol) - 8.0;
	double upper = std::max(4.0, 2.0 * peak_r);
	while ((a - 1) * std::log(upper) - upper * decay - std::log(std::max(1e-3, decay - (a - 1) / upper)) >
		   log_target)
		upper *= 1.25;

	auto integrand = [&](double r) { return std::exp((z - 1.0) * std::log(r) - r * dir); };
	const double turns = (std::abs(std::sin(phi)) * (upper - 1) + std::abs(b) * std::log(upper)) / (2 * constants::pi);
	const int panels = static_cast<int>(std::min(4000.0, std::ceil(turns) + 4));
	const auto tail = integrate(integrand, 1.0, upper, 1e-300, 1e-2 * cfg.quad_tol, panels, 40000);

	const Complex scaled = head + tail.value;
	return detail::require_finite(std::exp(Complex(0, phi) * z) * scaled, "gamma_integral_oracle");
}

// ---------------------------------------------------------------------------------------------
// Elementary helpers

double checked_sinh(double x, double clamp)
{
	if (std::abs(x) > clamp)
		throw OverflowError("sinh argument beyond overflow clamp");
	return std::sinh(x);
}

double checked_cosh(double x, double clamp)
{
	if (std::abs(x) > clamp)
		throw OverflowError("cosh argument beyond overflow clamp");
	return std::cosh(x);
}

double coth(double x)
{
	if (x == 0)
		throw DomainError("coth: pole at 0");
	return 1.0 / std::tanh(x);
}

Complex cot(Complex z)
{
	const Complex i(0, 1);
	if (z.imag() >= 0)
	{
		const Complex e = std::exp(2.0 * i * z);
		return i * (e + 1.0) / (e - 1.0);
	}
	const Complex e = std::exp(-2.0 * i * z);
	return i * (1.0 + e) / (1.0 - e);
}

Complex sin_pi(Complex z)
{
	if (z.imag() == 0 && z.real() == std::floor(z.real()))
		return 0.0;
	return std::sin(constants::pi * z);
}

Complex root_of_sign(int m, int eps, int k)
{
	if (m < 1)
		throw DomainError("root_of_sign: m must be positive");
	if (eps != 1 && eps != -1)
		throw DomainError("root_of_sign: eps must be +1 or -1");
	if (k < 0 || k >= m)
		throw DomainError("root_of_sign: k must lie in [0, m)");
	const int numerator = eps == 1 ? 2 * k : 2 * k + 1;
	const int quarter = (4 * numerator) % (2 * m) == 0 ? (2 * numerator / m) % 4 : -1;
	switch (quarter)
	{
	case 0: return {1, 0};
	case 1: return {0, 1};
	case 2: return {-1, 0};
	case 3: return {0, -1};
	default: return std::polar(1.0, constants::pi * numerator / m);
	}
}

}  // namespace zetareg
