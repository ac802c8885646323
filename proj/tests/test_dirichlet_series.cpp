#include <doctest.h>

#include <cmath>

#include "zetareg/dirichlet_series.hpp"
#include "zetareg/hurwitz_lerch.hpp"
#include "zetareg/regularized_products.hpp"

using namespace zetareg;

namespace
{
constexpr double pi = constants::pi;
double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_CASE("power sums reduce to Hurwitz zeta when y = 0")
{
	CHECK(rel(power_sum_direct(1, 0.0, 0.0, 2.0), pi * pi / 6) < 1e-14);
	for (int m : {1, 2, 3})
		for (Complex s : {Complex(2.5, 0), Complex(1.2, 3), Complex(4, -7)})
			for (double x : {0.0, 0.5, 2.0})
			{
				if ((static_cast<double>(m) * s).real() <= 1)
					continue;
				CAPTURE(m);
				CAPTURE(s);
				CAPTURE(x);
				CHECK(rel(power_sum_direct(m, x, 0.0, s), hurwitz_zeta(static_cast<double>(m) * s, x + 1.0)) < 1e-12);
			}
}

TEST_CASE("power sums with a shift against a binomial Hurwitz expansion")
{
	// Σ (k² + y)^{−s} = Σ_r C(−s, r) y^r ζ_H(2s + 2r, 1) for |y| < 1.
	const Complex s(1.5, 2.0);
	const double y = 0.3;
	Complex expected = 0;
	Complex binom = 1;
	for (int r = 0; r < 60; ++r)
	{
		expected += binom * std::pow(y, r) * hurwitz_zeta(2.0 * s + 2.0 * r, 1.0);
		binom *= (-s - static_cast<double>(r)) / static_cast<double>(r + 1);
	}
	CHECK(rel(power_sum_direct(2, 0.0, y, s), expected) < 1e-12);
}

TEST_CASE("power sum domain")
{
	CHECK_THROWS_AS(power_sum_direct(2, -1.5, 0.0, 2.0), DomainError);
	CHECK_THROWS_AS(power_sum_direct(2, 0.0, 1.0, 0.5), DomainError);
	CHECK_THROWS_AS(power_sum_direct(2, 0.0, -4.0, 2.0), DomainError);
	CHECK_THROWS_AS(power_sum_direct(0, 0.0, 1.0, 2.0), DomainError);
	double bound = -1;
	power_sum_direct(2, 0.0, 1.0, 1.0, {}, &bound);
	CHECK(bound >= 0);
	CHECK(bound < 1e-15);
}

TEST_CASE("direct sums")
{
	const SeriesSum s = sum_direct(2, 0.0, 1.0);
	CHECK(std::abs(s.value - 1.0766740474685812) < 1e-14);
	CHECK(s.method == SeriesMethod::direct_em);
	CHECK(std::string(to_string(s.method)) == "direct_em");
	CHECK(std::abs(sum_direct(2, 0.0, 1e-4).value - pi * pi / 6) < 2e-4);
	for (double y : {0.25, 1.0, 4.0, 9.0})
	{
		const double r = std::sqrt(y);
		CHECK(std::abs(sum_direct(2, 0.0, y).value - (-0.5 / y + pi / (2 * r) * coth(pi * r))) < 1e-10);
	}
}

TEST_CASE("digamma form agrees with direct summation")
{
	for (int m : {2, 3, 4, 5})
		for (Complex x : {Complex(0), Complex(0.5), Complex(1), Complex(0.3, 0.4)})
			for (Complex y : {Complex(0.25), Complex(1), Complex(2), Complex(-0.5, 1)})
			{
				CAPTURE(m);
				CAPTURE(x);
				CAPTURE(y);
				const Complex direct = sum_direct(m, x, y).value;
				CHECK(rel(sum_digamma(m, x, y).value, direct) < 1e-9);
				for (int root = 1; root < m; ++root)
					CHECK(std::abs(sum_digamma(m, x, y, SignConvention::corrected, root).value - direct) < 1e-10);
			}
	const SeriesSum d = sum_digamma(3, 0.5, 1.0);
	CHECK(d.method == SeriesMethod::digamma_form);
	// The printed leading sign flips the whole sum.
	CHECK(sum_digamma(3, 0.5, 1.0, SignConvention::as_printed).value == -d.value);
	CHECK_THROWS_AS(sum_digamma(1, 0.0, 1.0), DomainError);
	CHECK_THROWS_AS(sum_digamma(2, 0.0, 0.0), DomainError);
}

TEST_CASE("derivative of the log product is the series")
{
	for (int m : {2, 4})
		for (double y : {0.5, 0.8, 1.3, 2.0})
		{
			constexpr double h = 1e-4;
			auto f = [m](double v) { return std::log(regprod_power_form(0.0, std::pow(v, 1.0 / m), m, -1, 0, 1).value); };
			const Complex fd = (-f(y + 2 * h) + 8.0 * f(y + h) - 8.0 * f(y - h) + f(y - 2 * h)) / (12 * h);
			CHECK(std::abs(fd - sum_direct(m, 0.0, y).value) < 1e-6);
		}
}

TEST_CASE("coth identity")
{
	for (double y : {1.0, -1.0, 0.1, 0.37, 2.5, 10.0})
	{
		CAPTURE(y);
		CHECK(coth_identity_residual(y) < 1e-10);
	}
	CHECK(coth_identity_residual(1.0) == doctest::Approx(coth_identity_residual(-1.0)).epsilon(1e-3));
	CHECK_THROWS_AS(coth_identity(0.0), DomainError);
}

TEST_CASE("bilateral sum against a symmetric two-sided truncation")
{
	const double y = 0.7;
	constexpr long K = 1'000'000;
	double sum = 0;
	for (long k = K; k >= 1; --k)
		sum += 2 * (2 * y / (static_cast<double>(k) * k + y * y));
	sum += 2 * y / (y * y);
	// Σ_{|k|>K} 2y/(k²+y²) ≈ 4y/(K + 1/2).
	sum += 4 * y / (K + 0.5);
	CHECK(std::abs(coth_identity(y).lhs - sum / (2 * pi)) < 1e-12);
}

TEST_CASE("quartic identity")
{
	for (int i = 0; i < 20; ++i)
	{
		const double y = 0.1 + 4.9 * i / 19;
		CAPTURE(y);
		CHECK(quartic_identity_residual(y) < 1e-9);
		CHECK(quartic_identity_residual(-y) < 1e-9);
	}
	const auto corrected = quartic_identity(1.0);
	const auto printed = quartic_identity(1.0, SignConvention::as_printed);
	CHECK(std::abs(printed.lhs - 2.0 * corrected.lhs) < 1e-14);
	CHECK(quartic_identity_residual(1.0, SignConvention::as_printed) > 0.1);
}

TEST_CASE("cot sum identity")
{
	CHECK(cot_sum_identity_residual(3, 0.5) < 1e-9);
	CHECK(cot_sum_identity_residual(4, 1.25) < 1e-9);
	for (int n : {3, 4, 5})
		for (int i = 0; i < 10; ++i)
		{
			const double y = 0.2 + 0.45 * i;
			CAPTURE(n);
			CAPTURE(y);
			CHECK(cot_sum_identity_residual(n, y) < 1e-9);
		}
	CHECK(cot_sum_identity_residual(3, 0.5, SignConvention::as_printed) > 1e-3);
	// e^{0} = 1 is among the printed roots, so cot(πy) has a pole at y = 1.
	CHECK_THROWS_AS(cot_sum_identity(3, 1.0, SignConvention::as_printed), DomainError);
	CHECK_THROWS_AS(cot_sum_identity(2, 0.5), DomainError);
}

TEST_CASE("cot sum near zero reproduces zeta(6)")
{
	const int n = 3;
	const double y = 0.05;
	const Complex rhs = cot_sum_identity(n, y).rhs;
	const Complex coefficient = (rhs - n / (pi * y)) / (2 * n / pi * std::pow(y, 2 * n - 1));
	CHECK(rel(coefficient, std::pow(pi, 6) / 945) < 1e-6);
}

TEST_CASE("Euler's even zeta values")
{
	CHECK(rel(euler_even_zeta(1), pi * pi / 6) < 1e-15);
	CHECK(rel(euler_even_zeta(2), std::pow(pi, 4) / 90) < 1e-15);
	CHECK(rel(euler_even_zeta(5), std::pow(pi, 10) / 93555) < 1e-15);
	for (int j = 1; j <= 6; ++j)
		CHECK(rel(euler_even_zeta(j), power_sum_direct(1, 0.0, 0.0, 2.0 * j)) < 1e-10);
	for (int j = 1; j <= 4; ++j)
		CHECK(rel(euler_even_zeta_from_coth(j), euler_even_zeta(j)) < 1e-8);
	CHECK_THROWS_AS(euler_even_zeta(65), CapacityError);
	CHECK_THROWS_AS(euler_even_zeta_from_coth(13), CapacityError);
}

TEST_CASE("Hurwitz zeta through polygamma")
{
	CHECK(rel(hurwitz_via_polygamma(2, 1.0), pi * pi / 6) < 1e-14);
	CHECK(rel(hurwitz_via_polygamma(3, 1.0), 1.2020569031595943) < 1e-14);
	CHECK(rel(hurwitz_via_polygamma(2, 0.5), pi * pi / 2) < 1e-14);
	for (int m = 2; m <= 13; ++m)
	{
		const Complex x(1.7, 0.6);
		CHECK(rel(hurwitz_via_polygamma(m, x), hurwitz_zeta(static_cast<double>(m), x)) < 1e-12);
		CHECK(hurwitz_via_polygamma(m, x, SignConvention::as_printed) == -hurwitz_via_polygamma(m, x));
	}
	CHECK_THROWS_AS(hurwitz_via_polygamma(14, 1.0), CapacityError);
	CHECK_THROWS_AS(hurwitz_via_polygamma(2, -1.0), PoleError);
}
