#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles/reference_values.hpp"
#include "oracles/theta_real.hpp"
#include "zetareg/hurwitz_lerch.hpp"

using namespace zetareg;

namespace
{
constexpr double pi = constants::pi;
double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_CASE("Hurwitz zeta against high-precision references")
{
	for (const auto& r : reference::hurwitz)
	{
		CAPTURE(r.s);
		CAPTURE(r.a);
		const Complex v = hurwitz_zeta(r.s, r.a);
		// Next to a zero of ζ only the absolute error is meaningful.
		CHECK(std::abs(v - r.value) < 1e-11 * std::max(1.0, std::abs(r.value)));
		if (std::abs(r.value) > 1e-10)
			CHECK(rel(v, r.value) < 1e-11);
	}
}

TEST_CASE("Hurwitz zeta special values")
{
	CHECK(rel(hurwitz_zeta(2.0, 1.0), pi * pi / 6) < 1e-14);
	CHECK(std::abs(hurwitz_zeta(3.0, 2.0) - hurwitz_zeta(3.0, 3.0) - 0.125) < 1e-14);
	CHECK(std::abs(hurwitz_zeta(0.0, 3.0) + 2.5) < 1e-14);
	for (double a : {0.1, 0.5, 1.7, 4.25, 9.0})
		CHECK(std::abs(hurwitz_zeta(0.0, a) - (0.5 - a)) < 1e-13);
}

TEST_CASE("Hurwitz zeta at negative integers is a Bernoulli polynomial")
{
	for (int n : {1, 2, 5, 8, 13})
		for (double a : {0.3, 1.0, 2.5})
		{
			CAPTURE(n);
			CAPTURE(a);
			const double expected = static_cast<double>(oracle::hurwitz_at_negative_integer(n, oracle::Real(a)));
			CHECK(std::abs(hurwitz_zeta(-static_cast<double>(n), a).real() - expected) < 1e-12 * std::max(1.0, std::abs(expected)));
		}
}

TEST_CASE("Hurwitz zeta errors and bookkeeping")
{
	try
	{
		hurwitz_zeta(1.0, 2.0);
		FAIL("expected a pole error");
	}
	catch (const PoleError& e)
	{
		CHECK(e.location() == 1.0);
	}
	CHECK_THROWS_AS(hurwitz_zeta(2.0, -1.0), DomainError);
	CHECK_THROWS_AS(hurwitz_zeta(2.0, -0.5), DomainError);
	CHECK_THROWS_AS(hurwitz_zeta(2.0, 0.0), DomainError);
	const HurwitzEval e = hurwitz_zeta_eval(Complex(3, 4), 0.5);
	CHECK(e.trunc > 0);
	CHECK(e.em_order >= 2);
	CHECK(e.value == hurwitz_zeta(Complex(3, 4), 0.5));
}

TEST_CASE("Hurwitz shift recurrence on random arguments")
{
	std::mt19937_64 rng(11);
	std::uniform_real_distribution<double> re_a(0.5, 10), im_a(-5, 5), unit(-1, 1);
	int checked = 0;
	double worst = 0;
	while (checked < 500)
	{
		const Complex s(10 * unit(rng), 10 * unit(rng));
		if (std::abs(s) > 10 || std::abs(s - 1.0) < 0.05)
			continue;
		const Complex a(re_a(rng), im_a(rng));
		const Complex z = hurwitz_zeta(s, a);
		worst = std::max(worst, std::abs(z - hurwitz_zeta(s, a + 1.0) - std::pow(a, -s)) / std::abs(z));
		++checked;
	}
	CHECK(worst < 1e-11);
}

TEST_CASE("derivative at zero")
{
	for (const auto& r : reference::hurwitz_ds0)
	{
		CAPTURE(r.a);
		CHECK(std::abs(hurwitz_zeta_ds0(r.a) - r.value) < 1e-12 * std::max(1.0, std::abs(r.value)));
	}
	CHECK(std::abs(hurwitz_zeta_ds0(1.0) + 0.5 * constants::log_two_pi) < 1e-14);
	CHECK(std::abs(hurwitz_zeta_ds0(2.0) + 0.5 * constants::log_two_pi) < 1e-14);
	CHECK(std::abs(hurwitz_zeta_ds0(0.5) + 0.5 * std::log(2.0)) < 1e-14);
	for (Complex a : {Complex(0.3, 0), Complex(2.2, 1.5), Complex(7, -9)})
		CHECK(std::abs(hurwitz_zeta_ds0(a) - (log_gamma(a) - 0.5 * constants::log_two_pi)) < 1e-11);
}

TEST_CASE("Lerch function values")
{
	CHECK(std::abs(lerch_L(1.0).value - constants::sqrt_two_pi) < 1e-12);
	CHECK(std::abs(lerch_L(0.5).value - std::sqrt(2.0)) < 1e-12);
	const LerchValue neg = lerch_L(-0.5);
	CHECK(std::abs(neg.value + std::sqrt(2.0) / 2) < 1e-12);
	CHECK(neg.shift_count == 1);
	CHECK(lerch_L(2.0).shift_count == 0);
	for (double z : {0.0, -1.0, -2.0, -7.0})
		CHECK(lerch_L(z).value == 0.0);
}

TEST_CASE("Lerch functional equation on random complex arguments")
{
	std::mt19937_64 rng(5);
	std::uniform_real_distribution<double> box(-8, 8);
	int checked = 0;
	double worst = 0;
	while (checked < 500)
	{
		const Complex x(box(rng), box(rng));
		if (std::abs(x) > 8)
			continue;
		const Complex l = lerch_L(x).value;
		worst = std::max(worst, std::abs(x * lerch_L(x + 1.0).value - l) / std::abs(l));
		++checked;
	}
	CHECK(worst < 1e-10);
}

TEST_CASE("Lerch function is positive on the positive axis")
{
	for (int i = 1; i <= 200; ++i)
	{
		const Complex v = lerch_L(0.1 * i).value;
		CHECK(std::abs(v.imag()) < 1e-12);
		CHECK(v.real() > 0);
	}
}

TEST_CASE("Lerch pair product")
{
	CHECK(lerch_pair_product(0.0) == 0.0);
	CHECK(std::abs(lerch_pair_product(0.5) + 1.0) < 1e-12);
	CHECK(std::abs(lerch_pair_product(0.25) + std::sqrt(2.0) / 4) < 1e-12);
	for (Complex x : {Complex(1.3, 0), Complex(-4.6, 0), Complex(2, 1.5), Complex(-0.7, -3)})
	{
		// The two factors evaluated separately.
		const Complex direct = lerch_L(x).value * lerch_L(-x).value;
		const Complex formula = -2.0 * x * sin_pi(x);
		CHECK(rel(lerch_pair_product(x), formula) < 1e-9);
		CHECK(rel(direct, formula) < 1e-9);
	}
}
