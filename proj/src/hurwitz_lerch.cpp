#include "zetareg/hurwitz_lerch.hpp"

#include <array>
#include <cmath>
#include <limits>

#include <boost/multiprecision/complex128.hpp>

#include "zetareg/compensated_sum.hpp"

namespace zetareg
{

namespace
{

constexpr int max_em_order = BernoulliTable::j_max - 1;
constexpr int max_trunc = 20000;
constexpr double log_eps_long = -43.7491167668927682;  // log(1e-19)
constexpr double log_eps_quad = -69.0775527898213705;  // log(1e-30)

/// log|w^{−s}|
double log_abs_power(Complex w, Complex s)
{
	return -s.real() * std::log(std::abs(w)) + s.imag() * std::arg(w);
}

using detail::BasicCompensatedSum;
using detail::CompensatedSum;

struct Truncation
{
	int n;
	int j;
	double log_scale;
};

/// Above this log-scale the partial sum is accumulated in quad precision.
constexpr double wide_scale_limit = 6.9;  // log(1e3)

template <class C, class R>
Complex euler_maclaurin(Complex s_in, Complex a_in, const Truncation& t)
{
	using std::exp;
	using std::log;
	const auto& bern = BernoulliTable::instance();
	const C s(R(s_in.real()), R(s_in.imag()));
	const C a(R(a_in.real()), R(a_in.imag()));
	BasicCompensatedSum<R> sum;
	for (int k = t.n - 1; k >= 0; --k)
		sum.add(exp(-s * log(a + R(k))));

	const C w = a + R(t.n);
	const C w_pow = exp(-s * log(w));  // w^{−s}
	sum.add(w * w_pow / (s - R(1)));
	sum.add(w_pow * R(0.5));

	const C inv_w2 = R(1) / (w * w);
	C poch = s;              // (s)_{2j−1}
	C power = w_pow / w;     // w^{−s−2j+1}
	R factorial = 2;         // (2j)!
	for (int j = 1; j <= t.j; ++j)
	{
		sum.add(poch * power * (R(bern.long_value(2 * j)) / factorial));
		poch *= (s + R(2 * j - 1)) * (s + R(2 * j));
		power *= inv_w2;
		factorial *= R(2 * j + 1) * R(2 * j + 2);
	}
	const C total = sum.template value<C>();
	return {static_cast<double>(total.real()), static_cast<double>(total.imag())};
}

/// Chooses (N, J) minimising the rounding scale of the partial sum subject to the first omitted
/// Euler–Maclaurin correction falling below it.
Truncation choose_truncation(Complex s, Complex a, double log_eps)
{
	const auto& bern = BernoulliTable::instance();
	// log|(s)_n| for n = 0 … 2·max_em_order + 1.
	std::array<double, 2 * max_em_order + 2> log_poch{};
	log_poch[0] = 0;
	for (int n = 1; n < static_cast<int>(log_poch.size()); ++n)
	{
		const double f = std::abs(s + static_cast<double>(n - 1));
		log_poch[n] = (f == 0 || log_poch[n - 1] == -std::numeric_limits<double>::infinity())
						  ? -std::numeric_limits<double>::infinity()
						  : log_poch[n - 1] + std::log(f);
	}
	const Complex sm1 = s - 1.0;
	auto log_scale = [&](int n) {
		const Complex w = static_cast<double>(n) + a;
		double scale = log_abs_power(w, s);
		scale = std::max(scale, log_abs_power(w, sm1) - std::log(std::abs(sm1)));
		if (n > 0)
		{
			scale = std::max(scale, log_abs_power(a, s));
			scale = std::max(scale, log_abs_power(a + static_cast<double>(n - 1), s));
		}
		return scale;
	};

	Truncation best{-1, -1, 0};
	double best_scale = std::numeric_limits<double>::infinity();
	for (int j = 2; j <= max_em_order; ++j)
	{
		if (s.real() + 2 * j + 1 <= 0)
			continue;
		const double b = std::abs(bern.value(2 * j + 2));
		const double log_coeff = std::log(b) - std::lgamma(2.0 * j + 3);
		const double lp = log_poch[2 * j + 1];
		auto log_error = [&](int n) {
			if (lp == -std::numeric_limits<double>::infinity())
				return lp;
			const Complex w = static_cast<double>(n) + a;
			return log_coeff + lp + log_abs_power(w, s + static_cast<double>(2 * j + 1));
		};
		auto acceptable = [&](int n) { return log_error(n) <= log_eps + log_scale(n); };
		if (!acceptable(max_trunc))
			continue;
		int lo = 0;
		int hi = max_trunc;
		if (acceptable(0))
			hi = 0;
		while (hi - lo > 1)
		{
			const int mid = lo + (hi - lo) / 2;
			(acceptable(mid) ? hi : lo) = mid;
		}
		const double scale = log_scale(hi);
		if (scale < best_scale - 1e-9 || (scale <= best_scale + 1e-9 && hi < best.n))
		{
			best_scale = scale;
			best = {hi, j, scale};
		}
	}
	if (best.n < 0)
		throw ConvergenceError("hurwitz_zeta: no Euler–Maclaurin truncation reaches double precision");
	return best;
}

void check_shift(Complex a, const char* what)
{
	if (detail::is_nonpositive_integer(a))
		throw DomainError(std::string(what) + ": shift a is a non-positive integer");
	if (!(a.real() > 0))
		throw DomainError(std::string(what) + ": requires Re a > 0 (pre-shift with the recurrence)");
}

}  // namespace

HurwitzEval hurwitz_zeta_eval(Complex s, Complex a, const EvalConfig& cfg)
{
	cfg.validate();
	if (s == Complex(1.0, 0.0))
		throw PoleError("hurwitz_zeta: pole at s = 1", 1.0);
	check_shift(a, "hurwitz_zeta");

	// The partial sum can exceed the result by many orders of magnitude when Re s < 0; such
	// cases are accumulated in quad precision with a correspondingly tighter truncation.
	Truncation t = choose_truncation(s, a, log_eps_long);
	Complex value;
	if (t.log_scale > wide_scale_limit)
	{
		t = choose_truncation(s, a, log_eps_quad);
		value = euler_maclaurin<boost::multiprecision::complex128, boost::multiprecision::float128>(s, a, t);
	}
	else
		value = euler_maclaurin<std::complex<long double>, long double>(s, a, t);
	return {s, a, detail::require_finite(value, "hurwitz_zeta"), t.j, t.n};
}

Complex hurwitz_zeta(Complex s, Complex a, const EvalConfig& cfg)
{
	return hurwitz_zeta_eval(s, a, cfg).value;
}

Complex hurwitz_zeta_ds0(Complex a, const EvalConfig& cfg)
{
	cfg.validate();
	check_shift(a, "hurwitz_zeta_ds0");
	constexpr int em_order = 12;
	const auto& bern = BernoulliTable::instance();

	int n = 0;
	while (std::abs(static_cast<double>(n) + a) < 20.0)
		++n;

	CompensatedSum sum;
	for (int k = n - 1; k >= 0; --k)
		sum.add(-std::log(static_cast<double>(k) + a));

	// d/ds at 0 of w^{1−s}/(s−1), ½w^{−s} and B_{2j}/(2j)!·(s)_{2j−1}·w^{−s−2j+1}.
	const Complex w = static_cast<double>(n) + a;
	const Complex log_w = std::log(w);
	sum.add(w * (log_w - 1.0));
	sum.add(-0.5 * log_w);
	const Complex inv_w = 1.0 / w;
	const Complex inv_w2 = inv_w * inv_w;
	Complex power = inv_w;
	for (int j = 1; j <= em_order; ++j)
	{
		sum.add(bern.value(2 * j) / (2.0 * j * (2.0 * j - 1)) * power);
		power *= inv_w2;
	}
	return detail::require_finite(sum.value(), "hurwitz_zeta_ds0");
}

LerchValue lerch_L(Complex x, const EvalConfig& cfg)
{
	if (x.real() > 0)
		return {x, detail::require_finite(std::exp(-hurwitz_zeta_ds0(x, cfg)), "lerch_L"), 0};

	const int shift = static_cast<int>(std::floor(-x.real())) + 1;
	Complex product = 1.0;
	for (int k = 0; k < shift; ++k)
		product *= static_cast<double>(k) + x;
	if (product == 0.0)
		return {x, 0.0, shift};
	const Complex shifted = std::exp(-hurwitz_zeta_ds0(x + static_cast<double>(shift), cfg));
	return {x, detail::require_finite(shifted * product, "lerch_L"), shift};
}

Complex lerch_pair_product(Complex x)
{
	return lerch_L(x).value * lerch_L(-x).value;
}

}  // namespace zetareg
