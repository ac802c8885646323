#pragma once

#include <complex>
#include <numbers>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "zetareg/errors.hpp"
#include "zetareg/eval_config.hpp"

namespace zetareg
{

using Complex = std::complex<double>;
using Rational = boost::multiprecision::cpp_rational;

namespace constants
{
inline constexpr double pi = std::numbers::pi;
inline constexpr double euler_gamma = std::numbers::egamma;
inline constexpr double sqrt_two_pi = 2.506628274631000502415765284811045253;
inline constexpr double log_two_pi = 1.837877066409345483560659472811235280;
}  // namespace constants

/// Exact Bernoulli numbers B_0 … B_{2·j_max} with B_1 = −1/2, built once on first use.
class BernoulliTable
{
public:
	static constexpr int j_max = 64;

	static const BernoulliTable& instance();

	/// B_n for 0 <= n <= 2·j_max; throws CapacityError otherwise.
	const Rational& exact(int n) const;
	double value(int n) const;
	long double long_value(int n) const;

private:
	BernoulliTable();

	std::vector<Rational> exact_;
	std::vector<double> value_;
	std::vector<long double> long_value_;
};

/// B_{2j}, 1 <= j <= j_max.
Rational bernoulli_even(int j);
double bernoulli_even_value(int j);

/// Principal branch of log Γ on Re z > 0; continued leftward through Γ(z+1) = zΓ(z).
Complex log_gamma(Complex z);
Complex gamma(Complex z);
/// 1/Γ(z); entire, exactly zero at the non-positive integers.
Complex reciprocal_gamma(Complex z);
Complex digamma(Complex z);
/// n-th derivative of the digamma function, 1 <= n <= 12.
Complex polygamma(int n, Complex z);

/// Γ(z) from the defining integral ∫_0^∞ t^{z−1}e^{−t}dt, Re z > 0.
///
/// The ray of integration is rotated towards the saddle when |Im z| is large so that the
/// integrand does not cancel; the piece on |t| < 1 is integrated term by term and the rest
/// by adaptive Gauss–Kronrod. Independent of the Stirling evaluation in log_gamma.
Complex gamma_integral_oracle(Complex z, const EvalConfig& cfg = {});

// Overflow-checked elementary helpers. They throw OverflowError when an exponent would
// exceed `clamp` instead of returning infinities.
double checked_sinh(double x, double clamp = 700);
double checked_cosh(double x, double clamp = 700);
double coth(double x);
Complex cot(Complex z);
Complex sin_pi(Complex z);

/// The k-th m-th root of ε = ±1, roots ordered by argument in [0, 2π). Quarter turns are exact.
Complex root_of_sign(int m, int eps, int k);

namespace detail
{
/// Throws OverflowError when z has a non-finite component.
Complex require_finite(Complex z, const char* what);
/// The non-positive integer z sits on, if any.
bool is_nonpositive_integer(Complex z, long long* which = nullptr);
}  // namespace detail

}  // namespace zetareg
