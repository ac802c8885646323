#pragma once

#include "zetareg/special_functions.hpp"

namespace zetareg
{

/// Which form of a misprinted identity to use: the one that agrees with direct summation, or
/// the literal printed one (kept for reproducing the discrepancy).
enum class SignConvention
{
	corrected,
	as_printed
};

enum class SeriesMethod
{
	direct_em,
	digamma_form,
	trig_form
};

const char* to_string(SeriesMethod method);

/// A value of Σ_{k>=1} 1/((k + x)^m + y).
struct SeriesSum
{
	int m = 0;
	Complex x;
	Complex y;
	Complex value;
	SeriesMethod method = SeriesMethod::direct_em;
	double tail_bound = 0;  ///< size of the first omitted correction
};

/// Σ_{k>=1} ((k + x)^m + y)^{−s}: cfg.trunc explicit terms plus an Euler–Maclaurin tail of order
/// cfg.em_order. The tail integral is expanded binomially in y(k+x)^{−m}. Requires Re x > −1,
/// a non-vanishing base for every k >= 1, and Re(ms) > 1.
Complex power_sum_direct(int m, Complex x, Complex y, Complex s, const EvalConfig& cfg = {},
						 double* tail_bound = nullptr);

/// Σ_{k>=1} 1/((k + x)^m + y) by direct summation with Euler–Maclaurin tail.
SeriesSum sum_direct(int m, Complex x, Complex y, const EvalConfig& cfg = {});

/// (σ/m)·Σ_{ξ^m=1} ξω y^{1/m−1} Ψ(x − ξω y^{1/m} + 1), ω the root_choice-th m-th root of −1.
/// σ = +1 when corrected, −1 as printed. Requires m >= 2 and y != 0.
SeriesSum sum_digamma(int m, Complex x, Complex y, SignConvention sign = SignConvention::corrected,
					  int root_choice = 0);

/// Left- and right-hand side of a two-sided identity.
struct IdentitySides
{
	Complex lhs;
	Complex rhs;

	double residual() const { return std::abs(lhs - rhs); }
};

/// (1/2π)Σ_{k∈ℤ} 2y/(k² + y²) against coth(πy).
IdentitySides coth_identity(double y, const EvalConfig& cfg = {});
double coth_identity_residual(double y, const EvalConfig& cfg = {});

/// c·Σ_{k∈ℤ} 4y³/(k⁴ + y⁴) against (sinh a + sin a)/(cosh a − cos a), a = √2πy, with
/// c = 1/(2π√2) corrected or 1/(π√2) as printed.
IdentitySides quartic_identity(double y, SignConvention sign = SignConvention::corrected,
							   const EvalConfig& cfg = {});
double quartic_identity_residual(double y, SignConvention sign = SignConvention::corrected,
								 const EvalConfig& cfg = {});

/// (n/π)Σ_{k∈ℤ} y^{2n−1}/(k^{2n} + y^{2n}) against Σ_{l<n} ω_l cot(πω_l y), where ω_l runs over
/// e^{πi(2l+1)/(2n)} when corrected and e^{πil/n} as printed. Throws DomainError within 1e-6
/// of a cot pole.
IdentitySides cot_sum_identity(int n, double y, SignConvention sign = SignConvention::corrected,
							   const EvalConfig& cfg = {});
double cot_sum_identity_residual(int n, double y, SignConvention sign = SignConvention::corrected,
								 const EvalConfig& cfg = {});

/// ζ(2j) = (−1)^{j+1} 2^{2j−1} π^{2j} B_{2j} / (2j)!.
Complex euler_even_zeta(int j);

/// ζ(2j) read off the Taylor coefficients of πy·coth(πy) = 1 + 2Σ(−1)^{j+1}ζ(2j)y^{2j}, the
/// coefficients taken by the trapezoid rule on a circle about y = 0.
Complex euler_even_zeta_from_coth(int j);

/// σ'Ψ^{(m−1)}(x)/(m−1)! with σ' = (−1)^m corrected, (−1)^{m−1} as printed; equals ζ_H(m, x)
/// for the corrected sign. Requires 2 <= m <= 13.
Complex hurwitz_via_polygamma(int m, Complex x, SignConvention sign = SignConvention::corrected);

}  // namespace zetareg
