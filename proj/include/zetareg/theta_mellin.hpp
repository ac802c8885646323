#pragma once

#include <vector>

#include "zetareg/dirichlet_series.hpp"

namespace zetareg
{

/// θ_m(t, x; y) = Σ_{k>=1} exp(−((k + x)^m + y)t) together with its decay data:
/// |θ(t)| <= C·e^{−κt} for t >= 1.
struct ThetaSeries
{
	int m = 1;
	double x = 0;
	Complex y;
	double kappa = 0;         ///< (1 + x)^m + Re y
	double decay_const = 0;   ///< C

	/// Leading small-t exponent i(θ) = −1/m.
	double index() const { return -1.0 / m; }
};

/// Requires m >= 1 and x >= 0.
ThetaSeries make_theta_series(int m, double x, Complex y);

/// Direct summation; stops once a geometric bound on the dropped tail is below 1e-17 of the sum.
Complex theta_eval(const ThetaSeries& ts, double t);

/// One term coeff·t^exponent of a small-t expansion.
struct ExpansionTerm
{
	double exponent;
	Complex coeff;
};

/// θ(t) ~ Σ_j a_j t^{j−1/m} + Σ_k c_k t^k as t → 0⁺.
///
/// The fractional series is Γ(1+1/m)·t^{−1/m}·e^{−yt}; the integer one has
/// c_k(x; 0) = (−1)^k ζ_H(−mk, x+1)/k!, multiplied out against e^{−yt}.
struct AsymptoticExpansion
{
	int m = 1;
	int order = 0;                    ///< K
	Complex leading_coeff;            ///< a_0 = Γ(1 + 1/m)
	std::vector<Complex> coeffs;      ///< c_0 … c_K
	std::vector<Complex> fractional;  ///< a_0 … a_K, and a_{K+1} when m = 1

	/// Every term with exponent <= max_exponent, equal exponents merged, sorted.
	std::vector<ExpansionTerm> terms(double max_exponent) const;
	/// Sum of the terms with exponent <= order.
	Complex operator()(double t) const;
};

/// Requires 0 <= K <= 20.
AsymptoticExpansion theta_asymptotic(const ThetaSeries& ts, int order);

/// ζ_m(s, x; y) = Σ_{k>=1} ((k+x)^m + y)^{−s}, continued by the Mellin transform of θ.
///
/// The piece t < δ is integrated term by term from the small-t expansion, the rest numerically
/// in log t. Poles at s = 1/m and, for y != 0 and m >= 2, at s = 1/m − j.
Complex mellin_zeta(const ThetaSeries& ts, Complex s, const EvalConfig& cfg = {});

/// exp(−∂_sζ_m(0, x; y)) = ⧉Π_{k>=1} ((k+x)^m + y), differentiating the Mellin split exactly.
Complex mellin_regprod_oracle(const ThetaSeries& ts, const EvalConfig& cfg = {});

/// θ₂(t) and √(π/t)θ₂(π²/t) + ½√(π/t) − ½ for θ₂(t) = θ_2(t, 0; 0).
IdentitySides poisson_theta2(double t);
double poisson_check_theta2(double t);

}  // namespace zetareg
