#pragma once

#include "zetareg/special_functions.hpp"

namespace zetareg
{

/// One Euler–Maclaurin evaluation of ζ_H(s, a) together with the truncation it used.
struct HurwitzEval
{
	Complex s;
	Complex a;
	Complex value;
	int em_order = 0;  ///< J, number of Bernoulli corrections
	int trunc = 0;     ///< N, length of the explicit partial sum
};

/// ζ_H(s, a) = Σ_{k>=0} (k+a)^{−s}, continued to s != 1 by Euler–Maclaurin summation.
///
/// N and J are picked per call so that the first omitted correction sits below the rounding
/// error of the partial sum. Requires Re a > 0; callers with Re a <= 0 shift with
/// ζ_H(s, a) = ζ_H(s, a+1) + a^{−s} first. Throws PoleError at s = 1.
HurwitzEval hurwitz_zeta_eval(Complex s, Complex a, const EvalConfig& cfg = {});
Complex hurwitz_zeta(Complex s, Complex a, const EvalConfig& cfg = {});

/// ∂ζ_H/∂s at s = 0, by differentiating the Euler–Maclaurin terms in s.
Complex hurwitz_zeta_ds0(Complex a, const EvalConfig& cfg = {});

/// L(x), the zeta-regularized product of (n + x), n >= 0.
struct LerchValue
{
	Complex x;
	Complex value;
	int shift_count = 0;  ///< n_x; zero when Re x > 0
};

/// exp(−∂_sζ_H(0, x)) for Re x > 0; continued to all of ℂ through
/// L(x) = L(x + n_x)·Π_{n<n_x}(n + x) with n_x = ⌊−Re x⌋ + 1. Exact zeros at 0, −1, −2, …
LerchValue lerch_L(Complex x, const EvalConfig& cfg = {});

/// L(x)·L(−x).
Complex lerch_pair_product(Complex x);

}  // namespace zetareg
