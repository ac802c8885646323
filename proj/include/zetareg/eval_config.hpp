#pragma once

namespace zetareg
{

/// Truncation and tolerance knobs shared by the direct-summation and quadrature oracles.
struct EvalConfig
{
	int trunc = 10000;            ///< partial-sum length N before the Euler–Maclaurin tail
	int em_order = 8;             ///< number of Bernoulli corrections J
	double quad_tol = 1e-10;      ///< quadrature tolerance
	double overflow_clamp = 700;  ///< |argument| above which exp-based helpers report overflow

	/// Throws DomainError unless N >= 8, 2 <= J <= 32, quad_tol in [1e-14, 1e-4] and clamp > 0.
	void validate() const;
};

}  // namespace zetareg
