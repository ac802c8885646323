#pragma once

#include <string>
#include <vector>

#include "zetareg/hurwitz_lerch.hpp"

namespace zetareg
{

/// Monic polynomial t^ℓ + c_{ℓ−1}t^{ℓ−1} + … + c_0, stored by its lower coefficients.
class MonicPoly
{
public:
	static constexpr int max_degree = 32;

	/// `lower` holds c_0 … c_{ℓ−1} in ascending order; ℓ = lower.size() must lie in [1, 32].
	explicit MonicPoly(std::vector<Complex> lower);

	/// Coefficients in descending order starting with the leading 1, e.g. {1, 3, 2} = t² + 3t + 2.
	static MonicPoly from_descending(const std::vector<Complex>& coeffs);
	/// Π (t + d_i).
	static MonicPoly from_shifts(const std::vector<Complex>& shifts);
	/// (t + x)^m − c.
	static MonicPoly shifted_power(Complex x, int m, Complex c);

	int degree() const { return static_cast<int>(lower_.size()); }
	const std::vector<Complex>& lower() const { return lower_; }
	/// All ℓ+1 coefficients, ascending, with the trailing 1.
	std::vector<Complex> ascending() const;

	Complex operator()(Complex t) const;
	/// order-th derivative at t.
	Complex derivative(Complex t, int order = 1) const;

	friend MonicPoly operator*(const MonicPoly& p, const MonicPoly& q);

private:
	std::vector<Complex> lower_;
};

/// The multiset {d_i} with Q(t) = Π (t + d_i).
struct ShiftSet
{
	std::vector<Complex> shifts;
	double residual = 0;  ///< max relative |Q(t) − Π(t + d_i)| over the test points
	int iterations = 0;
	std::vector<std::string> warnings;
};

/// Simultaneous (Durand–Kerner) iteration for the roots of Q, negated into shifts.
///
/// Coincident roots are merged to their centroid; simple roots get a Newton polish. Throws
/// ConvergenceError if the factorization residual stays above 1e-10 after 1000 sweeps.
ShiftSet find_shift_set(const MonicPoly& q);

enum class ProductMethod
{
	gamma_formula,
	closed_form,
	mellin_oracle
};

const char* to_string(ProductMethod method);

/// A zeta-regularized product ⧉Π_{k>=start} b_k.
struct RegProduct
{
	Complex value;
	Complex log_value;  ///< one branch of log(value)
	int start_index = 0;
	ProductMethod method = ProductMethod::gamma_formula;
	double error_estimate = 0;
	std::vector<std::string> warnings;
};

/// ⧉Π_{k>=start} Q(k) = (2π)^{ℓ/2} / Π Γ(d_i + start).
///
/// Throws DomainError when Q(k) = 0 for some k >= start, and for start outside {0, 1}.
RegProduct regprod_poly(const MonicPoly& q, int start_index = 0);
RegProduct regprod_shifts(const ShiftSet& shifts, int start_index = 0);

/// ⧉Π_{k>=start} ((k + x)^m − ε y^m) = Π_{ξ^m=1} L(x + start − ξ ε^{1/m} y).
RegProduct regprod_power_form(Complex x, Complex y, int m, int eps, int root_choice = 0, int start_index = 0);

/// ⧉Π_{k>=0} (k² + y) = 2√y sinh(π√y).
Complex closed_form_quadratic(double y, double clamp = 700);
/// ⧉Π_{k>=1} (k⁴ + y) = 2y^{−1/2}(cosh(√2πy^{1/4}) − cos(√2πy^{1/4})).
Complex closed_form_quartic(double y, double clamp = 700);

/// ⧉Π Q1Q2 / (⧉Π Q1 · ⧉Π Q2).
Complex multiplicativity_ratio(const MonicPoly& q1, const MonicPoly& q2, int start_index = 0);

}  // namespace zetareg
