#include "zetareg/regularized_products.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <boost/multiprecision/complex128.hpp>

namespace zetareg
{

namespace
{

constexpr int max_sweeps = 1000;
constexpr double cluster_tol = 1e-5;
constexpr double near_integer_tol = 1e-8;
constexpr double residual_limit = 1e-10;

/// Nearest non-positive integer to z when within `tol`, else 1.
long long near_nonpositive_integer(Complex z, double tol)
{
	const double n = std::round(z.real());
	if (n > 0 || std::abs(z - Complex(n, 0)) > tol)
		return 1;
	return static_cast<long long>(n);
}

Complex product_of_differences(const std::vector<Complex>& z, std::size_t i)
{
	Complex p = 1.0;
	for (std::size_t j = 0; j < z.size(); ++j)
		if (j != i)
			p *= z[i] - z[j];
	return p;
}

/// Q(t) by Horner in quad precision; in double the rounding of high-degree Q swamps the
/// iteration steps well before the roots are accurate.
Complex precise_value(const std::vector<Complex>& lower, Complex t)
{
	using Quad = boost::multiprecision::complex128;
	const Quad tq(t.real(), t.imag());
	Quad acc(1);
	for (auto it = lower.rbegin(); it != lower.rend(); ++it)
		acc = acc * tq + Quad(it->real(), it->imag());
	return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

}  // namespace

// ---------------------------------------------------------------------------------------------
// MonicPoly

MonicPoly::MonicPoly(std::vector<Complex> lower)
	: lower_(std::move(lower))
{
	if (lower_.empty())
		throw DomainError("MonicPoly: degree must be at least 1");
	if (degree() > max_degree)
		throw CapacityError("MonicPoly: degree above " + std::to_string(max_degree));
	for (const Complex& c : lower_)
		detail::require_finite(c, "MonicPoly");
}

MonicPoly MonicPoly::from_descending(const std::vector<Complex>& coeffs)
{
	if (coeffs.size() < 2)
		throw DomainError("MonicPoly: need the leading 1 and at least one more coefficient");
	if (coeffs.front() != Complex(1.0, 0.0))
		throw DomainError("MonicPoly: leading coefficient must be 1");
	return MonicPoly(std::vector<Complex>(coeffs.rbegin(), coeffs.rend() - 1));
}

MonicPoly MonicPoly::from_shifts(const std::vector<Complex>& shifts)
{
	if (shifts.empty())
		throw DomainError("MonicPoly: need at least one shift");
	std::vector<Complex> c{1.0};
	for (const Complex& d : shifts)
	{
		std::vector<Complex> next(c.size() + 1, 0.0);
		for (std::size_t k = 0; k < c.size(); ++k)
		{
			next[k] += d * c[k];
			next[k + 1] += c[k];
		}
		c = std::move(next);
	}
	c.pop_back();
	return MonicPoly(std::move(c));
}

MonicPoly MonicPoly::shifted_power(Complex x, int m, Complex c)
{
	if (m < 1)
		throw DomainError("MonicPoly: exponent must be positive");
	std::vector<Complex> lower(m);
	double binom = 1;  // C(m, k)
	for (int k = 0; k < m; ++k)
	{
		lower[k] = binom * std::pow(x, m - k);
		binom = binom * (m - k) / (k + 1);
	}
	if (x == 0.0)
		std::fill(lower.begin(), lower.end(), Complex(0.0));
	lower[0] -= c;
	return MonicPoly(std::move(lower));
}

std::vector<Complex> MonicPoly::ascending() const
{
	std::vector<Complex> c = lower_;
	c.emplace_back(1.0);
	return c;
}

Complex MonicPoly::operator()(Complex t) const
{
	Complex acc = 1.0;
	for (auto it = lower_.rbegin(); it != lower_.rend(); ++it)
		acc = acc * t + *it;
	return acc;
}

Complex MonicPoly::derivative(Complex t, int order) const
{
	const auto a = ascending();
	const int n = degree();
	if (order > n)
		return 0.0;
	Complex acc = 0;
	for (int j = n; j >= order; --j)
	{
		double falling = 1;  // j!/(j−order)!
		for (int i = 0; i < order; ++i)
			falling *= j - i;
		acc = acc * t + falling * a[j];
	}
	return acc;
}

MonicPoly operator*(const MonicPoly& p, const MonicPoly& q)
{
	const auto a = p.ascending();
	const auto b = q.ascending();
	std::vector<Complex> c(a.size() + b.size() - 1, 0.0);
	for (std::size_t i = 0; i < a.size(); ++i)
		for (std::size_t j = 0; j < b.size(); ++j)
			c[i + j] += a[i] * b[j];
	c.pop_back();
	return MonicPoly(std::move(c));
}

// ---------------------------------------------------------------------------------------------
// Root finding

ShiftSet find_shift_set(const MonicPoly& q)
{
	const int n = q.degree();
	ShiftSet result;
	if (n == 1)
	{
		result.shifts = {q.lower()[0]};
		return result;
	}

	// Start on a circle about the centroid of the roots with a Fujiwara-type radius.
	const auto& c = q.lower();
	double radius = 0;
	for (int k = 1; k <= n; ++k)
		radius = std::max(radius, std::pow(std::abs(c[n - k]), 1.0 / k));
	radius = std::max(radius, 1e-3);
	const Complex centre = -c[n - 1] / static_cast<double>(n);

	std::vector<Complex> z(n);
	for (int i = 0; i < n; ++i)
		z[i] = centre + std::polar(radius, 2 * constants::pi * i / n + 0.4);

	int sweep = 0;
	double previous = std::numeric_limits<double>::infinity();
	int stalled = 0;
	for (; sweep < max_sweeps; ++sweep)
	{
		double largest = 0;
		for (int i = 0; i < n; ++i)
		{
			const Complex denom = product_of_differences(z, i);
			if (denom == 0.0)
			{
				z[i] += std::polar(1e-8 * radius, 0.7 * i);
				largest = 1;
				continue;
			}
			const Complex step = precise_value(c, z[i]) / denom;
			z[i] -= step;
			largest = std::max(largest, std::abs(step) / std::max(1.0, std::abs(z[i])));
		}
		if (largest < 1e-15)
			break;
		// Near convergence the steps bottom out in rounding noise.
		stalled = (largest < 1e-10 && largest >= 0.5 * previous) ? stalled + 1 : 0;
		if (stalled >= 3)
			break;
		previous = largest;
	}
	result.iterations = sweep;

	// Merge clusters around multiple roots: their centroid is well conditioned.
	std::vector<int> label(n);
	std::iota(label.begin(), label.end(), 0);
	for (int i = 0; i < n; ++i)
		for (int j = i + 1; j < n; ++j)
			if (std::abs(z[i] - z[j]) < cluster_tol * std::max(1.0, std::abs(z[i])))
			{
				const int from = label[j];
				for (int& l : label)
					if (l == from)
						l = label[i];
			}
	// A root of multiplicity k is a simple root of Q^{(k−1)}; polish there, starting from the
	// cluster centroid.
	bool repeated = false;
	for (int i = 0; i < n; ++i)
	{
		if (label[i] != i)
			continue;
		Complex root = 0;
		int size = 0;
		for (int j = 0; j < n; ++j)
			if (label[j] == i)
			{
				root += z[j];
				++size;
			}
		root /= static_cast<double>(size);
		repeated = repeated || size > 1;
		for (int k = 0; k < 4; ++k)
		{
			const Complex f = size == 1 ? precise_value(c, root) : q.derivative(root, size - 1);
			const Complex df = q.derivative(root, size);
			if (df == 0.0)
				break;
			const Complex next = root - f / df;
			if (std::abs(size == 1 ? precise_value(c, next) : q.derivative(next, size - 1)) >= std::abs(f))
				break;
			root = next;
		}
		for (int j = 0; j < n; ++j)
			if (label[j] == i)
				z[j] = root;
	}

	result.shifts.resize(n);
	double zmax = 0;
	for (int i = 0; i < n; ++i)
	{
		result.shifts[i] = -z[i];
		zmax = std::max(zmax, std::abs(z[i]));
	}

	const int points = 2 * n + 1;
	for (int k = 0; k < points; ++k)
	{
		const Complex t = std::polar(1 + zmax, 2 * constants::pi * k / points + 0.3);
		Complex prod = 1.0;
		for (const Complex& d : result.shifts)
			prod *= t + d;
		const Complex qt = precise_value(c, t);
		result.residual = std::max(result.residual, std::abs(qt - prod) / std::max(1.0, std::abs(qt)));
	}
	if (!(result.residual < residual_limit))
		throw ConvergenceError("find_shift_set: factorization residual " + std::to_string(result.residual) +
							   " after " + std::to_string(sweep) + " sweeps");

	if (repeated)
		result.warnings.emplace_back("repeated shifts; product extended by continuity");
	for (const Complex& d : result.shifts)
		if (near_nonpositive_integer(d, near_integer_tol) <= 0)
			result.warnings.emplace_back("shift within 1e-8 of a non-positive integer");
	return result;
}

// ---------------------------------------------------------------------------------------------
// Products

const char* to_string(ProductMethod method)
{
	switch (method)
	{
	case ProductMethod::gamma_formula: return "gamma_formula";
	case ProductMethod::closed_form: return "closed_form";
	case ProductMethod::mellin_oracle: return "mellin_oracle";
	}
	return "unknown";
}

RegProduct regprod_shifts(const ShiftSet& shifts, int start_index)
{
	if (start_index != 0 && start_index != 1)
		throw DomainError("regprod: start index must be 0 or 1");
	RegProduct r;
	r.start_index = start_index;
	r.method = ProductMethod::gamma_formula;
	r.warnings = shifts.warnings;

	const double half_log_two_pi = 0.5 * constants::log_two_pi;
	double relative_error = 1e-15 * static_cast<double>(shifts.shifts.size());
	for (const Complex& d : shifts.shifts)
	{
		const Complex arg = d + static_cast<double>(start_index);
		if (near_nonpositive_integer(arg, 1e-12) <= 0)
			throw DomainError("regprod: Q(k) = 0 at k = " + std::to_string(std::llround(-d.real())));
		r.log_value += half_log_two_pi - log_gamma(arg);
		relative_error += std::abs(digamma(arg)) * std::max(shifts.residual, 1e-16) * std::max(1.0, std::abs(d));
	}
	r.value = detail::require_finite(std::exp(r.log_value), "regprod");
	r.error_estimate = relative_error * std::abs(r.value);
	return r;
}

RegProduct regprod_poly(const MonicPoly& q, int start_index)
{
	if (start_index != 0 && start_index != 1)
		throw DomainError("regprod: start index must be 0 or 1");
	const ShiftSet shifts = find_shift_set(q);
	for (const Complex& d : shifts.shifts)
	{
		const long long n = near_nonpositive_integer(d + static_cast<double>(start_index), near_integer_tol);
		if (n > 0)
			continue;
		const double k = static_cast<double>(start_index - n);
		double scale = std::pow(k, q.degree());
		for (int j = 0; j < q.degree(); ++j)
			scale += std::abs(q.lower()[j]) * std::pow(k, j);
		if (std::abs(q(k)) <= 1e-12 * scale)
			throw DomainError("regprod: Q(k) = 0 at k = " + std::to_string(static_cast<long long>(k)));
	}
	return regprod_shifts(shifts, start_index);
}

RegProduct regprod_power_form(Complex x, Complex y, int m, int eps, int root_choice, int start_index)
{
	if (m < 1)
		throw DomainError("regprod_power_form: m must be positive");
	if (start_index != 0 && start_index != 1)
		throw DomainError("regprod_power_form: start index must be 0 or 1");
	const Complex r = root_of_sign(m, eps, root_choice);
	RegProduct out;
	out.start_index = start_index;
	out.method = ProductMethod::gamma_formula;
	for (int j = 0; j < m; ++j)
	{
		const Complex xi = root_of_sign(m, 1, j);
		const Complex arg = x + static_cast<double>(start_index) - xi * r * y;
		if (near_nonpositive_integer(arg, 1e-12) <= 0)
			throw DomainError("regprod_power_form: a factor (k+x)^m - eps*y^m vanishes");
		out.log_value += std::log(lerch_L(arg).value);
	}
	out.value = detail::require_finite(std::exp(out.log_value), "regprod_power_form");
	out.error_estimate = 1e-14 * m * std::abs(out.value);
	return out;
}

Complex closed_form_quadratic(double y, double clamp)
{
	if (!(y > 0))
		throw DomainError("closed_form_quadratic: requires y > 0");
	const double r = std::sqrt(y);
	return 2 * r * checked_sinh(constants::pi * r, clamp);
}

Complex closed_form_quartic(double y, double clamp)
{
	if (!(y > 0))
		throw DomainError("closed_form_quartic: requires y > 0");
	const double a = std::sqrt(2.0) * constants::pi * std::pow(y, 0.25);
	if (a > clamp)
		throw OverflowError("closed_form_quartic: argument beyond overflow clamp");
	// cosh a − cos a = 2 sinh²(a/2) + 2 sin²(a/2), free of cancellation for small a.
	const double sh = std::sinh(0.5 * a);
	const double sn = std::sin(0.5 * a);
	return 2 / std::sqrt(y) * 2 * (sh * sh + sn * sn);
}

Complex multiplicativity_ratio(const MonicPoly& q1, const MonicPoly& q2, int start_index)
{
	const RegProduct joint = regprod_poly(q1 * q2, start_index);
	const RegProduct a = regprod_poly(q1, start_index);
	const RegProduct b = regprod_poly(q2, start_index);
	return std::exp(joint.log_value - a.log_value - b.log_value);
}

}  // namespace zetareg
