#include "zetareg/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <thread>

#include "zetareg/cli_support.hpp"
#include "zetareg/hurwitz_lerch.hpp"
#include "zetareg/quadrature.hpp"
#include "zetareg/regularized_products.hpp"
#include "zetareg/theta_mellin.hpp"

namespace zetareg
{

namespace
{

using Json = nlohmann::ordered_json;
using Task = std::function<VerificationReport()>;

constexpr double pi = constants::pi;

std::string complex_field(Complex z) { return format_complex(z); }

/// Wraps a row computation so that a library error becomes a failed row instead of aborting the run.
Task guarded(std::string id, Json point, double tol, std::string methods, std::function<std::pair<Complex, Complex>()> f)
{
	return [=]() {
		try
		{
			auto [lhs, rhs] = f();
			return make_report(id, point, lhs, rhs, tol, methods);
		}
		catch (const std::exception& e)
		{
			VerificationReport r;
			r.identity_id = id;
			r.grid_point = point;
			r.lhs = r.rhs = Complex(std::nan(""), std::nan(""));
			r.abs_residual = r.rel_residual = std::numeric_limits<double>::infinity();
			r.tolerance = tol;
			r.method_pair = methods;
			r.error = e.what();
			return r;
		}
	};
}

bool sign_corrected(const VerifyOptions& o) { return o.sign == SignConvention::corrected; }
const char* sign_name(const VerifyOptions& o) { return sign_corrected(o) ? "corrected" : "as_printed"; }

void lerch_suite(const VerifyOptions& o, std::vector<Task>& tasks)
{
	const EvalConfig cfg = o.cfg;
	for (int i = 1; i <= 50; ++i)
	{
		const double x = i / 10.0;
		tasks.push_back(guarded("lerch_formula", Json{{"x", x}}, 1e-9, "hurwitz_ds0*gamma|sqrt_2pi", [=] {
			return std::pair{std::exp(-hurwitz_zeta_ds0(x, cfg)) * gamma(x), Complex(constants::sqrt_two_pi)};
		}));
	}
	if (o.grid == Grid::fast)
		return;

	tasks.push_back(guarded("lerch_at_one", Json{{"x", 1}}, 1e-12, "lerch_L|sqrt_2pi", [=] {
		return std::pair{lerch_L(1.0, cfg).value, Complex(constants::sqrt_two_pi)};
	}));

	// Printed variant carries the opposite sign on the right.
	const double pair_sign = sign_corrected(o) ? -2.0 : 2.0;
	for (double x : {0.25, 0.5, 0.75, 1.3, 2.6, 3.7, 4.2, 5.5, -0.35, -2.4})
		tasks.push_back(guarded("lerch_pair_product", Json{{"x", x}, {"sign", sign_name(o)}}, 1e-9,
								"lerch_L*lerch_L|sin", [=] {
									return std::pair{lerch_pair_product(x), Complex(pair_sign * x * std::sin(pi * x))};
								}));

	std::mt19937_64 rng(20240611);
	std::uniform_real_distribution<double> box(-8, 8);
	for (int i = 0; i < 40; ++i)
	{
		Complex x;
		do
			x = {box(rng), box(rng)};
		while (std::abs(x) > 8 || std::abs(x.imag()) < 0.05);
		tasks.push_back(guarded("lerch_shift", Json{{"x", complex_field(x)}}, 1e-10, "x*L(x+1)|L(x)", [=] {
			return std::pair{x * lerch_L(x + 1.0, cfg).value, lerch_L(x, cfg).value};
		}));
	}

	std::uniform_real_distribution<double> unit(-1, 1);
	for (int i = 0; i < 40; ++i)
	{
		Complex z;
		do
			z = {8 * unit(rng), 8 * unit(rng)};
		while (std::abs(z) > 8 || std::abs(z - std::round(z.real())) < 0.05);
		tasks.push_back(guarded("reflection", Json{{"z", complex_field(z)}}, 1e-9, "reciprocal_gamma|sin", [=] {
			return std::pair{reciprocal_gamma(z) * reciprocal_gamma(-z), -z / pi * sin_pi(z)};
		}));
	}

	tasks.push_back(guarded("log_gamma_integral", Json{{"a", 0}, {"b", 1}}, 1e-9, "gauss_kronrod|half_log_2pi", [=] {
		// log Γ(x) = log Γ(x+1) − log x, and ∫_0^1 log x dx = −1.
		auto f = [](double x) { return log_gamma(Complex(x + 1)).real(); };
		const Complex value = integrate(f, 0.0, 1.0, 1e-14, 1e-14).value + 1.0;
		return std::pair{value, Complex(0.5 * constants::log_two_pi)};
	}));

	for (int i = 0; i < 20; ++i)
	{
		const Complex s(10 * unit(rng), 10 * unit(rng));
		const Complex a(0.5 + 9.5 * (unit(rng) + 1) / 2, 2 * unit(rng));
		if (std::abs(s - 1.0) < 0.1)
			continue;
		tasks.push_back(guarded("hurwitz_shift", Json{{"s", complex_field(s)}, {"a", complex_field(a)}}, 1e-11,
								"hurwitz(a)|hurwitz(a+1)+a^-s", [=] {
									return std::pair{hurwitz_zeta(s, a, cfg), hurwitz_zeta(s, a + 1.0, cfg) + std::pow(a, -s)};
								}));
	}
}

void regprod_suite(const VerifyOptions& o, std::vector<Task>& tasks)
{
	const double clamp = o.cfg.overflow_clamp;
	for (double y : {0.25, 0.5, 1.0, 2.0, 4.0})
	{
		tasks.push_back(guarded("regprod_quadratic", Json{{"y", y}, {"start", 0}}, 1e-10, "gamma_formula|closed_form", [=] {
			return std::pair{regprod_poly(MonicPoly::from_descending({1, 0, y}), 0).value, closed_form_quadratic(y, clamp)};
		}));
		tasks.push_back(guarded("regprod_quartic", Json{{"y", y}, {"start", 1}}, 1e-10, "gamma_formula|closed_form", [=] {
			return std::pair{regprod_poly(MonicPoly::from_descending({1, 0, 0, 0, y}), 1).value, closed_form_quartic(y, clamp)};
		}));
	}

	std::mt19937_64 rng(7);
	std::uniform_real_distribution<double> re(0.5, 5), im(-3, 3);
	std::uniform_int_distribution<int> deg(1, 3);
	const int pairs = o.grid == Grid::dense ? 50 : 10;
	for (int i = 0; i < pairs; ++i)
	{
		auto draw = [&] {
			std::vector<Complex> d(deg(rng));
			for (auto& v : d)
				v = {re(rng), im(rng)};
			return d;
		};
		const auto d1 = draw();
		const auto d2 = draw();
		Json point{{"pair", i}, {"shifts1", Json::array()}, {"shifts2", Json::array()}};
		for (auto v : d1)
			point["shifts1"].push_back(complex_field(v));
		for (auto v : d2)
			point["shifts2"].push_back(complex_field(v));
		tasks.push_back(guarded("multiplicativity", point, 1e-9, "ratio|one", [=] {
			return std::pair{multiplicativity_ratio(MonicPoly::from_shifts(d1), MonicPoly::from_shifts(d2), 0), Complex(1)};
		}));
	}

	for (int m : {2, 3, 4, 5})
		for (double x : {0.5, 1.0, 2.0})
			for (double y : {0.25, 1.0, 2.0})
				for (int eps : {1, -1})
				{
					// With ε = 1 the factor at k = y − x vanishes; those products are undefined.
					const double k = y - x;
					if (eps == 1 && k >= 0 && k == std::floor(k))
						continue;
					tasks.push_back(guarded("gammam_consistency", Json{{"m", m}, {"x", x}, {"y", y}, {"eps", eps}}, 1e-9,
											"power_form|root_finder", [=] {
												const Complex c = static_cast<double>(eps) * std::pow(y, m);
												return std::pair{regprod_power_form(x, y, m, eps, 0, 0).value,
																 regprod_poly(MonicPoly::shifted_power(x, m, c), 0).value};
											}));
				}

	for (int m : {2, 3, 4, 5})
		for (int eps : {1, -1})
			for (int root = 1; root < m; ++root)
				tasks.push_back(guarded("root_choice", Json{{"m", m}, {"x", 0.5}, {"y", 1.3}, {"eps", eps}, {"root", root}},
										1e-10, "power_form(root)|power_form(0)", [=] {
											return std::pair{regprod_power_form(0.5, 1.3, m, eps, root, 0).value,
															 regprod_power_form(0.5, 1.3, m, eps, 0, 0).value};
										}));
}

/// Fourth-order central difference of log ⧉Π_{k>=1}(k^m + y) in y.
Complex log_product_slope(int m, double y)
{
	constexpr double h = 1e-4;
	auto f = [m](double v) { return std::log(regprod_power_form(0.0, std::pow(v, 1.0 / m), m, -1, 0, 1).value); };
	return (-f(y + 2 * h) + 8.0 * f(y + h) - 8.0 * f(y - h) + f(y - 2 * h)) / (12 * h);
}

void series_suite(const VerifyOptions& o, std::vector<Task>& tasks)
{
	const EvalConfig cfg = o.cfg;
	const SignConvention sign = o.sign;
	for (int m : {2, 3, 4, 5})
		for (double x : {0.0, 0.5, 1.0})
			for (double y : {0.25, 1.0, 2.0})
				tasks.push_back(guarded("gen_euler", Json{{"m", m}, {"x", x}, {"y", y}, {"sign", sign_name(o)}}, 1e-9,
										"digamma_form|direct_em", [=] {
											return std::pair{sum_digamma(m, x, y, sign).value, sum_direct(m, x, y, cfg).value};
										}));

	for (int i = 0; i < 20; ++i)
	{
		const double y = 0.1 * std::pow(100.0, i / 19.0);
		tasks.push_back(guarded("coth_identity", Json{{"y", y}}, 1e-10, "bilateral_sum|coth", [=] {
			const auto sides = coth_identity(y, cfg);
			return std::pair{sides.lhs, sides.rhs};
		}));
	}
	for (int i = 0; i < 20; ++i)
	{
		const double y = 0.1 + 4.9 * i / 19.0;
		tasks.push_back(guarded("quartic_identity", Json{{"y", y}, {"sign", sign_name(o)}}, 1e-9, "bilateral_sum|trig", [=] {
			const auto sides = quartic_identity(y, sign, cfg);
			return std::pair{sides.lhs, sides.rhs};
		}));
	}
	for (int n : {3, 4, 5})
		for (int i = 0; i < 10; ++i)
		{
			const double y = 0.15 + 0.37 * i;
			tasks.push_back(guarded("cot_sum_identity", Json{{"n", n}, {"y", y}, {"sign", sign_name(o)}}, 1e-9,
									"bilateral_sum|cot_sum", [=] {
										const auto sides = cot_sum_identity(n, y, sign, cfg);
										return std::pair{sides.lhs, sides.rhs};
									}));
		}

	for (int j = 1; j <= 6; ++j)
		tasks.push_back(guarded("euler_zeta", Json{{"j", j}}, 1e-10, "bernoulli|direct_em", [=] {
			return std::pair{euler_even_zeta(j), power_sum_direct(1, 0.0, 0.0, 2.0 * j, cfg)};
		}));
	for (int j = 1; j <= 4; ++j)
		tasks.push_back(guarded("euler_zeta_laurent", Json{{"j", j}}, 1e-8, "coth_taylor|bernoulli", [=] {
			return std::pair{euler_even_zeta_from_coth(j), euler_even_zeta(j)};
		}));

	for (int m : {2, 3, 4})
		for (double x : {1.0, 0.5, 2.5})
			tasks.push_back(guarded("hurwitz_polygamma", Json{{"m", m}, {"x", x}, {"sign", sign_name(o)}}, 1e-10,
									"polygamma|hurwitz", [=] {
										return std::pair{hurwitz_via_polygamma(m, x, sign), hurwitz_zeta(static_cast<double>(m), x, cfg)};
									}));

	for (int m : {2, 4})
		for (double y : {0.5, 1.0, 1.5, 2.0})
			tasks.push_back(guarded("log_product_derivative", Json{{"m", m}, {"x", 0}, {"y", y}}, 1e-6,
									"finite_difference|direct_em", [=] {
										return std::pair{log_product_slope(m, y), sum_direct(m, 0.0, y, cfg).value};
									}));

	for (double y : {0.25, 1.0, 4.0, 9.0})
		tasks.push_back(guarded("quadratic_series", Json{{"y", y}}, 1e-10, "direct_em|coth", [=] {
			const double r = std::sqrt(y);
			return std::pair{sum_direct(2, 0.0, y, cfg).value, Complex(-0.5 / y + pi / (2 * r) * coth(pi * r))};
		}));
}

void theta_suite(const VerifyOptions& o, std::vector<Task>& tasks)
{
	const EvalConfig cfg = o.cfg;
	const bool corrected = sign_corrected(o);
	for (double t : {0.01, 0.1, 1.0, pi, 10.0, 100.0})
		tasks.push_back(guarded("poisson_theta2", Json{{"t", t}, {"sign", sign_name(o)}}, 1e-12, "direct|dual", [=] {
			if (corrected)
			{
				const auto sides = poisson_theta2(t);
				return std::pair{sides.lhs, sides.rhs};
			}
			const ThetaSeries ts = make_theta_series(2, 0, 0.0);
			return std::pair{theta_eval(ts, t), std::sqrt(pi / t) * theta_eval(ts, 1 / t) - 0.5};
		}));

	// 1/(e^t − 1) = Σ_n B_n t^{n−1}/n!.
	{
		const auto e = theta_asymptotic(make_theta_series(1, 0, 0.0), 6);
		const auto& bern = BernoulliTable::instance();
		tasks.push_back(guarded("theta_laurent_m1", Json{{"power", -1}}, 1e-12, "expansion|bernoulli",
								[=] { return std::pair{e.leading_coeff, Complex(bern.value(0))}; }));
		double factorial = 1;
		for (int k = 0; k <= 6; ++k)
		{
			factorial *= k + 1;
			const double expected = bern.value(k + 1) / factorial;
			tasks.push_back(guarded("theta_laurent_m1", Json{{"power", k}}, 1e-12, "expansion|bernoulli",
									[=] { return std::pair{e.coeffs[k], Complex(expected)}; }));
		}
	}
	{
		const auto e = theta_asymptotic(make_theta_series(2, 0, 0.0), 2);
		tasks.push_back(guarded("theta_leading_m2", Json{{"power", -0.5}}, 1e-12, "expansion|half_sqrt_pi",
								[=] { return std::pair{e.leading_coeff, Complex(0.5 * std::sqrt(pi))}; }));
		tasks.push_back(guarded("theta_leading_m2", Json{{"power", 0}}, 1e-12, "expansion|minus_half",
								[=] { return std::pair{e.coeffs[0], Complex(-0.5)}; }));
	}

	for (int m : {2, 3, 4})
		tasks.push_back(guarded("mellin_residue", Json{{"m", m}, {"x", 0}, {"y", 0}, {"h", 1e-7}}, 1e-6,
								"(s-1/m)*mellin_zeta|1/m", [=] {
									constexpr double h = 1e-7;
									const ThetaSeries ts = make_theta_series(m, 0, 0.0);
									return std::pair{h * mellin_zeta(ts, 1.0 / m + h, cfg), Complex(1.0 / m)};
								}));

	tasks.push_back(guarded("mellin_closure", Json{{"m", 1}, {"x", 0}, {"y", 0}}, 1e-6, "mellin_oracle|sqrt_2pi", [=] {
		return std::pair{mellin_regprod_oracle(make_theta_series(1, 0, 0.0), cfg), Complex(constants::sqrt_two_pi)};
	}));
	for (int m : {2, 4})
		for (double y : {0.5, 1.0, 2.0})
			tasks.push_back(guarded("mellin_closure", Json{{"m", m}, {"x", 0}, {"y", y}}, 1e-6, "mellin_oracle|gamma_formula", [=] {
				return std::pair{mellin_regprod_oracle(make_theta_series(m, 0, y), cfg),
								 regprod_power_form(0.0, std::pow(y, 1.0 / m), m, -1, 0, 1).value};
			}));

	if (o.grid == Grid::fast)
		return;
	for (int m : {2, 3, 4})
		for (double x : {0.0, 0.5, 1.0})
			for (Complex s : {Complex(1, 0), Complex(2, 0), Complex(1.5, 2)})
				tasks.push_back(guarded("mellin_consistency", Json{{"m", m}, {"x", x}, {"y", 0.5}, {"s", complex_field(s)}}, 1e-8,
										"mellin_zeta|direct_em", [=] {
											return std::pair{mellin_zeta(make_theta_series(m, x, 0.5), s, cfg),
															 power_sum_direct(m, x, 0.5, s, cfg)};
										}));
}

std::string csv_quote(const std::string& s)
{
	if (s.find_first_of(",\"\n") == std::string::npos)
		return s;
	std::string out = "\"";
	for (char c : s)
	{
		if (c == '"')
			out += '"';
		out += c;
	}
	return out + "\"";
}

std::string number(double v)
{
	char buf[40];
	std::snprintf(buf, sizeof buf, "%.17g", v);
	return buf;
}

}  // namespace

Suite parse_suite(const std::string& name)
{
	if (name == "all")
		return Suite::all;
	if (name == "lerch")
		return Suite::lerch;
	if (name == "regprod")
		return Suite::regprod;
	if (name == "series")
		return Suite::series;
	if (name == "theta")
		return Suite::theta;
	throw DomainError("unknown suite '" + name + "'");
}

Grid parse_grid(const std::string& name)
{
	if (name == "fast")
		return Grid::fast;
	if (name == "dense")
		return Grid::dense;
	throw DomainError("unknown grid '" + name + "'");
}

VerificationReport make_report(std::string id, nlohmann::ordered_json point, Complex lhs, Complex rhs, double tolerance,
							   std::string method_pair)
{
	VerificationReport r;
	r.identity_id = std::move(id);
	r.grid_point = std::move(point);
	r.lhs = lhs;
	r.rhs = rhs;
	r.abs_residual = std::abs(lhs - rhs);
	const double scale = std::abs(rhs);
	r.rel_residual = scale > 0 ? r.abs_residual / scale : (r.abs_residual == 0 ? 0 : std::numeric_limits<double>::infinity());
	r.tolerance = tolerance;
	r.pass = r.rel_residual <= tolerance || (scale < 1 && r.abs_residual <= tolerance);
	r.method_pair = std::move(method_pair);
	return r;
}

std::vector<VerificationReport> run_verification(const VerifyOptions& options)
{
	options.cfg.validate();
	std::vector<Task> tasks;
	const bool all = options.suite == Suite::all;
	if (all || options.suite == Suite::lerch)
		lerch_suite(options, tasks);
	if (all || options.suite == Suite::regprod)
		regprod_suite(options, tasks);
	if (all || options.suite == Suite::series)
		series_suite(options, tasks);
	if (all || options.suite == Suite::theta)
		theta_suite(options, tasks);

	std::vector<VerificationReport> rows(tasks.size());
	std::atomic<std::size_t> next{0};
	auto worker = [&] {
		for (std::size_t i = next++; i < tasks.size(); i = next++)
			rows[i] = tasks[i]();
	};
	unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
	threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
	std::vector<std::jthread> pool;
	for (unsigned i = 1; i < threads; ++i)
		pool.emplace_back(worker);
	worker();
	pool.clear();
	return rows;
}

nlohmann::ordered_json to_json(const VerificationReport& row)
{
	Json j;
	j["identity_id"] = row.identity_id;
	j["grid_point"] = row.grid_point;
	j["lhs"] = format_complex(row.lhs);
	j["rhs"] = format_complex(row.rhs);
	j["abs_residual"] = row.abs_residual;
	j["rel_residual"] = row.rel_residual;
	j["tolerance"] = row.tolerance;
	j["pass"] = row.pass;
	j["method_pair"] = row.method_pair;
	if (!row.error.empty())
		j["error"] = row.error;
	return j;
}

std::string csv_header()
{
	return "identity_id,grid_point,lhs,rhs,abs_residual,rel_residual,tolerance,pass,method_pair,error";
}

std::string to_csv(const VerificationReport& row)
{
	return csv_quote(row.identity_id) + "," + csv_quote(row.grid_point.dump()) + "," + format_complex(row.lhs) + "," +
		   format_complex(row.rhs) + "," + number(row.abs_residual) + "," + number(row.rel_residual) + "," +
		   number(row.tolerance) + "," + (row.pass ? "true" : "false") + "," + csv_quote(row.method_pair) + "," +
		   csv_quote(row.error);
}

}  // namespace zetareg
