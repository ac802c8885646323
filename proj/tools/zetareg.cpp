// Command-line front end for the zetareg library.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "zetareg/cli_support.hpp"
#include "zetareg/dirichlet_series.hpp"
#include "zetareg/hurwitz_lerch.hpp"
#include "zetareg/regularized_products.hpp"
#include "zetareg/verify.hpp"

namespace
{

using namespace zetareg;
using Json = nlohmann::ordered_json;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_library = 2;
constexpr int exit_usage = 64;

/// Runs a parser, turning its complaints into usage errors.
template <class F>
auto parsed(F&& f)
{
	try
	{
		return f();
	}
	catch (const DomainError& e)
	{
		throw CLI::ValidationError(e.what());
	}
}

struct Globals
{
	std::string config;
	bool paper_signs = false;
	std::string out = "text";
	std::optional<int> trunc;
	std::optional<int> em_order;
	std::optional<double> quad_tol;
	std::optional<double> overflow_clamp;

	/// Defaults, then the config file, then the environment, then flags.
	EvalConfig resolve() const
	{
		return parsed([this] { return merge(); });
	}

	SignConvention sign() const { return paper_signs ? SignConvention::as_printed : SignConvention::corrected; }

private:
	EvalConfig merge() const
	{
		EvalConfig cfg;
		if (!config.empty())
			apply_config_file(cfg, config);
		apply_environment(cfg);
		if (trunc)
			cfg.trunc = *trunc;
		if (em_order)
			cfg.em_order = *em_order;
		if (quad_tol)
			cfg.quad_tol = *quad_tol;
		if (overflow_clamp)
			cfg.overflow_clamp = *overflow_clamp;
		cfg.validate();
		return cfg;
	}
};

std::string short_number(double v)
{
	char buf[32];
	std::snprintf(buf, sizeof buf, "%.3e", v);
	return buf;
}

void emit(const Globals& g, const Json& record, const std::string& text)
{
	if (g.out == "json")
		std::cout << record.dump() << '\n';
	else if (g.out == "csv")
	{
		std::string header, row;
		for (auto it = record.begin(); it != record.end(); ++it)
		{
			header += (header.empty() ? "" : ",") + it.key();
			row += (row.empty() ? "" : ",") + (it->is_string() ? it->get<std::string>() : it->dump());
		}
		std::cout << header << '\n' << row << '\n';
	}
	else
		std::cout << text << '\n';
}

int cmd_lerch(const Globals& g, const std::string& arg)
{
	const EvalConfig cfg = g.resolve();
	const LerchValue v = lerch_L(parsed([&] { return parse_complex(arg); }), cfg);
	emit(g, Json{{"x", format_complex(v.x)}, {"value", format_complex(v.value)}, {"shift_count", v.shift_count}},
		 format_complex(v.value));
	return exit_ok;
}

int cmd_regprod(const Globals& g, const std::string& poly, const std::string& power, int start)
{
	g.resolve();
	if (poly.empty() == power.empty())
		throw CLI::ValidationError("regprod needs exactly one of --poly and --power");
	RegProduct p;
	Json record;
	if (!poly.empty())
	{
		p = regprod_poly(MonicPoly::from_descending(parsed([&] { return parse_complex_list(poly); })), start);
		record["poly"] = poly;
	}
	else
	{
		const PowerSpec spec = parsed([&] { return parse_power_spec(power); });
		p = regprod_power_form(spec.x, spec.y, spec.m, spec.eps, spec.root, start);
		record["power"] = power;
	}
	record["start"] = start;
	record["value"] = format_complex(p.value);
	record["log_value"] = format_complex(p.log_value);
	record["method"] = to_string(p.method);
	record["error_estimate"] = p.error_estimate;
	record["warnings"] = p.warnings;
	std::string text = format_complex(p.value) + " method=" + to_string(p.method) +
					   " error_estimate=" + short_number(p.error_estimate);
	for (const auto& w : p.warnings)
		text += "\nwarning: " + w;
	if (g.out == "csv")
		record.erase("warnings");
	emit(g, record, text);
	return exit_ok;
}

int cmd_series(const Globals& g, int m, const std::string& xs, const std::string& ys, const std::string& method)
{
	const EvalConfig cfg = g.resolve();
	const Complex x = parsed([&] { return parse_complex(xs); });
	const Complex y = parsed([&] { return parse_complex(ys); });
	std::optional<SeriesSum> direct, digamma;
	if (method == "direct" || method == "both")
		direct = sum_direct(m, x, y, cfg);
	if (method == "digamma" || method == "both")
		digamma = sum_digamma(m, x, y, g.sign());

	Json record{{"m", m}, {"x", format_complex(x)}, {"y", format_complex(y)}};
	std::string text;
	auto add = [&](const SeriesSum& s) {
		record[to_string(s.method)] = format_complex(s.value);
		if (!text.empty())
			text += '\n';
		text += std::string(to_string(s.method)) + " " + format_complex(s.value);
		if (s.method == SeriesMethod::direct_em)
			text += " tail_bound=" + short_number(s.tail_bound);
	};
	if (direct)
		add(*direct);
	if (digamma)
		add(*digamma);
	if (direct && digamma)
	{
		const double residual = std::abs(direct->value - digamma->value);
		record["residual"] = residual;
		text += "\nresidual " + short_number(residual);
	}
	emit(g, record, text);
	return exit_ok;
}

int cmd_verify(const Globals& g, const std::string& suite, const std::string& grid, unsigned threads)
{
	VerifyOptions opt;
	opt.suite = parse_suite(suite);
	opt.grid = parse_grid(grid);
	opt.sign = g.sign();
	opt.cfg = g.resolve();
	opt.threads = threads;
	const auto rows = run_verification(opt);

	std::size_t failed = 0;
	if (g.out == "csv")
		std::cout << csv_header() << '\n';
	for (const auto& row : rows)
	{
		failed += !row.pass;
		if (g.out == "json")
			std::cout << to_json(row).dump() << '\n';
		else if (g.out == "csv")
			std::cout << to_csv(row) << '\n';
		else
		{
			char buf[64];
			std::snprintf(buf, sizeof buf, " rel=%.3e tol=%.0e", row.rel_residual, row.tolerance);
			std::cout << (row.pass ? "PASS " : "FAIL ") << row.identity_id << ' ' << row.grid_point.dump() << buf;
			if (!row.error.empty())
				std::cout << " error: " << row.error;
			std::cout << '\n';
		}
	}
	std::cerr << rows.size() - failed << '/' << rows.size() << " identities verified\n";
	return failed ? exit_failed : exit_ok;
}

}  // namespace

int main(int argc, char** argv)
{
	CLI::App app{"Zeta-regularized products, Hurwitz/Lerch functions and their identities"};
	app.require_subcommand(1);
	app.fallthrough();

	Globals g;
	app.add_option("--config", g.config, "key = value file with trunc, em_order, quad_tol, overflow_clamp");
	app.add_flag("--paper-signs", g.paper_signs, "use the printed signs of the misprinted identities");
	app.add_option("--out", g.out, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
	app.add_option("--trunc", g.trunc, "explicit terms before the Euler-Maclaurin tail");
	app.add_option("--em-order", g.em_order, "Bernoulli corrections in the tail");
	app.add_option("--quad-tol", g.quad_tol, "quadrature tolerance");
	app.add_option("--overflow-clamp", g.overflow_clamp, "largest exponent handed to exp");

	std::function<int()> run;

	auto* lerch = app.add_subcommand("lerch", "L(x), the regularized product of n + x over n >= 0");
	std::string lerch_x;
	lerch->add_option("x", lerch_x, "complex argument, e.g. 0.5 or 1-2i")->required();
	lerch->callback([&] { run = [&] { return cmd_lerch(g, lerch_x); }; });

	auto* regprod = app.add_subcommand("regprod", "regularized product of Q(k) over k >= start");
	std::string poly, power;
	int start = 0;
	regprod->add_option("--poly", poly, "monic coefficients, highest degree first: 1,3,2 = t^2+3t+2");
	regprod->add_option("--power", power, "m=2,eps=-1,x=0,y=1[,root=0] for (k+x)^m - eps*y^m");
	regprod->add_option("--start", start, "first index")->check(CLI::Range(0, 1));
	regprod->callback([&] { run = [&] { return cmd_regprod(g, poly, power, start); }; });

	auto* series = app.add_subcommand("series", "sum over k >= 1 of 1/((k+x)^m + y)");
	int m = 2;
	std::string sx, sy, method = "both";
	series->add_option("m", m)->required()->check(CLI::Range(1, 64));
	series->add_option("x", sx)->required();
	series->add_option("y", sy)->required();
	series->add_option("--method", method)->check(CLI::IsMember({"direct", "digamma", "both"}));
	series->callback([&] { run = [&] { return cmd_series(g, m, sx, sy, method); }; });

	auto* verify = app.add_subcommand("verify", "check the identities on a parameter grid");
	std::string suite = "all", grid = "fast";
	unsigned threads = 0;
	verify->add_option("--suite", suite)->check(CLI::IsMember({"all", "lerch", "regprod", "series", "theta"}));
	verify->add_option("--grid", grid)->check(CLI::IsMember({"fast", "dense"}));
	verify->add_option("--threads", threads, "worker threads, 0 for all cores");
	verify->callback([&] { run = [&] { return cmd_verify(g, suite, grid, threads); }; });

	try
	{
		app.parse(argc, argv);
	}
	catch (const CLI::ParseError& e)
	{
		const int code = app.exit(e);
		return code == 0 ? exit_ok : exit_usage;
	}

	try
	{
		return run();
	}
	catch (const CLI::ValidationError& e)
	{
		std::cerr << "error: " << e.what() << '\n';
		return exit_usage;
	}
	catch (const zetareg::Error& e)
	{
		std::cerr << "error: " << e.what() << '\n';
		return exit_library;
	}
	catch (const std::exception& e)
	{
		std::cerr << "error: " << e.what() << '\n';
		return exit_library;
	}
}
