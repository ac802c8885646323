#include "zetareg/cli_support.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>

namespace zetareg
{

namespace
{

std::string trim(const std::string& s)
{
	const auto b = s.find_first_not_of(" \t\r\n");
	if (b == std::string::npos)
		return {};
	const auto e = s.find_last_not_of(" \t\r\n");
	return s.substr(b, e - b + 1);
}

double parse_double(const std::string& text, const std::string& what)
{
	std::size_t used = 0;
	double v = 0;
	try
	{
		v = std::stod(text, &used);
	}
	catch (const std::exception&)
	{
		throw DomainError("cannot parse " + what + ": '" + text + "'");
	}
	if (used != text.size())
		throw DomainError("cannot parse " + what + ": '" + text + "'");
	return v;
}

int parse_int(const std::string& text, const std::string& what)
{
	const double v = parse_double(text, what);
	if (v != static_cast<int>(v))
		throw DomainError(what + " must be an integer");
	return static_cast<int>(v);
}

}  // namespace

std::string format_complex(Complex z)
{
	char buf[96];
	// Adding +0.0 turns a negative zero into a positive one.
	std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real() + 0.0, z.imag() + 0.0);
	return buf;
}

Complex parse_complex(const std::string& raw)
{
	static const std::regex full(R"(^([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?(?:([+-])((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?i)?$)");
	static const std::regex imag_only(R"(^([+-]?)((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?i$)");
	const std::string text = trim(raw);
	std::smatch m;
	if (text.empty())
		throw DomainError("empty complex number");
	if (std::regex_match(text, m, imag_only))
	{
		const double mag = m[2].matched ? std::stod(m[2].str()) : 1.0;
		return {0.0, m[1].str() == "-" ? -mag : mag};
	}
	if (std::regex_match(text, m, full) && m[1].matched)
	{
		const double re = std::stod(m[1].str());
		double im = 0;
		if (m[2].matched)
		{
			im = m[3].matched ? std::stod(m[3].str()) : 1.0;
			if (m[2].str() == "-")
				im = -im;
		}
		return {re, im};
	}
	throw DomainError("cannot parse complex number '" + text + "'");
}

std::vector<Complex> parse_complex_list(const std::string& text)
{
	std::vector<Complex> out;
	std::stringstream ss(text);
	std::string item;
	while (std::getline(ss, item, ','))
		out.push_back(parse_complex(item));
	if (out.empty())
		throw DomainError("empty coefficient list");
	return out;
}

PowerSpec parse_power_spec(const std::string& text)
{
	PowerSpec spec;
	bool have_y = false;
	std::stringstream ss(text);
	std::string item;
	while (std::getline(ss, item, ','))
	{
		const auto eq = item.find('=');
		if (eq == std::string::npos)
			throw DomainError("power spec entries look like key=value, got '" + item + "'");
		const std::string key = trim(item.substr(0, eq));
		const std::string value = trim(item.substr(eq + 1));
		if (key == "m")
			spec.m = parse_int(value, "m");
		else if (key == "eps")
			spec.eps = parse_int(value, "eps");
		else if (key == "x")
			spec.x = parse_complex(value);
		else if (key == "y")
		{
			spec.y = parse_complex(value);
			have_y = true;
		}
		else if (key == "root")
			spec.root = parse_int(value, "root");
		else
			throw DomainError("unknown power spec key '" + key + "'");
	}
	if (!have_y)
		throw DomainError("power spec needs y");
	if (spec.eps != 1 && spec.eps != -1)
		throw DomainError("eps must be +1 or -1");
	return spec;
}

void apply_config_file(EvalConfig& cfg, const std::string& path)
{
	std::ifstream in(path);
	if (!in)
		throw DomainError("cannot open config file " + path);
	std::string line;
	int lineno = 0;
	while (std::getline(in, line))
	{
		++lineno;
		line = trim(line.substr(0, line.find('#')));
		if (line.empty())
			continue;
		const auto eq = line.find('=');
		if (eq == std::string::npos)
			throw DomainError(path + ":" + std::to_string(lineno) + ": expected key = value");
		const std::string key = trim(line.substr(0, eq));
		const std::string value = trim(line.substr(eq + 1));
		if (key == "trunc")
			cfg.trunc = parse_int(value, key);
		else if (key == "em_order")
			cfg.em_order = parse_int(value, key);
		else if (key == "quad_tol")
			cfg.quad_tol = parse_double(value, key);
		else if (key == "overflow_clamp")
			cfg.overflow_clamp = parse_double(value, key);
		else
			throw DomainError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
	}
}

void apply_environment(EvalConfig& cfg, const std::function<const char*(const char*)>& getenv)
{
	if (const char* tol = getenv("ZETAREG_QUAD_TOL"); tol && *tol)
		cfg.quad_tol = parse_double(trim(tol), "ZETAREG_QUAD_TOL");
}

}  // namespace zetareg
