#pragma once

#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "zetareg/special_functions.hpp"

namespace zetareg
{

/// `re+imi` with 17 significant digits, e.g. 2.5066282746310007+0i.
std::string format_complex(Complex z);

/// Accepts "1.5", "-2i", "i", "0.5-3i", "1e-3+2e2i". Throws DomainError otherwise.
Complex parse_complex(const std::string& text);

/// Comma-separated complex numbers.
std::vector<Complex> parse_complex_list(const std::string& text);

/// m=2,eps=-1,x=0,y=1[,root=0]
struct PowerSpec
{
	int m = 2;
	int eps = -1;
	Complex x;
	Complex y;
	int root = 0;
};
PowerSpec parse_power_spec(const std::string& text);

/// Reads `key = value` lines (trunc, em_order, quad_tol, overflow_clamp); '#' starts a comment.
/// Unknown keys and malformed values throw DomainError.
void apply_config_file(EvalConfig& cfg, const std::string& path);

/// ZETAREG_QUAD_TOL, read through `getenv` so tests can substitute it.
void apply_environment(EvalConfig& cfg,
					   const std::function<const char*(const char*)>& getenv = [](const char* k) { return std::getenv(k); });

}  // namespace zetareg
