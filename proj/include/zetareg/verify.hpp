#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "zetareg/dirichlet_series.hpp"

namespace zetareg
{

enum class Suite
{
	all,
	lerch,
	regprod,
	series,
	theta
};

enum class Grid
{
	fast,
	dense
};

Suite parse_suite(const std::string& name);
Grid parse_grid(const std::string& name);

/// One checked instance of an identity.
struct VerificationReport
{
	std::string identity_id;
	nlohmann::ordered_json grid_point;
	Complex lhs;
	Complex rhs;
	double abs_residual = 0;
	double rel_residual = 0;
	double tolerance = 0;
	bool pass = false;
	std::string method_pair;  ///< "lhs method|rhs method"
	std::string error;        ///< message when evaluation threw
};

/// Fills the residuals and the verdict: pass ⇔ rel <= tol, or abs <= tol when |rhs| < 1.
VerificationReport make_report(std::string id, nlohmann::ordered_json point, Complex lhs, Complex rhs,
							   double tolerance, std::string method_pair);

struct VerifyOptions
{
	Suite suite = Suite::all;
	Grid grid = Grid::fast;
	SignConvention sign = SignConvention::corrected;
	EvalConfig cfg;
	unsigned threads = 0;  ///< 0 picks the hardware concurrency
};

/// Rows in a fixed grid order; evaluation is spread over threads.
std::vector<VerificationReport> run_verification(const VerifyOptions& options);

nlohmann::ordered_json to_json(const VerificationReport& row);
std::string csv_header();
std::string to_csv(const VerificationReport& row);

}  // namespace zetareg
