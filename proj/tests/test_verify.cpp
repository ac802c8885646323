#include <doctest.h>

#include <set>
#include <sstream>

#include "zetareg/verify.hpp"

using namespace zetareg;

TEST_CASE("pass rule")
{
	CHECK(make_report("a", {}, 1.0 + 1e-10, 1.0, 1e-9, "x|y").pass);
	CHECK(!make_report("a", {}, 1.0 + 1e-8, 1.0, 1e-9, "x|y").pass);
	// Small right-hand sides fall back to the absolute residual.
	CHECK(make_report("a", {}, 1e-10, 1e-12, 1e-9, "x|y").pass);
	CHECK(!make_report("a", {}, 10.0 + 1e-7, 10.0, 1e-9, "x|y").pass);
	const auto zero = make_report("a", {}, 0.0, 0.0, 1e-9, "x|y");
	CHECK(zero.pass);
	CHECK(zero.rel_residual == 0);
	const auto r = make_report("a", {{"x", 1}}, 3.0, 2.0, 1e-9, "x|y");
	CHECK(r.abs_residual == 1.0);
	CHECK(r.rel_residual == 0.5);
}

TEST_CASE("fast Lerch suite")
{
	VerifyOptions opt;
	opt.suite = Suite::lerch;
	const auto rows = run_verification(opt);
	REQUIRE(rows.size() == 50);
	for (const auto& row : rows)
	{
		CHECK(row.identity_id == "lerch_formula");
		CHECK(row.pass);
		CHECK(row.error.empty());
	}
	CHECK(rows.front().grid_point["x"] == 0.1);
	CHECK(rows.back().grid_point["x"] == 5.0);
}

TEST_CASE("every suite passes with the corrected signs")
{
	for (Grid grid : {Grid::fast, Grid::dense})
	{
		VerifyOptions opt;
		opt.grid = grid;
		std::set<std::string> ids;
		for (const auto& row : run_verification(opt))
		{
			CAPTURE(row.identity_id);
			CAPTURE(row.grid_point.dump());
			CAPTURE(row.error);
			CHECK(row.pass);
			ids.insert(row.identity_id);
		}
		CHECK(ids.count("poisson_theta2"));
		CHECK(ids.count("gen_euler"));
		CHECK(ids.count("mellin_closure"));
		CHECK(ids.count("gammam_consistency"));
		CHECK(ids.count("mellin_consistency") == (grid == Grid::dense));
	}
}

TEST_CASE("printed signs reproduce the discrepancies")
{
	VerifyOptions opt;
	opt.suite = Suite::series;
	opt.sign = SignConvention::as_printed;
	std::set<std::string> failing;
	for (const auto& row : run_verification(opt))
		if (!row.pass)
			failing.insert(row.identity_id);
	CHECK(failing == std::set<std::string>{"cot_sum_identity", "gen_euler", "hurwitz_polygamma", "quartic_identity"});
}

TEST_CASE("row order does not depend on the thread count")
{
	VerifyOptions opt;
	opt.grid = Grid::dense;
	opt.threads = 1;
	std::ostringstream one, many;
	for (const auto& row : run_verification(opt))
		one << to_json(row).dump() << '\n';
	opt.threads = 8;
	for (const auto& row : run_verification(opt))
		many << to_json(row).dump() << '\n';
	CHECK(one.str() == many.str());
}

TEST_CASE("report serialization")
{
	const auto r = make_report("demo", {{"x", 0.5}, {"label", "a,b"}}, Complex(1, 2), Complex(1, 2), 1e-9, "lhs|rhs");
	const auto j = to_json(r);
	std::vector<std::string> keys;
	for (auto it = j.begin(); it != j.end(); ++it)
		keys.push_back(it.key());
	CHECK(keys == std::vector<std::string>{"identity_id", "grid_point", "lhs", "rhs", "abs_residual", "rel_residual",
										   "tolerance", "pass", "method_pair"});
	CHECK(j["lhs"] == "1+2i");
	CHECK(nlohmann::ordered_json::parse(j.dump()) == j);

	CHECK(csv_header() == "identity_id,grid_point,lhs,rhs,abs_residual,rel_residual,tolerance,pass,method_pair,error");
	const std::string row = to_csv(r);
	CHECK(row.rfind("demo,\"{\"\"x\"\":0.5,\"\"label\"\":\"\"a,b\"\"}\",1+2i,1+2i,0,0,", 0) == 0);
	CHECK(row.find(",true,lhs|rhs,") != std::string::npos);

	CHECK(parse_suite("theta") == Suite::theta);
	CHECK(parse_grid("dense") == Grid::dense);
	CHECK_THROWS_AS(parse_suite("nope"), DomainError);
	CHECK_THROWS_AS(parse_grid("nope"), DomainError);
}
