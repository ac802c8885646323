#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "zetareg/cli_support.hpp"

using namespace zetareg;

TEST_CASE("complex formatting")
{
	CHECK(format_complex(Complex(2.5066282746310007, 0)) == "2.5066282746310007+0i");
	CHECK(format_complex(Complex(-1, -0.5)) == "-1-0.5i");
	CHECK(format_complex(Complex(-0.0, -0.0)) == "0+0i");
	const Complex z(0.1, -1.0 / 3);
	CHECK(parse_complex(format_complex(z)) == z);
}

TEST_CASE("complex parsing")
{
	CHECK(parse_complex("1.5") == Complex(1.5, 0));
	CHECK(parse_complex("-2i") == Complex(0, -2));
	CHECK(parse_complex("i") == Complex(0, 1));
	CHECK(parse_complex("-i") == Complex(0, -1));
	CHECK(parse_complex("0.5-3i") == Complex(0.5, -3));
	CHECK(parse_complex("1e-3+2e2i") == Complex(1e-3, 200));
	CHECK(parse_complex(" 2+i ") == Complex(2, 1));
	CHECK(parse_complex(".5") == Complex(0.5, 0));
	for (const char* bad : {"", "abc", "1+", "1+2", "i2", "1..2", "--1"})
	{
		CAPTURE(bad);
		CHECK_THROWS_AS(parse_complex(bad), DomainError);
	}
	CHECK(parse_complex_list("1,3,2") == std::vector<Complex>{1, 3, 2});
	CHECK(parse_complex_list("1, i") == std::vector<Complex>{1, Complex(0, 1)});
	CHECK_THROWS_AS(parse_complex_list(""), DomainError);
}

TEST_CASE("power specifications")
{
	const PowerSpec p = parse_power_spec("m=2,eps=-1,x=0,y=1");
	CHECK(p.m == 2);
	CHECK(p.eps == -1);
	CHECK(p.x == 0.0);
	CHECK(p.y == 1.0);
	CHECK(p.root == 0);
	CHECK(parse_power_spec("m=4, eps=1, x=0.5+i, y=2, root=3").root == 3);
	CHECK_THROWS_AS(parse_power_spec("m=2,eps=-1,x=0"), DomainError);
	CHECK_THROWS_AS(parse_power_spec("m=2,eps=3,y=1"), DomainError);
	CHECK_THROWS_AS(parse_power_spec("m=2.5,y=1"), DomainError);
	CHECK_THROWS_AS(parse_power_spec("n=2,y=1"), DomainError);
	CHECK_THROWS_AS(parse_power_spec("m2,y=1"), DomainError);
}

TEST_CASE("configuration layers")
{
	const auto path = std::filesystem::temp_directory_path() / "zetareg_test_config.txt";
	{
		std::ofstream out(path);
		out << "# comment\ntrunc = 500\nem_order=6  # trailing\n\nquad_tol = 1e-8\n";
	}
	EvalConfig cfg;
	apply_config_file(cfg, path.string());
	CHECK(cfg.trunc == 500);
	CHECK(cfg.em_order == 6);
	CHECK(cfg.quad_tol == 1e-8);
	CHECK(cfg.overflow_clamp == 700);

	apply_environment(cfg, [](const char* key) -> const char* {
		return std::string(key) == "ZETAREG_QUAD_TOL" ? "1e-12" : nullptr;
	});
	CHECK(cfg.quad_tol == 1e-12);
	apply_environment(cfg, [](const char*) -> const char* { return nullptr; });
	CHECK(cfg.quad_tol == 1e-12);
	CHECK_THROWS_AS(apply_environment(cfg, [](const char*) -> const char* { return "tight"; }), DomainError);

	{
		std::ofstream out(path);
		out << "colour = blue\n";
	}
	CHECK_THROWS_AS(apply_config_file(cfg, path.string()), DomainError);
	{
		std::ofstream out(path);
		out << "trunc\n";
	}
	CHECK_THROWS_AS(apply_config_file(cfg, path.string()), DomainError);
	std::filesystem::remove(path);
	CHECK_THROWS_AS(apply_config_file(cfg, path.string()), DomainError);
}

TEST_CASE("configuration validation")
{
	EvalConfig cfg;
	CHECK_NOTHROW(cfg.validate());
	cfg.trunc = 7;
	CHECK_THROWS_AS(cfg.validate(), DomainError);
	cfg = {};
	cfg.em_order = 33;
	CHECK_THROWS_AS(cfg.validate(), DomainError);
	cfg = {};
	cfg.quad_tol = 1e-3;
	CHECK_THROWS_AS(cfg.validate(), DomainError);
	cfg = {};
	cfg.overflow_clamp = 0;
	CHECK_THROWS_AS(cfg.validate(), DomainError);
}
