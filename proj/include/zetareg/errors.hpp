#pragma once

#include <stdexcept>
#include <string>

namespace zetareg
{

/// Base of every error raised by the library.
class Error : public std::runtime_error
{
public:
	using std::runtime_error::runtime_error;
};

/// Argument sits on a pole of the function being evaluated.
class PoleError : public Error
{
public:
	PoleError(const std::string& what, double location)
		: Error(what), location_(location)
	{
	}

	/// Offending pole (a non-positive integer for the Gamma family, s = 1 for Hurwitz zeta).
	double location() const noexcept { return location_; }

private:
	double location_;
};

/// Argument outside the domain where the operation is defined.
class DomainError : public Error
{
public:
	using Error::Error;
};

/// Request exceeds a fixed table or order cap.
class CapacityError : public Error
{
public:
	using Error::Error;
};

/// Iterative method or quadrature did not reach its tolerance within budget.
class ConvergenceError : public Error
{
public:
	using Error::Error;
};

/// Result would overflow or be non-finite.
class OverflowError : public Error
{
public:
	using Error::Error;
};

}  // namespace zetareg
