#pragma once

#include <cmath>
#include <complex>

namespace zetareg::detail
{

/// Neumaier-compensated complex accumulator.
template <class T>
struct BasicCompensatedSum
{
	T sum_re = 0, sum_im = 0;
	T carry_re = 0, carry_im = 0;

	static void accumulate(T& acc, T& carry, T x)
	{
		using std::abs;
		const T t = acc + x;
		carry += abs(acc) >= abs(x) ? T((acc - t) + x) : T((x - t) + acc);
		acc = t;
	}

	template <class C>
	void add(const C& x)
	{
		accumulate(sum_re, carry_re, T(x.real()));
		accumulate(sum_im, carry_im, T(x.imag()));
	}

	template <class C = std::complex<T>>
	C value() const
	{
		return C(T(sum_re + carry_re), T(sum_im + carry_im));
	}
};

using CompensatedSum = BasicCompensatedSum<double>;

}  // namespace zetareg::detail
