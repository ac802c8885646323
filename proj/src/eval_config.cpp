#include "zetareg/eval_config.hpp"

#include "zetareg/errors.hpp"

namespace zetareg
{

void EvalConfig::validate() const
{
	if (trunc < 8)
		throw DomainError("EvalConfig: trunc must be at least 8");
	if (em_order < 2 || em_order > 32)
		throw DomainError("EvalConfig: em_order must lie in [2, 32]");
	if (!(quad_tol >= 1e-14 && quad_tol <= 1e-4))
		throw DomainError("EvalConfig: quad_tol must lie in [1e-14, 1e-4]");
	if (!(overflow_clamp > 0))
		throw DomainError("EvalConfig: overflow_clamp must be positive");
}

}  // namespace zetareg
