# intersections/acceptance.py
"""Published and hand-derived values the selftest command checks."""
from fractions import Fraction
from typing import Callable, Iterator, List, NamedTuple, Tuple

from .divisors import DELTA_IRR, KAPPA1, delta, evaluate_power, space
from .expressions import evaluate_expression, parse
from .hodge import lambda_monomial, lambda_number
from .taut_ag import (
    conjecture1_coefficient,
    conjecture2_coefficient,
    jacobian_class,
    recover_lambda_number,
)
from .tau import tau_number, tau_query


class Check(NamedTuple):
    name: str
    expected: object
    compute: Callable[[], object]
    slow: bool = False


def _expr(text: str) -> Callable[[], Fraction]:
    return lambda: evaluate_expression(parse(text))


def _lam(g: int, **exps: int) -> Callable[[], Fraction]:
    # _lam(6, l1=15) is lambda_1^15 on M(6,0)
    return lambda: lambda_number(lambda_monomial(g, {int(k[1:]): e for k, e in exps.items()}))


def _jacobian(g: int) -> Callable[[], Tuple[Fraction, ...]]:
    return lambda: jacobian_class(g).coefficients


def _lambda1_power_by_divisors(g: int) -> Callable[[], Fraction]:
    # lambda_1 = (kappa_1 + delta_irr + sum_h delta_h) / 12 on M(g,0)
    weights = {KAPPA1: Fraction(1, 12), DELTA_IRR: Fraction(1, 12)}
    weights.update((delta(h), Fraction(1, 12)) for h in range(1, g // 2 + 1))
    return lambda: evaluate_power(space(g, 0), weights, 3 * g - 3)


def _recovered_l1_18() -> Fraction:
    return recover_lambda_number(7, jacobian_class(7), (1,) * 18)


F = Fraction

CHECKS: List[Check] = [
    Check("<tau_0^3>_0", F(1), lambda: tau_number(tau_query(0, (0, 0, 0)))),
    Check("<tau_1>_1", F(1, 24), lambda: tau_number(tau_query(1, (1,)))),
    Check("<tau_4>_2", F(1, 1152), lambda: tau_number(tau_query(2, (4,)))),
    Check("delta_irr on M(1,1)", F(1, 2), _expr("M(1,1): d_irr")),
    Check("kappa_1^2 on M(0,5)", F(5), _expr("M(0,5): ka1^2")),
    Check("lambda_1^3 on M(2,0)", F(1, 2880), _lam(2, l1=3)),
    Check("lambda_1 lambda_2 lambda_3 on M(3,0)", F(1, 1451520), _lam(3, l1=1, l2=1, l3=1)),
    Check("jacobian class, genus 4", (F(8),), _jacobian(4)),
    Check("conjecture 1, genus 3..7", tuple(map(F, (1, 8, 72, 384, 768))),
          lambda: tuple(conjecture1_coefficient(g) for g in range(3, 8))),
    Check("conjecture 2, genus 5..7", tuple(map(F, (-48, -1152, -6912))),
          lambda: tuple(conjecture2_coefficient(g) for g in range(5, 8))),
    Check("delta_irr^9 on M(4,0)", F(-251987683, 4320), _expr("M(4,0): d_irr^9"), slow=True),
    Check("lambda_1^9 on M(4,0)", F(1, 113400), _lam(4, l1=9), slow=True),
    Check("lambda_1^9 on M(4,0) through kappa_1 and boundary divisors", F(1, 113400),
          _lambda1_power_by_divisors(4), slow=True),
    Check("delta_irr^12 on M(5,0)", F(-1766321028967, 6048), _expr("M(5,0): d_irr^12"), slow=True),
    Check("lambda_1^12 on M(5,0)", F(31, 680400), _lam(5, l1=12), slow=True),
    Check("jacobian class, genus 5", (F(72), F(-48)), _jacobian(5), slow=True),
    Check("lambda_1^15 on M(6,0)", F(431, 481140), _lam(6, l1=15), slow=True),
    Check("lambda_2 lambda_3 lambda_4 lambda_6 on M(6,0)", F(1697, 2988969984000),
          _lam(6, l2=1, l3=1, l4=1, l6=1), slow=True),
    Check("lambda_1 ... lambda_5 on M(6,0)", F(150719, 15692092416000),
          _lam(6, l1=1, l2=1, l3=1, l4=1, l5=1), slow=True),
    Check("lambda_1^13 delta_irr kappa_1 on M(6,0)", F(0), _expr("M(6,0): ka1 * d_irr * la1^13"), slow=True),
    Check("lambda_1^13 delta_irr^2 on M(6,0)", F(0), _expr("M(6,0): d_irr^2 * la1^13"), slow=True),
    Check("jacobian class, genus 6",
          (F(384), F(474048, 691), F(-1152), F(-248064, 691)), _jacobian(6), slow=True),
    Check("jacobian class, genus 7",
          (F(768), F(-3276672, 691), F(7522176, 691), F(2209152, 691), F(-6912),
           F(968832, 691), F(-8842752, 691)),
          _jacobian(7), slow=True),
    Check("lambda_1^18 on M(7,0) from the genus 7 class", F(32017001, 638512875), _recovered_l1_18, slow=True),
]


def run_checks(full: bool = False) -> Iterator[Tuple[Check, object, bool]]:
    for check in CHECKS:
        if check.slow and not full:
            continue
        actual = check.compute()
        yield check, actual, actual == check.expected
