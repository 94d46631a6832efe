from fractions import Fraction

from django.test import SimpleTestCase

from intersections.arith import InvalidArgument
from intersections.divisors import DELTA_IRR, delta, evaluate_power, lam, space
from intersections.kappa_psi import (
    KappaPsiQuery,
    forget_point,
    kappa_psi_number,
    kappa_psi_query,
    kappa_reduce_step,
    push_down,
)
from intersections.tau import tau_number, tau_query


def kp(g, n, d=(), kappas=()):
    return kappa_psi_number(kappa_psi_query(g, n, d, kappas))


class KappaPsiNumberTests(SimpleTestCase):
    def test_kappa_one(self):
        self.assertEqual(kp(0, 4, kappas=(1,)), 1)
        self.assertEqual(kp(1, 1, kappas=(1,)), Fraction(1, 24))

    def test_products_subtract_merged_kappa(self):
        self.assertEqual(kp(0, 5, kappas=(1, 1)), 5)
        self.assertEqual(kp(0, 5, kappas=(2,)), 1)
        self.assertEqual(kp(2, 0, kappas=(1, 2)), Fraction(1, 240))
        self.assertEqual(kp(2, 0, kappas=(3,)), Fraction(1, 1152))

    def test_mixed_with_psi(self):
        self.assertEqual(kp(1, 2, (1, 0), (1,)), Fraction(1, 12))

    def test_without_kappa_is_tau(self):
        self.assertEqual(kp(2, 2, (3, 2)), tau_number(tau_query(2, (3, 2))))

    def test_kappa_order_irrelevant(self):
        self.assertEqual(kp(2, 0, kappas=(2, 1)), kp(2, 0, kappas=(1, 2)))

    def test_kappa_one_power_through_divisors(self):
        # kappa_1 = 12 lambda_1 - delta on M(g,0)
        for g in (2, 3):
            weights = {lam(1): 12, DELTA_IRR: -1}
            weights.update((delta(h), -1) for h in range(1, g // 2 + 1))
            dim = 3 * g - 3
            self.assertEqual(kp(g, 0, kappas=(1,) * dim), evaluate_power(space(g, 0), weights, dim), g)

    def test_off_degree(self):
        self.assertEqual(kp(1, 1, kappas=(2,)), 0)

    def test_validation(self):
        with self.assertRaises(InvalidArgument):
            kappa_psi_query(0, 2)
        with self.assertRaises(InvalidArgument):
            kappa_psi_query(1, 2, (1,))
        with self.assertRaises(InvalidArgument):
            kappa_psi_query(1, 1, kappas=(0,))


class ReductionTests(SimpleTestCase):
    def test_reduce_step(self):
        q = kappa_psi_query(0, 5, kappas=(1, 1))
        self.assertEqual(
            kappa_reduce_step(q),
            [
                (Fraction(1), KappaPsiQuery(0, 6, (2, 0, 0, 0, 0, 0), (1,))),
                (Fraction(-1), KappaPsiQuery(0, 5, (0, 0, 0, 0, 0), (2,))),
            ],
        )

    def test_reduce_step_needs_kappa(self):
        with self.assertRaises(InvalidArgument):
            kappa_reduce_step(kappa_psi_query(1, 1, (1,)))

    def test_forget_point(self):
        # psi at the forgotten point with exponent 1 is the dilaton factor 2g-2+n
        self.assertEqual(forget_point(0, 4, (0, 0, 0, 1), ()), [(Fraction(1), ((0, 0, 0), ()))])
        self.assertEqual(forget_point(0, 4, (1, 0, 0, 0), ()), [(Fraction(1), ((0, 0, 0), ()))])
        self.assertEqual(forget_point(2, 1, (4,), ()), [(Fraction(1), ((), (3,)))])

    def test_forget_point_unstable(self):
        with self.assertRaises(InvalidArgument):
            forget_point(0, 3, (0, 0, 0), ())

    def test_push_down_preserves_values(self):
        self.assertEqual(push_down(1, (1, 1), (), 1), {((1,), ()): Fraction(1)})
        for g, d, kappas in ((2, (2, 1, 1), (2,)), (1, (1, 1, 0), (1,)), (2, (3, 2), ())):
            total = sum(
                c * kp(g, len(dd), dd, kk) for (dd, kk), c in push_down(g, d, kappas, 0 if g > 1 else 1).items()
            )
            self.assertEqual(total, kp(g, len(d), d, kappas), (g, d, kappas))
