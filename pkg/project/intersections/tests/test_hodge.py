from fractions import Fraction

from django.test import SimpleTestCase, tag

from intersections.arith import InvalidArgument
from intersections.hodge import (
    ch_number,
    ch_query,
    lambda_monomial,
    lambda_number,
    lambda_to_ch,
    mixed_number,
)


def lam_number(g, **exps):
    return lambda_number(lambda_monomial(g, {int(k[1:]): e for k, e in exps.items()}))


class ChNumberTests(SimpleTestCase):
    def test_genus_one(self):
        self.assertEqual(ch_number(ch_query(1, 1, chs=(1,))), Fraction(1, 24))

    def test_ch3_genus_two(self):
        self.assertEqual(ch_number(ch_query(2, 0, chs=(3,))), Fraction(-1, 34560))

    def test_genus_zero_vanishes(self):
        self.assertEqual(ch_number(ch_query(0, 4, chs=(1,))), 0)

    def test_even_ch_rejected(self):
        for j in (0, 2, -1):
            with self.assertRaises(InvalidArgument):
                ch_query(2, 0, chs=(j,))

    def test_lambda_g_psi(self):
        # <lambda_g psi^{2g-2}> = (2^{2g-1}-1)/2^{2g-1} |B_2g| / (2g)!
        self.assertEqual(mixed_number(2, (2,), (), {2: 1}), Fraction(7, 5760))
        self.assertEqual(mixed_number(1, (0,), (), {1: 1}), Fraction(1, 24))


class LambdaNumberTests(SimpleTestCase):
    def test_genus_two(self):
        self.assertEqual(lam_number(2, l1=3), Fraction(1, 2880))
        self.assertEqual(lam_number(2, l1=1, l2=1), Fraction(1, 5760))

    def test_genus_three(self):
        self.assertEqual(lam_number(3, l1=1, l2=1, l3=1), Fraction(1, 1451520))
        self.assertEqual(lam_number(3, l1=6), Fraction(1, 90720))

    def test_genus_one_on_one_pointed(self):
        self.assertEqual(lam_number(1, l1=1), Fraction(1, 24))

    def test_off_degree_zero(self):
        self.assertEqual(lam_number(2, l1=2), 0)

    def test_top_lambda_squares_vanish(self):
        self.assertEqual(mixed_number(2, (0,), (), {2: 2}), 0)

    def test_sequence_form(self):
        self.assertEqual(lambda_monomial(3, (1, 1, 1)), lambda_monomial(3, {1: 1, 2: 1, 3: 1}))

    def test_validation(self):
        with self.assertRaises(InvalidArgument):
            lambda_monomial(2, {3: 1})
        with self.assertRaises(InvalidArgument):
            lambda_monomial(2, (1, 1, 1))
        with self.assertRaises(InvalidArgument):
            lambda_number(lambda_monomial(0, ()))

    def test_newton_identity_lambda_one(self):
        self.assertEqual(lambda_to_ch(lambda_monomial(2, {1: 1})), {(1,): Fraction(1)})

    def test_newton_identity_products(self):
        self.assertEqual(lambda_to_ch(lambda_monomial(2, {2: 1})), {(1, 1): Fraction(1, 2)})
        self.assertEqual(lambda_to_ch(lambda_monomial(2, {1: 1, 2: 1})), {(1, 1, 1): Fraction(1, 2)})

    def test_bernoulli_sign_convention(self):
        # flipping the sign of B_4 would change lambda_1^3 on M(2,0)
        self.assertNotEqual(lam_number(2, l1=3), Fraction(-1, 2880))

    @tag("slow")
    def test_genus_four(self):
        self.assertEqual(lam_number(4, l1=9), Fraction(1, 113400))

    @tag("slow")
    def test_genus_six(self):
        self.assertEqual(lam_number(6, l2=1, l3=1, l4=1, l6=1), Fraction(1697, 2988969984000))
        self.assertEqual(lam_number(6, l1=1, l2=1, l3=1, l4=1, l5=1), Fraction(150719, 15692092416000))

    @tag("slow")
    def test_genus_four_socle_identity(self):
        self.assertEqual(lam_number(4, l3=3), 2 * lam_number(4, l2=1, l3=1, l4=1))

    @tag("slow")
    def test_genus_five_relation(self):
        self.assertEqual(
            10 * lam_number(5, l3=1, l4=1, l5=1),
            3 * lam_number(5, l1=1, l2=1, l4=1, l5=1),
        )
