from fractions import Fraction

from django.test import SimpleTestCase

from intersections.divisors import DELTA_IRR, delta, kappa, lam, psi, space
from intersections.expressions import (
    ExpressionError,
    evaluate_expression,
    format_expression,
    parse,
    parse_factors,
)


class ParseTests(SimpleTestCase):
    def test_factors(self):
        expr = parse("M(1,2): d0_{1,2}^2 * psi1")
        self.assertEqual(expr.space, space(1, 2))
        self.assertEqual(expr.factors, ((psi(1), 1), (delta(0, (1, 2)), 2)))
        self.assertEqual(expr.degree, 3)

    def test_whitespace_and_repeats(self):
        expr = parse("  M( 2 , 0 ):la1*  la1 ^ 2*ka2")
        self.assertEqual(expr.factors, ((kappa(2), 1), (lam(1), 3)))

    def test_point_free_boundary(self):
        expr = parse("M(4,0): d_irr^3 * d2 * d1")
        self.assertEqual(expr.factors, ((DELTA_IRR, 3), (delta(1), 1), (delta(2), 1)))

    def test_chern_characters(self):
        self.assertEqual(parse("M(2,0): ch3").chs, ((3, 1),))

    def test_lone_one(self):
        expr = parse("M(0,3): 1")
        self.assertEqual(expr.factors, ())
        self.assertEqual(evaluate_expression(expr), 1)

    def test_factors_only(self):
        self.assertEqual(parse_factors(space(1, 1), "d_irr").factors, ((DELTA_IRR, 1),))


class ParseErrorTests(SimpleTestCase):
    def assertErrorAt(self, text, offset):
        with self.assertRaises(ExpressionError) as ctx:
            parse(text)
        self.assertEqual(ctx.exception.offset, offset, str(ctx.exception))
        self.assertTrue(str(ctx.exception).endswith(f"at byte {offset}"))

    def test_missing_header(self):
        self.assertErrorAt("psi1", 0)

    def test_unstable_space(self):
        self.assertErrorAt("M(1,0): ka1", 2)

    def test_unknown_token(self):
        self.assertErrorAt("M(1,1): foo", 8)

    def test_byte_offsets(self):
        # the no-break space is two bytes in UTF-8
        self.assertErrorAt("M(1,1):\u00a0foo", 9)

    def test_missing_star(self):
        self.assertErrorAt("M(1,1): psi1 psi1", 13)

    def test_zero_exponent(self):
        self.assertErrorAt("M(1,1): psi1^0", 13)

    def test_even_ch(self):
        self.assertErrorAt("M(2,0): ch2", 8)

    def test_ch_with_boundary(self):
        self.assertErrorAt("M(2,0): ch1 * d_irr^2", 14)

    def test_one_with_factors(self):
        self.assertErrorAt("M(1,1): 1 * psi1", 8)

    def test_subsets(self):
        self.assertErrorAt("M(1,2): d0_{2,1}", 12)
        self.assertErrorAt("M(1,2): d0", 10)
        self.assertErrorAt("M(2,0): d1_{1}", 12)
        self.assertErrorAt("M(1,2): d1_{1}", 8)

    def test_reducible_genus_out_of_range(self):
        self.assertErrorAt("M(0,5): d3_{1,2}", 8)
        self.assertErrorAt("M(1,3): psi1 * d2_{1,2}", 15)

    def test_psi_out_of_range(self):
        self.assertErrorAt("M(1,1): psi2", 8)


class EvaluateExpressionTests(SimpleTestCase):
    def test_divisors(self):
        self.assertEqual(evaluate_expression(parse("M(1,1): d_irr")), Fraction(1, 2))
        self.assertEqual(evaluate_expression(parse("M(1,2): psi1 * ka1")), Fraction(1, 12))

    def test_chern_characters(self):
        self.assertEqual(evaluate_expression(parse("M(2,0): ch3")), Fraction(-1, 34560))
        self.assertEqual(evaluate_expression(parse("M(2,0): la1 * ch1^2")), Fraction(1, 2880))
        self.assertEqual(evaluate_expression(parse("M(2,0): ch1")), 0)

    def test_format_normalizes(self):
        self.assertEqual(format_expression(parse("M(1,2):d0_{1,2}^2*psi1")), "M(1,2): psi1 * d0_{1,2}^2")
        self.assertEqual(format_expression(parse("M(0,3): 1")), "M(0,3): 1")
