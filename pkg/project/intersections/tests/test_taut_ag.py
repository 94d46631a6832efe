from fractions import Fraction

from django.test import SimpleTestCase, tag

from intersections.arith import InvalidArgument
from intersections.taut_ag import (
    RingElement,
    SingularSystem,
    TautRing,
    conjecture1_coefficient,
    conjecture2_coefficient,
    evaluate_top,
    evaluate_top_groebner,
    format_class,
    jacobian_class,
    pair,
    probe_monomials,
    proportionality_value,
    recover_lambda_number,
)


class TautRingTests(SimpleTestCase):
    def test_square_free_basis(self):
        ring = TautRing(3)
        self.assertEqual(ring.top_degree, 6)
        self.assertEqual(ring.basis(3), [(1, 2), (3,)])
        self.assertEqual(TautRing(7).basis(10), [(1, 2, 3, 4), (1, 2, 7), (1, 3, 6), (1, 4, 5), (2, 3, 5), (3, 7), (4, 6)])

    def test_reduce_square(self):
        self.assertEqual(TautRing(2).reduce((1, 1)), {(2,): 2})
        self.assertEqual(TautRing(2).reduce((2, 2)), {})

    def test_genus_must_be_positive(self):
        with self.assertRaises(InvalidArgument):
            TautRing(0)


class EvaluateTopTests(SimpleTestCase):
    def test_proportionality(self):
        self.assertEqual(proportionality_value(1), Fraction(1, 24))
        self.assertEqual(proportionality_value(2), Fraction(1, 5760))
        self.assertEqual(evaluate_top(3, (1, 2, 3)), proportionality_value(3))

    def test_lambda_one_powers(self):
        self.assertEqual(evaluate_top(2, (1, 1, 1)), Fraction(1, 2880))
        self.assertEqual(evaluate_top(4, (1,) * 10), Fraction(1, 1814400))

    def test_index_above_genus(self):
        self.assertEqual(evaluate_top(2, (3,)), 0)

    def test_wrong_degree(self):
        with self.assertRaises(InvalidArgument):
            evaluate_top(3, (1, 2))

    def test_groebner_agrees(self):
        for mono in ((1,) * 6, (1, 1, 2, 2), (2, 2, 2), (1, 1, 1, 3), (3, 3), (1, 2, 3)):
            self.assertEqual(evaluate_top_groebner(3, mono), evaluate_top(3, mono), mono)

    def test_pair_is_symmetric(self):
        self.assertEqual(pair(4, (1,), (2, 3, 4)), pair(4, (2, 3, 4), (1,)))


class JacobianTests(SimpleTestCase):
    def test_genus_three_is_fundamental_class(self):
        cls = jacobian_class(3)
        self.assertEqual(cls.basis, ((),))
        self.assertEqual(cls.coefficients, (1,))
        self.assertEqual(format_class(cls), "1 * 1")

    def test_genus_four(self):
        cls = jacobian_class(4)
        self.assertEqual(cls.as_dict(), {(1,): 8})
        self.assertEqual(probe_monomials(4)[0], (2, 3, 4))

    def test_recovers_lambda_one_power(self):
        cls = RingElement(4, 1, ((1,),), (Fraction(8),))
        self.assertEqual(recover_lambda_number(4, cls, (1,) * 9), Fraction(1, 113400))

    def test_singular_probes(self):
        # lambda_g^2 = 0
        with self.assertRaises(SingularSystem):
            jacobian_class(4, probes=[(1, 4, 4)])

    def test_probe_validation(self):
        with self.assertRaises(InvalidArgument):
            jacobian_class(2)
        with self.assertRaises(InvalidArgument):
            jacobian_class(4, probes=[(1, 2)])
        with self.assertRaises(InvalidArgument):
            jacobian_class(4, probes=[(2, 3, 4), (1, 4, 4)])

    @tag("slow")
    def test_genus_five(self):
        cls = jacobian_class(5)
        self.assertEqual(format_class(cls), "72 * la1la2 + -48 * la3")
        self.assertEqual(jacobian_class(5, probes=[(1, 2, 4, 5), (3, 4, 5)]), cls)

    @tag("slow")
    def test_probe_choice_irrelevant(self):
        self.assertEqual(jacobian_class(4, probes=[(1,) * 9]).as_dict(), {(1,): 8})

    @tag("slow")
    def test_genus_six(self):
        c = jacobian_class(6).as_dict()
        self.assertEqual(c[(1, 2, 3)], 384)
        self.assertEqual(c[(2, 4)], -1152)
        self.assertEqual(c[(1, 5)], Fraction(474048, 691))
        self.assertEqual(c[(6,)], Fraction(-248064, 691))
        self.assertEqual(c[(6,)] + 16 * c[(1, 5)], Fraction(7336704, 691))
        self.assertEqual(15 * c[(6,)] + 28 * c[(1, 5)], 13824)

    @tag("slow")
    def test_genus_seven(self):
        cls = jacobian_class(7)
        self.assertEqual(
            cls.as_dict(),
            {
                (1, 2, 3, 4): 768,
                (2, 3, 5): -6912,
                (1, 4, 5): Fraction(2209152, 691),
                (1, 3, 6): Fraction(7522176, 691),
                (4, 6): Fraction(-8842752, 691),
                (3, 7): Fraction(968832, 691),
                (1, 2, 7): Fraction(-3276672, 691),
            },
        )
        self.assertEqual(recover_lambda_number(7, cls, (1,) * 18), Fraction(32017001, 638512875))


class ConjectureTests(SimpleTestCase):
    def test_first(self):
        self.assertEqual([conjecture1_coefficient(g) for g in range(3, 8)], [1, 8, 72, 384, 768])
        for g in range(8, 13):
            self.assertNotEqual(conjecture1_coefficient(g).denominator, 1, g)

    def test_second(self):
        self.assertEqual([conjecture2_coefficient(g) for g in range(5, 8)], [-48, -1152, -6912])
        for g in range(8, 13):
            self.assertNotEqual(conjecture2_coefficient(g).denominator, 1, g)
        with self.assertRaises(InvalidArgument):
            conjecture2_coefficient(4)

    def test_match_computed_classes(self):
        self.assertEqual(jacobian_class(4).coefficients[0], conjecture1_coefficient(4))


class FormatTests(SimpleTestCase):
    def test_fractions_and_zero_terms(self):
        cls = RingElement(6, 6, ((1, 2, 3), (1, 5), (2, 4), (6,)), (Fraction(384), Fraction(474048, 691), Fraction(0), Fraction(-1)))
        self.assertEqual(format_class(cls), "384 * la1la2la3 + 474048/691 * la1la5 + -1 * la6")
        self.assertEqual(format_class(RingElement(4, 1, ((1,),), (Fraction(0),))), "0")
