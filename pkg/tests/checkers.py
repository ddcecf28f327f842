import unittest

from pcp_chain.core import Card
from pcp_chain.problems import (
    CfiInstance, CfpInstance, MpcpInstance, PcpInstance, SrhInstance, SrhPrimeInstance, SrInstance, Step,
    check_cfi, check_cfp, check_mpcp, check_pcp, check_sr, check_srh, check_srh_prime, replay
)


a, b, c, x, h = 0, 1, 2, 5, 9

SAMPLE_PCP = PcpInstance([Card((a,), ()), Card((b,), (a,)), Card((), (b, b))])
SAMPLE_SR = SrInstance([Card((b, c), (a,)), Card((a, a), (b,))], (a, b, c), (b,))


class CheckerTests(unittest.TestCase):
    def test_pcp(self):
        self.assertTrue(check_pcp(SAMPLE_PCP, (2, 1, 1, 0, 0)))
        self.assertTrue(check_pcp(SAMPLE_PCP, (0, 0, 1, 1, 2)))
        self.assertFalse(check_pcp(PcpInstance([Card((a,), (a,))]), ()))
        self.assertFalse(check_pcp(PcpInstance([Card((a,), (b,))]), (0,)))

    def test_pcp_reasons(self):
        result = check_pcp(SAMPLE_PCP, (0, 3))
        self.assertFalse(result)
        self.assertIn("index 3 at position 1", result.reason)
        self.assertIn("empty", check_pcp(SAMPLE_PCP, ()).reason)
        self.assertIsNone(check_pcp(SAMPLE_PCP, (2, 1, 1, 0, 0)).reason)

    def test_pcp_unused_cards(self):
        extended = PcpInstance((Card((c,), (a,)),) + SAMPLE_PCP.cards)
        self.assertTrue(check_pcp(extended, (3, 2, 2, 1, 1)))

    def test_mpcp(self):
        self.assertTrue(check_mpcp(MpcpInstance(Card((a,), (a,)), []), ()))
        inst = MpcpInstance(Card((a,), (a, a)), [Card((a,), ())])
        self.assertTrue(check_mpcp(inst, (1,)))
        self.assertFalse(check_mpcp(inst, ()))
        self.assertFalse(check_mpcp(inst, (2,)))
        self.assertEqual((Card((a,), (a, a)), Card((a,), ())), inst.all_cards)

    def test_sr(self):
        self.assertTrue(check_sr(SAMPLE_SR, (Step(0, 1), Step(1, 0))))
        self.assertTrue(check_sr(SrInstance(SAMPLE_SR.rules, (a, b), (a, b)), ()))
        self.assertFalse(check_sr(SrInstance([Card((a,), (b,))], (a, a), (a, a)), (Step(0, 0),)))
        self.assertIn("does not match", check_sr(SAMPLE_SR, (Step(1, 0),)).reason)
        self.assertIn("out of range", check_sr(SAMPLE_SR, (Step(2, 0),)).reason)
        self.assertIn("cut 3 invalid", check_sr(SAMPLE_SR, (Step(0, 3),)).reason)

    def test_sr_composition(self):
        first = SrInstance(SAMPLE_SR.rules, (a, b, c), (a, a))
        second = SrInstance(SAMPLE_SR.rules, (a, a), (b,))
        self.assertTrue(check_sr(first, (Step(0, 1),)))
        self.assertTrue(check_sr(second, (Step(1, 0),)))
        self.assertTrue(check_sr(SAMPLE_SR, (Step(0, 1),) + (Step(1, 0),)))

    def test_sr_extension(self):
        extended = SrInstance((Card((c,), (c, c)),) + SAMPLE_SR.rules, SAMPLE_SR.start, SAMPLE_SR.target)
        self.assertTrue(check_sr(extended, (Step(1, 1), Step(2, 0))))

    def test_srh(self):
        rules = [Card((a,), (b,))]
        self.assertTrue(check_srh(SrhInstance(rules, (a, a), b), (Step(0, 0),)))
        self.assertTrue(check_srh(SrhInstance(rules, (a, b), b), ()))
        self.assertFalse(check_srh(SrhInstance(rules, (a, a), c), (Step(0, 0),)))

    def test_srh_prime(self):
        rules = [Card((a,), (b,))]
        self.assertTrue(check_srh_prime(SrhPrimeInstance(rules, (a, c), (c, b)), ()))
        self.assertFalse(check_srh_prime(SrhPrimeInstance(rules, (a, b), ()), ()))
        self.assertTrue(check_srh_prime(SrhPrimeInstance(rules, (a,), (b, c)), (Step(0, 0),)))

    def test_replay(self):
        self.assertEqual(((a, a), None), replay(SAMPLE_SR.rules, (a, b, c), (Step(0, 1),)))
        final, reason = replay(SAMPLE_SR.rules, (a, b, c), (Step(0, 0),))
        self.assertIsNone(final)
        self.assertIn("step 0", reason)

    def test_cfp(self):
        self.assertTrue(check_cfp(CfpInstance([Card((a,), (a,))], h), (0,)))
        self.assertTrue(check_cfp(CfpInstance(SAMPLE_PCP.cards, h), (2, 1, 1, 0, 0)))
        self.assertFalse(check_cfp(CfpInstance([Card((a, b), ())], h), (0,)))
        self.assertFalse(check_cfp(CfpInstance([Card((a,), (a,))], h), ()))

    def test_cfi(self):
        same = [Card((a,), (b,))]
        self.assertTrue(check_cfi(CfiInstance(same, same, h), (0,), (0,)))
        self.assertFalse(check_cfi(CfiInstance([Card((a,), (x,))], [Card((b,), (x,))], h), (0,), (0,)))
        serialised = (a, b, h, a, b, h)
        inst = CfiInstance([Card((a, b), serialised)], [Card((a, b), serialised)], h)
        self.assertTrue(check_cfi(inst, (0,), (0,)))
        self.assertFalse(check_cfi(inst, (), (0,)))
        self.assertIn("second grammar", check_cfi(inst, (0,), (1,)).reason)
