import unittest

from pcp_chain import testkit
from pcp_chain.core import Card
from pcp_chain.problems import (
    CfiInstance, CfpInstance, MpcpInstance, PcpInstance, SrhInstance, SrhPrimeInstance, SrInstance, Step,
    check_cfi, check_cfp, check_mpcp, check_pcp, check_sr, check_srh
)
from pcp_chain.solvers import (
    BALANCED, Found, NotFoundWithinBound, SearchBound, extend_overhang, paired_cards, rewrite_successors,
    solve_cfi, solve_cfp, solve_mpcp, solve_pcp, solve_sr, solve_srh, solve_srh_prime
)
from pcp_chain.reductions.grammars import reduce_pcp_to_cfi

from . import utils


a, b, c, h = 0, 1, 2, 9

SAMPLE_PCP = PcpInstance([Card((a,), ()), Card((b,), (a,)), Card((), (b, b))])
SAMPLE_SR = SrInstance([Card((b, c), (a,)), Card((a, a), (b,))], (a, b, c), (b,))


class SolverTests(unittest.TestCase):
    def test_rewrite_successors(self):
        self.assertEqual([((b, a), 0, 0), ((a, b), 0, 1)], rewrite_successors([Card((a,), (b,))], (a, a)))
        self.assertEqual([((c, a), 0, 0), ((a, c), 0, 1)], rewrite_successors([Card((), (c,))], (a,)))
        self.assertEqual([], rewrite_successors([], (a, b, c)))

    def test_solve_sr(self):
        outcome = solve_sr(SAMPLE_SR, SearchBound(max_steps=10, max_len=10))
        self.assertIsInstance(outcome, Found)
        self.assertEqual((Step(0, 1), Step(1, 0)), outcome.witness)
        self.assertEqual((), solve_sr(SrInstance(SAMPLE_SR.rules, (a, c), (a, c)), SearchBound()).witness)
        outcome = solve_sr(SrInstance([Card((a,), (a, a))], (a,), (b,)), SearchBound(max_steps=5, max_len=8))
        self.assertIsInstance(outcome, NotFoundWithinBound)
        self.assertFalse(outcome.found)
        self.assertGreater(outcome.explored, 0)

    def test_solve_srh(self):
        outcome = solve_srh(SrhInstance([Card((a,), (b,))], (a, a), b), SearchBound())
        self.assertEqual((Step(0, 0),), outcome.witness)
        self.assertEqual((), solve_srh(SrhInstance([], (a, b), b), SearchBound()).witness)
        self.assertFalse(solve_srh(SrhInstance([], (a,), b), SearchBound()).found)

    def test_solve_srh_prime(self):
        inst = SrhPrimeInstance([Card((a,), (b,))], (a,), (b, c))
        self.assertEqual((Step(0, 0),), solve_srh_prime(inst, SearchBound()).witness)
        self.assertFalse(solve_srh_prime(SrhPrimeInstance([Card((a,), (b,))], (a,), ()), SearchBound()).found)

    def test_overhang(self):
        self.assertEqual((1, (a,)), extend_overhang(BALANCED, Card((a,), ())))
        self.assertEqual(BALANCED, extend_overhang((1, (a,)), Card((b,), (a, b))))
        self.assertEqual((-1, (b,)), extend_overhang((1, (a,)), Card((), (a, b))))
        self.assertIsNone(extend_overhang(BALANCED, Card((a,), (b,))))

    def test_solve_pcp(self):
        outcome = solve_pcp(SAMPLE_PCP, SearchBound(max_cards=5))
        self.assertEqual((0, 0, 1, 1, 2), outcome.witness)
        self.assertTrue(check_pcp(SAMPLE_PCP, outcome.witness))
        self.assertIn((2, 1, 1, 0, 0), testkit.oracle_pcp(SAMPLE_PCP, 5))
        self.assertEqual(outcome.witness, testkit.oracle_pcp(SAMPLE_PCP, 5)[0])
        self.assertFalse(solve_pcp(SAMPLE_PCP, SearchBound(max_cards=4)).found)
        self.assertEqual((0,), solve_pcp(PcpInstance([Card((a, b), (a, b))]), SearchBound(max_cards=1)).witness)
        self.assertFalse(solve_pcp(PcpInstance([Card((a,), (b,))]), SearchBound(max_cards=6)).found)

    def test_solve_mpcp(self):
        self.assertEqual((), solve_mpcp(MpcpInstance(Card((a,), (a,)), []), SearchBound()).witness)
        inst = MpcpInstance(Card((a,), (a, a)), [Card((a,), ())])
        self.assertEqual((1,), solve_mpcp(inst, SearchBound()).witness)
        self.assertFalse(solve_mpcp(MpcpInstance(Card((a,), (b,)), []), SearchBound()).found)

    def test_solve_cfp(self):
        self.assertEqual((0,), solve_cfp(CfpInstance([Card((a,), (a,))], h), SearchBound()).witness)
        self.assertFalse(solve_cfp(CfpInstance([Card((a, b), ())], h), SearchBound(max_cards=3)).found)
        outcome = solve_cfp(CfpInstance(SAMPLE_PCP.cards, h), SearchBound(max_cards=5))
        self.assertTrue(check_cfp(CfpInstance(SAMPLE_PCP.cards, h), outcome.witness))

    def test_solve_cfi(self):
        same = [Card((a,), (b,))]
        self.assertEqual(((0,), (0,)), solve_cfi(CfiInstance(same, same, h), SearchBound()).witness)
        paired = reduce_pcp_to_cfi(SAMPLE_PCP).instance
        self.assertEqual(SAMPLE_PCP.cards, paired_cards(paired))
        outcome = solve_cfi(paired, SearchBound(max_cards=5))
        self.assertEqual(((0, 0, 1, 1, 2), (0, 0, 1, 1, 2)), outcome.witness)
        self.assertIsNone(paired_cards(CfiInstance(same, same, h)))
        inst = CfiInstance([Card((a,), ()), Card((b,), ())], [Card((a, b), ())], h)
        outcome = solve_cfi(inst, SearchBound(max_cards=3))
        self.assertEqual(((0, 1), (0,)), outcome.witness)
        self.assertTrue(check_cfi(inst, *outcome.witness))
        self.assertFalse(solve_cfi(CfiInstance([Card((a,), ())], [Card((b,), ())], h), SearchBound(max_cards=3)).found)

    def test_determinism(self):
        for seed in range(20):
            inst = testkit.gen_pcp(testkit.GenConfig(seed=seed))
            self.assertEqual(solve_pcp(inst, SearchBound(max_cards=4)), solve_pcp(inst, SearchBound(max_cards=4)))


class OracleTests(unittest.TestCase):
    def test_oracle_pcp(self):
        self.assertEqual([], testkit.oracle_pcp(PcpInstance([Card((a,), (b,))]), 5))

    def test_solve_pcp_agrees_with_oracle(self):
        bound = SearchBound(max_cards=4, max_len=8)

        def agrees(conf):
            inst = testkit.gen_pcp(conf)
            matches = testkit.oracle_pcp(inst, 4)
            outcome = solve_pcp(inst, bound)
            if not matches:
                return not outcome.found
            return outcome.found and outcome.witness == matches[0] and bool(check_pcp(inst, outcome.witness))

        utils.assert_holds(self, agrees, utils.configs(500))

    def test_planted_pcp(self):
        def solved(conf):
            inst, witness = testkit.gen_planted_pcp(conf)
            if not check_pcp(inst, witness):
                return False
            outcome = solve_pcp(inst, SearchBound(max_cards=len(witness), max_len=16))
            return outcome.found and len(outcome.witness) <= len(witness)

        utils.assert_holds(self, solved, utils.configs(200, max_cards=3))

    def test_oracle_sr(self):
        self.assertEqual(2, testkit.oracle_sr(SAMPLE_SR, 4, 3))
        self.assertEqual(0, testkit.oracle_sr(SrInstance(SAMPLE_SR.rules, (a, b, c), (a, b, c)), 0, 3))
        self.assertIsNone(testkit.oracle_sr(SAMPLE_SR, 1, 3))
        self.assertIsNone(testkit.oracle_sr(SAMPLE_SR, 4, 1))
        overlapping = SrInstance([Card((a, a), (b,))], (a, a, a), (a, b))
        self.assertEqual(1, testkit.oracle_sr(overlapping, 2, 3))
        self.assertEqual(1, testkit.oracle_sr(SrInstance([Card((), (c,))], (a,), (c, a)), 1, 2))

    def test_solve_sr_agrees_with_oracle(self):
        def agrees(conf):
            inst = testkit.gen_srs(conf)
            distance = testkit.oracle_sr(inst, 4, 3)
            outcome = solve_sr(inst, SearchBound(max_steps=4, max_len=3))
            if distance is None:
                return not outcome.found
            return outcome.found and len(outcome.witness) == distance and bool(check_sr(inst, outcome.witness))

        utils.assert_holds(self, agrees, utils.configs(300, max_cards=2, max_side_len=3))

    def test_monotonicity(self):
        def monotone(conf):
            inst = testkit.gen_pcp(conf)
            small = solve_pcp(inst, SearchBound(max_cards=3, max_len=8))
            large = solve_pcp(inst, SearchBound(max_cards=5, max_len=8))
            return not small.found or large.witness == small.witness

        utils.assert_holds(self, monotone, utils.configs(200))

    def test_found_witnesses_check(self):
        def sound(conf):
            inst = testkit.gen_mpcp(conf)
            outcome = solve_mpcp(inst, SearchBound(max_cards=4, max_len=8))
            srh = testkit.gen_srh(conf)
            srh_outcome = solve_srh(srh, SearchBound(max_steps=4, max_len=6))
            return (not outcome.found or bool(check_mpcp(inst, outcome.witness))) and \
                (not srh_outcome.found or bool(check_srh(srh, srh_outcome.witness)))

        utils.assert_holds(self, sound, utils.configs(200))
