import itertools
import unittest

from pcp_chain import testkit
from pcp_chain.core import Card
from pcp_chain.solvers import rewrite_successors
from pcp_chain.turing import (
    Config, Empty, LeftOf, MalformedConfig, Mid, Move, NotAConfig, RightOf, TmInstance, TmSpec, Transition,
    check_tm, decode_config, encode_config, initial_config, tm_rules, tm_run, tm_step
)

from . import utils


q0, q1, q2, a, b = 0, 1, 2, 3, 4


def one_step_machine() -> TmSpec:
    """Writes ``b`` on the blank tape and halts"""
    return TmSpec((b,), (q0, q1), q0, (q1,), {
        (q0, None): Transition(q1, b, Move.N),
        (q0, b): Transition(q1, b, Move.N),
    })


def configurations(machine: TmSpec, max_written: int = 3):
    """All configurations of a machine with a written part of at most ``max_written`` symbols"""
    for state in machine.states:
        yield Config(state, Empty())
        for length in range(1, max_written + 1):
            for tape in itertools.product(machine.tape_alphabet, repeat=length):
                tape = tuple(tape)
                yield Config(state, LeftOf(tape[0], tape[1:]))
                yield Config(state, RightOf(tape[-1], tape[:-1]))
                for i in range(length):
                    yield Config(state, Mid(tape[:i], tape[i], tape[i + 1:]))


class MachineTests(unittest.TestCase):
    def test_validation(self):
        with self.assertRaises(ValueError):
            TmSpec((b,), (q0, q1), q2, (q1,), {})
        with self.assertRaises(ValueError):
            TmSpec((b,), (q0, q1), q0, (q2,), {})
        with self.assertRaises(ValueError):
            TmSpec((b,), (q0, b), q0, (), {})
        with self.assertRaises(ValueError):
            TmSpec((b,), (q0, q1), q0, (q1,), {(q0, None): Transition(q1, b, Move.N)})

    def test_markers(self):
        m = one_step_machine()
        self.assertNotIn(m.left_marker, m.states + m.tape_alphabet)
        self.assertNotIn(m.right_marker, m.states + m.tape_alphabet + (m.left_marker,))

    def test_step(self):
        m = one_step_machine()
        self.assertEqual(Config(q1, Mid((), b, ())), tm_step(m, Config(q0, Empty())))
        self.assertIsNone(tm_step(m, Config(q1, Empty())))
        with self.assertRaises(MalformedConfig):
            tm_step(m, Config(q2, Empty()))
        right = TmSpec((a,), (q0, q1), q0, (q1,), {
            (q0, None): Transition(q0, None, Move.N),
            (q0, a): Transition(q1, None, Move.R),
        })
        self.assertEqual(Config(q1, RightOf(a, ())), tm_step(right, Config(q0, Mid((), a, ()))))

    def test_run(self):
        m = one_step_machine()
        result = tm_run(m, (), 10)
        self.assertTrue(result.halted)
        self.assertEqual(1, result.steps)
        self.assertEqual(0, tm_run(TmSpec((b,), (q0,), q0, (q0,), {}), (), 10).steps)
        loop = TmSpec((b,), (q0, q1), q0, (q1,), {
            (q0, None): Transition(q0, None, Move.N),
            (q0, b): Transition(q0, None, Move.N),
        })
        result = tm_run(loop, (), 5)
        self.assertFalse(result.halted)
        self.assertEqual(5, result.steps)

    def test_check(self):
        inst = TmInstance(one_step_machine(), ())
        self.assertTrue(check_tm(inst, 1))
        self.assertFalse(check_tm(inst, 0))
        self.assertFalse(check_tm(inst, 2))
        self.assertFalse(check_tm(TmInstance(one_step_machine(), (a,)), 1))

    def test_initial(self):
        m = one_step_machine()
        self.assertEqual(Config(q0, Empty()), initial_config(m, ()))
        self.assertEqual(Config(q0, LeftOf(b, (b,))), initial_config(m, (b, b)))

    def test_encoding(self):
        m = one_step_machine()
        lm, rm = m.left_marker, m.right_marker
        self.assertEqual((q0, lm, rm), encode_config(m, Config(q0, Empty())))
        self.assertEqual((lm, b, q1, b, b, rm), encode_config(m, Config(q1, Mid((b,), b, (b, b)))))
        self.assertEqual((q0, lm, b, b, rm), encode_config(m, Config(q0, LeftOf(b, (b,)))))
        self.assertEqual((lm, b, b, q0, rm), encode_config(m, Config(q0, RightOf(b, (b,)))))
        self.assertEqual(Config(q0, LeftOf(b, ())), decode_config(m, (q0, lm, b, rm)))
        for s in [(lm, rm), (q0, lm, q1, rm), (lm, q0, rm), (q0, b, rm), (lm, b, q0)]:
            with self.assertRaises(NotAConfig):
                decode_config(m, s)

    def test_decode_inverts_encode(self):
        def inverts(conf):
            m = testkit.gen_tm(conf).machine
            return all(decode_config(m, encode_config(m, config)) == config for config in configurations(m))

        utils.assert_holds(self, inverts, utils.configs(100, max_states=3))


class RuleTests(unittest.TestCase):
    def test_blank_write_stay(self):
        m = one_step_machine()
        lm, rm = m.left_marker, m.right_marker
        self.assertEqual(
            (Card((q0, lm), (lm, q1, b)), Card((q0, rm), (q1, b, rm)), Card((q0, b), (q1, b))),
            tm_rules(m)
        )

    def test_read_blank_left(self):
        m = TmSpec((a,), (q0, q1), q0, (q1,), {
            (q0, None): Transition(q1, None, Move.N),
            (q0, a): Transition(q1, None, Move.L),
        })
        lm = m.left_marker
        self.assertEqual((Card((lm, q0, a), (q1, lm, a)), Card((a, q0, a), (q1, a, a))), tm_rules(m)[2:])

    def test_halting_states_emit_no_rules(self):
        def clean(conf):
            m = testkit.gen_tm(conf).machine
            return all(q not in rule.top for rule in tm_rules(m) for q in m.halting)

        utils.assert_holds(self, clean, utils.configs(100))

    def test_simulation(self):
        def simulates(conf):
            m = testkit.gen_tm(conf).machine
            rules = tm_rules(m)
            for config in configurations(m):
                successors = {s for s, _, _ in rewrite_successors(rules, encode_config(m, config))}
                upcoming = tm_step(m, config)
                expected = set() if upcoming is None else {encode_config(m, upcoming)}
                if successors != expected:
                    return False
            return True

        utils.assert_holds(self, simulates, utils.configs(200, max_states=3))

    def test_literal_rules_diverge(self):
        m = TmSpec((a,), (q0, q1), q0, (q1,), {
            (q0, None): Transition(q1, None, Move.R),
            (q0, a): Transition(q1, None, Move.N),
        })
        config = initial_config(m, (a,))
        expected = encode_config(m, tm_step(m, config))
        start = encode_config(m, config)
        self.assertIn(expected, [s for s, _, _ in rewrite_successors(tm_rules(m), start)])
        literal = [s for s, _, _ in rewrite_successors(tm_rules(m, literal=True), start)]
        self.assertNotIn(expected, literal)
        self.assertEqual(Config(q0, Mid((), a, ())), decode_config(m, literal[0]))
