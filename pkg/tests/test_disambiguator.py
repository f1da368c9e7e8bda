import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from cases import random_case
from clwsd import (
    Answer,
    EmbeddingModel,
    Instance,
    Lexicon,
    Translation,
    build_context,
    context_vec,
    disambiguate,
    rel_agg,
    rel_greedy,
    sim,
    std_baseline,
)
from clwsd.disambiguator import ContextTranslations

MODEL = EmbeddingModel({"a": [1.0, 0.0], "b": [0.0, 1.0], "c": [0.6, 0.8]})


def tr(words, p=1.0):
    return Translation(tuple(words.split()), p)


class TestSim:
    def test_examples(self):
        assert sim(tr("a"), tr("a"), MODEL) == 1.0
        assert sim(tr("a"), tr("b c"), MODEL) == pytest.approx(0.6, abs=1e-15)
        assert sim(tr("zzz"), tr("a"), MODEL) is None

    def test_zero_vector_unusable(self):
        m = EmbeddingModel({"a": [1.0, 0.0], "z": [0.0, 0.0]})
        assert sim(tr("z"), tr("a"), m) is None
        assert sim(tr("z a"), tr("a"), m) == 1.0

    @given(st.integers(0, 2**32 - 1))
    def test_symmetric(self, seed):
        case = random_case(np.random.default_rng(seed))
        terms = [Translation(w, p) for w, p in case.cands]
        for x in terms:
            for y in terms:
                assert sim(x, y, case.model) == sim(y, x, case.model)


class TestContextVec:
    def test_single_set(self):
        np.testing.assert_allclose(context_vec(tr("a"), [[tr("c")]], MODEL), (0.6, 0.8), atol=1e-15)

    def test_argmax_member(self):
        np.testing.assert_allclose(context_vec(tr("a"), [[tr("c"), tr("b")]], MODEL), (0.6, 0.8), atol=1e-15)

    def test_sum_then_normalize(self):
        s = math.sqrt(3.6)
        got = context_vec(tr("a"), [[tr("c")], [tr("b")]], MODEL)
        np.testing.assert_allclose(got, (0.6 / s, 1.8 / s), atol=1e-15)
        np.testing.assert_allclose(got, (0.316227766, 0.948683298), atol=1e-9)

    def test_tie_prefers_higher_probability(self):
        m = EmbeddingModel({"a": [1.0, 0.0], "p": [1.0, 1.0], "q": [1.0, -1.0]})
        got = context_vec(tr("a"), [[tr("p", 0.4), tr("q", 0.6)]], m)
        np.testing.assert_allclose(got, np.array([1.0, -1.0]) / math.sqrt(2))

    def test_unscorable_sets_skipped(self):
        np.testing.assert_array_equal(context_vec(tr("a"), [[tr("zzz")]], MODEL), (0.0, 0.0))
        np.testing.assert_allclose(context_vec(tr("a"), [[tr("zzz")], [tr("b")]], MODEL), (0.0, 1.0))

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            context_vec(tr("a"), [], MODEL)
        with pytest.raises(ValueError):
            ContextTranslations(((),))


class TestScores:
    def test_rel_agg(self):
        assert rel_agg(tr("a", 0.5), [[tr("c")]], MODEL) == pytest.approx(0.3, abs=1e-15)
        assert rel_agg(tr("a", 1.0), [[tr("a")]], MODEL) == 1.0
        assert rel_agg(tr("zzz", 1.0), [[tr("a")]], MODEL) is None
        assert rel_agg(tr("a", 1.0), [], MODEL) is None

    def test_rel_greedy(self):
        assert rel_greedy(tr("a", 0.5), [[tr("c"), tr("b")]], MODEL) == pytest.approx(0.3, abs=1e-15)
        assert rel_greedy(tr("a", 1.0), [[tr("a")]], MODEL) == 1.0
        assert rel_greedy(tr("a", 0.5), [[tr("b")]], MODEL) == 0.0
        assert rel_greedy(tr("a", 0.5), [], MODEL) is None

    @given(st.integers(0, 2**32 - 1))
    def test_bounded_by_probability(self, seed):
        case = random_case(np.random.default_rng(seed))
        T = build_context(case.instance, case.lexicon)
        for t in case.lexicon["target"]:
            for score in (rel_agg(t, T, case.model), rel_greedy(t, T, case.model)):
                if score is not None:
                    assert abs(score) <= t.probability

    @given(st.integers(0, 2**32 - 1))
    def test_greedy_self_match(self, seed):
        case = random_case(np.random.default_rng(seed))
        for t in case.lexicon["target"]:
            got = rel_greedy(t, [[t]], case.model)
            if oracles.term_vec(t.words, case.vecs) is None:
                assert got is None
            else:
                assert got == pytest.approx(t.probability, abs=1e-9)


WORKED = Lexicon({
    "w": [tr("a", 0.5), tr("b", 0.5)],
    "ctx": [tr("c")],
})


class TestDisambiguate:
    def test_worked_example(self):
        inst = Instance("w.1", "w", ("ctx",))
        T = build_context(inst, WORKED)
        assert rel_greedy(WORKED["w"][0], T, MODEL) == pytest.approx(0.3, abs=1e-15)
        assert rel_greedy(WORKED["w"][1], T, MODEL) == pytest.approx(0.4, abs=1e-15)
        assert disambiguate(inst, WORKED, MODEL, "relgreedy", "best") == Answer("w.1", "w", ("b",))
        assert disambiguate(inst, WORKED, MODEL, "relgreedy", "oof").ranked == ("b", "a")

    def test_empty_context_falls_back(self):
        inst = Instance("w.2", "w", ())
        for method in ("relagg", "relgreedy"):
            assert disambiguate(inst, WORKED, MODEL, method, "best").ranked == ("a",)
        unknown = Instance("w.3", "w", ("nope", "nada"))
        assert disambiguate(unknown, WORKED, MODEL, "relagg", "oof").ranked == ("a", "b")

    def test_target_excluded_from_context(self):
        inst = Instance("w.4", "w", ("w", "ctx", "w"))
        assert len(build_context(inst, WORKED)) == 1

    def test_duplicate_context_lemmas_repeat_sets(self):
        assert len(build_context(Instance("i", "w", ("ctx", "ctx")), WORKED)) == 2

    def test_unscorable_ranked_last(self):
        lex = Lexicon({"w": [tr("zzz", 0.7), tr("a", 0.2), tr("yyy", 0.1)], "ctx": [tr("c")]})
        got = disambiguate(Instance("i", "w", ("ctx",)), lex, MODEL, "relgreedy", "oof")
        assert got.ranked == ("a", "zzz", "yyy")

    def test_score_ties_break_on_probability_then_surface(self):
        m = EmbeddingModel({"p": [1.0, 0.0], "q": [1.0, 0.0], "r": [1.0, 0.0], "c": [1.0, 0.0]})
        lex = Lexicon({"w": [tr("r", 1 / 3), tr("q", 1 / 3), tr("p", 1 / 3)], "ctx": [tr("c")]})
        got = disambiguate(Instance("i", "w", ("ctx",)), lex, m, "relgreedy", "oof")
        assert got.ranked == ("p", "q", "r")

    def test_oof_caps_at_five(self):
        lex = Lexicon({"w": [tr(f"x{i}", 1 / 7) for i in range(7)]})
        assert len(disambiguate(Instance("i", "w", ()), lex, MODEL, "relagg", "oof").ranked) == 5

    def test_unknown_target(self):
        with pytest.raises(KeyError):
            disambiguate(Instance("i", "nope", ()), WORKED, MODEL)
        with pytest.raises(ValueError):
            disambiguate(Instance("i", "w", ()), WORKED, MODEL, "typo")


class TestBaseline:
    lex = Lexicon({"bank": [tr("ساحل", 0.75), tr("بانک", 0.25)], "cell": [tr("سلول")]})

    def test_modes(self):
        assert std_baseline(Instance("1", "bank"), self.lex, "best").ranked == ("ساحل",)
        assert std_baseline(Instance("1", "bank"), self.lex, "oof").ranked == ("ساحل", "بانک")
        for mode in ("best", "oof"):
            assert std_baseline(Instance("2", "cell"), self.lex, mode).ranked == ("سلول",)

    def test_unknown(self):
        with pytest.raises(KeyError):
            std_baseline(Instance("1", "nope"), self.lex)


def _scaled_probs(lex: Lexicon, factor: float) -> Lexicon:
    return Lexicon({k: [Translation(t.words, t.probability * factor) for t in ts] for k, ts in lex.items()})


class TestProperties:
    @settings(max_examples=150)
    @given(st.integers(0, 2**32 - 1), st.sampled_from(["relagg", "relgreedy"]), st.sampled_from(["best", "oof"]))
    def test_matches_oracle(self, seed, method, mode):
        case = random_case(np.random.default_rng(seed))
        k = 1 if mode == "best" else 5
        expected, _ = oracles.answer(case.cands, case.context, case.vecs, case.dim, method, k)
        got = disambiguate(case.instance, case.lexicon, case.model, method, mode)
        assert list(got.ranked) == expected

    @given(st.integers(0, 2**32 - 1), st.sampled_from([0.125, 0.5, 2.0, 16.0]))
    def test_embedding_scaling_invariance(self, seed, factor):
        case = random_case(np.random.default_rng(seed))
        scaled = case.model.scaled(factor)
        for method in ("relagg", "relgreedy"):
            for mode in ("best", "oof"):
                assert (disambiguate(case.instance, case.lexicon, case.model, method, mode)
                        == disambiguate(case.instance, case.lexicon, scaled, method, mode))

    @given(st.integers(0, 2**32 - 1), st.sampled_from([0.125, 0.25, 0.5]))
    def test_probability_scaling_invariance(self, seed, factor):
        case = random_case(np.random.default_rng(seed))
        scaled = _scaled_probs(case.lexicon, factor)
        for method in ("relagg", "relgreedy"):
            for mode in ("best", "oof"):
                assert (disambiguate(case.instance, case.lexicon, case.model, method, mode)
                        == disambiguate(case.instance, scaled, case.model, method, mode))

    def test_deterministic_under_parallelism(self):
        cases = [random_case(np.random.default_rng(s)) for s in range(60)]
        run = lambda c: disambiguate(c.instance, c.lexicon, c.model, "relagg", "oof")
        serial = [run(c) for c in cases]
        with ThreadPoolExecutor(max_workers=8) as pool:
            assert list(pool.map(run, cases)) == serial
        assert [run(c) for c in cases] == serial
