import os

import pytest

from kodag import DomainError, read_fixture
from kodag.verify import FAIL, PASS, REPORT, CheckResult, random_instances, run_suite, summarize

_files = os.path.dirname(__file__) + '/files/'


def _statuses(results):
    return {result.status for result in results}


class TestSuites(object):
    def test_zeta_equivalence(self):
        results = list(run_suite('zeta-equivalence', levels=4, random_count=4, seed=1))

        assert _statuses(results) == {PASS}
        assert any(result.name == 'cobweb fib+root n=4 kwasniewski-delta' for result in results)

    def test_mobius(self):
        results = list(run_suite('mobius', levels=4, random_count=4))

        assert _statuses(results) == {PASS}

    def test_max(self):
        results = list(run_suite('max', levels=3, random_count=3))

        assert _statuses(results) == {PASS}
        assert any(result.name.endswith('chain-count-oracle') for result in results)

    def test_theorems(self):
        results = list(run_suite('theorems', levels=1))

        assert _statuses(results) == {PASS}
        assert 'cobweb nat pascal-binomial' in [result.name for result in results]

    def test_conjectures_only_report(self):
        fixtures = [('counterexample', read_fixture(_files + 'counterexample.json'))]
        results = list(run_suite('conjectures', levels=3, fixtures=fixtures))
        closed_form = [result for result in results if result.name == 'counterexample closed-form'][0]

        assert _statuses(results) == {REPORT}
        assert closed_form.detail == 'mismatch at (1, 4) block (1, 3): exact 0 closed form 1'

    def test_fixture_expectations(self):
        fixtures = [('counterexample', read_fixture(_files + 'counterexample_expected.json'))]
        results = list(run_suite('all', levels=2, fixtures=fixtures))
        names = [result.name for result in results if result.status != REPORT]

        assert FAIL not in _statuses(results)
        assert 'counterexample expected zeta' in names
        assert 'counterexample expected mobius' in names
        assert 'counterexample expected max' in names

    def test_corrupted_fixture_fails(self):
        fixtures = [('corrupted', read_fixture(_files + 'counterexample_corrupted.json'))]
        results = list(run_suite('mobius', levels=2, fixtures=fixtures))
        failures = [result.name for result in results if result.status == FAIL]

        assert failures == ['corrupted expected mobius']

    def test_extra_posets(self, chain_with_mute):
        results = list(run_suite('mobius', levels=2, posets=[('mute', chain_with_mute)]))

        assert _statuses(results) == {PASS}
        assert 'mute recurrence' in [result.name for result in results]

    def test_unknown_suite(self):
        with pytest.raises(ValueError):
            list(run_suite('proofs'))


class TestRandomInstances(object):
    def test_seeded(self):
        first = random_instances(6, seed=5)
        second = random_instances(6, seed=5)

        assert [instance.label for instance in first] == [instance.label for instance in second]
        assert all(a.poset.equals(b.poset) for a, b in zip(first, second))

    def test_bounds(self):
        for instance in random_instances(10, seed=2, max_levels=3, max_size=2):
            assert 1 <= instance.poset.levels <= 3
            assert all(1 <= size <= 2 for size in instance.poset.sizes)

    def test_alternates_mute(self):
        labels = [instance.label for instance in random_instances(4, seed=0)]

        assert [label.endswith('mute=True') for label in labels] == [False, True, False, True]

    @pytest.mark.parametrize('seed, count', [(-1, 2), (2 ** 32 - 2, 2), (2 ** 32, 0)])
    def test_seed_out_of_range(self, seed, count):
        with pytest.raises(DomainError):
            random_instances(count, seed=seed)


class TestSummarize(object):
    def test_counts(self):
        results = [CheckResult('max', 'a', PASS, ''), CheckResult('max', 'b', REPORT, ''),
                   CheckResult('max', 'c', FAIL, '')]

        assert summarize(results) == {'passed': False, PASS: 1, FAIL: 1, REPORT: 1}

    def test_empty(self):
        assert summarize([]) == {'passed': True, PASS: 0, FAIL: 0, REPORT: 0}
