import numpy as np
import pytest

from kodag import DomainError, IncidenceMatrix, NodeRef, PreconditionError, Sequence, block_product, cobweb, \
    coding_matrix, cover_matrix, eta, eta_inverse, krot_mobius, krot_mobius_matrix, kroton, kroton_alternating, \
    kroton_alternating_literal, kroton_recurrence, kroton_variants, l_logic, max_inverse, max_matrix, \
    mobius_closed_form, mobius_inverse, mobius_recurrence, parse_sequence, random_poset, validate_block_structure, \
    zeta_block_formula, zeta_closure, zeta_formula_dziemianczuk, zeta_formula_krot, zeta_formula_kwasniewski, \
    zeta_strict
from .utils import CODING_NATURALS, CODING_ONE_ONE_THREES, CODING_ONE_THREES, MOBIUS_FIBONACCI_ROOT, \
    MOBIUS_NATURALS, ZETA_FIBONACCI_ROOT, ZETA_NATURALS, assert_matrix_equal, region

FIXTURE_SPECS = ['nat', 'fib', 'fib+root', 'gauss:2', 'const:3']


class TestZeta(object):
    def test_naturals_region(self, cobweb_naturals_6):
        assert region(zeta_closure(cobweb_naturals_6)) == ZETA_NATURALS

    def test_fibonacci_root_region(self, cobweb_fibonacci_root_7):
        assert region(zeta_closure(cobweb_fibonacci_root_7)) == ZETA_FIBONACCI_ROOT

    def test_single_level(self, naturals):
        assert zeta_closure(cobweb(naturals, 1)).equals(IncidenceMatrix.identity((1,)))

    def test_general_poset(self, counterexample):
        expected = [[1, 1, 1, 1, 1],
                    [0, 1, 0, 1, 0],
                    [0, 0, 1, 0, 1],
                    [0, 0, 0, 1, 0],
                    [0, 0, 0, 0, 1]]

        assert_matrix_equal(zeta_closure(counterexample), expected)

    def test_strict(self, counterexample):
        actual = zeta_strict(counterexample)

        assert all(actual.values[i, i] == 0 for i in range(5))
        assert actual.values[0, 3] == 1

    @pytest.mark.parametrize('spec', FIXTURE_SPECS)
    @pytest.mark.parametrize('n', [1, 2, 5, 8])
    def test_formulas_agree_with_closure(self, spec, n):
        seq = parse_sequence(spec)
        expected = zeta_closure(cobweb(seq, n))

        assert zeta_formula_kwasniewski(seq, n).equals(expected)
        assert zeta_formula_kwasniewski(seq, n, form='bracket').equals(expected)
        assert zeta_formula_krot(seq, n).equals(expected)
        assert zeta_formula_dziemianczuk(seq, n).equals(expected)

    def test_kwasniewski_fibonacci_root_region(self, fibonacci_root):
        assert region(zeta_formula_kwasniewski(fibonacci_root, 7)) == ZETA_FIBONACCI_ROOT

    def test_kwasniewski_unknown_form(self, naturals):
        with pytest.raises(ValueError):
            zeta_formula_kwasniewski(naturals, 3, form='pacific')

    def test_krot_same_level_and_far_levels(self, naturals):
        zeta = zeta_formula_krot(naturals, 5)

        # nodes (3, 1) and (3, 2); then (2, 1) and (5, 4)
        assert zeta.values[3, 4] == 0
        assert zeta.values[1, 13] == 1

    @pytest.mark.parametrize('seed', range(20))
    def test_block_formula_on_random_posets(self, naturals, seed):
        p = random_poset(naturals, 5, 0.4, seed=seed, allow_mute=seed % 2 == 1)

        assert zeta_block_formula(p).equals(zeta_closure(p))


class TestMobius(object):
    def test_naturals_region(self, cobweb_naturals_6):
        assert region(mobius_inverse(zeta_closure(cobweb_naturals_6))) == MOBIUS_NATURALS

    def test_fibonacci_root_region(self, cobweb_fibonacci_root_7):
        assert region(mobius_inverse(zeta_closure(cobweb_fibonacci_root_7))) == MOBIUS_FIBONACCI_ROOT

    def test_identity(self):
        identity = IncidenceMatrix.identity((2, 3))

        assert mobius_inverse(identity).equals(identity)

    def test_non_binary(self):
        with pytest.raises(DomainError):
            mobius_inverse(IncidenceMatrix((1, 1), [[1, 2], [0, 1]]))

    @pytest.mark.parametrize('seed', range(25))
    def test_inverse_identity_on_random_posets(self, seed):
        sizes = np.random.RandomState(seed).randint(1, 6, size=6).tolist()
        p = random_poset(Sequence.explicit(sizes), 6, [0.4, 0.7, 1][seed % 3], seed=seed, allow_mute=seed % 2 == 0)
        zeta = zeta_closure(p)
        mu = mobius_inverse(zeta)
        identity = IncidenceMatrix.identity(p.sizes)

        assert (mu @ zeta).equals(identity)
        assert (zeta @ mu).equals(identity)
        assert mobius_recurrence(p).equals(mu)

    def test_recurrence_covers(self, counterexample):
        mu = mobius_recurrence(counterexample)

        assert mu.values[0, 1] == -1
        assert mu.values[1, 3] == -1
        assert all(mu.values[i, i] == 1 for i in range(5))

    @pytest.mark.parametrize('spec', FIXTURE_SPECS)
    def test_recurrence_on_cobwebs(self, spec):
        p = cobweb(parse_sequence(spec), 6)

        assert mobius_recurrence(p).equals(mobius_inverse(zeta_closure(p)))


class TestCoding(object):
    def test_naturals(self, naturals):
        coding = coding_matrix(naturals, 6)

        assert [coding.row(r) for r in range(1, 7)] == CODING_NATURALS

    def test_one_one_threes(self):
        coding = coding_matrix(Sequence.explicit([1, 1, 3, 3, 3, 3]), 6)

        assert [coding.row(r) for r in range(1, 7)] == CODING_ONE_ONE_THREES

    def test_one_threes(self):
        coding = coding_matrix(Sequence.explicit([1, 3, 3, 3, 3, 3]), 6)

        assert [coding.row(r) for r in range(1, 7)] == CODING_ONE_THREES

    def test_single_level(self, naturals):
        assert coding_matrix(naturals, 1).values.tolist() == [[1]]


class TestKroton(object):
    def test_adjacent_levels(self, naturals):
        assert kroton(naturals, 4, 5).value == 1

    def test_naturals(self, naturals):
        assert kroton(naturals, 1, 5).value == 6

    def test_fibonacci_root(self, fibonacci_root):
        assert kroton(fibonacci_root, 3, 7).value == 8

    def test_invalid_levels(self, naturals):
        with pytest.raises(DomainError):
            kroton(naturals, 3, 3)

    @pytest.mark.parametrize('spec', FIXTURE_SPECS)
    def test_coherence(self, spec):
        seq = parse_sequence(spec)
        for r in range(1, 12):
            for s in range(r + 1, 13):
                value = kroton(seq, r, s).value

                assert kroton_recurrence(seq, r, s) == value
                assert kroton_alternating(seq, r, s) == value

    @pytest.mark.parametrize('spec', FIXTURE_SPECS)
    def test_coding_magnitudes(self, spec):
        seq = parse_sequence(spec)
        coding = coding_matrix(seq, 8)
        for r in range(1, 8):
            for s in range(r + 1, 9):
                assert abs(coding.entry(r, s)) == kroton(seq, r, s).value

    def test_unweighted_alternating_breaks_two_levels_up(self, naturals):
        assert kroton_alternating_literal(naturals, 1, 2) == 1
        assert kroton_alternating_literal(naturals, 2, 4) == 0
        assert kroton(naturals, 2, 4).value == 2

    def test_variants(self, naturals):
        actual = kroton_variants(naturals, 1, 4)

        assert actual.canonical == 2
        assert actual.rising == 6
        assert actual.shifted == 6


class TestClosedForm(object):
    @pytest.mark.parametrize('spec', FIXTURE_SPECS)
    def test_cobwebs(self, spec):
        p = cobweb(parse_sequence(spec), 7)
        result = mobius_closed_form(p)

        assert result.agrees_with_inversion
        assert result.first_mismatch is None

    def test_blocks_are_constant_on_cobwebs(self, cobweb_naturals_6):
        actual = mobius_closed_form(cobweb_naturals_6, 'strict').matrix

        assert actual.block(1, 3).tolist() == [[1, 1, 1]]
        assert actual.block(1, 4).tolist() == [[-2, -2, -2, -2]]
        assert actual.block(2, 5).tolist() == [[-6] * 5, [-6] * 5]

    def test_naturals_region(self, cobweb_naturals_6):
        assert region(mobius_closed_form(cobweb_naturals_6).matrix) == MOBIUS_NATURALS

    def test_fibonacci_root_region(self, cobweb_fibonacci_root_7):
        assert region(mobius_closed_form(cobweb_fibonacci_root_7).matrix) == MOBIUS_FIBONACCI_ROOT

    def test_strict_rejects_general_poset(self, counterexample):
        with pytest.raises(PreconditionError):
            mobius_closed_form(counterexample, 'strict')

    def test_counterexample(self, counterexample):
        result = mobius_closed_form(counterexample, 'conjecture')
        mismatch = result.first_mismatch

        assert not result.agrees_with_inversion
        assert (mismatch.row, mismatch.col) == (1, 4)
        assert mismatch.block == (1, 3)
        assert mismatch.expected == 0
        assert mismatch.actual == 1

    def test_unknown_mode(self, counterexample):
        with pytest.raises(ValueError):
            mobius_closed_form(counterexample, 'loose')


class TestKrotMobius(object):
    def test_same_node(self, naturals):
        assert krot_mobius(naturals, (3, 2), (3, 2)) == 1

    def test_cover(self, naturals):
        assert krot_mobius(naturals, (2, 1), (3, 3)) == -1

    def test_same_level(self, naturals):
        assert krot_mobius(naturals, (3, 1), (3, 2)) == 0

    def test_below(self, naturals):
        assert krot_mobius(naturals, (4, 1), (2, 1)) == 0

    @pytest.mark.parametrize('node', [(0, 1), (2, 3), (2, 0)])
    def test_invalid_coordinates(self, naturals, node):
        with pytest.raises(DomainError):
            krot_mobius(naturals, node, (3, 1))

    @pytest.mark.parametrize('spec', ['nat', 'fib', 'gauss:2', 'const:3'])
    @pytest.mark.parametrize('form', ['bracket', 'sum'])
    def test_grid_scan(self, spec, form):
        seq = parse_sequence(spec)
        expected = mobius_inverse(zeta_closure(cobweb(seq, 6)))

        assert krot_mobius_matrix(seq, 6, form).equals(expected)

    def test_node_ref(self, naturals):
        assert krot_mobius(naturals, NodeRef(1, 1), NodeRef(4, 3)) == -2


class TestEtaAndMax(object):
    def test_eta_inverse_blocks(self, counterexample):
        inverse = eta_inverse(counterexample)

        assert inverse.block(1, 2).tolist() == [[-1, -1]]
        assert inverse.block(1, 3).tolist() == block_product(counterexample, 1, 3).tolist()

    @pytest.mark.parametrize('seed', range(10))
    def test_eta_inverse(self, naturals, seed):
        p = random_poset(naturals, 5, 0.7, seed=seed)

        assert (eta(p) @ eta_inverse(p)).equals(IncidenceMatrix.identity(p.sizes))

    def test_max_naturals(self, cobweb_naturals_4):
        m = max_matrix(cobweb_naturals_4)

        assert m.block(1, 4).tolist() == [[6, 6, 6, 6]]
        assert all(m.values[i, i] == 1 for i in range(len(m)))

    def test_max_zero_where_incomparable(self, counterexample):
        m = max_matrix(counterexample)
        zeta = zeta_closure(counterexample)

        assert all(m.values[i, j] == 0 for i in range(5) for j in range(5) if zeta.values[i, j] == 0)

    @pytest.mark.parametrize('spec', FIXTURE_SPECS)
    def test_max_inverse(self, spec):
        p = cobweb(parse_sequence(spec), 6)

        assert max_matrix(p).inverse().equals(max_inverse(p))
        assert max_inverse(p).equals(IncidenceMatrix.identity(p.sizes) - cover_matrix(p))

    @pytest.mark.parametrize('spec', FIXTURE_SPECS)
    def test_l_logic_of_max_is_zeta(self, spec):
        p = cobweb(parse_sequence(spec), 6)

        assert l_logic(max_matrix(p)).equals(zeta_closure(p))

    def test_l_logic_identity(self):
        identity = IncidenceMatrix.identity((2, 2))

        assert l_logic(identity).equals(identity)

    def test_l_logic_negative(self, counterexample):
        with pytest.raises(DomainError):
            l_logic(eta_inverse(counterexample))


class TestBlockStructure(object):
    @pytest.mark.parametrize('build', [zeta_closure, max_matrix, eta, lambda p: mobius_inverse(zeta_closure(p))])
    def test_fixtures_pass(self, cobweb_naturals_6, counterexample, build):
        assert validate_block_structure(build(cobweb_naturals_6)).passed
        assert validate_block_structure(build(counterexample)).passed

    def test_below_block_diagonal(self):
        m = IncidenceMatrix((1, 2), [[1, 0, 0], [4, 1, 0], [0, 0, 1]])
        actual = validate_block_structure(m)

        assert not actual.passed
        assert actual.first_offending == (2, 1)
        assert actual.reason == 'below block diagonal'

    def test_inside_diagonal_block(self):
        m = IncidenceMatrix((1, 2), [[1, 1, 1], [0, 1, 1], [0, 0, 1]])
        actual = validate_block_structure(m)

        assert not actual.passed
        assert actual.first_offending == (2, 3)
        assert actual.reason == 'off-diagonal inside diagonal block'
