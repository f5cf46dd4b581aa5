from decimal import Decimal
from functools import reduce

import hypothesis
import hypothesis.strategies as st
import pytest

from bilattice_programs.bilattice.bilattice import FOUR, FourValue, ProductValue
from bilattice_programs.core.exceptions import ConvergenceError, InterpretationError
from bilattice_programs.program.grounder import Grounder
from bilattice_programs.semantics.engine import SemanticsEngine
from bilattice_programs.semantics.interpretation import Interpretation
from tests.helpers import atom, ground_text, load_ground, load_hypothesis, wide_program_text
from tests.strategies import UNIT_PRODUCT, four_programs, hypotheses, restrictions

T, F, U, O = FourValue.TRUE, FourValue.FALSE, FourValue.UNDER, FourValue.OVER

JEAN_PF = frozenset(atom(name) for name in (
    'witness(jean)', 'suspect(jean)', 'innocent(jean)', 'friends(jean,jean)', 'charge(jean)'))


@pytest.fixture
def jean():
    program = load_ground('jean.blp')
    return program, load_hypothesis('jean.blh', program)


@pytest.fixture
def judge():
    return load_ground('judge.blp')


def values(interpretation):
    return {str(item): value for item, value in interpretation.items()}


# the suspect example

def test_jean_support(jean):
    program, assumed = jean
    result = SemanticsEngine(program).support(assumed)
    assert values(result.support) == {'motive(jean)': F}
    assert result.incompatible == {atom('witness(jean)')}
    assert result.pf_trace == (frozenset(), JEAN_PF)
    assert result.pf == JEAN_PF
    assert atom('motive(jean)') not in result.pf
    assert result.iterations == 2


def test_jean_consequences_of_the_compatible_part(jean):
    program, assumed = jean
    engine = SemanticsEngine(program)
    compatible_part = assumed.restrict(program.base - {atom('witness(jean)')})
    derived = engine.immediate_consequence(program.facts_interpretation.knowledge_join(compatible_part))
    assert derived[atom('suspect(jean)')] is T
    assert derived[atom('charge(jean)')] is F
    assert derived[atom('witness(jean)')] is T
    # motive heads no clause
    assert derived[atom('motive(jean)')] is U


def test_jean_hypothesis_is_unsound(jean):
    program, assumed = jean
    engine = SemanticsEngine(program)
    assert not engine.is_sound(assumed)
    assert not engine.survives_rule_application(assumed)
    assert engine.is_sound(engine.support(assumed).support)


def test_jean_semantics(jean):
    program, assumed = jean
    engine = SemanticsEngine(program)
    result = engine.h_founded_semantics(assumed)
    assert values(result.model) == {'motive(jean)': F, 'suspect(jean)': T, 'witness(jean)': T}
    assert result.iterations == 2
    assert result.stage_trace[0] == program.facts_interpretation
    assert engine.is_model(result.model)


def test_iteration_cap(jean):
    program, assumed = jean
    engine = SemanticsEngine(program, max_iters=1)
    with pytest.raises(ConvergenceError, match='within 1 steps') as error:
        engine.support(assumed)
    assert error.value.stages == [frozenset(), JEAN_PF]
    with pytest.raises(ConvergenceError):
        engine.h_founded_semantics(assumed)


def test_default_iteration_cap(jean):
    program, _ = jean
    assert SemanticsEngine(program).max_iters == 10 * len(program.base) + 10


# the judge example

def test_rule_application_overturns_first_hypothesis(judge):
    engine = SemanticsEngine(judge)
    first = load_hypothesis('judge_h1.blh', judge)
    second = load_hypothesis('judge_h2.blh', judge)
    assert engine.rule_application_changes(first) == {atom('charge(john)'): F}
    assert not engine.survives_rule_application(first)
    assert engine.rule_application_changes(second) == {}
    assert engine.survives_rule_application(second)


def test_judge_hypotheses_are_not_robustly_derived(judge):
    engine = SemanticsEngine(judge)
    for name in ('judge_h1.blh', 'judge_h2.blh'):
        assumed = load_hypothesis(name, judge)
        assert not engine.is_sound(assumed)
        assert values(engine.support(assumed).support) == {}


def test_judge_semantics_everywhere_false(judge):
    engine = SemanticsEngine(judge)
    model = engine.h_founded_semantics(judge.everywhere(F)).model
    expected = {
        'suspect(john)': F, 'innocent(john)': F, 'charge(john)': O,
        'friends(john,ted)': T, 'friends(ted,john)': T, 'friends(john,john)': T, 'friends(ted,ted)': T,
        'charge(ted)': O, 'witness(john)': F,
    }
    for name, value in expected.items():
        assert model[atom(name)] is value, name
    assert engine.is_model(model)


def test_judge_semantics_everywhere_undefined(judge):
    engine = SemanticsEngine(judge)
    model = engine.h_founded_semantics(judge.empty()).model
    assert model[atom('friends(ted,john)')] is T
    assert model[atom('suspect(john)')] is U
    assert model[atom('charge(john)')] is U


def test_hypothesis_outside_the_base_is_rejected(judge):
    stray = Interpretation(FOUR, [atom('alibi(john,mary)')], {atom('alibi(john,mary)'): T})
    with pytest.raises(InterpretationError, match='outside the Herbrand base'):
        SemanticsEngine(judge).support(stray)


# small programs

def test_immediate_consequence_basics():
    empty = ground_text('')
    assert SemanticsEngine(empty).immediate_consequence(empty.empty()) == empty.empty()
    program = ground_text('p <- O.')
    engine = SemanticsEngine(program)
    assert values(engine.immediate_consequence(program.empty())) == {'p': O}
    assert values(engine.immediate_consequence(program.everywhere(T))) == {'p': O}


def test_facts_are_reproduced():
    program = ground_text('q = F.\nr = O.\np <- q | r.')
    derived = SemanticsEngine(program).immediate_consequence(program.empty())
    assert values(derived) == {'q': F, 'r': O}


def test_soundness_of_small_hypotheses():
    program = ground_text('p <- q & ~r.\nq.')
    engine = SemanticsEngine(program)
    assert engine.is_sound(program.empty())
    assert engine.is_sound(Interpretation(FOUR, program.base, {atom('r'): F}))
    assert engine.is_sound(Interpretation(FOUR, program.base, {atom('r'): F, atom('p'): T}))
    assert not engine.is_sound(Interpretation(FOUR, program.base, {atom('p'): T}))
    assert not engine.is_sound(Interpretation(FOUR, program.base, {atom('q'): F}))


def test_pf_of_a_constant_rule():
    program = ground_text('p <- T.')
    engine = SemanticsEngine(program)
    trace, incompatible = engine.compute_pf(program.empty())
    assert trace == [frozenset(), frozenset([atom('p')])]
    assert incompatible == frozenset()
    assert values(engine.h_founded_semantics(program.empty()).model) == {'p': T}
    assert not engine.is_model(program.everywhere(O))


def test_pf_stays_empty_for_agreeing_hypothesis():
    program = ground_text('q = T.')
    result = SemanticsEngine(program).support(program.everywhere(T))
    assert result.pf_trace == (frozenset(),)
    assert result.iterations == 1
    assert result.support == program.everywhere(T)


def test_sound_hypothesis_is_its_own_support():
    program = ground_text('p <- q & ~r.\nq.')
    assumed = Interpretation(FOUR, program.base, {atom('r'): F, atom('p'): T})
    assert SemanticsEngine(program).support(assumed).support == assumed


def test_empty_base():
    program = ground_text('')
    result = SemanticsEngine(program).h_founded_semantics(program.empty())
    assert result.model == program.empty()
    assert result.iterations == 1
    assert SemanticsEngine(program).is_model(program.empty())


def test_product_program():
    program = load_ground('vet.blp', UNIT_PRODUCT)
    engine = SemanticsEngine(program)
    derived = engine.immediate_consequence(program.facts_interpretation)
    assert derived[atom('sick(rex)')] == ProductValue(Decimal('0.5'), Decimal('0.4'))
    assert derived[atom('treat(rex)')] == UNIT_PRODUCT.under
    result = engine.h_founded_semantics(program.empty())
    assert result.model.table() == ['exam1(rex) = <0.7,0.4>', 'exam2(rex) = <0.5,0.9>', 'sick(rex) = <0.5,0.4>']
    assert result.iterations == 2


# properties over generated programs

def ground_engine(program):
    grounded = Grounder.ground(program)
    return grounded, SemanticsEngine(grounded)


@hypothesis.settings(max_examples=100, deadline=None)
@hypothesis.given(st.data())
def test_support_is_the_largest_sound_part(data):
    program, engine = ground_engine(data.draw(four_programs()))
    assumed = data.draw(hypotheses(program))
    sound = [part for part in restrictions(assumed) if engine.is_sound(part)]
    largest = reduce(Interpretation.knowledge_join, sound, program.empty())
    support = engine.support(assumed).support
    assert support == largest
    assert engine.is_sound(support)
    assert support.part_of(assumed)
    assert program.facts_interpretation.compatible(support)


@hypothesis.settings(max_examples=500, deadline=None)
@hypothesis.given(st.data())
def test_join_of_sound_parts_is_sound(data):
    program, engine = ground_engine(data.draw(four_programs(max_atoms=8)))
    assumed = data.draw(hypotheses(program, max_defined=5))
    parts = restrictions(assumed)
    first, second = data.draw(st.sampled_from(parts)), data.draw(st.sampled_from(parts))
    if engine.is_sound(first) and engine.is_sound(second):
        assert engine.is_sound(first.knowledge_join(second))


@hypothesis.settings(max_examples=200, deadline=None)
@hypothesis.given(st.data())
def test_consequences_of_facts_agree_with_support(data):
    program, engine = ground_engine(data.draw(four_programs()))
    assumed = data.draw(hypotheses(program))
    derived = engine.immediate_consequence(program.facts_interpretation)
    assert derived.compatible(engine.support(assumed).support)


@hypothesis.settings(max_examples=200, deadline=None)
@hypothesis.given(st.data())
def test_pf_grows_and_stabilizes(data):
    program, engine = ground_engine(data.draw(four_programs()))
    result = engine.support(data.draw(hypotheses(program)))
    trace = result.pf_trace
    assert trace[0] == frozenset()
    assert all(earlier <= later for earlier, later in zip(trace, trace[1:]))
    assert len(trace) <= len(program.base) + 1
    assert not (result.support.defined_atoms() & (result.incompatible | result.pf))


@hypothesis.settings(max_examples=200, deadline=None)
@hypothesis.given(st.data())
def test_semantics_grows_to_a_model(data):
    program, engine = ground_engine(data.draw(four_programs()))
    assumed = data.draw(hypotheses(program))
    result = engine.h_founded_semantics(assumed)
    stages = result.stage_trace
    assert all(earlier.part_of(later) for earlier, later in zip(stages, stages[1:]))
    assert result.iterations == len(stages) <= len(program.base) + 1
    model = result.model
    assert model == engine.immediate_consequence(model).knowledge_join(engine.support(assumed, facts=model).support)
    assert engine.is_model(model)


def test_wide_universe():
    program = ground_text(wide_program_text())
    engine = SemanticsEngine(program)
    result = engine.h_founded_semantics(program.empty())
    assert result.model[atom('p')] is T
    assert result.model[atom('q(c1199)')] is T
    assert result.iterations == 2
    assert engine.h_founded_semantics(program.everywhere(F)).model == result.model
