from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, List, Optional, Tuple

from bilattice_programs.core.constants import ITERATION_FACTOR, ITERATION_SLACK
from bilattice_programs.core.exceptions import ConvergenceError
from bilattice_programs.core.logger import logger
from bilattice_programs.program.grounder import GroundProgram
from bilattice_programs.program.syntax import Atom
from bilattice_programs.semantics.interpretation import Interpretation


@dataclass(frozen=True)
class SupportResult:
    """
    The support of a hypothesis, with how it was obtained.

    Attributes:
        support: The maximal sound part of the hypothesis.
        incompatible: Atoms where the facts and the hypothesis disagree.
        pf_trace: PF_0 = ∅, PF_1, ..., up to the limit.
        iterations: Number of PF steps computed, the confirming one included.
    """

    support: Interpretation
    incompatible: FrozenSet[Atom]
    pf_trace: Tuple[FrozenSet[Atom], ...]
    iterations: int

    @property
    def pf(self) -> FrozenSet[Atom]:
        return self.pf_trace[-1]


@dataclass(frozen=True)
class SemanticsResult:
    model: Interpretation
    stage_trace: Tuple[Interpretation, ...] = field(default=())
    iterations: int = 0


class SemanticsEngine:
    """
    Immediate consequences, hypothesis soundness and support, and the
    hypothesis-founded fixpoint for one ground program.

    Args:
        program (GroundProgram): The instantiated program.
        max_iters (int, optional): Cap on every fixpoint loop. Defaults to
            ITERATION_FACTOR * |HB| + ITERATION_SLACK.
    """

    def __init__(self, program: GroundProgram, max_iters: Optional[int] = None):
        self.program = program
        self.bilattice = program.bilattice
        self.max_iters = max_iters or ITERATION_FACTOR * len(program.base) + ITERATION_SLACK

    def _check(self, interpretation: Interpretation) -> Interpretation:
        if interpretation.base != self.program.base:
            interpretation = self.program.align(interpretation)
        return interpretation

    def immediate_consequence(self, interpretation: Interpretation) -> Interpretation:
        """
        T_R(I): each clause head receives the value its body robustly takes
        under I; every other atom is U.
        """
        interpretation = self._check(interpretation)
        saturated = interpretation.saturate()
        values = {}
        for head, body in self.program.clauses.items():
            value = interpretation.robust_value(body, saturated)
            if value is not None:
                values[head] = value
        return Interpretation(self.bilattice, self.program.base, values)

    def is_sound(self, hypothesis: Interpretation, facts: Optional[Interpretation] = None) -> bool:
        """
        A hypothesis is sound when it agrees with the facts and every head it
        defines keeps its value under T_R(F ⊕ H). survives_rule_application
        is the looser test that only checks no value is overturned.
        """
        hypothesis = self._check(hypothesis)
        facts = self.program.facts_interpretation if facts is None else self._check(facts)
        if not facts.compatible(hypothesis):
            return False
        derived = self.immediate_consequence(facts.knowledge_join(hypothesis))
        return hypothesis.restrict(self.program.heads).part_of(derived)

    def rule_application_changes(self, hypothesis: Interpretation) -> Dict[Atom, Any]:
        """
        Adds the hypothesis to the facts, applies every clause once with plain
        evaluation and returns the heads whose defined hypothesis value came
        out as a different defined value.
        """
        hypothesis = self._check(hypothesis)
        combined = self.program.facts_interpretation.knowledge_join(hypothesis)
        changes = {}
        for atom in sorted(hypothesis.defined_atoms() & self.program.heads, key=str):
            value = combined.evaluate(self.program.clauses[atom])
            if value != self.bilattice.under and value != hypothesis[atom]:
                changes[atom] = value
        return changes

    def survives_rule_application(self, hypothesis: Interpretation) -> bool:
        """
        The quick check: add H to F, apply the rules, and see that no value H
        defines is overturned. Weaker than is_sound, which also requires the
        value to be derived whatever the undefined atoms turn out to be.
        """
        hypothesis = self._check(hypothesis)
        if not self.program.facts_interpretation.compatible(hypothesis):
            return False
        return not self.rule_application_changes(hypothesis)

    def compute_pf(self, hypothesis: Interpretation,
                   facts: Optional[Interpretation] = None) -> Tuple[List[FrozenSet[Atom]], FrozenSet[Atom]]:
        """
        Iterates PF_i, the heads whose body does not robustly take the
        hypothesis value once the facts are joined with what remains of H.

        Args:
            hypothesis (Interpretation): H.
            facts (Interpretation, optional): F; defaults to the program facts.

        Returns:
            Tuple[List[FrozenSet[Atom]], FrozenSet[Atom]]: The PF sequence
            from PF_0 = ∅ to its limit, and IF(F, H).
        """
        hypothesis = self._check(hypothesis)
        facts = self.program.facts_interpretation if facts is None else self._check(facts)
        incompatible = facts.incompatible_atoms(hypothesis)
        allowed = self.program.base - incompatible
        trace: List[FrozenSet[Atom]] = [frozenset()]
        for step in range(1, self.max_iters + 1):
            current = facts.knowledge_join(hypothesis.restrict(allowed - trace[-1]))
            saturated = current.saturate()
            flipped = frozenset(head for head, body in self.program.clauses.items()
                                if current.robust_value(body, saturated) != hypothesis[head])
            logger.debug(f'PF_{step}: {len(flipped)} atoms')
            if flipped == trace[-1]:
                return trace, incompatible
            trace.append(flipped)
        raise ConvergenceError(f'PF did not stabilize within {self.max_iters} steps', trace[-2:])

    def support(self, hypothesis: Interpretation, facts: Optional[Interpretation] = None) -> SupportResult:
        """
        The maximal sound part of H: H restricted to atoms outside IF(F, H)
        and outside the PF limit.
        """
        hypothesis = self._check(hypothesis)
        trace, incompatible = self.compute_pf(hypothesis, facts)
        kept = (self.program.base - incompatible) - trace[-1]
        return SupportResult(hypothesis.restrict(kept), incompatible, tuple(trace), len(trace))

    def h_founded_semantics(self, hypothesis: Interpretation) -> SemanticsResult:
        """
        Iterates F_0 = F, F_{n+1} = T_R(F_n) ⊕ support of H w.r.t. <F_n, R>
        until two consecutive stages coincide.

        Args:
            hypothesis (Interpretation): H.

        Returns:
            SemanticsResult: The limit with every stage from F_0 on.
        """
        hypothesis = self._check(hypothesis)
        stages = [self.program.facts_interpretation]
        for step in range(1, self.max_iters + 1):
            current = stages[-1]
            following = self.immediate_consequence(current).knowledge_join(
                self.support(hypothesis, facts=current).support)
            logger.debug(f'F_{step}: {len(following)} defined atoms')
            if following == current:
                return SemanticsResult(current, tuple(stages), step)
            stages.append(following)
        raise ConvergenceError(f'F_n did not stabilize within {self.max_iters} stages', stages[-2:])

    def is_model(self, interpretation: Interpretation) -> bool:
        """
        Every clause whose body robustly takes a value gives its head that value.
        """
        interpretation = self._check(interpretation)
        saturated = interpretation.saturate()
        for head, body in self.program.clauses.items():
            value = interpretation.robust_value(body, saturated)
            if value is not None and interpretation[head] != value:
                return False
        return True
