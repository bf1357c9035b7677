"""Exception hierarchy shared by the library and the CLI."""

from __future__ import annotations


class RelayError(Exception):
    """Base class for all errors raised by :mod:`relay`."""


class GraphError(RelayError, ValueError):
    """Malformed graph, path or instance data."""


class ParseError(RelayError, ValueError):
    """A serialized document could not be read."""


class InfeasibleInstanceError(RelayError):
    """No schedule can be produced for the instance by the requested method."""


class NotEnoughAgentsError(InfeasibleInstanceError):
    """The selection grid has more points than there are agents."""


class UnsaturableError(InfeasibleInstanceError):
    """No assignment covers every selection point."""


class InfeasibleLegError(RelayError):
    """A leg's pickup vertex cannot be reached by its agent."""


class FractionalLandingError(RelayError):
    """A grid offset falls strictly inside a path edge and snapping is off."""


class OracleCapacityError(RelayError):
    """Too many agents for the exact subset dynamic program."""


class StrandedAgentError(RelayError):
    """An agent ran out of energy while replaying a schedule."""

    def __init__(self, agent: int, vertex: str, step: int):
        self.agent = agent
        self.vertex = vertex
        self.step = step
        super().__init__(f"agent {agent} stranded at vertex {vertex} (step {step})")


class ContradictionError(RelayError):
    """A quantity that a correct optimum guarantees could not be constructed."""


class ReconstructionError(RelayError):
    """A generated adversarial instance missed its self-checked targets."""
