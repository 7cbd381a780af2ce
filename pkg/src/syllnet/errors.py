"""Exception hierarchy shared by all syllnet modules."""


class SyllnetError(Exception):
    """Base class for every error raised by syllnet."""


class CorpusError(SyllnetError):
    """Raised when a corpus file cannot be read or decoded."""


class CorpusReadError(CorpusError, OSError):
    def __init__(self, path, reason):
        self.path = str(path)
        super().__init__(f"cannot read {self.path}: {reason}")


class CorpusDecodeError(CorpusError, ValueError):
    def __init__(self, path, offset, reason):
        self.path = str(path)
        self.offset = offset
        super().__init__(f"{self.path}: invalid UTF-8 at byte offset {offset} ({reason})")


class NoNucleus(SyllnetError, ValueError):
    """The token has neither a vowel nor a syllabic r."""

    def __init__(self, surface):
        self.surface = surface
        super().__init__(f"no syllable nucleus in {surface!r}")


class RuleSetError(SyllnetError, ValueError):
    pass


class VariantMismatch(SyllnetError, ValueError):
    pass


class AnalysisError(SyllnetError):
    """Base for errors raised while computing network measures."""


class EmptyNetwork(AnalysisError, ValueError):
    def __init__(self, what="network"):
        super().__init__(f"EmptyNetwork: {what} has no nodes")


class NodeNotFound(AnalysisError, KeyError):
    def __init__(self, node):
        self.node = node
        super().__init__(f"node {node!r} not in network")

    def __str__(self):
        return self.args[0]


class Undefined(AnalysisError, ValueError):
    """The requested measure is undefined for this input."""


class RequiresUndirected(AnalysisError, ValueError):
    pass


class TooManyEdges(AnalysisError, ValueError):
    def __init__(self, n, k):
        super().__init__(f"cannot place {k} edges among {n} nodes (max {n * (n - 1) // 2})")


class GraphParseError(SyllnetError, ValueError):
    """A graph file is malformed; the message carries line or element context."""


class MissingInput(SyllnetError, KeyError):
    def __init__(self, field):
        self.field = field
        super().__init__(f"missing input: {field}")

    def __str__(self):
        return self.args[0]
