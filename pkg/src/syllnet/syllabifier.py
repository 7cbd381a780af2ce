"""Rule-based Croatian syllabification.

Every vowel is a syllable nucleus, and so is an ``r`` with no vowel next to
it (``prst``, ``vrh``, ``u-mr-li``).  Consonants between two nuclei are
divided by the maximal onset principle: the following syllable takes the
longest suffix of the cluster that is a legal onset, the rest stays behind as
coda.  Word-initial consonants are all onset, word-final ones all coda.

Two onset predicates are available:

``sonority``
    a cluster is a legal onset when sonority rises strictly through it,
    with obstruent < nasal < liquid < glide.
``cv-simple``
    at most one consonant moves to the following syllable.

The digraphs lj, nj and dž are single consonants throughout.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Mapping

from .corpus import Token
from .errors import NoNucleus, RuleSetError

ONSET_MODES = ("sonority", "cv-simple")

OBSTRUENT, NASAL, LIQUID, GLIDE, VOWEL = 1, 2, 3, 4, 5

_DEFAULT_CLASSES = {
    OBSTRUENT: "b c č ć d dž đ f g h k p s š t z ž",
    NASAL: "m n nj",
    LIQUID: "l lj r",
    GLIDE: "v j",
}


def _default_sonority() -> dict[str, int]:
    return {u: rank for rank, units in _DEFAULT_CLASSES.items() for u in units.split()}


@dataclass(frozen=True)
class RuleSet:
    vowels: frozenset[str] = frozenset("aeiou")
    digraphs: tuple[str, ...] = ("lj", "nj", "dž")
    sonority: Mapping[str, int] = field(default_factory=_default_sonority)
    onset_mode: str = "sonority"
    syllabic_r: bool = True

    def __post_init__(self):
        if self.onset_mode not in ONSET_MODES:
            raise RuleSetError(f"unknown onset mode {self.onset_mode!r}; expected one of {ONSET_MODES}")
        if any(len(d) < 2 for d in self.digraphs):
            raise RuleSetError("digraphs must be at least two letters long")
        if any(r >= VOWEL for r in self.sonority.values()):
            raise RuleSetError("consonant sonority ranks must stay below the vowel rank")

    def __hash__(self):
        return hash((self.vowels, self.digraphs, tuple(sorted(self.sonority.items())),
                     self.onset_mode, self.syllabic_r))

    def rank(self, unit: str) -> int:
        if unit in self.vowels:
            return VOWEL
        # letters outside the table (foreign words in non-strict mode) count as obstruents
        return self.sonority.get(unit, OBSTRUENT)

    def legal_onset(self, cluster) -> bool:
        if len(cluster) <= 1:
            return True
        if self.onset_mode == "cv-simple":
            return False
        # an r before another consonant would be a syllable peak of its own (ne·rvo·zni)
        if self.syllabic_r and "r" in cluster[:-1]:
            return False
        ranks = [self.rank(u) for u in cluster]
        return all(a < b for a, b in zip(ranks, ranks[1:]))


DEFAULT_RULES = RuleSet()


def _split_list(value: str) -> list[str]:
    return [v.strip() for v in value.replace(",", " ").split() if v.strip()]


def load_rules(path: str | os.PathLike) -> RuleSet:
    """Read a RuleSet from a ``key = value`` file.

    Recognised keys: ``vowels``, ``digraphs``, ``onset_mode``, ``syllabic_r``,
    and ``obstruents`` / ``nasals`` / ``liquids`` / ``glides`` to replace the
    sonority classes.  Blank lines and ``#`` comments are ignored.
    """
    values = {}
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise RuleSetError(f"{path}:{lineno}: expected 'key = value'")
        key, value = (s.strip() for s in line.split("=", 1))
        values[key.lower()] = value

    kwargs = {}
    if "vowels" in values:
        v = values.pop("vowels")
        kwargs["vowels"] = frozenset(_split_list(v) if ("," in v or " " in v) else v)
    if "digraphs" in values:
        kwargs["digraphs"] = tuple(_split_list(values.pop("digraphs")))
    if "onset_mode" in values:
        kwargs["onset_mode"] = values.pop("onset_mode")
    if "syllabic_r" in values:
        kwargs["syllabic_r"] = values.pop("syllabic_r").lower() in ("1", "true", "yes", "on")
    classes = {"obstruents": OBSTRUENT, "nasals": NASAL, "liquids": LIQUID, "glides": GLIDE}
    if classes.keys() & values.keys():
        son = _default_sonority()
        for key, rank in classes.items():
            if key in values:
                for unit in _split_list(values.pop(key)):
                    son[unit] = rank
        kwargs["sonority"] = son
    if values:
        raise RuleSetError(f"{path}: unknown keys {sorted(values)}")
    return RuleSet(**kwargs)


def segment_graphemes(surface: str, digraphs: Iterable[str] = DEFAULT_RULES.digraphs) -> list[str]:
    """Split ``surface`` into grapheme units, matching digraphs greedily left to right.

    >>> segment_graphemes("knjiga")
    ['k', 'nj', 'i', 'g', 'a']
    """
    digraphs = sorted(digraphs, key=len, reverse=True)
    units = []
    i = 0
    while i < len(surface):
        for d in digraphs:
            if surface.startswith(d, i):
                units.append(d)
                i += len(d)
                break
        else:
            units.append(surface[i])
            i += 1
    return units


def find_nuclei(units, rules: RuleSet = DEFAULT_RULES) -> list[int]:
    """Positions of syllable nuclei in a grapheme-unit list.

    An ``r`` is syllabic when neither neighbour is a vowel and the unit before
    it is not itself a syllabic ``r``.
    """
    vowels = rules.vowels
    nuclei = []
    n = len(units)
    for i, u in enumerate(units):
        if u in vowels:
            nuclei.append(i)
        elif rules.syllabic_r and u == "r":
            prev_v = i > 0 and units[i - 1] in vowels
            next_v = i + 1 < n and units[i + 1] in vowels
            if not prev_v and not next_v and not (nuclei and nuclei[-1] == i - 1 and units[i - 1] == "r"):
                nuclei.append(i)
    return nuclei


@dataclass(frozen=True)
class SyllabifiedWord:
    token: Token
    syllables: tuple[str, ...]
    nuclei: tuple[int, ...] = ()
    starts: tuple[int, ...] = ()

    @property
    def surface(self) -> str:
        return self.token.surface

    def __str__(self):
        return "·".join(self.syllables)


@lru_cache(maxsize=200_000)
def _split(surface: str, rules: RuleSet):
    units = segment_graphemes(surface, rules.digraphs)
    nuclei = find_nuclei(units, rules)
    if not nuclei:
        raise NoNucleus(surface)
    starts = [0]
    for a, b in zip(nuclei, nuclei[1:]):
        cluster = units[a + 1:b]
        onset = len(cluster)
        while onset > 0 and not rules.legal_onset(cluster[len(cluster) - onset:]):
            onset -= 1
        starts.append(b - onset)
    ends = starts[1:] + [len(units)]
    syllables = tuple("".join(units[s:e]) for s, e in zip(starts, ends))
    return syllables, tuple(nuclei), tuple(starts)


def syllabify(token: Token | str, rules: RuleSet = DEFAULT_RULES) -> SyllabifiedWord:
    """Split one token into syllables; raises :class:`NoNucleus` for e.g. ``"hm"``.

    >>> str(syllabify("matematika"))
    'ma·te·ma·ti·ka'
    """
    if isinstance(token, str):
        token = Token(token)
    syllables, nuclei, starts = _split(token.surface, rules)
    return SyllabifiedWord(token, syllables, nuclei, starts)


@dataclass
class SyllabificationStats:
    tokens: int = 0
    syllabified: int = 0
    skipped: Counter = field(default_factory=Counter)

    @property
    def skipped_total(self) -> int:
        return sum(self.skipped.values())


def syllabify_tokens(tokens: Iterable[Token], rules: RuleSet = DEFAULT_RULES,
                     stats: SyllabificationStats | None = None):
    """Yield a SyllabifiedWord per token; tokens without a nucleus are counted in ``stats``."""
    for tok in tokens:
        if stats is not None:
            stats.tokens += 1
        try:
            word = syllabify(tok, rules)
        except NoNucleus:
            if stats is not None:
                stats.skipped[tok.surface] += 1
            continue
        if stats is not None:
            stats.syllabified += 1
        yield word
