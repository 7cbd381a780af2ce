"""Loading and tokenizing plain-text corpora.

Text is decoded as strict UTF-8 and NFC-normalized so that a letter typed as
``c`` + COMBINING CARON becomes the single code point ``č``.  Tokens are the
maximal runs of Unicode letters, lowercased.  Everything else (digits,
apostrophes, hyphens, whitespace, punctuation) separates tokens.
"""

from __future__ import annotations

import os
import unicodedata
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .errors import CorpusDecodeError, CorpusReadError

#: Croatian Latin alphabet; digraphs (lj, nj, dž) are built from these letters.
CROATIAN_ALPHABET = "abcčćdđefghijklmnoprsštuvzž"


@dataclass(frozen=True)
class RawDocument:
    id: str
    text: str
    source_label: str = ""


@dataclass(frozen=True)
class Token:
    surface: str
    doc_id: str = ""


def normalize(text: str) -> str:
    """Canonical composition (NFC). Idempotent."""
    return unicodedata.normalize("NFC", text)


def _iter_files(path: Path) -> Iterator[Path]:
    if path.is_dir():
        for root, dirs, files in os.walk(path):
            dirs.sort()
            for name in sorted(files):
                yield Path(root) / name
    else:
        yield path


def read_document(path: str | os.PathLike, source_label: str = "", doc_id: str | None = None) -> RawDocument:
    path = Path(path)
    try:
        data = path.read_bytes()
    except OSError as exc:
        raise CorpusReadError(path, exc.strerror or exc) from exc
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise CorpusDecodeError(path, exc.start, exc.reason) from exc
    return RawDocument(id=doc_id or str(path), text=normalize(text), source_label=source_label)


def load_corpus(paths: Iterable[str | os.PathLike], source_label: str = "") -> list[RawDocument]:
    """Load every file named in ``paths`` (directories are walked in sorted order).

    Returns one :class:`RawDocument` per file.  A missing path raises
    :class:`CorpusReadError`; bytes that are not UTF-8 raise
    :class:`CorpusDecodeError` carrying the byte offset.
    """
    docs = []
    for p in paths:
        p = Path(p)
        if not p.exists():
            raise CorpusReadError(p, "no such file or directory")
        for f in _iter_files(p):
            docs.append(read_document(f, source_label))
    return docs


def _letter_runs(text: str) -> Iterator[str]:
    start = None
    for i, ch in enumerate(text):
        if ch.isalpha():
            if start is None:
                start = i
        elif start is not None:
            yield text[start:i]
            start = None
    if start is not None:
        yield text[start:]


def tokenize_text(text: str, alphabet: str = CROATIAN_ALPHABET, strict: bool = True) -> list[str]:
    """Split ``text`` into lowercase letter-run surfaces.

    In strict mode a run containing any letter outside ``alphabet`` is
    dropped whole (``"web"`` disappears under the Croatian alphabet).
    """
    allowed = frozenset(alphabet)
    out = []
    for run in _letter_runs(normalize(text)):
        # str.lower can change length for a few code points; renormalize to keep NFC
        surface = normalize(run.lower())
        if strict and not allowed.issuperset(surface):
            continue
        out.append(surface)
    return out


def tokenize(doc: RawDocument, alphabet: str = CROATIAN_ALPHABET, strict: bool = True) -> list[Token]:
    return [Token(s, doc.id) for s in tokenize_text(doc.text, alphabet, strict)]


def iter_tokens(docs: Sequence[RawDocument], alphabet: str = CROATIAN_ALPHABET,
                strict: bool = True) -> Iterator[Token]:
    for doc in docs:
        yield from tokenize(doc, alphabet, strict)


def sample_corpus_path() -> Path:
    """Directory of the bundled Croatian sample (encyclopedic ``wiki/`` and informal ``blog/`` texts)."""
    return Path(__file__).resolve().parent / "data"
