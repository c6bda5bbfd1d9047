"""Word-level corpus BLEU (single reference) and OOV diagnostics."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Collection, Sequence

from indicrel.errors import DataError


@dataclass
class BleuResult:
    bleu: float
    precisions: list[float]
    bp: float
    hyp_len: int
    ref_len: int

    @property
    def ratio(self) -> float:
        return self.hyp_len / self.ref_len if self.ref_len else 0.0

    def format(self) -> str:
        ps = "/".join(f"{p:.4f}" for p in self.precisions)
        return f"BLEU = {self.bleu:.4f} ({ps}) BP={self.bp:.4f} ratio={self.ratio:.4f}"


def _ngrams(tokens: Sequence[str], n: int) -> Counter[tuple[str, ...]]:
    return Counter(tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1))


def bleu_corpus(
    hyps: Sequence[str], refs: Sequence[str], max_n: int = 4, smooth: bool = False
) -> BleuResult:
    """Corpus BLEU over whitespace-tokenized sentences.

    An order for which the hypotheses contain no n-grams at all (e.g. 4-grams
    in a corpus of 3-word sentences) is dropped from the geometric mean, so
    that scoring a corpus against itself always gives 1.

    ``smooth`` adds one to the numerator and denominator of every order
    above 1 (sentence-level diagnostic; not standard BLEU).
    """
    if len(hyps) != len(refs):
        raise DataError(f"hypothesis/reference count mismatch: {len(hyps)} vs {len(refs)}")
    if not hyps:
        raise DataError("empty corpus")
    if not 1 <= max_n <= 4:
        raise ValueError("max_n must be between 1 and 4")
    matches = [0] * max_n
    totals = [0] * max_n
    hyp_len = ref_len = 0
    for h, r in zip(hyps, refs):
        ht, rt = h.split(), r.split()
        hyp_len += len(ht)
        ref_len += len(rt)
        for n in range(1, max_n + 1):
            hc, rc = _ngrams(ht, n), _ngrams(rt, n)
            matches[n - 1] += sum(min(c, rc[g]) for g, c in hc.items())
            totals[n - 1] += max(len(ht) - n + 1, 0)

    precisions = []
    for n, (m, t) in enumerate(zip(matches, totals), start=1):
        if smooth and n > 1:
            m, t = m + 1, t + 1
        precisions.append(m / t if t else 0.0)

    if hyp_len == 0:
        bp = 0.0
    elif hyp_len >= ref_len:
        bp = 1.0
    else:
        bp = math.exp(1 - ref_len / hyp_len)

    # orders with no hypothesis n-grams at all are left out of the mean
    used = [p for p, t in zip(precisions, totals) if t > 0]
    if not used or min(used) == 0.0:
        bleu = 0.0
    else:
        bleu = bp * math.exp(math.fsum(math.log(p) for p in used) / len(used))
    return BleuResult(bleu, precisions, bp, hyp_len, ref_len)


def oov_rate(test: Sequence[str], train_vocab: Collection[str]) -> float:
    """Fraction of test word tokens not in ``train_vocab``."""
    if not test:
        raise DataError("empty test corpus")
    total = oov = 0
    for line in test:
        for w in line.split():
            total += 1
            oov += w not in train_vocab
    if total == 0:
        raise DataError("test corpus has no tokens")
    return oov / total


def vocabulary(corpus: Sequence[str]) -> set[str]:
    return {w for line in corpus for w in line.split()}
