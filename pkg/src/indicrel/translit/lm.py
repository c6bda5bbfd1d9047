"""Character n-gram language model with interpolated absolute discounting.

Probabilities are stored in backoff form: for an n-gram seen in training
``ngrams`` holds its interpolated log-probability; any other event costs
``backoff[context]`` plus the lower-order estimate. The unigram level backs
off to a uniform distribution over the target alphabet plus end-of-word.
"""

from __future__ import annotations

import math
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Iterable

BOS = "<s>"
EOS = "</s>"
DISCOUNT = 0.1

Context = tuple[str, ...]


@dataclass
class CharNgramLM:
    order: int
    alphabet: list[str]
    ngrams: dict[tuple[Context, str], float] = field(default_factory=dict)
    backoff: dict[Context, float] = field(default_factory=dict)
    discount: float = DISCOUNT

    @classmethod
    def train(
        cls, words: Iterable[str], order: int = 3, discount: float = DISCOUNT
    ) -> "CharNgramLM":
        if order < 2:
            raise ValueError("lm order must be >= 2")
        if not 0 < discount < 1:
            raise ValueError("discount must be in (0, 1)")
        counts: dict[Context, Counter[str]] = defaultdict(Counter)
        alphabet: set[str] = set()
        for w in words:
            alphabet.update(w)
            seq = [BOS] * (order - 1) + list(w) + [EOS]
            for i in range(order - 1, len(seq)):
                for k in range(order):
                    counts[tuple(seq[i - k : i])][seq[i]] += 1

        lm = cls(order, sorted(alphabet), discount=discount)
        uniform = 1.0 / lm.vocab_size

        def prob(ctx: Context, ch: str) -> float:
            ctr = counts.get(ctx)
            if ctr is None:
                return uniform if not ctx else prob(ctx[1:], ch)
            total = sum(ctr.values())
            lower = uniform if not ctx else prob(ctx[1:], ch)
            return max(ctr[ch] - discount, 0.0) / total + discount * len(ctr) / total * lower

        for ctx, ctr in counts.items():
            lm.backoff[ctx] = math.log(discount * len(ctr) / sum(ctr.values()))
            for ch in ctr:
                lm.ngrams[(ctx, ch)] = math.log(prob(ctx, ch))
        return lm

    @property
    def vocab_size(self) -> int:
        return len(self.alphabet) + 1

    def start(self) -> Context:
        return (BOS,) * (self.order - 1)

    def advance(self, context: Context, ch: str) -> Context:
        return (context + (ch,))[-(self.order - 1) :]

    def logprob(self, context: Context, ch: str) -> float:
        """log P(ch | context), using at most the last order-1 context symbols."""
        ctx = tuple(context[len(context) - (self.order - 1) :])
        acc = 0.0
        while True:
            lp = self.ngrams.get((ctx, ch))
            if lp is not None:
                return acc + lp
            acc += self.backoff.get(ctx, 0.0)
            if not ctx:
                return acc - math.log(self.vocab_size)
            ctx = ctx[1:]

    def score_word(self, word: str) -> float:
        ctx = self.start()
        total = 0.0
        for ch in list(word) + [EOS]:
            total += self.logprob(ctx, ch)
            ctx = self.advance(ctx, ch)
        return total

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "discount": self.discount,
            "alphabet": self.alphabet,
            "ngrams": [[list(ctx), ch, lp] for (ctx, ch), lp in sorted(self.ngrams.items())],
            "backoff": [[list(ctx), lp] for ctx, lp in sorted(self.backoff.items())],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "CharNgramLM":
        lm = cls(int(doc["order"]), list(doc["alphabet"]), discount=float(doc.get("discount", DISCOUNT)))
        lm.ngrams = {(tuple(ctx), ch): float(lp) for ctx, ch, lp in doc["ngrams"]}
        lm.backoff = {tuple(ctx): float(lp) for ctx, lp in doc.get("backoff", [])}
        return lm
