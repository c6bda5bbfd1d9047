"""Statistical character-level transliteration.

The model is a monotone stochastic edit channel: reading the source word
left to right, each source character is rewritten as a target string of
length 0, 1 or 2, and target characters may additionally be inserted
before any source position or at the end. Channel parameters are estimated
with EM (forward-backward over the alignment lattice); decoding is a beam
search that adds a target character n-gram LM score.
"""

from __future__ import annotations

import heapq
import json
import math
import random
from collections import defaultdict
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from indicrel.errors import DataError
from indicrel.translit.lm import EOS, CharNgramLM

FORMAT_VERSION = 1
MAX_TARGET_LEN = 2
PRUNE = 1e-8

# initial preference for deletion / 1:1 / 1:2 rewrites
_LENGTH_PRIOR = (0.05, 1.0, 0.2)
_INIT_INSERT = 0.01

WordPair = tuple[str, str]


@dataclass
class TransliterationModel:
    src_lang: str
    tgt_lang: str
    sub_weights: dict[str, dict[str, float]]
    ins_weights: dict[str, float]
    lm: CharNgramLM
    version: int = FORMAT_VERSION

    @property
    def n(self) -> int:
        return self.lm.order

    @property
    def proceed_logp(self) -> float:
        """log-probability of not inserting at a position."""
        mass = math.fsum(math.exp(v) for v in self.ins_weights.values())
        return math.log1p(-mass) if mass < 1 else -math.inf

    def transliterate(self, word: str, beam: int = 8, k: int = 5) -> list[tuple[str, float]]:
        return transliterate_statistical(self, word, beam, k)

    def to_json(self) -> dict:
        return {
            "version": self.version,
            "src_lang": self.src_lang,
            "tgt_lang": self.tgt_lang,
            "n": self.n,
            "sub_weights": [
                [s, t, lp] for s in sorted(self.sub_weights) for t, lp in sorted(self.sub_weights[s].items())
            ],
            "ins_weights": [[t, lp] for t, lp in sorted(self.ins_weights.items())],
            "lm": self.lm.to_json(),
        }

    @classmethod
    def from_json(cls, doc: dict) -> "TransliterationModel":
        if doc.get("version") != FORMAT_VERSION:
            raise DataError(f"unsupported model version {doc.get('version')!r}")
        sub: dict[str, dict[str, float]] = defaultdict(dict)
        for s, t, lp in doc["sub_weights"]:
            sub[s][t] = float(lp)
        ins = {t: float(lp) for t, lp in doc.get("ins_weights", [])}
        lm = CharNgramLM.from_json(doc["lm"])
        if int(doc.get("n", lm.order)) != lm.order:
            raise DataError("model order does not match lm order")
        return cls(doc["src_lang"], doc["tgt_lang"], dict(sub), ins, lm)

    def save(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps(self.to_json(), ensure_ascii=False, indent=1), encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path) -> "TransliterationModel":
        return cls.from_json(json.loads(Path(path).read_text(encoding="utf-8")))


# --------------------------------------------------------------------------
# EM
# --------------------------------------------------------------------------


@dataclass
class ChannelParams:
    """Channel probabilities in the linear domain, as used during EM."""

    sub: dict[str, dict[str, float]]
    ins: dict[str, float] = field(default_factory=dict)

    @property
    def proceed(self) -> float:
        return 1.0 - math.fsum(self.ins.values())


@dataclass
class Expectations:
    sub: dict[str, dict[str, float]] = field(default_factory=lambda: defaultdict(lambda: defaultdict(float)))
    ins: dict[str, float] = field(default_factory=lambda: defaultdict(float))
    proceed: float = 0.0
    loglik: float = 0.0
    skipped: int = 0


def expected_counts(params: ChannelParams, src: str, tgt: str, acc: Expectations | None = None) -> Expectations:
    """Add the posterior edge counts of one word pair to ``acc``.

    Lattice node (i, j) means i source and j target characters consumed.
    """
    acc = acc if acc is not None else Expectations()
    n, m = len(src), len(tgt)
    go = params.proceed
    alpha = [[0.0] * (m + 1) for _ in range(n + 1)]
    alpha[0][0] = 1.0
    for i in range(n + 1):
        for j in range(m + 1):
            a = alpha[i][j]
            if a == 0.0:
                continue
            if j < m:
                alpha[i][j + 1] += a * params.ins.get(tgt[j], 0.0)
            if i < n:
                table = params.sub.get(src[i], {})
                for k in range(min(MAX_TARGET_LEN, m - j) + 1):
                    w = table.get(tgt[j : j + k], 0.0)
                    if w:
                        alpha[i + 1][j + k] += a * go * w
    z = alpha[n][m] * go
    if z <= 0.0:
        acc.skipped += 1
        return acc

    beta = [[0.0] * (m + 1) for _ in range(n + 1)]
    beta[n][m] = go
    for i in range(n, -1, -1):
        for j in range(m, -1, -1):
            if i == n and j == m:
                continue
            b = 0.0
            if j < m:
                b += params.ins.get(tgt[j], 0.0) * beta[i][j + 1]
            if i < n:
                table = params.sub.get(src[i], {})
                for k in range(min(MAX_TARGET_LEN, m - j) + 1):
                    w = table.get(tgt[j : j + k], 0.0)
                    if w:
                        b += go * w * beta[i + 1][j + k]
            beta[i][j] = b

    for i in range(n + 1):
        for j in range(m + 1):
            a = alpha[i][j]
            if a == 0.0:
                continue
            if j < m:
                w = params.ins.get(tgt[j], 0.0)
                if w:
                    acc.ins[tgt[j]] += a * w * beta[i][j + 1] / z
            if i < n:
                table = params.sub.get(src[i], {})
                for k in range(min(MAX_TARGET_LEN, m - j) + 1):
                    t = tgt[j : j + k]
                    w = table.get(t, 0.0)
                    if w:
                        acc.sub[src[i]][t] += a * go * w * beta[i + 1][j + k] / z
    acc.proceed += n + 1
    acc.loglik += math.log(z)
    return acc


def _initial_params(pairs: Sequence[WordPair], rng: random.Random) -> ChannelParams:
    cooc: dict[str, dict[str, float]] = defaultdict(lambda: defaultdict(float))
    tgt_chars: set[str] = set()
    for src, tgt in pairs:
        tgt_chars.update(tgt)
        subs = {""} | {tgt[j : j + k] for k in (1, 2) for j in range(len(tgt) - k + 1)}
        for c in set(src):
            for t in subs:
                cooc[c][t] += 1.0
    sub = {}
    for c in sorted(cooc):
        row = {t: v * _LENGTH_PRIOR[len(t)] * rng.uniform(0.95, 1.05) for t, v in sorted(cooc[c].items())}
        total = math.fsum(row.values())
        sub[c] = {t: v / total for t, v in row.items()}
    ins = {y: _INIT_INSERT / len(tgt_chars) for y in sorted(tgt_chars)}
    return ChannelParams(sub, ins)


def _maximize(exp: Expectations) -> ChannelParams:
    sub = {}
    for c in sorted(exp.sub):
        row = {t: v for t, v in exp.sub[c].items() if v > 0}
        total = math.fsum(row.values())
        row = {t: v / total for t, v in row.items()}
        row = {t: v for t, v in row.items() if v >= PRUNE}
        total = math.fsum(row.values())
        sub[c] = {t: v / total for t, v in sorted(row.items())}
    n_ins = math.fsum(exp.ins.values())
    lam = n_ins / (n_ins + exp.proceed) if n_ins > 0 else 0.0
    ins = {}
    if lam > 0:
        ins = {y: lam * v / n_ins for y, v in sorted(exp.ins.items()) if lam * v / n_ins >= PRUNE}
    return ChannelParams(sub, ins)


def em_step(params: ChannelParams, pairs: Iterable[WordPair]) -> tuple[ChannelParams, Expectations]:
    exp = Expectations()
    for src, tgt in pairs:
        expected_counts(params, src, tgt, exp)
    return _maximize(exp), exp


def _check_pairs(pairs: Sequence[WordPair]) -> None:
    if not pairs:
        raise DataError("empty word pair list")
    for i, pair in enumerate(pairs):
        if len(pair) != 2 or not pair[0] or not pair[1]:
            raise DataError(f"word pair {i} has an empty side: {pair!r}")


def train_translit(
    pairs: Sequence[WordPair],
    n: int = 3,
    em_iters: int = 10,
    seed: int = 0,
    src_lang: str = "",
    tgt_lang: str = "",
) -> TransliterationModel:
    """Fit channel weights by EM and a target character LM on the target words."""
    _check_pairs(pairs)
    if em_iters < 1:
        raise ValueError("em_iters must be >= 1")
    pairs = [(s, t) for s, t in pairs]
    params = _initial_params(pairs, random.Random(seed))
    for _ in range(em_iters):
        params, _ = em_step(params, pairs)
    lm = CharNgramLM.train((t for _, t in pairs), order=n)
    sub = {c: {t: math.log(p) for t, p in row.items()} for c, row in params.sub.items()}
    ins = {y: math.log(p) for y, p in params.ins.items()}
    return TransliterationModel(src_lang, tgt_lang, sub, ins, lm)


# --------------------------------------------------------------------------
# decoding
# --------------------------------------------------------------------------


@dataclass(order=True)
class _Hyp:
    score: float
    out: str = field(compare=False)
    ctx: tuple = field(compare=False)


def _extend(model: TransliterationModel, hyp: _Hyp, chars: str, channel: float) -> _Hyp:
    score = hyp.score + channel
    ctx = hyp.ctx
    for ch in chars:
        score += model.lm.logprob(ctx, ch)
        ctx = model.lm.advance(ctx, ch)
    return _Hyp(score, hyp.out + chars, ctx)


def _with_insertions(model: TransliterationModel, hyps: Iterable[_Hyp], go: float) -> list[_Hyp]:
    """Each hypothesis either proceeds directly or after inserting one character."""
    out = []
    for h in hyps:
        out.append(_Hyp(h.score + go, h.out, h.ctx))
        for y, lp in model.ins_weights.items():
            out.append(_extend(model, h, y, lp + go))
    return out


def _prune(hyps: Iterable[_Hyp], beam: int) -> list[_Hyp]:
    best: dict[str, _Hyp] = {}
    for h in hyps:
        cur = best.get(h.out)
        if cur is None or h.score > cur.score:
            best[h.out] = h
    return heapq.nlargest(beam, best.values(), key=lambda h: (h.score, h.out))


def transliterate_statistical(
    model: TransliterationModel, word: str, beam: int = 8, k: int = 5
) -> list[tuple[str, float]]:
    """Beam-search the k best target strings for ``word``.

    Score is channel log-probability of the best alignment plus the LM
    log-probability of the candidate (including end-of-word). Source
    characters the model has never seen are copied verbatim at no channel
    cost. At most one insertion is considered per position, and only the
    ``max(4 * beam, 16)`` most likely rewrites of each source character.
    """
    if not word:
        raise ValueError("transliterate: empty word")
    if beam < 1 or k < 1:
        raise ValueError("beam and k must be >= 1")
    go = model.proceed_logp
    width = max(4 * beam, 16)
    hyps = [_Hyp(0.0, "", model.lm.start())]
    for c in word:
        hyps = _prune(_with_insertions(model, hyps, go), beam * (1 + len(model.ins_weights)))
        row = model.sub_weights.get(c)
        if row is None:
            options = [(c, 0.0)]
        else:
            options = heapq.nlargest(width, row.items(), key=lambda kv: (kv[1], kv[0]))
        expanded = [_extend(model, h, t, lp) for h in hyps for t, lp in options]
        hyps = _prune(expanded, beam)
    final = _with_insertions(model, hyps, go)
    done = [
        _Hyp(h.score + model.lm.logprob(h.ctx, EOS), h.out, h.ctx) for h in final
    ]
    ranked = _prune(done, k)
    return [(h.out, h.score) for h in ranked]
