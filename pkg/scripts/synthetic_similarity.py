"""Build a synthetic n-way corpus with controlled character overlap and print
its LCSR similarity matrix as TSV (the plot-ready matrix format).

    python scripts/synthetic_similarity.py --sentences 500 --rates 0.05,0.2,0.5
"""

import argparse
import random

from indicrel.convert import convert_script
from indicrel.scripts import BRAHMI_SCRIPTS, DEVANAGARI
from indicrel.similarity import similarity_matrix

LETTERS = [chr(0x900 + o) for o in list(range(0x15, 0x3A)) + list(range(0x3E, 0x4D))]


def mutate(rng, sentence, rate):
    return "".join(rng.choice(LETTERS) if c != " " and rng.random() < rate else c for c in sentence)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sentences", type=int, default=500)
    ap.add_argument("--rates", default="0.05,0.2,0.5", help="substitution rate per derived language")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    base = [
        " ".join("".join(rng.choice(LETTERS) for _ in range(rng.randint(2, 7))) for _ in range(rng.randint(4, 12)))
        for _ in range(args.sentences)
    ]
    corpora = {"L0": base}
    scripts = {"L0": DEVANAGARI}
    for i, rate in enumerate(float(r) for r in args.rates.split(",")):
        script = BRAHMI_SCRIPTS[(i + 1) % len(BRAHMI_SCRIPTS)]
        name = f"L{i + 1}"
        corpora[name] = [convert_script(mutate(rng, s, rate), DEVANAGARI, script)[0] for s in base]
        scripts[name] = script
    mat = similarity_matrix(corpora, scripts, corpus_id=f"synthetic-seed{args.seed}")
    print(mat.to_tsv(), end="")


if __name__ == "__main__":
    main()
