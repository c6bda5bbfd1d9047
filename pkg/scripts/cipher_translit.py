"""Held-out top-1 accuracy of the statistical transliterator on substitution
ciphers, as a function of EM iterations and training size.

    python scripts/cipher_translit.py --train-sizes 25,50,100,200 --iters 1,3,10
"""

import argparse
import random
import string
import time

from indicrel.translit import train_translit, transliterate_statistical


def make_words(rng, n, alphabet):
    words = set()
    while len(words) < n:
        words.add("".join(rng.choice(alphabet) for _ in range(rng.randint(3, 8))))
    return sorted(words)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--train-sizes", default="25,50,100,200")
    ap.add_argument("--iters", default="1,3,10")
    ap.add_argument("--test-size", type=int, default=50)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    alphabet = string.ascii_lowercase
    image = list(alphabet)
    rng.shuffle(image)
    enc = dict(zip(alphabet, image))
    words = make_words(rng, max(map(int, args.train_sizes.split(","))) + args.test_size, alphabet)
    rng.shuffle(words)
    test, pool = words[: args.test_size], words[args.test_size :]

    print("train\tem_iters\ttop1\tseconds")
    for size in map(int, args.train_sizes.split(",")):
        pairs = [(w, "".join(enc[c] for c in w)) for w in pool[:size]]
        for iters in map(int, args.iters.split(",")):
            t0 = time.perf_counter()
            model = train_translit(pairs, em_iters=iters, seed=args.seed)
            hits = sum(
                transliterate_statistical(model, w)[0][0] == "".join(enc[c] for c in w) for w in test
            )
            print(f"{size}\t{iters}\t{hits / len(test):.3f}\t{time.perf_counter() - t0:.2f}")


if __name__ == "__main__":
    main()
