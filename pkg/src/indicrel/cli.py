"""Command-line front-end.

Every subcommand is a line-oriented UTF-8 filter: it reads ``--input`` (or
stdin) and writes ``--output`` (or stdout). Diagnostics go to stderr.
Exit status: 0 success, 1 usage error, 2 data error.
"""

from __future__ import annotations

import argparse
import contextlib
import sys
import unicodedata
from typing import Iterator, Sequence, TextIO

from indicrel.convert import convert_script
from indicrel.errors import DataError
from indicrel.evaluation import bleu_corpus, oov_rate, vocabulary
from indicrel.postedit import postedit_translate
from indicrel.preorder import PreorderConfig, read_config, read_tree, reorder
from indicrel.scripts import ScriptSpec, get_script
from indicrel.similarity import similarity_matrix
from indicrel.subword import (
    DEFAULT_NUM_MERGES,
    MergeTable,
    bpe_learn,
    desegment,
    segment_sentence,
    syllabify_word,
)
from indicrel.translit import (
    TransliterationModel,
    mine_candidate_pairs,
    read_pairs,
    train_translit,
    transliterate_statistical,
    write_pairs,
)

EXIT_OK, EXIT_USAGE, EXIT_DATA = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _norm(line: str) -> str:
    return unicodedata.normalize("NFC", line.rstrip("\r\n"))


def _lines(path: str | None) -> Iterator[str]:
    if path is None or path == "-":
        for line in sys.stdin:
            yield _norm(line)
    else:
        with open(path, encoding="utf-8") as f:
            for line in f:
                yield _norm(line)


@contextlib.contextmanager
def _writer(path: str | None) -> Iterator[TextIO]:
    if path is None or path == "-":
        yield sys.stdout
        sys.stdout.flush()
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            yield f


def _script(key: str | None) -> ScriptSpec | None:
    if key is None:
        return None
    try:
        return get_script(key)
    except KeyError as e:
        raise UsageError(str(e.args[0])) from None


def _require_script(key: str | None, flag: str) -> ScriptSpec:
    if key is None:
        raise UsageError(f"{flag} is required")
    return _script(key)


def _bool(value: str | bool) -> bool:
    if isinstance(value, bool):
        return value
    return str(value).strip().lower() in ("1", "true", "yes", "on")


# --------------------------------------------------------------------------
# subcommands
# --------------------------------------------------------------------------


def cmd_convert_script(args) -> int:
    src = _require_script(args.script or args.src_lang, "--src-lang")
    tgt = _require_script(args.tgt_lang, "--tgt-lang")
    if not (src.is_brahmi and tgt.is_brahmi):
        raise UsageError("convert-script supports Brahmi-derived scripts only")
    warnings = 0
    with _writer(args.output) as out:
        for lineno, line in enumerate(_lines(args.input), start=1):
            try:
                text, w = convert_script(line, src, tgt, strict=_bool(args.strict))
            except DataError as e:
                raise DataError(f"line {lineno}: {e}") from None
            warnings += w
            out.write(text + "\n")
    print(f"warnings={warnings}", file=sys.stderr)
    return EXIT_OK


def cmd_similarity_matrix(args) -> int:
    if not args.input or len(args.input) < 2:
        raise UsageError("give at least two --input LANG=PATH corpora")
    corpora, scripts = {}, {}
    for spec in args.input:
        if "=" not in spec:
            raise UsageError(f"--input expects LANG=PATH, got {spec!r}")
        lang, path = spec.split("=", 1)
        corpora[lang] = list(_lines(path))
        scripts[lang] = _script(lang)
    mat = similarity_matrix(corpora, scripts, corpus_id=args.corpus_id or "")
    with _writer(args.output) as out:
        out.write(mat.to_tsv())
    print(f"sentences={mat.sentence_count} normalization: {mat.notes}", file=sys.stderr)
    return EXIT_OK


def cmd_syllabify(args) -> int:
    script = _script(args.script)
    with _writer(args.output) as out:
        for line in _lines(args.input):
            sylls = [s for w in line.split() for s in syllabify_word(w, script)]
            out.write(" ".join(sylls) + "\n")
    return EXIT_OK


def cmd_bpe_learn(args) -> int:
    paths = args.input or [None]
    corpus = [line for p in paths for line in _lines(p)]
    langs = [x for x in (args.src_lang, args.tgt_lang) if x]
    table = bpe_learn(corpus, args.merges, args.min_frequency, source_langs=langs)
    with _writer(args.output) as out:
        out.write(table.dumps())
    print(f"merges={table.num_merges} alphabet={len(table.alphabet)}", file=sys.stderr)
    return EXIT_OK


def _segment(args, unit: str) -> int:
    table = None
    if unit == "bpe":
        if not args.table:
            raise UsageError("--table is required for BPE segmentation")
        table = MergeTable.load(args.table)
    script = _script(args.script)
    with _writer(args.output) as out:
        for lineno, line in enumerate(_lines(args.input), start=1):
            toks = segment_sentence(line, unit, script, table, lineno=lineno)
            out.write(" ".join(toks) + "\n")
    return EXIT_OK


def cmd_segment(args) -> int:
    return _segment(args, args.unit)


def cmd_bpe_apply(args) -> int:
    return _segment(args, "bpe")


def cmd_desegment(args) -> int:
    with _writer(args.output) as out:
        for lineno, line in enumerate(_lines(args.input), start=1):
            try:
                out.write(desegment(line.split()) + "\n")
            except DataError as e:
                raise DataError(f"line {lineno}: {e}") from None
    return EXIT_OK


def cmd_translit_train(args) -> int:
    pairs = read_pairs(_lines(args.input))
    model = train_translit(
        pairs, n=args.order, em_iters=args.em_iters, seed=args.seed,
        src_lang=args.src_lang or "", tgt_lang=args.tgt_lang or "",
    )
    if args.output is None:
        raise UsageError("--output model path is required")
    model.save(args.output)
    print(f"pairs={len(pairs)} source_chars={len(model.sub_weights)}", file=sys.stderr)
    return EXIT_OK


def _load_model(path: str | None) -> TransliterationModel:
    if not path:
        raise UsageError("--model is required")
    return TransliterationModel.load(path)


def cmd_translit(args) -> int:
    model = _load_model(args.model)
    with _writer(args.output) as out:
        for lineno, line in enumerate(_lines(args.input), start=1):
            words = line.split()
            if args.topk == 1:
                out.write(" ".join(
                    transliterate_statistical(model, w, args.beam, 1)[0][0] for w in words
                ) + "\n")
                continue
            for w in words:
                for rank, (cand, score) in enumerate(
                    transliterate_statistical(model, w, args.beam, args.topk), start=1
                ):
                    out.write(f"{lineno}\t{w}\t{rank}\t{cand}\t{score:.4f}\n")
    return EXIT_OK


def cmd_mine_pairs(args) -> int:
    if not (args.src and args.tgt):
        raise UsageError("--src and --tgt corpora are required")
    src = _require_script(args.src_lang, "--src-lang")
    tgt = _require_script(args.tgt_lang, "--tgt-lang")
    pairs = mine_candidate_pairs(list(_lines(args.src)), list(_lines(args.tgt)), src, tgt, args.threshold)
    with _writer(args.output) as out:
        out.write(write_pairs(pairs))
    print(f"pairs={len(pairs)}", file=sys.stderr)
    return EXIT_OK


def cmd_postedit(args) -> int:
    src = _require_script(args.src_lang, "--src-lang")
    tgt = _require_script(args.tgt_lang, "--tgt-lang")
    model = TransliterationModel.load(args.model) if args.model else None
    result = postedit_translate([line.split() for line in _lines(args.input)], src, tgt, model, beam=args.beam)
    with _writer(args.output) as out:
        for sent in result.sentences:
            out.write(" ".join(sent) + "\n")
    print(result.summary(), file=sys.stderr)
    return EXIT_OK


def cmd_preorder(args) -> int:
    conf = {"clause_order": args.clause_order} if args.clause_order else {}
    config = PreorderConfig.from_mapping(conf)
    with _writer(args.output) as out:
        for lineno, line in enumerate(_lines(args.input), start=1):
            if not line.strip():
                out.write("\n")
                continue
            try:
                tree = read_tree(line, strict=not args.lenient)
            except DataError as e:
                raise DataError(f"line {lineno}: {e}") from None
            out.write(" ".join(reorder(tree, config)) + "\n")
    return EXIT_OK


def cmd_bleu(args) -> int:
    if not (args.hyp and args.ref):
        raise UsageError("--hyp and --ref are required")
    res = bleu_corpus(list(_lines(args.hyp)), list(_lines(args.ref)), args.max_n, smooth=args.smooth)
    with _writer(args.output) as out:
        out.write(res.format() + "\n")
    return EXIT_OK


def cmd_oov_rate(args) -> int:
    if not args.train:
        raise UsageError("--train corpus is required")
    rate = oov_rate(list(_lines(args.input)), vocabulary(list(_lines(args.train))))
    with _writer(args.output) as out:
        out.write(f"{rate:.4f}\n")
    return EXIT_OK


# --------------------------------------------------------------------------
# parser
# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="input file (default: stdin)")
    common.add_argument("--output", help="output file (default: stdout)")
    common.add_argument("--config", help="key=value file; command-line flags take precedence")

    langs = argparse.ArgumentParser(add_help=False)
    langs.add_argument("--src-lang")
    langs.add_argument("--tgt-lang")

    parser = _Parser(prog="indicrel", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    def add(name, func, parents=(common,), **kw):
        p = sub.add_parser(name, parents=list(parents), **kw)
        p.set_defaults(func=func)
        return p

    p = add("convert-script", cmd_convert_script, (common, langs), help="rule-based script conversion")
    p.add_argument("--script", help="source script (overrides --src-lang)")
    p.add_argument("--strict", action="store_true")

    p = sub.add_parser("similarity-matrix", help="pairwise LCSR over an n-way parallel corpus")
    p.set_defaults(func=cmd_similarity_matrix)
    p.add_argument("--input", action="append", metavar="LANG=PATH")
    p.add_argument("--output")
    p.add_argument("--config")
    p.add_argument("--corpus-id")

    p = add("syllabify", cmd_syllabify, help="orthographic syllables")
    p.add_argument("--script", help="script name or language code (default: per-word detection)")

    p = sub.add_parser("bpe-learn", parents=[langs], help="learn BPE merges")
    p.set_defaults(func=cmd_bpe_learn)
    p.add_argument("--input", action="append", help="corpus file; repeat for joint learning")
    p.add_argument("--output")
    p.add_argument("--config")
    p.add_argument("--merges", type=int, default=DEFAULT_NUM_MERGES)
    p.add_argument("--min-frequency", type=int, default=1)

    p = add("bpe-apply", cmd_bpe_apply, help="segment with a learned merge table")
    p.add_argument("--table", help="merge table file")
    p.add_argument("--script")

    p = add("segment", cmd_segment, help="subword segmentation with boundary markers")
    p.add_argument("--unit", choices=("os", "bpe", "char"), default="os")
    p.add_argument("--script")
    p.add_argument("--table", help="merge table (for --unit bpe)")

    add("desegment", cmd_desegment, help="rebuild words from marker-delimited subwords")

    p = add("translit-train", cmd_translit_train, (common, langs), help="train a statistical transliterator")
    p.add_argument("--order", type=int, default=3, help="character LM order")
    p.add_argument("--em-iters", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)

    p = add("translit", cmd_translit, help="statistical transliteration")
    p.add_argument("--model")
    p.add_argument("--beam", type=int, default=8)
    p.add_argument("--topk", type=int, default=5)

    p = sub.add_parser("mine-pairs", parents=[langs], help="mine candidate transliteration pairs")
    p.set_defaults(func=cmd_mine_pairs)
    p.add_argument("--src")
    p.add_argument("--tgt")
    p.add_argument("--output")
    p.add_argument("--config")
    p.add_argument("--threshold", type=float, default=0.5)

    p = add("postedit", cmd_postedit, (common, langs), help="transliterate untranslated words")
    p.add_argument("--model", help="statistical model (default: rule-based conversion)")
    p.add_argument("--beam", type=int, default=8)

    p = add("preorder", cmd_preorder, help="reorder role-annotated trees")
    p.add_argument("--clause-order", help="e.g. C_m,S_m,S,V_m,O_m,O,V")
    p.add_argument("--lenient", action="store_true", help="map unknown labels to X")

    p = sub.add_parser("bleu", help="word-level corpus BLEU")
    p.set_defaults(func=cmd_bleu)
    p.add_argument("--hyp")
    p.add_argument("--ref")
    p.add_argument("--output")
    p.add_argument("--config")
    p.add_argument("--max-n", type=int, default=4, choices=range(1, 5))
    p.add_argument("--smooth", action="store_true", help="add-one smoothing for n>1 (non-standard)")

    p = add("oov-rate", cmd_oov_rate, help="OOV token rate of --input w.r.t. --train")
    p.add_argument("--train")
    return parser


def _apply_config(parser: argparse.ArgumentParser, argv: Sequence[str]) -> None:
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    known, _ = pre.parse_known_args(argv)
    if not known.config:
        return
    conf = read_config(known.config)
    sub_action = next(a for a in parser._actions if isinstance(a, argparse._SubParsersAction))
    for sp in sub_action.choices.values():
        defaults = {}
        for action in sp._actions:
            if action.dest in conf:
                value = conf[action.dest]
                if isinstance(action, argparse._StoreTrueAction):
                    value = _bool(value)
                elif isinstance(action, argparse._AppendAction):
                    value = [v.strip() for v in value.split(",")]
                defaults[action.dest] = value
        sp.set_defaults(**defaults)


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        _apply_config(parser, argv)
        try:
            args = parser.parse_args(argv)
        except SystemExit as e:
            return EXIT_OK if e.code in (0, None) else EXIT_USAGE
        return args.func(args)
    except UsageError as e:
        print(f"indicrel: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (DataError, ValueError, OSError, KeyError) as e:
        print(f"indicrel: {e}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
