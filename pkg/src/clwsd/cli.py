"""Command-line entry point: ``clwsd {disambiguate,baseline,score}``.

Exit codes: 0 on success, 1 on usage, I/O or parse errors, 2 when no
instance in the dataset could be answered. Diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Callable, Sequence

from clwsd.benchmark import load_answers, load_dataset, load_gold, write_answers
from clwsd.config import Method, Mode, RunConfig
from clwsd.disambiguator import Answer, Instance, disambiguate, std_baseline
from clwsd.embeddings import load_embeddings
from clwsd.errors import FormatError, ScoringError
from clwsd.lexicon import Lexicon, load_lexicon
from clwsd.scoring import report_render, score

log = logging.getLogger("clwsd")

EXIT_OK, EXIT_ERROR, EXIT_NOTHING_ANSWERED = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _answerable(instances: Sequence[Instance], lex: Lexicon) -> list[Instance]:
    keep = []
    for inst in instances:
        if inst.target_lemma in lex:
            keep.append(inst)
        else:
            log.warning("skipping %s: target lemma %r not in lexicon", inst.id, inst.target_lemma)
    return keep


def _run(config: RunConfig, lex: Lexicon, instances: Sequence[Instance],
         answer: Callable[[Instance], Answer]) -> int:
    todo = _answerable(instances, lex)
    skipped = len(instances) - len(todo)
    if not todo:
        log.error("no answerable instances (%d skipped)", skipped)
        return EXIT_NOTHING_ANSWERED
    if config.threads == 1:
        answers = [answer(i) for i in todo]
    else:
        with ThreadPoolExecutor(max_workers=config.threads) as pool:
            answers = list(pool.map(answer, todo))
    write_answers(answers, config.output_path)
    log.log(logging.WARNING if skipped else logging.INFO,
            "wrote %d answers to %s (%d skipped)", len(answers), config.output_path, skipped)
    return EXIT_OK


def cmd_disambiguate(config: RunConfig) -> int:
    if config.embeddings_path is None:
        raise ValueError("disambiguate needs an embeddings path")
    lex = load_lexicon(config.lexicon_path)
    instances = load_dataset(config.dataset_path)
    model = load_embeddings(config.embeddings_path)
    return _run(config, lex, instances,
                lambda inst: disambiguate(inst, lex, model, config.method, config.mode))


def cmd_baseline(config: RunConfig) -> int:
    lex = load_lexicon(config.lexicon_path)
    instances = load_dataset(config.dataset_path)
    return _run(config, lex, instances, lambda inst: std_baseline(inst, lex, config.mode))


def cmd_score(gold_path: Path, answers_path: Path, mode: Mode | str, fmt: str = "text") -> int:
    mode = Mode(mode)
    gold = load_gold(gold_path)
    answers = load_answers(answers_path, max_answers=5 if mode is Mode.OOF else None)
    data = report_render(score(answers, gold, mode), fmt)
    out = getattr(sys.stdout, "buffer", None)
    if out is None:
        sys.stdout.write(data.decode("utf-8"))
    else:
        sys.stdout.flush()
        out.write(data)
        out.flush()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="clwsd", description="Cross-lingual WSD with word embeddings.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def run_args(p, embeddings: bool):
        if embeddings:
            p.add_argument("--embeddings", required=True, type=Path, help="word2vec text file")
            p.add_argument("--method", choices=[m.value for m in Method], default=Method.RELAGG.value)
        p.add_argument("--lexicon", required=True, type=Path)
        p.add_argument("--dataset", required=True, type=Path)
        p.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.BEST.value)
        p.add_argument("--out", required=True, type=Path)
        p.add_argument("--threads", type=int, default=None)

    run_args(sub.add_parser("disambiguate", help="rank translations with relagg/relgreedy"), True)
    run_args(sub.add_parser("baseline", help="most common translation(s)"), False)

    p = sub.add_parser("score", help="Best / Out-Of-Five evaluation")
    p.add_argument("--gold", required=True, type=Path)
    p.add_argument("--answers", required=True, type=Path)
    p.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.BEST.value)
    p.add_argument("--format", choices=["text", "csv"], default="text")
    return parser


def _setup_logging(verbose: bool) -> None:
    log.setLevel(logging.INFO if verbose else logging.WARNING)
    for h in [h for h in log.handlers if getattr(h, "_clwsd_cli", False)]:
        log.removeHandler(h)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s: %(message)s"))
    handler._clwsd_cli = True
    log.addHandler(handler)


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_ERROR
    _setup_logging(args.verbose)
    try:
        if args.command == "score":
            return cmd_score(args.gold, args.answers, args.mode, args.format)
        kwargs = {}
        if args.threads is not None:
            kwargs["threads"] = args.threads
        config = RunConfig(
            lexicon_path=args.lexicon,
            dataset_path=args.dataset,
            output_path=args.out,
            mode=args.mode,
            method=getattr(args, "method", Method.RELAGG.value),
            embeddings_path=getattr(args, "embeddings", None),
            **kwargs,
        )
        if args.command == "disambiguate":
            return cmd_disambiguate(config)
        return cmd_baseline(config)
    except (FormatError, ScoringError, ValueError, KeyError, OSError) as exc:
        log.error("%s", exc)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
