"""Run STD, RelAgg and RelGreedy on a planted-sense synthetic benchmark.

Writes embeddings, lexicon, dataset and gold key to OUTDIR, drives the
``clwsd`` CLI over them and prints Best / Out-Of-Five F-measure per method.

    python scripts/run_synthetic.py --out runs/synth --seed 0
"""

import argparse
import contextlib
import io
from pathlib import Path

from clwsd import load_answers, load_gold, score, write_dataset, write_embeddings, write_gold, write_lexicon
from clwsd.cli import main as clwsd
from clwsd.synthetic import SyntheticConfig, make_benchmark


def parse_args():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--out", type=Path, default=Path("runs/synthetic"))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--nouns", type=int, default=20)
    p.add_argument("--cases", type=int, default=50)
    p.add_argument("--noise", type=float, default=SyntheticConfig.noise)
    p.add_argument("--threads", type=int, default=1)
    return p.parse_args()


def main():
    args = parse_args()
    cfg = SyntheticConfig(n_nouns=args.nouns, cases_per_noun=args.cases, noise=args.noise, seed=args.seed)
    bench = make_benchmark(cfg)
    out = args.out
    out.mkdir(parents=True, exist_ok=True)
    files = {k: out / n for k, n in [("emb", "vectors.vec"), ("lex", "lexicon.tsv"),
                                     ("ds", "dataset.tsv"), ("gold", "gold.key")]}
    write_embeddings(bench.model, files["emb"])
    write_lexicon(bench.lexicon, files["lex"])
    write_dataset(bench.instances, files["ds"])
    write_gold(bench.gold, files["gold"])

    gold = load_gold(files["gold"])
    rows = []
    for mode in ("oof", "best"):
        for method in ("relagg", "relgreedy", "std"):
            ans = out / f"{method}.{mode}.ans"
            common = ["--lexicon", str(files["lex"]), "--dataset", str(files["ds"]),
                      "--mode", mode, "--out", str(ans), "--threads", str(args.threads)]
            if method == "std":
                argv = ["baseline", *common]
            else:
                argv = ["disambiguate", "--embeddings", str(files["emb"]), "--method", method, *common]
            with contextlib.redirect_stderr(io.StringIO()):
                code = clwsd(argv)
            if code != 0:
                raise SystemExit(f"clwsd {' '.join(argv)} exited with {code}")
            report = score(load_answers(ans, max_answers=5 if mode == "oof" else None), gold, mode)
            rows.append((mode, method, report.f_measure))

    print(f"{len(bench.instances)} instances, seed {args.seed}, files in {out}")
    print(f"{'setting':<8} {'method':<10} F-measure")
    for mode, method, f in rows:
        print(f"{mode:<8} {method:<10} {f:.3f}")


if __name__ == "__main__":
    main()
