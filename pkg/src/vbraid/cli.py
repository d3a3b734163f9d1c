"""Command-line front door.

Subcommands: ``invariant``, ``distinguish``, ``verify``, ``mutate`` and
``regression``.  JSON is the primary output; ``--plain`` renders the same
data as text.  All numbers are serialized as exact ``p/q`` strings.

Exit codes: 0 success / distinct; 1 parse or validation error; 2 singular
point (retries exhausted); 3 inconclusive (equal images); 4 a verification
verdict deviates from the expected outcome.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .algebra import Fraction
from .errors import SingularPoint
from .operators import (
    Point,
    apply_word,
    default_base,
    format_point,
    invariant,
    parse_point,
    point_arity,
    variable_prefix,
)
from .cluster import (
    YSeed,
    load_seed,
    mutate_x,
    mutate_y,
    parse_mutation_script,
    seed_to_json,
)
from .regression import run_regression
from .relations import (
    DEFAULT_MAX_SYMBOLIC_LEN,
    DEFAULT_MAX_SYMBOLIC_N,
    check_factorization,
    check_forbidden,
    compare_operators,
    verify_presentation,
)
from .words import GroupKind, load_corpus, parse_word, read_word_file

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_SINGULAR = 2
EXIT_INCONCLUSIVE = 3
EXIT_VERIFY_FAILED = 4


@dataclass
class RunConfig:
    group: GroupKind | None = None
    strands: int | None = None
    base: Point | None = None
    seed: int = 0
    max_symbolic_n: int = DEFAULT_MAX_SYMBOLIC_N
    max_symbolic_len: int = DEFAULT_MAX_SYMBOLIC_LEN
    output: str = "json"


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; 2 is reserved for singular points
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _load_config(args) -> RunConfig:
    cfg = RunConfig()
    if getattr(args, "config", None):
        data = json.loads(Path(args.config).read_text())
        if "group" in data:
            cfg.group = GroupKind.parse(data["group"])
        if "strands" in data:
            cfg.strands = int(data["strands"])
        if "base" in data:
            cfg.base = parse_point(data["base"] if isinstance(data["base"], str) else ",".join(data["base"]))
        cfg.seed = int(data.get("seed", cfg.seed))
        cfg.max_symbolic_n = int(data.get("max_symbolic_n", cfg.max_symbolic_n))
        cfg.max_symbolic_len = int(data.get("max_symbolic_len", cfg.max_symbolic_len))
        cfg.output = data.get("output", cfg.output)
    if getattr(args, "group", None):
        cfg.group = GroupKind.parse(args.group)
    if getattr(args, "strands", None) is not None:
        cfg.strands = args.strands
    if getattr(args, "base", None):
        cfg.base = parse_point(args.base)
    if getattr(args, "seed", None) is not None:
        cfg.seed = args.seed
    if getattr(args, "max_symbolic_n", None) is not None:
        cfg.max_symbolic_n = args.max_symbolic_n
    if getattr(args, "max_symbolic_len", None) is not None:
        cfg.max_symbolic_len = args.max_symbolic_len
    if getattr(args, "plain", False):
        cfg.output = "plain"
    if getattr(args, "json", False):
        cfg.output = "json"
    return cfg


def _require(cfg: RunConfig, *fields: str) -> None:
    for field in fields:
        if getattr(cfg, field) is None:
            raise ValueError(f"missing required option: --{field.replace('strands', 'n/--strands')}")


def _emit(payload, cfg: RunConfig) -> None:
    if cfg.output == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        _emit_plain(payload)


def _emit_plain(payload, indent: str = "") -> None:
    if isinstance(payload, dict):
        for key in sorted(payload):
            value = payload[key]
            if isinstance(value, (dict, list)):
                print(f"{indent}{key}:")
                _emit_plain(value, indent + "  ")
            else:
                print(f"{indent}{key}: {value}")
    elif isinstance(payload, list):
        for value in payload:
            if isinstance(value, (dict, list)):
                _emit_plain(value, indent)
                print()
            else:
                print(f"{indent}{value}")
    else:
        print(f"{indent}{payload}")


def _cmd_invariant(args) -> int:
    cfg = _load_config(args)
    _require(cfg, "group", "strands")
    if args.words_file:
        path = Path(args.words_file)
        if path.suffix == ".json":
            entries = [(e.word, e.name) for e in load_corpus(path)]
        else:
            entries = [
                (parse_word(text, cfg.strands, cfg.group), text) for text in read_word_file(path)
            ]
        reports = []
        for word, _name in entries:
            result = invariant(word, base=cfg.base, seed=cfg.seed)
            reports.append(result.to_json())
        _emit(reports, cfg)
        return EXIT_OK
    if args.word is None:
        raise ValueError("missing --word (or --words-file)")
    word = parse_word(args.word, cfg.strands, cfg.group)
    result = invariant(word, base=cfg.base, seed=cfg.seed)
    _emit(result.to_json(), cfg)
    return EXIT_OK


def _joint_images(word1, word2, cfg: RunConfig):
    """Evaluate both words at one shared nonsingular base."""
    import random

    arity = point_arity(word1.group, word1.strands)
    candidate = cfg.base if cfg.base is not None else default_base(word1.group, word1.strands)
    rng = random.Random(cfg.seed)
    last = None
    for retries in range(17):
        try:
            return candidate, apply_word(word1, candidate), apply_word(word2, candidate), retries
        except SingularPoint as exc:
            last = exc
            candidate = tuple(Fraction(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(arity))
    raise SingularPoint(f"no shared nonsingular base found: {last}") from last


def _cmd_distinguish(args) -> int:
    cfg = _load_config(args)
    _require(cfg, "group", "strands")
    word1 = parse_word(args.word1, cfg.strands, cfg.group)
    word2 = parse_word(args.word2, cfg.strands, cfg.group)
    base, image1, image2, retries = _joint_images(word1, word2, cfg)
    prefix = variable_prefix(cfg.group)
    report = {
        "word1": word1.format(),
        "word2": word2.format(),
        "group": cfg.group.value.lower(),
        "n": cfg.strands,
        "base": format_point(base, prefix),
        "image1": format_point(image1, prefix),
        "image2": format_point(image2, prefix),
        "base_retries": retries,
    }
    if image1 != image2:
        report["verdict"] = "distinct"
        _emit(report, cfg)
        return EXIT_OK
    if args.symbolic:
        verdict = compare_operators(word1, word2, max_total_length=cfg.max_symbolic_len,
                                    max_symbolic_n=cfg.max_symbolic_n)
        if verdict.holds:
            report["verdict"] = "equal-in-image"
            _emit(report, cfg)
            return EXIT_INCONCLUSIVE
        report["verdict"] = "distinct"
        report["witness"] = verdict.to_json()["witness"]
        _emit(report, cfg)
        return EXIT_OK
    report["verdict"] = "inconclusive-at-base"
    _emit(report, cfg)
    return EXIT_INCONCLUSIVE


def _cmd_verify(args) -> int:
    cfg = _load_config(args)
    _require(cfg, "group", "strands")
    verdicts = verify_presentation(cfg.group, cfg.strands, max_symbolic_n=cfg.max_symbolic_n)
    passed = all(v.holds for v in verdicts)
    report = {
        "group": cfg.group.value.lower(),
        "n": cfg.strands,
        "relations": [v.to_json() for v in verdicts],
    }
    if cfg.group.is_virtual:
        forbidden = []
        for i in range(1, cfg.strands - 1):
            for variant in ("a", "b"):
                v = check_forbidden(cfg.strands, i, variant)
                ok = (not v.holds) and all(s.equal for s in v.slices or [])
                passed = passed and ok
                entry = v.to_json()
                entry["i"] = i
                entry["refuted"] = ok
                forbidden.append(entry)
        report["forbidden"] = forbidden
        fact = {"a": check_factorization("a"), "b": check_factorization("b")}
        passed = passed and all(fact.values())
        report["factorization"] = fact
    report["passed"] = passed
    _emit(report, cfg)
    return EXIT_OK if passed else EXIT_VERIFY_FAILED


def _cmd_mutate(args) -> int:
    cfg = _load_config(args)
    seed = load_seed(args.seed_file)
    if args.y and not isinstance(seed, YSeed):
        seed = YSeed(seed.x, seed.matrix)
    if isinstance(seed, YSeed) and not args.y:
        raise ValueError("seed file holds y-values; pass --y to mutate them")
    for k in parse_mutation_script(args.script):
        seed = mutate_y(seed, k) if args.y else mutate_x(seed, k)
    _emit(seed_to_json(seed), cfg)
    return EXIT_OK


def _cmd_regression(args) -> int:
    cfg = _load_config(args)
    rows = run_regression()
    failures = [r for r in rows if not r.passed]
    if getattr(args, "json", False):
        _emit([r.to_json() for r in rows], cfg)
    else:
        width = max(len(r.name) for r in rows)
        for r in rows:
            status = "pass" if r.passed else "FAIL"
            line = f"{r.name:<{width}}  {status}"
            if r.detail and not r.passed:
                line += f"  {r.detail}"
            print(line)
        print(f"{len(rows) - len(failures)}/{len(rows)} checks passed")
    return EXIT_OK if not failures else EXIT_INVALID


def _add_common(sub, *, group: bool = True) -> None:
    if group:
        sub.add_argument("--group", choices=["b", "fb", "vb", "fvb"], help="group kind")
        sub.add_argument("-n", "--strands", type=int, help="strand count")
        sub.add_argument("--base", help='base point, e.g. "1,2,2,1"')
    sub.add_argument("--seed", type=int, help="seed for randomized base retries (default 0)")
    sub.add_argument("--max-symbolic-n", type=int, dest="max_symbolic_n")
    sub.add_argument("--max-symbolic-len", type=int, dest="max_symbolic_len")
    sub.add_argument("--config", help="JSON config file; flags override its values")
    sub.add_argument("--plain", action="store_true", help="plain-text rendering instead of JSON")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="vbraid", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("invariant", help="invariant vector of one word (or a word/corpus file)")
    p.add_argument("--word", help="braid word, e.g. 's1 r1 s1'")
    p.add_argument("--words-file", help="word file (one per line) or corpus JSON")
    _add_common(p)
    p.set_defaults(fn=_cmd_invariant)

    p = subs.add_parser("distinguish", help="compare two words' invariants at a shared base")
    p.add_argument("word1")
    p.add_argument("word2")
    p.add_argument("--symbolic", action="store_true", help="escalate to full operator equality")
    _add_common(p)
    p.set_defaults(fn=_cmd_distinguish)

    p = subs.add_parser("verify", help="symbolically verify the defining relations")
    _add_common(p)
    p.set_defaults(fn=_cmd_verify)

    p = subs.add_parser("mutate", help="apply a mutation script to a seed file")
    p.add_argument("--seed-file", required=True)
    p.add_argument("--script", required=True, help='comma-separated vertices, e.g. "7,4,2"')
    p.add_argument("--y", action="store_true", help="mutate y-variables instead of x")
    _add_common(p, group=False)
    p.set_defaults(fn=_cmd_mutate)

    p = subs.add_parser("regression", help="run the bundled end-to-end check suite")
    p.add_argument("--json", action="store_true", help="machine-readable results array")
    _add_common(p, group=False)
    p.set_defaults(fn=_cmd_regression)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except SingularPoint as exc:
        print(f"vbraid: singular point: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    except ZeroDivisionError as exc:
        print(f"vbraid: division by zero: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    except (ValueError, IndexError, KeyError, OSError) as exc:
        print(f"vbraid: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
