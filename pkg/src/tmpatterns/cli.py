"""Command-line front end: ``tmpatterns <command> ...``.

Exit status is 0 for an affirmative or plain-value result, 1 for a
negative predicate and 2 for any error.  ``--json`` prints one JSON object
carrying the same status and payload as the text output.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from typing import Any, Optional, Sequence

from . import avoidance, morphisms, thuemorse, typicality, verification
from .errors import TMError
from .words import Alphabet, Word, binary_text

EXIT_CODES = {"yes": 0, "value": 0, "no": 1, "error": 2}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class CommandResult:
    command: str
    status: str
    payload: Any = None
    timing: float = 0.0
    text: list[str] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]

    def to_json(self) -> str:
        return json.dumps(
            {"command": self.command, "status": self.status, "payload": self.payload,
             "timing": round(self.timing, 6)},
            sort_keys=True,
        )


def _yes_no(flag: bool) -> str:
    return "yes" if flag else "no"


def _morphism_payload(phi: morphisms.Morphism) -> dict:
    return {"literal": str(phi), "images": phi.as_dict()}


def cmd_prefix(args) -> CommandResult:
    pre = thuemorse.tm_prefix(args.n)
    return CommandResult("prefix", "value", {"n": args.n, "prefix": str(pre), "generation": pre.generation},
                         text=[str(pre)])


def cmd_segment(args) -> CommandResult:
    w = binary_text(args.word)
    pos = thuemorse.first_occurrence(w)
    payload = {"word": w, "segment": pos is not None, "generation": thuemorse.min_generation(len(w)),
               "first_occurrence": pos}
    lines = [_yes_no(pos is not None)]
    if pos is not None:
        lines.append(f"first occurrence: {pos}")
    return CommandResult("segment", _yes_no(pos is not None), payload, text=lines)


def cmd_unavoidable(args) -> CommandResult:
    w = binary_text(args.word)
    reason = avoidance.unavoidability_reason(w)
    verdict = _yes_no(reason != "avoided")
    return CommandResult("unavoidable", verdict, {"word": w, "unavoidable": reason != "avoided", "reason": reason},
                         text=[f"{verdict}, reason={reason}"])


def cmd_witness(args) -> CommandResult:
    p = Word.parse(args.pattern, Alphabet.parse(args.alphabet) if args.alphabet else None)
    wit = avoidance.find_witness(p, args.max_image_len, args.prefix_len)
    if wit is None:
        return CommandResult("witness", "no", {"pattern": p.text, "alphabet": p.alphabet.letters, "witness": None},
                             text=["no", f"no witness with images of length <= {args.max_image_len}"])
    payload = {"pattern": p.text, "alphabet": p.alphabet.letters,
               "witness": {"morphism": _morphism_payload(wit.morphism), "image": wit.image.text,
                           "position": wit.position}}
    return CommandResult("witness", "yes", payload,
                         text=["yes", f"morphism: {wit.morphism}", f"image: {wit.image}",
                               f"position: {wit.position}"])


def cmd_avoided(args) -> CommandResult:
    w = binary_text(args.word)
    inst = avoidance.find_ideal_instance(w)
    if inst is None:
        return CommandResult("avoided", "no", {"word": w, "avoided": False, "instance": None}, text=["no"])
    image = inst.morphism.apply_text(inst.generator.text)
    payload = {"word": w, "avoided": True,
               "instance": {"generator": inst.generator.text, "morphism": _morphism_payload(inst.morphism),
                            "image": image, "position": inst.position}}
    return CommandResult("avoided", "yes", payload,
                         text=["yes", f"generator: {inst.generator}", f"morphism: {inst.morphism}",
                               f"image: {image} at position {inst.position}"])


def cmd_classify(args) -> CommandResult:
    v = typicality.classify(args.word)
    payload = {"word": v.word.text, "verdict": v.verdict.value, "evidence": v.evidence}
    lines = [v.verdict.value] + [f"{k}: {val}" for k, val in v.evidence.items()]
    return CommandResult("classify", "value", payload, text=lines)


def cmd_enumerate(args) -> CommandResult:
    words = list(thuemorse.segment_texts(args.length))
    if args.special:
        words = [w for w in words if thuemorse.is_special(w)]
    return CommandResult("enumerate", "value", {"length": args.length, "special": args.special, "words": words},
                         text=words)


def cmd_squares(args) -> CommandResult:
    rows = []
    for k in range(1, args.max_root_len + 1):
        for u in thuemorse.segment_texts(k):
            root = thuemorse.classify_square_root(u)
            if root is not None:
                rows.append({"root": u, "base": root.base.text, "n": root.n})
    return CommandResult("squares", "value", {"max_root_len": args.max_root_len, "squares": rows},
                         text=[f"{r['root']} = mu^{r['n']}({r['base']})" for r in rows])


def cmd_recurrence(args) -> CommandResult:
    ell = thuemorse.recurrence_window(args.k)
    return CommandResult("recurrence", "value", {"k": args.k, "window": ell}, text=[str(ell)])


def cmd_atypical(args) -> CommandResult:
    s0 = typicality.build_s0()
    words = [w.text for w in s0.words]
    payload = {"count": len(words), "words": words}
    lines = list(words)
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(typicality.export_jorder_dot(s0))
        payload["dot"] = args.dot
        lines.append(f"wrote {args.dot}")
    return CommandResult("atypical", "value", payload, text=lines)


def cmd_in_monoid(args) -> CommandResult:
    phi = morphisms.Morphism.parse(args.morphism)
    member = morphisms.in_mu_xi_monoid(phi)
    if member is None:
        return CommandResult("in-monoid", "no", {"morphism": str(phi), "member": None}, text=["no"])
    form = f"{'xi o ' if member.uses_exchange else ''}mu^{member.n}"
    return CommandResult("in-monoid", "yes",
                         {"morphism": str(phi), "member": {"n": member.n, "uses_exchange": member.uses_exchange}},
                         text=[f"yes, {form}"])


def cmd_verify(args) -> CommandResult:
    names = [args.suite] if args.suite else sorted(verification.SUITES)
    results = [verification.run_suite(name, args.max_len) for name in names]
    ok = all(r.passed for r in results)
    lines = []
    for r in results:
        lines.append(f"{'PASS' if r.passed else 'FAIL'} {r.name} ({r.cases} cases, {r.seconds:.2f}s)")
        lines.extend(f"  {msg}" for msg in r.failures)
    return CommandResult("verify", _yes_no(ok), {"suites": [r.as_dict() for r in results]}, text=lines)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tmpatterns", description="Segments, patterns and typical words of the Thue-Morse word.")
    parser.add_argument("--json", action="store_true", help="print a JSON object instead of text (accepted anywhere)")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("prefix", help="print the first N letters of t")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_prefix)

    p = sub.add_parser("segment", help="is W a segment of t?")
    p.add_argument("word")
    p.set_defaults(func=cmd_segment)

    p = sub.add_parser("unavoidable", help="is the binary word W a pattern of t?")
    p.add_argument("word")
    p.set_defaults(func=cmd_unavoidable)

    p = sub.add_parser("witness", help="bounded search for a morphism sending P onto a segment")
    p.add_argument("pattern")
    p.add_argument("--max-image-len", type=int, required=True)
    p.add_argument("--alphabet", help="pattern alphabet, e.g. xyz (default: inferred)")
    p.add_argument("--prefix-len", type=int, default=1 << 15)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("avoided", help="find a generator of the avoided-word ideal inside W")
    p.add_argument("word")
    p.set_defaults(func=cmd_avoided)

    p = sub.add_parser("classify", help="typical / atypical / not-a-segment")
    p.add_argument("word")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("enumerate", help="segments of a given length")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--special", action="store_true", help="keep only special segments")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("squares", help="segments u with uu a segment, classified")
    p.add_argument("--max-root-len", type=int, required=True)
    p.set_defaults(func=cmd_squares)

    p = sub.add_parser("recurrence", help="uniform recurrence window for length K")
    p.add_argument("k", type=int)
    p.set_defaults(func=cmd_recurrence)

    p = sub.add_parser("atypical", help="list the atypical words")
    p.add_argument("--dot", metavar="FILE", help="also write the factor-order diagram as DOT")
    p.set_defaults(func=cmd_atypical)

    p = sub.add_parser("in-monoid", help="is morphism M of the form mu^n or xi o mu^n?")
    p.add_argument("morphism", help="literal such as a->ab,b->ba")
    p.set_defaults(func=cmd_in_monoid)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=sorted(verification.SUITES))
    p.add_argument("--max-len", type=int, help="override the size bound of the selected suites")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> CommandResult:
    """Parse and execute one command without printing anything."""
    argv = [a for a in (sys.argv[1:] if argv is None else argv) if a != "--json"]
    start = time.perf_counter()
    try:
        args = build_parser().parse_args(argv)
        result = args.func(args)
    except (UsageError, TMError, ValueError, OSError) as exc:
        command = next((a for a in argv if not a.startswith("-")), "")
        result = CommandResult(command, "error", {"error": str(exc)}, text=[f"error: {exc}"])
    result.timing = time.perf_counter() - start
    return result


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    result = run(argv)
    if "--json" in argv:
        print(result.to_json())
    else:
        stream = sys.stderr if result.status == "error" else sys.stdout
        for line in result.text:
            print(line, file=stream)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
