"""Command line front end.

Expression grammar (whitespace is free)::

    expr    := prod ('+' prod)*
    prod    := factor ('*' factor)*
    factor  := [int 'x'] unary ['^' signed-int]      # n x e: n copies; e^k: power of a line
    unary   := 'dual(' expr ')' | 'sch[' ints '](' expr ')'
             | 'sym^' int '(' expr ')' | 'ext^' int '(' expr ')'
             | 'O' | 'O(' divisor ')' | 'rep[' ints ']' | '(' expr ')'
             | ('S' | 'Q') ['@' int] | alias
    divisor := [sign] term (sign term)*
    term    := [int ['*']] (letter | 'H@' int | 'det' ('S'|'Q') ['@' int])  |  int

Atoms without '@' refer to the top level.  Divisor letters (H, L, M, N) and aliases
such as T(-1), Omega(1), F, R, U, W are resolved per tower.  A bare integer inside
O(...) multiplies the tower's default divisor, and H@i is det S on level i.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from .bott import cohomology
from .tower import (
    TRIVIAL,
    BundleExpr,
    ConstRep,
    DirectSum,
    Dual,
    ExtPow,
    LinePow,
    LineTwist,
    SchurApply,
    SymPow,
    TautQ,
    TautS,
    Tower,
    UnsupportedShape,
    builtin_towers,
    get_tower,
    render,
    tensor,
)
from .weights import LIMITS, ResourceCapExceeded, check_weight, set_multiset_cap

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_SHAPE, EXIT_CAP, EXIT_INDET = 0, 1, 2, 3, 4, 5


class ParseError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


def tokenize(text: str) -> list[str]:
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        tok = m.group(1) or m.group(2) or m.group(3)
        if tok is None:
            break
        out.append(tok)
        pos = m.end()
    return out


class Parser:
    def __init__(self, text: str, tower: Tower):
        self.toks = tokenize(text)
        self.i = 0
        self.tower = tower

    # token helpers
    def peek(self, k: int = 0) -> str | None:
        j = self.i + k
        return self.toks[j] if j < len(self.toks) else None

    def take(self, expected: str | None = None) -> str:
        tok = self.peek()
        if tok is None:
            raise ParseError(f"unexpected end of input (expected {expected or 'more'})")
        if expected is not None and tok != expected:
            raise ParseError(f"expected {expected!r}, found {tok!r}")
        self.i += 1
        return tok

    def accept(self, tok: str) -> bool:
        if self.peek() == tok:
            self.i += 1
            return True
        return False

    def integer(self, signed: bool = False) -> int:
        sign = 1
        if signed and self.peek() in ("-", "+"):
            sign = -1 if self.take() == "-" else 1
        if self.peek() is None:
            raise ParseError("expected an integer at end of input")
        tok = self.take()
        if not tok.isdigit():
            raise ParseError(f"expected an integer, found {tok!r}")
        return sign * int(tok)

    def ints(self) -> tuple[int, ...]:
        self.take("[")
        vals = [self.integer(True)]
        while self.accept(","):
            vals.append(self.integer(True))
        self.take("]")
        return tuple(vals)

    # grammar
    def parse(self) -> BundleExpr:
        if not self.toks:
            raise ParseError("empty expression")
        e = self.expr()
        if self.peek() is not None:
            raise ParseError(f"trailing input at {self.peek()!r}")
        return e

    def expr(self) -> BundleExpr:
        parts = [self.prod()]
        while self.accept("+"):
            parts.append(self.prod())
        return parts[0] if len(parts) == 1 else DirectSum(tuple((p, 1) for p in parts))

    def prod(self) -> BundleExpr:
        parts = [self.factor()]
        while self.accept("*"):
            parts.append(self.factor())
        return tensor(*parts)

    def factor(self) -> BundleExpr:
        mult = 1
        if self.peek() is not None and self.peek().isdigit() and self.peek(1) == "x":
            mult = int(self.take())
            self.take("x")
        e = self.unary()
        if self.accept("^"):
            e = LinePow(e, self.integer(True))
        return e if mult == 1 else DirectSum(((e, mult),))

    def level(self) -> int:
        if self.accept("@"):
            lev = self.integer()
            if lev > self.tower.top:
                raise ParseError(f"level {lev} does not exist on {self.tower.name}")
            return lev
        return self.tower.top

    def unary(self) -> BundleExpr:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input")
        if tok == "(":
            self.take()
            e = self.expr()
            self.take(")")
            return e
        if tok == "dual":
            self.take()
            self.take("(")
            e = self.expr()
            self.take(")")
            return Dual(e)
        if tok == "sch":
            self.take()
            w = self._weight(self.ints())
            self.take("(")
            e = self.expr()
            self.take(")")
            return SchurApply(w, e)
        if tok in ("sym", "ext"):
            self.take()
            self.take("^")
            k = self.integer()
            self.take("(")
            e = self.expr()
            self.take(")")
            return SymPow(k, e) if tok == "sym" else ExtPow(k, e)
        if tok == "rep":
            self.take()
            w = self._weight(self.ints())
            if len(w) != self.tower.base_rank:
                raise ParseError(f"rep[] needs {self.tower.base_rank} entries")
            return ConstRep(w)
        if tok == "O":
            self.take()
            if self.accept("("):
                d = self.divisor()
                self.take(")")
                return d
            return TRIVIAL
        if tok in ("S", "Q"):
            self.take()
            lev = self.level()
            return TautS(lev) if tok == "S" else TautQ(lev)
        if tok in ("T", "Omega") and self.peek(1) == "(":
            self.take()
            self.take("(")
            n = self.integer(True)
            self.take(")")
            return self._alias(f"{tok}({n})")
        if tok.isidentifier():
            self.take()
            return self._alias(tok)
        raise ParseError(f"unexpected token {tok!r}")

    def _weight(self, w: tuple[int, ...]) -> tuple[int, ...]:
        try:
            return check_weight(w)
        except ValueError as ex:
            raise ParseError(str(ex)) from None

    def _alias(self, name: str) -> BundleExpr:
        if name in self.tower.aliases:
            return self.tower.aliases[name]
        known = ", ".join(sorted(self.tower.aliases)) or "none"
        raise ParseError(f"unknown name {name!r} on tower {self.tower.name} (aliases: {known})")

    def divisor(self) -> BundleExpr:
        parts: list[BundleExpr] = []
        sign = 1
        if self.peek() in ("-", "+"):
            sign = -1 if self.take() == "-" else 1
        parts.append(self.div_term(sign))
        while self.peek() in ("-", "+"):
            sign = -1 if self.take() == "-" else 1
            parts.append(self.div_term(sign))
        return tensor(*parts)

    def div_term(self, sign: int) -> BundleExpr:
        coef = 1
        tok = self.peek()
        if tok is not None and tok.isdigit():
            coef = int(self.take())
            self.accept("*")
            nxt = self.peek()
            if nxt is None or nxt in ("+", "-", ")"):
                default = self.tower.default_divisor
                if default is None:
                    raise ParseError(f"tower {self.tower.name} has no default divisor")
                return _scaled(self.tower.divisors[default], sign * coef)
        coef *= sign
        if self.peek() is None:
            raise ParseError("expected a divisor at end of input")
        tok = self.take()
        if tok == "det":
            kind = self.take()
            if kind not in ("S", "Q"):
                raise ParseError("det must be followed by S or Q")
            lev = self.level()
            base = self.tower.det_s(lev) if kind == "S" else self.tower.det_q(lev)
            return _scaled(base, coef)
        if tok == "H" and self.peek() == "@":
            lev = self.level()
            return LineTwist(lev, coef)
        if tok in self.tower.divisors:
            return _scaled(self.tower.divisors[tok], coef)
        known = ", ".join(sorted(self.tower.divisors))
        raise ParseError(f"unknown divisor {tok!r} on tower {self.tower.name} (known: {known})")


def _scaled(line: BundleExpr, k: int) -> BundleExpr:
    if isinstance(line, LineTwist):
        return LineTwist(line.level, line.t * k)
    return line if k == 1 else LinePow(line, k)


def parse_expression(text: str, tower: Tower) -> BundleExpr:
    return Parser(text, tower).parse()


# ---------------------------------------------------------------- commands


def _dump(obj: object) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _emit(text: str, output: str | None, name: str) -> None:
    if output is None:
        sys.stdout.write(text)
        return
    path = Path(output)
    if path.suffix:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
    else:
        path.mkdir(parents=True, exist_ok=True)
        (path / name).write_text(text)


def cmd_cohomology(args: argparse.Namespace) -> int:
    try:
        tower = get_tower(args.tower)
    except KeyError as ex:
        print(f"error: {ex.args[0]}", file=sys.stderr)
        return EXIT_PARSE
    try:
        expr = parse_expression(args.expression, tower)
    except ParseError as ex:
        print(f"parse error: {ex}", file=sys.stderr)
        return EXIT_PARSE
    try:
        table = cohomology(expr, tower)
    except UnsupportedShape as ex:
        print(f"unsupported shape: {ex}", file=sys.stderr)
        return EXIT_SHAPE
    except ResourceCapExceeded as ex:
        print(f"resource cap exceeded: {ex}", file=sys.stderr)
        return EXIT_CAP
    if args.format == "json":
        out = {
            "tower": tower.name,
            "expression": render(expr),
            "degrees": table.to_json(),
            "caps": {"multiset_cap": LIMITS.multiset_cap},
        }
        _emit(_dump(out), args.output, "cohomology.json")
    else:
        text = f"{tower.name}: {render(expr)}\n{table.pretty()}\n"
        _emit(text, args.output, "cohomology.md")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    from .suites import SUITES, Config, combine, run

    if args.suite != "all" and args.suite not in SUITES:
        print(f"error: unknown suite {args.suite!r}", file=sys.stderr)
        return EXIT_PARSE
    cfg = Config(samples=args.samples, seed=args.seed, jobs=args.jobs, no_reductions=args.no_reductions)
    try:
        results = run(args.suite, cfg)
    except UnsupportedShape as ex:
        print(f"unsupported shape: {ex}", file=sys.stderr)
        return EXIT_SHAPE
    except ResourceCapExceeded as ex:
        print(f"resource cap exceeded: {ex}", file=sys.stderr)
        return EXIT_CAP
    if args.output is not None:
        out = Path(args.output)
        out.mkdir(parents=True, exist_ok=True)
        for r in results:
            (out / f"{r.name}.json").write_text(_dump(r.report))
            (out / f"{r.name}.md").write_text(r.markdown + "\n")
            for suffix, text in r.artifacts.items():
                (out / f"{r.name}-{suffix}").write_text(text)
    if args.format == "json":
        payload = results[0].report if len(results) == 1 else {r.name: r.report for r in results}
        sys.stdout.write(_dump(payload))
    else:
        sys.stdout.write("\n\n".join(r.markdown for r in results) + "\n")
    for r in results:
        print(f"{r.name}: {r.verdict}", file=sys.stderr)
    verdict = combine([r.verdict for r in results])
    return {"PASS": EXIT_OK, "FAIL": EXIT_FAIL}.get(verdict, EXIT_INDET)


def cmd_towers(args: argparse.Namespace) -> int:
    rows = []
    for name, t in builtin_towers().items():
        rows.append(
            {
                "name": name,
                "dimension": t.dimension(),
                "divisors": sorted(t.divisors),
                "aliases": sorted(t.aliases),
                "description": t.description,
            }
        )
    if args.format == "json":
        sys.stdout.write(_dump(rows))
    else:
        for r in rows:
            print(f"{r['name']:9} dim {r['dimension']:2}  divisors {','.join(r['divisors']) or '-':6} {r['description']}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="towercoh", description="Bott cohomology on towers of Grassmann bundles.")
    p.add_argument("--cap", type=int, default=None, help="maximum size of a character enumeration")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("cohomology", help="cohomology of one bundle expression")
    c.add_argument("expression")
    c.add_argument("--tower", required=True)
    c.add_argument("--format", choices=("json", "markdown"), default="markdown")
    c.add_argument("--output")
    c.set_defaults(func=cmd_cohomology)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", help="thm-gvan1, thm-gvan, lemma-cohZ, prop-y, appendix-a or all")
    v.add_argument("--samples", type=int, default=1000)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--no-reductions", action="store_true", help="skip cells that need duality or divisor sequences")
    v.add_argument("--format", choices=("json", "markdown"), default="json")
    v.add_argument("--output", help="directory for JSON, markdown and quiver files")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("towers", help="list the builtin towers")
    t.add_argument("--format", choices=("json", "markdown"), default="markdown")
    t.set_defaults(func=cmd_towers)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as ex:
        return EXIT_PARSE if ex.code else EXIT_OK
    if args.cap is not None:
        set_multiset_cap(args.cap)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
