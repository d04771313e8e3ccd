"""
Line-oriented spec language.

    # the Fibonacci word
    alphabet: 0 1
    rule 0 -> 0 1
    rule 1 -> 0
    seed: 0
    coding: 0->a 1->b

Letters are whitespace-separated tokens. Besides a morphism (``rule`` lines
plus ``seed``) a spec may name a built-in ``generator``; ``patch``, ``shift``
and ``image`` lines then transform the word in file order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .core import Alphabet, Coding, Morphism
from .corpus.constructions import (
    PI,
    BaseConcat,
    Characteristic,
    MorphicFixedPoint,
    MorphicImage,
    NamedConstant,
    PrefixPatch,
    Product,
    Quadratic,
    RulerImage,
    Shift,
    Sturmian,
    WordSpec,
)
from .errors import MorphicError, ParseError

GENERATORS = {
    "characteristic": ("kind", "k"),
    "base-concat": ("k",),
    "sturmian": ("alpha", "rho"),
    "ruler": ("max",),
    "ruler-power": ("prefix", "letter", "base", "shift"),
    "product": ("formula",),
}

_DIRECTIVE = re.compile(r"^(alphabet|seed|coding|values|patch|shift|generator)\s*:(.*)$")
_ARROW = re.compile(r"^(rule|image)\s+(\S+)\s*->(.*)$")


@dataclass
class SpecDocument:
    alphabet: tuple[str, ...] = ()
    rules: dict[str, tuple[str, ...]] = field(default_factory=dict)
    seed: str | None = None
    coding: dict[str, str] | None = None
    values: dict[str, int] | None = None
    generator: tuple[str, dict[str, str]] | None = None
    pipeline: list[tuple[str, object]] = field(default_factory=list)
    step_lines: list[int] = field(default_factory=list, compare=False, repr=False)

    @property
    def morphism(self) -> Morphism | None:
        if not self.rules:
            return None
        return Morphism.from_dict(dict(self.rules), alphabet=Alphabet(self.alphabet))

    @property
    def coding_map(self) -> Coding | None:
        if self.coding is None:
            return None
        src = Alphabet(self.alphabet)
        return Coding.from_string(src.letters, [self.coding[a] for a in src.letters])


def _err(kind, msg, line, col=1):
    return ParseError(kind, msg, line, col)


def _col(raw: str, token: str, start: int = 0) -> int:
    i = raw.find(token, start)
    return (i if i >= 0 else 0) + 1


def parse_spec(text: str) -> SpecDocument:
    doc = SpecDocument()
    declared_at: int | None = None
    seen: dict[str, int] = {}
    rule_lines: dict[str, int] = {}
    pending: list[tuple[int, str, str, int]] = []  # (line, raw, token, column) letters to validate
    last_image: dict | None = None
    lines = text.splitlines()

    for no, raw in enumerate(lines, start=1):
        body = raw.split("#", 1)[0].rstrip()
        if not body.strip():
            continue
        stripped = body.strip()
        indent = len(body) - len(body.lstrip())
        m = _ARROW.match(stripped)
        if m:
            kind, lhs, rhs = m.group(1), m.group(2), m.group(3).split()
            if kind == "rule":
                last_image = None
                if lhs in doc.rules:
                    raise _err("duplicate rule", f"letter {lhs!r} already has a rule (line {rule_lines[lhs]})", no, indent + 1)
                doc.rules[lhs] = tuple(rhs)
                rule_lines[lhs] = no
                arrow = raw.find("->")
                pending.append((no, raw, lhs, _col(raw, lhs, indent + 4)))
                pos = arrow + 2
                for t in rhs:
                    c = _col(raw, t, pos)
                    pending.append((no, raw, t, c))
                    pos = c - 1 + len(t)
            else:
                if last_image is None:
                    last_image = {}
                    doc.pipeline.append(("image", last_image))
                    doc.step_lines.append(no)
                if lhs in last_image:
                    raise _err("duplicate rule", f"image of {lhs!r} given twice", no, indent + 1)
                last_image[lhs] = tuple(rhs)
            continue
        m = _DIRECTIVE.match(stripped)
        if not m:
            raise _err("syntax", f"cannot parse {stripped!r}", no, indent + 1)
        key, val = m.group(1), m.group(2).split()
        if key not in ("patch", "shift"):
            last_image = None
        if key in seen and key not in ("patch", "shift"):
            raise _err("syntax", f"{key} given twice (first on line {seen[key]})", no, indent + 1)
        seen[key] = no
        vcol = _col(raw, ":") + 1
        if key == "alphabet":
            if not val:
                raise _err("syntax", "empty alphabet", no, vcol)
            dup = [t for i, t in enumerate(val) if t in val[:i]]
            if dup:
                raise _err("syntax", f"letter {dup[0]!r} declared twice", no, _col(raw, dup[0], raw.find(dup[0]) + 1))
            doc.alphabet = tuple(val)
            declared_at = no
        elif key == "seed":
            if len(val) != 1:
                raise _err("syntax", "seed must be a single letter", no, vcol)
            doc.seed = val[0]
            pending.append((no, raw, val[0], _col(raw, val[0], vcol - 1)))
        elif key == "coding":
            doc.coding = {}
            for tok in val:
                a, arrow, b = tok.partition("->")
                if not arrow or not a or not b:
                    raise _err("syntax", f"coding entries look like a->x, got {tok!r}", no, _col(raw, tok))
                if a in doc.coding:
                    raise _err("duplicate rule", f"coding of {a!r} given twice", no, _col(raw, tok))
                doc.coding[a] = b
                pending.append((no, raw, a, _col(raw, tok)))
        elif key == "values":
            doc.values = {}
            for tok in val:
                a, eq, v = tok.partition("=")
                if not eq or not re.fullmatch(r"-?\d+", v):
                    raise _err("syntax", f"values entries look like a=3, got {tok!r}", no, _col(raw, tok))
                doc.values[a] = int(v)
                pending.append((no, raw, a, _col(raw, tok)))
        elif key == "patch":
            if not val:
                raise _err("syntax", "empty patch", no, vcol)
            doc.pipeline.append(("patch", tuple(val)))
            doc.step_lines.append(no)
            last_image = None
        elif key == "shift":
            if len(val) != 1 or not val[0].isdigit():
                raise _err("syntax", "shift takes one non-negative integer", no, vcol)
            doc.pipeline.append(("shift", int(val[0])))
            doc.step_lines.append(no)
            last_image = None
        elif key == "generator":
            if not val or val[0] not in GENERATORS:
                raise _err("syntax", f"unknown generator; choose from {sorted(GENERATORS)}", no, vcol)
            params = {}
            for tok in val[1:]:
                k, eq, v = tok.partition("=")
                if not eq or k not in GENERATORS[val[0]]:
                    raise _err("syntax", f"bad parameter {tok!r} for {val[0]}", no, _col(raw, tok))
                params[k] = v
            doc.generator = (val[0], params)

    end = max(len(lines), 1)
    if doc.generator is not None and (doc.rules or doc.seed is not None):
        raise _err("syntax", "a generator spec cannot also define rules or a seed", seen["generator"])
    if doc.generator is None:
        if not doc.rules and declared_at is None:
            raise _err("syntax", "spec defines neither rules nor a generator", end)
        if declared_at is None:
            raise _err("syntax", "rules need an alphabet declaration", min(rule_lines.values()))
        declared = set(doc.alphabet)
        for no, raw, tok, col in pending:
            if tok not in declared:
                raise _err("undeclared letter", f"{tok!r} is not in the alphabet", no, col)
        for a in doc.alphabet:
            if a not in doc.rules:
                raise _err("missing rule", f"no rule for letter {a!r}", declared_at, _col(lines[declared_at - 1], a, lines[declared_at - 1].find(":")))
        if doc.seed is None:
            raise _err("missing seed", "no seed letter given", end)
        if doc.coding is not None:
            missing = [a for a in doc.alphabet if a not in doc.coding]
            if missing:
                raise _err("missing rule", f"coding has no image for {missing[0]!r}", seen["coding"])
    return doc


# ---------------------------------------------------------------------------
# printing


def _fmt_rhs(tokens) -> str:
    return " ".join(tokens)


def print_spec(doc: SpecDocument) -> str:
    out = []
    if doc.generator is not None:
        kind, params = doc.generator
        args = " ".join(f"{k}={params[k]}" for k in GENERATORS[kind] if k in params)
        out.append(f"generator: {kind} {args}".rstrip())
    if doc.alphabet and doc.generator is None:
        out.append("alphabet: " + " ".join(doc.alphabet))
    for a in doc.alphabet:
        if a in doc.rules:
            out.append(f"rule {a} -> {_fmt_rhs(doc.rules[a])}".rstrip())
    if doc.seed is not None:
        out.append(f"seed: {doc.seed}")
    if doc.coding is not None:
        out.append("coding: " + " ".join(f"{a}->{doc.coding[a]}" for a in doc.alphabet))
    if doc.values is not None:
        out.append("values: " + " ".join(f"{a}={v}" for a, v in doc.values.items()))
    for kind, arg in doc.pipeline:
        if kind == "patch":
            out.append("patch: " + " ".join(arg))
        elif kind == "shift":
            out.append(f"shift: {arg}")
        else:
            out.extend(f"image {a} -> {_fmt_rhs(img)}".rstrip() for a, img in arg.items())
    return "\n".join(out) + "\n"


def canonical(text: str) -> str:
    return print_spec(parse_spec(text))


# ---------------------------------------------------------------------------
# documents <-> word specs


def _real(text: str, line: int) -> Quadratic | NamedConstant | Fraction:
    if text == "pi":
        return PI
    m = re.fullmatch(r"q\((-?\d+),(-?\d+),(\d+),(\d+)\)", text)
    if m:
        p, q, d, r = map(int, m.groups())
        return Quadratic(p, q, d, r)
    try:
        return Fraction(text)
    except ValueError:
        raise _err("syntax", f"cannot read real {text!r}; use pi, q(p,q,d,r) or a fraction", line) from None


def _fmt_real(x) -> str:
    if isinstance(x, NamedConstant):
        return x.name
    if isinstance(x, Quadratic):
        return f"q({x.p},{x.q},{x.d},{x.r})"
    return str(Fraction(x))


def _generator_spec(kind: str, params: dict[str, str], line: int) -> WordSpec:
    def need(key):
        if key not in params:
            raise _err("syntax", f"generator {kind} needs {key}=", line)
        return params[key]

    try:
        if kind == "characteristic":
            k = int(params["k"]) if "k" in params else None
            return Characteristic(need("kind"), k)
        if kind == "base-concat":
            return BaseConcat(int(need("k")))
        if kind == "sturmian":
            alpha = _real(need("alpha"), line)
            rho = _real(params.get("rho", "0"), line)
            if isinstance(alpha, Fraction):
                raise _err("syntax", "slope must be irrational (pi or q(...))", line)
            return Sturmian(alpha, rho)
        if kind == "ruler":
            return RulerImage.ruler(int(params.get("max", "63")))
        if kind == "ruler-power":
            return RulerImage.power_blocks(
                tuple(need("prefix").split(",")), need("letter"), int(need("base")), int(need("shift"))
            )
        return Product(need("formula"))
    except (ValueError, TypeError) as exc:
        raise _err("syntax", str(exc), line) from None


def to_spec(doc: SpecDocument, budget: int | None = None) -> WordSpec:
    if doc.generator is not None:
        spec = _generator_spec(*doc.generator, line=1)
    else:
        spec = MorphicFixedPoint(doc.morphism, doc.seed, doc.coding_map)
    for (kind, arg), line in zip(doc.pipeline, doc.step_lines or [0] * len(doc.pipeline)):
        if kind == "patch":
            spec = PrefixPatch(spec, arg)
        elif kind == "shift":
            spec = Shift(spec, arg)
        else:
            missing = [a for a in spec.alphabet.letters if a not in arg]
            if missing:
                raise _err("missing rule", f"image has no rule for {missing[0]!r}", line)
            extra = [a for a in arg if a not in spec.alphabet]
            if extra:
                raise _err("undeclared letter", f"{extra[0]!r} is not a letter of the word", line)
            try:
                spec = MorphicImage(spec, Morphism.from_dict(dict(arg), alphabet=spec.alphabet))
            except (ValueError, MorphicError) as exc:
                raise _err("syntax", str(exc), line) from None
    if budget is not None:
        spec.budget = budget
    return spec


def document_from_spec(spec: WordSpec) -> SpecDocument:
    """Serialize a construction; inverse of ``to_spec`` up to equality of words."""
    if isinstance(spec, MorphicFixedPoint):
        m = spec.morphism
        doc = SpecDocument(
            alphabet=m.source.letters,
            rules={a: tuple(img) for a, img in m.as_dict().items()},
            seed=spec.seed,
        )
        if spec.coding is not None:
            doc.coding = {a: img[0] for a, img in spec.coding.as_dict().items()}
        return doc
    if isinstance(spec, (PrefixPatch, Shift, MorphicImage)):
        doc = document_from_spec(spec.base)
        if isinstance(spec, PrefixPatch):
            doc.pipeline.append(("patch", tuple(spec.replacement)))
        elif isinstance(spec, Shift):
            doc.pipeline.append(("shift", spec.k))
        else:
            doc.pipeline.append(("image", {a: tuple(img) for a, img in spec.morphism.as_dict().items()}))
        return doc
    if isinstance(spec, Characteristic):
        params = {"kind": spec.kind}
        if spec.k is not None:
            params["k"] = str(spec.k)
        return SpecDocument(generator=("characteristic", params))
    if isinstance(spec, BaseConcat):
        return SpecDocument(generator=("base-concat", {"k": str(spec.k)}))
    if isinstance(spec, Sturmian):
        return SpecDocument(generator=("sturmian", {"alpha": _fmt_real(spec.alpha), "rho": _fmt_real(spec.rho)}))
    if isinstance(spec, RulerImage) and spec.params:
        if "ruler" in spec.params:
            return SpecDocument(generator=("ruler", {"max": str(spec.params["ruler"])}))
        p = spec.params
        return SpecDocument(
            generator=(
                "ruler-power",
                {"prefix": ",".join(p["prefix"]), "letter": p["letter"], "base": str(p["base"]), "shift": str(p["shift"])},
            )
        )
    if isinstance(spec, Product):
        return SpecDocument(generator=("product", {"formula": spec.formula}))
    raise ValueError(f"{type(spec).__name__} has no DSL form")


def load_spec(path: str) -> SpecDocument:
    with open(path, encoding="utf-8") as fh:
        return parse_spec(fh.read())
