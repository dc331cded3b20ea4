"""Command-line surface: expansions, diagram listings, exhaustive
verification, tables, and group data.

Exit codes: 0 on success, 1 on a usage error, 2 on a mathematical
consistency failure (engine disagreement or a failed verification check).
"""

from __future__ import annotations

import csv
import io
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import click

from .diagrams import enumerate_diagrams, expand_all, render_ascii, structure_constant, weight
from .errors import ConsistencyError, PresentationError
from .intervals import (
    IndexSet,
    all_index_sets,
    decompose,
    factor_ranks,
    hessenberg_function,
    m_factor,
)
from .oracle import quotient_dimension, structure_constants_linalg
from .permutations import (
    bruhat_leq,
    format_one_line,
    length,
    longest_wj,
    simple_transposition,
    subword_vj,
)
from .ring import integral, monomial, multiply, structure_constants_rewrite, unit

__all__ = ["ExpansionRecord", "cli", "main", "entry"]

MAX_QUERY_RANK = 16
MAX_VERIFY_RANK = 8

METHODS = ("diagram", "rewrite", "linalg", "all")


@dataclass
class ExpansionRecord:
    """Serialized expansion of one product: terms are (L, coefficient)
    pairs in canonical subset order, coefficients as decimal strings."""

    n: int
    J: list[int]
    K: list[int]
    method: str
    terms: list[dict]

    def to_json(self) -> str:
        return json.dumps(
            {"n": self.n, "J": self.J, "K": self.K, "method": self.method, "terms": self.terms},
            separators=(", ", ": "),
        )

    @classmethod
    def from_json(cls, text: str) -> "ExpansionRecord":
        data = json.loads(text)
        return cls(
            n=data["n"],
            J=list(data["J"]),
            K=list(data["K"]),
            method=data["method"],
            terms=[{"L": list(t["L"]), "coeff": str(t["coeff"])} for t in data["terms"]],
        )

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "J", "K", "method", "L", "coeff"])
        j = _format_list(self.J)
        k = _format_list(self.K)
        for term in self.terms:
            writer.writerow([self.n, j, k, self.method, _format_list(term["L"]), term["coeff"]])
        return buf.getvalue()


def _format_list(xs: list[int]) -> str:
    return ",".join(str(x) for x in xs) if xs else "-"


def _sorted_terms(expansion: dict[IndexSet, int]) -> list[dict]:
    return [
        {"L": list(L.as_tuple()), "coeff": str(expansion[L])}
        for L in sorted(expansion, key=lambda L: L.mask)
    ]


def _linalg_integer(J: IndexSet, K: IndexSet) -> dict[IndexSet, int]:
    out = {}
    for L, coeff in structure_constants_linalg(J, K).items():
        if coeff.denominator != 1 or coeff < 0:
            raise ConsistencyError(
                f"linalg engine gave non-integer constant {coeff} for J={J}, K={K}, L={L}"
            )
        out[L] = int(coeff)
    return out


def compute_expansion(J: IndexSet, K: IndexSet, method: str) -> dict[IndexSet, int]:
    """Run one engine, or all three with an exact-agreement check."""
    if method == "diagram":
        return expand_all(J, K)
    if method == "rewrite":
        return structure_constants_rewrite(J, K)
    if method == "linalg":
        return _linalg_integer(J, K)
    if method == "all":
        by_diagram = expand_all(J, K)
        by_rewrite = structure_constants_rewrite(J, K)
        by_linalg = _linalg_integer(J, K)
        if not (by_diagram == by_rewrite == by_linalg):
            raise ConsistencyError(
                f"engines disagree for J={J}, K={K}: "
                f"diagram={_plain(by_diagram)} rewrite={_plain(by_rewrite)} linalg={_plain(by_linalg)}"
            )
        return by_rewrite
    raise ValueError(f"unknown method {method!r}")


def _plain(expansion: dict[IndexSet, int]) -> dict[str, int]:
    return {L.format(): d for L, d in sorted(expansion.items(), key=lambda x: x[0].mask)}


def _parse_subset(ctx_name: str, text: str, n: int) -> IndexSet:
    try:
        return IndexSet.parse(text, n)
    except ValueError as exc:
        raise click.UsageError(f"bad {ctx_name}: {exc}") from None


def _check_rank(n: int, cap: int = MAX_QUERY_RANK) -> None:
    if not 1 <= n <= cap:
        raise click.UsageError(f"rank must be in [1, {cap}], got {n}")


@click.group()
def cli() -> None:
    """Exact structure constants for the Peterson cohomology basis."""


@cli.command("expand")
@click.option("-n", "--rank", "n", type=int, required=True, help="Ambient rank.")
@click.option("-J", "j_text", default="-", metavar="SUBSET", help='First subset, e.g. "1,3,5" ("-" = empty).')
@click.option("-K", "k_text", default="-", metavar="SUBSET", help="Second subset.")
@click.option("--method", type=click.Choice(METHODS), default="all", show_default=True)
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json", show_default=True)
@click.option("--cached", type=click.Path(exists=True, dir_okay=False), default=None,
              help="Read the expansion from a table file written by `table` instead of computing.")
def cmd_expand(n: int, j_text: str, k_text: str, method: str, fmt: str, cached: str | None) -> None:
    """Expand a product of two basis classes."""
    _check_rank(n)
    J = _parse_subset("-J", j_text, n)
    K = _parse_subset("-K", k_text, n)
    if cached is not None:
        expansion = _lookup_cached(cached, n, J, K)
        method = "cached"
    else:
        expansion = compute_expansion(J, K, method)
    record = ExpansionRecord(n, list(J.as_tuple()), list(K.as_tuple()), method, _sorted_terms(expansion))
    if fmt == "json":
        click.echo(record.to_json())
    else:
        click.echo(record.to_csv(), nl=False)


def _lookup_cached(path: str, n: int, J: IndexSet, K: IndexSet) -> dict[IndexSet, int]:
    rows = _read_table(path)
    out: dict[IndexSet, int] = {}
    for row in rows:
        if row["n"] != n:
            raise click.UsageError(f"cache {path} is for rank {row['n']}, not {n}")
        if IndexSet.parse(row["J"], n) == J and IndexSet.parse(row["K"], n) == K:
            out[IndexSet.parse(row["L"], n)] = int(row["d"])
    return out


def _read_table(path: str) -> list[dict]:
    if path.endswith(".json"):
        with open(path) as fh:
            data = json.load(fh)
        return [
            {"n": data["n"], "J": _format_list(r["J"]), "K": _format_list(r["K"]),
             "L": _format_list(r["L"]), "d": r["d"]}
            for r in data["rows"]
        ]
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        return [
            {"n": int(r["n"]), "J": r["J"], "K": r["K"], "L": r["L"], "d": r["d"]}
            for r in reader
        ]


@cli.command("diagrams")
@click.option("-n", "--rank", "n", type=int, required=True)
@click.option("-J", "j_text", default="-", metavar="SUBSET")
@click.option("-K", "k_text", default="-", metavar="SUBSET")
@click.option("-L", "l_text", required=True, metavar="SUBSET")
def cmd_diagrams(n: int, j_text: str, k_text: str, l_text: str) -> None:
    """List and render the left-right diagrams for one (J, K, L) triple."""
    _check_rank(n)
    J = _parse_subset("-J", j_text, n)
    K = _parse_subset("-K", k_text, n)
    L = _parse_subset("-L", l_text, n)
    found = enumerate_diagrams(J, K, L)
    if not found:
        click.echo("no diagrams; d = 0")
        return
    for idx, P in enumerate(found, start=1):
        click.echo(f"diagram {idx} of {len(found)}  (weight {weight(P)})")
        click.echo(render_ascii(P))
        click.echo("")
    click.echo(f"d = {structure_constant(J, K, L)}")


def _verify_chunk(n: int, masks: list[tuple[int, int]]) -> list[tuple[int, int, dict | None, str]]:
    """Worker for `verify`: three-engine expansion for a block of (J, K)
    pairs given by their subset masks.  Returns serialized expansions plus
    an error string on the first problem found per pair."""
    sets = {J.mask: J for J in all_index_sets(n)}
    out = []
    for jm, km in masks:
        J, K = sets[jm], sets[km]
        try:
            expansion = compute_expansion(J, K, "all")
            union, target = J.union(K), len(J) + len(K)
            for L in expansion:
                if not (union.issubset(L) and len(L) == target):
                    raise ConsistencyError(f"support condition fails at L={L}")
            out.append((jm, km, {L.mask: d for L, d in expansion.items()}, ""))
        except (ConsistencyError, PresentationError) as exc:
            out.append((jm, km, None, str(exc)))
    return out


@cli.command("verify")
@click.option("--n-max", type=int, default=7, show_default=True)
@click.option("--jobs", type=int, default=1, show_default=True, help="Worker processes for the pair sweep.")
def cmd_verify(n_max: int, jobs: int) -> None:
    """Exhaustively cross-check the three engines and the supporting
    combinatorics for every rank up to --n-max."""
    if not 1 <= n_max <= MAX_VERIFY_RANK:
        raise click.UsageError(f"--n-max must be in [1, {MAX_VERIFY_RANK}]")
    if jobs < 1:
        raise click.UsageError("--jobs must be >= 1")
    failures: list[str] = []
    for n in range(1, n_max + 1):
        masks = [(jm, km) for jm in range(1 << (n - 1)) for km in range(1 << (n - 1))]
        if jobs == 1 or len(masks) < 256:
            chunks = [_verify_chunk(n, masks)]
        else:
            step = (len(masks) + jobs - 1) // jobs
            blocks = [masks[i : i + step] for i in range(0, len(masks), step)]
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                chunks = list(pool.map(_verify_chunk, [n] * len(blocks), blocks))
        results: dict[tuple[int, int], dict] = {}
        for chunk in chunks:
            for jm, km, expansion, error in chunk:
                if error:
                    failures.append(f"n={n} J=mask{jm} K=mask{km}: {error}")
                else:
                    results[jm, km] = expansion
        for (jm, km), expansion in results.items():
            if results.get((km, jm)) != expansion:
                failures.append(f"n={n}: expansion not symmetric for masks {jm}, {km}")
        click.echo(f"n={n}: {len(masks)} (J,K) pairs cross-checked over three engines")

        dims_ok = all(
            quotient_dimension(n, d) == (math.comb(n - 1, d) if d <= n - 1 else 0)
            for d in range(0, n + 2)
        )
        if not dims_ok:
            failures.append(f"n={n}: graded dimensions do not match binomials")
        click.echo(f"n={n}: graded dimensions 0..{n + 1} {'OK' if dims_ok else 'FAIL'}")

        if n <= 6:
            sets = list(all_index_sets(n))
            lemma_ok = all(
                bruhat_leq(simple_transposition(n, i), longest_wj(J)) == (i in J)
                for J in sets
                for i in range(1, n)
            ) and all(
                bruhat_leq(longest_wj(Jp), longest_wj(J)) == Jp.issubset(J)
                for J in sets
                for Jp in sets
            )
            if not lemma_ok:
                failures.append(f"n={n}: Bruhat comparisons disagree with the subset criteria")
            click.echo(f"n={n}: Bruhat subset criteria {'OK' if lemma_ok else 'FAIL'}")

        if n >= 2:
            product = unit(n)
            for i in range(1, n):
                product = multiply(product, monomial(IndexSet.of(n, [i])))
            if integral(product) != math.factorial(n - 1):
                failures.append(f"n={n}: top-degree evaluation is not (n-1)!")
            click.echo(f"n={n}: top-degree evaluation OK")
    if failures:
        for line in failures:
            click.echo(f"FAIL {line}", err=True)
        raise ConsistencyError(f"{len(failures)} verification check(s) failed")
    click.echo("all checks passed")


@cli.command("table")
@click.option("-n", "--rank", "n", type=int, required=True)
@click.option("--degree", type=int, default=None, help="Only pairs with |J| + |K| equal to this.")
@click.option("--J", "j_filter", default=None, metavar="SUBSET", help="Restrict to this J.")
@click.option("--K", "k_filter", default=None, metavar="SUBSET", help="Restrict to this K.")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None,
              help="Output path (default: stdout).")
def cmd_table(n: int, degree: int | None, j_filter: str | None, k_filter: str | None,
              fmt: str, out: str | None) -> None:
    """Write the structure-constant table for one rank, rows (J, K, L, d) in
    canonical order, nonzero constants only."""
    _check_rank(n)
    j_only = _parse_subset("--J", j_filter, n) if j_filter is not None else None
    k_only = _parse_subset("--K", k_filter, n) if k_filter is not None else None
    rows = []
    for J in all_index_sets(n):
        if j_only is not None and J != j_only:
            continue
        for K in all_index_sets(n):
            if k_only is not None and K != k_only:
                continue
            if degree is not None and len(J) + len(K) != degree:
                continue
            expansion = structure_constants_rewrite(J, K)
            for L in sorted(expansion, key=lambda L: L.mask):
                rows.append((J, K, L, expansion[L]))
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "J", "K", "L", "d"])
        for J, K, L, d in rows:
            writer.writerow([n, J.format(), K.format(), L.format(), str(d)])
        text = buf.getvalue()
    else:
        text = json.dumps(
            {
                "n": n,
                "rows": [
                    {"J": list(J.as_tuple()), "K": list(K.as_tuple()),
                     "L": list(L.as_tuple()), "d": str(d)}
                    for J, K, L, d in rows
                ],
            },
            separators=(", ", ": "),
        )
    if out is None:
        click.echo(text, nl=(fmt == "json"))
    else:
        with open(out, "w") as fh:
            fh.write(text if text.endswith("\n") or fmt == "csv" else text + "\n")
        click.echo(f"wrote {len(rows)} rows to {out}")


@cli.command("group")
@click.option("-n", "--rank", "n", type=int, required=True)
@click.option("-J", "j_text", default="-", metavar="SUBSET")
def cmd_group(n: int, j_text: str) -> None:
    """Print the combinatorial data attached to one subset."""
    _check_rank(n, cap=MAX_QUERY_RANK)
    J = _parse_subset("-J", j_text, n)
    dec = decompose(J)
    wj = longest_wj(J)
    click.echo(f"J = {J.format()}  (rank n = {n})")
    click.echo("components = " + (" ".join(f"[{lo}..{hi}]" for lo, hi in dec.runs) or "(empty)"))
    click.echo(f"m_J = {dec.m_factor}")
    click.echo(f"factor ranks = {factor_ranks(J)}")
    click.echo(f"h_J = {hessenberg_function(J)}")
    click.echo(f"w_J = {format_one_line(wj)}   length {length(wj)}")
    click.echo(f"v_J = {format_one_line(subword_vj(J))}")


def main(argv: list[str] | None = None) -> int:
    """Driver enforcing the exit-code contract."""
    try:
        cli.main(args=argv, standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.UsageError as exc:
        click.echo(f"error: {exc.format_message()}", err=True)
        return 1
    except click.ClickException as exc:
        exc.show()
        return 1
    except (ConsistencyError, PresentationError) as exc:
        click.echo(f"consistency failure: {exc}", err=True)
        return 2
    return 0


def entry() -> None:
    sys.exit(main())
