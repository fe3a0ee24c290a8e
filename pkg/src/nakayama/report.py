"""Single-algebra analysis reports (plain dicts with a fixed key order)."""
from __future__ import annotations

from typing import Optional, Sequence

from . import cartan as cm
from . import oracle as orc
from .kupisch import KupischSeries, from_sequence, is_selfinjective, normalize, parse
from .quiver import summarize
from .retraction import retraction_chain, terminal_is_simple

__all__ = ["analyze", "render_dimension", "format_text"]


def render_dimension(dim) -> int | str:
    return "infinite" if dim == orc.INFINITE else int(dim)


def analyze(
    source: str | Sequence[int] | KupischSeries,
    oracle: bool = False,
    cartan: bool = False,
    retract: bool = False,
) -> dict:
    """Decisions and cycle data for one algebra, plus the optional sections."""
    if isinstance(source, KupischSeries):
        ks, given = source, list(source.c)
    elif isinstance(source, str):
        ks = parse(source)
        given = [int(t) for t in source.replace(",", " ").split()]
    else:
        given = [int(x) for x in source]
        ks = from_sequence(given)

    s = summarize(ks)
    ns = normalize(ks)
    out: dict = {
        "input": given,
        "series": list(ks.c),
        "n": ks.n,
        "shape": ks.shape.value,
        "normalized": {"series": list(ns.c), "offset": ns.offset},
        "selfinjective": is_selfinjective(ks),
        "resolution_quiver": {
            "succ": list(s.quiver.succ),
            "component_count": s.component_count,
            "weight": s.weight,
            "cycles": [
                {"vertices": list(cy.vertices), "size": cy.size, "weight": cy.weight, "black": cy.black}
                for cy in s.cycles
            ],
        },
        "decisions": {
            "finite_global_dimension": s.finite_global_dimension,
            "gorenstein": s.gorenstein,
        },
    }
    if oracle:
        pd = orc.simple_proj_dims(ks)
        inj = orc.simple_inj_dims(ks)
        out["oracle"] = {
            "pd_simple": [render_dimension(x) for x in pd],
            "id_simple": [render_dimension(x) for x in inj],
            "global_dimension": render_dimension(max(pd)),
            "gorenstein": orc.is_gorenstein_oracle(ks),
        }
    if cartan:
        c = cm.cartan_matrix(ks)
        snf = cm.smith_normal_form(c)
        out["cartan"] = {
            "matrix": [[int(x) for x in row] for row in c.tolist()],
            "determinant": cm.determinant(c),
            "rank": snf.rank,
            "snf_diagonal": list(snf.diagonal),
        }
    if retract:
        chain = retraction_chain(ks)
        out["retraction"] = {
            "chain": [{"series": list(step.c), "offset": step.offset} for step in chain.steps],
            "terminal": list(chain.terminal.c),
            "terminal_is_simple": terminal_is_simple(chain),
        }
    return out


def _seq(xs) -> str:
    return "(" + ",".join(map(str, xs)) + ")"


def format_text(report: dict) -> str:
    rq = report["resolution_quiver"]
    lines = [
        f"series            {_seq(report['series'])}  [{report['shape']}, n={report['n']}]",
        f"normalized        {_seq(report['normalized']['series'])}  offset {report['normalized']['offset']}",
        f"selfinjective     {str(report['selfinjective']).lower()}",
        f"quiver successors {_seq(rq['succ'])}",
        f"components        {rq['component_count']}  (weight {rq['weight']})",
    ]
    for cy in rq["cycles"]:
        tag = "black" if cy["black"] else "not black"
        lines.append(f"  cycle {_seq(cy['vertices'])}  size {cy['size']}  weight {cy['weight']}  {tag}")
    d = report["decisions"]
    lines.append(f"finite gldim      {str(d['finite_global_dimension']).lower()}")
    lines.append(f"gorenstein        {str(d['gorenstein']).lower()}")
    if "oracle" in report:
        o = report["oracle"]
        lines.append(f"oracle pd(S_i)    {_seq(o['pd_simple'])}")
        lines.append(f"oracle id(S_i)    {_seq(o['id_simple'])}")
        lines.append(f"oracle gldim      {o['global_dimension']}")
        lines.append(f"oracle gorenstein {str(o['gorenstein']).lower()}")
    if "cartan" in report:
        c = report["cartan"]
        lines.append("cartan matrix")
        lines.extend("  " + " ".join(f"{x:>3}" for x in row) for row in c["matrix"])
        lines.append(f"determinant       {c['determinant']}")
        lines.append(f"rank              {c['rank']}")
        lines.append(f"smith diagonal    {_seq(c['snf_diagonal'])}")
    if "retraction" in report:
        r = report["retraction"]
        lines.append("retraction chain  " + " -> ".join(_seq(s["series"]) for s in r["chain"]))
        lines.append(f"terminal simple   {str(r['terminal_is_simple']).lower()}")
    return "\n".join(lines)


def census_text(report: dict) -> str:
    lines = [
        f"algebras checked  {report['algebras_checked']}  "
        f"(n_max={report['config']['n_max']}, c_max={report['config']['c_max']})",
    ]
    for name, t in report["checks"].items():
        status = "FAIL" if t["failures"] else "ok"
        line = (f"  {status:<4} {name:<32} pass {t['passes']:>6}  fail {t['failures']:>4}  "
                f"skip {t['skips']:>4}  n/a {t['inapplicable']:>5}")
        lines.append(line)
        ce: Optional[dict] = t["first_counterexample"]
        if ce:
            lines.append(f"       first counterexample ({ce['series']}): {ce['detail']}")
    lines.append(f"failures {report['failures']}  skips {report['skips']}")
    if "elapsed_seconds" in report:
        lines.append(f"elapsed {report['elapsed_seconds']}s")
    return "\n".join(lines)
