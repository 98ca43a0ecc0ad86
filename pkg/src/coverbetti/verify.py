"""Checkers for the splitting results on cover ideals, one per claim.

Every checker validates its hypotheses first and raises
:class:`PreconditionError` on inputs outside them, so a passing report is
never vacuous. Intermediate ideals are derived along every available
route and compared before any Betti number is computed.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Any, Iterable

from .betti import betti_table, squarefree_multidegrees
from .cover_ideals import (
    BipartiteContext,
    _j_lower,
    associated_ideal,
    cover_ideal,
    j_lower,
    j_upper,
    j_upper_tilde,
    restricted_cover_ideal,
)
from .enumeration import connected_graphs
from .errors import PreconditionError
from .graph import SimpleGraph, set_to_mask
from .linalg import QQ, FieldSpec
from .monomial import (
    Monomial,
    MonomialIdeal,
    degree_of_set,
    dominates,
    intersect,
    scale,
    sum_all,
)
from .splitting import (
    IdealPartition,
    SplitWitness,
    is_betti_splitting,
    multigraded_split_violations,
    x_partition,
)


@dataclass
class Violation:
    position: str
    expected: Any
    actual: Any


@dataclass
class VerificationReport:
    claim: str
    instance: dict
    violations: list[Violation] = field(default_factory=list)
    witnesses: list[dict] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def fail(self, position: str, expected: Any, actual: Any) -> None:
        self.violations.append(Violation(position, expected, actual))

    def check_ideal(self, label: str, expected: MonomialIdeal, actual: MonomialIdeal) -> None:
        if expected != actual:
            self.fail(label, str(expected), str(actual))

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "claim": self.claim,
            "instance": self.instance,
            "pass": self.passed,
            "violations": [asdict(v) for v in self.violations],
            "witnesses": self.witnesses,
        }
        if timing:
            out["seconds"] = round(self.seconds, 6)
        return out

    def render(self, timing: bool = False) -> str:
        lines = [f"{self.claim}: {'PASS' if self.passed else 'FAIL'}  {_instance_text(self.instance)}"]
        for w in self.witnesses:
            if "graph" in w:
                g = w["graph"]
                edges = ", ".join(f"{u}-{v}" for u, v in g["edges"])
                ws = w["witness"]
                lines.append(f"  found G(n={g['n']}; {edges}) at vertex {w['vertex']}")
                lines.append(f"  SPLIT FAIL at (i={ws['i']}, j={ws['j']}): lhs={ws['lhs']}, rhs={ws['rhs']}")
                lines.append("  graded values " + ", ".join(
                    f"{k}={v}" for k, v in w["graded_at_witness"].items()))
                continue
            lines.append("  witness " + ", ".join(f"{k}={v}" for k, v in w.items()))
        for v in self.violations:
            lines.append(f"  violation at {v.position}: expected {v.expected}, got {v.actual}")
        if timing:
            lines.append(f"  time {self.seconds:.3f}s")
        return "\n".join(lines)


def _instance_text(instance: dict) -> str:
    return " ".join(f"{k}={v}" for k, v in instance.items())


def _instance(graph: SimpleGraph, field_: FieldSpec, **extra) -> dict:
    out = {"n": graph.n, "edges": [list(e) for e in graph.sorted_edges()], "field": str(field_)}
    for k, v in extra.items():
        out[k] = sorted(v) if isinstance(v, (set, frozenset)) else v
    return out


class _Timer:
    def __init__(self, report: VerificationReport):
        self.report = report

    def __enter__(self):
        self.start = time.perf_counter()
        return self.report

    def __exit__(self, *exc):
        self.report.seconds = time.perf_counter() - self.start
        return False


def _x(graph: SimpleGraph, vertices: Iterable[int]) -> Monomial:
    return Monomial.from_set(graph.n, vertices)


def meet_sum(graph: SimpleGraph, vertices: Iterable[int]) -> MonomialIdeal:
    """Sum over u in U of x^(U + N(u)) * J(G minus (U + N(u)))."""
    u_set = frozenset(vertices)
    parts = []
    for u in sorted(u_set):
        big = u_set | graph.neighbourhood(u)
        parts.append(scale(_x(graph, big), cover_ideal(graph.delete_vertices(big))))
    return sum_all(graph.n, parts)


def _split_report(report: VerificationReport, part: IdealPartition, field_: FieldSpec,
                  label: str = "") -> None:
    check = is_betti_splitting(part, field_)
    for w in check.violations:
        report.fail(f"{label}graded (i={w.i}, j={w.j})", w.lhs, w.rhs)


def _multigraded_report(report: VerificationReport, part: IdealPartition,
                        field_: FieldSpec) -> None:
    for i, a, lhs, rhs in multigraded_split_violations(part, field_):
        report.fail(f"multigraded (i={i}, a={list(a)})", lhs, rhs)


# ------------------------------------------------------------ ideal identities


def verify_cover_facts(graph: SimpleGraph) -> VerificationReport:
    """Two facts about covers and a vertex v:

    a cover containing v and all of N(v) stays a cover without v; and a
    minimal cover omits v exactly when it contains N(v).
    """
    report = VerificationReport("cover-facts", _instance(graph, QQ))
    with _Timer(report):
        covers = graph.cover_masks()
        cover_set = set(covers)
        minimal = set(graph.minimal_cover_masks())
        adj = graph.adjacency_masks()
        for v in graph.vertices:
            bit, nbrs = 1 << (v - 1), adj[v]
            for w in covers:
                if w & bit and w & nbrs == nbrs and (w ^ bit) not in cover_set:
                    report.fail(f"drop v={v} from cover {w:b}", "cover", "not a cover")
            for w in minimal:
                if (not w & bit) != (w & nbrs == nbrs):
                    report.fail(f"minimal cover {w:b}, v={v}", "omits v iff contains N(v)", "mismatch")
    return report


def verify_split_ideals(graph: SimpleGraph, v: int) -> VerificationReport:
    """The two halves of the x_v-partition of J(G), along every route.

    With N = N(v): the upper half equals J_N(G) and x_v * J_N(G minus v);
    the lower half equals J^N(G) and x^N * J(G minus N).
    """
    nbrs = graph.neighbourhood(v)
    report = VerificationReport("split-ideals", _instance(graph, QQ, vertex=v))
    with _Timer(report):
        part = x_partition(cover_ideal(graph), v)
        n_mask = set_to_mask(nbrs)
        report.check_ideal("upper = J^v", j_upper(graph, {v}), part.left)
        report.check_ideal("lower = J_v", j_lower(graph, {v}), part.right)
        report.check_ideal("upper = J_N(G)", part.left, _j_lower(graph, n_mask))
        report.check_ideal(
            "upper = x_v * J_N(G - v)",
            part.left,
            scale(_x(graph, {v}), _j_lower(graph.delete_vertices({v}), n_mask)),
        )
        report.check_ideal("lower = J^N(G)", part.right, j_upper(graph, nbrs))
        report.check_ideal("lower = x^N * J(G - N)", part.right, j_upper_tilde(graph, nbrs))
    return report


def verify_restricted_meet(graph: SimpleGraph, vertices: Iterable[int]) -> VerificationReport:
    """For an independent set U: covers avoiding u meet covers avoiding w in
    exactly the covers avoiding both, and J_U(G) is the sum over u of the
    covers avoiding u."""
    u_set = frozenset(vertices)
    if not graph.is_independent(u_set):
        raise PreconditionError(f"{sorted(u_set)} is not an independent set")
    report = VerificationReport("restricted-meet", _instance(graph, QQ, set=u_set))
    with _Timer(report):
        ordered = sorted(u_set)
        for k, u in enumerate(ordered):
            for w in ordered[k + 1:]:
                report.check_ideal(
                    f"I_{{{u}}} cap I_{{{w}}}",
                    restricted_cover_ideal(graph, {u, w}),
                    intersect(restricted_cover_ideal(graph, {u}), restricted_cover_ideal(graph, {w})),
                )
        if u_set:
            report.check_ideal(
                "J_U = sum of I_{u}",
                j_lower(graph, u_set),
                sum_all(graph.n, (restricted_cover_ideal(graph, {u}) for u in ordered)),
            )
    return report


def verify_meet_formula(graph: SimpleGraph, vertices: Iterable[int]) -> VerificationReport:
    """(x^U) cap J_U(G), computed four ways, must agree."""
    u_set = frozenset(vertices)
    if not u_set:
        raise PreconditionError("meet formula needs a non-empty vertex set")
    report = VerificationReport("meet-formula", _instance(graph, QQ, set=u_set))
    with _Timer(report):
        lower = j_lower(graph, u_set)
        principal = MonomialIdeal.principal(_x(graph, u_set))
        first = intersect(principal, lower)
        report.check_ideal("tilde J^U cap J_U", first, intersect(j_upper_tilde(graph, u_set), lower))
        report.check_ideal("sum over u of x^(U+N(u)) J(G-(U+N(u)))", first, meet_sum(graph, u_set))
        u_mask = set_to_mask(u_set)
        alt = MonomialIdeal(
            graph.n,
            tuple(
                Monomial.from_mask(graph.n, w | u_mask)
                for w in graph.cover_masks()
                if w & u_mask != u_mask
            ),
        )
        report.check_ideal("(x^(U+W) : W cover not containing U)", first, alt)
    return report


def verify_bipartite_meet(ctx: BipartiteContext) -> VerificationReport:
    """For a side U without isolated vertices: J^U(G) = (x^U), and its
    meet with J_U(G) is x^U times the associated ideal."""
    graph, u_set = ctx.graph, ctx.left
    report = VerificationReport("bipartite-meet", _instance(graph, QQ, side=u_set))
    with _Timer(report):
        m_ideal = associated_ideal(ctx)
        principal = MonomialIdeal.principal(_x(graph, u_set))
        report.check_ideal("J^U = (x^U)", principal, j_upper(graph, u_set))
        report.check_ideal(
            "J^U cap J_U = x^U * M",
            scale(_x(graph, u_set), m_ideal),
            intersect(j_upper(graph, u_set), j_lower(graph, u_set)),
        )
    return report


# ------------------------------------------------------------ Betti statements


def verify_lower_vanishing(
    graph: SimpleGraph, vertices: Iterable[int], field_: FieldSpec = QQ
) -> VerificationReport:
    """beta_{i,a}(J_U(G)) = 0 whenever a >= e_U, for an independent set U."""
    u_set = frozenset(vertices)
    if not graph.is_independent(u_set):
        raise PreconditionError(f"{sorted(u_set)} is not an independent set")
    report = VerificationReport("lower-vanishing", _instance(graph, field_, set=u_set))
    with _Timer(report):
        if not u_set:
            return report
        e_u = degree_of_set(graph.n, u_set)
        table = betti_table(j_lower(graph, u_set), field_)
        for (i, a), value in table.entries.items():
            if dominates(a, e_u):
                report.fail(f"(i={i}, a={list(a)})", 0, value)
    return report


def verify_lower_agreement(
    graph: SimpleGraph, vertices: Iterable[int], field_: FieldSpec = QQ
) -> VerificationReport:
    """beta_{i,a}(J(G)) = beta_{i,a}(J_U(G)) whenever a does not dominate e_U."""
    u_set = frozenset(vertices)
    if not u_set:
        raise PreconditionError("lower agreement needs a non-empty vertex set")
    report = VerificationReport("lower-agreement", _instance(graph, field_, set=u_set))
    with _Timer(report):
        e_u = degree_of_set(graph.n, u_set)
        whole = betti_table(cover_ideal(graph), field_)
        lower = betti_table(j_lower(graph, u_set), field_)
        for key in sorted(set(whole.entries) | set(lower.entries)):
            i, a = key
            if dominates(a, e_u):
                continue
            if whole.get(i, a) != lower.get(i, a):
                report.fail(f"(i={i}, a={list(a)})", whole.get(i, a), lower.get(i, a))
    return report


def verify_neighbour_splitting(
    graph: SimpleGraph, v: int, field_: FieldSpec = QQ
) -> VerificationReport:
    """x_v-partition of J(G) splits when N(v) is independent, with the
    three-case multidegree formula for beta_{i,a}(J(G)), i >= 1."""
    nbrs = graph.neighbourhood(v)
    if not graph.is_independent(nbrs):
        raise PreconditionError(f"N({v}) = {sorted(nbrs)} is not an independent set")
    report = VerificationReport("neighbour-splitting", _instance(graph, field_, vertex=v))
    with _Timer(report):
        n = graph.n
        whole = cover_ideal(graph)
        part = x_partition(whole, v)
        ideals = verify_split_ideals(graph, v)
        report.violations.extend(ideals.violations)

        meet = part.meet()
        meet_route = meet_sum(graph, nbrs)
        report.check_ideal("meet = sum over u in N", meet_route, meet)
        if nbrs:
            report.check_ideal(
                "meet = (x^N) cap J_N(G)",
                meet_route,
                intersect(MonomialIdeal.principal(_x(graph, nbrs)), j_lower(graph, nbrs)),
            )
        if not report.passed:
            return report

        _split_report(report, part, field_)
        _multigraded_report(report, part, field_)

        upper_route = scale(_x(graph, {v}), cover_ideal(graph.delete_vertices({v})))
        lower_route = j_upper_tilde(graph, nbrs)
        tables = {
            1: betti_table(meet_route, field_),
            2: betti_table(upper_route, field_),
            3: betti_table(lower_route, field_),
        }
        t_whole = betti_table(whole, field_)
        e_v = degree_of_set(n, {v})
        e_vn = degree_of_set(n, nbrs | {v})
        best: dict[int, tuple] = {}
        for a in squarefree_multidegrees(n):
            if dominates(a, e_vn):
                case, shift = 1, 1
            elif dominates(a, e_v):
                case, shift = 2, 0
            else:
                case, shift = 3, 0
            for i in range(1, n + 2):
                lhs = t_whole.get(i, a)
                rhs = tables[case].get(i - shift, a)
                if lhs != rhs:
                    report.fail(f"case {case} (i={i}, a={list(a)})", rhs, lhs)
                elif lhs:
                    # keep the highest nonzero entry per case as its witness
                    key = (i, sum(a), a)
                    if case not in best or key > best[case][0]:
                        best[case] = (key, lhs)
        for case in sorted(best):
            (i, _, a), value = best[case]
            report.witnesses.append({"case": case, "i": i, "a": list(a), "value": value})
    return report


def verify_bipartite_sweep(graph: SimpleGraph, field_: FieldSpec = QQ) -> VerificationReport:
    """Every x_v-partition of the cover ideal of a bipartite graph splits."""
    if not graph.is_bipartite():
        raise PreconditionError("graph is not bipartite")
    report = VerificationReport("bipartite-splitting", _instance(graph, field_))
    with _Timer(report):
        whole = cover_ideal(graph)
        for v in graph.vertices:
            _split_report(report, x_partition(whole, v), field_, label=f"v={v} ")
    return report


def transfer_pairs(ctx: BipartiteContext, field_: FieldSpec = QQ):
    """Yield (i, a, beta_{i, a + e_U}(J(G)), beta_{i-1, a}(M)) for every i >= 1
    and every squarefree a supported on the right side."""
    graph = ctx.graph
    m_ideal = associated_ideal(ctx)
    t_whole = betti_table(cover_ideal(graph), field_)
    t_m = betti_table(m_ideal, field_)
    e_u = degree_of_set(graph.n, ctx.left)
    right = sorted(ctx.right)
    for k in range(1 << len(right)):
        chosen = [w for idx, w in enumerate(right) if k >> idx & 1]
        a = degree_of_set(graph.n, chosen)
        full = tuple(x + y for x, y in zip(a, e_u))
        for i in range(1, graph.n + 2):
            yield i, a, t_whole.get(i, full), t_m.get(i - 1, a)


def verify_bipartite_transfer(ctx: BipartiteContext, field_: FieldSpec = QQ) -> VerificationReport:
    """((x^U), J_U(G)) splits J(G) for a side U with no isolated vertex, and
    beta_{i,a}(J(G)) is beta_{i,a}(J_U(G)) off e_U, beta_{i-1,a}(x^U M) above it."""
    graph, u_set = ctx.graph, ctx.left
    if not u_set:
        raise PreconditionError("the chosen side is empty")
    isolated = [u for u in sorted(u_set) if graph.is_isolated(u)]
    if isolated:
        raise PreconditionError(f"isolated vertices on the chosen side: {isolated}")
    report = VerificationReport("bipartite-transfer", _instance(graph, field_, side=u_set))
    with _Timer(report):
        n = graph.n
        x_u = _x(graph, u_set)
        principal = MonomialIdeal.principal(x_u)
        lower = j_lower(graph, u_set)
        m_ideal = associated_ideal(ctx)
        shifted_m = scale(x_u, m_ideal)
        report.check_ideal("J^U = (x^U)", principal, j_upper(graph, u_set))
        report.check_ideal("(x^U) cap J_U = x^U M", shifted_m, intersect(principal, lower))
        report.check_ideal("x^U M = sum over u in U", shifted_m, meet_sum(graph, u_set))
        report.check_ideal("tilde J^U cap J_U = x^U M", shifted_m,
                           intersect(j_upper_tilde(graph, u_set), lower))
        if not report.passed:
            return report
        part = IdealPartition(cover_ideal(graph), principal, lower)
        _split_report(report, part, field_)
        _multigraded_report(report, part, field_)

        e_u = degree_of_set(n, u_set)
        t_whole = betti_table(part.whole, field_)
        t_lower = betti_table(lower, field_)
        t_meet = betti_table(shifted_m, field_)
        for a in squarefree_multidegrees(n):
            above = dominates(a, e_u)
            for i in range(1, n + 2):
                lhs = t_whole.get(i, a)
                rhs = t_meet.get(i - 1, a) if above else t_lower.get(i, a)
                if lhs != rhs:
                    report.fail(f"{'above' if above else 'off'} e_U (i={i}, a={list(a)})", rhs, lhs)
        for i, a, lhs, rhs in transfer_pairs(ctx, field_):
            if lhs != rhs:
                report.fail(f"transfer (i={i}, a={list(a)})", rhs, lhs)
            elif lhs and len(report.witnesses) < 3:
                report.witnesses.append({"i": i, "a_right": list(a), "value": lhs})
    return report


def verify_leaf_recursion(graph: SimpleGraph, v: int, field_: FieldSpec = QQ) -> VerificationReport:
    """Graded recursion for a leaf v with neighbour u, G' = G - {u, v},
    G'' = G - N(u):

    beta_{i,j}(J(G)) = beta_{i,j-1}(J(G')) + beta_{i,j-s}(J(G''))
                       + beta_{i-1,j-s-1}(J(G'')),   s = |N(u)|.
    """
    nbrs = graph.neighbourhood(v)
    if len(nbrs) != 1:
        raise PreconditionError(f"vertex {v} is not a leaf (degree {len(nbrs)})")
    (u,) = nbrs
    report = VerificationReport("leaf-recursion", _instance(graph, field_, vertex=v))
    with _Timer(report):
        nu = graph.neighbourhood(u)
        s = len(nu)
        g1 = graph.delete_vertices({u, v})
        g2 = graph.delete_vertices(nu)
        j1, j2 = cover_ideal(g1), cover_ideal(g2)
        part = x_partition(cover_ideal(graph), v)
        report.check_ideal("J^v = x_v J_u(G - v)", part.left,
                           scale(_x(graph, {v}), j_lower(graph.delete_vertices({v}), {u})))
        report.check_ideal("J^v = x^N(u) J(G'')", part.left, scale(_x(graph, nu), j2))
        report.check_ideal("J_v = x_u J(G')", part.right, scale(_x(graph, {u}), j1))
        report.check_ideal("meet = x_u x^N(u) J(G'')", part.meet(),
                           scale(_x(graph, nu | {u}), j2))
        t = betti_table(part.whole, field_)
        t1, t2 = betti_table(j1, field_), betti_table(j2, field_)
        for i in range(1, graph.n + 2):
            for j in range(0, graph.n + 1):
                lhs = t.graded(i, j)
                rhs = t1.graded(i, j - 1) + t2.graded(i, j - s) + t2.graded(i - 1, j - s - 1)
                if lhs != rhs:
                    report.fail(f"(i={i}, j={j})", rhs, lhs)
    return report


# ------------------------------------------------------------ counterexample search


@dataclass(frozen=True)
class SearchHit:
    graph: SimpleGraph
    vertex: int
    witness: SplitWitness
    graded: dict  # the four graded values at the witness
    examined: int

    def to_dict(self) -> dict:
        return {
            "graph": self.graph.to_json(),
            "vertex": self.vertex,
            "neighbourhood": sorted(self.graph.neighbourhood(self.vertex)),
            "witness": {"i": self.witness.i, "j": self.witness.j,
                        "lhs": self.witness.lhs, "rhs": self.witness.rhs},
            "graded_at_witness": self.graded,
            "examined_pairs": self.examined,
        }


def _graded_at(part: IdealPartition, field_: FieldSpec, i: int, j: int) -> dict:
    return {
        "J": betti_table(part.whole, field_).graded(i, j),
        "upper": betti_table(part.left, field_).graded(i, j),
        "lower": betti_table(part.right, field_).graded(i, j),
        "meet_shifted": betti_table(part.meet(), field_).graded(i - 1, j),
    }


def _matches(check, signature, part, field_) -> SplitWitness | None:
    if signature is None:
        return check.witness
    i, j = signature
    graded = _graded_at(part, field_, i, j)
    if graded["upper"] > 0 and graded["J"] == 0:
        return next(w for w in check.violations if (w.i, w.j) == (i, j))
    return None


def _scan_graph(args) -> list[tuple[int, SplitWitness, dict]]:
    graph, field_, signature = args
    whole = cover_ideal(graph)
    for v in graph.vertices:
        if graph.is_independent(graph.neighbourhood(v)):
            continue
        part = x_partition(whole, v)
        check = is_betti_splitting(part, field_)
        if check:
            continue
        w = _matches(check, signature, part, field_)
        if w is not None:
            return [(v, w, _graded_at(part, field_, w.i, w.j))]
    return []


def _candidate_count(graph: SimpleGraph) -> int:
    return sum(not graph.is_independent(graph.neighbourhood(v)) for v in graph.vertices)


def counterexample_search(
    max_n: int,
    field_: FieldSpec = QQ,
    workers: int = 1,
    signature: tuple[int, int] | None = None,
) -> SearchHit | None:
    """First (G, v) with G connected, N(v) not independent, and a non-splitting
    x_v-partition of J(G).

    With ``signature=(i, j)`` only failures where beta_{i,j} of the upper
    part is positive while beta_{i,j}(J(G)) vanishes are accepted.

    Graphs are scanned by vertex count, then edge count, then canonical key,
    in their canonical labelling; vertices in increasing order. The result
    does not depend on ``workers``.
    """
    examined = 0
    for n in range(1, max_n + 1):
        graphs = list(connected_graphs(n, min_n=n))
        jobs = [(g, field_, signature) for g in graphs]
        if workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(_scan_graph, jobs, chunksize=8))
        else:
            results = map(_scan_graph, jobs)
        for g, hits in zip(graphs, results):
            if hits:
                v, witness, graded = hits[0]
                examined += sum(1 for u in g.vertices if u < v and
                                not g.is_independent(g.neighbourhood(u))) + 1
                return SearchHit(g, v, witness, graded, examined)
            examined += _candidate_count(g)
    return None


def verify_search(
    max_n: int,
    field_: FieldSpec = QQ,
    workers: int = 1,
    signature: tuple[int, int] | None = None,
) -> VerificationReport:
    instance = {"max_n": max_n, "field": str(field_)}
    if signature is not None:
        instance["signature"] = list(signature)
    report = VerificationReport("search", instance)
    with _Timer(report):
        hit = counterexample_search(max_n, field_, workers, signature)
        if hit is None:
            report.fail("search", "a non-splitting x_v-partition", "none found")
        else:
            report.witnesses.append(hit.to_dict())
    return report
