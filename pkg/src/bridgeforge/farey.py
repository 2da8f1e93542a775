"""Farey tessellation reflections and the epimorphism orbit search.

Two extended rationals span a Farey edge when |q1 p2 - q2 p1| = 1.  The
reflection in that edge is an integral Mobius involution of determinant
-1 fixing both endpoints.  The group generated by the reflections in all
edges with an endpoint at infinity or at a slope r classifies, through
its orbit of {r, infinity}, which two-bridge knot groups surject onto
the group of K(r).  The generating set is infinite, so the search is an
explicit semi-decision: bounded generators, bounded depth, answers
"yes" or "unknown" and never a false "no".
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .slope import INFINITY, Frac, GenusOneKnot, r_prime


def is_farey_edge(s: Frac, t: Frac) -> bool:
    """Farey adjacency: |q_s p_t - q_t p_s| = 1 (infinity is 1/0)."""
    if s == t:
        raise ValueError("edge endpoints must differ")
    return abs(s.num * t.den - t.num * s.den) == 1


@dataclass(frozen=True)
class Reflection:
    """Reflection in a Farey edge, as an integer matrix of determinant -1
    acting by x -> (a x + b) / (c x + d)."""

    a: int
    b: int
    c: int
    d: int
    edge: tuple[Frac, Frac]

    def apply(self, x: Frac) -> Frac:
        return Frac(self.a * x.num + self.b * x.den, self.c * x.num + self.d * x.den)

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c


def reflection_in_edge(s: Frac, t: Frac) -> Reflection:
    """The reflection fixing both endpoints of the Farey edge (s, t)."""
    if not is_farey_edge(s, t):
        raise ValueError(f"({s}, {t}) is not a Farey edge")
    q1, p1 = s.num, s.den
    q2, p2 = t.num, t.den
    tr = q1 * p2 + q2 * p1
    refl = Reflection(tr, -2 * q1 * q2, 2 * p1 * p2, -tr, (s, t))
    assert refl.det == -1
    return refl


def _farey_neighbor_ints(r: Frac) -> tuple[int, int]:
    """Some (q0, p0) with q*p0 - p*q0 = 1, as raw integers."""
    q, p = r.num, r.den
    # extended euclid on (q, p)
    old_r, cur_r = q, p
    old_s, cur_s = 1, 0
    old_t, cur_t = 0, 1
    while cur_r:
        quo = old_r // cur_r
        old_r, cur_r = cur_r, old_r - quo * cur_r
        old_s, cur_s = cur_s, old_s - quo * cur_s
        old_t, cur_t = cur_t, old_t - quo * cur_t
    # old_r = gcd = +-1 = q*old_s + p*old_t
    if old_r < 0:
        old_s, old_t = -old_s, -old_t
    return -old_t, old_s


def reflection_generators(r: Frac, neighbor_bound: int) -> list[Reflection]:
    """Bounded generating slice of the edge-reflection group of r.

    Edges (infinity, k) for |k| <= neighbor_bound, and edges (r, s_j)
    over the Farey neighbors s_j = (q0 + j q)/(p0 + j p) of r for
    |j| <= neighbor_bound.
    """
    if r.is_infinity:
        raise ValueError("r must be rational")
    gens = [
        reflection_in_edge(INFINITY, Frac(k, 1))
        for k in range(-neighbor_bound, neighbor_bound + 1)
    ]
    q0, p0 = _farey_neighbor_ints(r)
    seen = {g.edge for g in gens}
    for j in range(-neighbor_bound, neighbor_bound + 1):
        s = Frac(q0 + j * r.num, p0 + j * r.den)
        edge = (r, s)
        if edge not in seen:
            seen.add(edge)
            gens.append(reflection_in_edge(r, s))
    return gens


@dataclass
class OrbitSearch:
    found: bool
    target: Frac
    depth_used: int
    visited: int
    cap_hits: int
    witness: list[dict] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        return "yes" if self.found else "unknown"


def orbit_contains(
    r: Frac,
    target: Frac,
    depth: int,
    neighbor_bound: int,
    den_cap: int = 10**6,
) -> OrbitSearch:
    """Bounded breadth-first search of the orbit of {r, infinity}.

    "found" means the target was reached within the bounds; a negative is
    always "unknown" since the true generating set is infinite.  Images
    with denominator above den_cap are skipped and counted.
    """
    gens = reflection_generators(r, neighbor_bound)
    parent: dict[Frac, tuple[Frac, int] | None] = {r: None, INFINITY: None}
    frontier = [r, INFINITY]
    cap_hits = 0
    depth_used = 0

    def build_result(found, depth_used):
        witness = []
        if found and parent.get(target) is not None:
            node = target
            while parent[node] is not None:
                prev, gi = parent[node]
                witness.append(
                    {
                        "edge": [str(e) for e in gens[gi].edge],
                        "from": str(prev),
                        "to": str(node),
                    }
                )
                node = prev
            witness.reverse()
        return OrbitSearch(found, target, depth_used, len(parent), cap_hits, witness)

    if target in parent:
        return build_result(True, 0)
    for level in range(1, depth + 1):
        nxt = []
        for node in frontier:
            for gi, g in enumerate(gens):
                image = g.apply(node)
                if image.den > den_cap:
                    cap_hits += 1
                    continue
                if image in parent:
                    continue
                parent[image] = (node, gi)
                if image == target:
                    return build_result(True, level)
                nxt.append(image)
        frontier = nxt
        depth_used = level
        if not frontier:
            break
    return build_result(False, depth_used)


@dataclass
class EpiResult:
    source: Frac
    target: Frac
    verdict: str
    route: str | None
    searches: list[OrbitSearch]
    witness: list[dict]


def epimorphism_exists(
    r_tilde: Frac,
    r: Frac,
    depth: int = 5,
    neighbor_bound: int = 6,
    den_cap: int = 10**6,
) -> EpiResult:
    """Semi-decision for an epimorphism onto the group of a double-twist knot.

    The target slope r must be a hyperbolic genus-one slope 2n/(4mn +- 1)
    and the source a two-bridge knot slope (odd denominator >= 3).
    "yes" when r_tilde or r_tilde + 1 (taken mod 1) lies in the bounded
    orbit of {r, infinity} or of {r', infinity} with q q' = 1 mod p;
    otherwise "unknown".
    """
    knot = GenusOneKnot.from_fraction(r)
    if not knot.is_hyperbolic:
        raise ValueError(
            "slope 2/3 is the torus knot; the classification needs a "
            "hyperbolic target"
        )
    if r_tilde.den < 3 or r_tilde.den % 2 == 0:
        raise ValueError(
            f"source slope {r_tilde} is not a two-bridge knot (need odd "
            "denominator >= 3)"
        )
    rt = Frac(r_tilde.num % r_tilde.den, r_tilde.den)
    searches = []
    for base, base_name in ((r, "r"), (r_prime(r), "r'")):
        for t, t_name in ((rt, "rt"), (rt + 1, "rt+1")):
            res = orbit_contains(base, t, depth, neighbor_bound, den_cap)
            searches.append(res)
            if res.found:
                return EpiResult(
                    r_tilde, r, "yes", f"{t_name} in orbit of {base_name}",
                    searches, res.witness,
                )
    return EpiResult(r_tilde, r, "unknown", None, searches, [])
