"""Groups with a distinguished generating subset, and their two morphism flavors.

A GenPair is a permutation group together with a subset omega that generates
it.  Two kinds of structure-preserving maps between pairs show up:

* SurjMorphism: a group homomorphism carrying omega onto omega.
* StarMorphism: a backwards-partial map.  It consists of a subgroup of the
  target generated by a conjugation-stable subset of the target's omega,
  plus a projection homomorphism from that subgroup onto the source whose
  restriction to the subset is a bijection onto the source omega.

Star morphisms compose back to front: the new subset is the part of the
outer morphism's subset that projects into the inner one's, and the new
projection is the chain of the two.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

from .perm import (
    DEFAULT_CAP,
    CapExceeded,
    Perm,
    PermGroup,
    close_group,
    compose,
    centralizer_of_subset_is_trivial,
    group_from_lines,
    group_to_lines,
    identity,
    inverse,
    is_conjugation_stable,
)


@dataclass(eq=False)
class GenPair:
    """A permutation group with a distinguished generating subset omega.

    omega is kept in canonical (lexicographic) order.  conj_stable records
    whether omega is closed under conjugation by the whole group; faithful
    records whether only the identity centralizes all of omega.
    """

    group: PermGroup
    omega: tuple[Perm, ...]
    conj_stable: bool
    faithful: bool

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GenPair):
            return NotImplemented
        return self.group == other.group and set(self.omega) == set(other.omega)

    @property
    def degree(self) -> int:
        return self.group.degree

    def omega_index(self, p: Perm) -> int:
        return self.omega.index(p)

    def describe(self) -> str:
        return "group order %d, omega size %d" % (len(self.group), len(self.omega))


def make_genpair(group: PermGroup, omega: Iterable[Perm]) -> GenPair:
    """Validate and build a GenPair; omega must generate the whole group."""
    om = sorted(set(tuple(w) for w in omega))
    if not om:
        raise ValueError("omega must be nonempty")
    for w in om:
        if w not in group.elements:
            raise ValueError("omega element %s is not in the group" % (w,))
    if set(om) != group.elements:
        if close_group(om, cap=len(group) + 1).elements != group.elements:
            raise ValueError("omega does not generate the group")
    return GenPair(
        group,
        tuple(om),
        conj_stable=is_conjugation_stable(group, om),
        faithful=centralizer_of_subset_is_trivial(group, om),
    )


@dataclass(eq=False)
class SurjMorphism:
    """A group homomorphism between pairs whose restriction maps omega onto omega."""

    source: GenPair
    target: GenPair
    mapping: dict[Perm, Perm]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SurjMorphism):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.mapping == other.mapping
        )

    def key(self) -> frozenset:
        """Hashable canonical form of the mapping graph."""
        return frozenset(self.mapping.items())

    def is_injective(self) -> bool:
        return len(set(self.mapping.values())) == len(self.mapping)


def identity_surj(pair: GenPair) -> SurjMorphism:
    return SurjMorphism(pair, pair, {g: g for g in pair.group.elements})


def compose_surj(m2: SurjMorphism, m1: SurjMorphism) -> SurjMorphism:
    if m1.target != m2.source:
        raise ValueError("morphisms are not composable")
    return SurjMorphism(
        m1.source, m2.target, {g: m2.mapping[h] for g, h in m1.mapping.items()}
    )


def check_surj_morphism(m: SurjMorphism, bijective: bool = False) -> list[str]:
    """Report of violated clauses; empty means the morphism is valid.

    With bijective=True the omega restriction must be a bijection, not just
    a surjection.
    """
    report: list[str] = []
    src = m.source.group
    tgt = m.target.group
    if set(m.mapping) != src.elements:
        report.append("totality: mapping domain differs from the source group")
        return report
    if not set(m.mapping.values()) <= tgt.elements:
        report.append("containment: some image lies outside the target group")
        return report
    for g in src.elements:
        fg = m.mapping[g]
        for h in src.elements:
            if m.mapping[compose(g, h)] != compose(fg, m.mapping[h]):
                report.append(
                    "homomorphism: f(g h) != f(g) f(h) for g=%s h=%s" % (g, h)
                )
                return report
    omega_images = [m.mapping[w] for w in m.source.omega]
    if not set(omega_images) <= set(m.target.omega):
        report.append("omega containment: image of omega leaves the target omega")
    elif set(omega_images) != set(m.target.omega):
        report.append("omega surjectivity: restriction does not cover target omega")
    elif bijective and len(set(omega_images)) != len(m.source.omega):
        report.append("omega bijectivity: restriction is not injective")
    return report


@dataclass(eq=False)
class StarMorphism:
    """A backwards-partial morphism between pairs.

    domain_group is a subgroup of the target group, generated by
    domain_omega, a conjugation-stable subset of the target omega.  proj is
    a homomorphism domain_group -> source group restricting to a bijection
    domain_omega -> source omega.
    """

    source: GenPair
    target: GenPair
    domain_group: PermGroup
    domain_omega: tuple[Perm, ...]
    proj: dict[Perm, Perm]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StarMorphism):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.domain_group.elements == other.domain_group.elements
            and set(self.domain_omega) == set(other.domain_omega)
            and self.proj == other.proj
        )

    def key(self) -> tuple:
        """Hashable canonical form: (domain elements, subset, proj graph)."""
        return (
            self.domain_group.elements,
            frozenset(self.domain_omega),
            frozenset(self.proj.items()),
        )

    def proj_is_injective(self) -> bool:
        return len(set(self.proj.values())) == len(self.proj)


def identity_star(pair: GenPair) -> StarMorphism:
    return StarMorphism(
        pair, pair, pair.group, pair.omega, {g: g for g in pair.group.elements}
    )


def check_star_morphism(m: StarMorphism) -> list[str]:
    """Report of violated clauses, tagged by which requirement failed."""
    report: list[str] = []
    tgt = m.target
    src = m.source
    if m.domain_group.degree != tgt.degree or not (
        m.domain_group.elements <= tgt.group.elements
    ):
        report.append("subgroup: domain group is not a subgroup of the target group")
        return report
    gamma = set(m.domain_omega)
    if not gamma:
        report.append("gamma: empty subset")
        return report
    if not gamma <= set(tgt.omega):
        report.append("gamma: subset is not contained in the target omega")
    if not gamma <= m.domain_group.elements:
        report.append("gamma: subset is not contained in the domain group")
        return report
    if close_group(sorted(gamma), cap=len(m.domain_group) + 1).elements != (
        m.domain_group.elements
    ):
        report.append("generation: subset does not generate the domain group")
    for h in m.domain_group.elements:
        hinv = inverse(h)
        for g in gamma:
            if compose(compose(h, g), hinv) not in gamma:
                report.append(
                    "stability: subset is not conjugation-stable in the domain group"
                )
                break
        else:
            continue
        break
    if set(m.proj) != m.domain_group.elements:
        report.append("homomorphism: proj domain differs from the domain group")
        return report
    if not set(m.proj.values()) <= src.group.elements:
        report.append("homomorphism: proj image leaves the source group")
        return report
    for g in m.domain_group.elements:
        fg = m.proj[g]
        for h in m.domain_group.elements:
            if m.proj[compose(g, h)] != compose(fg, m.proj[h]):
                report.append("homomorphism: proj(g h) != proj(g) proj(h)")
                return report
    gamma_images = [m.proj[g] for g in m.domain_omega]
    if not set(gamma_images) <= set(src.omega):
        report.append("bijectivity: proj carries the subset outside the source omega")
    elif len(set(gamma_images)) != len(m.domain_omega) or set(gamma_images) != set(
        src.omega
    ):
        report.append("bijectivity: proj is not a bijection subset -> source omega")
    return report


def compose_star(
    m2: StarMorphism, m1: StarMorphism, cap: int = DEFAULT_CAP
) -> StarMorphism:
    """Composite of m1 then m2 (written back to front, like functions).

    The composite subset is the part of m2's subset projecting into m1's;
    its closure carries the chained projection.  The result is re-checked
    and a failure raises RuntimeError, since it would signal a bug or
    invalid inputs rather than a user error.
    """
    if m1.target != m2.source:
        raise ValueError("morphisms are not composable")
    gamma1 = set(m1.domain_omega)
    new_gamma = tuple(sorted(g for g in m2.domain_omega if m2.proj[g] in gamma1))
    if not new_gamma:
        raise RuntimeError("composite subset is empty; inputs were not valid")
    group = close_group(list(new_gamma), cap=cap)
    proj = {}
    for h in group.elements:
        mid = m2.proj[h]
        if mid not in m1.proj:
            raise RuntimeError(
                "composite projection left the intermediate domain group"
            )
        proj[h] = m1.proj[mid]
    out = StarMorphism(m1.source, m2.target, group, new_gamma, proj)
    bad = check_star_morphism(out)
    if bad:
        raise RuntimeError("composite failed validation: %s" % "; ".join(bad))
    return out


def is_star_isomorphism(m: StarMorphism) -> bool:
    """True when the domain is the whole target pair and proj is invertible.

    That means: domain group = target group, subset = target omega, proj a
    group isomorphism carrying target omega onto source omega.
    """
    if m.domain_group.elements != m.target.group.elements:
        return False
    if set(m.domain_omega) != set(m.target.omega):
        return False
    if len(set(m.proj.values())) != len(m.source.group):
        return False
    return {m.proj[g] for g in m.domain_omega} == set(m.source.omega)


def _propagate(
    pairs: list[tuple[Perm, Perm]], domain_degree: int, image_degree: int
) -> dict[Perm, Perm] | None:
    """Close the assigned generators into a homomorphism, or None on conflict.

    Every product (element, generator) is checked once, which pins the map
    down on the whole generated subgroup: any clash between two derivations
    of the same element surfaces here.
    """
    hom = {identity(domain_degree): identity(image_degree)}
    frontier = [identity(domain_degree)]
    while frontier:
        nxt = []
        for x in frontier:
            fx = hom[x]
            for g, u in pairs:
                y = compose(x, g)
                fy = compose(fx, u)
                cur = hom.get(y)
                if cur is None:
                    hom[y] = fy
                    nxt.append(y)
                elif cur != fy:
                    return None
        frontier = nxt
    return hom


def _extension_search(
    gens: list[Perm],
    candidates: list[Perm],
    domain_degree: int,
    image_degree: int,
    injective: bool,
) -> Iterator[dict[Perm, Perm]]:
    """Yield every homomorphism of <gens> sending each generator into candidates.

    Generators already forced by earlier assignments (they lie in the closure
    of the prefix) are not branched over; their forced image must still land
    in the candidate set.  With injective=True distinct generators must get
    distinct images.  Enumeration order follows the candidate list, so the
    output is deterministic.
    """
    candidate_set = set(candidates)

    def rec(
        i: int,
        pairs: list[tuple[Perm, Perm]],
        hom: dict[Perm, Perm],
        used: frozenset[Perm],
    ) -> Iterator[dict[Perm, Perm]]:
        if i == len(gens):
            yield hom
            return
        g = gens[i]
        forced = hom.get(g)
        if forced is not None:
            if forced not in candidate_set:
                return
            if injective and forced in used:
                return
            yield from rec(i + 1, pairs, hom, used | {forced})
            return
        for u in candidates:
            if injective and u in used:
                continue
            pairs2 = pairs + [(g, u)]
            hom2 = _propagate(pairs2, domain_degree, image_degree)
            if hom2 is None:
                continue
            yield from rec(i + 1, pairs2, hom2, used | {u})

    start = _propagate([], domain_degree, image_degree)
    assert start is not None
    yield from rec(0, [], start, frozenset())


def enumerate_group_homs(src: PermGroup, tgt: PermGroup) -> list[dict[Perm, Perm]]:
    """All group homomorphisms src -> tgt, as explicit mapping dicts."""
    gens = list(dict.fromkeys(src.generators))
    out = []
    for hom in _extension_search(
        gens, tgt.sorted_elements(), src.degree, tgt.degree, injective=False
    ):
        assert set(hom) == src.elements
        out.append(hom)
    return out


def enumerate_surj_morphisms(src: GenPair, tgt: GenPair) -> list[SurjMorphism]:
    """All SurjMorphisms src -> tgt, by assigning images of omega and extending.

    A homomorphism is pinned down by its values on omega since omega
    generates; each consistent assignment inside the target omega is kept
    when the restriction covers all of it.
    """
    target_omega = set(tgt.omega)
    out = []
    for hom in _extension_search(
        list(src.omega), list(tgt.omega), src.degree, tgt.degree, injective=False
    ):
        if {hom[w] for w in src.omega} != target_omega:
            continue
        assert set(hom) == src.group.elements
        out.append(SurjMorphism(src, tgt, hom))
    return out


def enumerate_star_morphisms(
    src: GenPair,
    tgt: GenPair,
    cap: int = DEFAULT_CAP,
    subset_cap: int = 1_000_000,
) -> list[StarMorphism]:
    """All StarMorphisms src -> tgt, in canonical order, duplicate free.

    Candidate subsets of the target omega (of size |source omega|) are grown
    in index order with an incremental conjugation-closure prune, then
    re-verified whole.  For each surviving subset, every bijection onto the
    source omega is extended to a homomorphism of the generated subgroup by
    propagation, rejecting on any conflict.
    """
    k = len(src.omega)
    omega2 = tgt.omega
    m = len(omega2)
    if k > m:
        return []
    if math.comb(m, k) > subset_cap:
        raise CapExceeded(
            "subset search would scan %d subsets (cap %d)" % (math.comb(m, k), subset_cap)
        )
    omega2_pos = {p: i for i, p in enumerate(omega2)}
    results: list[StarMorphism] = []

    def viable(chosen: list[int], newest: int) -> bool:
        # A conjugate that is outside omega, or that would have needed an
        # index we already passed, can never be added later.
        members = [omega2[i] for i in chosen]
        new = omega2[newest]
        new_inv = inverse(new)
        for old in members:
            for x, xi, y in (
                (new, new_inv, old),
                (old, inverse(old), new),
                (new, new_inv, new),
            ):
                z = compose(compose(x, y), xi)
                pos = omega2_pos.get(z)
                if pos is None:
                    return False
                if pos not in chosen and pos != newest and pos < newest:
                    return False
        return True

    def grow(chosen: list[int], start: int) -> None:
        if len(chosen) == k:
            gamma = tuple(omega2[i] for i in chosen)
            gset = set(gamma)
            for x in gamma:
                xi = inverse(x)
                for y in gamma:
                    if compose(compose(x, y), xi) not in gset:
                        return
            h_group = close_group(list(gamma), cap=cap)
            for proj in _extension_search(
                list(gamma), list(src.omega), tgt.degree, src.degree, injective=True
            ):
                assert set(proj) == h_group.elements
                results.append(StarMorphism(src, tgt, h_group, gamma, proj))
            return
        for idx in range(start, m - (k - len(chosen)) + 1):
            if viable(chosen, idx):
                grow(chosen + [idx], idx + 1)

    grow([], 0)
    return results


def genpair_to_text(pair: GenPair) -> str:
    """Canonical file form: a group block, then omega as element indices.

    Indices refer to the group's sorted element order, so the line is stable
    no matter how the group block itself is written.
    """
    order = pair.group.sorted_elements()
    pos = {p: i for i, p in enumerate(order)}
    lines = group_to_lines(pair.group)
    lines.append("omega " + " ".join(str(pos[w]) for w in pair.omega))
    return "\n".join(lines) + "\n"


def genpair_from_text(text: str, cap: int = DEFAULT_CAP) -> GenPair:
    lines = []
    for raw in text.splitlines():
        body = raw.partition("#")[0].strip()
        if body:
            lines.append(body)
    if not lines or not lines[-1].startswith("omega"):
        raise ValueError("genpair text must end with an 'omega <indices>' line")
    group = group_from_lines(lines[:-1], cap=cap)
    order = group.sorted_elements()
    toks = lines[-1].split()[1:]
    if not toks:
        raise ValueError("omega line lists no indices")
    idxs = [int(tok) for tok in toks]
    for i in idxs:
        if not 0 <= i < len(order):
            raise ValueError("omega index %d out of range for group of order %d" % (i, len(order)))
    return make_genpair(group, [order[i] for i in idxs])
