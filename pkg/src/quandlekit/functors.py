"""The functor pairs between faithful quandles and generator pairs, the
natural isomorphisms relating their round trips to the identity, and a
corpus-level verification harness.

Surjective flavor: quandles with surjective homomorphisms on one side,
pairs with omega-onto group maps on the other.  Forward sends a quandle to
its inner group with the symmetries distinguished; backward sends a pair to
the conjugation quandle on its omega.

Injective flavor: quandles with injective homomorphisms against pairs with
backwards-partial morphisms (StarMorphism).  The object maps are the same;
only the morphism directions change.

verify_equivalence replays the whole story on a concrete corpus: hom sets
are enumerated independently on both sides, the forward functor is checked
to biject them, the round-trip isomorphisms are checked natural, and the
functor laws are checked on every composable pair.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .grpgen import (
    CapExceeded,
    GenPair,
    StarMorphism,
    SurjMorphism,
    check_star_morphism,
    check_surj_morphism,
    compose_star,
    compose_surj,
    enumerate_star_morphisms,
    enumerate_surj_morphisms,
    identity_star,
    identity_surj,
    is_star_isomorphism,
)
from .homs import (
    QuandleHom,
    check_hom,
    compose_homs,
    enumerate_homs,
    identity_hom,
    induced_injective,
    induced_surjective,
)
from .perm import DEFAULT_CAP, Perm, conjugate
from .quandle import Quandle, conjugation_quandle, inn, is_faithful


def to_pair(q: Quandle, cap: int = DEFAULT_CAP) -> GenPair:
    """Object map of both forward functors: the inner group with its symmetries.

    Only faithful quandles are accepted; the equivalences live there.
    """
    if not is_faithful(q):
        raise ValueError("not faithful: distinct points share a symmetry")
    return inn(q, cap)


def to_quandle(p: GenPair) -> Quandle:
    """Object map of both backward functors: the conjugation quandle on omega."""
    if not p.conj_stable:
        raise ValueError("omega is not conjugation-stable in the group")
    if not p.faithful:
        raise ValueError("omega has a non-trivial centralizer")
    return conjugation_quandle(p.group, p.omega)


F_surj = to_pair
F_inj = to_pair
G_surj = to_quandle
G_inj = to_quandle


def F_surj_mor(
    f: QuandleHom,
    source_pair: GenPair | None = None,
    target_pair: GenPair | None = None,
    cap: int = DEFAULT_CAP,
) -> SurjMorphism:
    return induced_surjective(f, source_pair, target_pair, cap)


def F_inj_mor(
    f: QuandleHom,
    source_pair: GenPair | None = None,
    target_pair: GenPair | None = None,
    cap: int = DEFAULT_CAP,
) -> StarMorphism:
    return induced_injective(f, source_pair, target_pair, cap)


def G_surj_mor(
    m: SurjMorphism,
    source_quandle: Quandle | None = None,
    target_quandle: Quandle | None = None,
) -> QuandleHom:
    """Restrict the group map to omega, reindexed through the canonical points.

    Point i of the conjugation quandle on omega is the i-th omega member in
    canonical order, so the restriction is a plain index translation.
    """
    q1 = source_quandle if source_quandle is not None else to_quandle(m.source)
    q2 = target_quandle if target_quandle is not None else to_quandle(m.target)
    pos2 = {p: i for i, p in enumerate(m.target.omega)}
    mapping = tuple(pos2[m.mapping[w]] for w in m.source.omega)
    f = QuandleHom(q1, q2, mapping)
    if check_hom(f):
        raise RuntimeError("restricted map failed verification; this is a bug")
    return f


def G_inj_mor(
    m: StarMorphism,
    source_quandle: Quandle | None = None,
    target_quandle: Quandle | None = None,
) -> QuandleHom:
    """Send each source omega member to the unique subset member above it.

    The projection restricts to a bijection subset -> source omega, so the
    reverse direction is a well-defined injective quandle map.
    """
    q1 = source_quandle if source_quandle is not None else to_quandle(m.source)
    q2 = target_quandle if target_quandle is not None else to_quandle(m.target)
    back = {m.proj[g]: g for g in m.domain_omega}
    pos2 = {p: i for i, p in enumerate(m.target.omega)}
    mapping = tuple(pos2[back[w]] for w in m.source.omega)
    f = QuandleHom(q1, q2, mapping)
    if not f.is_injective() or check_hom(f):
        raise RuntimeError("reversed map failed verification; this is a bug")
    return f


def theta(q: Quandle, pair: GenPair | None = None, cap: int = DEFAULT_CAP) -> QuandleHom:
    """The round-trip isomorphism on the quandle side: symmetry-point back to point.

    Source is the conjugation quandle on the quandle's own symmetries; the
    map matches each of its points (a permutation) with the point of q whose
    row it is.  Faithfulness makes that unambiguous.
    """
    p = pair if pair is not None else to_pair(q, cap)
    back = {q.table[x]: x for x in range(q.n)}
    round_trip = to_quandle(p)
    mapping = tuple(back[w] for w in p.omega)
    f = QuandleHom(round_trip, q, mapping)
    if not f.is_injective() or not f.is_surjective() or check_hom(f):
        raise RuntimeError("round-trip map failed verification; this is a bug")
    return f


def conjugation_action(p: GenPair, round_trip: GenPair) -> dict[Perm, Perm]:
    """For each group element g, the permutation of omega points induced by
    conjugation with g.  This is a group isomorphism onto round_trip's group."""
    pos = {w: i for i, w in enumerate(p.omega)}
    action = {}
    for g in p.group.elements:
        action[g] = tuple(pos[conjugate(g, w)] for w in p.omega)
    if set(action.values()) != round_trip.group.elements or len(
        set(action.values())
    ) != len(action):
        raise RuntimeError("conjugation action is not an isomorphism; this is a bug")
    return action


def eta_surj(p: GenPair, cap: int = DEFAULT_CAP) -> SurjMorphism:
    """The round-trip isomorphism on the pair side, surjective flavor.

    Maps the inner group of the conjugation quandle back onto the original
    group: the symmetry at omega point w goes to w itself.
    """
    round_trip = to_pair(to_quandle(p), cap)
    action = conjugation_action(p, round_trip)
    mapping = {perm: g for g, perm in action.items()}
    m = SurjMorphism(round_trip, p, mapping)
    bad = check_surj_morphism(m, bijective=True)
    if bad:
        raise RuntimeError("round-trip morphism failed verification: %s" % "; ".join(bad))
    return m


def eta_star(p: GenPair, cap: int = DEFAULT_CAP) -> StarMorphism:
    """The round-trip isomorphism on the pair side, backwards-partial flavor.

    The domain is the whole original pair and the projection is the
    conjugation action onto the inner group of the conjugation quandle.
    """
    round_trip = to_pair(to_quandle(p), cap)
    action = conjugation_action(p, round_trip)
    m = StarMorphism(round_trip, p, p.group, p.omega, dict(action))
    bad = check_star_morphism(m)
    if bad:
        raise RuntimeError("round-trip morphism failed verification: %s" % "; ".join(bad))
    if not is_star_isomorphism(m):
        raise RuntimeError("round-trip morphism is not an isomorphism; this is a bug")
    return m


@dataclass
class CheckRecord:
    check: str
    instance: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        mark = "ok  " if self.passed else "FAIL"
        tail = " (%s)" % self.detail if self.detail else ""
        return "%s %-22s %s%s" % (mark, self.check, self.instance, tail)


@dataclass
class EquivalenceReport:
    mode: str
    names: list[str]
    records: list[CheckRecord] = field(default_factory=list)

    def add(self, check: str, instance: str, passed: bool, detail: str = "") -> None:
        self.records.append(CheckRecord(check, instance, bool(passed), detail))

    @property
    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if not r.passed]

    def summary(self) -> str:
        lines = [
            "mode %s on corpus [%s]: %d checks, %d failures"
            % (self.mode, ", ".join(self.names), len(self.records), len(self.failures))
        ]
        lines.extend(r.line() for r in self.failures)
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "corpus": self.names,
            "checks": len(self.records),
            "failures": len(self.failures),
            "records": [
                {
                    "check": r.check,
                    "instance": r.instance,
                    "passed": r.passed,
                    "detail": r.detail,
                }
                for r in self.records
            ],
        }


def _normalize_mode(mode: str) -> str:
    table = {
        "inj": "injective",
        "injective": "injective",
        "surj": "surjective",
        "surjective": "surjective",
    }
    if mode not in table:
        raise ValueError("mode must be injective or surjective")
    return table[mode]


def verify_equivalence(
    corpus: list[Quandle],
    mode: str,
    names: list[str] | None = None,
    cap: int = DEFAULT_CAP,
    law_samples: int = 40,
) -> EquivalenceReport:
    """Machine-check one equivalence flavor on a corpus of faithful quandles.

    Per ordered corpus pair: hom sets are enumerated on the quandle side and
    (independently) on the group side, the forward functor must biject them,
    and both round-trip naturality squares must commute.  Functor laws are
    checked on all composable pairs; associativity and unit laws of the
    group-side composition on deterministic samples.  Failures are recorded,
    not raised; caps and invalid corpus members do raise.
    """
    mode = _normalize_mode(mode)
    star = mode == "injective"
    names = list(names) if names is not None else ["Q%d" % i for i in range(len(corpus))]
    if len(names) != len(corpus):
        raise ValueError("names length differs from corpus length")
    report = EquivalenceReport(mode, names)
    for name, q in zip(names, corpus):
        if not is_faithful(q):
            raise ValueError("%s: not faithful" % name)
    k = len(corpus)
    pairs = [to_pair(q, cap) for q in corpus]
    conjs = [to_quandle(p) for p in pairs]
    round_trips = [to_pair(qc, cap) for qc in conjs]

    thetas = []
    etas = []
    for i, q in enumerate(corpus):
        inst = names[i]
        try:
            th = theta(q, pairs[i])
            thetas.append(th)
            report.add("theta_iso", inst, True)
        except RuntimeError as exc:
            thetas.append(None)
            report.add("theta_iso", inst, False, str(exc))
        try:
            et = eta_star(pairs[i], cap) if star else eta_surj(pairs[i], cap)
            etas.append(et)
            ok = is_star_isomorphism(et) if star else et.is_injective()
            report.add("eta_iso", inst, ok)
        except RuntimeError as exc:
            etas.append(None)
            report.add("eta_iso", inst, False, str(exc))
        # identity laws of the two functors
        try:
            fid = (
                F_inj_mor(identity_hom(q), pairs[i], pairs[i], cap)
                if star
                else F_surj_mor(identity_hom(q), pairs[i], pairs[i], cap)
            )
            ident = identity_star(pairs[i]) if star else identity_surj(pairs[i])
            report.add("functor_F_identity", inst, fid == ident)
        except RuntimeError as exc:
            report.add("functor_F_identity", inst, False, str(exc))
        try:
            ident_m = identity_star(pairs[i]) if star else identity_surj(pairs[i])
            gid = (
                G_inj_mor(ident_m, conjs[i], conjs[i])
                if star
                else G_surj_mor(ident_m, conjs[i], conjs[i])
            )
            report.add("functor_G_identity", inst, gid == identity_hom(conjs[i]))
        except RuntimeError as exc:
            report.add("functor_G_identity", inst, False, str(exc))

    qmode = "injective" if star else "surjective"
    q_homs: dict[tuple[int, int], list[QuandleHom]] = {}
    g_homs: dict[tuple[int, int], list] = {}
    f_mapped: dict[tuple[int, int], list] = {}
    f_by_mapping: dict[tuple[int, int], dict] = {}
    g_mapped: dict[tuple[int, int], list[QuandleHom]] = {}

    for i, j in itertools.product(range(k), repeat=2):
        inst = "%s -> %s" % (names[i], names[j])
        try:
            qh = enumerate_homs(corpus[i], corpus[j], qmode)
            gh = (
                enumerate_star_morphisms(pairs[i], pairs[j], cap)
                if star
                else enumerate_surj_morphisms(pairs[i], pairs[j])
            )
            mapped = [
                F_inj_mor(f, pairs[i], pairs[j], cap)
                if star
                else F_surj_mor(f, pairs[i], pairs[j], cap)
                for f in qh
            ]
        except (CapExceeded, RuntimeError) as exc:
            report.add("enumeration", inst, False, str(exc))
            continue
        q_homs[i, j] = qh
        g_homs[i, j] = gh
        f_mapped[i, j] = mapped
        f_by_mapping[i, j] = {f.mapping: m for f, m in zip(qh, mapped)}
        report.add(
            "hom_count",
            inst,
            len(qh) == len(gh),
            "quandle side %d, group side %d" % (len(qh), len(gh)),
        )
        keys = [m.key() for m in mapped]
        report.add("functor_injective", inst, len(set(keys)) == len(keys))
        report.add(
            "functor_onto",
            inst,
            set(keys) == {m.key() for m in gh},
            "forward image must equal the enumerated group side",
        )
        # theta naturality: theta_j ( GF f ) == f ( theta_i )
        th_i, th_j = thetas[i], thetas[j]
        if th_i is not None and th_j is not None:
            ok = True
            for f, m in zip(qh, mapped):
                gf = (
                    G_inj_mor(m, conjs[i], conjs[j])
                    if star
                    else G_surj_mor(m, conjs[i], conjs[j])
                )
                left = tuple(th_j.mapping[v] for v in gf.mapping)
                right = tuple(f.mapping[v] for v in th_i.mapping)
                if left != right:
                    ok = False
                    break
            report.add("theta_naturality", inst, ok, "%d homs" % len(qh))
        # eta naturality: m ( eta_i ) == eta_j ( FG m )
        et_i, et_j = etas[i], etas[j]
        if et_i is not None and et_j is not None:
            ok = True
            gmapped_list = []
            for m in gh:
                try:
                    gm = (
                        G_inj_mor(m, conjs[i], conjs[j])
                        if star
                        else G_surj_mor(m, conjs[i], conjs[j])
                    )
                    gmapped_list.append(gm)
                    fg = (
                        F_inj_mor(gm, round_trips[i], round_trips[j], cap)
                        if star
                        else F_surj_mor(gm, round_trips[i], round_trips[j], cap)
                    )
                    if star:
                        left = compose_star(m, et_i, cap)
                        right = compose_star(et_j, fg, cap)
                    else:
                        left = compose_surj(m, et_i)
                        right = compose_surj(et_j, fg)
                    if left != right:
                        ok = False
                        break
                except RuntimeError as exc:
                    report.add("eta_naturality", inst, False, str(exc))
                    ok = None
                    break
            if ok is not None:
                report.add("eta_naturality", inst, ok, "%d morphisms" % len(gh))
            if len(gmapped_list) == len(gh):
                g_mapped[i, j] = gmapped_list

    # functor composition laws on every composable pair
    for i, j, l in itertools.product(range(k), repeat=3):
        if (i, j) not in q_homs or (j, l) not in q_homs:
            continue
        if not q_homs[i, j] or not q_homs[j, l]:
            continue
        inst = "%s -> %s -> %s" % (names[i], names[j], names[l])
        okF = True
        detail = ""
        for a, f1 in enumerate(q_homs[i, j]):
            for b, f2 in enumerate(q_homs[j, l]):
                comp = compose_homs(f2, f1)
                expected = f_by_mapping[i, l].get(comp.mapping)
                if expected is None:
                    okF = False
                    detail = "composite hom missing from enumeration"
                    break
                got = (
                    compose_star(f_mapped[j, l][b], f_mapped[i, j][a], cap)
                    if star
                    else compose_surj(f_mapped[j, l][b], f_mapped[i, j][a])
                )
                if got != expected:
                    okF = False
                    detail = "F(f2 f1) != F(f2) F(f1)"
                    break
            if not okF:
                break
        report.add("functor_F_composition", inst, okF, detail)
        if (i, j) in g_mapped and (j, l) in g_mapped:
            okG = True
            detail = ""
            for a, m1 in enumerate(g_homs[i, j]):
                for b, m2 in enumerate(g_homs[j, l]):
                    comp = (
                        compose_star(m2, m1, cap)
                        if star
                        else compose_surj(m2, m1)
                    )
                    gcomp = (
                        G_inj_mor(comp, conjs[i], conjs[l])
                        if star
                        else G_surj_mor(comp, conjs[i], conjs[l])
                    )
                    direct = compose_homs(g_mapped[j, l][b], g_mapped[i, j][a])
                    if gcomp != direct:
                        okG = False
                        detail = "G(m2 m1) != G(m2) G(m1)"
                        break
                if not okG:
                    break
            report.add("functor_G_composition", inst, okG, detail)

    # associativity and unit laws of the group-side composition, sampled
    triples = []
    for i, j, l, h in itertools.product(range(k), repeat=4):
        for key in ((i, j), (j, l), (l, h)):
            if key not in g_homs or not g_homs[key]:
                break
        else:
            for m1, m2, m3 in itertools.islice(
                itertools.product(g_homs[i, j], g_homs[j, l], g_homs[l, h]), 2
            ):
                triples.append((m1, m2, m3))
        if len(triples) >= law_samples:
            break
    ok = True
    for m1, m2, m3 in triples[:law_samples]:
        if star:
            left = compose_star(compose_star(m3, m2, cap), m1, cap)
            right = compose_star(m3, compose_star(m2, m1, cap), cap)
        else:
            left = compose_surj(compose_surj(m3, m2), m1)
            right = compose_surj(m3, compose_surj(m2, m1))
        if left != right:
            ok = False
            break
    if triples:
        report.add("composition_associative", "sampled triples", ok, "%d triples" % len(triples[:law_samples]))
    ok = True
    sampled = 0
    for (i, j), ms in g_homs.items():
        for m in ms[:2]:
            idm_src = identity_star(pairs[i]) if star else identity_surj(pairs[i])
            idm_tgt = identity_star(pairs[j]) if star else identity_surj(pairs[j])
            if star:
                if compose_star(m, idm_src, cap) != m or compose_star(idm_tgt, m, cap) != m:
                    ok = False
            else:
                if compose_surj(m, idm_src) != m or compose_surj(idm_tgt, m) != m:
                    ok = False
            sampled += 1
    if sampled:
        report.add("composition_unital", "sampled morphisms", ok, "%d morphisms" % sampled)
    return report
