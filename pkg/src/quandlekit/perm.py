"""Permutations of {0, ..., n-1} and small fully enumerated permutation groups.

A permutation is a plain tuple of images: ``p[i]`` is where point ``i`` goes.
Groups keep every element explicitly, together with one witness word per
element over the generating set, so membership tests, centralizers and
conjugation-stability checks are plain iteration.  Everything is desk scale
by design: closures refuse to grow past a configurable cap instead of
switching to clever data structures.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

Perm = tuple[int, ...]
Letter = tuple[int, int]  # (generator index, sign); sign -1 means the inverse
Word = tuple[Letter, ...]

DEFAULT_CAP = 100_000


class CapExceeded(RuntimeError):
    """A closure or enumeration would grow past its configured cap."""


def identity(n: int) -> Perm:
    return tuple(range(n))


def is_perm(images: Sequence[int]) -> bool:
    return sorted(images) == list(range(len(images)))


def compose(p: Perm, q: Perm) -> Perm:
    """p after q: result[i] = p[q[i]]."""
    if len(p) != len(q):
        raise ValueError("degree mismatch: %d vs %d" % (len(p), len(q)))
    return tuple(p[j] for j in q)


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def conjugate(g: Perm, s: Perm) -> Perm:
    """g s g^-1."""
    return compose(compose(g, s), inverse(g))


def perm_order(p: Perm) -> int:
    n = 1
    q = p
    e = identity(len(p))
    while q != e:
        q = compose(q, p)
        n += 1
    return n


def perm_to_text(p: Perm) -> str:
    return "[" + " ".join(str(i) for i in p) + "]"


def perm_from_text(text: str) -> Perm:
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ValueError("permutation text must look like [i0 i1 ... ik]")
    body = text[1:-1].split()
    images = tuple(int(tok) for tok in body)
    if not is_perm(images):
        raise ValueError("not a permutation: %s" % text)
    return images


@dataclass(eq=False)
class PermGroup:
    """A finite permutation group with every element listed.

    ``witness[g]`` is the first word over the generators found for ``g`` by
    the closure BFS: shortest in generator length, ties broken by letter
    order (generator index, then sign +1 before -1).  Instances are treated
    as immutable once built.
    """

    degree: int
    generators: tuple[Perm, ...]
    elements: frozenset[Perm]
    witness: dict[Perm, Word]
    _sorted: list[Perm] | None = field(default=None, repr=False)
    _index: dict[Perm, int] | None = field(default=None, repr=False)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, p: Perm) -> bool:
        return p in self.elements

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PermGroup):
            return NotImplemented
        return self.degree == other.degree and self.elements == other.elements

    @property
    def identity(self) -> Perm:
        return identity(self.degree)

    def sorted_elements(self) -> list[Perm]:
        """Elements in the canonical order: lexicographic by image tuple."""
        if self._sorted is None:
            self._sorted = sorted(self.elements)
        return self._sorted

    def element_index(self, p: Perm) -> int:
        if self._index is None:
            self._index = {g: i for i, g in enumerate(self.sorted_elements())}
        return self._index[p]


def close_group(generators: Iterable[Perm], cap: int = DEFAULT_CAP) -> PermGroup:
    """Breadth-first closure of the generators, from the identity.

    The BFS multiplies on the right by generators and their inverses, so the
    recorded witness words evaluate left to right.  Exceeding ``cap``
    elements raises CapExceeded.
    """
    gens = tuple(tuple(g) for g in generators)
    if not gens:
        raise ValueError("need at least one generator")
    degree = len(gens[0])
    for g in gens:
        if len(g) != degree:
            raise ValueError("generators have mixed degrees")
        if not is_perm(g):
            raise ValueError("generator is not a permutation: %r" % (g,))
    alphabet: list[tuple[Letter, Perm]] = []
    for i, g in enumerate(gens):
        alphabet.append(((i, 1), g))
        alphabet.append(((i, -1), inverse(g)))
    e = identity(degree)
    witness: dict[Perm, Word] = {e: ()}
    queue: deque[Perm] = deque([e])
    while queue:
        cur = queue.popleft()
        w = witness[cur]
        for letter, g in alphabet:
            nxt = compose(cur, g)
            if nxt not in witness:
                if len(witness) >= cap:
                    raise CapExceeded(
                        "group closure exceeded the cap of %d elements" % cap
                    )
                witness[nxt] = w + (letter,)
                queue.append(nxt)
    return PermGroup(degree, gens, frozenset(witness), witness)


def evaluate_word(group: PermGroup, word: Iterable[Letter]) -> Perm:
    """Product of generators and inverses in word order; () is the identity."""
    out = identity(group.degree)
    for idx, sign in word:
        if not 0 <= idx < len(group.generators):
            raise IndexError("generator index %d out of range" % idx)
        if sign == 1:
            g = group.generators[idx]
        elif sign == -1:
            g = inverse(group.generators[idx])
        else:
            raise ValueError("letter sign must be +1 or -1, got %r" % (sign,))
        out = compose(out, g)
    return out


def _require_subset(group: PermGroup, subset: Iterable[Perm]) -> list[Perm]:
    elems = [tuple(s) for s in subset]
    for s in elems:
        if s not in group.elements:
            raise ValueError("subset element %s is not in the group" % (s,))
    return elems


def centralizer_of_subset_is_trivial(group: PermGroup, subset: Iterable[Perm]) -> bool:
    """True when only the identity commutes with every member of the subset."""
    elems = _require_subset(group, subset)
    e = group.identity
    for g in group.elements:
        if g == e:
            continue
        ginv = inverse(g)
        if all(compose(compose(g, s), ginv) == s for s in elems):
            return False
    return True


def is_conjugation_stable(group: PermGroup, subset: Iterable[Perm]) -> bool:
    """True when g s g^-1 stays in the subset for every g in the group."""
    sset = frozenset(_require_subset(group, subset))
    for g in group.elements:
        ginv = inverse(g)
        for s in sset:
            if compose(compose(g, s), ginv) not in sset:
                return False
    return True


def _rotation(n: int) -> Perm:
    return tuple((i + 1) % n for i in range(n))


def _negation(n: int) -> Perm:
    return tuple((-i) % n for i in range(n))


def cyclic_group(n: int, cap: int = DEFAULT_CAP) -> PermGroup:
    if n < 1:
        raise ValueError("n must be >= 1")
    return close_group([_rotation(n)], cap=cap)


def symmetric_group(n: int, cap: int = DEFAULT_CAP) -> PermGroup:
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return close_group([identity(1)], cap=cap)
    swap = list(range(n))
    swap[0], swap[1] = 1, 0
    return close_group([tuple(swap), _rotation(n)], cap=cap)


def _dihedral_gens(n: int) -> tuple[Perm, Perm]:
    # Realizations chosen so the group really has order 2n, including n < 3
    # where the n-point action is too small.
    if n >= 3:
        return _rotation(n), _negation(n)
    if n == 2:
        return (1, 0, 3, 2), (2, 3, 0, 1)
    if n == 1:
        return identity(2), (1, 0)
    raise ValueError("n must be >= 1")


def dihedral_group(n: int, cap: int = DEFAULT_CAP) -> PermGroup:
    """The dihedral group of order 2n (rotation and reflection generators)."""
    return close_group(list(_dihedral_gens(n)), cap=cap)


def dihedral_reflections(n: int) -> list[Perm]:
    """The n reflections of dihedral_group(n), in rotation-power order."""
    a, x = _dihedral_gens(n)
    out = []
    r = x
    for _ in range(n):
        out.append(r)
        r = compose(a, r)
    return out


def all_transpositions(n: int) -> list[Perm]:
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            images = list(range(n))
            images[i], images[j] = j, i
            out.append(tuple(images))
    return out


def find_dihedral_presentation(
    group: PermGroup, seed: int = 0
) -> tuple[Perm, Perm] | None:
    """Search for (a, x) with a^n = x^2 = 1, x a x = a^-1 and <a, x> = group.

    Returns a witness pair when the group is dihedral of order 2n with
    n = |group| / 2, else None.  The seed only reorders the candidate scan.
    """
    order = len(group)
    if order % 2 != 0:
        return None
    n = order // 2
    e = group.identity
    elems = group.sorted_elements()
    rotations = [g for g in elems if perm_order(g) == n]
    involutions = [g for g in elems if g != e and compose(g, g) == e]
    candidates = [(a, x) for a in rotations for x in involutions]
    random.Random(seed).shuffle(candidates)
    for a, x in candidates:
        if compose(compose(x, a), x) != inverse(a):
            continue
        if close_group([a, x], cap=order).elements == group.elements:
            return a, x
    return None


def group_to_lines(group: PermGroup) -> list[str]:
    """Explicit text block: 'perms <degree>' then one generator per line."""
    return ["perms %d" % group.degree] + [perm_to_text(g) for g in group.generators]


def group_from_lines(lines: Sequence[str], cap: int = DEFAULT_CAP) -> PermGroup:
    """Parse a group block: a named family line or a 'perms' block.

    Named families: 'cyclic n', 'dihedral n' (order 2n), 'symmetric n'.
    """
    if not lines:
        raise ValueError("empty group block")
    head = lines[0].split()
    if not head:
        raise ValueError("empty group header line")
    kind = head[0]
    if kind in ("cyclic", "dihedral", "symmetric"):
        if len(head) != 2 or len(lines) != 1:
            raise ValueError("family line must be '%s n' on its own" % kind)
        n = int(head[1])
        if kind == "cyclic":
            return cyclic_group(n, cap=cap)
        if kind == "dihedral":
            return dihedral_group(n, cap=cap)
        return symmetric_group(n, cap=cap)
    if kind == "perms":
        if len(head) != 2:
            raise ValueError("expected 'perms <degree>'")
        degree = int(head[1])
        gens = [perm_from_text(line) for line in lines[1:]]
        if not gens:
            raise ValueError("perms block needs at least one generator line")
        for g in gens:
            if len(g) != degree:
                raise ValueError("generator degree does not match header")
        return close_group(gens, cap=cap)
    raise ValueError("unknown group block kind: %r" % kind)
