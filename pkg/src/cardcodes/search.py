"""Exhaustive search for colorings of J^{c+r}(n, a) under protocol constraints.

The engine is a depth-first search over partial colorings held as bit masks:
bit ``i`` of a mask stands for the i-th a-hand in canonical order. Each node
picks the unassigned hand with the fewest admissible messages (ties to the
lowest index), tries messages in ascending order and prunes with

* adjacency (proper colorings): a message is forbidden next to its members,
* B's cliques (minimal informativeness): a clique may not end monochrome,
  and its last free hand may not repeat the shared message,
* safety: for every C hand met by a class, every outside card must stay
  both reachable and avoidable by hands that may still join that class,
* class sizes, when a size profile is requested.

Unused messages are interchangeable, so only the lowest unused one is ever
opened. Proper searches additionally fix one maximum clique to ``0..q-1``.
A ``SAT`` answer is always re-verified before it is returned.
"""

from __future__ import annotations

import logging
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from itertools import combinations
from math import comb
from typing import Literal, Optional, Sequence

from .coloring import Coloring
from .deck import Signature, hand_index, hand_masks
from .errors import InstanceTooLargeError, InvalidDimensionError
from .johnson import GraphSpec, max_clique
from . import verify

log = logging.getLogger(__name__)

Informativeness = Literal["proper", "min_informative", "none"]
Safety = Literal["safe", "weak_safe", "none"]

DEFAULT_TIMEOUT = 600.0
_CLOCK_EVERY = 1024


@dataclass(frozen=True)
class Constraints:
    informativeness: Informativeness = "proper"
    safety: Safety = "none"
    k: int = 2
    size_profile: Optional[tuple[int, ...]] = None
    timeout: Optional[float] = DEFAULT_TIMEOUT
    symmetry_breaking: bool = True
    # prune with the two-hands-per-card consequence of safety (needs a >= 2, c >= 1)
    double_cover: bool = False
    # prune with the independence number of the graph (proper searches only)
    capacity_bound: bool = True

    def __post_init__(self):
        if self.k < 1:
            raise InvalidDimensionError("k must be at least 1")
        if self.informativeness not in ("proper", "min_informative", "none"):
            raise InvalidDimensionError(f"unknown informativeness {self.informativeness!r}")
        if self.safety not in ("safe", "weak_safe", "none"):
            raise InvalidDimensionError(f"unknown safety {self.safety!r}")
        if self.size_profile is not None:
            profile = tuple(sorted(self.size_profile, reverse=True))
            if len(profile) > self.k or any(p < 0 for p in profile):
                raise InvalidDimensionError(f"size profile {self.size_profile} needs at most k={self.k} non-negative parts")
            object.__setattr__(self, "size_profile", profile)

    def describe(self) -> str:
        parts = [self.informativeness, self.safety, f"k={self.k}"]
        if self.size_profile:
            parts.append("profile=" + ",".join(map(str, self.size_profile)))
        return " ".join(parts)


@dataclass
class SearchResult:
    outcome: Literal["SAT", "UNSAT", "TIMEOUT"]
    coloring: Optional[Coloring] = None
    nodes_explored: int = 0
    elapsed: float = 0.0
    constraints: Optional[Constraints] = None

    @property
    def sat(self) -> bool:
        return self.outcome == "SAT"

    def lines(self) -> list[str]:
        out = [f"outcome={self.outcome}", f"nodes={self.nodes_explored}", f"elapsed={self.elapsed:.3f}"]
        if self.coloring is not None:
            out.append(f"messages={self.coloring.message_count}")
            out.append("class_sizes=" + ",".join(map(str, sorted(self.coloring.class_sizes()))))
        return out


class _Timeout(Exception):
    pass


class _Unsat(Exception):
    pass


@dataclass
class _State:
    members: list
    forbidden: list
    free: int
    used: int


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass
class Problem:
    """Precomputed masks for one (graph, constraints) pair."""

    n: int
    a: int
    d: int
    c: int
    b: int
    cons: Constraints
    masks: tuple = field(init=False)

    def __post_init__(self):
        n, a, d = self.n, self.a, self.d
        self.masks = hand_masks(n, a)
        V = len(self.masks)
        self.size = V
        self.all = (1 << V) - 1
        threshold = a - d
        self.nbr = [0] * V
        if self.cons.informativeness == "proper" and d > 0:
            for i, j in combinations(range(V), 2):
                if (self.masks[i] & self.masks[j]).bit_count() >= threshold:
                    self.nbr[i] |= 1 << j
                    self.nbr[j] |= 1 << i

        # B's cliques: the hands avoiding each b-hand
        self.cliques: list[int] = []
        self.cliques_of: list[list[int]] = [[] for _ in range(V)]
        if self.cons.informativeness == "min_informative":
            if d < 1:
                raise InvalidDimensionError("minimal informativeness needs c + r >= 1")
            for bm in hand_masks(n, self.b):
                q = 0
                for i, hm in enumerate(self.masks):
                    if not hm & bm:
                        q |= 1 << i
                idx = len(self.cliques)
                self.cliques.append(q)
                for i in _bits(q):
                    self.cliques_of[i].append(idx)

        # safety: for each C hand, (avoid mask, [(with y, without y) for y outside])
        self.safety: list[tuple[int, list[tuple[int, int]]]] = []
        if self.cons.safety != "none":
            c_hands = (0,) if self.cons.safety == "weak_safe" else hand_masks(n, self.c)
            for cm in c_hands:
                avoid = 0
                for i, hm in enumerate(self.masks):
                    if not hm & cm:
                        avoid |= 1 << i
                pairs = []
                for y in range(n):
                    if cm >> y & 1:
                        continue
                    inc = 0
                    for i in _bits(avoid):
                        if self.masks[i] >> y & 1:
                            inc |= 1 << i
                    pairs.append((inc, avoid & ~inc))
                self.safety.append((avoid, pairs))

        # hands holding each card, for the two-cover filter
        self.holding = [0] * n
        for i, hm in enumerate(self.masks):
            for y in range(n):
                if hm >> y & 1:
                    self.holding[y] |= 1 << i
        self.double_cover = (self.cons.double_cover and self.cons.safety == "safe"
                             and self.c >= 1 and a >= 2)

        k = self.cons.k
        self.profile = None
        if self.cons.size_profile is not None:
            prof = list(self.cons.size_profile) + [0] * (k - len(self.cons.size_profile))
            if sum(prof) != V:
                raise InvalidDimensionError(f"size profile sums to {sum(prof)}, the graph has {V} vertices")
            self.profile = prof
        self.max_class = None
        if self.profile is not None:
            self.max_class = self.profile[0]
        if self.cons.informativeness == "proper" and d > 0 and self.cons.capacity_bound:
            alpha = independence_number(self.nbr)
            self.max_class = alpha if self.max_class is None else min(self.max_class, alpha)

    # -- propagation ---------------------------------------------------

    def assign(self, st: _State, v: int, col: int) -> Optional[_State]:
        bit = 1 << v
        if st.forbidden[col] & bit:
            return None
        members = st.members[:]
        forbidden = st.forbidden[:]
        members[col] |= bit
        free = st.free & ~bit
        if self.nbr[v]:
            forbidden[col] |= self.nbr[v]
            if members[col] & self.nbr[v]:
                return None
        for qi in self.cliques_of[v]:
            q = self.cliques[qi]
            open_ = q & free
            done = q & ~free
            if done & ~members[col]:
                continue  # already two colors here
            if not open_:
                return None
            if open_ & (open_ - 1) == 0:
                forbidden[col] |= open_
        return _State(members, forbidden, free, max(st.used, col + 1))

    def feasible(self, st: _State) -> bool:
        k = self.cons.k
        members, forbidden, free = st.members, st.forbidden, st.free
        # every free hand needs some admissible message
        allowed = 0
        for j in range(st.used):
            allowed |= ~forbidden[j]
        if st.used < k:
            allowed = -1
        if free & ~allowed:
            return False
        sizes = [m.bit_count() for m in members]
        if self.max_class is not None:
            room = sum(self.max_class - s for s in sizes)
            if room < free.bit_count() or max(sizes) > self.max_class:
                return False
        if self.profile is not None:
            for s, p in zip(sorted(sizes, reverse=True), self.profile):
                if s > p:
                    return False
        if not self.safety and not self.double_cover:
            return True
        for j in range(st.used):
            mem = members[j]
            if not mem:
                continue
            pot = mem | (free & ~forbidden[j])
            if self.profile is not None and pot.bit_count() < self.profile[-1]:
                return False
            for avoid, pairs in self.safety:
                if mem & avoid:
                    for inc, exc in pairs:
                        if not (pot & inc and pot & exc):
                            return False
            if self.double_cover:
                for v in _bits(mem):
                    hand = self.masks[v]
                    for z in _bits(hand):
                        with_z = pot & self.holding[z]
                        for y in _bits(hand & ~(1 << z)):
                            if not with_z & ~self.holding[y]:
                                return False
        return True

    def leaf_ok(self, st: _State) -> bool:
        if self.profile is not None:
            sizes = sorted((m.bit_count() for m in st.members), reverse=True)
            if sizes != self.profile:
                return False
        return True

    # -- search ----------------------------------------------------------

    def initial(self) -> _State:
        k = self.cons.k
        st = _State([0] * k, [0] * k, self.all, 0)
        if self.cons.informativeness == "proper" and self.cons.symmetry_breaking and self.d > 0:
            spec = GraphSpec(self.n, self.a, self.d)
            index = hand_index(self.n, self.a)
            clique = [index[h.mask] for h in max_clique(spec)]
            if len(clique) > k:
                raise _Unsat
            for col, v in enumerate(clique):
                st = self.assign(st, v, col)
                if st is None:
                    raise _Unsat
        return st

    def choices(self, st: _State) -> tuple[int, list[int]]:
        """Next hand (fewest admissible messages, lowest index) and its messages."""
        k = self.cons.k
        opener = st.used if (st.used < k and self.cons.symmetry_breaking) else None
        best_v, best = -1, None
        free = st.free
        while free:
            low = free & -free
            free ^= low
            v = low.bit_length() - 1
            opts = [j for j in range(st.used) if not st.forbidden[j] & low]
            if opener is not None:
                opts.append(opener)
            elif not self.cons.symmetry_breaking:
                opts.extend(j for j in range(st.used, k) if not st.forbidden[j] & low)
            if best is None or len(opts) < len(best):
                best_v, best = v, opts
                if len(opts) <= 1:
                    break
        return best_v, best


class _Runner:
    def __init__(self, prob: Problem, deadline: Optional[float]):
        self.prob = prob
        self.deadline = deadline
        self.nodes = 0
        self.solution: Optional[_State] = None

    def dfs(self, st: _State) -> bool:
        self.nodes += 1
        if self.deadline is not None and self.nodes % _CLOCK_EVERY == 0 and time.monotonic() > self.deadline:
            raise _Timeout
        prob = self.prob
        if not st.free:
            if prob.leaf_ok(st):
                self.solution = st
                return True
            return False
        v, opts = prob.choices(st)
        for col in opts:
            nxt = prob.assign(st, v, col)
            if nxt is not None and prob.feasible(nxt) and self.dfs(nxt):
                return True
        return False


def _problem_for(sig: Signature, cons: Constraints) -> Problem:
    d = sig.d if cons.informativeness != "none" else 0
    return Problem(sig.n, sig.a, d, sig.c, sig.b, cons)


def _to_coloring(prob: Problem, st: _State, sig: Signature, cons: Constraints) -> Coloring:
    colors = [0] * prob.size
    for j, mem in enumerate(st.members):
        for v in _bits(mem):
            colors[v] = j
    col = Coloring(prob.n, prob.a, tuple(colors), {"signature": str(sig), "search": cons.describe()})
    return col.normalized()


def _reverify(col: Coloring, sig: Signature, cons: Constraints) -> None:
    checks = []
    if cons.informativeness == "proper":
        checks.append(verify.check_informative(col, sig))
    elif cons.informativeness == "min_informative":
        checks.append(verify.check_min_informative(col, sig))
    if cons.safety != "none":
        checks.append(verify.check_safe(col, sig, weak=cons.safety == "weak_safe"))
    bad = [rep.name for rep in checks if not rep.verdict]
    if bad or col.message_count > cons.k:
        raise AssertionError(f"search produced a coloring failing {bad or 'the message bound'}")
    if cons.size_profile is not None:
        if sorted(col.class_sizes(), reverse=True) != [p for p in cons.size_profile if p]:
            raise AssertionError("search produced a coloring off the size profile")


def _run_branch(args):
    sig, cons, prefix, deadline = args
    prob = _problem_for(sig, cons)
    runner = _Runner(prob, deadline)
    try:
        st = prob.initial()
        for v, col in prefix:
            st = prob.assign(st, v, col)
            if st is None or not prob.feasible(st):
                return "UNSAT", None, runner.nodes
        found = runner.dfs(st)
    except _Timeout:
        return "TIMEOUT", None, runner.nodes
    except _Unsat:
        return "UNSAT", None, runner.nodes
    if not found:
        return "UNSAT", None, runner.nodes
    return "SAT", runner.solution.members, runner.nodes


def find_coloring(sig: Signature, cons: Constraints, jobs: int = 1) -> SearchResult:
    """Search for a coloring of the a-hands of ``sig`` meeting ``cons``.

    With ``jobs > 1`` the first branching of the tree is spread over worker
    processes; the answer is the solution of the earliest branch in search
    order, so it equals the single-process answer.
    """
    start = time.monotonic()
    deadline = None if cons.timeout is None else start + cons.timeout
    prob = _problem_for(sig, cons)
    if cons.size_profile is not None:
        prob_total = sum(cons.size_profile)
        if prob_total != prob.size:
            raise InvalidDimensionError(f"size profile sums to {prob_total}, there are {prob.size} hands")
    runner = _Runner(prob, deadline)
    result = SearchResult("UNSAT", constraints=cons)
    try:
        st = prob.initial()
        if not prob.feasible(st):
            raise _Unsat
        if jobs > 1 and st.free:
            result = _parallel(sig, cons, prob, st, deadline, jobs)
        else:
            if runner.dfs(st):
                result = SearchResult("SAT", _to_coloring(prob, runner.solution, sig, cons), constraints=cons)
            result.nodes_explored = runner.nodes
    except _Timeout:
        result = SearchResult("TIMEOUT", nodes_explored=runner.nodes, constraints=cons)
    except _Unsat:
        result = SearchResult("UNSAT", nodes_explored=runner.nodes, constraints=cons)
    result.elapsed = time.monotonic() - start
    if result.coloring is not None:
        _reverify(result.coloring, sig, cons)
    log.info("search %s %s: %s after %d nodes", sig, cons.describe(), result.outcome, result.nodes_explored)
    return result


def _parallel(sig, cons, prob: Problem, st: _State, deadline, jobs: int) -> SearchResult:
    v, opts = prob.choices(st)
    tasks = [(sig, cons, [(v, col)], deadline) for col in opts]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        outcomes = list(pool.map(_run_branch, tasks))
    nodes = 1 + sum(o[2] for o in outcomes)
    for outcome, members, _ in outcomes:
        if outcome == "SAT":
            state = _State(members, [0] * len(members), 0, len(members))
            return SearchResult("SAT", _to_coloring(prob, state, sig, cons), nodes, constraints=cons)
        if outcome == "TIMEOUT":
            return SearchResult("TIMEOUT", nodes_explored=nodes, constraints=cons)
    return SearchResult("UNSAT", nodes_explored=nodes, constraints=cons)


def independence_number(nbr: Sequence[int]) -> int:
    """Size of a largest independent set, by branch and bound over adjacency masks."""
    best = 0

    def grow(cand: int, size: int):
        nonlocal best
        if size + cand.bit_count() <= best:
            return
        if not cand:
            best = max(best, size)
            return
        low = cand & -cand
        v = low.bit_length() - 1
        grow(cand & ~nbr[v] & ~low, size + 1)
        grow(cand & ~low, size)

    grow((1 << len(nbr)) - 1, 0)
    return best


def _graph_signature(spec: GraphSpec, sig: Optional[Signature]) -> Signature:
    if sig is not None:
        if (sig.n, sig.a, sig.d) != (spec.n, spec.m, spec.d):
            raise InvalidDimensionError(f"signature {sig} does not give {spec}")
        return sig
    # only the graph matters: put the distance into undealt cards
    return Signature(spec.m, max(spec.n - spec.m - spec.d, 1), 0, spec.d) \
        if spec.n - spec.m - spec.d >= 1 else None


def chromatic_number_exact(spec: GraphSpec, cons_base: Constraints, k_max: int,
                           sig: Optional[Signature] = None) -> Optional[int]:
    """Least k for which ``cons_base`` (with message bound k) is satisfiable, None on timeout.

    Also None when no k up to ``k_max`` works.
    """
    sig = _graph_signature(spec, sig)
    if sig is None:
        # b would be empty: n = m + d, so every pair of hands is adjacent
        if cons_base.safety != "none":
            raise InvalidDimensionError(f"{spec} leaves no cards for B")
        count = comb(spec.n, spec.m)
        return count if count <= k_max else None
    for k in range(1, k_max + 1):
        res = find_coloring(sig, replace(cons_base, k=k, size_profile=None))
        if res.outcome == "TIMEOUT":
            return None
        if res.sat:
            return k
    return None


# -- exhaustive oracle over set partitions -------------------------------

PARTITION_LIMIT = 12


@dataclass
class PartitionCheck:
    exists: bool
    count: int
    examined: int
    first: Optional[Coloring] = None
    matches: list = field(default_factory=list)


def exhaustive_partition_check(sig: Signature, predicate: str = "proper_and_safe",
                               keep: bool = True) -> PartitionCheck:
    """Try every set partition of the a-hands as a coloring.

    Both properties hold for a partition exactly when they hold for each block
    on its own, so blocks are judged once and cached.
    """
    if predicate != "proper_and_safe":
        raise InvalidDimensionError(f"unknown predicate {predicate!r}")
    masks = hand_masks(sig.n, sig.a)
    V = len(masks)
    if V > PARTITION_LIMIT:
        raise InstanceTooLargeError(f"{V} hands; exhaustive partitions are limited to {PARTITION_LIMIT}")
    threshold = sig.a - sig.d
    full = (1 << sig.n) - 1
    c_hands = hand_masks(sig.n, sig.c)
    cache: dict[int, bool] = {}

    def good_block(block: int) -> bool:
        hit = cache.get(block)
        if hit is not None:
            return hit
        hands = [masks[i] for i in _bits(block)]
        ok = sig.d == 0 or all((x & y).bit_count() < threshold for x, y in combinations(hands, 2))
        if ok:
            for cm in c_hands:
                union, inter, seen = 0, full, False
                for h in hands:
                    if not h & cm:
                        union |= h
                        inter &= h
                        seen = True
                if seen and (inter or union != full & ~cm):
                    ok = False
                    break
        cache[block] = ok
        return ok

    result = PartitionCheck(False, 0, 0)
    blocks: list[int] = []

    def place(i: int):
        if i == V:
            result.examined += 1
            if all(good_block(b) for b in blocks):
                result.count += 1
                if keep:
                    colors = [0] * V
                    for j, b in enumerate(blocks):
                        for v in _bits(b):
                            colors[v] = j
                    result.matches.append(Coloring(sig.n, sig.a, tuple(colors)))
            return
        bit = 1 << i
        for j in range(len(blocks)):
            blocks[j] |= bit
            place(i + 1)
            blocks[j] &= ~bit
        blocks.append(bit)
        place(i + 1)
        blocks.pop()

    place(0)
    result.exists = result.count > 0
    if result.matches:
        result.first = result.matches[0]
    return result


# -- class-size bounds for six-message solutions -------------------------

def max_class_size(sig: Signature) -> int:
    """Largest color class of a proper coloring: the independence number of J^{c+r}(n, a)."""
    prob = Problem(sig.n, sig.a, sig.d, sig.c, sig.b, Constraints("proper", "none", k=1, capacity_bound=False))
    return independence_number(prob.nbr)


def safe_class(sig: Signature, block: Sequence[int]) -> bool:
    """Whether one class (hand masks) is safe against every C hand on its own."""
    full = (1 << sig.n) - 1
    for cm in hand_masks(sig.n, sig.c):
        union, inter, seen = 0, full, False
        for h in block:
            if not h & cm:
                union |= h
                inter &= h
                seen = True
        if seen and (inter or union != full & ~cm):
            return False
    return True


def min_class_size(sig: Signature, limit: Optional[int] = None) -> Optional[int]:
    """Smallest independent set of J^{c+r}(n, a) that is safe as a class, or None above ``limit``."""
    masks = hand_masks(sig.n, sig.a)
    threshold = sig.a - sig.d
    limit = limit or len(masks)
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 10 * len(masks)))

    def extend(block: list[int], start: int, size: int) -> bool:
        if len(block) == size:
            return safe_class(sig, block)
        for i in range(start, len(masks)):
            h = masks[i]
            if all((h & x).bit_count() < threshold for x in block):
                block.append(h)
                if extend(block, i + 1, size):
                    return True
                block.pop()
        return False

    for size in range(1, limit + 1):
        if extend([], 0, size):
            return size
    return None


def class_size_profiles(total: int, parts: int, low: int, high: int) -> list[tuple[int, ...]]:
    """Every multiset of ``parts`` sizes in ``[low, high]`` summing to ``total``, largest first."""
    out = []

    def build(prefix: list[int], remaining: int, cap: int):
        slots = parts - len(prefix)
        if slots == 0:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        for s in range(min(cap, remaining - low * (slots - 1)), low - 1, -1):
            if s * slots < remaining:
                break
            build(prefix + [s], remaining - s, s)

    build([], total, high)
    return out


def uniform_profiles(profiles: Sequence[tuple[int, ...]], high: int) -> list[tuple[int, ...]]:
    """Profiles with at most one class of the maximal size ``high``."""
    return [p for p in profiles if p.count(high) <= 1]
