"""Pure-Python search core over bitmask digraphs.

Every function here has a compiled twin in ``semigrundy._ckernels``;
``semigrundy.kernels`` picks whichever is importable. Digraphs enter as a
vertex count plus one out-neighbor bitmask per vertex, vertex subsets
travel as plain ints, and value assignments as tuples. The two backends
must stay behaviorally identical; tests/test_backend_parity.py enforces it.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

BACKEND_NAME = "pure-python"
MAX_N = 1 << 20  # arbitrary-precision ints: no practical vertex cap
MAX_SCAN_N = 7

# Predicate ids shared with the compiled backend and the explorer.
PRED_SEMIKERNEL_NOT_SEMIGRUNDY = 1
PRED_SEMIGRUNDY_NOT_GRUNDY = 2
PRED_SEMIGRUNDY_NOT_KERNEL = 3
PRED_SEMIGRUNDY_NOT_HEREDITARY = 4
PRED_GRUNDY_GAP_AT_LEAST = 5
PRED_CX_HEREDITARY_SK_KERNEL = 11
PRED_CX_GRUNDY_ZERO_KERNEL = 12
PRED_CX_KP_GRUNDY = 13
PRED_CX_SG_SK = 14
PRED_CX_HEREDITARY_SK_SG = 15


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ---------------------------------------------------------------------------
# subset predicates on induced subdigraphs

def is_kernel_in(rows, sub, nmask) -> bool:
    """Is ``nmask`` a kernel of the subdigraph induced by ``sub``?

    Requires nmask <= sub. Empty nmask is a kernel only of the empty sub.
    """
    for v in _bits(nmask):
        if rows[v] & nmask:
            return False
    for z in _bits(sub & ~nmask):
        if not rows[z] & nmask:
            return False
    return True


def is_semi_kernel_in(rows, sub, smask) -> bool:
    """Is ``smask`` a (nonempty) semi-kernel of the subdigraph on ``sub``?"""
    if not smask:
        return False
    for v in _bits(smask):
        if rows[v] & smask:
            return False
    for v in _bits(smask):
        for z in _bits(rows[v] & sub & ~smask):
            if not rows[z] & smask:
                return False
    return True


def _next_same_popcount(mask: int) -> int:
    # Gosper's hack: next larger int with the same number of set bits.
    c = mask & -mask
    r = mask + c
    return (((r ^ mask) >> 2) // c) | r


def kernel_search(n, rows):
    """Least kernel under (cardinality, bitmask) order.

    Returns (mask, subsets_tested); mask is -1 when no kernel exists.
    The empty digraph has the empty kernel.
    """
    if n == 0:
        return 0, 1
    full = (1 << n) - 1
    nodes = 0
    for k in range(1, n + 1):
        mask = (1 << k) - 1
        while mask <= full:
            nodes += 1
            if is_kernel_in(rows, full, mask):
                return mask, nodes
            mask = _next_same_popcount(mask)
    return -1, nodes


def semi_kernel_search(n, rows):
    """Least nonempty semi-kernel under (cardinality, bitmask) order."""
    if n == 0:
        return -1, 0
    full = (1 << n) - 1
    nodes = 0
    for k in range(1, n + 1):
        mask = (1 << k) - 1
        while mask <= full:
            nodes += 1
            if is_semi_kernel_in(rows, full, mask):
                return mask, nodes
            mask = _next_same_popcount(mask)
    return -1, nodes


# ---------------------------------------------------------------------------
# semi-Grundy decision via semi-kernel stripping, memoized over subsets
#
# A digraph has a semi-Grundy labeling iff it is empty or some semi-kernel S
# exists whose removal leaves a digraph that again has one: the minimum
# value class of any labeling is such an S, and conversely value 0 on S plus
# a shifted labeling of the rest is valid.

def semi_grundy_memo(n, rows) -> bytearray:
    """memo[m] == 1 iff the subdigraph induced by mask ``m`` has a semi-Grundy."""
    size = 1 << n
    memo = bytearray(size)
    memo[0] = 1
    for m in range(1, size):
        s = m
        while s:
            if memo[m & ~s] and is_semi_kernel_in(rows, m, s):
                memo[m] = 1
                break
            s = (s - 1) & m
    return memo


def has_semi_grundy(n, rows) -> bool:
    return bool(semi_grundy_memo(n, rows)[(1 << n) - 1])


def kernel_perfect(n, rows):
    """Does every induced subdigraph have a kernel?

    Returns (ok, failing_mask, nodes); failing_mask is -1 when kernel-perfect,
    otherwise the numerically least kernel-less vertex subset.
    """
    nodes = 0
    for m in range(1, 1 << n):
        s = 0
        found = False
        while True:
            nodes += 1
            if is_kernel_in(rows, m, s):
                found = True
                break
            if s == m:
                break
            s = (s - m) & m
        if not found:
            return False, m, nodes
    return True, -1, nodes


def hereditary_semi_kernel(n, rows):
    """Does every nonempty induced subdigraph have a nonempty semi-kernel?"""
    nodes = 0
    for m in range(1, 1 << n):
        s = m
        found = False
        while s:
            nodes += 1
            if is_semi_kernel_in(rows, m, s):
                found = True
                break
            s = (s - 1) & m
        if not found:
            return False, m, nodes
    return True, -1, nodes


# ---------------------------------------------------------------------------
# Grundy backtracking
#
# Values are bounded by outdegree (a mex over d values is at most d).
# Assignments run in vertex order with ascending values, so the first
# complete labeling found is the lexicographically least one.

def _grundy_dfs(n, rows, visit):
    """Run the Grundy backtracking; call visit(g) at each valid labeling.

    visit returns True to stop the search. Returns total assignment attempts.
    """
    succ = [tuple(_bits(rows[v])) for v in range(n)]
    pred = [tuple(v for v in range(n) if rows[v] >> w & 1) for w in range(n)]
    g = [-1] * n
    pending = [len(succ[v]) for v in range(n)]  # unassigned successors
    nodes = 0

    def mex_at(v):
        vals = {g[y] for y in succ[v]}
        k = 0
        while k in vals:
            k += 1
        return k

    def dfs(v):
        nonlocal nodes
        if v == n:
            return visit(tuple(g))
        for c in range(len(succ[v]) + 1):
            nodes += 1
            if any(g[y] == c for y in succ[v]):
                continue
            if any(g[x] == c for x in pred[v]):
                continue
            g[v] = c
            for x in pred[v]:
                pending[x] -= 1
            ok = pending[v] == 0 and mex_at(v) != c
            ok = not ok
            if ok:
                for x in pred[v]:
                    if x != v and g[x] != -1 and pending[x] == 0 and mex_at(x) != g[x]:
                        ok = False
                        break
            if ok and dfs(v + 1):
                return True
            for x in pred[v]:
                pending[x] += 1
            g[v] = -1
        return False

    dfs(0)
    return nodes


def grundy_search(n, rows):
    """Lexicographically least Grundy labeling, or None."""
    if n == 0:
        return (), 0
    best = []

    def visit(g):
        best.append(g)
        return True

    nodes = _grundy_dfs(n, rows, visit)
    return (best[0] if best else None), nodes


def grundy_enumerate(n, rows):
    """All Grundy labelings in lexicographic order."""
    if n == 0:
        return [()], 0
    out = []

    def visit(g):
        out.append(g)
        return False

    nodes = _grundy_dfs(n, rows, visit)
    return out, nodes


def grundy_extrema(n, rows):
    """(count, min of maxima, max of maxima, nodes) over all Grundy labelings.

    The extrema are -1 when no labeling exists. The empty digraph has one
    labeling whose maximum is reported as -1 (empty maximum).
    """
    if n == 0:
        return 1, -1, -1, 0
    stats = [0, -1, -1]

    def visit(g):
        m = max(g)
        stats[0] += 1
        stats[1] = m if stats[0] == 1 else min(stats[1], m)
        stats[2] = max(stats[2], m)
        return False

    nodes = _grundy_dfs(n, rows, visit)
    return stats[0], stats[1], stats[2], nodes


def _grundy_zero_kernel_counterexample(n, rows) -> bool:
    """True iff some Grundy labeling exists whose zero class is not a kernel."""
    if n == 0:
        return False
    full = (1 << n) - 1
    hit = []

    def visit(g):
        zeros = 0
        for v, x in enumerate(g):
            if x == 0:
                zeros |= 1 << v
        if not is_kernel_in(rows, full, zeros):
            hit.append(g)
            return True
        return False

    _grundy_dfs(n, rows, visit)
    return bool(hit)


def has_grundy(n, rows) -> bool:
    return grundy_search(n, rows)[0] is not None


# ---------------------------------------------------------------------------
# semi-Grundy backtracking (normalized witness)
#
# Searches value vectors in lexicographic order. Condition 1 (no arc joins
# equal values) is checked on assignment; condition 2 (every value-raising
# arc is answered from the head back into the tail's class) is checked as
# soon as all three of tail value, head value and the head's full successor
# values are known. A complete vector is accepted only when its image is
# 0..max with no gap; the least valid vector is automatically gap-free
# because rank-relabeling never increases any entry.

def semi_grundy_search(n, rows):
    if n == 0:
        return (), 0
    succ = [tuple(_bits(rows[v])) for v in range(n)]
    pred = [tuple(v for v in range(n) if rows[v] >> w & 1) for w in range(n)]
    s = [-1] * n
    pending = [len(succ[v]) for v in range(n)]
    nodes = 0
    found = []

    def answered(x, y):
        # arc x -> y with s[x] < s[y]; head's successors fully assigned
        return any(s[z] == s[x] for z in succ[y])

    def check_around(v):
        # v was just assigned; verify every condition-2 instance that became
        # fully determined by this assignment.
        if pending[v] == 0:
            for x in pred[v]:
                if s[x] != -1 and s[x] < s[v] and not answered(x, v):
                    return False
        for y in succ[v]:
            if y != v and s[y] != -1 and pending[y] == 0 and s[v] < s[y]:
                if not answered(v, y):
                    return False
        for w in pred[v]:
            # v may have completed w's successor set
            if w != v and s[w] != -1 and pending[w] == 0:
                for x in pred[w]:
                    if s[x] != -1 and s[x] < s[w] and not answered(x, w):
                        return False
        return True

    def dfs(v):
        nonlocal nodes
        if v == n:
            top = max(s)
            if len(set(s)) == top + 1:
                found.append(tuple(s))
                return True
            return False
        if rows[v] >> v & 1:
            return False  # self-loop: no value admissible
        for c in range(n):
            nodes += 1
            if any(s[y] == c for y in succ[v]):
                continue
            if any(s[x] == c for x in pred[v]):
                continue
            s[v] = c
            for x in pred[v]:
                pending[x] -= 1
            if check_around(v) and dfs(v + 1):
                return True
            for x in pred[v]:
                pending[x] += 1
            s[v] = -1
        return False

    dfs(0)
    return (found[0] if found else None), nodes


# ---------------------------------------------------------------------------
# labeled digraph enumeration: mask encoding and canonicity

@lru_cache(maxsize=None)
def _pair_layout(n: int, include_loops: bool):
    pairs = tuple(
        (i, j)
        for i in range(n)
        for j in range(n)
        if include_loops or i != j
    )
    index = {p: k for k, p in enumerate(pairs)}
    return pairs, index


def mask_bit_count(n: int, include_loops: bool) -> int:
    return n * n if include_loops else n * (n - 1)


def decode_mask(n, mask, include_loops):
    """Out-neighbor rows of the digraph encoded by an arc bitmask."""
    pairs, _ = _pair_layout(n, include_loops)
    rows = [0] * n
    for b in _bits(mask):
        i, j = pairs[b]
        rows[i] |= 1 << j
    return tuple(rows)


def encode_rows(n, rows, include_loops) -> int:
    _, index = _pair_layout(n, include_loops)
    mask = 0
    for i in range(n):
        for j in _bits(rows[i]):
            mask |= 1 << index[(i, j)]
    return mask


@lru_cache(maxsize=None)
def _perm_tables(n: int, include_loops: bool):
    # bit b of a mask moves to table[b] under each vertex permutation
    pairs, index = _pair_layout(n, include_loops)
    tables = []
    for perm in permutations(range(n)):
        tables.append(tuple(index[(perm[i], perm[j])] for i, j in pairs))
    return tuple(tables)


def is_canonical_mask(n, mask, include_loops) -> bool:
    """Is ``mask`` minimal over all vertex relabelings of its digraph?"""
    for table in _perm_tables(n, include_loops):
        permuted = 0
        for b in _bits(mask):
            permuted |= 1 << table[b]
        if permuted < mask:
            return False
    return True


# ---------------------------------------------------------------------------
# predicate evaluation and the enumeration scan

def _hereditary_sk_holds(n, rows) -> bool:
    return hereditary_semi_kernel(n, rows)[0]


def evaluate_predicate(pred, n, rows, param) -> bool:
    if pred == PRED_SEMIKERNEL_NOT_SEMIGRUNDY:
        if semi_kernel_search(n, rows)[0] < 0:
            return False
        return not has_semi_grundy(n, rows)
    if pred == PRED_SEMIGRUNDY_NOT_GRUNDY:
        return has_semi_grundy(n, rows) and not has_grundy(n, rows)
    if pred == PRED_SEMIGRUNDY_NOT_KERNEL:
        if kernel_search(n, rows)[0] >= 0:
            return False
        return has_semi_grundy(n, rows)
    if pred == PRED_SEMIGRUNDY_NOT_HEREDITARY:
        memo = semi_grundy_memo(n, rows)
        full = (1 << n) - 1
        if not memo[full]:
            return False
        return any(memo[m] == 0 for m in range(1, full))
    if pred == PRED_GRUNDY_GAP_AT_LEAST:
        count, lo, hi, _ = grundy_extrema(n, rows)
        return count >= 1 and hi - lo >= param
    if pred == PRED_CX_HEREDITARY_SK_KERNEL:
        if kernel_search(n, rows)[0] >= 0:
            return False
        return _hereditary_sk_holds(n, rows)
    if pred == PRED_CX_GRUNDY_ZERO_KERNEL:
        return _grundy_zero_kernel_counterexample(n, rows)
    if pred == PRED_CX_KP_GRUNDY:
        if has_grundy(n, rows):
            return False
        return kernel_perfect(n, rows)[0]
    if pred == PRED_CX_SG_SK:
        if semi_kernel_search(n, rows)[0] >= 0:
            return False
        return has_semi_grundy(n, rows)
    if pred == PRED_CX_HEREDITARY_SK_SG:
        if has_semi_grundy(n, rows):
            return False
        return _hereditary_sk_holds(n, rows)
    raise ValueError(f"unknown predicate id {pred}")


def scan_digraphs(n, lo, hi, include_loops, iso, pred, param):
    """Scan arc bitmasks in [lo, hi) for the first digraph matching ``pred``.

    Returns (mask, tested): mask is -1 when no hit; tested counts digraphs
    actually evaluated (canonical ones only when ``iso`` is set).
    """
    tested = 0
    for mask in range(lo, hi):
        if iso and not is_canonical_mask(n, mask, include_loops):
            continue
        tested += 1
        rows = decode_mask(n, mask, include_loops)
        if evaluate_predicate(pred, n, rows, param):
            return mask, tested
    return -1, tested
