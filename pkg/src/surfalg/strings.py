"""Words, strings and bands over a quiver presentation with monomial relations.

A word is a sequence of letters; a letter is an arrow traversed forward
(direct), backward (inverse), or a special loop (its own inverse).  Words
compose left to right: the end vertex of each letter is the start vertex of
the next.  A word w is a string when

  W3: consecutive letters are composable,
  W1: no letter is followed by its own inverse,
  W2: no factor of w or of w^-1 spells a forbidden word, and
  additionally every junction pair (l_i^-1, l_{i+1}) is incomparable in the
  comparability order carried by the presentation.

Forbidden words that involve special loops are inert for W2: the special
letter formalism already accounts for them, so only the forbidden words
without special arrows are matched against factors.

A band is a closed primitive word w such that w^m is a string for m large
enough to expose every cyclic junction and every cyclic factor up to the
longest effective forbidden word.  Bands are canonicalized to the
lexicographically least rotation; a band and its inverse are kept distinct.
"""

import collections
from dataclasses import dataclass, field as dc_field

__all__ = [
    "Letter",
    "ForbiddenWord",
    "WordPresentation",
    "Incompatibility",
    "StringCheck",
    "BandCheck",
    "CounterExample",
    "FreeComposability",
    "BandCensus",
    "direct",
    "inverse",
    "special",
    "invert_letter",
    "invert_word",
    "parse_word",
    "format_word",
    "letter_key",
    "sphere5_presentation",
    "string_quotient",
    "is_string",
    "is_band",
    "canonical_band",
    "compose",
    "free_composability",
    "build_xi",
    "rho1",
    "rho2",
    "enumerate_bands",
    "growth_report",
]

DIRECT = "direct"
INVERSE = "inverse"
SPECIAL = "special"


@dataclass(frozen=True, order=False)
class Letter:
    arrow: str
    kind: str

    def __post_init__(self):
        if self.kind not in (DIRECT, INVERSE, SPECIAL):
            raise ValueError("unknown letter kind %r" % (self.kind,))

    def __repr__(self):
        return "Letter(%r, %s)" % (self.arrow, self.kind)


def direct(arrow):
    return Letter(arrow, DIRECT)


def inverse(arrow):
    return Letter(arrow, INVERSE)


def special(arrow):
    return Letter(arrow, SPECIAL)


def invert_letter(l):
    if l.kind == DIRECT:
        return Letter(l.arrow, INVERSE)
    if l.kind == INVERSE:
        return Letter(l.arrow, DIRECT)
    return l


def invert_word(w):
    return tuple(invert_letter(l) for l in reversed(w))


def letter_key(l):
    """Total order on letters: by arrow id, non-inverse before inverse."""
    return (l.arrow, 0 if l.kind != INVERSE else 1)


def word_key(w):
    return tuple(letter_key(l) for l in w)


def format_word(w):
    parts = []
    for l in w:
        if l.kind == DIRECT:
            parts.append(l.arrow)
        elif l.kind == INVERSE:
            parts.append(l.arrow + "'")
        else:
            parts.append(l.arrow + "*")
    return ".".join(parts)


def parse_word(text):
    """Parse a dot-separated word: a1 direct, a1' inverse, eps2* special."""
    if not isinstance(text, str) or not text.strip():
        raise ValueError("empty word text")
    out = []
    for tok in text.strip().split("."):
        tok = tok.strip()
        if not tok:
            raise ValueError("empty letter in word text %r" % (text,))
        if tok.endswith("*"):
            out.append(special(tok[:-1]))
        elif tok.endswith("'"):
            out.append(inverse(tok[:-1]))
        else:
            out.append(direct(tok))
        aid = out[-1].arrow
        if not aid or "'" in aid or "*" in aid:
            raise ValueError("bad letter %r in word text %r" % (tok, text))
    return tuple(out)


@dataclass(frozen=True)
class ForbiddenWord:
    """A monomial relation, as the tuple of its arrow ids in composition order.

    special_quadratic marks the square of a special loop (the relation that
    makes the loop idempotent); like every forbidden word touching a special
    arrow it is inert for the factor condition W2.
    """

    arrows: tuple
    special_quadratic: bool = False

    def __post_init__(self):
        object.__setattr__(self, "arrows", tuple(self.arrows))
        if not self.arrows:
            raise ValueError("empty forbidden word")


@dataclass(frozen=True)
class Incompatibility:
    """One violated condition, at a 1-based letter position."""

    kind: str
    position: int
    detail: str


@dataclass(frozen=True)
class StringCheck:
    word: tuple
    ok: bool
    violations: tuple


@dataclass(frozen=True)
class BandCheck:
    word: tuple
    ok: bool
    violations: tuple
    power: int


class WordPresentation:
    """Arrows with endpoints, special loops, forbidden words, comparability.

    comparability is a tuple of (smaller, larger) Letter pairs; the order
    used for the junction condition is the reflexive transitive closure of
    exactly these pairs.  Each pair must share its end vertex.
    """

    def __init__(self, name, vertices, arrows, special_ids, forbidden,
                 comparability=()):
        self.name = name
        self.vertices = tuple(vertices)
        self.arrows = dict(arrows)
        self.special_ids = frozenset(special_ids)
        self.forbidden = tuple(forbidden)
        self.comparability = tuple(comparability)
        vset = set(self.vertices)
        for aid, (s, t) in self.arrows.items():
            if s not in vset or t not in vset:
                raise ValueError("arrow %r has unknown endpoint" % (aid,))
        for aid in self.special_ids:
            if aid not in self.arrows:
                raise ValueError("special id %r is not an arrow" % (aid,))
            s, t = self.arrows[aid]
            if s != t:
                raise ValueError("special arrow %r is not a loop" % (aid,))
        for f in self.forbidden:
            for aid in f.arrows:
                if aid not in self.arrows:
                    raise ValueError(
                        "forbidden word uses unknown arrow %r" % (aid,))
            for x, y in zip(f.arrows, f.arrows[1:]):
                if self.arrows[x][1] != self.arrows[y][0]:
                    raise ValueError(
                        "forbidden word %r is not composable" % (f.arrows,))
        for x, y in self.comparability:
            self.validate_letter(x)
            self.validate_letter(y)
            if self.end(x) != self.end(y):
                raise ValueError(
                    "comparability pair (%s, %s) does not share its end vertex"
                    % (format_word([x]), format_word([y])))
        self._effective = tuple(
            f for f in self.forbidden
            if not any(aid in self.special_ids for aid in f.arrows)
        )
        self._max_eff = max((len(f.arrows) for f in self._effective), default=0)
        self._eff2 = {f.arrows for f in self._effective if len(f.arrows) == 2}
        self._eff_long = tuple(
            f.arrows for f in self._effective if len(f.arrows) >= 3)
        self._eff1 = {f.arrows for f in self._effective if len(f.arrows) == 1}
        greater = collections.defaultdict(set)
        for x, y in self.comparability:
            greater[x].add(y)
        changed = True
        while changed:
            changed = False
            for x in list(greater):
                new = set()
                for y in greater[x]:
                    new |= greater.get(y, set())
                if not new <= greater[x]:
                    greater[x] |= new
                    changed = True
        self._greater = dict(greater)

    def validate_letter(self, l):
        if not isinstance(l, Letter):
            raise ValueError("not a letter: %r" % (l,))
        if l.arrow not in self.arrows:
            raise ValueError("unknown arrow %r in letter" % (l.arrow,))
        if l.kind == SPECIAL and l.arrow not in self.special_ids:
            raise ValueError("arrow %r is not special" % (l.arrow,))
        if l.kind != SPECIAL and l.arrow in self.special_ids:
            raise ValueError(
                "special arrow %r must be used as a special letter" % (l.arrow,))

    def start(self, l):
        s, t = self.arrows[l.arrow]
        return t if l.kind == INVERSE else s

    def end(self, l):
        s, t = self.arrows[l.arrow]
        return s if l.kind == INVERSE else t

    @property
    def effective_forbidden(self):
        return self._effective

    @property
    def max_effective_forbidden(self):
        return self._max_eff

    def comparable(self, x, y):
        if x == y:
            return True
        return y in self._greater.get(x, ()) or x in self._greater.get(y, ())

    def letters(self):
        """All valid letters, sorted by letter_key."""
        out = []
        for aid in self.arrows:
            if aid in self.special_ids:
                out.append(special(aid))
            else:
                out.append(direct(aid))
                out.append(inverse(aid))
        out.sort(key=letter_key)
        return out

    def __repr__(self):
        return "WordPresentation(%r, %d vertices, %d arrows, %d forbidden)" % (
            self.name, len(self.vertices), len(self.arrows),
            len(self.forbidden))


def sphere5_presentation():
    """The 12-arrow skewed-gentle presentation used by the growth certificate.

    Three special loops; the forbidden words comprise the special squares,
    nine quadratic words, and eleven longer words, of which exactly one
    avoids the special loops and is therefore effective for W2.
    """
    vertices = ("1", "2", "3", "4", "5", "6")
    arrows = {
        "a1": ("1", "2"),
        "a2": ("3", "2"),
        "a3": ("3", "1"),
        "b1": ("2", "4"),
        "b2": ("2", "5"),
        "b3": ("1", "6"),
        "c1": ("4", "1"),
        "c2": ("5", "3"),
        "c3": ("6", "3"),
        "eps1": ("4", "4"),
        "eps2": ("5", "5"),
        "eps3": ("6", "6"),
    }
    forbidden = [
        ForbiddenWord(("eps1", "eps1"), special_quadratic=True),
        ForbiddenWord(("eps2", "eps2"), special_quadratic=True),
        ForbiddenWord(("eps3", "eps3"), special_quadratic=True),
    ]
    for i in "123":
        forbidden.append(ForbiddenWord(("a" + i, "b" + i)))
        forbidden.append(ForbiddenWord(("b" + i, "c" + i)))
        forbidden.append(ForbiddenWord(("c" + i, "a" + i)))
    forbidden += [
        ForbiddenWord(("b2", "eps2", "c2", "a3")),
        ForbiddenWord(("eps2", "c2", "a3", "a1")),
        ForbiddenWord(("c2", "a3", "a1", "b2")),
        ForbiddenWord(("a1", "b2", "eps2", "c2")),
        ForbiddenWord(("eps3", "c3", "a2", "b1", "eps1", "c1")),
        ForbiddenWord(("c3", "a2", "b1", "eps1", "c1", "b3")),
        ForbiddenWord(("a2", "b1", "eps1", "c1", "b3", "eps3")),
        ForbiddenWord(("b1", "eps1", "c1", "b3", "eps3", "c3")),
        ForbiddenWord(("eps1", "c1", "b3", "eps3", "c3", "a2")),
        ForbiddenWord(("c1", "b3", "eps3", "c3", "a2", "b1")),
        ForbiddenWord(("b3", "eps3", "c3", "a2", "b1", "eps1")),
    ]
    comparability = []
    for i in "123":
        comparability.append((direct("a" + i), inverse("b" + i)))
        comparability.append((direct("b" + i), inverse("c" + i)))
        comparability.append((direct("c" + i), inverse("a" + i)))
    return WordPresentation(
        "sphere5", vertices, arrows, ("eps1", "eps2", "eps3"),
        forbidden, comparability)


def string_quotient(q, maps, name=None):
    """String presentation obtained by killing every composition x f(x).

    The forbidden words are exactly the two-arrow paths {x f(x)}, one per
    arrow; no special loops and an empty comparability order.  Requires
    every cycle orbit to have length at least 4.
    """
    short = sorted(orb[0] for orb in maps.g_orbits() if len(orb) < 4)
    if short:
        raise ValueError(
            "cycle orbit of arrow %r has length %d < 4"
            % (short[0], len(maps.g_orbit(short[0]))))
    arrows = {a.id: (a.source, a.target) for a in q.arrows}
    forbidden = []
    for aid in sorted(arrows):
        forbidden.append(ForbiddenWord((aid, maps.f[aid])))
    return WordPresentation(
        name or "string-quotient",
        sorted(q.vertices), arrows, (), forbidden, ())


def _w2_window_violations(p, w, j):
    """Effective forbidden factors ending at 0-based position j."""
    out = []
    for arrows in _all_effective(p):
        L = len(arrows)
        s = j - L + 1
        if s < 0:
            continue
        seg = w[s : j + 1]
        if all(l.kind == DIRECT for l in seg):
            if tuple(l.arrow for l in seg) == arrows:
                out.append(Incompatibility(
                    "W2", s + 1,
                    "letters %d-%d spell forbidden word %s"
                    % (s + 1, j + 1, ".".join(arrows))))
        if all(l.kind == INVERSE for l in seg):
            if tuple(l.arrow for l in reversed(seg)) == arrows:
                out.append(Incompatibility(
                    "W2", s + 1,
                    "letters %d-%d spell the inverse of forbidden word %s"
                    % (s + 1, j + 1, ".".join(arrows))))
    return out


def _all_effective(p):
    return [f.arrows for f in p.effective_forbidden]


def is_string(p, w):
    """Check the string conditions; returns every violation found.

    Violations are reported junction by junction, and at each junction in
    the order W3, W1, W2 (factors ending at the newly added letter,
    positioned at the factor start), incomparability.  Positions are
    1-based letter indices.
    """
    w = tuple(w)
    if not w:
        raise ValueError("empty word")
    for l in w:
        p.validate_letter(l)
    viols = list(_w2_window_violations(p, w, 0))
    for i in range(len(w) - 1):
        x, y = w[i], w[i + 1]
        if p.end(x) != p.start(y):
            viols.append(Incompatibility(
                "W3", i + 1,
                "letters %d and %d do not compose (%s ends at %s, %s starts at %s)"
                % (i + 1, i + 2, format_word([x]), p.end(x),
                   format_word([y]), p.start(y))))
        if y == invert_letter(x):
            viols.append(Incompatibility(
                "W1", i + 1,
                "letter %d is the inverse of letter %d" % (i + 2, i + 1)))
        viols.extend(_w2_window_violations(p, w, i + 1))
        if p.comparable(invert_letter(x), y):
            viols.append(Incompatibility(
                "incomparability", i + 1,
                "junction pair (%s, %s) is comparable"
                % (format_word([invert_letter(x)]), format_word([y]))))
    return StringCheck(w, not viols, tuple(viols))


def _min_period(w):
    n = len(w)
    fail = [0] * n
    k = 0
    for i in range(1, n):
        while k and w[i] != w[k]:
            k = fail[k - 1]
        if w[i] == w[k]:
            k += 1
        fail[i] = k
    return n - fail[n - 1]


def is_primitive(w):
    w = tuple(w)
    if not w:
        return False
    per = _min_period(w)
    return per == len(w) or len(w) % per != 0


def is_band(p, w):
    """Closed, primitive, and stringy in every cyclic reading.

    The cyclic conditions are checked on the power w^m with
    m = max(2, ceil(maxF / |w|) + 1) where maxF is the longest effective
    forbidden word; this exposes every cyclic junction and every cyclic
    factor of length up to maxF.
    """
    w = tuple(w)
    if not w:
        raise ValueError("empty word")
    for l in w:
        p.validate_letter(l)
    viols = []
    if p.end(w[-1]) != p.start(w[0]):
        viols.append(Incompatibility(
            "closed", len(w),
            "word ends at %s but starts at %s"
            % (p.end(w[-1]), p.start(w[0]))))
    if not is_primitive(w):
        viols.append(Incompatibility(
            "primitive", 1,
            "word is a proper power (least period %d)" % _min_period(w)))
    if viols:
        return BandCheck(w, False, tuple(viols), 0)
    maxf = p.max_effective_forbidden
    m = max(2, -(-maxf // len(w)) + 1)
    sc = is_string(p, w * m)
    return BandCheck(w, sc.ok, sc.violations, m)


def canonical_band(w):
    """Lexicographically least rotation under the letter order."""
    w = tuple(w)
    if not w:
        raise ValueError("empty word")
    best = w
    bk = word_key(w)
    for i in range(1, len(w)):
        r = w[i:] + w[:i]
        rk = word_key(r)
        if rk < bk:
            best, bk = r, rk
    return best


def compose(*words):
    out = ()
    for w in words:
        out = out + tuple(w)
    return out


@dataclass(frozen=True)
class CounterExample:
    """A composition pattern that fails the band check."""

    symbols: str
    word: tuple
    check: object
    reason: str


@dataclass(frozen=True)
class FreeComposability:
    """Evidence that two bands compose freely up to a pattern depth.

    Every primitive necklace over the two block symbols, up to the stated
    depth, composes to a band after both blocks are rotated to a common
    basepoint.  junctions records the four block-boundary analyses; the
    necklace list is replayable without any enumeration.
    """

    presentation_name: str
    word1: tuple
    word2: tuple
    basepoint: str
    depth: int
    max_forbidden: int
    junctions: tuple
    necklaces: tuple


def _rotations_at(p, w, v):
    return [w[i:] + w[:i] for i in range(len(w)) if p.start(w[i]) == v]


def _lyndon_words(alphabet, maxlen):
    """All Lyndon words over the ordered alphabet, lengths 1..maxlen."""
    k = len(alphabet)
    w = [0]
    out = []
    while w:
        if len(w) <= maxlen:
            out.append(tuple(alphabet[c] for c in w))
        t = len(w)
        while len(w) < maxlen:
            w.append(w[-t])
        while w and w[-1] == k - 1:
            w.pop()
        if w:
            w[-1] += 1
    out.sort(key=lambda s: (len(s), s))
    return out


def _cross_seam_w2(p, left, right):
    """Effective forbidden factors of left+right that straddle the seam."""
    w = left + right
    out = []
    hi = min(len(w), len(left) + max(p.max_effective_forbidden, 1) - 1)
    for j in range(len(left), hi):
        for v in _w2_window_violations(p, w, j):
            if v.position <= len(left):
                out.append(v.detail)
    return tuple(out)


def _junction_record(p, label, left, right):
    x, y = left[-1], right[0]
    viols = []
    if p.end(x) != p.start(y):
        viols.append("W3")
    if y == invert_letter(x):
        viols.append("W1")
    if p.comparable(invert_letter(x), y):
        viols.append("incomparability")
    seam = _cross_seam_w2(p, left, right)
    if seam:
        viols.append("W2")
    return {
        "blocks": label,
        "last": format_word([x]),
        "first": format_word([y]),
        "violations": tuple(viols),
        "seam_factors": seam,
    }


def free_composability(p, w1, w2, depth=6):
    """Certify that all mixed compositions of two bands remain bands.

    Rotates both bands to their least common vertex, analyzes the four
    block junctions, then composes every primitive necklace over the block
    symbols 1 and 2 up to the given depth and runs the full band check on
    each.  Returns a FreeComposability certificate, or a CounterExample at
    the first failing pattern.
    """
    w1, w2 = tuple(w1), tuple(w2)
    b1 = is_band(p, w1)
    if not b1.ok:
        raise ValueError("first word is not a band: %s" % (b1.violations,))
    b2 = is_band(p, w2)
    if not b2.ok:
        raise ValueError("second word is not a band: %s" % (b2.violations,))
    common = {p.start(l) for l in w1} & {p.start(l) for l in w2}
    if not common:
        return CounterExample(
            "", (), None, "the bands visit disjoint vertex sets")
    v0 = min(common)
    r1 = min(_rotations_at(p, w1, v0), key=word_key)
    r2 = min(_rotations_at(p, w2, v0), key=word_key)
    blocks = {"1": r1, "2": r2}
    junctions = tuple(
        _junction_record(p, a + b, blocks[a], blocks[b])
        for a, b in (("1", "1"), ("1", "2"), ("2", "1"), ("2", "2"))
    )
    necklaces = []
    for sym in _lyndon_words("12", depth):
        word = compose(*(blocks[s] for s in sym))
        bc = is_band(p, word)
        if not bc.ok:
            return CounterExample(
                "".join(sym), word, bc,
                "composition pattern %s fails the band check" % "".join(sym))
        necklaces.append(("".join(sym), len(word), True))
    return FreeComposability(
        presentation_name=p.name,
        word1=r1,
        word2=r2,
        basepoint=v0,
        depth=depth,
        max_forbidden=p.max_effective_forbidden,
        junctions=junctions,
        necklaces=tuple(necklaces),
    )


def rho1(maps, alpha, companion_rule="figure"):
    """First flank of the cycle construction, as a tuple of arrow ids."""
    gamma, beta = _companions(maps, alpha, companion_rule)
    orbit = maps.g_orbit(gamma)
    n = len(orbit)
    return tuple(orbit[k] for k in range(2, n))


def rho2(maps, alpha, companion_rule="figure"):
    """Second flank of the cycle construction, as a tuple of arrow ids."""
    gamma, beta = _companions(maps, alpha, companion_rule)
    orbit = maps.g_orbit(beta)
    n = len(orbit)
    return tuple(orbit[k] for k in range(1, n - 1))


def _companions(maps, alpha, companion_rule):
    if companion_rule == "figure":
        gamma = maps.f[alpha]
        beta = maps.f[gamma]
    elif companion_rule == "swapped":
        beta = maps.f[alpha]
        gamma = maps.f[beta]
    else:
        raise ValueError("unknown companion rule %r" % (companion_rule,))
    return gamma, beta


def build_xi(maps, alpha, companion_rule="figure"):
    """The closed word (alpha)(rho1)^-1(delta)(rho2)^-1 around two cycles.

    alpha is an arrow id; gamma and beta are the other two arrows of its
    triangle, delta = f(g(gamma)) is the matching arrow of the neighboring
    triangle.  Requires both cycle orbits to have length at least 3
    (puncture valency at least 4 guarantees this with room to spare).
    """
    gamma, beta = _companions(maps, alpha, companion_rule)
    n_gamma = maps.orbit_length(gamma)
    n_beta = maps.orbit_length(beta)
    if n_gamma < 3 or n_beta < 3:
        raise ValueError(
            "cycle orbits too short (lengths %d and %d; need at least 3)"
            % (n_gamma, n_beta))
    delta = maps.f[maps.g[gamma]]
    word = [direct(alpha)]
    word.extend(inverse(a) for a in reversed(rho1(maps, alpha, companion_rule)))
    word.append(direct(delta))
    word.extend(inverse(a) for a in reversed(rho2(maps, alpha, companion_rule)))
    return tuple(word)


@dataclass(frozen=True)
class BandCensus:
    """All bands up to a length bound, in canonical rotation.

    words holds every band found, sorted by length then letter order;
    counts[d-1] is the number of bands of length d.
    """

    presentation_name: str
    max_len: int
    words: tuple
    counts: tuple
    _index: frozenset = dc_field(repr=False, default=frozenset())

    def count(self, d):
        return self.counts[d - 1]

    @property
    def total(self):
        return sum(self.counts)

    def __contains__(self, w):
        return canonical_band(w) in self._index


def enumerate_bands(p, max_len):
    """Every band of length <= max_len, each in canonical rotation.

    Depth-first generation of prenecklaces over the letter order: a word is
    extended only while it remains the prefix of some lexicographically
    least rotation, junction transitions stay legal, no effective forbidden
    factor appears, and the word can still close within the length bound.
    Each collected word is a Lyndon word, so rotations are never produced
    twice; a full band check filters the remaining cyclic conditions.
    """
    letters = p.letters()
    L = len(letters)
    idx = {l: i for i, l in enumerate(letters)}
    eff2 = p._eff2
    eff1 = p._eff1
    allowed = [[False] * L for _ in range(L)]
    for i, x in enumerate(letters):
        if (x.kind == DIRECT and (x.arrow,) in eff1) or (
                x.kind == INVERSE and (x.arrow,) in eff1):
            continue
        for j, y in enumerate(letters):
            if (y.kind == DIRECT or y.kind == INVERSE) and (y.arrow,) in eff1:
                continue
            if p.end(x) != p.start(y):
                continue
            if y == invert_letter(x):
                continue
            if x.kind == DIRECT and y.kind == DIRECT and \
                    (x.arrow, y.arrow) in eff2:
                continue
            if x.kind == INVERSE and y.kind == INVERSE and \
                    (y.arrow, x.arrow) in eff2:
                continue
            if p.comparable(invert_letter(x), y):
                continue
            allowed[i][j] = True
    succ = [[j for j in range(L) if allowed[i][j]] for i in range(L)]
    pred = [[i for i in range(L) if allowed[i][j]] for j in range(L)]
    eff_long = p._eff_long

    def window_blocked(w, c):
        for arrows in eff_long:
            n = len(arrows)
            if len(w) + 1 < n:
                continue
            seg = w[len(w) - n + 1 :] + [c]
            if all(l.kind == DIRECT for l in seg) and \
                    tuple(l.arrow for l in seg) == arrows:
                return True
            if all(l.kind == INVERSE for l in seg) and \
                    tuple(l.arrow for l in reversed(seg)) == arrows:
                return True
        return False

    found = []
    for s0 in range(L):
        if (letters[s0].kind == DIRECT and (letters[s0].arrow,) in eff1) or \
                (letters[s0].kind == INVERSE and (letters[s0].arrow,) in eff1):
            continue
        dist = [None] * L
        frontier = [i for i in range(L) if allowed[i][s0]]
        for i in frontier:
            dist[i] = 0
        d = 0
        while frontier:
            nxt = []
            for j in frontier:
                for i in pred[j]:
                    if dist[i] is None:
                        dist[i] = d + 1
                        nxt.append(i)
            frontier = nxt
            d += 1
        if dist[s0] is None:
            continue
        w = [letters[s0]]
        widx = [s0]

        def rec(t, per):
            if per == t and allowed[widx[-1]][s0]:
                bc = is_band(p, tuple(w))
                if bc.ok:
                    found.append(tuple(w))
            if t == max_len:
                return
            base = widx[t - per]
            bkey = letter_key(letters[base])
            for c in succ[widx[-1]]:
                ck = letter_key(letters[c])
                if ck < bkey:
                    continue
                if dist[c] is None or t + 1 + dist[c] > max_len:
                    continue
                if window_blocked(w, letters[c]):
                    continue
                w.append(letters[c])
                widx.append(c)
                rec(t + 1, per if ck == bkey else t + 1)
                w.pop()
                widx.pop()

        rec(1, 1)
    found.sort(key=lambda u: (len(u), word_key(u)))
    counts = [0] * max_len
    for u in found:
        counts[len(u) - 1] += 1
    return BandCensus(
        presentation_name=p.name,
        max_len=max_len,
        words=tuple(found),
        counts=tuple(counts),
        _index=frozenset(found),
    )


def growth_report(census):
    """Counts, growth rates and inversion pairing for a band census."""
    rates = {}
    best = 0.0
    best_d = 0
    for d in range(1, census.max_len + 1):
        b = census.count(d)
        if b > 0:
            r = b ** (1.0 / d)
            rates[d] = r
            if r > best:
                best, best_d = r, d
    self_inv = 0
    for u in census.words:
        if canonical_band(invert_word(u)) == u:
            self_inv += 1
    return {
        "presentation": census.presentation_name,
        "max_len": census.max_len,
        "counts": {d: census.count(d) for d in range(1, census.max_len + 1)},
        "rates": rates,
        "max_rate": best,
        "argmax_length": best_d,
        "total": census.total,
        "self_inverse": self_inv,
        "up_to_inversion": (census.total + self_inv) // 2,
    }
