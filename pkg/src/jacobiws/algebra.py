"""Metrized Lie superalgebra data: structure constants, validation, the
built-in algebras, and normal ordering in the universal enveloping algebra.

Index conventions (all tensors over basis indices, sparse, rational):

* ``f[(i, j)]`` maps k -> coefficient of basis k in the bracket [v_i, v_j];
* ``kappa[(i, j)]`` is the invariant form on (v_i, v_j);
* ``b[(i, j)]`` is the inverse tensor, normalized so that
  sum_j kappa[i, j] * b[j, k] = delta_i^k.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache


@dataclass(frozen=True)
class Root:
    """One positive root: parity tag, the scaled raising/lowering vectors
    (coefficient times a basis element), and the coroot in Cartan coords."""

    parity: int
    x_index: int
    y_index: int
    h_coeffs: tuple
    x_coeff: Fraction = Fraction(1)
    y_coeff: Fraction = Fraction(1)


@dataclass(frozen=True)
class TriangularData:
    cartan: tuple  # basis indices spanning the Cartan subalgebra
    roots: tuple   # Root entries, listed in increasing root order


@dataclass(frozen=True, eq=False)
class AlgebraSpec:
    name: str
    dim: int
    parity: tuple
    basis_names: tuple
    f: dict = field(repr=False)
    kappa: dict = field(repr=False)
    b: dict = field(repr=False)
    triangular: TriangularData | None = None

    def bracket(self, i: int, j: int) -> dict:
        return self.f.get((i, j), {})

    def __hash__(self):
        return id(self)


# ---------------------------------------------------------------------------
# validation


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def validate_spec(a: AlgebraSpec) -> list:
    """Run every axiom; returns one CheckResult per axiom with the first
    violating index tuple in the detail."""
    out = []
    rng = range(a.dim)
    par = a.parity

    def sign(i, j):
        return -1 if par[i] and par[j] else 1

    def first_fail(predicate, indices):
        for idx in indices:
            if not predicate(*idx):
                return idx
        return None

    def f_entry(i, j, k):
        return a.f.get((i, j), {}).get(k, Fraction(0))

    bad = first_fail(
        lambda i, j, k: f_entry(i, j, k) == -sign(i, j) * f_entry(j, i, k),
        ((i, j, k) for i in rng for j in rng for k in rng),
    )
    out.append(CheckResult("super-antisymmetry", bad is None, str(bad or "")))

    bad = first_fail(
        lambda i, j, k: f_entry(i, j, k) == 0
        or (par[i] + par[j]) % 2 == par[k],
        ((i, j, k) for i in rng for j in rng for k in rng),
    )
    out.append(CheckResult("parity closure", bad is None, str(bad or "")))

    def jacobi(i, j, k):
        # [v_i,[v_j,v_k]] = [[v_i,v_j],v_k] + sign * [v_j,[v_i,v_k]]
        lhs = {}
        for m, c in a.bracket(j, k).items():
            for n, c2 in a.bracket(i, m).items():
                lhs[n] = lhs.get(n, 0) + c * c2
        rhs = {}
        for m, c in a.bracket(i, j).items():
            for n, c2 in a.bracket(m, k).items():
                rhs[n] = rhs.get(n, 0) + c * c2
        for m, c in a.bracket(i, k).items():
            for n, c2 in a.bracket(j, m).items():
                rhs[n] = rhs.get(n, 0) + sign(i, j) * c * c2
        return all(lhs.get(n, 0) == rhs.get(n, 0) for n in set(lhs) | set(rhs))

    bad = first_fail(jacobi, ((i, j, k) for i in rng for j in rng for k in rng))
    out.append(CheckResult("super-Jacobi", bad is None, str(bad or "")))

    def kappa_entry(i, j):
        return a.kappa.get((i, j), Fraction(0))

    bad = first_fail(
        lambda i, j: kappa_entry(i, j) == sign(i, j) * kappa_entry(j, i),
        ((i, j) for i in rng for j in rng),
    )
    out.append(CheckResult("supersymmetry of kappa", bad is None, str(bad or "")))

    def invariance(i, j, k):
        lhs = sum(
            (c * kappa_entry(m, k) for m, c in a.bracket(i, j).items()),
            Fraction(0),
        )
        rhs = sum(
            (c * kappa_entry(i, m) for m, c in a.bracket(j, k).items()),
            Fraction(0),
        )
        return lhs == rhs

    bad = first_fail(
        invariance, ((i, j, k) for i in rng for j in rng for k in rng)
    )
    out.append(CheckResult("invariance of kappa", bad is None, str(bad or "")))

    def inverse(i, k):
        total = sum(
            (
                kappa_entry(i, j) * a.b.get((j, k), Fraction(0))
                for j in rng
            ),
            Fraction(0),
        )
        return total == (1 if i == k else 0)

    bad = first_fail(inverse, ((i, k) for i in rng for k in rng))
    out.append(CheckResult("kappa b inverse", bad is None, str(bad or "")))

    if a.triangular is not None:
        out.extend(_validate_triangular(a))
    return out


def _validate_triangular(a: AlgebraSpec) -> list:
    out = []
    t = a.triangular
    ok = True
    detail = ""
    for r, root in enumerate(t.roots):
        # [x_a, y_a] = h_a
        got = {
            k: root.x_coeff * root.y_coeff * c
            for k, c in a.bracket(root.x_index, root.y_index).items()
        }
        want = {
            h: Fraction(c)
            for h, c in zip(t.cartan, root.h_coeffs)
            if Fraction(c)
        }
        if got != want:
            ok = False
            detail = "root %d: [x,y] = %s, expected %s" % (r, got, want)
            break
        # [h, x_a] proportional to x_a with ratio alpha(h)
        for h in t.cartan:
            br = a.bracket(h, root.x_index)
            if any(k != root.x_index for k in br):
                ok = False
                detail = "root %d: [h%d, x] leaves the root space" % (r, h)
                break
        if not ok:
            break
        # <x_a, y_a> = 1
        pairing = root.x_coeff * root.y_coeff * a.kappa.get(
            (root.x_index, root.y_index), Fraction(0)
        )
        if pairing != 1:
            ok = False
            detail = "root %d: <x,y> = %s" % (r, pairing)
            break
    out.append(CheckResult("triangular data", ok, detail))
    return out


def spec_is_valid(a: AlgebraSpec) -> bool:
    return all(check.ok for check in validate_spec(a))


def root_values(a: AlgebraSpec, root: Root) -> dict:
    """alpha(h) for each Cartan basis index h, read off from [h, x_a]."""
    out = {}
    for h in a.triangular.cartan:
        out[h] = a.bracket(h, root.x_index).get(root.x_index, Fraction(0))
    return out


def pairing_with_root(a: AlgebraSpec, root: Root, lam) -> "object":
    """<lam, alpha> = lam(h_alpha) for lam given in dual-basis coordinates."""
    total = None
    for lam_i, h_c in zip(lam, root.h_coeffs):
        piece = lam_i * Fraction(h_c)
        total = piece if total is None else total + piece
    return total


# ---------------------------------------------------------------------------
# built-in algebras


def _make_f(entries, parity):
    """entries: {(i, j): {k: coeff}} for i <= j; the (j, i) bracket follows."""
    f = {}
    for (i, j), comp in entries.items():
        comp = {k: Fraction(c) for k, c in comp.items() if Fraction(c)}
        if comp:
            f[(i, j)] = comp
        if i != j:
            sign = -1 if parity[i] and parity[j] else 1
            mirrored = {k: -sign * c for k, c in comp.items()}
            if mirrored:
                f[(j, i)] = mirrored
    return f


def _make_kappa(entries, parity):
    kappa = {}
    for (i, j), c in entries.items():
        c = Fraction(c)
        if not c:
            continue
        kappa[(i, j)] = c
        if i != j:
            sign = -1 if parity[i] and parity[j] else 1
            kappa[(j, i)] = sign * c
    return kappa


def invert_kappa(kappa, dim) -> dict:
    """Plain matrix inverse of the form (this is what the cup tensor must be
    for bent strands to cancel and for the enveloping image to be central)."""
    from .linalg import RowReducer

    reducer = RowReducer()
    for i in range(dim):
        row = {j: c for (a, j), c in kappa.items() if a == i}
        for k in range(dim):
            if i == k:
                row[dim + k] = Fraction(1)
        reducer.add(dict(row))
    if len(reducer.pivots) != dim or any(c >= dim for c in reducer.pivots):
        raise ValueError("kappa is degenerate")
    b = {}
    for i, row in sorted(reducer.pivots.items()):
        for j in range(dim):
            c = row.get(dim + j)
            if c:
                b[(i, j)] = c
    return b


@lru_cache(maxsize=None)
def sl2() -> AlgebraSpec:
    """sl(2): [H,X] = 2X, [H,Y] = -2Y, [X,Y] = H, with (1/2)<H,H> = <X,Y> = 1."""
    parity = (0, 0, 0)
    H, X, Y = 0, 1, 2
    f = _make_f(
        {(H, X): {X: 2}, (H, Y): {Y: -2}, (X, Y): {H: 1}},
        parity,
    )
    kappa = _make_kappa({(H, H): 2, (X, Y): 1}, parity)
    b = invert_kappa(kappa, 3)
    tri = TriangularData(
        cartan=(H,),
        roots=(Root(parity=0, x_index=X, y_index=Y, h_coeffs=(1,)),),
    )
    return AlgebraSpec(
        name="sl2", dim=3, parity=parity, basis_names=("H", "X", "Y"),
        f=f, kappa=kappa, b=b, triangular=tri,
    )


@lru_cache(maxsize=None)
def gl11() -> AlgebraSpec:
    """gl(1|1): even G, H; odd Q+, Q-; [G,Q+-] = +-Q+-, [Q+,Q-] = H;
    <H,G> = <G,G> = <Q+,Q-> = -1."""
    parity = (0, 0, 1, 1)
    G, H, QP, QM = 0, 1, 2, 3
    f = _make_f(
        {(G, QP): {QP: 1}, (G, QM): {QM: -1}, (QP, QM): {H: 1}},
        parity,
    )
    kappa = _make_kappa({(H, G): -1, (G, G): -1, (QP, QM): -1}, parity)
    b = invert_kappa(kappa, 4)
    return AlgebraSpec(
        name="gl11", dim=4, parity=parity,
        basis_names=("G", "H", "Q+", "Q-"),
        f=f, kappa=kappa, b=b, triangular=None,
    )


@lru_cache(maxsize=None)
def osp12() -> AlgebraSpec:
    """osp(1|2): even sl(2) body {H, E, F}, odd {e, f} with [e,f] = H,
    [e,e] = 2E, [f,f] = -2F; the form is normalized so <x_a, y_a> = 1 for
    both positive roots (the odd root a with x = e, and 2a with x = 2E)."""
    parity = (0, 0, 0, 1, 1)
    H, E, F, SE, SF = 0, 1, 2, 3, 4
    f = _make_f(
        {
            (H, E): {E: 2},
            (H, F): {F: -2},
            (E, F): {H: 1},
            (H, SE): {SE: 1},
            (H, SF): {SF: -1},
            (E, SF): {SE: -1},
            (F, SE): {SF: -1},
            (SE, SE): {E: 2},
            (SF, SF): {F: -2},
            (SE, SF): {H: 1},
        },
        parity,
    )
    kappa = _make_kappa(
        {(H, H): 1, (E, F): Fraction(1, 2), (SE, SF): 1}, parity
    )
    b = invert_kappa(kappa, 5)
    tri = TriangularData(
        cartan=(H,),
        roots=(
            Root(parity=1, x_index=SE, y_index=SF, h_coeffs=(1,)),
            Root(parity=0, x_index=E, y_index=F, h_coeffs=(2,),
                 x_coeff=Fraction(2), y_coeff=Fraction(1)),
        ),
    )
    return AlgebraSpec(
        name="osp12", dim=5, parity=parity,
        basis_names=("H", "E", "F", "e", "f"),
        f=f, kappa=kappa, b=b, triangular=tri,
    )


BUILTINS = {"sl2": sl2, "gl11": gl11, "osp12": osp12}


def builtin(name: str) -> AlgebraSpec:
    if name not in BUILTINS:
        raise ValueError(
            "unknown builtin algebra %r (have: %s)"
            % (name, ", ".join(sorted(BUILTINS)))
        )
    return BUILTINS[name]()


# ---------------------------------------------------------------------------
# algebra spec text format


def parse_algebra(text: str) -> AlgebraSpec:
    """Parse the sparse text format (see the package README for the grammar)."""
    name = "algebra"
    dim = None
    parity = None
    f_entries = {}
    kappa = {}
    b = {}
    cartan = None
    roots = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        word = parts[0].lower()
        try:
            if word == "algebra":
                name = parts[1]
            elif word == "dim":
                dim = int(parts[1])
            elif word == "parity":
                parity = tuple(int(x) for x in parts[1:])
            elif word == "f":
                i, j, k = (int(x) for x in parts[1:4])
                f_entries.setdefault((i, j), {})[k] = Fraction(parts[4])
            elif word == "kappa":
                i, j = int(parts[1]), int(parts[2])
                kappa[(i, j)] = Fraction(parts[3])
            elif word == "b":
                i, j = int(parts[1]), int(parts[2])
                b[(i, j)] = Fraction(parts[3])
            elif word == "cartan":
                cartan = tuple(int(x) for x in parts[1:])
            elif word == "root":
                # root <parity> <x-index> <y-index> <x-coeff> <y-coeff> <h-coeffs...>
                roots.append(parts[1:])
            else:
                raise ValueError("unknown statement %r" % word)
        except (IndexError, ValueError) as exc:
            raise ValueError("algebra file line %d: %s" % (lineno, exc)) from exc
    if dim is None or parity is None:
        raise ValueError("algebra file must declare dim and parity")
    if len(parity) != dim:
        raise ValueError("parity length does not match dim")
    tri = None
    if cartan is not None:
        parsed = []
        for spec in roots:
            parsed.append(
                Root(
                    parity=int(spec[0]),
                    x_index=int(spec[1]),
                    y_index=int(spec[2]),
                    x_coeff=Fraction(spec[3]),
                    y_coeff=Fraction(spec[4]),
                    h_coeffs=tuple(Fraction(x) for x in spec[5:]),
                )
            )
        tri = TriangularData(cartan=cartan, roots=tuple(parsed))
    if not b and kappa:
        b = invert_kappa(kappa, dim)
    names = tuple("v%d" % i for i in range(dim))
    return AlgebraSpec(
        name=name, dim=dim, parity=parity, basis_names=names,
        f=f_entries, kappa=kappa, b=b, triangular=tri,
    )


def algebra_text(a: AlgebraSpec) -> str:
    lines = ["algebra %s" % a.name, "dim %d" % a.dim,
             "parity " + " ".join(str(p) for p in a.parity)]
    for (i, j), comp in sorted(a.f.items()):
        for k, c in sorted(comp.items()):
            lines.append("f %d %d %d %s" % (i, j, k, c))
    for (i, j), c in sorted(a.kappa.items()):
        lines.append("kappa %d %d %s" % (i, j, c))
    for (i, j), c in sorted(a.b.items()):
        lines.append("b %d %d %s" % (i, j, c))
    if a.triangular is not None:
        lines.append("cartan " + " ".join(str(h) for h in a.triangular.cartan))
        for r in a.triangular.roots:
            lines.append(
                "root %d %d %d %s %s %s"
                % (r.parity, r.x_index, r.y_index, r.x_coeff, r.y_coeff,
                   " ".join(str(c) for c in r.h_coeffs))
            )
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# normal ordering in the enveloping algebra


class PBWElement:
    """Element of the enveloping algebra in normal-ordered form.

    Keys are index words sorted against the spec's basis order, with odd
    indices appearing at most once; values live in Fraction or Poly.
    """

    __slots__ = ("spec", "terms")

    def __init__(self, spec: AlgebraSpec, terms=()):
        self.spec = spec
        data = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for word, coeff in items:
            if not coeff:
                continue
            acc = data.get(word)
            acc = coeff if acc is None else acc + coeff
            if acc:
                data[word] = acc
            else:
                del data[word]
        self.terms = data

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, PBWElement)
            and self.spec is other.spec
            and self.terms == other.terms
        )

    def __add__(self, other):
        data = dict(self.terms)
        for w, c in other.terms.items():
            acc = data.get(w)
            acc = c if acc is None else acc + c
            if acc:
                data[w] = acc
            else:
                del data[w]
        return PBWElement(self.spec, data)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, factor) -> "PBWElement":
        if not factor:
            return PBWElement(self.spec)
        return PBWElement(
            self.spec, {w: c * factor for w, c in self.terms.items()}
        )

    def __mul__(self, other) -> "PBWElement":
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                for w3, c3 in normal_order(self.spec, w1 + w2).items():
                    coeff = c1 * c2 * c3
                    acc = out.get(w3)
                    acc = coeff if acc is None else acc + coeff
                    if acc:
                        out[w3] = acc
                    else:
                        del out[w3]
        return PBWElement(self.spec, out)

    def parity_of(self, word) -> int:
        return sum(self.spec.parity[i] for i in word) % 2

    def text(self) -> str:
        if not self.terms:
            return "0"
        names = self.spec.basis_names
        words = sorted(
            self.terms, key=lambda w: (-len(w), w)
        )
        pieces = []
        for word in words:
            coeff = self.terms[word]
            body_vars = []
            i = 0
            while i < len(word):
                j = i
                while j < len(word) and word[j] == word[i]:
                    j += 1
                if j - i == 1:
                    body_vars.append(names[word[i]])
                else:
                    body_vars.append("%s^%d" % (names[word[i]], j - i))
                i = j
            vars_txt = "*".join(body_vars)
            try:
                neg = coeff < 0
            except TypeError:
                neg = False
            mag = -coeff if neg else coeff
            if not vars_txt:
                body = str(mag)
            elif mag == 1:
                body = vars_txt
            else:
                body = "%s*%s" % (mag, vars_txt)
            pieces.append(("-" if neg else "+", body))
        sign, body = pieces[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            text += " %s %s" % (sign, body)
        return text

    def __repr__(self):
        return "PBW(%s)" % self.text()


@lru_cache(maxsize=None)
def _normal_order_cached(spec: AlgebraSpec, word: tuple) -> tuple:
    par = spec.parity
    for i in range(len(word) - 1):
        a, b = word[i], word[i + 1]
        if a < b or (a == b and not par[a]):
            continue
        out = {}
        if a == b:  # odd square: x x = (1/2)[x, x]
            for k, c in spec.bracket(a, a).items():
                sub = word[:i] + (k,) + word[i + 2:]
                for w2, c2 in _normal_order_cached(spec, sub):
                    out[w2] = out.get(w2, 0) + Fraction(1, 2) * c * c2
        else:
            sign = -1 if par[a] and par[b] else 1
            swapped = word[:i] + (b, a) + word[i + 2:]
            for w2, c2 in _normal_order_cached(spec, swapped):
                out[w2] = out.get(w2, 0) + sign * c2
            for k, c in spec.bracket(a, b).items():
                sub = word[:i] + (k,) + word[i + 2:]
                for w2, c2 in _normal_order_cached(spec, sub):
                    out[w2] = out.get(w2, 0) + c * c2
        return tuple(sorted((w, c) for w, c in out.items() if c))
    return ((word, Fraction(1)),)


def normal_order(spec: AlgebraSpec, word) -> dict:
    """Rewrite a generator word into the PBW basis; returns word -> Fraction."""
    return dict(_normal_order_cached(spec, tuple(word)))


def pbw_from_word(spec: AlgebraSpec, word, coeff=Fraction(1)) -> PBWElement:
    return PBWElement(
        spec, {w: c * coeff for w, c in normal_order(spec, word).items()}
    )


def generator(spec: AlgebraSpec, index: int) -> PBWElement:
    return PBWElement(spec, {(index,): Fraction(1)})


def unit(spec: AlgebraSpec) -> PBWElement:
    return PBWElement(spec, {(): Fraction(1)})


def super_commutator(e: PBWElement, index: int) -> PBWElement:
    """[e, v_index] computed monomial by monomial with the Koszul sign."""
    spec = e.spec
    g_par = spec.parity[index]
    out = PBWElement(spec)
    for word, coeff in e.terms.items():
        w_par = sum(spec.parity[i] for i in word) % 2
        sign = -1 if (w_par and g_par) else 1
        left = pbw_from_word(spec, word + (index,), coeff)
        right = pbw_from_word(spec, (index,) + word, coeff * sign)
        out = out + left - right
    return out


def is_central(e: PBWElement) -> bool:
    return all(not super_commutator(e, i) for i in range(e.spec.dim))
