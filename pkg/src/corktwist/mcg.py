"""Homological Dehn-twist calculus on a genus-g surface.

Simple closed curves are tracked through their first-homology classes in
the standard symplectic basis (a1, b1, ..., ag, bg), and a right-handed
twist about c acts by x -> x + <x, c> c.  Identities produced here
(chain relation, positive inversions, monodromy trivialisations) are
certified at this homological level only; that shadow is exactly what
the filling planner consumes.

Composition convention: the leftmost letter of a word acts first, so as
matrices on column vectors  action(u v) = action(v) * action(u).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import intmat
from .intmat import Matrix, Vector


@dataclass(frozen=True)
class Surface:
    """Orientable surface with genus and boundary-component count."""

    genus: int
    boundary: int = 1

    def __post_init__(self) -> None:
        if self.genus < 0 or self.boundary < 0:
            raise ValueError(f"bad surface ({self.genus}, {self.boundary})")


@dataclass(frozen=True)
class Curve:
    """A simple closed curve known only through its homology class."""

    name: str
    h1_class: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.h1_class) == 0 or len(self.h1_class) % 2 != 0:
            raise ValueError(f"h1 class of {self.name!r} must have even positive length")
        if not intmat.is_primitive(list(self.h1_class)):
            raise ValueError(
                f"curve {self.name!r} has imprimitive class {self.h1_class}; "
                "simple closed curves are primitive or zero, and zero classes "
                "(separating curves) are not twistable here"
            )

    @property
    def genus(self) -> int:
        return len(self.h1_class) // 2


@dataclass(frozen=True)
class TwistWord:
    """Word in Dehn twists: letters are (curve, exponent) with exponent +-1."""

    letters: tuple[tuple[Curve, int], ...]

    def __post_init__(self) -> None:
        for curve, exp in self.letters:
            if exp not in (1, -1):
                raise ValueError(f"letter exponent must be +-1, got {exp}")
        genera = {curve.genus for curve, _ in self.letters}
        if len(genera) > 1:
            raise ValueError(f"letters live on different surfaces: genera {sorted(genera)}")

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def is_positive(self) -> bool:
        return all(exp == 1 for _, exp in self.letters)

    def genus(self) -> int | None:
        return self.letters[0][0].genus if self.letters else None

    def concat(self, other: "TwistWord") -> "TwistWord":
        return TwistWord(self.letters + other.letters)

    def __str__(self) -> str:
        parts = []
        for curve, exp in self.letters:
            parts.append(f"T({curve.name})" if exp == 1 else f"T'({curve.name})")
        return " ".join(parts)


def j_matrix(g: int) -> Matrix:
    """Matrix of the intersection form in the (a1, b1, ..., ag, bg) basis."""
    j = intmat.zeros(2 * g, 2 * g)
    for i in range(g):
        j[2 * i][2 * i + 1] = 1
        j[2 * i + 1][2 * i] = -1
    return j


def pairing(u: tuple[int, ...] | Vector, v: tuple[int, ...] | Vector) -> int:
    """Algebraic intersection number <u, v>; <a_i, b_i> = +1."""
    if len(u) != len(v) or len(u) % 2 != 0:
        raise ValueError("classes must share an even length")
    total = 0
    for i in range(0, len(u), 2):
        total += u[i] * v[i + 1] - u[i + 1] * v[i]
    return total


def transvection(c: Curve) -> Matrix:
    """Homological action of the right-handed twist about c."""
    n = 2 * c.genus
    jc = intmat.mat_vec(j_matrix(c.genus), list(c.h1_class))
    m = intmat.identity(n)
    for i in range(n):
        for j in range(n):
            m[i][j] += c.h1_class[i] * jc[j]
    return m


def _transvection_inverse(c: Curve) -> Matrix:
    n = 2 * c.genus
    jc = intmat.mat_vec(j_matrix(c.genus), list(c.h1_class))
    m = intmat.identity(n)
    for i in range(n):
        for j in range(n):
            m[i][j] -= c.h1_class[i] * jc[j]
    return m


def h1_action(word: TwistWord) -> Matrix:
    """Matrix of the word on H_1, leftmost letter applied first."""
    if not word.letters:
        raise ValueError("empty word has no well-defined surface; pass at least one letter")
    g = word.genus()
    assert g is not None
    result = intmat.identity(2 * g)
    for curve, exp in word.letters:
        m = transvection(curve) if exp == 1 else _transvection_inverse(curve)
        result = intmat.mat_mul(m, result)
    return result


def is_symplectic(m: Matrix, g: int) -> bool:
    j = j_matrix(g)
    return intmat.mat_eq(intmat.mat_mul(intmat.transpose(m), intmat.mat_mul(j, m)), j)


# -- chain curves and the chain relation --------------------------------------

def chain_curves(g: int) -> list[Curve]:
    """2g twistable classes realizing the chain pattern.

    Consecutive classes pair to +-1, all other pairs to 0, mirroring a
    chain of curves c1, ..., c2g where only neighbours meet once.
    Concretely: c1 = a1, c_{2i} = b_i, c_{2i+1} = a_i + a_{i+1}.
    """
    if g < 1:
        raise ValueError("chain needs genus >= 1")
    n = 2 * g

    def basis(i: int) -> list[int]:
        v = [0] * n
        v[i] = 1
        return v

    curves: list[Curve] = []
    for k in range(1, n + 1):
        if k == 1:
            vec = basis(0)  # a1
        elif k % 2 == 0:
            vec = basis(k - 1)  # b_{k/2}
        else:
            i = k // 2  # c_{2i+1} = a_i + a_{i+1}
            vec = basis(2 * (i - 1))
            vec[2 * i] += 1
        curves.append(Curve(f"c{k}", tuple(vec)))
    return curves


def chain_word(g: int) -> TwistWord:
    """One block t_{c1} ... t_{c2g} of the chain relation."""
    return TwistWord(tuple((c, 1) for c in chain_curves(g)))


def verify_chain_relation(g: int) -> bool:
    """True iff (t_{c1} ... t_{c2g})^(4g+2) acts as the identity on H_1."""
    block = h1_action(chain_word(g))
    return intmat.is_identity(intmat.mat_pow(block, 4 * g + 2))


# -- positive inversion -------------------------------------------------------

def symplectic_frame(c: Curve) -> Matrix:
    """A symplectic matrix whose first column is the class of c.

    This is the change of basis identifying c with the first chain curve:
    S e_1 = [c] and S^T J S = J.  The extension is canonical and
    deterministic (extended-gcd dual vector, then recursion on the
    saturated symplectic complement); for c = first chain curve it is the
    identity.
    """
    g = c.genus
    e1 = [0] * (2 * g)
    e1[0] = 1
    if list(c.h1_class) == e1:
        return intmat.identity(2 * g)
    cols = _complete_basis(list(c.h1_class), j_matrix(g))
    s = [[cols[j][i] for j in range(2 * g)] for i in range(2 * g)]
    assert is_symplectic(s, g), "extension lost the symplectic form"
    return s


def _complete_basis(first: Vector, form: Matrix) -> list[Vector]:
    """Complete `first` to a basis of Z^d in which `form` is standard.

    `form` is any unimodular antisymmetric matrix; the returned columns
    p satisfy p_i^T form p_j = J_std[i][j].  Recursion: find a dual
    vector by extended gcd, then restrict the form to the saturated
    kernel of the first pair.
    """
    d = len(first)
    if d == 0:
        return []
    row = intmat.mat_vec(intmat.transpose(form), first)  # <first, x> = row . x
    dual = intmat.solve_gcd_one(row)
    if dual is None:
        raise ValueError(f"class {first} is not primitive for the form")
    pair_rows = [row, intmat.mat_vec(intmat.transpose(form), dual)]
    kernel = intmat.kernel_basis(pair_rows)
    if not kernel:
        return [first, dual]
    b = [[vec[i] for vec in kernel] for i in range(d)]  # d x (d-2), columns = kernel
    bt = intmat.transpose(b)
    restricted = intmat.mat_mul(bt, intmat.mat_mul(form, b))
    inner = _complete_basis([1] + [0] * (len(kernel) - 1), restricted)
    out = [first, dual]
    for w in inner:
        out.append(intmat.mat_vec(b, w))
    return out


def positive_inverse(c: Curve) -> TwistWord:
    """A positive word w with t_c . w acting as the identity on H_1.

    Reading the complement of the first letter in the chain relator and
    conjugating the chain into position gives exactly
    2g(4g+2) - 1 positive letters.
    """
    g = c.genus
    s = symplectic_frame(c)
    chain = chain_curves(g)
    conj: list[Curve] = []
    for k, base in enumerate(chain):
        vec = intmat.mat_vec(s, list(base.h1_class))
        conj.append(Curve(f"{c.name}~c{k + 1}", tuple(vec)))
    letters: list[tuple[Curve, int]] = [(cv, 1) for cv in conj[1:]]
    for _ in range(4 * g + 1):
        letters.extend((cv, 1) for cv in conj)
    word = TwistWord(tuple(letters))
    assert len(word) == 2 * g * (4 * g + 2) - 1
    return word


def trivialize(word: TwistWord) -> TwistWord:
    """A positive word w' with word . w' acting as the identity on H_1.

    Appends the positive inverse of each letter in reverse order, so
    |w'| = |word| * (2g(4g+2) - 1).
    """
    if not word.is_positive:
        raise ValueError("only positive monodromy words are trivialized")
    letters: list[tuple[Curve, int]] = []
    for curve, _ in reversed(word.letters):
        letters.extend(positive_inverse(curve).letters)
    return TwistWord(tuple(letters))
