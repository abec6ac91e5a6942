"""Goeritz matrix of the admissible checkerboard surface and its eigenspace split."""

from __future__ import annotations

from dataclasses import dataclass, field

from .diagram import SymmetricDiagram
from .errors import ValidationError
from .faces import FaceComplex, RegionInvolution, Shading, corner_side
from .linalg import congruent


@dataclass(frozen=True)
class GoeritzData:
    basis: tuple[int, ...]
    matrix: tuple[tuple[int, ...], ...]
    r_infinity: int
    # row/column of r_infinity before it was dropped
    dropped_row: tuple[int, ...] = ()
    dropped_diag: int = 0

    def full_matrix(self) -> list[list[int]]:
        """Matrix with the r_infinity row and column restored (last index)."""
        size = len(self.basis)
        out = [list(r) + [self.dropped_row[i]] for i, r in enumerate(self.matrix)]
        out.append(list(self.dropped_row) + [self.dropped_diag])
        assert len(out) == size + 1
        return out


@dataclass(frozen=True)
class EigenSplit:
    plus_basis: tuple[tuple[int, ...], ...]
    minus_basis: tuple[tuple[int, ...], ...]
    pairs: tuple[tuple[int, int], ...]
    invariant: tuple[int, ...] = field(default=())

    def labels(self) -> tuple[list[str], list[str]]:
        plus = [f"x{r}-x{s}" for r, s in self.pairs]
        minus = [f"x{r}+x{s}" for r, s in self.pairs] + [f"x{r}" for r in self.invariant]
        return plus, minus


def unshaded_corners(c, fc: FaceComplex, shading: Shading) -> tuple[int, int]:
    faces = [fc.face_of(*corner_side(c, k)) for k in range(4)]
    if shading.is_shaded(faces[0]):
        faces = faces[1:] + faces[:1]
    if any(shading.is_shaded(f) for f in faces[0::2]) or not all(
            shading.is_shaded(f) for f in faces[1::2]):
        raise ValidationError("crossing corners are not checkerboard coloured",
                              where=f"crossing {c.id}")
    return faces[0], faces[2]


def goeritz_eta(d: SymmetricDiagram, fc: FaceComplex, shading: Shading, cid: int) -> int:
    """Goeritz type sign of a crossing relative to the shaded surface.

    +1 when turning the over-strand counterclockwise sweeps the shaded
    corners, i.e. when the corner between slots 2 and 3 (pd indices 1, 2)
    is shaded.  With this choice eta equals the ab-sign on the axis.
    """
    c = d.crossing(cid)
    return 1 if shading.is_shaded(fc.face_of(*corner_side(c, 1))) else -1


def region_order_key(fc: FaceComplex, face: int):
    return min(fc.faces[face])


def goeritz_matrix(d: SymmetricDiagram, fc: FaceComplex, shading: Shading,
                   rho: RegionInvolution | None = None) -> GoeritzData:
    """Goeritz matrix on the unshaded regions, r_infinity dropped.

    Off-diagonal entries are minus the summed eta of the crossings joining
    two regions; diagonal entries make every full row sum to zero.  With
    ``rho`` given, paired regions come first, then invariant ones.
    """
    regions = sorted(shading.unshaded, key=lambda f: region_order_key(fc, f))
    if rho is not None:
        paired = [f for f in regions if rho(f) != f]
        fixed = [f for f in regions if rho(f) == f]
        regions = paired + fixed
    index = {f: i for i, f in enumerate(regions)}
    size = len(regions)
    full = [[0] * size for _ in range(size)]
    for c in d.crossings:
        x, y = unshaded_corners(c, fc, shading)
        if x == y:
            continue
        eta = goeritz_eta(d, fc, shading, c.id)
        full[index[x]][index[y]] -= eta
        full[index[y]][index[x]] -= eta
    for i in range(size):
        full[i][i] = -sum(full[i][j] for j in range(size) if j != i)

    drop = index[shading.r_infinity]
    keep = [i for i in range(size) if i != drop]
    return GoeritzData(
        basis=tuple(regions[i] for i in keep),
        matrix=tuple(tuple(full[i][j] for j in keep) for i in keep),
        r_infinity=shading.r_infinity,
        dropped_row=tuple(full[drop][j] for j in keep),
        dropped_diag=full[drop][drop],
    )


def eigen_split(g: GoeritzData, rho: RegionInvolution) -> EigenSplit:
    """Integer bases of the +1 and -1 eigenspaces.

    Loops around regions satisfy rho_*(x_r) = -x_{rho(r)}, so x_r - x_{rho(r)}
    spans E+ and x_r + x_{rho(r)} spans E-; an invariant region gives a -1
    eigenvector on its own.
    """
    pos = {f: i for i, f in enumerate(g.basis)}
    pairs, fixed = [], []
    for f in sorted(g.basis):
        img = rho(f)
        if img not in pos:
            raise ValidationError(
                f"region involution sends basis region {f} to {img}, outside the basis",
                where=f"face {f}")
        if img == f:
            fixed.append(f)
        elif f < img:
            pairs.append((f, img))
    # keep basis order for determinism
    pairs.sort(key=lambda p: pos[p[0]])
    fixed.sort(key=lambda f: pos[f])

    def vec(terms):
        v = [0] * len(g.basis)
        for f, coeff in terms:
            v[pos[f]] += coeff
        return tuple(v)

    plus = tuple(vec([(r, 1), (s, -1)]) for r, s in pairs)
    minus = tuple(vec([(r, 1), (s, 1)]) for r, s in pairs) + tuple(vec([(r, 1)]) for r in fixed)
    return EigenSplit(plus, minus, tuple(pairs), tuple(fixed))


def restricted_forms(g: GoeritzData, split: EigenSplit):
    """Gram matrices of the Goeritz form on the two eigenspace bases."""
    def gram(vectors):
        if not vectors:
            return []
        cols = [list(col) for col in zip(*vectors)]
        return congruent([list(r) for r in g.matrix], cols)
    return gram(split.plus_basis), gram(split.minus_basis)


def is_equivariant(g: GoeritzData, rho: RegionInvolution) -> bool:
    pos = {f: i for i, f in enumerate(g.basis)}
    for i, f in enumerate(g.basis):
        for j, h in enumerate(g.basis):
            if g.matrix[i][j] != g.matrix[pos[rho(f)]][pos[rho(h)]]:
                return False
    return True
