"""Intersection forms, Euler characteristics and adjunction on the four
model surfaces: P^2, P^1 x P^1, the Hirzebruch surfaces F_n, and the blow-up
of P^2 at a point."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, InternalConsistencyError


@dataclass(frozen=True)
class SurfaceModel:
    """A model surface: basis labels, Gram matrix of the intersection form,
    canonical class in that basis, and chi(O_X) = 1."""

    name: str
    basis: tuple
    gram: tuple            # rows of the symmetric integer Gram matrix
    canonical: tuple
    chi_structure_sheaf: int = 1

    def __post_init__(self):
        n = len(self.basis)
        if len(self.gram) != n or any(len(r) != n for r in self.gram):
            raise DomainError("Gram matrix size does not match basis")
        for i in range(n):
            for j in range(n):
                if self.gram[i][j] != self.gram[j][i]:
                    raise DomainError("Gram matrix must be symmetric")
        if len(self.canonical) != n:
            raise DomainError("canonical class size does not match basis")


def P2():
    """The projective plane: Pic = Z H, H^2 = 1, K = -3H."""
    return SurfaceModel("P2", ("H",), ((1,),), (-3,))


def P1xP1():
    """P^1 x P^1 with the two rulings F1, F2: F1.F2 = 1, Fi^2 = 0, K = -2F1-2F2."""
    return SurfaceModel("P1xP1", ("F1", "F2"), ((0, 1), (1, 0)), (-2, -2))


def Hirzebruch(n: int):
    """F_n in the basis (s, f): s^2 = -n, s.f = 1, f^2 = 0, K = -2s-(n+2)f."""
    if n < 0:
        raise DomainError("Hirzebruch index must be nonnegative")
    return SurfaceModel(f"F{n}", ("s", "f"), ((-n, 1), (1, 0)), (-2, -(n + 2)))


def BlowupP2():
    """P^2 blown up at a point, basis (H, E): H^2 = 1, E^2 = -1, H.E = 0,
    K = -3H + E."""
    return SurfaceModel("BlP2", ("H", "E"), ((1, 0), (0, -1)), (-3, 1))


MODELS = {"p2": P2, "p1xp1": P1xP1, "blowup": BlowupP2}


def surface_model(name: str) -> SurfaceModel:
    """Look up a model by name: p2, p1xp1, blowup, or fn:<n> / f<n>."""
    key = name.strip().lower()
    if key in MODELS:
        return MODELS[key]()
    if key.startswith("fn:"):
        return Hirzebruch(int(key[3:]))
    if key.startswith("f") and key[1:].isdigit():
        return Hirzebruch(int(key[1:]))
    raise DomainError(f"unknown surface model {name!r}")


def _check_vector(model: SurfaceModel, v):
    v = tuple(int(c) for c in v)
    if len(v) != len(model.basis):
        raise DomainError(
            f"class vector length {len(v)} does not match basis {model.basis}"
        )
    return v


def intersection_number(model: SurfaceModel, D, E) -> int:
    """D . E through the Gram matrix of the model."""
    D = _check_vector(model, D)
    E = _check_vector(model, E)
    return sum(
        D[i] * model.gram[i][j] * E[j]
        for i in range(len(D))
        for j in range(len(E))
    )


def surface_chi(model: SurfaceModel, D) -> int:
    """chi(O_X(D)) = chi(O_X) + (D.D - D.K)/2; the parity of the numerator
    is asserted even."""
    D = _check_vector(model, D)
    dd = intersection_number(model, D, D)
    dk = intersection_number(model, D, model.canonical)
    if (dd - dk) % 2 != 0:
        raise InternalConsistencyError("D.D - D.K must be even")
    return model.chi_structure_sheaf + (dd - dk) // 2


def adjunction_genus(model: SurfaceModel, C) -> int:
    """Genus of a smooth curve in class C: 2g - 2 = C.(C + K)."""
    C = _check_vector(model, C)
    val = intersection_number(model, C, C) + intersection_number(
        model, C, model.canonical
    )
    if val % 2 != 0 or val < -2:
        raise DomainError(f"C.(C+K) = {val} is not the adjunction value of a "
                          "smooth curve class")
    return 1 + val // 2


def canonical_class(model: SurfaceModel):
    return tuple(model.canonical)
