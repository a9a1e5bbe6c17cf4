"""Recover a groupoid isomorphism G -> H from an isomorphism Sd G -> Sd H.

Psi sends 0-simplices to 0-simplices and 1-simplices to 1-simplices, which
gives a bijection psi on objects and arrows that keeps unordered endpoint
sets.  On each connected component psi is either a functor or reverses
every arrow; in the second case psi'(f) = psi(f^-1) is a functor.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import probe
from .errors import BourbakiViolated, NotAnIsomorphism, ReconstructionFailed, VarianceInconsistent
from .fincat import FinGroupoid, Functor, as_groupoid, connected_components, is_isomorphism
from .subdivision import SdCategory, build_sd, sd_of_functor

COVARIANT = "covariant"
CONTRAVARIANT = "contravariant"


@dataclass(frozen=True)
class GraphMap:
    """Object and arrow bijection that need not respect direction or composition."""
    source: FinGroupoid
    target: FinGroupoid
    obj_map: tuple[int, ...]
    mor_map: tuple[int, ...]

    def as_functor(self) -> Functor:
        return Functor(self.source, self.target, self.obj_map, self.mor_map)


@dataclass
class Reconstruction:
    functor: Functor
    psi: GraphMap
    variance: dict[int, str]          # least object of each component -> variance
    target_component: dict[int, int]  # least object of each component -> least object of its image


def extract_psi(Psi: Functor, sdG: SdCategory, sdH: SdCategory) -> GraphMap:
    G, H = sdG.base, sdH.base
    if Psi.source is not sdG.category or Psi.target is not sdH.category:
        raise ValueError("Psi must run between the given subdivisions")
    obj_map = []
    for a in G.objects:
        s = sdH.simplices[Psi.obj_map[sdG.point(a)]]
        if s.dim != 0:
            raise NotAnIsomorphism(f"<{a}> is not sent to a 0-simplex")
        obj_map.append(s.base)
    mor_map = list(obj_map)  # identities first
    for f in range(G.n_objects, G.n_morphisms):
        s = sdH.simplices[Psi.obj_map[sdG.edge(f)]]
        if s.dim != 1:
            raise NotAnIsomorphism(f"<{G.name(f)}> is not sent to a 1-simplex")
        mor_map.append(s.chain[0])
    if len(set(obj_map)) != G.n_objects or len(set(mor_map)) != G.n_morphisms:
        raise NotAnIsomorphism("psi is not bijective")
    if G.n_objects != H.n_objects or G.n_morphisms != H.n_morphisms:
        raise NotAnIsomorphism("size mismatch")
    for f in G.morphisms:
        ends = {obj_map[G.dom[f]], obj_map[G.cod[f]]}
        if ends != {int(H.dom[mor_map[f]]), int(H.cod[mor_map[f]])}:
            raise NotAnIsomorphism(f"psi moves the endpoints of {G.name(f)}")
    return GraphMap(G, H, tuple(obj_map), tuple(mor_map))


def psi_prime(psi: GraphMap, G: FinGroupoid | None = None) -> GraphMap:
    G = G or psi.source
    mor = tuple(psi.mor_map[G.inverse(f)] for f in G.morphisms)
    return GraphMap(psi.source, psi.target, psi.obj_map, mor)


def _component_morphisms(G, objs) -> list[int]:
    objs = set(objs)
    return [f for f in G.morphisms if int(G.dom[f]) in objs]


def _respects(G, H, mor_map, fs, contra=False) -> bool:
    for g in fs:
        for f in fs:
            gf = G.comp[g, f]
            if gf < 0:
                continue
            a, b = mor_map[g], mor_map[f]
            want = H.comp[b, a] if contra else H.comp[a, b]
            if want != mor_map[gf]:
                return False
    return True


def group_case(psi: GraphMap, obj: int) -> tuple[dict[int, int], str]:
    """Single-object component: homomorphism keeps psi, anti-homomorphism switches to psi'."""
    G, H = psi.source, psi.target
    fs = _component_morphisms(G, [obj])
    if _respects(G, H, psi.mor_map, fs):
        return {f: psi.mor_map[f] for f in fs}, COVARIANT
    if _respects(G, H, psi.mor_map, fs, contra=True):
        flipped = psi_prime(psi)
        return {f: flipped.mor_map[f] for f in fs}, CONTRAVARIANT
    raise BourbakiViolated(f"psi is neither a homomorphism nor an anti-homomorphism at object {obj}")


def multiobject_case(psi: GraphMap, objs: Sequence[int]) -> tuple[dict[int, int], str]:
    """Connected component with several objects: read the variance off any non-endomorphism."""
    G, H = psi.source, psi.target
    fs = _component_morphisms(G, objs)
    non_endo = [f for f in fs if G.dom[f] != G.cod[f]]

    def covariant_at(f):
        return psi.obj_map[G.dom[f]] == H.dom[psi.mor_map[f]]

    variance = COVARIANT if covariant_at(non_endo[0]) else CONTRAVARIANT
    if any(covariant_at(f) != (variance == COVARIANT) for f in non_endo):
        raise VarianceInconsistent(f"mixed variance on component {list(objs)}")
    chosen = psi if variance == COVARIANT else psi_prime(psi)
    mapping = {f: chosen.mor_map[f] for f in fs}
    if not _respects(G, H, chosen.mor_map, fs):
        raise ReconstructionFailed(f"component {list(objs)} is not functorial after the variance fix")
    return mapping, variance


def reconstruct(Psi: Functor, sdG: SdCategory, sdH: SdCategory) -> Reconstruction:
    G, H = as_groupoid(sdG.base), as_groupoid(sdH.base)
    psi = extract_psi(Psi, sdG, sdH)
    psi = GraphMap(G, H, psi.obj_map, psi.mor_map)
    h_comp_of = {a: comp[0] for comp in connected_components(H) for a in comp}
    mor_map = [-1] * G.n_morphisms
    variance: dict[int, str] = {}
    matched: dict[int, int] = {}
    for comp in connected_components(G):
        lead = comp[0]
        image = sdH.simplices[Psi.obj_map[sdG.point(lead)]].base
        matched[lead] = h_comp_of[image]
        if len(comp) == 1 and len(_component_morphisms(G, comp)) == 1:
            mapping, var = {lead: psi.obj_map[lead]}, COVARIANT
        elif len(comp) == 1:
            mapping, var = group_case(psi, lead)
        else:
            mapping, var = multiobject_case(psi, comp)
        variance[lead] = var
        for f, v in mapping.items():
            mor_map[f] = v
    P = Functor(G, H, psi.obj_map, tuple(mor_map))
    if not is_isomorphism(P):
        raise ReconstructionFailed("assembled map is not an isomorphism")
    return Reconstruction(P, psi, variance, matched)


def assemble(Psi: Functor, sdG: SdCategory, sdH: SdCategory) -> Functor:
    return reconstruct(Psi, sdG, sdH).functor


def conservativity_check(F: Functor, k=2) -> bool:
    """assemble(Sd F) == F."""
    sdG, sdH = build_sd(F.source, k), build_sd(F.target, k)
    P = assemble(sd_of_functor(F, sdG, sdH), sdG, sdH)
    return P.same_maps(F)


# -- invariants checked against the abstract structure -------------------

def check_invariants(Psi: Functor, sdG: SdCategory, sdH: SdCategory, psi: GraphMap | None = None) -> list[str]:
    """Properties psi must have; returns the list of failures.

    Inversion is tested through the probe's inverse criterion on both sides,
    so it never reads simplex labels of the target.
    """
    psi = psi or extract_psi(Psi, sdG, sdH)
    G, H = as_groupoid(sdG.base), as_groupoid(sdH.base)
    PA, PB = probe.ProbedCategory(sdG.category), probe.ProbedCategory(sdH.category)
    fails = []
    for f in range(G.n_objects, G.n_morphisms):
        e = sdG.edge(f)
        inv_a = probe.inverse_of(PA, e)
        inv_b = probe.inverse_of(PB, Psi.obj_map[e])
        if inv_a is None or inv_b is None or Psi.obj_map[inv_a] != inv_b:
            fails.append(f"inversion not preserved at {G.name(f)}")
    if not probe.is_groupoid_shaped(PB):
        fails.append("target subdivision fails the inverse sweep")

    for comp in connected_components(G):
        fs = _component_morphisms(G, comp)
        if len(comp) == 1:
            for f in fs:
                pf = psi.mor_map[f]
                for k in (2, 3):
                    if psi.mor_map[G.power(f, k)] != H.power(pf, k):
                        fails.append(f"power {k} not preserved at {G.name(f)}")
        for f in fs:
            for g in fs:
                if G.comp[f, g] < 0 and G.comp[g, f] < 0:
                    continue
                left = {psi.mor_map[int(x)] for x in (G.comp[f, g], G.comp[g, f]) if x >= 0}
                a, b = psi.mor_map[f], psi.mor_map[g]
                right = {int(x) for x in (H.comp[a, b], H.comp[b, a]) if x >= 0}
                if left != right:
                    fails.append(f"composite set not preserved at ({G.name(f)}, {G.name(g)})")
    return fails


def object_bijection_is_component_matching(P: Functor) -> bool:
    """Each component of the source lands inside a single component of the target."""
    comps_h = {a: i for i, comp in enumerate(connected_components(P.target)) for a in comp}
    return all(len({comps_h[P.obj_map[a]] for a in comp}) == 1 for comp in connected_components(P.source))

