"""Tube towers and the certificates built on them."""
from dataclasses import dataclass, field as dc_field
from typing import List, Optional, Tuple

from models.representation import Morphism, Representation

BAND_MODE = 'band'
EXT_PUSHOUT_MODE = 'ext-pushout'
MODES = (BAND_MODE, EXT_PUSHOUT_MODE)


@dataclass(frozen=True, eq=False)
class TowerLevel:
    """V[ℓ] with 0 -> V[ℓ-1] -incl-> V[ℓ] -quotient-> V[1] -> 0 and proj: V[ℓ] -> V[ℓ-1]."""

    level: int
    module: Representation
    incl: Morphism
    proj: Morphism
    quotient: Morphism

    def to_dict(self) -> dict:
        return {
            'level': self.level,
            'module': self.module.to_dict(),
            'incl': self.incl.to_dict(),
            'proj': self.proj.to_dict(),
            'quotient': self.quotient.to_dict(),
        }


@dataclass(frozen=True, eq=False)
class TubeTower:
    base: Representation
    levels: Tuple[TowerLevel, ...]
    mode: str

    def module(self, level: int) -> Representation:
        return self.base if level == 1 else self.levels[level - 2].module

    def level(self, level: int) -> TowerLevel:
        return self.levels[level - 2]

    @property
    def top(self) -> int:
        return len(self.levels) + 1

    def to_dict(self) -> dict:
        return {'mode': self.mode, 'levels': [lv.to_dict() for lv in self.levels]}


@dataclass(frozen=True, eq=False)
class LiftCertificate:
    """Freeness of V[ℓ] over k[t]/(t^ℓ) with t acting as N = incl ∘ proj."""

    level: int
    nilpotent: Morphism
    rank_profile: List[int]
    expected_profile: List[int]
    quotient_witness: Morphism
    checks: dict

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict:
        return {
            'level': self.level,
            'rank_profile': list(self.rank_profile),
            'expected_profile': list(self.expected_profile),
            'checks': dict(self.checks),
            'nilpotent': self.nilpotent.to_dict(),
            'quotient_witness': self.quotient_witness.to_dict(),
        }


@dataclass(frozen=True, eq=False)
class DeformationCertificate:
    module: Representation
    levels: int
    seed: int
    hypotheses: dict
    tangent: dict
    status: str
    conclusion: str
    failures: List[str] = dc_field(default_factory=list)
    tower: Optional[TubeTower] = None
    lifts: List[LiftCertificate] = dc_field(default_factory=list)

    @property
    def certified(self) -> bool:
        return self.status == 'certified'

    @property
    def certified_to_level(self) -> int:
        return self.levels if self.certified else 0

    def to_dict(self, provenance: dict = None) -> dict:
        doc = {
            'algebra': self.module.algebra.to_dict(),
            'module': self.module.to_dict(),
            'hypotheses': self.hypotheses,
            'tangent': self.tangent,
            'tower': self.tower.to_dict() if self.tower is not None else None,
            'lifts': [lift.to_dict() for lift in self.lifts],
            'verdict': {
                'status': self.status,
                'certified_to_level': self.certified_to_level,
                'failures': list(self.failures),
                'text': self.conclusion,
            },
        }
        if provenance is not None:
            doc['provenance'] = provenance
        return doc
