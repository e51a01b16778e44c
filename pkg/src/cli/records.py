import json
import math

from src.model.function.TestFunction import TestFunction
from src.model.profile.BandProfile import BandProfile
from src.model.VarianceBreakdown import VarianceBreakdown


def _plain(value):
    if isinstance(value, complex):
        return [value.real, value.imag]
    if hasattr(value, "item"):
        return _plain(value.item())
    return value


def format_record(kind: str, **fields) -> str:
    """
    One self-contained JSON line. Complex values are written as [re, im]; floats keep their
    shortest round-trip representation.
    """

    return json.dumps({"record": kind, **{key: _plain(value) for key, value in fields.items()}}, ensure_ascii=False)


def parse_record(line: str) -> dict:
    return json.loads(line)


def theory_record(
    phi: TestFunction,
    profile: BandProfile,
    kappa4: float,
    breakdown: VarianceBreakdown,
    kernel_radius: float = None,
) -> str:
    fields = {"kernel_truncation_radius": kernel_radius} if kernel_radius is not None else {}
    return format_record(
        "theory",
        phi=phi.to_dict(),
        profile=profile.to_dict(),
        kappa4=kappa4,
        **breakdown.to_dict(),
        **fields,
    )


def covariance_record(z1: complex, z2: complex, value: complex) -> str:
    return format_record("covariance", z1=complex(z1), z2=complex(z2), value=complex(value))


def finite_n_record(n: int, b: float, zeta: complex, lhs: complex, rhs: complex, limit: complex) -> str:
    gap = abs(lhs - rhs)
    return format_record(
        "finite_n",
        n=n,
        b=b,
        zeta=complex(zeta),
        lhs=complex(lhs),
        rhs=complex(rhs),
        limit=complex(limit),
        gap=gap if math.isfinite(gap) else None,
    )
