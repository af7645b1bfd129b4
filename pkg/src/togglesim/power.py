"""CMOS power models: switching (dynamic) power and leakage (static) power.

Dynamic power on a bus is tau * C_load * Vdd^n * f, with the activity
factor tau scaling the ideal every-cycle-switching dissipation. The voltage
exponent n defaults to 1; the conventional square-law form is available via
n = 2.

Static power is the subthreshold leakage current times the supply voltage,
leakage following the diode law i_s * (exp(qV / kT) - 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

ELEMENTARY_CHARGE = 1.602176634e-19  # C
BOLTZMANN = 1.380649e-23  # J/K

# exp() overflows doubles just above exp(709); reject clearly before that.
_MAX_EXPONENT = 700.0


@dataclass(frozen=True)
class DynamicPowerParams:
    tau: float
    load_capacitance: float  # F
    supply_voltage: float  # V
    frequency: float  # Hz
    voltage_exponent: int = 1

    def __post_init__(self) -> None:
        if not 0.0 <= self.tau <= 1.0:
            raise ValueError(f"tau must be in [0, 1], got {self.tau}")
        for name in ("load_capacitance", "supply_voltage", "frequency"):
            if not getattr(self, name) > 0.0:
                raise ValueError(f"{name} must be > 0, got {getattr(self, name)}")
        if self.voltage_exponent not in (1, 2):
            raise ValueError(
                f"voltage_exponent must be 1 or 2, got {self.voltage_exponent}"
            )


@dataclass(frozen=True)
class StaticPowerParams:
    saturation_current: float  # A
    diode_voltage: float  # V; may be zero or negative
    temperature: float  # K
    supply_voltage: float  # V

    def __post_init__(self) -> None:
        if not self.saturation_current > 0.0:
            raise ValueError(f"saturation_current must be > 0, got {self.saturation_current}")
        if not self.temperature > 0.0:
            raise ValueError(f"temperature must be > 0, got {self.temperature}")
        if not self.supply_voltage > 0.0:
            raise ValueError(f"supply_voltage must be > 0, got {self.supply_voltage}")


def dynamic_power(p: DynamicPowerParams) -> float:
    """Average switching power in watts: tau * C * V^n * f."""
    return p.tau * p.load_capacitance * p.supply_voltage**p.voltage_exponent * p.frequency


def leakage_current(saturation_current: float, voltage: float, temperature: float) -> float:
    """Subthreshold leakage in amperes: i_s * (exp(qV / kT) - 1)."""
    if not saturation_current > 0.0:
        raise ValueError(f"saturation_current must be > 0, got {saturation_current}")
    if not temperature > 0.0:
        raise ValueError(f"temperature must be > 0, got {temperature}")
    exponent = ELEMENTARY_CHARGE * voltage / (BOLTZMANN * temperature)
    if exponent > _MAX_EXPONENT:
        raise ValueError(
            f"qV/kT = {exponent:.1f} exceeds {_MAX_EXPONENT:.0f}; result would overflow"
        )
    return saturation_current * math.expm1(exponent)


def static_power(p: StaticPowerParams) -> float:
    """Leakage power in watts: leakage current times supply voltage.

    For a circuit of n devices, sum the per-device leakages first and scale
    a single call, or sum per-device static_power results.
    """
    return (
        leakage_current(p.saturation_current, p.diode_voltage, p.temperature)
        * p.supply_voltage
    )


def thermal_voltage(temperature: float) -> float:
    """kT/q in volts; handy for choosing diode voltages in tests and CLIs."""
    if not temperature > 0.0:
        raise ValueError(f"temperature must be > 0, got {temperature}")
    return BOLTZMANN * temperature / ELEMENTARY_CHARGE
