#!/usr/bin/env python3
"""Regenerate the bundled synthetic absorption spectra in data/synthetic/.

The curves are demonstration data only: smooth Lorentzian-style resonance
spikes for O2 (60 and 120 GHz) and H2O (180 GHz) on small broadband floors,
sampled at 273 K / 1 atm conditions on a 50-200 GHz grid. They are shaped so
that the bundled USA-model mixtures produce a medium coefficient of roughly
2.7e-2 Np/m at 60 GHz. Real database exports can be dropped in using the
same CSV schema (header `frequency_hz,k_per_m`).
"""

import os

GRID_START = 50e9
GRID_STOP = 200e9
GRID_STEP = 0.25e9

TEMPERATURE_K = 273.0
PRESSURE_ATM = 1.0


def lorentzian(f, f0, gamma):
    return gamma * gamma / ((f - f0) ** 2 + gamma * gamma)


def k_o2(f):
    return (
        2e-4 * (f / 1e11) ** 2
        + 0.1292 * lorentzian(f, 60e9, 2.5e9)
        + 0.0444 * lorentzian(f, 120e9, 3.0e9)
    )


def k_h2o(f):
    return 1e-3 * (f / 1e11) ** 2 + 0.5 * lorentzian(f, 180e9, 5.0e9)


def k_n2(_f):
    return 1e-7


def k_co2(f):
    return 1e-6 * (f / 1e11) ** 2


def k_trace(_f):
    return 1e-8


SPECIES = {
    "o2": ("O2", k_o2),
    "h2o": ("H2O", k_h2o),
    "n2": ("N2", k_n2),
    "co2": ("CO2", k_co2),
    "o3": ("O3", k_trace),
    "n2o": ("N2O", k_trace),
    "co": ("CO", k_trace),
    "ch4": ("CH4", k_trace),
}


def grid():
    n = int(round((GRID_STOP - GRID_START) / GRID_STEP)) + 1
    return [GRID_START + i * GRID_STEP for i in range(n)]


def main():
    out_dir = os.path.join(os.path.dirname(__file__), "..", "data", "synthetic")
    os.makedirs(out_dir, exist_ok=True)
    for stem, (name, fn) in SPECIES.items():
        path = os.path.join(out_dir, stem + ".csv")
        with open(path, "w", newline="\n") as out:
            out.write(f"# synthetic demonstration spectrum, species: {name}\n")
            out.write(f"# temperature_k: {TEMPERATURE_K}, pressure_atm: {PRESSURE_ATM}\n")
            out.write("# not measured data; see data/synthetic/README.md\n")
            out.write("frequency_hz,k_per_m\n")
            for f in grid():
                out.write(f"{f!r},{fn(f)!r}\n")
        print(f"wrote {path}")

    # all-zero spectrum used for vacuum baselines
    path = os.path.join(out_dir, "vacuum.csv")
    with open(path, "w", newline="\n") as out:
        out.write("# zero-absorption surrogate spectrum\n")
        out.write("frequency_hz,k_per_m\n")
        for f in (GRID_START, 100e9, 150e9, GRID_STOP):
            out.write(f"{f!r},0.0\n")
    print(f"wrote {path}")


if __name__ == "__main__":
    main()
