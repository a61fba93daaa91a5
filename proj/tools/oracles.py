"""Reference values for the unit tests, computed with mpmath at 40 digits.

Run from the repository root:

    python3 tools/oracles.py > tests/oracles/frozen.json

Everything here is computed independently of the C++ code: numerical
quadrature and numerical differentiation where the library uses series
and closed forms.
"""

import json

import mpmath as mp

mp.mp.dps = 40


def fl(x):
    return float(x)


def default_epsilon(n, r2):
    return (mp.mpf(1) / (n + 1) - r2 / 2) / n


def params():
    out = []
    for n, r in [(2, "0.8"), (2, "0.81"), (3, "0.70"), (4, "0.60")]:
        r = mp.mpf(r)
        eps = default_epsilon(n, r * r)
        out.append({"n": n, "r": fl(r), "c": fl(mp.mpf(1) / (n + 1)),
                    "epsilon": fl(eps),
                    "identity": fl(n * mp.mpf(1) / (n + 1) + r * r / 2 + n * eps)})
    return out


def near_bound():
    out = []
    for n in (2, 3):
        r2 = mp.mpf(2) / (n + 1) - mp.mpf("1e-9")
        out.append({"n": n, "r": fl(mp.sqrt(r2)), "epsilon": fl(default_epsilon(n, r2))})
    return out


def quarter_area(m):
    # Area of the unit superellipse in one quadrant, by quadrature.
    return mp.quad(lambda x: (1 - x**m) ** (1 / m), [0, mp.mpf(1) / 2, 1])


def fill_factors():
    out = []
    for m in ["2", "3", "7.5", "40", "200"]:
        m = mp.mpf(m)
        out.append({"m": fl(m), "fill": fl(quarter_area(m)),
                    "gamma_form": fl(mp.gamma(1 + 1 / m) ** 2 / mp.gamma(1 + 2 / m))})
    return out


def psi(eta, m):
    return mp.quad(lambda t: (1 - t**m) ** (1 / m), [0, eta])


def arc_integrals():
    out = []
    for m in ["2", "3.5", "12", "38.9", "150"]:
        m = mp.mpf(m)
        top = mp.mpf("0.5") ** (1 / m)
        for frac in ["0.3", "0.9", "1"]:
            eta = top * mp.mpf(frac)
            out.append({
                "eta": fl(eta), "m": fl(m),
                "value": fl(psi(eta, m)),
                "d_m": fl(mp.diff(lambda mm: psi(eta, mm), m)),
                "d_mm": fl(mp.diff(lambda mm: psi(eta, mm), m, 2)),
            })
    return out


def ball_moments():
    # E|x|^2 for x uniform in B^{2n}(r), from the radial density.
    out = []
    for n, r in [(2, "0.8"), (3, "0.70")]:
        r = mp.mpf(r)
        d = 2 * n
        num = mp.quad(lambda s: s ** (d + 1), [0, r])
        den = mp.quad(lambda s: s ** (d - 1), [0, r])
        second = mp.quad(lambda s: s ** (d + 3), [0, r]) / den
        mean = num / den
        out.append({"n": n, "r": fl(r), "mean_u": fl(mean),
                    "var_u": fl(second - mean**2)})
    return out


def chart_examples():
    pi = mp.pi
    x = [pi / 2, mp.mpf(1) / 4, pi / 4, mp.mpf(1) / 4]
    z = [mp.sqrt(x[2 * k + 1]) * mp.expj(2 * x[2 * k]) for k in range(2)]
    return [{"x": [fl(v) for v in x],
             "z": [[fl(w.real), fl(w.imag)] for w in z]}]


def superellipse_areas():
    out = []
    for a, h, m in [("1.3", "0.2", "17"), ("0.4", "0.35", "2.5")]:
        a, h, m = mp.mpf(a), mp.mpf(h), mp.mpf(m)
        area = 4 * a * h * quarter_area(m)
        out.append({"a": fl(a), "h": fl(h), "m": fl(m), "area": fl(area)})
    return out


def main():
    frozen = {
        "params": params(),
        "near_bound": near_bound(),
        "fill_factors": fill_factors(),
        "arc_integrals": arc_integrals(),
        "ball_moments": ball_moments(),
        "chart_examples": chart_examples(),
        "superellipse_areas": superellipse_areas(),
    }
    print(json.dumps(frozen, indent=1))


if __name__ == "__main__":
    main()
